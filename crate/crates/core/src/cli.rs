//! Declarative instance files and the verification pipeline behind the
//! `xmodhopf` binary.
//!
//! An instance file is TOML:
//!
//! ```toml
//! field = "rational"            # or "fp:7"
//!
//! [groups.Z3]
//! cyclic = 3                    # or symmetric / dihedral / table / degree + generators / trivial
//!
//! [xmods.autz3]
//! kind = "aut"                  # or "module" / "explicit" (g, h, action, boundary)
//! h = "Z3"                      # or "normal" (g, elements)
//!
//! [limits.sign]
//! g = "S3"
//! h = "S3"
//! k = "Z2"
//! s = [0, 1, 1, 0, 0, 1]
//! t = [0, 1, 1, 0, 0, 1]
//!
//! [peter_weyl]
//! prime = 7
//! groups = ["S3"]
//!
//! [coend]
//! groups = ["S3"]
//!
//! [pipeline]
//! xmod = "autz3"
//! stages = ["validate", "build-2group", "trialgebra"]
//! skip = []
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cotrialg::{self, cotrialgebra_from_2group, duality_check, validate_cotrialgebra};
use crate::exactlin::Field;
use crate::fingrp::{FiniteGroup, GroupHom, DEFAULT_MAX_ORDER};
use crate::hopf::function_algebra;
use crate::hopflimits::verify_limit_preservation;
use crate::repcat::{check_splitting, coend_from_comodules, regular_comodule, rep_level_checks, semisimplicity_check};
use crate::report::{CheckRecord, Report};
use crate::trialg::{self, eckmann_hilton_check, interchange_check, trialgebra_from_2group, validate_trialgebra};
use crate::twogroup::{validate_2group, TwoGroup};
use crate::xmod::{validate_xmod, xmod_from_aut, xmod_from_module, xmod_from_normal, CrossedModule};

/// A problem with the instance file, with the key path or line where it occurred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for SpecError {}

fn spec_err(location: impl Into<String>, message: impl fmt::Display) -> SpecError {
    SpecError {
        location: location.into(),
        message: message.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Validate,
    Build2Group,
    Trialgebra,
    Cotrialgebra,
    LimitsCheck,
    PeterWeyl,
    CoendCheck,
}

impl Stage {
    pub const ALL: [Stage; 7] = [
        Stage::Validate,
        Stage::Build2Group,
        Stage::Trialgebra,
        Stage::Cotrialgebra,
        Stage::LimitsCheck,
        Stage::PeterWeyl,
        Stage::CoendCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Validate => "validate",
            Stage::Build2Group => "build-2group",
            Stage::Trialgebra => "trialgebra",
            Stage::Cotrialgebra => "cotrialgebra",
            Stage::LimitsCheck => "limits-check",
            Stage::PeterWeyl => "peter-weyl",
            Stage::CoendCheck => "coend-check",
        }
    }

    pub fn parse(s: &str) -> Option<Stage> {
        Stage::ALL.into_iter().find(|st| st.name() == s)
    }
}

/// `rational`, `Q` or `fp:<p>`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    match s.trim() {
        "rational" | "Q" => Ok(Field::Rational),
        other => {
            let p = other
                .strip_prefix("fp:")
                .ok_or_else(|| format!("unknown field '{other}', expected rational or fp:<p>"))?;
            let p: u64 = p.parse().map_err(|_| format!("'{p}' is not an integer"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    field: Option<String>,
    #[serde(default)]
    groups: BTreeMap<String, RawGroup>,
    #[serde(default)]
    xmods: BTreeMap<String, RawXMod>,
    #[serde(default)]
    limits: BTreeMap<String, RawLimit>,
    peter_weyl: Option<RawPeterWeyl>,
    coend: Option<RawCoend>,
    pipeline: Option<RawPipeline>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    table: Option<Vec<Vec<usize>>>,
    degree: Option<usize>,
    generators: Option<Vec<Vec<usize>>>,
    cyclic: Option<usize>,
    symmetric: Option<usize>,
    dihedral: Option<usize>,
    trivial: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawXMod {
    kind: String,
    g: Option<String>,
    h: Option<String>,
    elements: Option<Vec<usize>>,
    action: Option<Vec<Vec<usize>>>,
    boundary: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLimit {
    g: String,
    h: String,
    k: String,
    s: Vec<usize>,
    t: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPeterWeyl {
    prime: u64,
    groups: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoend {
    groups: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPipeline {
    xmod: Option<String>,
    stages: Option<Vec<String>>,
    #[serde(default)]
    skip: Vec<String>,
}

/// A resolved instance file.
#[derive(Clone, Debug)]
pub struct InstanceSpec {
    pub field: Field,
    pub max_order: usize,
    pub groups: BTreeMap<String, Arc<FiniteGroup>>,
    pub xmods: BTreeMap<String, Arc<CrossedModule>>,
    pub limits: BTreeMap<String, (GroupHom, GroupHom)>,
    pub peter_weyl: Option<(u64, Vec<String>)>,
    pub coend_groups: Vec<String>,
    /// Crossed modules the 2-group stages run on.
    pub targets: Vec<String>,
    pub stages: Vec<Stage>,
    /// Check-id prefixes dropped from the report.
    pub skip: Vec<String>,
}

impl InstanceSpec {
    pub fn with_field(mut self, field: Field) -> InstanceSpec {
        self.field = field;
        self
    }
}

fn build_group(name: &str, g: &RawGroup, max_order: usize) -> Result<FiniteGroup, SpecError> {
    let loc = format!("groups.{name}");
    let forms = [
        g.table.is_some(),
        g.generators.is_some() || g.degree.is_some(),
        g.cyclic.is_some(),
        g.symmetric.is_some(),
        g.dihedral.is_some(),
        g.trivial.is_some(),
    ];
    if forms.iter().filter(|&&b| b).count() != 1 {
        return Err(spec_err(
            loc,
            "give exactly one of table, degree + generators, cyclic, symmetric, dihedral, trivial",
        ));
    }
    let too_big = |n: usize| {
        (n > max_order).then(|| {
            spec_err(
                format!("groups.{name}"),
                format!("order {n} exceeds the cap {max_order}"),
            )
        })
    };
    if let Some(t) = &g.table {
        return FiniteGroup::from_table_capped(t.clone(), None, max_order)
            .map_err(|e| spec_err(format!("{loc}.table"), e));
    }
    if let Some(n) = g.cyclic {
        if n == 0 {
            return Err(spec_err(format!("{loc}.cyclic"), "order must be positive"));
        }
        if let Some(e) = too_big(n) {
            return Err(e);
        }
        return Ok(FiniteGroup::cyclic(n));
    }
    if let Some(n) = g.symmetric {
        if !(1..=5).contains(&n) {
            return Err(spec_err(format!("{loc}.symmetric"), "degree must be between 1 and 5"));
        }
        let order: usize = (1..=n).product();
        if let Some(e) = too_big(order) {
            return Err(e);
        }
        return Ok(FiniteGroup::symmetric(n));
    }
    if let Some(n) = g.dihedral {
        if n < 1 {
            return Err(spec_err(format!("{loc}.dihedral"), "n must be positive"));
        }
        if let Some(e) = too_big(2 * n) {
            return Err(e);
        }
        return Ok(FiniteGroup::dihedral(n));
    }
    if g.trivial.is_some() {
        return Ok(FiniteGroup::trivial());
    }
    let degree = g
        .degree
        .ok_or_else(|| spec_err(format!("{loc}.degree"), "missing (required with generators)"))?;
    let gens = g.generators.clone().unwrap_or_default();
    FiniteGroup::from_permutations_capped(degree, &gens, max_order)
        .map_err(|e| spec_err(format!("{loc}.generators"), e))
}

fn resolve<'a>(
    groups: &'a BTreeMap<String, Arc<FiniteGroup>>,
    name: &str,
    loc: &str,
) -> Result<&'a Arc<FiniteGroup>, SpecError> {
    groups
        .get(name)
        .ok_or_else(|| spec_err(loc, format!("unknown group '{name}'")))
}

/// Parse and resolve an instance file; `max_order` caps every group.
pub fn parse_spec(text: &str, max_order: usize) -> Result<InstanceSpec, SpecError> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let loc = e
            .span()
            .map(|sp| {
                let line = text[..sp.start.min(text.len())].matches('\n').count() + 1;
                format!("line {line}")
            })
            .unwrap_or_else(|| "input".to_string());
        spec_err(loc, e.message())
    })?;
    let field = match &raw.field {
        Some(f) => parse_field(f).map_err(|e| spec_err("field", e))?,
        None => Field::Rational,
    };
    let mut groups = BTreeMap::new();
    for (name, g) in &raw.groups {
        groups.insert(name.clone(), Arc::new(build_group(name, g, max_order)?));
    }
    let mut xmods = BTreeMap::new();
    for (name, x) in &raw.xmods {
        let loc = format!("xmods.{name}");
        let h = || -> Result<Arc<FiniteGroup>, SpecError> {
            let name = x.h.as_deref().ok_or_else(|| spec_err(format!("{loc}.h"), "missing"))?;
            Ok(resolve(&groups, name, &format!("{loc}.h"))?.clone())
        };
        if x.kind != "normal" && x.elements.is_some() {
            return Err(spec_err(format!("{loc}.elements"), "only kind 'normal' takes elements"));
        }
        let built = match x.kind.as_str() {
            "aut" => {
                if x.g.is_some() || x.action.is_some() || x.boundary.is_some() {
                    return Err(spec_err(&loc, "kind 'aut' takes only h"));
                }
                xmod_from_aut(h()?)
            }
            "normal" => {
                let gname = x.g.as_deref().ok_or_else(|| spec_err(format!("{loc}.g"), "missing"))?;
                let g = resolve(&groups, gname, &format!("{loc}.g"))?.clone();
                if x.h.is_some() || x.action.is_some() || x.boundary.is_some() {
                    return Err(spec_err(&loc, "kind 'normal' takes only g and elements"));
                }
                let mut elements = x
                    .elements
                    .clone()
                    .ok_or_else(|| spec_err(format!("{loc}.elements"), "missing"))?;
                elements.sort_unstable();
                elements.dedup();
                if elements.iter().any(|&e| e >= g.order()) {
                    return Err(spec_err(format!("{loc}.elements"), "element out of range"));
                }
                xmod_from_normal(g, &elements)
            }
            "module" => {
                let gname = x.g.as_deref().ok_or_else(|| spec_err(format!("{loc}.g"), "missing"))?;
                let g = resolve(&groups, gname, &format!("{loc}.g"))?.clone();
                let action = x
                    .action
                    .clone()
                    .ok_or_else(|| spec_err(format!("{loc}.action"), "missing"))?;
                if x.boundary.is_some() {
                    return Err(spec_err(format!("{loc}.boundary"), "a module has trivial boundary"));
                }
                xmod_from_module(g, h()?, action)
            }
            "explicit" => {
                let gname = x.g.as_deref().ok_or_else(|| spec_err(format!("{loc}.g"), "missing"))?;
                let g = resolve(&groups, gname, &format!("{loc}.g"))?.clone();
                let action = x
                    .action
                    .clone()
                    .ok_or_else(|| spec_err(format!("{loc}.action"), "missing"))?;
                let boundary = x
                    .boundary
                    .clone()
                    .ok_or_else(|| spec_err(format!("{loc}.boundary"), "missing"))?;
                CrossedModule::new(g, h()?, action, boundary)
            }
            other => return Err(spec_err(format!("{loc}.kind"), format!("unknown kind '{other}'"))),
        };
        xmods.insert(name.clone(), Arc::new(built.map_err(|e| spec_err(&loc, e))?));
    }
    let mut limits = BTreeMap::new();
    for (name, l) in &raw.limits {
        let loc = format!("limits.{name}");
        let g = resolve(&groups, &l.g, &format!("{loc}.g"))?.clone();
        let h = resolve(&groups, &l.h, &format!("{loc}.h"))?.clone();
        let k = resolve(&groups, &l.k, &format!("{loc}.k"))?.clone();
        let s = GroupHom::new(g, k.clone(), l.s.clone()).map_err(|e| spec_err(format!("{loc}.s"), e))?;
        let t = GroupHom::new(h, k, l.t.clone()).map_err(|e| spec_err(format!("{loc}.t"), e))?;
        limits.insert(name.clone(), (s, t));
    }
    let peter_weyl = match &raw.peter_weyl {
        Some(pw) => {
            let names = pw.groups.clone().unwrap_or_else(|| groups.keys().cloned().collect());
            for n in &names {
                resolve(&groups, n, "peter_weyl.groups")?;
            }
            Field::prime(pw.prime).map_err(|e| spec_err("peter_weyl.prime", e))?;
            Some((pw.prime, names))
        }
        None => None,
    };
    let coend_groups = match &raw.coend {
        Some(c) => {
            for n in &c.groups {
                resolve(&groups, n, "coend.groups")?;
            }
            c.groups.clone()
        }
        None => Vec::new(),
    };
    let (targets, stages, skip) = match &raw.pipeline {
        Some(p) => {
            let targets = match &p.xmod {
                Some(x) => {
                    if !xmods.contains_key(x) {
                        return Err(spec_err("pipeline.xmod", format!("unknown crossed module '{x}'")));
                    }
                    vec![x.clone()]
                }
                None => xmods.keys().cloned().collect(),
            };
            let stages = match &p.stages {
                Some(list) => list
                    .iter()
                    .map(|s| Stage::parse(s).ok_or_else(|| spec_err("pipeline.stages", format!("unknown stage '{s}'"))))
                    .collect::<Result<Vec<_>, _>>()?,
                None => Stage::ALL.to_vec(),
            };
            (targets, stages, p.skip.clone())
        }
        None => (xmods.keys().cloned().collect(), Stage::ALL.to_vec(), Vec::new()),
    };
    Ok(InstanceSpec {
        field,
        max_order,
        groups,
        xmods,
        limits,
        peter_weyl,
        coend_groups,
        targets,
        stages,
        skip,
    })
}

/// Why a pipeline could not run at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunError {
    /// The field violates a characteristic or splitting requirement.
    Precondition(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Precondition(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

impl std::error::Error for RunError {}

/// A report plus per-stage wall-clock times, kept apart from the records.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub report: Report,
    pub timings: Vec<(String, f64)>,
}

fn char_ok(field: Field, what: &str, order: usize) -> Result<(), RunError> {
    if field.divides(order) {
        return Err(RunError::Precondition(format!(
            "characteristic {} divides |{what}| = {order}",
            field.characteristic()
        )));
    }
    Ok(())
}

fn precheck(spec: &InstanceSpec, stages: &[Stage]) -> Result<(), RunError> {
    let f = spec.field;
    let needs_algebras = stages
        .iter()
        .any(|s| matches!(s, Stage::Trialgebra | Stage::Cotrialgebra | Stage::CoendCheck));
    if needs_algebras {
        for name in &spec.targets {
            let x = &spec.xmods[name];
            char_ok(f, &format!("G₀ of {name}"), x.g().order())?;
            char_ok(f, &format!("G₁ of {name}"), x.g().order() * x.h().order())?;
        }
    }
    if stages.contains(&Stage::LimitsCheck) {
        for (name, (s, t)) in &spec.limits {
            for (what, g) in [("G", s.dom()), ("H", t.dom()), ("K", s.cod())] {
                char_ok(f, &format!("{what} of {name}"), g.order())?;
            }
        }
    }
    if stages.contains(&Stage::CoendCheck) {
        for g in &spec.coend_groups {
            char_ok(f, g, spec.groups[g].order())?;
        }
    }
    if stages.contains(&Stage::PeterWeyl) {
        if let Some((p, names)) = &spec.peter_weyl {
            let field = Field::Prime(*p);
            for n in names {
                check_splitting(field, &spec.groups[n]).map_err(|e| RunError::Precondition(format!("{n}: {e}")))?;
            }
        }
    }
    Ok(())
}

fn record_result(report: &mut Report, prefix: &str, r: crate::error::Result<Report>) {
    match r {
        Ok(sub) => report.merge(prefix, sub),
        Err(e) => report.check(
            format!("{prefix}.construct"),
            "construction succeeds",
            Err(e.to_string()),
        ),
    }
}

/// `∘` agrees with `(h₁, g₁) ∘ (h₂, g₂) = (h₁h₂, g₂)` on every composable pair.
pub fn explicit_composition_check(x: &CrossedModule, g: &TwoGroup) -> Result<(), String> {
    crate::report::first_failure(g.composable_pairs(), |&(a, b)| {
        (g.compose(a, b).ok() != Some(x.explicit_compose(a, b)))
            .then(|| format!("({}, {})", g.g1().name(a), g.g1().name(b)))
    })
}

/// Run the requested stages in order. Check failures and construction errors
/// become failed records; only precondition violations abort.
pub fn run_pipeline(spec: &InstanceSpec, stages: &[Stage]) -> Result<RunOutput, RunError> {
    precheck(spec, stages)?;
    let field = spec.field;
    let mut report = Report::new();
    let mut timings = Vec::new();
    let mut two_groups: BTreeMap<String, Option<Arc<TwoGroup>>> = BTreeMap::new();
    let mut two_group = |name: &str| -> crate::error::Result<Arc<TwoGroup>> {
        let entry = two_groups
            .entry(name.to_string())
            .or_insert_with(|| spec.xmods[name].to_2group_capped(spec.max_order).ok().map(Arc::new));
        match entry {
            Some(g) => Ok(g.clone()),
            None => spec.xmods[name].to_2group_capped(spec.max_order).map(Arc::new),
        }
    };
    for &stage in stages {
        let start = Instant::now();
        match stage {
            Stage::Validate => {
                for (name, x) in &spec.xmods {
                    report.merge(&format!("xmod.{name}"), validate_xmod(x));
                }
            }
            Stage::Build2Group => {
                for name in &spec.targets {
                    let prefix = format!("2group.{name}");
                    match two_group(name) {
                        Ok(g) => {
                            report.merge(&prefix, validate_2group(&g));
                            report.check(
                                format!("{prefix}.explicit_composition"),
                                "(h₁,g₁)∘(h₂,g₂) = (h₁h₂, g₂)",
                                explicit_composition_check(&spec.xmods[name], &g),
                            );
                        }
                        Err(e) => report.check(
                            format!("{prefix}.construct"),
                            "construction succeeds",
                            Err(e.to_string()),
                        ),
                    }
                }
            }
            Stage::Trialgebra => {
                for name in &spec.targets {
                    let result = two_group(name).and_then(|g| {
                        let tri = trialgebra_from_2group(field, &g)?;
                        let mut r = validate_trialgebra(&tri)?;
                        r.merge("", trialg::antipode_check(&tri)?);
                        r.merge("", interchange_check(&tri));
                        if tri.h0.dim() == 1 {
                            r.merge("", eckmann_hilton_check(&tri)?);
                        }
                        Ok(r)
                    });
                    record_result(&mut report, &format!("trialgebra.{name}"), result);
                }
            }
            Stage::Cotrialgebra => {
                for name in &spec.targets {
                    let result = two_group(name).and_then(|g| {
                        let co = cotrialgebra_from_2group(field, &g)?;
                        let mut r = validate_cotrialgebra(&co)?;
                        r.merge("", cotrialg::antipode_check(&co)?);
                        let tri = trialgebra_from_2group(field, &g)?;
                        r.merge("", duality_check(&tri, &co)?);
                        Ok(r)
                    });
                    record_result(&mut report, &format!("cotrialgebra.{name}"), result);
                }
            }
            Stage::LimitsCheck => {
                for (name, (s, t)) in &spec.limits {
                    let result = verify_limit_preservation(field, s, t).map(|lp| lp.report);
                    record_result(&mut report, &format!("limits.{name}"), result);
                }
            }
            Stage::PeterWeyl => {
                if let Some((p, names)) = &spec.peter_weyl {
                    let fp = Field::Prime(*p);
                    for n in names {
                        let g = &spec.groups[n];
                        let result = function_algebra(fp, g).and_then(|h| semisimplicity_check(&Arc::new(h), g));
                        record_result(&mut report, &format!("peter_weyl.{n}"), result);
                    }
                }
            }
            Stage::CoendCheck => {
                for n in &spec.coend_groups {
                    let g = &spec.groups[n];
                    let result = function_algebra(field, g).and_then(|h| {
                        let h = Arc::new(h);
                        let (s, full) = coend_from_comodules(&h, &[regular_comodule(&h)])?;
                        let mut r = Report::new();
                        r.check(
                            "regular",
                            "coend of the regular comodule recovers k(G)",
                            full.then_some(())
                                .ok_or_else(|| format!("rank {} < {}", s.dim(), h.dim())),
                        );
                        Ok(r)
                    });
                    record_result(&mut report, &format!("coend.{n}"), result);
                }
                for name in &spec.targets {
                    let result = two_group(name).and_then(|g| rep_level_checks(field, &g));
                    record_result(&mut report, &format!("rep.{name}"), result);
                }
            }
        }
        timings.push((stage.name().to_string(), start.elapsed().as_secs_f64()));
    }
    if !spec.skip.is_empty() {
        report.records.retain(|r| {
            !spec
                .skip
                .iter()
                .any(|p| r.id == *p || r.id.starts_with(&format!("{p}.")))
        });
    }
    Ok(RunOutput { report, timings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ReportDocument {
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

pub fn summary(report: &Report) -> Summary {
    let failed = report.failures().count();
    Summary {
        total: report.len(),
        passed: report.len() - failed,
        failed,
    }
}

/// JSON with a fixed key order, or a plain table ending in `N checks, M failures`.
/// Timings are written only when given, under their own key.
pub fn emit_report(report: &Report, format: ReportFormat, timings: Option<&[(String, f64)]>) -> String {
    match format {
        ReportFormat::Json => {
            let doc = ReportDocument {
                summary: summary(report),
                records: report.records.clone(),
                timings: timings.map(|t| t.iter().cloned().collect()),
            };
            serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let width = report.records.iter().map(|r| r.id.len()).max().unwrap_or(0);
            for r in &report.records {
                let status = if r.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status}  {:width$}  {}", r.id, r.law));
                if let Some(c) = &r.counterexample {
                    out.push_str(&format!("  [at {c}]"));
                }
                out.push('\n');
            }
            if let Some(t) = timings {
                for (stage, secs) in t {
                    out.push_str(&format!("time  {stage}: {secs:.3}s\n"));
                }
            }
            let s = summary(report);
            out.push_str(&format!("{} checks, {} failures\n", s.total, s.failed));
            out
        }
    }
}

/// Exit status for a finished run: 0 when every check passed, 1 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.all_passed() {
        0
    } else {
        1
    }
}

pub const DEFAULT_CAP: usize = DEFAULT_MAX_ORDER;
