//! Strict 2-groups as internal categories in finite groups, internal functors,
//! internal natural transformations and their compositions.
//!
//! Composition conventions, used throughout the crate:
//!
//! * `(a, b)` is composable when `s(a) = t(b)`; then `a ∘ b` has source `s(b)`
//!   and target `t(a)` ("`a` after `b`", read right to left).
//! * `∘` is never stored. It is derived as `a ∘ b = a · ι(s(a))⁻¹ · b`, the only
//!   composition compatible with the group structure.
//! * A natural transformation `η: F ⇒ F̃` sends an object `x` to an arrow
//!   `η(x): F₀(x) → F̃₀(x)`; vertical composites are `(θ∘η)(x) = θ(x) ∘ η(x)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingrp::{check_hom, pullback, FiniteGroup, GroupHom, GroupPullback};
use crate::report::{first_failure, Report};

/// A strict 2-group `(G₀, G₁, s, t, ι)`.
///
/// The structure maps are stored as raw image arrays so that corrupted data can
/// be represented and diagnosed; [`validate_2group`] checks everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroup {
    g0: Arc<FiniteGroup>,
    g1: Arc<FiniteGroup>,
    s: Vec<usize>,
    t: Vec<usize>,
    iota: Vec<usize>,
}

impl TwoGroup {
    /// Checks only array shapes and ranges.
    pub fn new(
        g0: Arc<FiniteGroup>,
        g1: Arc<FiniteGroup>,
        s: Vec<usize>,
        t: Vec<usize>,
        iota: Vec<usize>,
    ) -> Result<TwoGroup> {
        let (n0, n1) = (g0.order(), g1.order());
        for (name, map, dom, cod) in [("s", &s, n1, n0), ("t", &t, n1, n0), ("iota", &iota, n0, n1)] {
            if map.len() != dom || map.iter().any(|&x| x >= cod) {
                return Err(Error::invalid("2-group", format!("map {name} has the wrong shape")));
            }
        }
        Ok(TwoGroup { g0, g1, s, t, iota })
    }

    /// The discrete 2-group on `g`: only identity arrows.
    pub fn discrete(g: Arc<FiniteGroup>) -> TwoGroup {
        let id: Vec<usize> = g.elements().collect();
        TwoGroup {
            g0: g.clone(),
            g1: g,
            s: id.clone(),
            t: id.clone(),
            iota: id,
        }
    }

    pub fn g0(&self) -> &Arc<FiniteGroup> {
        &self.g0
    }

    pub fn g1(&self) -> &Arc<FiniteGroup> {
        &self.g1
    }

    pub fn s(&self, a: usize) -> usize {
        self.s[a]
    }

    pub fn t(&self, a: usize) -> usize {
        self.t[a]
    }

    pub fn iota(&self, x: usize) -> usize {
        self.iota[x]
    }

    pub fn s_map(&self) -> &[usize] {
        &self.s
    }

    pub fn t_map(&self) -> &[usize] {
        &self.t
    }

    pub fn iota_map(&self) -> &[usize] {
        &self.iota
    }

    fn hom(&self, map: &[usize], dom: &Arc<FiniteGroup>, cod: &Arc<FiniteGroup>) -> Result<GroupHom> {
        Ok(GroupHom::new(dom.clone(), cod.clone(), map.to_vec())?)
    }

    pub fn s_hom(&self) -> Result<GroupHom> {
        self.hom(&self.s, &self.g1, &self.g0)
    }

    pub fn t_hom(&self) -> Result<GroupHom> {
        self.hom(&self.t, &self.g1, &self.g0)
    }

    pub fn iota_hom(&self) -> Result<GroupHom> {
        self.hom(&self.iota, &self.g0, &self.g1)
    }

    /// `a ∘ b`, defined when `s(a) = t(b)`.
    pub fn compose(&self, a: usize, b: usize) -> Result<usize> {
        if self.s(a) != self.t(b) {
            return Err(Error::NotComposable {
                s_a: self.s(a),
                t_b: self.t(b),
            });
        }
        Ok(self.compose_unchecked(a, b))
    }

    fn compose_unchecked(&self, a: usize, b: usize) -> usize {
        let g = &self.g1;
        g.mul(g.mul(a, g.inv(self.iota(self.s(a)))), b)
    }

    /// The same data with source and target exchanged.
    pub fn with_swapped_source_target(&self) -> TwoGroup {
        TwoGroup {
            s: self.t.clone(),
            t: self.s.clone(),
            ..self.clone()
        }
    }

    /// `ξ(a) = ι(s(a)) · a⁻¹ · ι(t(a))`, the inverse of `a` for `∘`.
    pub fn vertical_inverse(&self, a: usize) -> usize {
        let g = &self.g1;
        g.mul(g.mul(self.iota(self.s(a)), g.inv(a)), self.iota(self.t(a)))
    }

    /// All pairs `(a, b)` with `s(a) = t(b)`, in lexicographic order.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.g1.order();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.s(a) == self.t(b))
            .collect()
    }

    /// The group `G₁ ×_{G₀} G₁` of composable pairs with its projections.
    pub fn pullback_group(&self) -> Result<GroupPullback> {
        Ok(pullback(&self.s_hom()?, &self.t_hom()?)?)
    }

    /// `∘` as a homomorphism out of the materialized pullback group.
    pub fn composition_hom(&self, pb: &GroupPullback) -> Result<GroupHom> {
        let map = pb.pairs.iter().map(|&(a, b)| self.compose_unchecked(a, b)).collect();
        Ok(GroupHom::new(pb.group.clone(), self.g1.clone(), map)?)
    }

    /// `ξ` as a group endomorphism of `G₁`.
    pub fn vertical_inverse_hom(&self) -> Result<GroupHom> {
        GroupHom::from_fn(self.g1.clone(), self.g1.clone(), |a| self.vertical_inverse(a)).map_err(Error::from)
    }

    fn name1(&self, a: usize) -> String {
        self.g1.name(a)
    }
}

/// Check every axiom of a strict 2-group exhaustively; never stops early.
pub fn validate_2group(g: &TwoGroup) -> Report {
    validate_2group_with(g, |a, b| g.compose_unchecked(a, b))
}

/// The same axioms with `∘` supplied as a table instead of derived from the
/// group structure. Used to test data that did not come from a crossed module.
pub fn validate_2group_with(g: &TwoGroup, compose: impl Fn(usize, usize) -> usize) -> Report {
    let mut r = Report::new();
    let (g0, g1) = (g.g0(), g.g1());
    r.check("hom.s", "s is a group homomorphism", check_hom(g1, g0, g.s_map()));
    r.check("hom.t", "t is a group homomorphism", check_hom(g1, g0, g.t_map()));
    r.check("hom.iota", "ι is a group homomorphism", check_hom(g0, g1, g.iota_map()));
    r.check(
        "unit.source",
        "s(ι(x)) = x",
        first_failure(g0.elements(), |&x| {
            (g.s(g.iota(x)) != x).then(|| format!("x = {}", g0.name(x)))
        }),
    );
    r.check(
        "unit.target",
        "t(ι(x)) = x",
        first_failure(g0.elements(), |&x| {
            (g.t(g.iota(x)) != x).then(|| format!("x = {}", g0.name(x)))
        }),
    );
    let pairs = g.composable_pairs();
    let pair_name = |a: usize, b: usize| format!("a = {}, b = {}", g.name1(a), g.name1(b));
    r.check(
        "composition.source",
        "s(a ∘ b) = s(b)",
        first_failure(pairs.iter(), |&&(a, b)| {
            (g.s(compose(a, b)) != g.s(b)).then(|| pair_name(a, b))
        }),
    );
    r.check(
        "composition.target",
        "t(a ∘ b) = t(a)",
        first_failure(pairs.iter(), |&&(a, b)| {
            (g.t(compose(a, b)) != g.t(a)).then(|| pair_name(a, b))
        }),
    );
    r.check(
        "composition.associativity",
        "(a ∘ b) ∘ c = a ∘ (b ∘ c)",
        first_failure(pairs.iter(), |&&(a, b)| {
            g1.elements()
                .filter(|&c| g.s(b) == g.t(c))
                .find(|&c| {
                    let ab = compose(a, b);
                    let bc = compose(b, c);
                    g.s(ab) != g.t(c) || g.s(a) != g.t(bc) || compose(ab, c) != compose(a, bc)
                })
                .map(|c| format!("{}, c = {}", pair_name(a, b), g.name1(c)))
        }),
    );
    r.check(
        "composition.left_unit",
        "ι(t(a)) ∘ a = a",
        first_failure(g1.elements(), |&a| {
            let u = g.iota(g.t(a));
            (g.s(u) != g.t(a) || compose(u, a) != a).then(|| format!("a = {}", g.name1(a)))
        }),
    );
    r.check(
        "composition.right_unit",
        "a ∘ ι(s(a)) = a",
        first_failure(g1.elements(), |&a| {
            let u = g.iota(g.s(a));
            (g.t(u) != g.s(a) || compose(a, u) != a).then(|| format!("a = {}", g.name1(a)))
        }),
    );
    r.check(
        "composition.homomorphism",
        "(a a′) ∘ (b b′) = (a ∘ b)(a′ ∘ b′)",
        first_failure(pairs.iter(), |&&(a, b)| {
            pairs
                .iter()
                .find(|&&(a2, b2)| {
                    let (aa, bb) = (g1.mul(a, a2), g1.mul(b, b2));
                    g.s(aa) != g.t(bb) || compose(aa, bb) != g1.mul(compose(a, b), compose(a2, b2))
                })
                .map(|&(a2, b2)| format!("{}; a′ = {}, b′ = {}", pair_name(a, b), g.name1(a2), g.name1(b2)))
        }),
    );
    r
}

/// An internal functor `(F₀, F₁)` between 2-groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalFunctor {
    pub src: Arc<TwoGroup>,
    pub dst: Arc<TwoGroup>,
    pub f0: Vec<usize>,
    pub f1: Vec<usize>,
}

impl InternalFunctor {
    pub fn new(src: Arc<TwoGroup>, dst: Arc<TwoGroup>, f0: Vec<usize>, f1: Vec<usize>) -> Result<InternalFunctor> {
        if f0.len() != src.g0().order()
            || f1.len() != src.g1().order()
            || f0.iter().any(|&x| x >= dst.g0().order())
            || f1.iter().any(|&x| x >= dst.g1().order())
        {
            return Err(Error::invalid(
                "internal functor",
                "component maps have the wrong shape",
            ));
        }
        Ok(InternalFunctor { src, dst, f0, f1 })
    }

    pub fn identity(g: Arc<TwoGroup>) -> InternalFunctor {
        InternalFunctor {
            f0: g.g0().elements().collect(),
            f1: g.g1().elements().collect(),
            src: g.clone(),
            dst: g,
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &InternalFunctor) -> Result<InternalFunctor> {
        if self.dst != next.src {
            return Err(Error::Mismatch("functors are not composable".into()));
        }
        Ok(InternalFunctor {
            src: self.src.clone(),
            dst: next.dst.clone(),
            f0: self.f0.iter().map(|&x| next.f0[x]).collect(),
            f1: self.f1.iter().map(|&x| next.f1[x]).collect(),
        })
    }
}

/// Homomorphism checks plus the source, target, identity and composition squares.
pub fn functor_check(f: &InternalFunctor) -> Report {
    let (c, d) = (&f.src, &f.dst);
    let mut r = Report::new();
    r.check("hom.f0", "F₀ is a group homomorphism", check_hom(c.g0(), d.g0(), &f.f0));
    r.check("hom.f1", "F₁ is a group homomorphism", check_hom(c.g1(), d.g1(), &f.f1));
    let arrow = |a: usize| format!("a = {}", c.g1().name(a));
    r.check(
        "square.source",
        "s′(F₁(a)) = F₀(s(a))",
        first_failure(c.g1().elements(), |&a| (d.s(f.f1[a]) != f.f0[c.s(a)]).then(|| arrow(a))),
    );
    r.check(
        "square.target",
        "t′(F₁(a)) = F₀(t(a))",
        first_failure(c.g1().elements(), |&a| (d.t(f.f1[a]) != f.f0[c.t(a)]).then(|| arrow(a))),
    );
    r.check(
        "square.identity",
        "F₁(ι(x)) = ι′(F₀(x))",
        first_failure(c.g0().elements(), |&x| {
            (f.f1[c.iota(x)] != d.iota(f.f0[x])).then(|| format!("x = {}", c.g0().name(x)))
        }),
    );
    r.check(
        "square.composition",
        "F₁(a ∘ b) = F₁(a) ∘′ F₁(b)",
        first_failure(c.composable_pairs(), |&(a, b)| {
            let lhs = f.f1[c.compose_unchecked(a, b)];
            let rhs = d.compose(f.f1[a], f.f1[b]).ok();
            (rhs != Some(lhs)).then(|| format!("a = {}, b = {}", c.g1().name(a), c.g1().name(b)))
        }),
    );
    r
}

/// An internal natural transformation `η: F ⇒ F̃` as a map `G₀ → G₁′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalNatTransf {
    pub source: InternalFunctor,
    pub target: InternalFunctor,
    pub eta: Vec<usize>,
}

impl InternalNatTransf {
    pub fn new(source: InternalFunctor, target: InternalFunctor, eta: Vec<usize>) -> Result<InternalNatTransf> {
        if source.src != target.src || source.dst != target.dst {
            return Err(Error::Mismatch("source and target functors differ in signature".into()));
        }
        if eta.len() != source.src.g0().order() || eta.iter().any(|&x| x >= source.dst.g1().order()) {
            return Err(Error::invalid(
                "natural transformation",
                "component map has the wrong shape",
            ));
        }
        Ok(InternalNatTransf { source, target, eta })
    }

    /// `id_F(x) = ι′(F₀(x))`.
    pub fn identity(f: &InternalFunctor) -> InternalNatTransf {
        InternalNatTransf {
            eta: f.f0.iter().map(|&y| f.dst.iota(y)).collect(),
            source: f.clone(),
            target: f.clone(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.eta[x]
    }
}

/// Source law, target law and naturality square, plus multiplicativity of `η`.
pub fn nat_transf_check(n: &InternalNatTransf) -> Report {
    let (f, ft) = (&n.source, &n.target);
    let (c, d) = (&f.src, &f.dst);
    let mut r = Report::new();
    let obj = |x: usize| format!("x = {}", c.g0().name(x));
    r.check(
        "source",
        "s′(η(x)) = F₀(x)",
        first_failure(c.g0().elements(), |&x| (d.s(n.eta[x]) != f.f0[x]).then(|| obj(x))),
    );
    r.check(
        "target",
        "t′(η(x)) = F̃₀(x)",
        first_failure(c.g0().elements(), |&x| (d.t(n.eta[x]) != ft.f0[x]).then(|| obj(x))),
    );
    r.check(
        "naturality",
        "F̃₁(a) ∘ η(s(a)) = η(t(a)) ∘ F₁(a)",
        first_failure(c.g1().elements(), |&a| {
            let lhs = d.compose(ft.f1[a], n.eta[c.s(a)]).ok();
            let rhs = d.compose(n.eta[c.t(a)], f.f1[a]).ok();
            (lhs.is_none() || lhs != rhs).then(|| format!("a = {}", c.g1().name(a)))
        }),
    );
    r.check(
        "homomorphism",
        "η is a group homomorphism G₀ → G₁′",
        check_hom(c.g0(), d.g1(), &n.eta),
    );
    r
}

/// `(θ ∘ η)(x) = θ(x) ∘ η(x)` for `η: F ⇒ F̃` and `θ: F̃ ⇒ F̂`.
pub fn compose_nat_vertical(eta: &InternalNatTransf, theta: &InternalNatTransf) -> Result<InternalNatTransf> {
    if eta.target != theta.source {
        return Err(Error::Mismatch(
            "target functor of η is not the source functor of θ".into(),
        ));
    }
    let d = &eta.source.dst;
    let comp: Result<Vec<usize>> = eta.eta.iter().zip(&theta.eta).map(|(&e, &t)| d.compose(t, e)).collect();
    Ok(InternalNatTransf {
        source: eta.source.clone(),
        target: theta.target.clone(),
        eta: comp?,
    })
}

/// The pointwise `∘`-inverse `x ↦ ξ(η(x))`, a transformation `F̃ ⇒ F`.
pub fn vertical_inverse_nat(eta: &InternalNatTransf) -> InternalNatTransf {
    let d = &eta.source.dst;
    InternalNatTransf {
        source: eta.target.clone(),
        target: eta.source.clone(),
        eta: eta.eta.iter().map(|&a| d.vertical_inverse(a)).collect(),
    }
}

/// Both formulas for the horizontal composite of `η: F ⇒ F̃` (on `C → D`) and
/// `τ: G ⇒ G̃` (on `D → E`): `G̃₁(η(x)) ∘ τ(F₀(x))` and `τ(F̃₀(x)) ∘ G₁(η(x))`.
pub fn horizontal_formulas(eta: &InternalNatTransf, tau: &InternalNatTransf) -> Result<(Vec<usize>, Vec<usize>)> {
    if eta.source.dst != tau.source.src {
        return Err(Error::Mismatch("η and τ are not horizontally composable".into()));
    }
    let e = &tau.source.dst;
    let (f, ft, g, gt) = (&eta.source, &eta.target, &tau.source, &tau.target);
    let mut first = Vec::with_capacity(eta.eta.len());
    let mut second = Vec::with_capacity(eta.eta.len());
    for (x, &ex) in eta.eta.iter().enumerate() {
        first.push(e.compose(gt.f1[ex], tau.eta[f.f0[x]])?);
        second.push(e.compose(tau.eta[ft.f0[x]], g.f1[ex])?);
    }
    Ok((first, second))
}

/// Horizontal composite `G∘F ⇒ G̃∘F̃` from the first formula. An error is
/// returned if the second formula disagrees.
pub fn compose_nat_horizontal(eta: &InternalNatTransf, tau: &InternalNatTransf) -> Result<InternalNatTransf> {
    let (first, second) = horizontal_formulas(eta, tau)?;
    if let Some(x) = (0..first.len()).find(|&x| first[x] != second[x]) {
        return Err(Error::invalid(
            "horizontal composite",
            format!("the two formulas differ at x = {x}"),
        ));
    }
    Ok(InternalNatTransf {
        source: eta.source.then(&tau.source)?,
        target: eta.target.then(&tau.target)?,
        eta: first,
    })
}

/// All internal natural transformations `F ⇒ F̃`, by exhaustive search over the
/// arrows with the right source and target at each object.
pub fn enumerate_nat_transfs(f: &InternalFunctor, ft: &InternalFunctor) -> Result<Vec<InternalNatTransf>> {
    let (c, d) = (&f.src, &f.dst);
    let choices: Vec<Vec<usize>> = c
        .g0()
        .elements()
        .map(|x| {
            d.g1()
                .elements()
                .filter(|&a| d.s(a) == f.f0[x] && d.t(a) == ft.f0[x])
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    if choices.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        let eta: Vec<usize> = idx.iter().zip(&choices).map(|(&i, ch)| ch[i]).collect();
        let n = InternalNatTransf::new(f.clone(), ft.clone(), eta)?;
        if nat_transf_check(&n).all_passed() {
            out.push(n);
        }
        let mut k = idx.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
