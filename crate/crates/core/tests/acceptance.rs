//! End-to-end acceptance checks, run without the libtest harness so that each
//! criterion prints one `PASS`/`FAIL` line. A criterion that panics prints
//! `FAIL` and makes the target exit nonzero.

use std::sync::Arc;
use std::time::{Duration, Instant};

use xmodhopf::cli::{emit_report, parse_spec, run_pipeline, ReportFormat};
use xmodhopf::cotrialg::{self, cotrialgebra_from_2group, duality_check, validate_cotrialgebra};
use xmodhopf::exactlin::{Field, Matrix};
use xmodhopf::fingrp::{FiniteGroup, GroupHom};
use xmodhopf::hopf::function_algebra;
use xmodhopf::hopflimits::verify_limit_preservation;
use xmodhopf::repcat::{
    central_idempotents_brute, coend_from_comodules, cosimple_decomposition, regular_comodule, rep_antipode,
    rep_functor, rep_level_checks, semisimplicity_check,
};
use xmodhopf::report::Report;
use xmodhopf::trialg::{
    self, circ_sweedler, eckmann_hilton_check, interchange_check, trialgebra_from_2group, validate_trialgebra,
};
use xmodhopf::twogroup::{validate_2group, validate_2group_with, TwoGroup};
use xmodhopf::xmod::{instances, validate_xmod, CrossedModule};

fn line(n: u32, passed: bool, what: &str, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status}  {what}  ({detail})");
}

fn failures(r: &Report) -> Vec<String> {
    r.failures()
        .map(|c| format!("{}: {}", c.id, c.counterexample.clone().unwrap_or_default()))
        .collect()
}

fn suite() -> Vec<(&'static str, CrossedModule)> {
    vec![
        ("Aut(Z3)", instances::aut_z3()),
        ("Z2 inverting Z3", instances::z2_inverting_z3()),
        ("trivial", instances::trivial()),
    ]
}

/// Every instance the suite builds a 2-group for.
fn constructed() -> Vec<(&'static str, CrossedModule)> {
    let mut v = suite();
    v.extend([
        ("Z4 over trivial", instances::z4_over_trivial()),
        ("Z3 -> Z3 identity", instances::identity_cyclic(3)),
        ("A3 in S3", instances::a3_in_s3()),
        ("Aut(S3)", instances::aut_s3()),
    ]);
    v
}

fn two_group(x: &CrossedModule) -> Arc<TwoGroup> {
    Arc::new(x.to_2group().unwrap())
}

fn criterion_1_crossed_modules_and_2groups() {
    let start = Instant::now();
    let mut ok = true;
    for (name, x) in suite() {
        let rx = validate_xmod(&x);
        let rg = validate_2group(&two_group(&x));
        assert!(rx.all_passed(), "{name}: {:?}", failures(&rx));
        assert!(rg.all_passed(), "{name}: {:?}", failures(&rg));
        ok &= rx.all_passed() && rg.all_passed() && !rx.is_empty() && !rg.is_empty();
    }
    // A corrupted boundary breaks the crossed-module axioms with a witness.
    for (name, x) in suite() {
        let Some(bad) = instances::corrupt_boundary(&x) else {
            assert_eq!(name, "trivial");
            continue;
        };
        let r = validate_xmod(&bad);
        let witnessed = r.failures().any(|c| c.counterexample.is_some());
        assert!(witnessed, "{name}: corrupt boundary not detected");
        ok &= witnessed;
    }
    // Swapping s and t while keeping the crossed-module composition. On the
    // suite instances ∂ is trivial, so s = t and the swap changes nothing;
    // it is a genuine mutation only where ∂ is nontrivial.
    for (name, x) in suite() {
        let g = two_group(&x);
        assert_eq!(g.s_map(), g.t_map(), "{name}");
    }
    for x in [instances::identity_cyclic(3), instances::a3_in_s3()] {
        let g = two_group(&x);
        let swapped = g.with_swapped_source_target();
        assert!(validate_2group_with(&g, |a, b| x.explicit_compose(a, b)).all_passed());
        let r = validate_2group_with(&swapped, |a, b| x.explicit_compose(a, b));
        let witnessed = r.failures().any(|c| c.counterexample.is_some());
        assert!(witnessed);
        ok &= witnessed;
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(5);
    line(
        1,
        ok,
        "crossed-module and 2-group axioms, corrupt-∂ and swap-s/t mutations",
        &format!(
            "{:.2}s; swap applied to the s ≠ t instances Z3→Z3 and A3⊂S3",
            elapsed.as_secs_f64()
        ),
    );
    assert!(ok);
}

fn criterion_2_derived_composition() {
    // Derived ∘ against the functor-T formula read literally, (h₁h₂, g₁), and
    // against (h₁h₂, g₂), which is what s(a ∘ b) = s(b) forces.
    let mut literal_ok = true;
    let mut corrected_ok = true;
    let mut witness = None;
    for (name, x) in constructed() {
        let g = two_group(&x);
        let n = x.g().order();
        for (a, b) in g.composable_pairs() {
            let derived = g.compose(a, b).unwrap();
            let literal = x.pair_index(x.h().mul(a / n, b / n), a % n);
            corrected_ok &= derived == x.explicit_compose(a, b);
            // the two formulas differ exactly when ∂(h₂) ≠ e
            assert_eq!(literal == derived, x.boundary(b / n) == x.g().identity());
            if literal != derived {
                literal_ok = false;
                witness.get_or_insert_with(|| format!("{name}: a = {}, b = {}", g.g1().name(a), g.g1().name(b)));
            }
        }
        if x.boundary_map().iter().all(|&y| y == x.g().identity()) {
            assert!(g
                .composable_pairs()
                .iter()
                .all(|&(a, b)| g.compose(a, b).unwrap() == x.pair_index(x.h().mul(a / n, b / n), a % n)));
        }
    }
    assert!(corrected_ok);
    line(
        2,
        literal_ok,
        "derived ∘ equals (h₁h₂, g₁) on every constructed instance",
        &match &witness {
            Some(w) => {
                format!("literal formula fails where ∂(h₂) ≠ e, first at {w}; (h₁h₂, g₂) holds on all instances")
            }
            None => "exact".into(),
        },
    );
    line(
        2,
        corrected_ok,
        "derived ∘ equals (h₁h₂, g₂) on every constructed instance",
        "exact",
    );
    // Unattainable as literally stated: the instances with nontrivial ∂ disagree.
    assert!(!literal_ok && witness.unwrap().starts_with("Z3 -> Z3"));
}

fn criterion_3_limit_preservation() {
    let start = Instant::now();
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    let z4 = Arc::new(FiniteGroup::cyclic(4));
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let sign = GroupHom::from_fn(s3.clone(), z2.clone(), |x| {
        let p = s3.permutation(x).unwrap();
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2
    })
    .unwrap();
    let mod2 = GroupHom::from_fn(z4, z2, |x| x % 2).unwrap();
    let mut ok = true;
    let mut dims = Vec::new();
    for (hom, expected) in [(&sign, 18), (&mod2, 8)] {
        // enumeration oracle
        let pairs = (0..hom.dom().order())
            .flat_map(|a| (0..hom.dom().order()).map(move |b| (a, b)))
            .filter(|&(a, b)| hom.apply(a) == hom.apply(b))
            .count();
        assert_eq!(pairs, expected);
        let lp = verify_limit_preservation(Field::Rational, hom, hom).unwrap();
        assert!(lp.report.all_passed(), "{:?}", failures(&lp.report));
        ok &= lp.pair_count == expected && lp.pullback_dim == expected && lp.pushout_dim == expected;
        ok &= lp.report.all_passed();
        dims.push((lp.pullback_dim, lp.pushout_dim));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    line(
        3,
        ok,
        "pullback and pushout dimensions match pair counts, comparison maps are Hopf isomorphisms",
        &format!("dims {dims:?}, {:.2}s", elapsed.as_secs_f64()),
    );
    assert!(ok);
}

fn trialgebra_instances() -> Vec<(&'static str, CrossedModule)> {
    vec![
        ("Aut(Z3)", instances::aut_z3()),
        ("Z2 inverting Z3", instances::z2_inverting_z3()),
        ("Z3 -> Z3 identity", instances::identity_cyclic(3)),
        ("A3 in S3", instances::a3_in_s3()),
        ("Z4 over trivial", instances::z4_over_trivial()),
        ("trivial", instances::trivial()),
    ]
}

fn criterion_4_trialgebra_formulas() {
    let q = Field::Rational;
    let mut ok = true;
    for (name, x) in trialgebra_instances() {
        let tri = trialgebra_from_2group(q, &two_group(&x)).unwrap();
        let n1 = tri.h1.dim();
        // the Sweedler formula evaluated on the pullback basis inside H₁ ⊗ H₁
        let cols: Vec<_> = tri
            .pullback
            .sub
            .inclusion
            .columns()
            .iter()
            .map(|v| circ_sweedler(&tri, v))
            .collect();
        let sweedler = Matrix::from_sparse_columns(q, n1, &cols);
        assert_eq!(sweedler, tri.circ.map, "{name}");
        let anti = trialg::antipode_check(&tri).unwrap();
        assert!(anti.all_passed(), "{name}: {:?}", failures(&anti));
        for id in [
            "target_after",
            "source_after",
            "left_inverse",
            "right_inverse",
            "anti_composition",
        ] {
            assert!(anti.passed(&format!("antipode.{id}")), "{name}: {id}");
        }
        let inter = interchange_check(&tri);
        assert!(inter.all_passed(), "{name}: {:?}", failures(&inter));
        let valid = validate_trialgebra(&tri).unwrap();
        assert!(valid.all_passed(), "{name}: {:?}", failures(&valid));
        ok &= sweedler == tri.circ.map && anti.all_passed() && inter.all_passed() && valid.all_passed();
        if tri.h0.dim() == 1 {
            let eh = eckmann_hilton_check(&tri).unwrap();
            assert!(eh.all_passed() && eh.passed("eckmann_hilton.coincide"), "{name}");
            ok &= eh.all_passed();
        }
    }
    line(
        4,
        ok,
        "Sweedler form of ∘, five antipode identities, interchange law, Eckmann-Hilton on H₀ = k",
        "exact, six instances",
    );
    assert!(ok);
}

fn criterion_5_cotrialgebra_duality() {
    let q = Field::Rational;
    let mut ok = true;
    for (name, x) in trialgebra_instances() {
        let g = two_group(&x);
        let tri = trialgebra_from_2group(q, &g).unwrap();
        let co = cotrialgebra_from_2group(q, &g).unwrap();
        let rt = validate_trialgebra(&tri).unwrap();
        let rc = validate_cotrialgebra(&co).unwrap();
        assert!(rc.all_passed(), "{name}: {:?}", failures(&rc));
        // check ids shared by both sides report the same outcome
        for rec in &rc.records {
            if let Some(t) = rt.get(&rec.id).map(|r| r.passed) {
                assert_eq!(t, rec.passed, "{name}: {}", rec.id);
            }
        }
        let dual = duality_check(&tri, &co).unwrap();
        assert!(dual.all_passed(), "{name}: {:?}", failures(&dual));
        let anti = cotrialg::antipode_check(&co).unwrap();
        assert!(anti.all_passed(), "{name}: {:?}", failures(&anti));
        assert!(anti.passed("antipode.target_after"));
        ok &= rc.all_passed() && dual.all_passed() && anti.all_passed();
    }
    line(
        5,
        ok,
        "cotrialgebra laws match the trialgebra ones, Δ̲ and S̲ are the transposes, τS̲ = σ and the other four",
        "exact, six instances",
    );
    assert!(ok);
}

fn criterion_6_peter_weyl() {
    let start = Instant::now();
    let f7 = Field::prime(7).unwrap();
    let s3 = FiniteGroup::symmetric(3);
    let h = Arc::new(function_algebra(f7, &s3).unwrap());
    let blocks = cosimple_decomposition(&h, &s3).unwrap();
    let mut dims: Vec<usize> = blocks.iter().map(|b| b.carrier.dim()).collect();
    dims.sort();
    // brute-force oracle: enumerate all central idempotents over F_7
    let brute = central_idempotents_brute(f7, &s3).unwrap();
    let ss = semisimplicity_check(&h, &s3).unwrap();
    assert!(ss.all_passed(), "{:?}", failures(&ss));
    let f5 = Field::prime(5).unwrap();
    let z4 = FiniteGroup::cyclic(4);
    let hz = function_algebra(f5, &z4).unwrap();
    let zdims: Vec<usize> = cosimple_decomposition(&hz, &z4)
        .unwrap()
        .iter()
        .map(|b| b.carrier.dim())
        .collect();
    let elapsed = start.elapsed();
    let ok = dims == [1, 1, 4]
        && brute.len() == 3
        && dims.iter().sum::<usize>() == 6
        && ss.passed("simple.endomorphisms")
        && zdims == [1, 1, 1, 1]
        && elapsed < Duration::from_secs(5);
    line(
        6,
        ok,
        "k(S₃) over F₇ has blocks {1,1,4} with 1-dim End, k(Z₄) over F₅ has four 1-dim blocks",
        &format!("{:.2}s", elapsed.as_secs_f64()),
    );
    assert!(ok);
}

/// Groups of order at most 24 used across the tests.
fn corpus() -> Vec<(String, FiniteGroup)> {
    let mut v: Vec<(String, FiniteGroup)> = (1..=24).map(|n| (format!("Z{n}"), FiniteGroup::cyclic(n))).collect();
    v.extend((2..=12).map(|n| (format!("D{n}"), FiniteGroup::dihedral(n))));
    v.push(("S3".into(), FiniteGroup::symmetric(3)));
    v.push(("S4".into(), FiniteGroup::symmetric(4)));
    v.push((
        "A4".into(),
        FiniteGroup::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap(),
    ));
    // quaternion group as permutations of its eight elements
    let q8 = FiniteGroup::from_permutations(8, &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]]).unwrap();
    v.push(("Q8".into(), q8));
    v.push((
        "Z2xZ2".into(),
        FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]]).unwrap(),
    ));
    v
}

fn criterion_7_reconstruction() {
    let corpus = corpus();
    let mut ok = true;
    for (name, g) in &corpus {
        assert!(g.order() <= 24, "{name}");
        let h = Arc::new(function_algebra(Field::Rational, g).unwrap());
        let (span, full) = coend_from_comodules(&h, &[regular_comodule(&h)]).unwrap();
        assert!(full && span.dim() == g.order(), "{name}: rank {}", span.dim());
        ok &= full && span.dim() == g.order();
    }
    assert_eq!(corpus.iter().find(|(n, _)| n == "Q8").unwrap().1.order(), 8);
    line(
        7,
        ok,
        "coefficients of the regular comodule span k(G)",
        &format!("{} groups of order ≤ 24", corpus.len()),
    );
    assert!(ok);
}

fn criterion_8_rep_level() {
    let q = Field::Rational;
    let g = two_group(&instances::a3_in_s3());
    let r = rep_level_checks(q, &g).unwrap();
    assert!(r.all_passed(), "{:?}", failures(&r));
    // an extra composable pair Z₆ → S₃ → Z₂ on the regular comodule
    let s3 = g.g0().clone();
    let z6 = Arc::new(FiniteGroup::cyclic(6));
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let two_cycle = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
    let f = GroupHom::from_fn(z6.clone(), s3.clone(), |k| if k % 2 == 0 { 0 } else { two_cycle }).unwrap();
    let sign = GroupHom::from_fn(s3.clone(), z2.clone(), |x| usize::from(s3.element_order(x) == 2)).unwrap();
    let k2 = Arc::new(function_algebra(q, &z2).unwrap());
    let m = regular_comodule(&k2);
    let functorial =
        rep_functor(&f, &rep_functor(&sign, &m).unwrap()).unwrap() == rep_functor(&f.then(&sign).unwrap(), &m).unwrap();
    let k1 = Arc::new(function_algebra(q, g.g1()).unwrap());
    let reg = regular_comodule(&k1);
    let involutive = rep_antipode(&g, &rep_antipode(&g, &reg).unwrap()).unwrap() == reg;
    let ok = r.all_passed() && functorial && involutive;
    line(
        8,
        ok,
        "Rep functoriality, Rep(ξ)² = id, Rep(∘) coefficients inside the image of Δ̲",
        "A3 ⊂ S3 instance, G₀ = S₃",
    );
    assert!(ok);
}

fn criterion_9_determinism() {
    let text = include_str!("../specs/aut_z3.toml");
    let run = || {
        let spec = parse_spec(text, 200).unwrap();
        let out = run_pipeline(&spec, &spec.stages).unwrap();
        emit_report(&out.report, ReportFormat::Json, None)
    };
    let (a, b) = (run(), run());
    let ok = a == b && !a.is_empty();
    line(
        9,
        ok,
        "two full pipeline runs give byte-identical structured reports",
        &format!("{} bytes", a.len()),
    );
    assert!(ok);
}

fn main() {
    let criteria: [(u32, fn()); 9] = [
        (1, criterion_1_crossed_modules_and_2groups),
        (2, criterion_2_derived_composition),
        (3, criterion_3_limit_preservation),
        (4, criterion_4_trialgebra_formulas),
        (5, criterion_5_cotrialgebra_duality),
        (6, criterion_6_peter_weyl),
        (7, criterion_7_reconstruction),
        (8, criterion_8_rep_level),
        (9, criterion_9_determinism),
    ];
    let mut broken = Vec::new();
    for (n, f) in criteria {
        if std::panic::catch_unwind(f).is_err() {
            println!("criterion {n}: FAIL  (unexpected outcome, see panic above)");
            broken.push(n);
        }
    }
    if !broken.is_empty() {
        eprintln!("acceptance: unexpected outcomes for criteria {broken:?}");
        std::process::exit(1);
    }
}
