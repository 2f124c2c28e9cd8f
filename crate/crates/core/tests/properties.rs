use std::sync::Arc;

use proptest::prelude::*;

use xmodhopf::exactlin::{Field, Matrix, Subspace};
use xmodhopf::fingrp::{FiniteGroup, GroupHom};
use xmodhopf::hopf::{function_algebra, group_algebra, group_algebra_hom, validate_hopf};
use xmodhopf::hopflimits::{is_subcoalgebra, largest_subcoalgebra, pullback_cochopf};
use xmodhopf::repcat::{
    coefficient_coalgebra, cosimple_decomposition, regular_comodule, rep_functor, validate_comodule,
};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(7)), Just(Field::Prime(2))]
}

fn matrix_strategy() -> impl Strategy<Value = (Field, Vec<Vec<i64>>)> {
    (field_strategy(), 1usize..5, 1usize..5)
        .prop_flat_map(|(f, r, c)| (Just(f), prop::collection::vec(prop::collection::vec(-3i64..4, c), r)))
}

fn perm(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

/// Subgroups of S₄ given by one or two random generators.
fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (1usize..5)
        .prop_flat_map(|d| prop::collection::vec(perm(d), 1..3).prop_map(move |gens| (d, gens)))
        .prop_map(|(d, gens)| FiniteGroup::from_permutations(d, &gens).unwrap())
}

/// `x ↦ k·x` from `ℤₐ` to `ℤ_c`, when that is well defined.
fn cyclic_hom(a: usize, c: usize, k: usize) -> Option<GroupHom> {
    ((k * a) % c == 0).then(|| {
        GroupHom::from_fn(
            Arc::new(FiniteGroup::cyclic(a)),
            Arc::new(FiniteGroup::cyclic(c)),
            |x| (k * x) % c,
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent((f, rows) in matrix_strategy()) {
        let m = Matrix::from_i64_rows(f, &rows).unwrap();
        let (r, piv) = m.rref().unwrap();
        let (r2, piv2) = r.rref().unwrap();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn rank_nullity((f, rows) in matrix_strategy()) {
        let m = Matrix::from_i64_rows(f, &rows).unwrap();
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.image().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn subspaces_are_canonical((f, rows) in matrix_strategy(), seed in 0i64..5) {
        let m = Matrix::from_i64_rows(f, &rows).unwrap();
        let vs = m.columns();
        let n = m.rows();
        let a = Subspace::span(f, n, &vs).unwrap();
        // reversed order, and the first vector shifted by a multiple of the second
        let mut ws: Vec<_> = vs.iter().rev().cloned().collect();
        if ws.len() > 1 {
            let c = f.from_i64(seed);
            let extra: Vec<_> = ws[0].iter().zip(&ws[1]).map(|(x, y)| x + &(&c * y)).collect();
            ws[0] = extra;
        }
        let b = Subspace::span(f, n, &ws).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.is_subspace_of(&b) && b.is_subspace_of(&a));
        prop_assert_eq!(a.annihilator().annihilator(), a);
    }

    #[test]
    fn tensor_is_associative(
        f in field_strategy(),
        a in prop::collection::vec(prop::collection::vec(-2i64..3, 2), 1..3),
        b in prop::collection::vec(prop::collection::vec(-2i64..3, 3), 1..3),
        c in prop::collection::vec(prop::collection::vec(-2i64..3, 2), 1..3),
    ) {
        let (a, b, c) = (
            Matrix::from_i64_rows(f, &a).unwrap(),
            Matrix::from_i64_rows(f, &b).unwrap(),
            Matrix::from_i64_rows(f, &c).unwrap(),
        );
        prop_assert_eq!(a.tensor(&b).unwrap().tensor(&c).unwrap(), a.tensor(&b.tensor(&c).unwrap()).unwrap());
    }

    #[test]
    fn antipode_squares_to_identity(g in small_group(), f in prop_oneof![Just(Field::Rational), Just(Field::Prime(5))]) {
        for h in [group_algebra(f, &g).unwrap(), function_algebra(f, &g).unwrap()] {
            let s = h.antipode();
            prop_assert_eq!(s.mul(s).unwrap(), Matrix::identity(f, h.dim()));
            prop_assert!(validate_hopf(&h).all_passed());
        }
    }

    #[test]
    fn largest_subcoalgebra_is_spanned_by_grouplikes(
        n in 1usize..7,
        coords in prop::collection::vec(prop::collection::vec(-1i64..2, 6), 0..5),
        units in prop::collection::vec(0usize..6, 0..3),
    ) {
        let q = Field::Rational;
        let h = group_algebra(q, &FiniteGroup::cyclic(n)).unwrap();
        let mut vs: Vec<_> = coords.iter().map(|c| c[..n].iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>()).collect();
        for &u in &units {
            vs.push((0..n).map(|i| if i == u % n { q.one() } else { q.zero() }).collect());
        }
        let w = Subspace::span(q, n, &vs).unwrap();
        let (d, trace) = largest_subcoalgebra(&h, &w).unwrap();
        // soundness
        prop_assert!(is_subcoalgebra(&h, &d));
        prop_assert!(d.is_subspace_of(&w));
        // maximality: subcoalgebras of k[G] are spans of group elements
        let grouplikes: Vec<usize> = (0..n).filter(|&i| w.contains(&Subspace::coordinate(q, n, &[i]).basis_vectors()[0])).collect();
        prop_assert_eq!(&d, &Subspace::coordinate(q, n, &grouplikes));
        // termination: the trace strictly decreases and stops at the answer
        prop_assert!(trace.windows(2).all(|p| p[1] < p[0]));
        prop_assert_eq!(*trace.last().unwrap(), d.dim());
        prop_assert!(trace.len() <= w.dim() + 1);
    }

    #[test]
    fn pullback_universal_property(a in 1usize..5, b in 1usize..5, c in 1usize..4, k1 in 0usize..4, k2 in 0usize..4) {
        let (Some(s), Some(t)) = (cyclic_hom(a, c, k1), cyclic_hom(b, c, k2)) else {
            return Ok(());
        };
        let q = Field::Rational;
        let pairs = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).filter(|&(x, y)| s.apply(x) == t.apply(y)).count();
        let pb = pullback_cochopf(&group_algebra_hom(q, &s).unwrap(), &group_algebra_hom(q, &t).unwrap()).unwrap();
        prop_assert_eq!(pb.dim(), pairs);
        let id = pb.mediate(&pb.p1, &pb.p2).unwrap();
        prop_assert_eq!(id.map, Matrix::identity(q, pairs));
        prop_assert!(pb.uniqueness_witness().is_ok());
    }

    #[test]
    fn rep_functor_is_functorial(a in 1usize..5, b in 1usize..5, c in 1usize..5, k1 in 0usize..5, k2 in 0usize..5) {
        let (Some(f), Some(g)) = (cyclic_hom(a, b, k1), cyclic_hom(b, c, k2)) else {
            return Ok(());
        };
        let q = Field::Rational;
        let kc = Arc::new(function_algebra(q, g.cod()).unwrap());
        let m = regular_comodule(&kc);
        let lhs = rep_functor(&f, &rep_functor(&g, &m).unwrap()).unwrap();
        let rhs = rep_functor(&f.then(&g).unwrap(), &m).unwrap();
        prop_assert!(validate_comodule(&lhs).all_passed());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_coalgebras_are_subcoalgebras(a in 1usize..6, b in 1usize..6, k in 0usize..6) {
        let Some(f) = cyclic_hom(a, b, k) else {
            return Ok(());
        };
        let q = Field::Rational;
        let kb = Arc::new(function_algebra(q, f.cod()).unwrap());
        let m = rep_functor(&f, &regular_comodule(&kb)).unwrap();
        let coeff = coefficient_coalgebra(&m).unwrap();
        prop_assert!(is_subcoalgebra(&m.coalgebra, &coeff));
        // pulled-back comodules only see functions constant on cosets of ker f
        let image: std::collections::BTreeSet<usize> = (0..a).map(|x| f.apply(x)).collect();
        prop_assert_eq!(coeff.dim(), image.len());
    }

    #[test]
    fn block_dimensions_sum_to_order(n in 1usize..7, which in 0usize..2) {
        // p ≡ 1 mod n, so F_p splits k(ℤₙ)
        let p = [7u64, 13][which];
        prop_assume!((p - 1) % n as u64 == 0);
        let g = FiniteGroup::cyclic(n);
        let h = function_algebra(Field::Prime(p), &g).unwrap();
        let blocks = cosimple_decomposition(&h, &g).unwrap();
        prop_assert_eq!(blocks.len(), n);
        prop_assert_eq!(blocks.iter().map(|b| b.carrier.dim()).sum::<usize>(), n);
    }
}

#[test]
fn blocks_are_squares_summing_to_order() {
    for (g, p) in [
        (FiniteGroup::cyclic(3), 7),
        (FiniteGroup::symmetric(3), 13),
        (FiniteGroup::dihedral(4), 13),
    ] {
        let h = function_algebra(Field::Prime(p), &g).unwrap();
        let blocks = cosimple_decomposition(&h, &g).unwrap();
        assert_eq!(blocks.iter().map(|b| b.carrier.dim()).sum::<usize>(), g.order());
        assert!(blocks.iter().all(|b| b.carrier.dim() == b.simple_dim * b.simple_dim));
    }
}
