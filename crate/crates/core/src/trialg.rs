//! Cocommutative trialgebras: internal categories in cocommutative Hopf algebras,
//! built from 2-groups by linearization.
//!
//! Every diagram is checked as an equality of linear maps. Maps into the
//! pullback `P = H₁ ×_{H₀} H₁` are produced by [`HopfPullback::mediate`], so
//! `(f₁ ⊗ f₂)Δ` is only ever formed for cones that actually land in `P`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SparseVec};
use crate::hopf::{group_algebra, hopf_hom_check, linearize_hom, validate_hopf, HopfAlgebra, HopfHom};
use crate::hopflimits::{pullback_cochopf, HopfPullback};
use crate::report::{first_failure, Report};
use crate::twogroup::{InternalFunctor, InternalNatTransf, TwoGroup};

#[derive(Clone, Debug)]
pub struct Trialgebra {
    pub h0: Arc<HopfAlgebra>,
    pub h1: Arc<HopfAlgebra>,
    pub s: HopfHom,
    pub t: HopfHom,
    pub iota: HopfHom,
    /// `H₁ ×_{H₀} H₁`, materialized once.
    pub pullback: HopfPullback,
    /// `∘: P → H₁`.
    pub circ: HopfHom,
    /// The 2-group this was linearized from, if any.
    pub source: Option<Arc<TwoGroup>>,
}

impl Trialgebra {
    /// `circ` is given as an `dim H₁ × dim P` matrix on the canonical pullback basis.
    pub fn new(s: HopfHom, t: HopfHom, iota: HopfHom, circ: Matrix) -> Result<Trialgebra> {
        let (h1, h0) = (s.dom.clone(), s.cod.clone());
        if t.dom != h1 || t.cod != h0 || iota.dom != h0 || iota.cod != h1 {
            return Err(Error::Mismatch("structure maps do not share H₀ and H₁".into()));
        }
        let pullback = pullback_cochopf(&s, &t)?;
        let circ = HopfHom::new(pullback.sub.induced.clone(), h1.clone(), circ)?;
        Ok(Trialgebra {
            h0,
            h1,
            s,
            t,
            iota,
            pullback,
            circ,
            source: None,
        })
    }

    /// The pullback algebra `P`.
    pub fn p(&self) -> &Arc<HopfAlgebra> {
        &self.pullback.sub.induced
    }

    /// `∘` applied to a vector of `H₁ ⊗ H₁`, if it lies in the pullback.
    pub fn circ_ambient(&self, x: &SparseVec) -> Option<SparseVec> {
        self.pullback.sub.coordinates(x).map(|c| self.circ.apply(&c))
    }

    /// `∘(f₁ ⊗ f₂)Δ` for a cone `f₁, f₂: D → H₁` with `s f₁ = t f₂`.
    pub fn circ_of(&self, f1: &HopfHom, f2: &HopfHom) -> Result<HopfHom> {
        self.pullback.mediate(f1, f2)?.then(&self.circ)
    }
}

/// `(k[G₀], k[G₁], k[s], k[t], k[ι], k[∘])`.
pub fn trialgebra_from_2group(field: Field, g: &Arc<TwoGroup>) -> Result<Trialgebra> {
    let h0 = Arc::new(group_algebra(field, g.g0())?);
    let h1 = Arc::new(group_algebra(field, g.g1())?);
    let s = linearize_hom(&g.s_hom()?, &h1, &h0)?;
    let t = linearize_hom(&g.t_hom()?, &h1, &h0)?;
    let iota = linearize_hom(&g.iota_hom()?, &h0, &h1)?;
    let pullback = pullback_cochopf(&s, &t)?;
    let n = h1.dim();
    let mut cols = Vec::with_capacity(pullback.dim());
    for k in 0..pullback.dim() {
        let b = SparseVec::from_dense(pullback.sub.carrier.basis().row(k));
        let mut c = SparseVec::new();
        for (idx, x) in b.iter() {
            c.add_at(g.compose(idx / n, idx % n)?, x);
        }
        cols.push(c);
    }
    let p = pullback.sub.induced.clone();
    let circ = HopfHom::new(p, h1.clone(), Matrix::from_sparse_columns(field, n, &cols))?;
    Ok(Trialgebra {
        h0,
        h1,
        s,
        t,
        iota,
        pullback,
        circ,
        source: Some(g.clone()),
    })
}

/// `∘(h ⊗ h̃) = Σ h⁽¹⁾ S(ι(s(h⁽²⁾))) h̃` on a vector of `H₁ ⊗ H₁`.
pub fn circ_sweedler(tri: &Trialgebra, v: &SparseVec) -> SparseVec {
    let h1 = &tri.h1;
    let n = h1.dim();
    let (sc, ic) = (tri.s.columns(), tri.iota.columns());
    let mut out = SparseVec::new();
    for (idx, c) in v.iter() {
        let (i, j) = (idx / n, idx % n);
        let rhs = h1.unit_vector(j);
        for (pq, d) in h1.delta_basis(i).iter() {
            let (p, q) = (pq / n, pq % n);
            let mut mid = SparseVec::new();
            for (x, a) in sc[q].iter() {
                mid.add_scaled(a, &ic[x]);
            }
            let term = h1.mul(&h1.mul(&h1.unit_vector(p), &h1.apply_antipode(&mid)), &rhs);
            out.add_scaled(&(c * d), &term);
        }
    }
    out
}

/// `h ↦ Σ ι(s(h⁽¹⁾)) S(h⁽²⁾) ι(t(h⁽³⁾))`.
pub fn vertical_antipode(tri: &Trialgebra) -> HopfHom {
    let h1 = &tri.h1;
    let n = h1.dim();
    let is = tri.s.then(&tri.iota).expect("ι after s").columns();
    let it = tri.t.then(&tri.iota).expect("ι after t").columns();
    let cols: Vec<SparseVec> = (0..n)
        .map(|i| {
            let d2 = h1.comul_left(h1.delta_basis(i));
            let mut out = SparseVec::new();
            for (idx, c) in d2.iter() {
                let (p, q, r) = (idx / (n * n), (idx / n) % n, idx % n);
                let term = h1.mul(&h1.mul(&is[p], &h1.apply_antipode(&h1.unit_vector(q))), &it[r]);
                out.add_scaled(c, &term);
            }
            out
        })
        .collect();
    HopfHom::new(
        h1.clone(),
        h1.clone(),
        Matrix::from_sparse_columns(h1.field(), n, &cols),
    )
    .expect("square matrix")
}

pub(crate) fn maps_equal(lhs: Result<HopfHom>, rhs: Result<HopfHom>) -> Result<(), String> {
    let (l, r) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return Err(e.to_string()),
    };
    if l.map.rows() != r.map.rows() || l.map.cols() != r.map.cols() {
        return Err("maps have different shapes".into());
    }
    first_failure(0..l.map.cols(), |&k| {
        (l.map.sparse_column(k) != r.map.sparse_column(k)).then(|| l.dom.name(k).to_string())
    })
}

/// The internal-category diagrams, the four structure maps as Hopf maps, the
/// reassociation iso of the triple pullbacks and the Sweedler formula for `∘`.
pub fn validate_trialgebra(tri: &Trialgebra) -> Result<Report> {
    let mut r = Report::new();
    let (h0, h1) = (&tri.h0, &tri.h1);
    r.merge("h0", validate_hopf(h0));
    r.merge("h1", validate_hopf(h1));
    r.check(
        "cocommutative",
        "H₀ and H₁ are cocommutative",
        (h0.is_cocommutative() && h1.is_cocommutative())
            .then_some(())
            .ok_or("not cocommutative".to_string()),
    );
    r.merge("maps.source", hopf_hom_check(&tri.s));
    r.merge("maps.target", hopf_hom_check(&tri.t));
    r.merge("maps.unit", hopf_hom_check(&tri.iota));
    r.merge("maps.composition", hopf_hom_check(&tri.circ));

    let id0 = HopfHom::identity(h0.clone());
    let id1 = HopfHom::identity(h1.clone());
    let pb = &tri.pullback;
    r.check(
        "unit.source",
        "s ι = id",
        maps_equal(tri.iota.then(&tri.s), Ok(id0.clone())),
    );
    r.check("unit.target", "t ι = id", maps_equal(tri.iota.then(&tri.t), Ok(id0)));
    r.check(
        "composition.source",
        "s ∘ = s p₂",
        maps_equal(tri.circ.then(&tri.s), pb.p2.then(&tri.s)),
    );
    r.check(
        "composition.target",
        "t ∘ = t p₁",
        maps_equal(tri.circ.then(&tri.t), pb.p1.then(&tri.t)),
    );
    let it = tri.t.then(&tri.iota)?;
    let is = tri.s.then(&tri.iota)?;
    r.check(
        "composition.left_unit",
        "∘(ιt ⊗ id)Δ = id",
        maps_equal(tri.circ_of(&it, &id1), Ok(id1.clone())),
    );
    r.check(
        "composition.right_unit",
        "∘(id ⊗ ιs)Δ = id",
        maps_equal(tri.circ_of(&id1, &is), Ok(id1.clone())),
    );

    // P ×_{H₀} H₁ and H₁ ×_{H₀} P
    let left = pullback_cochopf(&pb.p2.then(&tri.s)?, &tri.t)?;
    let right = pullback_cochopf(&tri.s, &pb.p1.then(&tri.t)?)?;
    let reassoc = right.mediate(&left.p1.then(&pb.p1)?, &pb.mediate(&left.p1.then(&pb.p2)?, &left.p2)?);
    match &reassoc {
        Ok(phi) => r.check(
            "triple.iso",
            "((a,b),c) ↦ (a,(b,c)) is invertible",
            crate::hopflimits::iso_check(phi),
        ),
        Err(e) => r.check("triple.iso", "((a,b),c) ↦ (a,(b,c)) is invertible", Err(e.to_string())),
    }
    let lhs = pb
        .mediate(&left.p1.then(&tri.circ)?, &left.p2)
        .and_then(|m| m.then(&tri.circ));
    let rhs = reassoc
        .and_then(|phi| Ok((phi, pb.mediate(&right.p1, &right.p2.then(&tri.circ)?)?)))
        .and_then(|(phi, m)| phi.then(&m)?.then(&tri.circ));
    r.check(
        "composition.associativity",
        "∘(∘ × id) = ∘(id × ∘)",
        maps_equal(lhs, rhs),
    );

    r.check(
        "local_unit.left",
        "∘(ι(t(h)) ⊗ h) = ε(h)h",
        first_failure(0..h1.dim(), |&k| {
            let e = h1.unit_vector(k);
            let x = SparseVec::tensor_pair(&it.apply(&e), &e, h1.dim());
            (tri.circ_ambient(&x) != Some(e.scaled(&h1.counit()[k]))).then(|| h1.name(k).to_string())
        }),
    );
    r.check(
        "local_unit.right",
        "∘(h ⊗ ι(s(h))) = ε(h)h",
        first_failure(0..h1.dim(), |&k| {
            let e = h1.unit_vector(k);
            let x = SparseVec::tensor_pair(&e, &is.apply(&e), h1.dim());
            (tri.circ_ambient(&x) != Some(e.scaled(&h1.counit()[k]))).then(|| h1.name(k).to_string())
        }),
    );
    let incl = pb.sub.inclusion.columns();
    r.check(
        "composition.sweedler",
        "∘(h ⊗ h̃) = Σ h⁽¹⁾ S(ι(s(h⁽²⁾))) h̃",
        first_failure(0..pb.dim(), |&k| {
            (circ_sweedler(tri, &incl[k]) != tri.circ.map.sparse_column(k)).then(|| tri.p().name(k).to_string())
        }),
    );
    Ok(r)
}

/// The identities of the vertical antipode `S̲`, plus `S̲² = id` and, for a
/// linearized 2-group, `S̲ = k[ξ]`.
pub fn antipode_check(tri: &Trialgebra) -> Result<Report> {
    let sa = vertical_antipode(tri);
    let mut r = Report::new();
    let id1 = HopfHom::identity(tri.h1.clone());
    r.check(
        "antipode.target_after",
        "t S̲ = s",
        maps_equal(sa.then(&tri.t), Ok(tri.s.clone())),
    );
    r.check(
        "antipode.source_after",
        "s S̲ = t",
        maps_equal(sa.then(&tri.s), Ok(tri.t.clone())),
    );
    r.check(
        "antipode.left_inverse",
        "Σ ∘(S̲(h⁽¹⁾) ⊗ h⁽²⁾) = ι(s(h))",
        maps_equal(tri.circ_of(&sa, &id1), tri.s.then(&tri.iota)),
    );
    r.check(
        "antipode.right_inverse",
        "Σ ∘(h⁽¹⁾ ⊗ S̲(h⁽²⁾)) = ι(t(h))",
        maps_equal(tri.circ_of(&id1, &sa), tri.t.then(&tri.iota)),
    );
    let pb = &tri.pullback;
    let flipped = pb.mediate(&pb.p2.then(&sa)?, &pb.p1.then(&sa)?);
    r.check(
        "antipode.anti_composition",
        "S̲(∘(h ⊗ h̃)) = ∘(S̲(h̃) ⊗ S̲(h))",
        maps_equal(tri.circ.then(&sa), flipped.and_then(|f| f.then(&tri.circ))),
    );
    r.check("antipode.involution", "S̲ S̲ = id", maps_equal(sa.then(&sa), Ok(id1)));
    if let Some(g) = &tri.source {
        let xi = linearize_hom(&g.vertical_inverse_hom()?, &tri.h1, &tri.h1);
        r.check("antipode.xi", "S̲ = k[ξ]", maps_equal(Ok(sa), xi));
    }
    Ok(r)
}

/// `∘` is multiplicative on `P`: `(h₁h₂) ∘ (h₁′h₂′) = (h₁ ∘ h₁′)(h₂ ∘ h₂′)`, plus the
/// identity-only instance `(ι(x)ι(y)) ∘ (ι(x)ι(y)) = ι(xy)`.
pub fn interchange_check(tri: &Trialgebra) -> Report {
    let p = tri.p();
    let h1 = &tri.h1;
    let cols = tri.circ.columns();
    let mut r = Report::new();
    r.check(
        "interchange",
        "(h₁·h₂)∘(h₁′·h₂′) = (h₁∘h₁′)·(h₂∘h₂′)",
        first_failure(
            (0..p.dim()).flat_map(|i| (0..p.dim()).map(move |j| (i, j))),
            |&(i, j)| {
                (tri.circ.apply(p.mu_basis(i, j)) != h1.mul(&cols[i], &cols[j]))
                    .then(|| format!("{} · {}", p.name(i), p.name(j)))
            },
        ),
    );
    let h0 = &tri.h0;
    let ic = tri.iota.columns();
    r.check(
        "interchange.identities",
        "(ι(x)ι(y))∘(ι(x)ι(y)) = ι(xy)",
        first_failure(
            (0..h0.dim()).flat_map(|x| (0..h0.dim()).map(move |y| (x, y))),
            |&(x, y)| {
                let prod = h1.mul(&ic[x], &ic[y]);
                let v = SparseVec::tensor_pair(&prod, &prod, h1.dim());
                (tri.circ_ambient(&v) != Some(tri.iota.apply(h0.mu_basis(x, y))))
                    .then(|| format!("({}, {})", h0.name(x), h0.name(y)))
            },
        ),
    );
    r
}

/// When `H₀ ≅ k` the composition is total and coincides with the product.
pub fn eckmann_hilton_check(tri: &Trialgebra) -> Result<Report> {
    if tri.h0.dim() != 1 {
        return Err(Error::Precondition(format!(
            "Eckmann–Hilton needs dim H₀ = 1, found {}; use interchange_check",
            tri.h0.dim()
        )));
    }
    let h1 = &tri.h1;
    let n = h1.dim();
    let mut r = Report::new();
    r.check(
        "eckmann_hilton.total",
        "P = H₁ ⊗ H₁",
        (tri.pullback.dim() == n * n)
            .then_some(())
            .ok_or_else(|| format!("dim P = {}", tri.pullback.dim())),
    );
    let one = tri.iota.apply(tri.h0.unit());
    r.check(
        "eckmann_hilton.unit",
        "ι(1) is a two-sided ∘-unit",
        first_failure(0..n, |&k| {
            let e = h1.unit_vector(k);
            let ok = tri.circ_ambient(&SparseVec::tensor_pair(&one, &e, n)) == Some(e.clone())
                && tri.circ_ambient(&SparseVec::tensor_pair(&e, &one, n)) == Some(e.clone());
            (!ok).then(|| h1.name(k).to_string())
        }),
    );
    r.check(
        "eckmann_hilton.coincide",
        "∘(h⊗h′) = ∘(h′⊗h) = hh′ = h′h",
        first_failure((0..n).flat_map(|i| (0..n).map(move |j| (i, j))), |&(i, j)| {
            let (a, b) = (h1.unit_vector(i), h1.unit_vector(j));
            let ab = h1.mul(&a, &b);
            let ok = tri.circ_ambient(&SparseVec::tensor_pair(&a, &b, n)).as_ref() == Some(&ab)
                && tri.circ_ambient(&SparseVec::tensor_pair(&b, &a, n)).as_ref() == Some(&ab)
                && h1.mul(&b, &a) == ab;
            (!ok).then(|| format!("({}, {})", h1.name(i), h1.name(j)))
        }),
    );
    r.check(
        "eckmann_hilton.commutative",
        "H₁ is commutative",
        first_failure((0..n).flat_map(|i| (0..n).map(move |j| (i, j))), |&(i, j)| {
            (h1.mu_basis(i, j) != h1.mu_basis(j, i)).then(|| format!("({}, {})", h1.name(i), h1.name(j)))
        }),
    );
    Ok(r)
}

/// `(k[F₀], k[F₁])` with the functor squares checked at the Hopf level.
pub fn trialgebra_hom_from_2group_hom(
    f: &InternalFunctor,
    src: &Trialgebra,
    dst: &Trialgebra,
) -> Result<(HopfHom, HopfHom, Report)> {
    let (g, h) = (&f.src, &f.dst);
    let f0 = crate::fingrp::GroupHom::new(g.g0().clone(), h.g0().clone(), f.f0.clone())?;
    let f1 = crate::fingrp::GroupHom::new(g.g1().clone(), h.g1().clone(), f.f1.clone())?;
    let k0 = linearize_hom(&f0, &src.h0, &dst.h0)?;
    let k1 = linearize_hom(&f1, &src.h1, &dst.h1)?;
    let mut r = Report::new();
    r.merge("hom.f0", hopf_hom_check(&k0));
    r.merge("hom.f1", hopf_hom_check(&k1));
    r.check(
        "square.source",
        "s′ F₁ = F₀ s",
        maps_equal(k1.then(&dst.s), src.s.then(&k0)),
    );
    r.check(
        "square.target",
        "t′ F₁ = F₀ t",
        maps_equal(k1.then(&dst.t), src.t.then(&k0)),
    );
    r.check(
        "square.identity",
        "F₁ ι = ι′ F₀",
        maps_equal(src.iota.then(&k1), k0.then(&dst.iota)),
    );
    let pb = &src.pullback;
    let rhs = dst.circ_of(&pb.p1.then(&k1)?, &pb.p2.then(&k1)?);
    r.check(
        "square.composition",
        "F₁ ∘ = ∘′ (F₁ × F₁)",
        maps_equal(src.circ.then(&k1), rhs),
    );
    Ok((k0, k1, r))
}

/// `k[η]: H₀ → H₁′` with the source, target and naturality laws at the Hopf level.
pub fn trialgebra_2hom_check(n: &InternalNatTransf, src: &Trialgebra, dst: &Trialgebra) -> Result<(HopfHom, Report)> {
    let g = &n.source.src;
    let h = &n.source.dst;
    let eta = crate::fingrp::GroupHom::new(g.g0().clone(), h.g1().clone(), n.eta.clone())?;
    let k_eta = linearize_hom(&eta, &src.h0, &dst.h1)?;
    let (fa, fb) = (&n.source, &n.target);
    let (_, f1, _) = trialgebra_hom_from_2group_hom(fa, src, dst)?;
    let (_, ft1, _) = trialgebra_hom_from_2group_hom(fb, src, dst)?;
    let f0 = linearize_hom(
        &crate::fingrp::GroupHom::new(g.g0().clone(), h.g0().clone(), fa.f0.clone())?,
        &src.h0,
        &dst.h0,
    )?;
    let ft0 = linearize_hom(
        &crate::fingrp::GroupHom::new(g.g0().clone(), h.g0().clone(), fb.f0.clone())?,
        &src.h0,
        &dst.h0,
    )?;
    let mut r = Report::new();
    r.merge("homomorphism", hopf_hom_check(&k_eta));
    r.check("source", "s′ k[η] = k[F₀]", maps_equal(k_eta.then(&dst.s), Ok(f0)));
    r.check("target", "t′ k[η] = k[F̃₀]", maps_equal(k_eta.then(&dst.t), Ok(ft0)));
    let lhs = dst.circ_of(&ft1, &src.s.then(&k_eta)?);
    let rhs = dst.circ_of(&src.t.then(&k_eta)?, &f1);
    r.check("naturality", "F̃₁(a) ∘ η(s a) = η(t a) ∘ F₁(a)", maps_equal(lhs, rhs));
    Ok((k_eta, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::xmod::{instances, XModHom};

    fn tri(x: &crate::xmod::CrossedModule) -> Trialgebra {
        trialgebra_from_2group(Field::Rational, &Arc::new(x.to_2group().unwrap())).unwrap()
    }

    #[test]
    fn dimensions() {
        let t = tri(&instances::aut_z3());
        assert_eq!((t.h0.dim(), t.h1.dim(), t.pullback.dim()), (2, 6, 18));
        let t = tri(&instances::z2_inverting_z3());
        assert_eq!(t.pullback.dim(), 18);
        let t = tri(&instances::trivial());
        assert_eq!((t.h0.dim(), t.h1.dim(), t.pullback.dim()), (1, 1, 1));
    }

    #[test]
    fn all_checks_pass() {
        for x in [
            instances::aut_z3(),
            instances::z2_inverting_z3(),
            instances::trivial(),
            instances::z4_over_trivial(),
            instances::identity_cyclic(3),
        ] {
            let t = tri(&x);
            let r = validate_trialgebra(&t).unwrap();
            assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
            let a = antipode_check(&t).unwrap();
            assert!(a.all_passed(), "{:?}", a.failures().collect::<Vec<_>>());
            assert!(interchange_check(&t).all_passed());
        }
    }

    #[test]
    fn eckmann_hilton() {
        let t = tri(&instances::z4_over_trivial());
        assert!(eckmann_hilton_check(&t).unwrap().all_passed());
        assert!(eckmann_hilton_check(&tri(&instances::trivial())).unwrap().all_passed());
        assert!(matches!(
            eckmann_hilton_check(&tri(&instances::aut_z3())),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sweedler_on_group_likes() {
        let t = tri(&instances::aut_z3());
        let g = t.source.clone().unwrap();
        for (a, b) in g.composable_pairs() {
            let v = SparseVec::unit(Field::Rational, a * 6 + b);
            assert_eq!(
                circ_sweedler(&t, &v),
                SparseVec::unit(Field::Rational, g.compose(a, b).unwrap())
            );
        }
    }

    #[test]
    fn antipode_is_xi() {
        let t = tri(&instances::aut_z3());
        let g = t.source.clone().unwrap();
        let sa = vertical_antipode(&t);
        for a in g.g1().elements() {
            assert_eq!(
                sa.map.sparse_column(a),
                SparseVec::unit(Field::Rational, g.vertical_inverse(a))
            );
        }
    }

    #[test]
    fn morphisms() {
        let x = Arc::new(instances::z4_over_trivial());
        let g = Arc::new(x.to_2group().unwrap());
        let t = trialgebra_from_2group(Field::Rational, &g).unwrap();
        let f = InternalFunctor::identity(g.clone());
        let (k0, k1, r) = trialgebra_hom_from_2group_hom(&f, &t, &t).unwrap();
        assert!(r.all_passed());
        assert!(k0.map == Matrix::identity(Field::Rational, 1) && k1.map == Matrix::identity(Field::Rational, 4));
        let id = XModHom::identity(x.clone())
            .to_internal_functor(g.clone(), g.clone())
            .unwrap();
        let n = InternalNatTransf::identity(&id);
        let (_, r) = trialgebra_2hom_check(&n, &t, &t).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }
}
