//! Commutative cotrialgebras: internal cocategories in commutative Hopf
//! algebras, built from finite 2-groups through function algebras.
//!
//! Each check is the transpose of the trialgebra check with the same id: maps
//! out of the pushout `Q = H₁ ⊔_{H₀} H₁` come from [`HopfPushout::mediate`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SparseVec};
use crate::hopf::{dualize_hom, function_algebra, hopf_hom_check, validate_hopf, HopfAlgebra, HopfHom};
use crate::hopflimits::{iso_check, pushout_comhopf, HopfPushout};
use crate::report::{first_failure, Report};
use crate::trialg::{maps_equal, vertical_antipode, Trialgebra};
use crate::twogroup::TwoGroup;

#[derive(Clone, Debug)]
pub struct Cotrialgebra {
    pub h0: Arc<HopfAlgebra>,
    pub h1: Arc<HopfAlgebra>,
    pub sigma: HopfHom,
    pub tau: HopfHom,
    pub eps_under: HopfHom,
    /// `H₁ ⊔_{H₀} H₁`, materialized once.
    pub pushout: HopfPushout,
    /// `Δ̲: H₁ → Q`.
    pub delta_under: HopfHom,
    pub source: Option<Arc<TwoGroup>>,
}

impl Cotrialgebra {
    /// `delta_under` is a `dim Q × dim H₁` matrix on the canonical pushout basis.
    pub fn new(sigma: HopfHom, tau: HopfHom, eps_under: HopfHom, delta_under: Matrix) -> Result<Cotrialgebra> {
        let (h0, h1) = (sigma.dom.clone(), sigma.cod.clone());
        if tau.dom != h0 || tau.cod != h1 || eps_under.dom != h1 || eps_under.cod != h0 {
            return Err(Error::Mismatch("structure maps do not share H₀ and H₁".into()));
        }
        let pushout = pushout_comhopf(&sigma, &tau)?;
        let delta_under = HopfHom::new(h1.clone(), pushout.induced().clone(), delta_under)?;
        Ok(Cotrialgebra {
            h0,
            h1,
            sigma,
            tau,
            eps_under,
            pushout,
            delta_under,
            source: None,
        })
    }

    pub fn q(&self) -> &Arc<HopfAlgebra> {
        self.pushout.induced()
    }

    /// `Δ̲` followed by the mediating map of the cocone `(g₁, g₂)` out of `Q`.
    pub fn delta_then(&self, g1: &HopfHom, g2: &HopfHom) -> Result<HopfHom> {
        self.delta_under.then(&self.pushout.mediate(g1, g2)?)
    }

    /// The same data with `Δ̲` followed by the flip `π(a ⊗ b) ↦ π(b ⊗ a)` on
    /// section representatives. Only meaningful as a broken instance.
    pub fn with_swapped_delta(&self) -> Result<Cotrialgebra> {
        let n = self.h1.dim();
        let quo = &self.pushout.quotient.quotient;
        let cols: Vec<SparseVec> = self
            .delta_under
            .columns()
            .iter()
            .map(|c| {
                let lifted = c.remap(|k| quo.section[k]);
                let swapped = lifted.remap(|idx| (idx % n) * n + idx / n);
                self.pushout.quotient.project(&swapped)
            })
            .collect();
        let m = Matrix::from_sparse_columns(self.h1.field(), self.q().dim(), &cols);
        Cotrialgebra::new(self.sigma.clone(), self.tau.clone(), self.eps_under.clone(), m)
    }
}

/// `(k(G₀), k(G₁), k(s), k(t), k(ι), k(∘))`.
pub fn cotrialgebra_from_2group(field: Field, g: &Arc<TwoGroup>) -> Result<Cotrialgebra> {
    let h0 = Arc::new(function_algebra(field, g.g0())?);
    let h1 = Arc::new(function_algebra(field, g.g1())?);
    let sigma = dualize_hom(&g.s_hom()?, &h0, &h1)?;
    let tau = dualize_hom(&g.t_hom()?, &h0, &h1)?;
    let eps_under = dualize_hom(&g.iota_hom()?, &h1, &h0)?;
    let pushout = pushout_comhopf(&sigma, &tau)?;
    let n = h1.dim();
    let mut fibers = vec![SparseVec::new(); n];
    for (a, b) in g.composable_pairs() {
        fibers[g.compose(a, b)?].add_at(a * n + b, &field.one());
    }
    let cols: Vec<SparseVec> = fibers.iter().map(|v| pushout.quotient.project(v)).collect();
    let q = pushout.induced().clone();
    let delta_under = HopfHom::new(
        h1.clone(),
        q.clone(),
        Matrix::from_sparse_columns(field, q.dim(), &cols),
    )?;
    Ok(Cotrialgebra {
        h0,
        h1,
        sigma,
        tau,
        eps_under,
        pushout,
        delta_under,
        source: Some(g.clone()),
    })
}

/// `Δ̲(h) = Σ h⁽¹⁾ σ(ε̲(S(h⁽²⁾))) ⊗ h⁽³⁾`, projected to the pushout.
pub fn underline_delta_formula(co: &Cotrialgebra, h: &SparseVec) -> SparseVec {
    let h1 = &co.h1;
    let n = h1.dim();
    let se = co.eps_under.then(&co.sigma).expect("σ after ε̲");
    let mut v = SparseVec::new();
    for (idx, c) in h1.comul_left(&h1.comul(h)).iter() {
        let (p, q, r) = (idx / (n * n), (idx / n) % n, idx % n);
        let left = h1.mul(&h1.unit_vector(p), &se.apply(&h1.apply_antipode(&h1.unit_vector(q))));
        v.add_scaled(c, &SparseVec::tensor_pair(&left, &h1.unit_vector(r), n));
    }
    co.pushout.quotient.project(&v)
}

/// `h ↦ Σ σ(ε̲(h⁽¹⁾)) S(h⁽²⁾) τ(ε̲(h⁽³⁾))`.
pub fn underline_antipode(co: &Cotrialgebra) -> HopfHom {
    let h1 = &co.h1;
    let n = h1.dim();
    let se = co.eps_under.then(&co.sigma).expect("σ after ε̲").columns();
    let te = co.eps_under.then(&co.tau).expect("τ after ε̲").columns();
    let cols: Vec<SparseVec> = (0..n)
        .map(|i| {
            let mut out = SparseVec::new();
            for (idx, c) in h1.comul_left(h1.delta_basis(i)).iter() {
                let (p, q, r) = (idx / (n * n), (idx / n) % n, idx % n);
                let term = h1.mul(&h1.mul(&se[p], &h1.apply_antipode(&h1.unit_vector(q))), &te[r]);
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

/// Duals of the internal-category diagrams, the structure maps as Hopf maps,
/// the reassociation iso of the two triple pushouts and the formula for `Δ̲`.
pub fn validate_cotrialgebra(co: &Cotrialgebra) -> Result<Report> {
    let mut r = Report::new();
    let (h0, h1) = (&co.h0, &co.h1);
    r.merge("h0", validate_hopf(h0));
    r.merge("h1", validate_hopf(h1));
    r.check(
        "commutative",
        "H₀ and H₁ are commutative",
        (h0.is_commutative() && h1.is_commutative())
            .then_some(())
            .ok_or("not commutative".to_string()),
    );
    r.merge("maps.source", hopf_hom_check(&co.sigma));
    r.merge("maps.target", hopf_hom_check(&co.tau));
    r.merge("maps.unit", hopf_hom_check(&co.eps_under));
    r.merge("maps.composition", hopf_hom_check(&co.delta_under));

    let id0 = HopfHom::identity(h0.clone());
    let id1 = HopfHom::identity(h1.clone());
    let po = &co.pushout;
    r.check(
        "unit.source",
        "ε̲ σ = id",
        maps_equal(co.sigma.then(&co.eps_under), Ok(id0.clone())),
    );
    r.check(
        "unit.target",
        "ε̲ τ = id",
        maps_equal(co.tau.then(&co.eps_under), Ok(id0)),
    );
    r.check(
        "composition.source",
        "Δ̲ σ = i₂ σ",
        maps_equal(co.sigma.then(&co.delta_under), co.sigma.then(&po.i2)),
    );
    r.check(
        "composition.target",
        "Δ̲ τ = i₁ τ",
        maps_equal(co.tau.then(&co.delta_under), co.tau.then(&po.i1)),
    );
    let te = co.eps_under.then(&co.tau)?;
    let se = co.eps_under.then(&co.sigma)?;
    r.check(
        "composition.left_unit",
        "[τε̲, id] Δ̲ = id",
        maps_equal(co.delta_then(&te, &id1), Ok(id1.clone())),
    );
    r.check(
        "composition.right_unit",
        "[id, σε̲] Δ̲ = id",
        maps_equal(co.delta_then(&id1, &se), Ok(id1.clone())),
    );

    // Q ⊔_{H₀} H₁ and H₁ ⊔_{H₀} Q
    let left = pushout_comhopf(&co.sigma.then(&po.i2)?, &co.tau)?;
    let right = pushout_comhopf(&co.sigma, &co.tau.then(&po.i1)?)?;
    let reassoc = po
        .mediate(&right.i1, &po.i1.then(&right.i2)?)
        .and_then(|g1| Ok((g1, po.i2.then(&right.i2)?)))
        .and_then(|(g1, g2)| left.mediate(&g1, &g2));
    match &reassoc {
        Ok(phi) => r.check("triple.iso", "((a,b),c) ↦ (a,(b,c)) is invertible", iso_check(phi)),
        Err(e) => r.check("triple.iso", "((a,b),c) ↦ (a,(b,c)) is invertible", Err(e.to_string())),
    }
    let lhs = co
        .delta_then(&co.delta_under.then(&left.i1)?, &left.i2)
        .and_then(|m| m.then(reassoc.as_ref().map_err(Clone::clone)?));
    let rhs = co.delta_then(&right.i1, &co.delta_under.then(&right.i2)?);
    r.check(
        "composition.associativity",
        "(Δ̲ ⊔ id)Δ̲ = (id ⊔ Δ̲)Δ̲",
        maps_equal(lhs, rhs),
    );

    r.check(
        "composition.sweedler",
        "Δ̲(h) = Σ h⁽¹⁾ σ(ε̲(S(h⁽²⁾))) ⊗ h⁽³⁾",
        first_failure(0..h1.dim(), |&k| {
            (underline_delta_formula(co, &h1.unit_vector(k)) != co.delta_under.map.sparse_column(k))
                .then(|| h1.name(k).to_string())
        }),
    );
    Ok(r)
}

/// The identities of `S̲`, plus `S̲² = id` and, for a 2-group, `S̲ = k(ξ)`.
pub fn antipode_check(co: &Cotrialgebra) -> Result<Report> {
    let sa = underline_antipode(co);
    let mut r = Report::new();
    let id1 = HopfHom::identity(co.h1.clone());
    let po = &co.pushout;
    r.check(
        "antipode.target_after",
        "S̲ τ = σ",
        maps_equal(co.tau.then(&sa), Ok(co.sigma.clone())),
    );
    r.check(
        "antipode.source_after",
        "S̲ σ = τ",
        maps_equal(co.sigma.then(&sa), Ok(co.tau.clone())),
    );
    r.check(
        "antipode.left_inverse",
        "[S̲, id] Δ̲ = σ ε̲",
        maps_equal(co.delta_then(&sa, &id1), co.eps_under.then(&co.sigma)),
    );
    r.check(
        "antipode.right_inverse",
        "[id, S̲] Δ̲ = τ ε̲",
        maps_equal(co.delta_then(&id1, &sa), co.eps_under.then(&co.tau)),
    );
    let flipped = co.delta_then(&sa.then(&po.i2)?, &sa.then(&po.i1)?);
    r.check(
        "antipode.anti_composition",
        "Δ̲ S̲ = [i₂S̲, i₁S̲] Δ̲",
        maps_equal(sa.then(&co.delta_under), flipped),
    );
    r.check("antipode.involution", "S̲ S̲ = id", maps_equal(sa.then(&sa), Ok(id1)));
    if let Some(g) = &co.source {
        let xi = dualize_hom(&g.vertical_inverse_hom()?, &co.h1, &co.h1);
        r.check("antipode.xi", "S̲ = k(ξ)", maps_equal(Ok(sa), xi));
    }
    Ok(r)
}

/// Structure maps are transposes under the δ-pairing, the pushout basis is the
/// pullback basis, and every shared check id has the same outcome.
pub fn duality_check(tri: &Trialgebra, co: &Cotrialgebra) -> Result<Report> {
    let mut r = Report::new();
    let transpose = |what: &str, a: &Matrix, b: &Matrix| -> Result<(), String> {
        (a.transpose() == *b)
            .then_some(())
            .ok_or_else(|| format!("{what} is not the transpose"))
    };
    r.check("dual.source", "σ = sᵀ", transpose("σ", &tri.s.map, &co.sigma.map));
    r.check("dual.target", "τ = tᵀ", transpose("τ", &tri.t.map, &co.tau.map));
    r.check("dual.unit", "ε̲ = ιᵀ", transpose("ε̲", &tri.iota.map, &co.eps_under.map));
    r.check(
        "dual.basis",
        "pushout section = pullback pivots",
        (co.pushout.quotient.quotient.section == tri.pullback.sub.carrier.pivots())
            .then_some(())
            .ok_or_else(|| "bases differ".to_string()),
    );
    r.check(
        "dual.composition",
        "Δ̲ = ∘ᵀ",
        transpose("Δ̲", &tri.circ.map, &co.delta_under.map),
    );
    r.check(
        "dual.antipode",
        "S̲ (cotrialgebra) = S̲ᵀ (trialgebra)",
        transpose("S̲", &vertical_antipode(tri).map, &underline_antipode(co).map),
    );
    let mut tr = crate::trialg::validate_trialgebra(tri)?;
    tr.merge("", crate::trialg::antipode_check(tri)?);
    let mut cr = validate_cotrialgebra(co)?;
    cr.merge("", antipode_check(co)?);
    let shared: Vec<_> = tr.records().iter().filter(|x| cr.get(&x.id).is_some()).collect();
    r.check(
        "dual.checks",
        "each check passes iff its transpose does",
        if shared.is_empty() {
            Err("no shared checks".into())
        } else {
            first_failure(shared.iter(), |x| (cr.passed(&x.id) != x.passed).then(|| x.id.clone()))
        },
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trialg::trialgebra_from_2group;
    use crate::xmod::instances;

    fn both(x: &crate::xmod::CrossedModule) -> (Trialgebra, Cotrialgebra) {
        let g = Arc::new(x.to_2group().unwrap());
        (
            trialgebra_from_2group(Field::Rational, &g).unwrap(),
            cotrialgebra_from_2group(Field::Rational, &g).unwrap(),
        )
    }

    #[test]
    fn all_checks_pass_and_dualize() {
        for x in [
            instances::aut_z3(),
            instances::z2_inverting_z3(),
            instances::trivial(),
            instances::z4_over_trivial(),
            instances::identity_cyclic(3),
        ] {
            let (t, c) = both(&x);
            let v = validate_cotrialgebra(&c).unwrap();
            assert!(v.all_passed(), "{:?}", v.failures().collect::<Vec<_>>());
            let a = antipode_check(&c).unwrap();
            assert!(a.all_passed(), "{:?}", a.failures().collect::<Vec<_>>());
            let d = duality_check(&t, &c).unwrap();
            assert!(d.all_passed(), "{:?}", d.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn dimensions() {
        let (_, c) = both(&instances::aut_z3());
        assert_eq!((c.h1.dim(), c.q().dim()), (6, 18));
        let (_, c) = both(&instances::trivial());
        assert_eq!((c.h0.dim(), c.h1.dim(), c.q().dim()), (1, 1, 1));
        assert_eq!(underline_delta_formula(&c, c.h1.unit()), *c.q().unit());
    }

    #[test]
    fn swapped_delta_is_caught() {
        let (_, c) = both(&instances::identity_cyclic(3));
        assert_ne!(c.sigma.map, c.tau.map);
        let bad = c.with_swapped_delta().unwrap();
        let r = validate_cotrialgebra(&bad).unwrap();
        let failed: Vec<_> = r.failures().map(|f| f.id.as_str()).collect();
        assert!(
            failed
                .iter()
                .any(|id| id.starts_with("composition.associativity") || id.contains("unit")),
            "{failed:?}"
        );
    }
}
