//! Finite limits of cocommutative Hopf algebras (equalizers and pullbacks as
//! largest subcoalgebras) and finite colimits of commutative Hopf algebras
//! (coequalizers and pushouts as quotients by generated ideals).

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{EchelonBasis, Field, Matrix, Quotient, Scalar, SparseVec, Subspace};
use crate::fingrp::{pullback, GroupHom};
use crate::hopf::{
    dualize_hom, function_algebra, group_algebra, hopf_hom_check, tensor_apply, tensor_hopf, HopfAlgebra, HopfHom,
    HopfParts,
};
use crate::report::{first_failure, Report};

/// Tensor products beyond this dimension are refused: the dense subspace
/// computations would dominate everything else.
pub const MAX_TENSOR_DIM: usize = 1500;

fn sparse_basis(s: &Subspace) -> Vec<SparseVec> {
    (0..s.dim()).map(|i| SparseVec::from_dense(s.basis().row(i))).collect()
}

/// Coordinates of `x` in a subspace with the given pivots and sparse basis.
fn coords_in(pivots: &[usize], basis: &[SparseVec], x: &SparseVec) -> Option<SparseVec> {
    let mut c = SparseVec::new();
    let mut rebuilt = SparseVec::new();
    for (k, &p) in pivots.iter().enumerate() {
        if let Some(v) = x.get(p) {
            c.add_at(k, v);
            rebuilt.add_scaled(v, &basis[k]);
        }
    }
    (rebuilt == *x).then_some(c)
}

/// Coordinates of `x ∈ V ⊗ V` in `W ⊗ W`.
fn coords_in_square(n: usize, pivots: &[usize], basis: &[SparseVec], x: &SparseVec) -> Option<SparseVec> {
    let d = pivots.len();
    let mut c = SparseVec::new();
    let mut rebuilt = SparseVec::new();
    for (k, &p) in pivots.iter().enumerate() {
        for (l, &q) in pivots.iter().enumerate() {
            if let Some(v) = x.get(p * n + q) {
                c.add_at(k * d + l, v);
                for (i, a) in basis[k].iter() {
                    let va = v * a;
                    for (j, b) in basis[l].iter() {
                        rebuilt.add_at(i * n + j, &(&va * b));
                    }
                }
            }
        }
    }
    (rebuilt == *x).then_some(c)
}

/// True when `Δ(s) ⊆ s ⊗ s`.
pub fn is_subcoalgebra(c: &HopfAlgebra, s: &Subspace) -> bool {
    let basis = sparse_basis(s);
    basis
        .iter()
        .all(|b| coords_in_square(c.dim(), s.pivots(), &basis, &c.comul(b)).is_some())
}

/// Greatest fixpoint of `D ↦ {v ∈ D : Δ(v) ∈ D ⊗ D}` starting from `w`, with the
/// dimension after each round.
pub fn largest_subcoalgebra(c: &HopfAlgebra, w: &Subspace) -> Result<(Subspace, Vec<usize>)> {
    let n = c.dim();
    if w.ambient_dim() != n {
        return Err(Error::Mismatch(format!(
            "subspace of k^{} in a coalgebra of dimension {n}",
            w.ambient_dim()
        )));
    }
    let field = c.field();
    let mut d = w.clone();
    let mut trace = vec![d.dim()];
    while d.dim() > 0 && d.dim() < n {
        let dim = d.dim();
        let m = n - dim;
        let proj = Quotient::new(&d).projection.sparse_columns();
        let basis = sparse_basis(&d);
        // rows of the map D → (V/D ⊗ V) ⊕ (V ⊗ V/D), indexed by output coordinate
        let mut rows: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (k, b) in basis.iter().enumerate() {
            let delta = c.comul(b);
            let mut out = SparseVec::new();
            for (idx, x) in delta.iter() {
                let (p, q) = (idx / n, idx % n);
                for (i, a) in proj[p].iter() {
                    out.add_at(i * n + q, &(x * a));
                }
                for (j, a) in proj[q].iter() {
                    out.add_at(m * n + p * m + j, &(x * a));
                }
            }
            for (r, x) in out.iter() {
                rows.entry(r).or_default().push((k, x.clone()));
            }
        }
        let mut ech = EchelonBasis::new(field, dim);
        for entries in rows.values() {
            let mut v = vec![field.zero(); dim];
            for (k, x) in entries {
                v[*k] = x.clone();
            }
            ech.insert(v);
            if ech.rank() == dim {
                break;
            }
        }
        let kernel = ech.into_subspace().annihilator();
        let vectors: Vec<Vec<Scalar>> = kernel
            .basis_vectors()
            .iter()
            .map(|z| {
                let mut v = SparseVec::new();
                for (k, zk) in z.iter().enumerate() {
                    v.add_scaled(zk, &basis[k]);
                }
                v.to_dense(field, n)
            })
            .collect();
        let next = Subspace::span(field, n, &vectors)?;
        if next.dim() == dim {
            break;
        }
        d = next;
        trace.push(d.dim());
    }
    Ok((d, trace))
}

/// A sub-Hopf algebra with its induced structure on the canonical basis.
#[derive(Clone, Debug)]
pub struct SubHopf {
    pub ambient: Arc<HopfAlgebra>,
    pub carrier: Subspace,
    pub induced: Arc<HopfAlgebra>,
    pub inclusion: HopfHom,
    /// Dimensions visited by the subcoalgebra fixpoint that produced the carrier.
    pub trace: Vec<usize>,
}

impl SubHopf {
    /// Induce the structure on `carrier`; errors if it is not closed under
    /// `μ`, `Δ`, `S` or misses the unit.
    pub fn new(ambient: Arc<HopfAlgebra>, carrier: Subspace) -> Result<SubHopf> {
        let n = ambient.dim();
        let d = carrier.dim();
        let field = ambient.field();
        let basis = sparse_basis(&carrier);
        let piv = carrier.pivots();
        let not_closed = |what: &str| Error::invalid("sub-Hopf algebra", format!("carrier is not closed under {what}"));
        let mut mu = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mu.push(coords_in(piv, &basis, &ambient.mul(&basis[i], &basis[j])).ok_or_else(|| not_closed("μ"))?);
            }
        }
        let mut delta = Vec::with_capacity(d);
        for b in &basis {
            delta.push(coords_in_square(n, piv, &basis, &ambient.comul(b)).ok_or_else(|| not_closed("Δ"))?);
        }
        let unit = coords_in(piv, &basis, ambient.unit()).ok_or_else(|| not_closed("η"))?;
        let counit = basis.iter().map(|b| ambient.counit_of(b)).collect();
        let mut s_cols = Vec::with_capacity(d);
        for b in &basis {
            s_cols.push(coords_in(piv, &basis, &ambient.apply_antipode(b)).ok_or_else(|| not_closed("S"))?);
        }
        let names = basis
            .iter()
            .enumerate()
            .map(|(k, b)| match b.iter().next() {
                Some((i, x)) if b.len() == 1 && x.is_one() => ambient.name(i).to_string(),
                _ => format!("b{k}"),
            })
            .collect();
        let induced = Arc::new(HopfAlgebra::from_parts(HopfParts {
            field,
            names,
            mu,
            unit,
            delta,
            counit,
            antipode: Matrix::from_sparse_columns(field, d, &s_cols),
            commutative: ambient.is_commutative(),
            cocommutative: ambient.is_cocommutative(),
        })?);
        let inclusion = HopfHom::new(induced.clone(), ambient.clone(), carrier.inclusion())?;
        Ok(SubHopf {
            ambient,
            carrier,
            induced,
            inclusion,
            trace: Vec::new(),
        })
    }

    /// Coordinates of an ambient vector, if it lies in the carrier.
    pub fn coordinates(&self, x: &SparseVec) -> Option<SparseVec> {
        coords_in(self.carrier.pivots(), &sparse_basis(&self.carrier), x)
    }

    /// Restrict the codomain of a map into the ambient algebra.
    pub fn corestrict(&self, f: &HopfHom) -> Result<HopfHom> {
        if f.cod != self.ambient {
            return Err(Error::Mismatch("map does not land in the ambient algebra".into()));
        }
        let basis = sparse_basis(&self.carrier);
        let cols: Option<Vec<SparseVec>> = f
            .columns()
            .iter()
            .map(|c| coords_in(self.carrier.pivots(), &basis, c))
            .collect();
        let cols = cols.ok_or_else(|| Error::invalid("corestriction", "image is not contained in the carrier"))?;
        HopfHom::new(
            f.dom.clone(),
            self.induced.clone(),
            Matrix::from_sparse_columns(f.dom.field(), self.carrier.dim(), &cols),
        )
    }
}

fn require_cocommutative(hs: &[&HopfAlgebra]) -> Result<()> {
    if hs.iter().any(|h| !h.is_cocommutative()) {
        return Err(Error::Precondition(
            "limits are computed among cocommutative Hopf algebras".into(),
        ));
    }
    Ok(())
}

fn require_commutative(hs: &[&HopfAlgebra]) -> Result<()> {
    if hs.iter().any(|h| !h.is_commutative()) {
        return Err(Error::Precondition(
            "colimits are computed among commutative Hopf algebras".into(),
        ));
    }
    Ok(())
}

fn same_signature(f1: &HopfHom, f2: &HopfHom) -> Result<()> {
    if f1.dom != f2.dom || f1.cod != f2.cod {
        return Err(Error::Mismatch("maps have different signatures".into()));
    }
    Ok(())
}

/// Largest subcoalgebra of `D` inside `ker(f₁ − f₂)`.
pub fn equalizer_cochopf(f1: &HopfHom, f2: &HopfHom) -> Result<SubHopf> {
    same_signature(f1, f2)?;
    require_cocommutative(&[&f1.dom, &f1.cod])?;
    let w = f1.map.sub(&f2.map)?.kernel();
    let (d, trace) = largest_subcoalgebra(&f1.dom, &w)?;
    let mut sub = SubHopf::new(f1.dom.clone(), d)?;
    sub.trace = trace;
    Ok(sub)
}

/// `A ×_C B` inside `A ⊗ B` with its projections.
#[derive(Clone, Debug)]
pub struct HopfPullback {
    pub tensor: Arc<HopfAlgebra>,
    pub sub: SubHopf,
    pub p1: HopfHom,
    pub p2: HopfHom,
    pub s: HopfHom,
    pub t: HopfHom,
}

impl HopfPullback {
    pub fn dim(&self) -> usize {
        self.sub.carrier.dim()
    }

    /// `φ = (f₁ ⊗ f₂)Δ_D` for a cone `f₁: D → A`, `f₂: D → B` with `s f₁ = t f₂`.
    pub fn mediate(&self, f1: &HopfHom, f2: &HopfHom) -> Result<HopfHom> {
        if f1.dom != f2.dom || f1.cod != self.s.dom || f2.cod != self.t.dom {
            return Err(Error::Mismatch("cone does not match the pullback diagram".into()));
        }
        if f1.then(&self.s)?.map != f2.then(&self.t)?.map {
            return Err(Error::invalid("cone", "s f₁ ≠ t f₂"));
        }
        let d = &f1.dom;
        let (c1, c2) = (f1.columns(), f2.columns());
        let nb = self.t.dom.dim();
        let cols: Vec<SparseVec> = (0..d.dim())
            .map(|k| tensor_apply(&c1, &c2, nb, d.dim(), d.delta_basis(k)))
            .collect();
        let phi = HopfHom::new(
            d.clone(),
            self.tensor.clone(),
            Matrix::from_sparse_columns(d.field(), self.tensor.dim(), &cols),
        )?;
        self.sub.corestrict(&phi)
    }

    /// `(p₁ ⊗ p₂)Δ` is the inclusion, so a coalgebra map into the pullback is
    /// determined by its two projections.
    pub fn uniqueness_witness(&self) -> Result<(), String> {
        let sub = &self.sub.induced;
        let (c1, c2) = (self.p1.columns(), self.p2.columns());
        let nb = self.p2.cod.dim();
        let incl = self.sub.inclusion.columns();
        first_failure(0..sub.dim(), |&k| {
            (tensor_apply(&c1, &c2, nb, sub.dim(), sub.delta_basis(k)) != incl[k])
                .then(|| format!("basis vector {}", sub.name(k)))
        })
    }
}

/// Pullback of `s: A → C` and `t: B → C` as the largest subcoalgebra of
/// `A ⊗ B` inside `ker(s ⊗ ε − ε ⊗ t)`.
pub fn pullback_cochopf(s: &HopfHom, t: &HopfHom) -> Result<HopfPullback> {
    if s.cod != t.cod {
        return Err(Error::Mismatch("pullback legs have different codomains".into()));
    }
    let (a, b, c) = (&s.dom, &t.dom, &s.cod);
    require_cocommutative(&[a, b, c])?;
    let (na, nb) = (a.dim(), b.dim());
    if na * nb > MAX_TENSOR_DIM {
        return Err(Error::Precondition(format!(
            "tensor dimension {} exceeds {MAX_TENSOR_DIM}",
            na * nb
        )));
    }
    let field = a.field();
    let tensor = Arc::new(tensor_hopf(a, b)?);
    let (sc, tc) = (s.columns(), t.columns());
    let cols: Vec<SparseVec> = (0..na * nb)
        .map(|x| {
            let (i, j) = (x / nb, x % nb);
            let mut v = sc[i].scaled(&b.counit()[j]);
            v.add_scaled(&-&a.counit()[i], &tc[j]);
            v
        })
        .collect();
    let phi = Matrix::from_sparse_columns(field, c.dim(), &cols);
    let (carrier, trace) = largest_subcoalgebra(&tensor, &phi.kernel())?;
    let mut sub = SubHopf::new(tensor.clone(), carrier)?;
    sub.trace = trace;
    let proj = |left: bool| -> Result<HopfHom> {
        let target = if left { a } else { b };
        let cols: Vec<SparseVec> = sparse_basis(&sub.carrier)
            .iter()
            .map(|v| {
                let mut out = SparseVec::new();
                for (x, coef) in v.iter() {
                    let (i, j) = (x / nb, x % nb);
                    if left {
                        out.add_at(i, &(coef * &b.counit()[j]));
                    } else {
                        out.add_at(j, &(coef * &a.counit()[i]));
                    }
                }
                out
            })
            .collect();
        HopfHom::new(
            sub.induced.clone(),
            target.clone(),
            Matrix::from_sparse_columns(field, target.dim(), &cols),
        )
    };
    let (p1, p2) = (proj(true)?, proj(false)?);
    Ok(HopfPullback {
        tensor,
        sub,
        p1,
        p2,
        s: s.clone(),
        t: t.clone(),
    })
}

/// Least two-sided ideal containing `gens`.
pub fn ideal_generated(a: &HopfAlgebra, gens: &Subspace) -> Subspace {
    let n = a.dim();
    let field = a.field();
    let mut ech = EchelonBasis::new(field, n);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for g in sparse_basis(gens) {
        if ech.insert(g.to_dense(field, n)) {
            queue.push_back(g);
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.rank() == n {
            break;
        }
        for k in 0..n {
            let e = a.unit_vector(k);
            for prod in [a.mul(&e, &v), a.mul(&v, &e)] {
                if !prod.is_zero() && ech.insert(prod.to_dense(field, n)) {
                    queue.push_back(prod);
                }
            }
        }
    }
    ech.into_subspace()
}

/// The four Hopf-ideal conditions for `ideal ⊂ a`.
pub fn hopf_ideal_check(a: &HopfAlgebra, ideal: &Subspace) -> Report {
    let n = a.dim();
    let basis = sparse_basis(ideal);
    let piv = ideal.pivots();
    let proj = Quotient::new(ideal).projection.sparse_columns();
    let m = n - ideal.dim();
    let mut r = Report::new();
    r.check(
        "ideal",
        "A I + I A ⊆ I",
        first_failure(basis.iter().enumerate(), |(k, x)| {
            (0..n)
                .find(|&i| {
                    let e = a.unit_vector(i);
                    coords_in(piv, &basis, &a.mul(&e, x)).is_none() || coords_in(piv, &basis, &a.mul(x, &e)).is_none()
                })
                .map(|i| format!("ideal basis vector {k} times {}", a.name(i)))
        }),
    );
    r.check(
        "coideal",
        "Δ(I) ⊆ I ⊗ A + A ⊗ I",
        first_failure(basis.iter().enumerate(), |(k, x)| {
            (!tensor_apply(&proj, &proj, m, n, &a.comul(x)).is_zero()).then(|| format!("ideal basis vector {k}"))
        }),
    );
    r.check(
        "counit",
        "ε(I) = 0",
        first_failure(basis.iter().enumerate(), |(k, x)| {
            (!a.counit_of(x).is_zero()).then(|| format!("ideal basis vector {k}"))
        }),
    );
    r.check(
        "antipode",
        "S(I) ⊆ I",
        first_failure(basis.iter().enumerate(), |(k, x)| {
            coords_in(piv, &basis, &a.apply_antipode(x))
                .is_none()
                .then(|| format!("ideal basis vector {k}"))
        }),
    );
    r
}

/// `A / I` on the canonical section basis.
#[derive(Clone, Debug)]
pub struct QuotientHopf {
    pub ambient: Arc<HopfAlgebra>,
    pub ideal: Subspace,
    pub quotient: Quotient,
    pub induced: Arc<HopfAlgebra>,
    pub projection: HopfHom,
}

impl QuotientHopf {
    /// The Hopf-ideal conditions are verified first; a failure is an error.
    pub fn new(ambient: Arc<HopfAlgebra>, ideal: Subspace) -> Result<QuotientHopf> {
        let rep = hopf_ideal_check(&ambient, &ideal);
        if let Some(f) = rep.failures().next() {
            return Err(Error::invalid(
                "Hopf ideal",
                format!("{} fails at {}", f.law, f.counterexample.clone().unwrap_or_default()),
            ));
        }
        let n = ambient.dim();
        let field = ambient.field();
        let quotient = Quotient::new(&ideal);
        let m = quotient.dim();
        let proj = quotient.projection.sparse_columns();
        let sec = &quotient.section;
        let project = |v: &SparseVec| {
            let mut out = SparseVec::new();
            for (i, x) in v.iter() {
                out.add_scaled(x, &proj[i]);
            }
            out
        };
        let mut mu = Vec::with_capacity(m * m);
        for &i in sec {
            for &j in sec {
                mu.push(project(ambient.mu_basis(i, j)));
            }
        }
        let delta = sec
            .iter()
            .map(|&i| tensor_apply(&proj, &proj, m, n, ambient.delta_basis(i)))
            .collect();
        let s_cols: Vec<SparseVec> = sec
            .iter()
            .map(|&i| project(&ambient.apply_antipode(&ambient.unit_vector(i))))
            .collect();
        let induced = Arc::new(HopfAlgebra::from_parts(HopfParts {
            field,
            names: sec.iter().map(|&i| format!("[{}]", ambient.name(i))).collect(),
            mu,
            unit: project(ambient.unit()),
            delta,
            counit: sec.iter().map(|&i| ambient.counit()[i].clone()).collect(),
            antipode: Matrix::from_sparse_columns(field, m, &s_cols),
            commutative: ambient.is_commutative(),
            cocommutative: ambient.is_cocommutative(),
        })?);
        let projection = HopfHom::new(ambient.clone(), induced.clone(), quotient.projection.clone())?;
        Ok(QuotientHopf {
            ambient,
            ideal,
            quotient,
            induced,
            projection,
        })
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.projection.apply(v)
    }

    /// Factor an algebra map `A → E` vanishing on the ideal through the quotient.
    pub fn factor(&self, f: &HopfHom) -> Result<HopfHom> {
        if f.dom != self.ambient {
            return Err(Error::Mismatch("map does not start at the ambient algebra".into()));
        }
        if let Some(k) = sparse_basis(&self.ideal).iter().position(|x| !f.apply(x).is_zero()) {
            return Err(Error::invalid(
                "factorization",
                format!("map does not vanish on ideal basis vector {k}"),
            ));
        }
        let cols: Vec<SparseVec> = self.quotient.section.iter().map(|&i| f.map.sparse_column(i)).collect();
        HopfHom::new(
            self.induced.clone(),
            f.cod.clone(),
            Matrix::from_sparse_columns(f.cod.field(), f.cod.dim(), &cols),
        )
    }
}

/// `D / ⟨image(f₁ − f₂)⟩`.
pub fn coequalizer_comhopf(f1: &HopfHom, f2: &HopfHom) -> Result<QuotientHopf> {
    same_signature(f1, f2)?;
    require_commutative(&[&f1.dom, &f1.cod])?;
    let gens = f1.map.sub(&f2.map)?.image();
    let ideal = ideal_generated(&f1.cod, &gens);
    QuotientHopf::new(f1.cod.clone(), ideal)
}

/// `A ⊔_C B` as a quotient of `A ⊗ B`, with its injections.
#[derive(Clone, Debug)]
pub struct HopfPushout {
    pub tensor: Arc<HopfAlgebra>,
    pub quotient: QuotientHopf,
    pub i1: HopfHom,
    pub i2: HopfHom,
    pub sigma: HopfHom,
    pub tau: HopfHom,
}

impl HopfPushout {
    pub fn dim(&self) -> usize {
        self.quotient.induced.dim()
    }

    pub fn induced(&self) -> &Arc<HopfAlgebra> {
        &self.quotient.induced
    }

    /// Quotient coordinates of `π(a ⊗ b)`.
    pub fn project_pair(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let nb = self.tau.cod.dim();
        let mut v = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                v.add_at(i * nb + j, &(x * y));
            }
        }
        self.quotient.project(&v)
    }

    /// `ψ(a ⊗ b) = g₁(a) g₂(b)` for a cocone `g₁: A → E`, `g₂: B → E` with `g₁σ = g₂τ`.
    pub fn mediate(&self, g1: &HopfHom, g2: &HopfHom) -> Result<HopfHom> {
        if g1.cod != g2.cod || g1.dom != self.sigma.cod || g2.dom != self.tau.cod {
            return Err(Error::Mismatch("cocone does not match the pushout diagram".into()));
        }
        if self.sigma.then(g1)?.map != self.tau.then(g2)?.map {
            return Err(Error::invalid("cocone", "g₁σ ≠ g₂τ"));
        }
        let e = &g1.cod;
        let (c1, c2) = (g1.columns(), g2.columns());
        let nb = g2.dom.dim();
        let cols: Vec<SparseVec> = (0..self.tensor.dim())
            .map(|x| e.mul(&c1[x / nb], &c2[x % nb]))
            .collect();
        let psi = HopfHom::new(
            self.tensor.clone(),
            e.clone(),
            Matrix::from_sparse_columns(e.field(), e.dim(), &cols),
        )?;
        self.quotient.factor(&psi)
    }

    /// `i₁(a) i₂(b) = π(a ⊗ b)`, so an algebra map out of the pushout is
    /// determined by its two restrictions.
    pub fn uniqueness_witness(&self) -> Result<(), String> {
        let q = self.induced();
        let (c1, c2) = (self.i1.columns(), self.i2.columns());
        let (na, nb) = (self.sigma.cod.dim(), self.tau.cod.dim());
        first_failure((0..na).flat_map(|i| (0..nb).map(move |j| (i, j))), |&(i, j)| {
            (q.mul(&c1[i], &c2[j]) != self.quotient.quotient.projection.sparse_column(i * nb + j))
                .then(|| format!("({}, {})", self.sigma.cod.name(i), self.tau.cod.name(j)))
        })
    }
}

/// Pushout of `σ: C → A` and `τ: C → B` as `(A ⊗ B) / ⟨(σ ⊗ η − η ⊗ τ)(C)⟩`.
pub fn pushout_comhopf(sigma: &HopfHom, tau: &HopfHom) -> Result<HopfPushout> {
    if sigma.dom != tau.dom {
        return Err(Error::Mismatch("pushout legs have different domains".into()));
    }
    let (a, b, c) = (&sigma.cod, &tau.cod, &sigma.dom);
    require_commutative(&[a, b, c])?;
    let (na, nb) = (a.dim(), b.dim());
    if na * nb > MAX_TENSOR_DIM {
        return Err(Error::Precondition(format!(
            "tensor dimension {} exceeds {MAX_TENSOR_DIM}",
            na * nb
        )));
    }
    let field = a.field();
    let tensor = Arc::new(tensor_hopf(a, b)?);
    let pair = |x: &SparseVec, y: &SparseVec| {
        let mut v = SparseVec::new();
        for (i, p) in x.iter() {
            for (j, q) in y.iter() {
                v.add_at(i * nb + j, &(p * q));
            }
        }
        v
    };
    let gens: Vec<Vec<Scalar>> = sigma
        .columns()
        .iter()
        .zip(tau.columns())
        .map(|(s, t)| pair(s, b.unit()).sub(&pair(a.unit(), &t)).to_dense(field, na * nb))
        .collect();
    let gens = Subspace::span(field, na * nb, &gens)?;
    let ideal = ideal_generated(&tensor, &gens);
    let quotient = QuotientHopf::new(tensor.clone(), ideal)?;
    let q = quotient.induced.clone();
    let inj = |left: bool| -> Result<HopfHom> {
        let (dom, n) = if left { (a, na) } else { (b, nb) };
        let cols: Vec<SparseVec> = (0..n)
            .map(|i| {
                let e = SparseVec::unit(field, i);
                let v = if left { pair(&e, b.unit()) } else { pair(a.unit(), &e) };
                quotient.project(&v)
            })
            .collect();
        HopfHom::new(
            dom.clone(),
            q.clone(),
            Matrix::from_sparse_columns(field, q.dim(), &cols),
        )
    };
    let (i1, i2) = (inj(true)?, inj(false)?);
    Ok(HopfPushout {
        tensor,
        quotient,
        i1,
        i2,
        sigma: sigma.clone(),
        tau: tau.clone(),
    })
}

/// Dimensions and comparison checks for one group-level pullback square.
#[derive(Clone, Debug)]
pub struct LimitPreservation {
    pub pair_count: usize,
    pub pullback_dim: usize,
    pub pushout_dim: usize,
    pub report: Report,
}

/// Square and invertible.
pub fn iso_check(f: &HopfHom) -> Result<(), String> {
    if f.map.rows() != f.map.cols() {
        return Err(format!("{}×{} matrix is not square", f.map.rows(), f.map.cols()));
    }
    f.map
        .inverse()
        .map(|_| ())
        .ok_or_else(|| "comparison map is singular".to_string())
}

fn merge_hom_check(r: &mut Report, prefix: &str, f: &HopfHom) {
    let h = hopf_hom_check(f);
    let outcome = match h.failures().next() {
        None => Ok(()),
        Some(x) => Err(format!("{}: {}", x.law, x.counterexample.clone().unwrap_or_default())),
    };
    r.check(
        format!("{prefix}.comparison_hom"),
        "comparison map is a Hopf algebra map",
        outcome,
    );
}

/// Build `k[G ×_K H] → k[G] ×_{k[K]} k[H]` and `k(G) ⊔_{k(K)} k(H) → k(G ×_K H)`
/// and check that both are Hopf isomorphisms.
pub fn verify_limit_preservation(field: Field, s: &GroupHom, t: &GroupHom) -> Result<LimitPreservation> {
    let gp = pullback(s, t)?;
    let (g, h, k) = (s.dom(), t.dom(), s.cod());
    let mut r = Report::new();

    let (kg, kh, kk) = (
        Arc::new(group_algebra(field, g)?),
        Arc::new(group_algebra(field, h)?),
        Arc::new(group_algebra(field, k)?),
    );
    let ks = crate::hopf::linearize_hom(s, &kg, &kk)?;
    let kt = crate::hopf::linearize_hom(t, &kh, &kk)?;
    let pb = pullback_cochopf(&ks, &kt)?;
    let kp = Arc::new(group_algebra(field, &gp.group)?);
    let nb = h.order();
    let cols: Option<Vec<SparseVec>> = gp
        .pairs
        .iter()
        .map(|&(a, b)| pb.sub.coordinates(&SparseVec::unit(field, a * nb + b)))
        .collect();
    r.check(
        "cocommutative.dimension",
        "dim k[G] ×_{k[K]} k[H] = |G ×_K H|",
        (pb.dim() == gp.pairs.len())
            .then_some(())
            .ok_or_else(|| format!("{} ≠ {}", pb.dim(), gp.pairs.len())),
    );
    match cols {
        Some(cols) => {
            let cmp = HopfHom::new(
                kp.clone(),
                pb.sub.induced.clone(),
                Matrix::from_sparse_columns(field, pb.dim(), &cols),
            )?;
            merge_hom_check(&mut r, "cocommutative", &cmp);
            r.check(
                "cocommutative.comparison_iso",
                "comparison map is invertible",
                iso_check(&cmp),
            );
        }
        None => r.check(
            "cocommutative.comparison_hom",
            "comparison map is a Hopf algebra map",
            Err("some g ⊗ h with s(g) = t(h) is missing from the pullback".into()),
        ),
    }
    r.check(
        "cocommutative.uniqueness",
        "(p₁ ⊗ p₂)Δ = inclusion",
        pb.uniqueness_witness(),
    );

    let (fg, fh, fk) = (
        Arc::new(function_algebra(field, g)?),
        Arc::new(function_algebra(field, h)?),
        Arc::new(function_algebra(field, k)?),
    );
    let sigma = dualize_hom(s, &fk, &fg)?;
    let tau = dualize_hom(t, &fk, &fh)?;
    let po = pushout_comhopf(&sigma, &tau)?;
    let fp = Arc::new(function_algebra(field, &gp.group)?);
    let kp1 = dualize_hom(&gp.p1, &fg, &fp)?;
    let kp2 = dualize_hom(&gp.p2, &fh, &fp)?;
    r.check(
        "commutative.dimension",
        "dim k(G) ⊔_{k(K)} k(H) = |G ×_K H|",
        (po.dim() == gp.pairs.len())
            .then_some(())
            .ok_or_else(|| format!("{} ≠ {}", po.dim(), gp.pairs.len())),
    );
    match po.mediate(&kp1, &kp2) {
        Ok(cmp) => {
            merge_hom_check(&mut r, "commutative", &cmp);
            r.check(
                "commutative.comparison_iso",
                "comparison map is invertible",
                iso_check(&cmp),
            );
        }
        Err(e) => r.check(
            "commutative.comparison_hom",
            "comparison map is a Hopf algebra map",
            Err(e.to_string()),
        ),
    }
    r.check(
        "commutative.uniqueness",
        "i₁(a) i₂(b) = π(a ⊗ b)",
        po.uniqueness_witness(),
    );
    Ok(LimitPreservation {
        pair_count: gp.pairs.len(),
        pullback_dim: pb.dim(),
        pushout_dim: po.dim(),
        report: r,
    })
}
