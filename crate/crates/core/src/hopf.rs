//! Finite-dimensional Hopf algebras by structure constants, Hopf algebra maps,
//! and the functors `k[−]` (group algebra) and `k(−)` (function algebra).
//!
//! `μ` and `Δ` are stored sparsely, one vector per basis element or basis pair:
//! `mu[i·n + j] = e_i e_j` and `delta[i] = Δ(e_i)` in the `n²`-dimensional
//! tensor square. Maps are matrices acting on column coordinate vectors.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, SparseVec};
use crate::fingrp::{FiniteGroup, GroupHom};
use crate::report::{first_failure, Report};

/// The raw ingredients of a Hopf algebra, with no axioms checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfParts {
    pub field: Field,
    pub names: Vec<String>,
    pub mu: Vec<SparseVec>,
    pub unit: SparseVec,
    pub delta: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub commutative: bool,
    pub cocommutative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    parts: HopfParts,
}

impl HopfAlgebra {
    /// Checks shapes only; use [`validate_hopf`] for the axioms.
    pub fn from_parts(parts: HopfParts) -> Result<HopfAlgebra> {
        let n = parts.names.len();
        let bad = |what: &str| Err(Error::invalid("Hopf algebra", format!("{what} has the wrong shape")));
        if parts.mu.len() != n * n || parts.mu.iter().any(|v| v.max_index().is_some_and(|i| i >= n)) {
            return bad("μ");
        }
        if parts.delta.len() != n || parts.delta.iter().any(|v| v.max_index().is_some_and(|i| i >= n * n)) {
            return bad("Δ");
        }
        if parts.unit.max_index().is_some_and(|i| i >= n) {
            return bad("η");
        }
        if parts.counit.len() != n {
            return bad("ε");
        }
        if parts.antipode.rows() != n || parts.antipode.cols() != n || parts.antipode.field() != parts.field {
            return bad("S");
        }
        Ok(HopfAlgebra { parts })
    }

    pub fn parts(&self) -> &HopfParts {
        &self.parts
    }

    pub fn into_parts(self) -> HopfParts {
        self.parts
    }

    /// The ground field `k` as a Hopf algebra.
    pub fn ground(field: Field) -> HopfAlgebra {
        HopfAlgebra {
            parts: HopfParts {
                field,
                names: vec!["1".into()],
                mu: vec![SparseVec::unit(field, 0)],
                unit: SparseVec::unit(field, 0),
                delta: vec![SparseVec::unit(field, 0)],
                counit: vec![field.one()],
                antipode: Matrix::identity(field, 1),
                commutative: true,
                cocommutative: true,
            },
        }
    }

    pub fn field(&self) -> Field {
        self.parts.field
    }

    pub fn dim(&self) -> usize {
        self.parts.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.parts.names[i]
    }

    pub fn is_commutative(&self) -> bool {
        self.parts.commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.parts.cocommutative
    }

    /// `e_i e_j`
    pub fn mu_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.parts.mu[i * self.dim() + j]
    }

    /// `Δ(e_i)`
    pub fn delta_basis(&self, i: usize) -> &SparseVec {
        &self.parts.delta[i]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.parts.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.parts.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.parts.antipode
    }

    pub fn unit_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.field(), i)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&(x * y), self.mu_basis(i, j));
            }
        }
        out
    }

    pub fn comul(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in v.iter() {
            out.add_scaled(x, self.delta_basis(i));
        }
        out
    }

    pub fn counit_of(&self, v: &SparseVec) -> Scalar {
        let mut acc = self.field().zero();
        for (i, x) in v.iter() {
            acc = &acc + &(x * &self.parts.counit[i]);
        }
        acc
    }

    pub fn apply_antipode(&self, v: &SparseVec) -> SparseVec {
        self.parts.antipode.apply_sparse(v)
    }

    /// Product in `A ⊗ A`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul_tensor2(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (k, a) in x.iter() {
            for (l, b) in y.iter() {
                let c = a * b;
                let left = self.mu_basis(k / n, l / n);
                let right = self.mu_basis(k % n, l % n);
                for (p, u) in left.iter() {
                    for (q, v) in right.iter() {
                        out.add_at(p * n + q, &(&c * &(u * v)));
                    }
                }
            }
        }
        out
    }

    /// `(Δ ⊗ id)` applied to a vector of `A ⊗ A`.
    pub fn comul_left(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (k, a) in x.iter() {
            for (pq, b) in self.delta_basis(k / n).iter() {
                out.add_at(pq * n + k % n, &(a * b));
            }
        }
        out
    }

    /// `(id ⊗ Δ)` applied to a vector of `A ⊗ A`.
    pub fn comul_right(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (k, a) in x.iter() {
            for (qr, b) in self.delta_basis(k % n).iter() {
                out.add_at((k / n) * n * n + qr, &(a * b));
            }
        }
        out
    }

    /// Contract `Σ x_{pq} f(e_p) g(e_q)` with `f`, `g` given by sparse columns;
    /// used for convolution-type identities such as `Σ S(a₁) a₂`.
    pub fn convolve(&self, x: &SparseVec, f: &[SparseVec], g: &[SparseVec]) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (k, c) in x.iter() {
            let prod = self.mul(&f[k / n], &g[k % n]);
            out.add_scaled(c, &prod);
        }
        out
    }

    /// Index of `e_q ⊗ e_p` given the index of `e_p ⊗ e_q`.
    pub fn swap_index(&self, k: usize) -> usize {
        let n = self.dim();
        (k % n) * n + k / n
    }
}

/// `(f ⊗ g)(x)` for `x ∈ U ⊗ V`, with `f`, `g` given by their sparse columns.
/// `g_rows` is the dimension of `g`'s codomain, `v_dim` that of `V`.
pub fn tensor_apply(f: &[SparseVec], g: &[SparseVec], g_rows: usize, v_dim: usize, x: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, c) in x.iter() {
        for (i, a) in f[k / v_dim].iter() {
            let ca = c * a;
            for (j, b) in g[k % v_dim].iter() {
                out.add_at(i * g_rows + j, &(&ca * b));
            }
        }
    }
    out
}

fn identity_columns(field: Field, n: usize) -> Vec<SparseVec> {
    (0..n).map(|i| SparseVec::unit(field, i)).collect()
}

fn check_characteristic(field: Field, g: &FiniteGroup) -> Result<()> {
    if field.divides(g.order()) {
        return Err(Error::Characteristic {
            p: field.characteristic(),
            order: g.order(),
        });
    }
    Ok(())
}

/// `k[G]`: basis `G`, `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, g: &FiniteGroup) -> Result<HopfAlgebra> {
    check_characteristic(field, g)?;
    let n = g.order();
    let mu = (0..n * n)
        .map(|k| SparseVec::unit(field, g.mul(k / n, k % n)))
        .collect();
    let delta = (0..n).map(|i| SparseVec::unit(field, i * n + i)).collect();
    let inverse: Vec<usize> = g.elements().map(|a| g.inv(a)).collect();
    HopfAlgebra::from_parts(HopfParts {
        field,
        names: g.elements().map(|a| g.name(a)).collect(),
        mu,
        unit: SparseVec::unit(field, g.identity()),
        delta,
        counit: vec![field.one(); n],
        antipode: Matrix::from_basis_map(field, n, &inverse),
        commutative: g.is_abelian(),
        cocommutative: true,
    })
}

/// `k(G)`: basis `δ_g`, pointwise product, `Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b`,
/// `ε(δ_g) = [g = e]`, `S(δ_g) = δ_{g⁻¹}`.
pub fn function_algebra(field: Field, g: &FiniteGroup) -> Result<HopfAlgebra> {
    check_characteristic(field, g)?;
    let n = g.order();
    let mu = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                SparseVec::unit(field, k / n)
            } else {
                SparseVec::new()
            }
        })
        .collect();
    let mut delta = vec![SparseVec::new(); n];
    for a in 0..n {
        for b in 0..n {
            delta[g.mul(a, b)].add_at(a * n + b, &field.one());
        }
    }
    let mut unit = SparseVec::new();
    for a in 0..n {
        unit.add_at(a, &field.one());
    }
    let inverse: Vec<usize> = g.elements().map(|a| g.inv(a)).collect();
    HopfAlgebra::from_parts(HopfParts {
        field,
        names: g.elements().map(|a| format!("δ{}", g.name(a))).collect(),
        mu,
        unit,
        delta,
        counit: (0..n)
            .map(|a| if a == g.identity() { field.one() } else { field.zero() })
            .collect(),
        antipode: Matrix::from_basis_map(field, n, &inverse),
        commutative: true,
        cocommutative: g.is_abelian(),
    })
}

/// `A ⊗ B` with componentwise structure; `e_i ⊗ e_j` has index `i·dim B + j`.
pub fn tensor_hopf(a: &HopfAlgebra, b: &HopfAlgebra) -> Result<HopfAlgebra> {
    if a.field() != b.field() {
        return Err(crate::exactlin::LinAlgError::FieldMismatch(a.field(), b.field()).into());
    }
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut mu = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (ia, ib, ja, jb) = (x / nb, x % nb, y / nb, y % nb);
            let mut v = SparseVec::new();
            for (p, u) in a.mu_basis(ia, ja).iter() {
                for (q, w) in b.mu_basis(ib, jb).iter() {
                    v.add_at(p * nb + q, &(u * w));
                }
            }
            mu.push(v);
        }
    }
    let delta = (0..n)
        .map(|x| {
            let mut v = SparseVec::new();
            for (k, u) in a.delta_basis(x / nb).iter() {
                for (l, w) in b.delta_basis(x % nb).iter() {
                    let (p, q) = (k / na, k % na);
                    let (r, s) = (l / nb, l % nb);
                    v.add_at((p * nb + r) * n + q * nb + s, &(u * w));
                }
            }
            v
        })
        .collect();
    let mut unit = SparseVec::new();
    for (i, u) in a.unit().iter() {
        for (j, w) in b.unit().iter() {
            unit.add_at(i * nb + j, &(u * w));
        }
    }
    let counit = (0..n).map(|x| &a.counit()[x / nb] * &b.counit()[x % nb]).collect();
    let names = (0..n)
        .map(|x| format!("{}⊗{}", a.name(x / nb), b.name(x % nb)))
        .collect();
    HopfAlgebra::from_parts(HopfParts {
        field,
        names,
        mu,
        unit,
        delta,
        counit,
        antipode: a.antipode().tensor(b.antipode())?,
        commutative: a.is_commutative() && b.is_commutative(),
        cocommutative: a.is_cocommutative() && b.is_cocommutative(),
    })
}

/// Check every Hopf algebra axiom on basis elements; also the declared flags.
pub fn validate_hopf(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let field = h.field();
    let e = |i: usize| h.unit_vector(i);
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let mut r = Report::new();
    r.check(
        "associativity",
        "(ab)c = a(bc)",
        first_failure(pairs(), |&(i, j)| {
            (0..n)
                .find(|&k| h.mul(h.mu_basis(i, j), &e(k)) != h.mul(&e(i), h.mu_basis(j, k)))
                .map(|k| format!("({}, {}, {})", h.name(i), h.name(j), h.name(k)))
        }),
    );
    r.check(
        "unit",
        "1a = a = a1",
        first_failure(0..n, |&i| {
            (h.mul(h.unit(), &e(i)) != e(i) || h.mul(&e(i), h.unit()) != e(i)).then(|| h.name(i).to_string())
        }),
    );
    r.check(
        "coassociativity",
        "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ",
        first_failure(0..n, |&i| {
            let d = h.delta_basis(i);
            (h.comul_left(d) != h.comul_right(d)).then(|| h.name(i).to_string())
        }),
    );
    r.check(
        "counit",
        "(ε ⊗ id)Δ = id = (id ⊗ ε)Δ",
        first_failure(0..n, |&i| {
            let d = h.delta_basis(i);
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (k, c) in d.iter() {
                left.add_at(k % n, &(c * &h.counit()[k / n]));
                right.add_at(k / n, &(c * &h.counit()[k % n]));
            }
            (left != e(i) || right != e(i)).then(|| h.name(i).to_string())
        }),
    );
    r.check(
        "bialgebra.delta_multiplicative",
        "Δ(ab) = Δ(a)Δ(b)",
        first_failure(pairs(), |&(i, j)| {
            let lhs = h.comul(h.mu_basis(i, j));
            let rhs = h.mul_tensor2(h.delta_basis(i), h.delta_basis(j));
            (lhs != rhs).then(|| format!("({}, {})", h.name(i), h.name(j)))
        }),
    );
    r.check("bialgebra.delta_unit", "Δ(1) = 1 ⊗ 1", {
        let mut one_one = SparseVec::new();
        for (i, a) in h.unit().iter() {
            for (j, b) in h.unit().iter() {
                one_one.add_at(i * n + j, &(a * b));
            }
        }
        (h.comul(h.unit()) == one_one)
            .then_some(())
            .ok_or_else(|| "Δ(1)".to_string())
    });
    r.check(
        "bialgebra.counit_multiplicative",
        "ε(ab) = ε(a)ε(b)",
        first_failure(pairs(), |&(i, j)| {
            (h.counit_of(h.mu_basis(i, j)) != &h.counit()[i] * &h.counit()[j])
                .then(|| format!("({}, {})", h.name(i), h.name(j)))
        }),
    );
    r.check(
        "bialgebra.counit_unit",
        "ε(1) = 1",
        h.counit_of(h.unit())
            .is_one()
            .then_some(())
            .ok_or_else(|| "ε(1)".to_string()),
    );
    let s_cols = h.antipode().sparse_columns();
    let id_cols = identity_columns(field, n);
    let unit_scaled = |c: &Scalar| h.unit().scaled(c);
    r.check(
        "antipode.left",
        "Σ S(a₁) a₂ = ε(a) 1",
        first_failure(0..n, |&i| {
            (h.convolve(h.delta_basis(i), &s_cols, &id_cols) != unit_scaled(&h.counit()[i]))
                .then(|| h.name(i).to_string())
        }),
    );
    r.check(
        "antipode.right",
        "Σ a₁ S(a₂) = ε(a) 1",
        first_failure(0..n, |&i| {
            (h.convolve(h.delta_basis(i), &id_cols, &s_cols) != unit_scaled(&h.counit()[i]))
                .then(|| h.name(i).to_string())
        }),
    );
    if h.is_commutative() {
        r.check(
            "flag.commutative",
            "ab = ba",
            first_failure(pairs(), |&(i, j)| {
                (h.mu_basis(i, j) != h.mu_basis(j, i)).then(|| format!("({}, {})", h.name(i), h.name(j)))
            }),
        );
    }
    if h.is_cocommutative() {
        r.check(
            "flag.cocommutative",
            "τΔ = Δ",
            first_failure(0..n, |&i| {
                let d = h.delta_basis(i);
                (d.remap(|k| h.swap_index(k)) != *d).then(|| h.name(i).to_string())
            }),
        );
    }
    r
}

/// A linear map between Hopf algebras, `cod.dim × dom.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfHom {
    pub dom: Arc<HopfAlgebra>,
    pub cod: Arc<HopfAlgebra>,
    pub map: Matrix,
}

impl HopfHom {
    /// Checks the matrix shape; [`hopf_hom_check`] checks the structure.
    pub fn new(dom: Arc<HopfAlgebra>, cod: Arc<HopfAlgebra>, map: Matrix) -> Result<HopfHom> {
        if map.rows() != cod.dim()
            || map.cols() != dom.dim()
            || map.field() != dom.field()
            || dom.field() != cod.field()
        {
            return Err(Error::Mismatch(format!(
                "{}×{} matrix for a map of dimension {} → {}",
                map.rows(),
                map.cols(),
                dom.dim(),
                cod.dim()
            )));
        }
        Ok(HopfHom { dom, cod, map })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> HopfHom {
        HopfHom {
            map: Matrix::identity(h.field(), h.dim()),
            dom: h.clone(),
            cod: h,
        }
    }

    /// `ε` followed by the unit: the map killing the augmentation ideal.
    pub fn trivial(dom: Arc<HopfAlgebra>, cod: Arc<HopfAlgebra>) -> HopfHom {
        let cols: Vec<SparseVec> = dom.counit().iter().map(|c| cod.unit().scaled(c)).collect();
        HopfHom {
            map: Matrix::from_sparse_columns(dom.field(), cod.dim(), &cols),
            dom,
            cod,
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &HopfHom) -> Result<HopfHom> {
        if *self.cod != *next.dom {
            return Err(Error::Mismatch("Hopf maps are not composable".into()));
        }
        Ok(HopfHom {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            map: next.map.mul(&self.map)?,
        })
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.map.apply_sparse(v)
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.map.sparse_columns()
    }

    /// `A ⊗ B → A′ ⊗ B′` given the two tensor algebras.
    pub fn tensor(&self, other: &HopfHom, dom: Arc<HopfAlgebra>, cod: Arc<HopfAlgebra>) -> Result<HopfHom> {
        HopfHom::new(dom, cod, self.map.tensor(&other.map)?)
    }
}

/// `μ`, `η`, `Δ`, `ε` and `S` compatibility of a linear map, on basis elements.
pub fn hopf_hom_check(f: &HopfHom) -> Report {
    let (a, b) = (&f.dom, &f.cod);
    let (n, m) = (a.dim(), b.dim());
    let cols = f.columns();
    let mut r = Report::new();
    r.check(
        "multiplicative",
        "f(xy) = f(x)f(y)",
        first_failure((0..n).flat_map(|i| (0..n).map(move |j| (i, j))), |&(i, j)| {
            (f.apply(a.mu_basis(i, j)) != b.mul(&cols[i], &cols[j])).then(|| format!("({}, {})", a.name(i), a.name(j)))
        }),
    );
    r.check(
        "unital",
        "f(1) = 1",
        (f.apply(a.unit()) == *b.unit())
            .then_some(())
            .ok_or_else(|| "f(1) ≠ 1".to_string()),
    );
    r.check(
        "comultiplicative",
        "(f ⊗ f)Δ = Δ′f",
        first_failure(0..n, |&i| {
            (tensor_apply(&cols, &cols, m, n, a.delta_basis(i)) != b.comul(&cols[i])).then(|| a.name(i).to_string())
        }),
    );
    r.check(
        "counital",
        "ε′f = ε",
        first_failure(0..n, |&i| {
            (b.counit_of(&cols[i]) != a.counit()[i]).then(|| a.name(i).to_string())
        }),
    );
    r.check(
        "antipode",
        "fS = S′f",
        first_failure(0..n, |&i| {
            (f.apply(&a.apply_antipode(&a.unit_vector(i))) != b.apply_antipode(&cols[i])).then(|| a.name(i).to_string())
        }),
    );
    r
}

/// `k[f]: k[G] → k[H]` between the given group algebras.
pub fn linearize_hom(f: &GroupHom, dom: &Arc<HopfAlgebra>, cod: &Arc<HopfAlgebra>) -> Result<HopfHom> {
    if dom.dim() != f.dom().order() || cod.dim() != f.cod().order() {
        return Err(Error::Mismatch("group algebras do not match the homomorphism".into()));
    }
    HopfHom::new(
        dom.clone(),
        cod.clone(),
        Matrix::from_basis_map(dom.field(), cod.dim(), f.map()),
    )
}

/// `k(f): k(H) → k(G)`, `δ_h ↦ Σ_{f(g) = h} δ_g`, between the given function algebras.
pub fn dualize_hom(f: &GroupHom, dom: &Arc<HopfAlgebra>, cod: &Arc<HopfAlgebra>) -> Result<HopfHom> {
    if dom.dim() != f.cod().order() || cod.dim() != f.dom().order() {
        return Err(Error::Mismatch(
            "function algebras do not match the homomorphism".into(),
        ));
    }
    let m = Matrix::from_basis_map(dom.field(), dom.dim(), f.map()).transpose();
    HopfHom::new(dom.clone(), cod.clone(), m)
}

/// `k[f]`, building both group algebras.
pub fn group_algebra_hom(field: Field, f: &GroupHom) -> Result<HopfHom> {
    let dom = Arc::new(group_algebra(field, f.dom())?);
    let cod = Arc::new(group_algebra(field, f.cod())?);
    linearize_hom(f, &dom, &cod)
}

/// `k(f)`, building both function algebras.
pub fn function_algebra_hom(field: Field, f: &GroupHom) -> Result<HopfHom> {
    let dom = Arc::new(function_algebra(field, f.cod())?);
    let cod = Arc::new(function_algebra(field, f.dom())?);
    dualize_hom(f, &dom, &cod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::direct_product;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn small_algebras_validate() {
        let s3 = FiniteGroup::symmetric(3);
        let z4 = FiniteGroup::cyclic(4);
        for h in [
            group_algebra(q(), &s3).unwrap(),
            function_algebra(q(), &s3).unwrap(),
            function_algebra(q(), &z4).unwrap(),
            group_algebra(Field::Prime(7), &s3).unwrap(),
            HopfAlgebra::ground(q()),
        ] {
            let rep = validate_hopf(&h);
            assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        }
        assert!(validate_hopf(&function_algebra(q(), &z4).unwrap()).passed("flag.commutative"));
    }

    #[test]
    fn characteristic_clash_is_refused() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(matches!(
            group_algebra(Field::Prime(3), &s3),
            Err(Error::Characteristic { p: 3, order: 6 })
        ));
        assert!(function_algebra(Field::Prime(2), &s3).is_err());
    }

    #[test]
    fn zeroed_delta_fails() {
        let mut parts = group_algebra(q(), &FiniteGroup::cyclic(3)).unwrap().into_parts();
        parts.delta = vec![SparseVec::new(); 3];
        let rep = validate_hopf(&HopfAlgebra::from_parts(parts).unwrap());
        // 0 = 0 keeps coassociativity; the counit law and Δ(1) = 1 ⊗ 1 break
        assert!(rep.passed("coassociativity"));
        assert!(!rep.passed("counit"));
        assert!(!rep.passed("bialgebra.delta_unit"));
    }

    #[test]
    fn group_algebra_shapes() {
        let z2 = group_algebra(q(), &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(*z2.antipode(), Matrix::identity(q(), 2));
        let s3g = FiniteGroup::symmetric(3);
        let s3 = group_algebra(q(), &s3g).unwrap();
        for g in s3g.elements() {
            assert_eq!(s3.apply_antipode(&s3.unit_vector(g)), s3.unit_vector(s3g.inv(g)));
        }
        let f2 = function_algebra(q(), &FiniteGroup::cyclic(2)).unwrap();
        let mut expected = SparseVec::unit(q(), 0);
        expected.add_at(3, &q().one());
        assert_eq!(*f2.delta_basis(0), expected);
    }

    #[test]
    fn function_algebra_is_dual_of_group_algebra() {
        let g = FiniteGroup::symmetric(3);
        let (kg, fg) = (group_algebra(q(), &g).unwrap(), function_algebra(q(), &g).unwrap());
        let n = g.order();
        // ⟨δ_a δ_b, c⟩ = ⟨δ_a ⊗ δ_b, Δc⟩ and ⟨Δδ_c, a ⊗ b⟩ = ⟨δ_c, ab⟩
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = fg.mu_basis(a, b).get(c).cloned().unwrap_or(q().zero());
                    let rhs = kg.delta_basis(c).get(a * n + b).cloned().unwrap_or(q().zero());
                    assert_eq!(lhs, rhs);
                    let lhs = fg.delta_basis(c).get(a * n + b).cloned().unwrap_or(q().zero());
                    let rhs = kg.mu_basis(a, b).get(c).cloned().unwrap_or(q().zero());
                    assert_eq!(lhs, rhs);
                }
            }
            assert_eq!(fg.counit()[a], kg.unit().get(a).cloned().unwrap_or(q().zero()));
        }
        assert_eq!(fg.antipode().transpose(), *kg.antipode());
    }

    #[test]
    fn tensor_of_group_algebras_matches_product_group() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let (v4, _, _) = direct_product(&z2, &z2);
        let k2 = group_algebra(q(), &z2).unwrap();
        let t = tensor_hopf(&k2, &k2).unwrap();
        let kv = group_algebra(q(), &v4).unwrap();
        assert_eq!(t.parts().mu, kv.parts().mu);
        assert_eq!(t.parts().delta, kv.parts().delta);
        assert_eq!(t.antipode(), kv.antipode());
        assert!(t.is_cocommutative());
        assert!(validate_hopf(&t).all_passed());
        let with_k = tensor_hopf(&k2, &HopfAlgebra::ground(q())).unwrap();
        assert_eq!(with_k.parts().mu, k2.parts().mu);
        assert_eq!(with_k.parts().delta, k2.parts().delta);
    }

    #[test]
    fn morphisms_of_group_and_function_algebras() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let sign = GroupHom::from_fn(s3.clone(), z2.clone(), |x| [0, 1, 1, 0, 0, 1][x]).unwrap();
        let ks = group_algebra_hom(q(), &sign).unwrap();
        assert!(hopf_hom_check(&ks).all_passed());
        assert!((0..6).all(|c| ks.map.sparse_column(c).len() == 1));
        let fs = function_algebra_hom(q(), &sign).unwrap();
        assert!(hopf_hom_check(&fs).all_passed());
        assert_eq!(fs.map, ks.map.transpose());
        let id = HopfHom::identity(ks.dom.clone());
        assert!(hopf_hom_check(&id).all_passed());
        let trivial = HopfHom::trivial(ks.dom.clone(), ks.cod.clone());
        assert_eq!(
            trivial,
            group_algebra_hom(q(), &GroupHom::trivial(s3.clone(), z2.clone())).unwrap()
        );
        // a projection onto the first coordinate is not multiplicative
        let mut m = Matrix::zeros(q(), 2, 6);
        m.set(0, 0, q().one());
        let bad = HopfHom::new(ks.dom.clone(), ks.cod.clone(), m).unwrap();
        assert!(!hopf_hom_check(&bad).passed("multiplicative"));
    }

    #[test]
    fn dual_of_projection_is_id_tensor_unit() {
        let g = Arc::new(FiniteGroup::cyclic(3));
        let h = Arc::new(FiniteGroup::cyclic(2));
        let (gh, p1, _) = direct_product(&g, &h);
        let kp1 = function_algebra_hom(q(), &p1).unwrap();
        let (fg, fh) = (function_algebra(q(), &g).unwrap(), function_algebra(q(), &h).unwrap());
        let id_tensor_unit: Vec<SparseVec> = (0..g.order())
            .map(|i| {
                let mut v = SparseVec::new();
                for (j, c) in fh.unit().iter() {
                    v.add_at(i * h.order() + j, c);
                }
                v
            })
            .collect();
        assert_eq!(kp1.map, Matrix::from_sparse_columns(q(), gh.order(), &id_tensor_unit));
        assert_eq!(fg.dim() * fh.dim(), gh.order());
    }
}
