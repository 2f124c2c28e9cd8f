//! Finite-dimensional comodules over function algebras: cosimple blocks,
//! simple comodules, coefficient coalgebras and coend reconstruction, and the
//! comodule-level functors induced by group maps, by `∘` and by `ξ`.
//!
//! A coaction `ρ: V → V ⊗ C` is a `(dim V · dim C) × dim V` matrix with row
//! index `v · dim C + c`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{EchelonBasis, Field, Matrix, Scalar, SparseVec, Subspace};
use crate::fingrp::{FiniteGroup, GroupHom};
use crate::hopf::{dualize_hom, function_algebra, hopf_hom_check, HopfAlgebra};
use crate::hopflimits::is_subcoalgebra;
use crate::report::{first_failure, Report};
use crate::twogroup::TwoGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub coalgebra: Arc<HopfAlgebra>,
    pub dim: usize,
    pub coaction: Matrix,
}

impl Comodule {
    /// Checks the shape only; see [`validate_comodule`].
    pub fn new(coalgebra: Arc<HopfAlgebra>, dim: usize, coaction: Matrix) -> Result<Comodule> {
        if coaction.rows() != dim * coalgebra.dim() || coaction.cols() != dim || coaction.field() != coalgebra.field() {
            return Err(Error::Mismatch(format!(
                "{}×{} coaction for a {dim}-dimensional comodule over a {}-dimensional coalgebra",
                coaction.rows(),
                coaction.cols(),
                coalgebra.dim()
            )));
        }
        Ok(Comodule {
            coalgebra,
            dim,
            coaction,
        })
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    /// `ρ(e_v)` as a sparse vector of `V ⊗ C`.
    pub fn rho(&self, v: usize) -> SparseVec {
        self.coaction.sparse_column(v)
    }

    /// The matrix coefficient `(e_w* ⊗ id)ρ(e_v) ∈ C`.
    pub fn coefficient(&self, w: usize, v: usize) -> SparseVec {
        let c = self.coalgebra.dim();
        let mut out = SparseVec::new();
        for (idx, x) in self.rho(v).iter() {
            if idx / c == w {
                out.add_at(idx % c, x);
            }
        }
        out
    }
}

/// Coassociativity and counit of the coaction.
pub fn validate_comodule(m: &Comodule) -> Report {
    let h = &m.coalgebra;
    let c = h.dim();
    let mut r = Report::new();
    r.check(
        "coassociativity",
        "(ρ ⊗ id)ρ = (id ⊗ Δ)ρ",
        first_failure(0..m.dim, |&v| {
            let rho = m.rho(v);
            let mut lhs = SparseVec::new();
            let mut rhs = SparseVec::new();
            for (idx, x) in rho.iter() {
                let (w, k) = (idx / c, idx % c);
                for (jdx, y) in m.rho(w).iter() {
                    lhs.add_at(jdx * c + k, &(x * y));
                }
                for (kl, y) in h.delta_basis(k).iter() {
                    rhs.add_at(w * c * c + kl, &(x * y));
                }
            }
            (lhs != rhs).then(|| format!("basis vector {v}"))
        }),
    );
    r.check(
        "counit",
        "(id ⊗ ε)ρ = id",
        first_failure(0..m.dim, |&v| {
            let mut out = SparseVec::new();
            for (idx, x) in m.rho(v).iter() {
                out.add_at(idx / c, &(x * &h.counit()[idx % c]));
            }
            (out != SparseVec::unit(m.field(), v)).then(|| format!("basis vector {v}"))
        }),
    );
    r
}

#[derive(Clone, Debug)]
pub struct ComoduleMorphism {
    pub dom: Arc<Comodule>,
    pub cod: Arc<Comodule>,
    pub map: Matrix,
}

impl ComoduleMorphism {
    pub fn new(dom: Arc<Comodule>, cod: Arc<Comodule>, map: Matrix) -> Result<ComoduleMorphism> {
        if dom.coalgebra != cod.coalgebra || map.rows() != cod.dim || map.cols() != dom.dim {
            return Err(Error::Mismatch("comodule morphism has the wrong signature".into()));
        }
        Ok(ComoduleMorphism { dom, cod, map })
    }

    /// `ρ′ f = (f ⊗ id) ρ`.
    pub fn check(&self) -> Result<(), String> {
        let c = self.dom.coalgebra.dim();
        let cols = self.map.sparse_columns();
        first_failure(0..self.dom.dim, |&v| {
            let lhs = self.cod.coaction.apply_sparse(&cols[v]);
            let mut rhs = SparseVec::new();
            for (idx, x) in self.dom.rho(v).iter() {
                for (w, y) in cols[idx / c].iter() {
                    rhs.add_at(w * c + idx % c, &(x * y));
                }
            }
            (lhs != rhs).then(|| format!("basis vector {v}"))
        })
    }
}

/// The space of comodule maps `Hom(m₁, m₂)` as a subspace of `dim m₂ × dim m₁` matrices
/// (row-major coordinates).
pub fn comodule_hom_space(m1: &Comodule, m2: &Comodule) -> Result<Subspace> {
    if m1.coalgebra != m2.coalgebra {
        return Err(Error::Mismatch("comodules over different coalgebras".into()));
    }
    let field = m1.field();
    let c = m1.coalgebra.dim();
    let (d1, d2) = (m1.dim, m2.dim);
    let unknowns = d2 * d1;
    // equation (v, w, k): Σ_u T[u][v] ρ₂(u)[w,k] − Σ_x ρ₁(v)[x,k] T[w][x] = 0
    let mut rows: Vec<SparseVec> = vec![SparseVec::new(); d1 * d2 * c];
    for v in 0..d1 {
        for u in 0..d2 {
            for (idx, y) in m2.rho(u).iter() {
                rows[(v * d2 + idx / c) * c + idx % c].add_at(u * d1 + v, y);
            }
        }
        for (idx, x) in m1.rho(v).iter() {
            let (xi, k) = (idx / c, idx % c);
            for w in 0..d2 {
                rows[(v * d2 + w) * c + k].add_at(w * d1 + xi, &-x);
            }
        }
    }
    let mut ech = EchelonBasis::new(field, unknowns);
    for r in rows.iter().filter(|r| !r.is_zero()) {
        ech.insert(r.to_dense(field, unknowns));
        if ech.rank() == unknowns {
            break;
        }
    }
    Ok(ech.into_subspace().annihilator())
}

/// `V = H`, `ρ = Δ`.
pub fn regular_comodule(h: &Arc<HopfAlgebra>) -> Comodule {
    let n = h.dim();
    let cols: Vec<SparseVec> = (0..n).map(|i| h.delta_basis(i).clone()).collect();
    Comodule {
        coalgebra: h.clone(),
        dim: n,
        coaction: Matrix::from_sparse_columns(h.field(), n * n, &cols),
    }
}

/// The 1-dimensional comodule `v ↦ v ⊗ Σ_g χ(g) δ_g` of a function algebra.
pub fn character_comodule(h: &Arc<HopfAlgebra>, chi: &[Scalar]) -> Result<Comodule> {
    if chi.len() != h.dim() {
        return Err(Error::Mismatch("character has the wrong length".into()));
    }
    let col = SparseVec::from_dense(chi);
    Comodule::new(h.clone(), 1, Matrix::from_sparse_columns(h.field(), h.dim(), &[col]))
}

/// Span of all matrix coefficients; errors if it is not a subcoalgebra.
pub fn coefficient_coalgebra(m: &Comodule) -> Result<Subspace> {
    let field = m.field();
    let n = m.coalgebra.dim();
    let mut ech = EchelonBasis::new(field, n);
    'outer: for v in 0..m.dim {
        for w in 0..m.dim {
            let c = m.coefficient(w, v);
            if !c.is_zero() {
                ech.insert(c.to_dense(field, n));
                if ech.rank() == n {
                    break 'outer;
                }
            }
        }
    }
    let s = ech.into_subspace();
    if !is_subcoalgebra(&m.coalgebra, &s) {
        return Err(Error::invalid(
            "coefficient coalgebra",
            "matrix coefficients are not closed under Δ",
        ));
    }
    Ok(s)
}

/// Sum of coefficient coalgebras and whether it is all of `h`.
pub fn coend_from_comodules(h: &Arc<HopfAlgebra>, ms: &[Comodule]) -> Result<(Subspace, bool)> {
    let mut acc = Subspace::zero(h.field(), h.dim());
    for m in ms {
        if m.coalgebra != *h {
            return Err(Error::Mismatch("comodule over a different coalgebra".into()));
        }
        acc = acc.sum(&coefficient_coalgebra(m)?)?;
    }
    let full = acc.dim() == h.dim();
    Ok((acc, full))
}

/// The same vector space viewed over `k(dom f)`: coaction `(id ⊗ k(f))ρ`.
pub fn rep_functor(f: &GroupHom, m: &Comodule) -> Result<Comodule> {
    let field = m.field();
    let cod_alg = Arc::new(function_algebra(field, f.cod())?);
    if m.coalgebra != cod_alg {
        return Err(Error::Mismatch(
            "comodule is not over the function algebra of the codomain".into(),
        ));
    }
    let dom_alg = Arc::new(function_algebra(field, f.dom())?);
    pull_along(&dualize_hom(f, &cod_alg, &dom_alg)?.columns(), dom_alg, m)
}

fn pull_along(kf: &[SparseVec], target: Arc<HopfAlgebra>, m: &Comodule) -> Result<Comodule> {
    let (c, c2) = (m.coalgebra.dim(), target.dim());
    let cols: Vec<SparseVec> = (0..m.dim)
        .map(|v| {
            let mut out = SparseVec::new();
            for (idx, x) in m.rho(v).iter() {
                for (g, y) in kf[idx % c].iter() {
                    out.add_at((idx / c) * c2 + g, &(x * y));
                }
            }
            out
        })
        .collect();
    let field = m.field();
    Comodule::new(target, m.dim, Matrix::from_sparse_columns(field, m.dim * c2, &cols))
}

/// Pull a `k(G₁)`-comodule back along `∘: G₁ ×_{G₀} G₁ → G₁`.
pub fn rep_underline_delta(g: &TwoGroup, m: &Comodule) -> Result<Comodule> {
    let pb = g.pullback_group()?;
    rep_functor(&g.composition_hom(&pb)?, m)
}

/// Pull a `k(G₁)`-comodule back along `ξ`; `k(ξ)` is checked to be a coalgebra map first.
pub fn rep_antipode(g: &TwoGroup, m: &Comodule) -> Result<Comodule> {
    let xi = g.vertical_inverse_hom()?;
    let alg = Arc::new(function_algebra(m.field(), g.g1())?);
    let kxi = dualize_hom(&xi, &alg, &alg)?;
    let hc = hopf_hom_check(&kxi);
    for id in ["comultiplicative", "counital"] {
        if !hc.passed(id) {
            return Err(Error::invalid(
                "k(ξ)",
                format!("not a coalgebra map ({id}); upstream bug"),
            ));
        }
    }
    rep_functor(&xi, m)
}

/// A Peter–Weyl block of `k(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimpleBlock {
    pub carrier: Subspace,
    pub simple_dim: usize,
    /// The primitive central idempotent of `k[G]` cutting out the dual block.
    pub idempotent: Vec<Scalar>,
}

/// `p ∤ |G|` and `p ≡ 1 mod exponent(G)`.
pub fn check_splitting(field: Field, g: &FiniteGroup) -> Result<()> {
    let p = match field {
        Field::Rational => return Err(Error::NotSplitting("a prime field F_p is required".into())),
        Field::Prime(p) => p,
    };
    if field.divides(g.order()) {
        return Err(Error::Characteristic { p, order: g.order() });
    }
    let e = g.exponent() as u64;
    if p % e != 1 % e {
        return Err(Error::NotSplitting(format!("{p} ≢ 1 mod {e} (exponent of the group)")));
    }
    Ok(())
}

/// The centre of `k[G]` on the class-sum basis.
struct Centre {
    field: Field,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// `mult[a][b]` = class coordinates of `z_a z_b`.
    mult: Vec<Vec<Vec<Scalar>>>,
}

impl Centre {
    fn new(field: Field, g: &FiniteGroup) -> Centre {
        let classes = g.conjugacy_classes();
        let r = classes.len();
        let mut class_of = vec![0; g.order()];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        let mut mult = vec![vec![vec![field.zero(); r]; r]; r];
        for a in 0..r {
            for b in 0..r {
                let mut counts = vec![0i64; g.order()];
                for &x in &classes[a] {
                    for &y in &classes[b] {
                        counts[g.mul(x, y)] += 1;
                    }
                }
                for (c, cls) in classes.iter().enumerate() {
                    mult[a][b][c] = field.from_i64(counts[cls[0]]);
                }
            }
        }
        Centre {
            field,
            classes,
            class_of,
            mult,
        }
    }

    fn rank(&self) -> usize {
        self.classes.len()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let r = self.rank();
        let mut out = vec![self.field.zero(); r];
        for a in (0..r).filter(|&a| !x[a].is_zero()) {
            for b in (0..r).filter(|&b| !y[b].is_zero()) {
                let xy = &x[a] * &y[b];
                for c in 0..r {
                    if !self.mult[a][b][c].is_zero() {
                        out[c] = &out[c] + &(&xy * &self.mult[a][b][c]);
                    }
                }
            }
        }
        out
    }

    fn to_group_algebra(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.class_of.iter().map(|&c| x[c].clone()).collect()
    }

    /// Multiplication by `z_a` as an `r × r` matrix.
    fn operator(&self, a: usize) -> Matrix {
        let r = self.rank();
        let cols: Vec<Vec<Scalar>> = (0..r).map(|b| self.mult[a][b].clone()).collect();
        Matrix::from_columns(self.field, r, &cols).expect("square")
    }
}

/// Primitive central idempotents by exhaustive search over the centre, in
/// class-sum coordinates. Returns `None` when the search space is too large.
pub fn central_idempotents_brute(field: Field, g: &FiniteGroup) -> Option<Vec<Vec<Scalar>>> {
    let z = Centre::new(field, g);
    let r = z.rank();
    let elems = field.elements()?;
    let p = elems.len();
    if r > 4 || (p as u64).checked_pow(r as u32)? > 2_000_000 {
        return None;
    }
    let total = p.pow(r as u32);
    let mut idem = Vec::new();
    for code in 1..total {
        let mut c = code;
        let x: Vec<Scalar> = (0..r)
            .map(|_| {
                let v = elems[c % p].clone();
                c /= p;
                v
            })
            .collect();
        if z.mul(&x, &x) == x {
            idem.push(x);
        }
    }
    let primitive: Vec<Vec<Scalar>> = idem
        .iter()
        .filter(|e| idem.iter().all(|f| f == *e || z.mul(f, e) != *f))
        .cloned()
        .collect();
    Some(primitive)
}

/// Primitive central idempotents by simultaneous eigenspace splitting of the
/// class-sum multiplication operators.
pub fn central_idempotents_split(field: Field, g: &FiniteGroup) -> Result<Vec<Vec<Scalar>>> {
    let z = Centre::new(field, g);
    let r = z.rank();
    let elems = field
        .elements()
        .ok_or_else(|| Error::NotSplitting("eigenvalue search needs a prime field".into()))?;
    let mut spaces = vec![Subspace::full(field, r)];
    for a in 0..r {
        let op = z.operator(a);
        let mut next = Vec::new();
        for w in spaces {
            if w.dim() == 1 {
                next.push(w);
                continue;
            }
            let mut found = 0;
            for lambda in &elems {
                let shifted = op.sub(&Matrix::identity(field, r).scale(lambda))?;
                let k = shifted.kernel().intersect(&w)?;
                if k.dim() > 0 {
                    found += k.dim();
                    next.push(k);
                }
                if found == w.dim() {
                    break;
                }
            }
            if found != w.dim() {
                return Err(Error::NotSplitting(
                    "class-sum operator does not split over the field".into(),
                ));
            }
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(spaces.len());
    for w in spaces {
        if w.dim() != 1 {
            return Err(Error::NotSplitting("centre is not split semisimple".into()));
        }
        let v = w.basis().row(0).to_vec();
        let sq = z.mul(&v, &v);
        let k = w.coordinates(&sq).expect("eigenline is closed under multiplication")[0].clone();
        let inv = k
            .inv()
            .ok_or_else(|| Error::NotSplitting("centre is not semisimple".into()))?;
        out.push(v.iter().map(|x| x * &inv).collect());
    }
    out.sort();
    Ok(out)
}

fn group_algebra_mul(g: &FiniteGroup, field: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); g.order()];
    for x in (0..g.order()).filter(|&x| !a[x].is_zero()) {
        for y in (0..g.order()).filter(|&y| !b[y].is_zero()) {
            let k = g.mul(x, y);
            out[k] = &out[k] + &(&a[x] * &b[y]);
        }
    }
    out
}

/// Left multiplication by `e` on `k[G]`.
fn left_mult(g: &FiniteGroup, field: Field, e: &[Scalar]) -> Matrix {
    let cols: Vec<Vec<Scalar>> = g
        .elements()
        .map(|x| {
            let mut u = vec![field.zero(); g.order()];
            u[x] = field.one();
            group_algebra_mul(g, field, e, &u)
        })
        .collect();
    Matrix::from_columns(field, g.order(), &cols).expect("square")
}

fn perfect_square_root(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// Blocks of `k(G)`, one per conjugacy class, ordered by their idempotents.
pub fn cosimple_decomposition(h: &HopfAlgebra, g: &FiniteGroup) -> Result<Vec<CosimpleBlock>> {
    let field = h.field();
    check_splitting(field, g)?;
    if *h != function_algebra(field, g)? {
        return Err(Error::Mismatch(
            "algebra is not the function algebra of the group".into(),
        ));
    }
    let z = Centre::new(field, g);
    let idem = central_idempotents_split(field, g)?;
    let mut blocks = Vec::with_capacity(idem.len());
    for e in idem {
        let e_g = z.to_group_algebra(&e);
        let carrier = left_mult(g, field, &e_g).transpose().image();
        let simple_dim = perfect_square_root(carrier.dim())
            .ok_or_else(|| Error::invalid("cosimple block", format!("dimension {} is not a square", carrier.dim())))?;
        blocks.push(CosimpleBlock {
            carrier,
            simple_dim,
            idempotent: e_g,
        });
    }
    Ok(blocks)
}

/// A simple comodule for each block: `k[G] f` for a primitive idempotent `f`
/// below the block idempotent, turned into a `k(G)`-comodule by
/// `ρ(m) = Σ_g g·m ⊗ δ_g`.
pub fn simple_comodules(h: &Arc<HopfAlgebra>, g: &FiniteGroup) -> Result<Vec<Comodule>> {
    let field = h.field();
    let blocks = cosimple_decomposition(h, g)?;
    let elems = field.elements().expect("checked by cosimple_decomposition");
    let n = g.order();
    let unit = |x: usize| {
        let mut u = vec![field.zero(); n];
        u[x] = field.one();
        u
    };
    let corner_dim = |f: &[Scalar]| {
        let vs: Vec<Vec<Scalar>> = g
            .elements()
            .map(|x| group_algebra_mul(g, field, &group_algebra_mul(g, field, f, &unit(x)), f))
            .collect();
        Subspace::span(field, n, &vs).expect("length n").dim()
    };
    let mut out = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut f = b.idempotent.clone();
        let mut guard = 0;
        while corner_dim(&f) > 1 {
            guard += 1;
            if guard > n * elems.len() + 1 {
                return Err(Error::NotSplitting("no primitive idempotent found".into()));
            }
            f = refine_idempotent(g, field, &f, &elems, guard).unwrap_or(f);
        }
        out.push(module_to_comodule(h, g, &f)?);
    }
    Ok(out)
}

/// Try the candidate `f·(x + c·y)·f` indexed by `seed`; if its minimal polynomial
/// in the corner algebra splits with distinct roots, return a spectral idempotent.
fn refine_idempotent(
    g: &FiniteGroup,
    field: Field,
    f: &[Scalar],
    elems: &[Scalar],
    seed: usize,
) -> Option<Vec<Scalar>> {
    let n = g.order();
    let p = elems.len();
    let (x, y, c) = (seed % n, (seed / n) % n, elems[(seed / (n * n)) % p.max(1)].clone());
    let mut u = vec![field.zero(); n];
    u[x] = &u[x] + &field.one();
    u[y] = &u[y] + &c;
    let a = group_algebra_mul(g, field, &group_algebra_mul(g, field, f, &u), f);
    // minimal polynomial of a in the corner algebra: first linear dependency among f, a, a², …
    let mut powers = vec![f.to_vec()];
    let mut ech = EchelonBasis::new(field, n);
    ech.insert(f.to_vec());
    loop {
        let next = group_algebra_mul(g, field, powers.last().unwrap(), &a);
        if !ech.insert(next.clone()) {
            powers.push(next);
            break;
        }
        powers.push(next);
    }
    let deg = powers.len() - 1;
    if deg < 2 {
        return None;
    }
    let coeffs = span_coordinates(field, &powers[..deg], powers.last().unwrap())?;
    // a^deg = Σ cᵢ aⁱ, so the roots of Xᵈᵉᵍ − Σ cᵢ Xⁱ are the eigenvalues
    let eval = |lambda: &Scalar| {
        let mut sum = field.zero();
        let mut li = field.one();
        for ci in &coeffs {
            sum = &sum + &(ci * &li);
            li = &li * lambda;
        }
        &li - &sum
    };
    let roots: Vec<Scalar> = elems.iter().filter(|l| eval(l).is_zero()).cloned().collect();
    if roots.len() != deg {
        return None;
    }
    let lambda = &roots[0];
    let mut e = f.to_vec();
    for mu in &roots[1..] {
        let denom = (lambda - mu).inv()?;
        let shifted: Vec<Scalar> = a.iter().zip(f).map(|(ai, fi)| &(ai - &(mu * fi)) * &denom).collect();
        e = group_algebra_mul(g, field, &e, &shifted);
    }
    (group_algebra_mul(g, field, &e, &e) == e && e != f && e.iter().any(|x| !x.is_zero())).then_some(e)
}

fn span_coordinates(field: Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols: Vec<Vec<Scalar>> = basis.to_vec();
    let m = Matrix::from_columns(field, v.len(), &cols).ok()?;
    let aug = m
        .hstack(&Matrix::from_columns(field, v.len(), &[v.to_vec()]).ok()?)
        .ok()?;
    let (rref, pivots) = aug.rref().ok()?;
    if pivots.contains(&basis.len()) {
        return None;
    }
    let mut out = vec![field.zero(); basis.len()];
    for (row, &pc) in pivots.iter().enumerate() {
        out[pc] = rref.get(row, basis.len()).clone();
    }
    Some(out)
}

/// The left ideal `k[G] f` as a `k(G)`-comodule.
fn module_to_comodule(h: &Arc<HopfAlgebra>, g: &FiniteGroup, f: &[Scalar]) -> Result<Comodule> {
    let field = h.field();
    let n = g.order();
    let unit = |x: usize| {
        let mut u = vec![field.zero(); n];
        u[x] = field.one();
        u
    };
    let vs: Vec<Vec<Scalar>> = g.elements().map(|x| group_algebra_mul(g, field, &unit(x), f)).collect();
    let m = Subspace::span(field, n, &vs)?;
    let d = m.dim();
    let mut cols = vec![SparseVec::new(); d];
    for (i, b) in m.basis_vectors().iter().enumerate() {
        for x in g.elements() {
            let gb = group_algebra_mul(g, field, &unit(x), b);
            let coords = m.coordinates(&gb).expect("left ideal");
            for (j, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    cols[i].add_at(j * n + x, c);
                }
            }
        }
    }
    Comodule::new(h.clone(), d, Matrix::from_sparse_columns(field, d * n, &cols))
}

/// Block count, square block dimensions, Peter–Weyl dimension sum, blocks as
/// subcoalgebras, agreement with brute force where feasible, and simple
/// comodules with one-dimensional endomorphism spaces and the right coefficients.
pub fn semisimplicity_check(h: &Arc<HopfAlgebra>, g: &FiniteGroup) -> Result<Report> {
    let field = h.field();
    let blocks = cosimple_decomposition(h, g)?;
    let mut r = Report::new();
    let classes = g.conjugacy_classes().len();
    r.check(
        "blocks.count",
        "one block per conjugacy class",
        (blocks.len() == classes)
            .then_some(())
            .ok_or_else(|| format!("{} blocks, {classes} classes", blocks.len())),
    );
    r.check(
        "blocks.square",
        "dim block = (simple dim)²",
        first_failure(blocks.iter().enumerate(), |(i, b)| {
            (b.carrier.dim() != b.simple_dim * b.simple_dim).then(|| format!("block {i}"))
        }),
    );
    let total: usize = blocks.iter().map(|b| b.carrier.dim()).sum();
    r.check(
        "blocks.sum",
        "Σ (simple dim)² = |G|",
        (total == g.order())
            .then_some(())
            .ok_or_else(|| format!("{total} ≠ {}", g.order())),
    );
    r.check(
        "blocks.subcoalgebra",
        "each block is a subcoalgebra",
        first_failure(blocks.iter().enumerate(), |(i, b)| {
            (!is_subcoalgebra(h, &b.carrier)).then(|| format!("block {i}"))
        }),
    );
    if let Some(brute) = central_idempotents_brute(field, g) {
        let mut brute: Vec<Vec<Scalar>> = brute;
        brute.sort();
        let split = central_idempotents_split(field, g)?;
        r.check(
            "blocks.brute_force",
            "exhaustive idempotent search agrees",
            (brute == split)
                .then_some(())
                .ok_or_else(|| format!("{} vs {} idempotents", brute.len(), split.len())),
        );
    }
    let simples = simple_comodules(h, g)?;
    r.check(
        "simple.valid",
        "simple comodules are comodules",
        first_failure(simples.iter().enumerate(), |(i, m)| {
            (!validate_comodule(m).all_passed()).then(|| format!("simple {i}"))
        }),
    );
    let mut coeff_outcome = Ok(());
    let mut end_outcome = Ok(());
    for (i, (m, b)) in simples.iter().zip(&blocks).enumerate() {
        if coeff_outcome.is_ok() && coefficient_coalgebra(m)? != b.carrier {
            coeff_outcome = Err(format!("simple {i}"));
        }
        let end = comodule_hom_space(m, m)?.dim();
        if end_outcome.is_ok() && end != 1 {
            end_outcome = Err(format!("simple {i}: dim End = {end}"));
        }
    }
    r.check(
        "simple.coefficients",
        "coefficients of the simple comodule fill its block",
        coeff_outcome,
    );
    r.check("simple.endomorphisms", "dim End(V) = 1", end_outcome);
    Ok(r)
}

/// Comodule-level structure of a 2-group: functoriality of pulling back along
/// `ι` and `s`, involutivity of the `ξ` pullback and the `∘` pullback of the
/// regular comodule landing in the image of `Δ̲`.
pub fn rep_level_checks(field: Field, g: &Arc<TwoGroup>) -> Result<Report> {
    let (s, iota) = (g.s_hom()?, g.iota_hom()?);
    let k0 = Arc::new(function_algebra(field, g.g0())?);
    let k1 = Arc::new(function_algebra(field, g.g1())?);
    let (m0, m1) = (regular_comodule(&k0), regular_comodule(&k1));
    let mut r = Report::new();
    let functorial = |f: &GroupHom, h: &GroupHom, m: &Comodule| -> Result<bool> {
        Ok(rep_functor(f, &rep_functor(h, m)?)? == rep_functor(&f.then(h)?, m)?)
    };
    let ok0 = functorial(&iota, &s, &m0)?;
    let ok1 = functorial(&s, &iota, &m1)?;
    r.check(
        "functoriality",
        "Rep(f) Rep(g) = Rep(g f)",
        match (ok0, ok1) {
            (true, true) => Ok(()),
            (false, _) => Err("ι then s on the regular k(G₀)-comodule".into()),
            _ => Err("s then ι on the regular k(G₁)-comodule".into()),
        },
    );
    let twice = rep_antipode(g, &rep_antipode(g, &m1)?)?;
    r.check(
        "antipode_involution",
        "Rep(ξ) Rep(ξ) = id",
        (twice == m1)
            .then_some(())
            .ok_or_else(|| "coaction changed".to_string()),
    );
    let pulled = rep_underline_delta(g, &m1)?;
    let pb = g.pullback_group()?;
    let kp = Arc::new(function_algebra(field, &pb.group)?);
    let kcirc = dualize_hom(&g.composition_hom(&pb)?, &k1, &kp)?;
    let n = k1.dim();
    let expected: Vec<SparseVec> = (0..n)
        .map(|v| {
            crate::hopf::tensor_apply(
                &Matrix::identity(field, n).sparse_columns(),
                &kcirc.columns(),
                kp.dim(),
                n,
                k1.delta_basis(v),
            )
        })
        .collect();
    r.check(
        "underline_delta_regular",
        "Rep(∘) of the regular comodule has coaction (id ⊗ k(∘))Δ",
        first_failure(0..n, |&v| {
            (pulled.rho(v) != expected[v]).then(|| k1.name(v).to_string())
        }),
    );
    let co = crate::cotrialg::cotrialgebra_from_2group(field, g)?;
    let po = &co.pushout;
    let kp1 = dualize_hom(&pb.p1, &k1, &kp)?;
    let kp2 = dualize_hom(&pb.p2, &k1, &kp)?;
    let cmp = po.mediate(&kp1, &kp2)?;
    let image = co.delta_under.then(&cmp)?.map.image();
    let coeff = coefficient_coalgebra(&pulled)?;
    r.check(
        "underline_delta_containment",
        "coefficients of Rep(∘)(V) lie in the image of Δ̲",
        coeff
            .is_subspace_of(&image)
            .then_some(())
            .ok_or_else(|| "coefficient outside the image".to_string()),
    );
    Ok(r)
}
