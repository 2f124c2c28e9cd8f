use super::matrix::Matrix;
use super::{check_field, vector, Field, LinAlgError, Scalar};

/// A linear subspace of `k^n` stored by its reduced row-echelon basis, so two equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace, LinAlgError> {
        let mut e = EchelonBasis::new(field, ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinAlgError::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient_dim}",
                    v.len()
                )));
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(LinAlgError::FieldMismatch(field, x.field()));
            }
            e.insert(v.clone());
        }
        Ok(e.into_subspace())
    }

    /// Span of coordinate unit vectors.
    pub fn coordinate(field: Field, ambient_dim: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = indices.iter().map(|&i| vector::unit(field, ambient_dim, i)).collect();
        Subspace::span(field, ambient_dim, &vs).expect("unit vectors")
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Rows are the canonical basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// `ambient_dim × dim` matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            vector::axpy(&mut rest, &-c, self.basis.row(i));
        }
        vector::is_zero(&rest).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Vectors `x` with `⟨b, x⟩ = 0` for every basis vector `b`.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient_dim);
        }
        self.basis.kernel()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let mut e = EchelonBasis::from_subspace(self);
        for v in other.basis_vectors() {
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    /// Largest subspace contained in both, via the kernel of the stacked constraints.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let constraints = self.annihilator().sum(&other.annihilator())?;
        Ok(constraints.annihilator())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinAlgError> {
        check_field(self.field(), other.field())?;
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// Quotient of the ambient space by `self`; see [`Quotient`].
    pub fn quotient(&self) -> Quotient {
        Quotient::new(self)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Result<Subspace, LinAlgError> {
        let images: Result<Vec<_>, _> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field(), m.rows(), &images?)
    }
}

/// `ambient / w` with section basis given by the non-pivot coordinates of `w`'s
/// canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// Ambient coordinates whose unit vectors represent the quotient basis.
    pub section: Vec<usize>,
    /// `(ambient - dim w) × ambient`, vanishing exactly on `w`.
    pub projection: Matrix,
}

impl Quotient {
    pub fn new(w: &Subspace) -> Quotient {
        let n = w.ambient_dim();
        let field = w.field();
        let mut is_pivot = vec![false; n];
        for &p in w.pivots() {
            is_pivot[p] = true;
        }
        let section: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut projection = Matrix::zeros(field, section.len(), n);
        for (j, &c) in section.iter().enumerate() {
            projection.set(j, c, field.one());
            for (i, &p) in w.pivots().iter().enumerate() {
                let b = w.basis().get(i, c);
                if !b.is_zero() {
                    projection.set(j, p, -b);
                }
            }
        }
        Quotient { section, projection }
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v).expect("ambient vector")
    }

    /// Ambient representative of a quotient coordinate vector.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let field = self.projection.field();
        let mut v = vector::zeros(field, self.projection.cols());
        for (j, &c) in self.section.iter().enumerate() {
            v[c] = q[j].clone();
        }
        v
    }

    /// Projection of the `i`-th ambient unit vector (column `i`).
    pub fn project_unit(&self, i: usize) -> Vec<Scalar> {
        self.projection.column(i)
    }
}

/// Incrementally maintained reduced echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    n: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    pub fn new(field: Field, n: usize) -> Self {
        EchelonBasis {
            field,
            n,
            rows: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBasis {
            field: s.field(),
            n: s.ambient_dim(),
            rows: s.pivots().iter().copied().zip(s.basis_vectors()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows (result vanishes on every pivot).
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                vector::axpy(&mut v, &-&c, row);
            }
        }
        v
    }

    /// Insert a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        let v = vector::scale(&inv, &v);
        for (_, row) in &mut self.rows {
            let c = row[p].clone();
            if !c.is_zero() {
                vector::axpy(row, &-&c, &v);
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn into_subspace(mut self) -> Subspace {
        self.rows.sort_by_key(|(p, _)| *p);
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let data: Vec<Scalar> = self.rows.into_iter().flat_map(|(_, r)| r).collect();
        let basis = Matrix::new(self.field, pivots.len(), self.n, data).expect("consistent rows");
        Subspace {
            ambient_dim: self.n,
            basis,
            pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn intersection_examples() {
        let a = Subspace::span(q(), 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&Subspace::full(q(), 3)).unwrap(), a);
        let x = Subspace::span(q(), 2, &[v(&[1, 0])]).unwrap();
        let y = Subspace::span(q(), 2, &[v(&[0, 1])]).unwrap();
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);
        let mismatched = Subspace::full(q(), 4);
        assert!(a.intersect(&mismatched).is_err());
    }

    #[test]
    fn quotient_examples() {
        let zero = Subspace::zero(q(), 3);
        assert_eq!(zero.quotient().projection, Matrix::identity(q(), 3));
        assert_eq!(Subspace::full(q(), 3).quotient().dim(), 0);
        let w = Subspace::span(q(), 3, &[v(&[1, 1, 0])]).unwrap();
        let quo = w.quotient();
        assert_eq!(quo.dim(), 2);
        // projection ∘ inclusion = 0
        assert!(quo.projection.mul(&w.inclusion()).unwrap().is_zero());
        // lift then project is the identity on quotient coordinates
        let c = v(&[3, -2]);
        assert_eq!(quo.project(&quo.lift(&c)), c);
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::span(q(), 3, &[v(&[2, 0, 2]), v(&[0, 3, 3])]).unwrap();
        let w = v(&[1, 1, 2]);
        let c = s.coordinates(&w).unwrap();
        assert_eq!(s.inclusion().apply(&c).unwrap(), w);
        assert!(s.coordinates(&v(&[1, 0, 0])).is_none());
    }
}
