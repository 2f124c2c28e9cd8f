use std::fmt;

use super::subspace::Subspace;
use super::{check_field, vector, Field, LinAlgError, Scalar, SparseVec};

/// Dense row-major matrix over a single field. A matrix acts on column
/// coordinate vectors, so `a.mul(&b)` is "first `b`, then `a`".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(LinAlgError::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Result<Matrix, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_i64(v))).collect();
        Matrix::new(field, rows.len(), cols, data)
    }

    /// Build from a list of rows of scalars (all of length `cols`).
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinAlgError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Build from columns of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Matrix, LinAlgError> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(LinAlgError::DimensionMismatch("ragged columns".into()));
        }
        let cols = columns.len();
        let mut m = Matrix::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                check_field(field, x.field())?;
                m.data[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch in Matrix::set");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<(), LinAlgError> {
        check_field(self.field, other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix {
            data,
            ..self.clone_shape()
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix {
            data,
            ..self.clone_shape()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            data: vector::scale(c, &self.data),
            ..self.clone_shape()
        }
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
        }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        check_field(self.field, other.field)?;
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                vector::axpy(out_row, a, other.row(k));
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "vector of length {} for a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(LinAlgError::FieldMismatch(self.field, x.field()));
        }
        let mut out = vector::zeros(self.field, self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + k];
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; row `(i, j)` of the result has index `i * b.rows + j`.
    pub fn tensor(&self, b: &Matrix) -> Result<Matrix, LinAlgError> {
        check_field(self.field, b.field)?;
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..b.rows {
                    for l in 0..b.cols {
                        let x = b.get(j, l);
                        if !x.is_zero() {
                            out.data[(i * b.rows + j) * cols + k * b.cols + l] = a * x;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        check_field(self.field, other.field)?;
        if self.rows != other.rows {
            return Err(LinAlgError::DimensionMismatch("hstack row counts differ".into()));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix::new(self.field, self.rows, cols, data)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        check_field(self.field, other.field)?;
        if self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(self.field, self.rows + other.rows, self.cols, data)
    }

    /// Reduced row-echelon form and its strictly increasing pivot columns.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>), LinAlgError> {
        if let Some(bad) = self.data.iter().find(|x| x.field() != self.field) {
            return Err(LinAlgError::FieldMismatch(self.field, bad.field()));
        }
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inv().expect("nonzero pivot");
            for x in &mut m.data[lead * m.cols..(lead + 1) * m.cols] {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let f = m.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                let neg = -&f;
                let cols = m.cols;
                vector::axpy(&mut m.data[r * cols..(r + 1) * cols], &neg, &pivot_row);
            }
            pivots.push(c);
            lead += 1;
        }
        Ok((m, pivots))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().map(|(_, p)| p.len()).unwrap_or(0)
    }

    /// Null space `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref().expect("matrix entries share its field");
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vec<Scalar>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vector::zeros(self.field, self.cols);
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &vectors).expect("consistent kernel vectors")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, &self.columns()).expect("consistent columns")
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let (r, pivots) = aug.rref().ok()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Some(inv)
    }

    /// Matrix of the set map `i ↦ map[i]` on basis vectors (a `codim × map.len()` 0/1 matrix).
    pub fn from_basis_map(field: Field, codim: usize, map: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(field, codim, map.len());
        for (j, &i) in map.iter().enumerate() {
            m.data[i * map.len() + j] = field.one();
        }
        m
    }
}

impl Matrix {
    pub fn from_sparse_columns(field: Field, rows: usize, columns: &[SparseVec]) -> Matrix {
        let cols = columns.len();
        let mut m = Matrix::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn sparse_column(&self, c: usize) -> SparseVec {
        let mut v = SparseVec::new();
        for r in 0..self.rows {
            v.add_at(r, self.get(r, c));
        }
        v
    }

    pub fn sparse_columns(&self) -> Vec<SparseVec> {
        (0..self.cols).map(|c| self.sparse_column(c)).collect()
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, x) in v.iter() {
            for r in 0..self.rows {
                let a = self.get(r, k);
                if !a.is_zero() {
                    out.add_at(r, &(a * x));
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(id.rref().unwrap(), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::zeros(q(), 2, 2);
        assert_eq!(z.rref().unwrap(), (z.clone(), vec![]));
    }

    #[test]
    fn rref_by_hand() {
        // [[2,4],[1,2]]: halve row 0, subtract it from row 1.
        let m = Matrix::from_i64_rows(q(), &[vec![2, 4], vec![1, 2]]).unwrap();
        let expect = Matrix::from_i64_rows(q(), &[vec![1, 2], vec![0, 0]]).unwrap();
        assert_eq!(m.rref().unwrap(), (expect, vec![0]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(q(), 4).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(q(), 2, 3).kernel().dim(), 3);
        let k = Matrix::from_i64_rows(q(), &[vec![1, 1]]).unwrap().kernel();
        assert_eq!(k.dim(), 1);
        // span{(1,-1)} in canonical form is the row (1,-1).
        assert_eq!(k.basis().row(0), &[q().from_i64(1), q().from_i64(-1)]);
    }

    #[test]
    fn tensor_examples() {
        let id2 = Matrix::identity(q(), 2);
        let id3 = Matrix::identity(q(), 3);
        assert_eq!(id2.tensor(&id3).unwrap(), Matrix::identity(q(), 6));
        assert!(id2.tensor(&Matrix::zeros(q(), 2, 2)).unwrap().is_zero());
        let a = Matrix::from_i64_rows(q(), &[vec![2]]).unwrap();
        let b = Matrix::from_i64_rows(q(), &[vec![3]]).unwrap();
        assert_eq!(a.tensor(&b).unwrap(), Matrix::from_i64_rows(q(), &[vec![6]]).unwrap());
    }

    #[test]
    fn mixed_fields_rejected() {
        let f5 = Field::prime(5).unwrap();
        let data = vec![q().one(), f5.one()];
        assert!(matches!(
            Matrix::new(q(), 1, 2, data),
            Err(LinAlgError::FieldMismatch(..))
        ));
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(f5, 2);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64_rows(q(), &[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(q(), 2));
        let singular = Matrix::from_i64_rows(q(), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }
}
