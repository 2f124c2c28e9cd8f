//! Exact linear algebra over `Q` and `F_p`.
//!
//! Dense row-major matrices, canonical (reduced row-echelon) subspaces, quotients,
//! and sparse vectors for the tensor-square spaces that coalgebra computations
//! live in.
//!
//! Tensor index convention, used by every module of the crate: the basis vector
//! `e_i ⊗ e_j` of `A ⊗ B` has index `i * dim(B) + j`.

mod matrix;
mod scalar;
mod sparse;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use sparse::SparseVec;
pub use subspace::{EchelonBasis, Quotient, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
}

pub(crate) fn check_field(a: Field, b: Field) -> Result<(), LinAlgError> {
    if a == b {
        Ok(())
    } else {
        Err(LinAlgError::FieldMismatch(a, b))
    }
}

/// Dense vector helpers.
pub mod vector {
    use super::{Field, Scalar};

    pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    /// `y += c * x`
    pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !xi.is_zero() {
                *yi = &*yi + &(c * xi);
            }
        }
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(|x| c * x).collect()
    }

    pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = field.zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
        acc
    }

    /// Kronecker product of coordinate vectors under the global index convention.
    pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x * y);
            }
        }
        out
    }
}
