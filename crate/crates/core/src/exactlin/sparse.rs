use std::collections::BTreeMap;

use super::{Field, Scalar};

/// Sparse coordinate vector with no stored zeros; equality is literal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn unit(field: Field, i: usize) -> Self {
        let mut v = SparseVec::new();
        v.entries.insert(i, field.one());
        v
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, field: Field, n: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); n];
        for (&i, x) in &self.entries {
            out[i] = x.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, x)| (i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// `self += c * e_i`
    pub fn add_at(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(x) => {
                let s = &*x + c;
                if s.is_zero() {
                    self.entries.remove(&i);
                } else {
                    *x = s;
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_at(i, &(c * x));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        for (i, x) in other.iter() {
            out.add_at(i, &-x);
        }
        out
    }

    /// `a ⊗ b` with `b` of length `b_dim`.
    pub fn tensor_pair(a: &SparseVec, b: &SparseVec, b_dim: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_at(i * b_dim + j, &(x * y));
            }
        }
        out
    }

    /// Reindex entries through `f`, summing collisions.
    pub fn remap(&self, mut f: impl FnMut(usize) -> usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in self.iter() {
            out.add_at(f(i), x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let q = Field::Rational;
        let mut v = SparseVec::unit(q, 3);
        v.add_at(3, &q.from_i64(-1));
        assert!(v.is_zero());
        let d = vec![q.zero(), q.from_i64(2), q.zero()];
        assert_eq!(SparseVec::from_dense(&d).to_dense(q, 3), d);
    }
}
