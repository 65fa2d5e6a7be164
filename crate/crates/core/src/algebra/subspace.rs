//! Subspaces in reduced row echelon form.

use crate::error::{Error, Result};
use crate::linalg::rref;
use crate::scalar::Scalar;

use super::{basis_vector, is_zero_vector, Table, Vector};

/// Row-reduced basis of a subspace of `Scalar^ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Span of arbitrary vectors.
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Result<Subspace> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        let vectors: Vec<Vector> = vectors.into_iter().filter(|v| !is_zero_vector(v)).collect();
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let (basis, _) = rref(vectors);
        Ok(Subspace { ambient, basis })
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| basis_vector(ambient, i)).collect(),
        }
    }

    /// Span of the given basis vectors, 0-based.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Subspace {
        Subspace::span(
            ambient,
            idx.iter().map(|&i| basis_vector(ambient, i)).collect(),
        )
        .unwrap()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if is_zero_vector(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(rows).0.len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        if other.dim() > self.dim() {
            return false;
        }
        self.sum(other).dim() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, v).expect("ambient dimensions agree")
    }
}

/// Span of all products `u v` with `u ∈ U`, `v ∈ V`.
pub fn subspace_product(t: &Table, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    let n = t.dim();
    for s in [u, v] {
        if s.ambient != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: s.ambient,
            });
        }
    }
    let mut out = Vec::new();
    for x in &u.basis {
        for y in &v.basis {
            let p = t.mul_unchecked(x, y);
            if !is_zero_vector(&p) {
                out.push(p);
            }
        }
    }
    Subspace::span(n, out)
}
