//! Cheap invariants for telling algebras apart.

use serde::Serialize;

use crate::linalg::{rank_and_nullspace, ExactMatrix};
use crate::scalar::Scalar;

use super::{subspace_product, Subspace, Table};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_square: usize,
    pub left_annihilator: usize,
    pub right_annihilator: usize,
    pub commutative: bool,
    pub associative: bool,
    /// `(i, trace of left multiplication by e_i)` for each basis idempotent `e_i e_i = e_i`, 1-based.
    pub idempotent_traces: Vec<(usize, Scalar)>,
}

pub fn invariant_fingerprint(t: &Table) -> Fingerprint {
    let n = t.dim();
    let full = Subspace::full(n);
    // x e_j = 0 for all j, as a system in the coordinates of x; and symmetrically.
    let ann = |left: bool| {
        let mut m = ExactMatrix::zeros(0, 0);
        for j in 0..n {
            for k in 0..n {
                let row = (0..n)
                    .map(|i| if left { t.get(i, j, k) } else { t.get(j, i, k) }.clone())
                    .collect();
                m.push_row(row).unwrap();
            }
        }
        if n == 0 {
            0
        } else {
            n - rank_and_nullspace(&m).rank
        }
    };
    let idempotent_traces = (0..n)
        .filter(|&i| {
            let p = t.basis_product(i, i);
            (0..n).all(|k| {
                if k == i {
                    p[k].is_one()
                } else {
                    p[k].is_zero()
                }
            })
        })
        .map(|i| {
            let mut tr = Scalar::zero();
            for j in 0..n {
                tr += t.get(i, j, j);
            }
            (i + 1, tr)
        })
        .collect();
    Fingerprint {
        dim: n,
        dim_square: subspace_product(t, &full, &full).unwrap().dim(),
        left_annihilator: ann(true),
        right_annihilator: ann(false),
        commutative: t.is_commutative(),
        associative: t.is_associative(),
        idempotent_traces,
    }
}
