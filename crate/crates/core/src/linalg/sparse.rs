//! Incremental sparse row echelon form over an exact field.

use std::collections::HashMap;

use crate::scalar::{DeltaPoly, Scalar};

use super::field::Field;

/// Sparse row: `(column, value)` pairs with strictly increasing columns and nonzero values.
pub type SparseRow<F> = Vec<(u32, F)>;

/// Echelon basis keyed by leading column; pivots are the leftmost nonzero entries, scaled to 1.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    pivots: HashMap<u32, SparseRow<F>>,
    normalizers: Vec<F>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        SparseEchelon {
            pivots: HashMap::new(),
            normalizers: Vec::new(),
        }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot columns, increasing.
    pub fn pivot_columns(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.pivots.keys().copied().collect();
        v.sort_unstable();
        v
    }

    /// Leading coefficients that rows were divided by when they became pivots.
    pub fn normalizers(&self) -> &[F] {
        &self.normalizers
    }

    /// Reduces `row` against the basis; what is left is zero or starts at a fresh column.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut start = 0;
        while start < row.len() {
            let (c, ref coef) = row[start];
            match self.pivots.get(&c) {
                Some(p) => {
                    let f = coef.clone();
                    row = axpy_tail(&row, start, &f, p);
                }
                None => start += 1,
            }
        }
        row
    }

    /// Fully reduces the leading column only; cheaper than [`Self::reduce`] for rank counting.
    fn reduce_lead(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((c, coef)) = row.first() {
            match self.pivots.get(c) {
                Some(p) => {
                    let f = coef.clone();
                    row = axpy_tail(&row, 0, &f, p);
                }
                None => break,
            }
        }
        row
    }

    /// Adds `row` to the span; true when it was independent.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let row = self.reduce_lead(row);
        let Some((c, lead)) = row.first().cloned() else {
            return false;
        };
        let inv = lead.f_inv();
        let row: SparseRow<F> = row.into_iter().map(|(j, v)| (j, v.f_mul(&inv))).collect();
        self.normalizers.push(lead);
        self.pivots.insert(c, row);
        true
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce_lead(row).is_empty()
    }
}

impl SparseEchelon<Scalar> {
    /// Nonconstant numerators of the pivot normalizers, monic and deduplicated.
    pub fn pivot_denominators(&self) -> Vec<DeltaPoly> {
        let mut out: Vec<DeltaPoly> = Vec::new();
        for s in &self.normalizers {
            for p in [s.numerator(), s.denominator()] {
                if !p.is_constant() {
                    let m = p.monic();
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }
}

/// `row - f * p`, where `p` starts at column `row[start].0`; entries before `start` are kept.
fn axpy_tail<F: Field>(row: &SparseRow<F>, start: usize, f: &F, p: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(row.len() + p.len());
    out.extend_from_slice(&row[..start]);
    let (mut i, mut j) = (start, 0);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map(|x| x.0);
        let cj = p.get(j).map(|x| x.0);
        match (ci, cj) {
            (Some(a), Some(b)) if a == b => {
                let v = row[i].1.f_sub(&f.f_mul(&p[j].1));
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(row[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(row[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b, f.f_mul(&p[j].1).f_neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Builds a sparse row from a dense one.
pub fn to_sparse<F: Field>(dense: &[F]) -> SparseRow<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (j as u32, v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(cs: &[(u32, i64)]) -> SparseRow<Rational> {
        cs.iter()
            .map(|&(c, v)| (c, Rational::from_int(v)))
            .collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(r(&[(0, 1), (2, 1)])));
        assert!(e.insert(r(&[(1, 2), (2, 1)])));
        assert!(!e.insert(r(&[(0, 2), (1, 2), (2, 3)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(r(&[(0, 1), (1, -2)])));
        assert!(!e.contains(r(&[(2, 1)])));
        assert!(e.contains(r(&[(0, -1), (2, -1)])));
        assert_eq!(e.pivot_columns(), vec![0, 1]);
    }

    #[test]
    fn symbolic_normalizers_recorded() {
        let mut e: SparseEchelon<Scalar> = SparseEchelon::new();
        e.insert(vec![(0, "delta - 1".parse().unwrap()), (1, Scalar::one())]);
        assert_eq!(e.pivot_denominators(), vec![DeltaPoly::from_ints(&[-1, 1])]);
    }
}
