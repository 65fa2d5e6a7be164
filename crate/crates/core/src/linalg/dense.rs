//! Dense exact matrices: Gaussian elimination over ℚ, Bareiss over ℚ[δ].

use crate::error::{Error, Result};
use crate::scalar::{DeltaPoly, Rational, Scalar};

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of [`rank_and_nullspace`].
#[derive(Clone, Debug)]
pub struct RankReport {
    pub rank: usize,
    pub nullspace: Vec<Vec<Scalar>>,
    /// Monic, nonconstant polynomials divided by during elimination.
    pub pivot_denominators: Vec<DeltaPoly>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Builds from string entries in the scalar grammar.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Scalar>>>())
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) -> Result<()> {
        if self.rows == 0 && self.cols == 0 {
            self.cols = row.len();
        }
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        self.entries.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(Scalar::is_constant)
    }

    pub fn specialize(&self, d: &Rational) -> Result<ExactMatrix> {
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|s| s.specialize(d))
                .collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }
}

/// Exact rank, a nullspace basis, and the δ-polynomials divided by.
///
/// Constant matrices use Gauss-Jordan with full pivoting over ℚ. Otherwise
/// rows are cleared of denominators and reduced fraction-free (Bareiss) over
/// ℚ[δ], pivoting on the entry of least degree and then least bit size.
pub fn rank_and_nullspace(m: &ExactMatrix) -> RankReport {
    if m.is_constant() {
        let a: Vec<Vec<Rational>> = (0..m.rows)
            .map(|i| m.row(i).iter().map(|s| s.as_rational().unwrap()).collect())
            .collect();
        let (rank, null) = gauss_full_pivot(a, m.cols);
        RankReport {
            rank,
            nullspace: null
                .into_iter()
                .map(|v| v.into_iter().map(Scalar::from_rational).collect())
                .collect(),
            pivot_denominators: Vec::new(),
        }
    } else {
        bareiss(m)
    }
}

/// Rank of `m` with δ specialized to `d`.
pub fn rank_at(m: &ExactMatrix, d: &Rational) -> Result<usize> {
    Ok(rank_and_nullspace(&m.specialize(d)?).rank)
}

fn gauss_full_pivot(mut a: Vec<Vec<Rational>>, cols: usize) -> (usize, Vec<Vec<Rational>>) {
    let rows = a.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut used = vec![false; cols];
    let mut r = 0;
    while r < rows {
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, x) in row.iter().enumerate() {
                if used[j] || x.is_zero() {
                    continue;
                }
                let c = x.bit_size();
                if best.is_none_or(|b| c < b.0) {
                    best = Some((c, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(r, pi);
        let inv = a[r][pj].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[pj].is_zero() {
                continue;
            }
            let f = row[pj].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        used[pj] = true;
        pivot_cols.push(pj);
        r += 1;
    }
    let null = (0..cols)
        .filter(|&f| !used[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&a[i][f];
            }
            v
        })
        .collect();
    (r, null)
}

fn poly_lcm(a: &DeltaPoly, b: &DeltaPoly) -> DeltaPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    (a * b).exact_div(&a.gcd(b)).monic()
}

fn bareiss(m: &ExactMatrix) -> RankReport {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<DeltaPoly>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let l = row
                .iter()
                .fold(DeltaPoly::one(), |l, s| poly_lcm(&l, s.denominator()));
            row.iter()
                .map(|s| (s.numerator() * &l).exact_div(s.denominator()))
                .collect()
        })
        .collect();
    let mut dens: Vec<DeltaPoly> = Vec::new();
    let mut record = |p: &DeltaPoly| {
        if !p.is_constant() {
            let p = p.monic();
            if !dens.contains(&p) {
                dens.push(p);
            }
        }
    };
    let mut perm: Vec<usize> = (0..cols).collect();
    let mut prev = DeltaPoly::one();
    let mut r = 0;
    while r < rows && r < cols {
        let mut best: Option<((usize, u64), usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (jj, &j) in perm.iter().enumerate().skip(r) {
                let x = &row[j];
                if x.is_zero() {
                    continue;
                }
                let c = (x.degree().unwrap(), x.bit_size());
                if best.as_ref().is_none_or(|b| c < b.0) {
                    best = Some((c, i, jj));
                }
            }
        }
        let Some((_, pi, pjj)) = best else { break };
        a.swap(r, pi);
        perm.swap(r, pjj);
        let pc = perm[r];
        let p = a[r][pc].clone();
        record(&p);
        let prow = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            let f = row[pc].clone();
            for &j in perm.iter().skip(r) {
                let v = &(&p * &row[j]) - &(&f * &prow[j]);
                row[j] = v.exact_div(&prev);
            }
        }
        prev = p;
        r += 1;
    }
    let rank = r;
    let to_s = |p: &DeltaPoly| Scalar::from_poly(p.clone());
    let nullspace = perm[rank..]
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for i in (0..rank).rev() {
                let mut acc = to_s(&a[i][f]);
                for k in i + 1..rank {
                    let pk = perm[k];
                    if !a[i][pk].is_zero() && !v[pk].is_zero() {
                        acc += &(to_s(&a[i][pk]) * &v[pk]);
                    }
                }
                v[perm[i]] = -(acc / to_s(&a[i][perm[i]]));
            }
            v
        })
        .collect();
    RankReport {
        rank,
        nullspace,
        pivot_denominators: dens,
    }
}

/// Reduced row echelon form with leftmost pivots; returns the nonzero rows and pivot columns.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>) -> (Vec<Vec<F>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pi) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].cost())
        else {
            continue;
        };
        rows.swap(r, pi);
        let inv = rows[r][c].f_inv();
        for x in rows[r].iter_mut() {
            *x = x.f_mul(&inv);
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = x.f_sub(&f.f_mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// One solution of `rows · u = rhs`, or `None` when inconsistent.
pub fn solve_affine(rows: Vec<Vec<Scalar>>, rhs: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let n = rows.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Scalar>> = rows
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            r.push(b);
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut u = vec![Scalar::zero(); n];
    for (row, &p) in red.iter().zip(&pivots) {
        u[p] = row[n].clone();
    }
    Some(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let r = rank_and_nullspace(&ExactMatrix::identity(2));
        assert_eq!(r.rank, 2);
        assert!(r.nullspace.is_empty());
    }

    #[test]
    fn single_symbolic_entry() {
        let m = ExactMatrix::parse(&[&["delta - 1"]]).unwrap();
        let r = rank_and_nullspace(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_denominators, vec![DeltaPoly::from_ints(&[-1, 1])]);
    }

    #[test]
    fn symbolic_nullspace_is_annihilated() {
        let m = ExactMatrix::parse(&[
            &["1", "delta", "delta^2", "0"],
            &["delta", "1", "0", "1/(delta+1)"],
            &["1 + delta", "1 + delta", "delta^2", "1/(delta+1)"],
        ])
        .unwrap();
        let r = rank_and_nullspace(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.nullspace.len(), 2);
        for v in &r.nullspace {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rational_nullspace() {
        let m = ExactMatrix::parse(&[&["1", "2", "3"], &["2", "4", "6"]]).unwrap();
        let r = rank_and_nullspace(&m);
        assert_eq!(r.rank, 1);
        for v in &r.nullspace {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rref_is_canonical() {
        let rows = vec![
            vec![Rational::from_int(2), Rational::from_int(4)],
            vec![Rational::from_int(1), Rational::from_int(3)],
        ];
        let (r, p) = rref(rows);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r[0], vec![Rational::one(), Rational::zero()]);
    }
}
