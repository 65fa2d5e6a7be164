//! Finite-dimensional algebras given by structure constants.

mod fingerprint;
mod ideals;
mod series;
mod subspace;

pub use fingerprint::{invariant_fingerprint, Fingerprint};
pub use ideals::{
    ideal_closure, is_ideal, probe_simplicity, proper_ideal_exists_dim2, LineIdeal, ProbeResult,
};
pub use series::{
    power_containment, series, series_from, series_terms, solvability, SeriesKind, SeriesReport,
    SolvabilityReport,
};
pub use subspace::{subspace_product, Subspace};

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Structure constants: `e_i e_j = Σ_k c[(i*n + j)*n + k] e_k`, indices 0-based.
#[derive(Clone, PartialEq, Eq)]
pub struct Table {
    dim: usize,
    c: Vec<Scalar>,
}

impl Table {
    pub fn zero(dim: usize) -> Table {
        Table {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = v;
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn set_basis_product(&mut self, i: usize, j: usize, v: &[Scalar]) {
        for (k, x) in v.iter().enumerate() {
            self.set(i, j, k, x.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.iter().all(Scalar::is_constant)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.c
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let n = self.dim;
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let row = self.basis_product(i, j);
                if row.iter().all(Scalar::is_zero) {
                    continue;
                }
                let c = xi * yj;
                add_scaled(&mut out, &c, row);
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Table {
        Table {
            dim: self.dim,
            c: self.c.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Table> {
        Ok(Table {
            dim: self.dim,
            c: self.c.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn specialize(&self, d: &Rational) -> Result<Table> {
        self.try_map(|s| s.specialize(d))
    }

    pub fn opposite(&self) -> Table {
        let n = self.dim;
        let mut t = Table::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.set_basis_product(i, j, self.basis_product(j, i));
            }
        }
        t
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self) -> Table {
        let n = self.dim;
        let mut t = Table::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.set(i, j, k, self.get(i, j, k) - self.get(j, i, k));
                }
            }
        }
        t
    }

    pub fn scale(&self, q: &Scalar) -> Table {
        self.map(|s| q * s)
    }

    pub fn add(&self, other: &Table) -> Table {
        Table {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let l = self.mul_unchecked(&ij, &basis_vector(n, k));
                    let jk = self.basis_product(j, k).to_vec();
                    let r = self.mul_unchecked(&basis_vector(n, i), &jk);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Two-sided unit, if any.
    pub fn unit(&self) -> Option<Vector> {
        let n = self.dim;
        if n == 0 {
            return None;
        }
        // u e_j = e_j and e_j u = e_j for all j: a linear system in u.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|i| self.get(i, j, k).clone())
                        .collect::<Vec<_>>(),
                );
                rhs.push(if j == k {
                    Scalar::one()
                } else {
                    Scalar::zero()
                });
                rows.push(
                    (0..n)
                        .map(|i| self.get(j, i, k).clone())
                        .collect::<Vec<_>>(),
                );
                rhs.push(if j == k {
                    Scalar::one()
                } else {
                    Scalar::zero()
                });
            }
        }
        crate::linalg::solve_affine(rows, rhs)
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let mut m = f.debug_map();
        for i in 0..n {
            for j in 0..n {
                let row = self.basis_product(i, j);
                if row.iter().any(|s| !s.is_zero()) {
                    m.entry(&(i + 1, j + 1), &row);
                }
            }
        }
        m.finish()
    }
}

/// Which of the two products an expression refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// The first product, written `·` or juxtaposition.
    First,
    /// The second product, written `∘` or as a bracket.
    Second,
}

/// Anything identities can be evaluated on.
pub trait Structure {
    fn dim(&self) -> usize;
    fn product(&self, op: Op) -> Option<&Table>;
}

/// An algebra with one product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub table: Table,
    pub labels: Vec<String>,
}

impl Algebra {
    pub fn new(table: Table) -> Algebra {
        let labels = default_labels(table.dim());
        Algebra { table, labels }
    }

    pub fn zero(dim: usize) -> Algebra {
        Algebra::new(Table::zero(dim))
    }

    /// Builds from `(i, j, [(k, coefficient)])` entries, all 1-based.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, &[(usize, &str)])],
    ) -> Result<Algebra> {
        Ok(Algebra::new(table_from_entries(dim, entries)?))
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.table.mul(x, y)
    }

    pub fn opposite(&self) -> Algebra {
        Algebra {
            table: self.table.opposite(),
            labels: self.labels.clone(),
        }
    }

    pub fn commutator_algebra(&self) -> Algebra {
        Algebra {
            table: self.table.commutator(),
            labels: self.labels.clone(),
        }
    }

    pub fn specialize(&self, d: &Rational) -> Result<Algebra> {
        Ok(Algebra {
            table: self.table.specialize(d)?,
            labels: self.labels.clone(),
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.table.is_commutative()
    }

    pub fn is_associative(&self) -> bool {
        self.table.is_associative()
    }
}

impl Structure for Algebra {
    fn dim(&self) -> usize {
        self.table.dim()
    }
    fn product(&self, op: Op) -> Option<&Table> {
        match op {
            Op::First => Some(&self.table),
            Op::Second => None,
        }
    }
}

/// Intended meaning of the second product of a [`BiAlgebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    CommAssoc,
    Novikov,
    Bracket,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::CommAssoc => "commassoc",
            Role::Novikov => "novikov",
            Role::Bracket => "bracket",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        match s {
            "commassoc" => Some(Role::CommAssoc),
            "novikov" => Some(Role::Novikov),
            "bracket" => Some(Role::Bracket),
            _ => None,
        }
    }
}

/// One space with two products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiAlgebra {
    pub first: Table,
    pub second: Table,
    pub role: Role,
    pub labels: Vec<String>,
}

impl BiAlgebra {
    pub fn new(first: Table, second: Table, role: Role) -> Result<BiAlgebra> {
        if first.dim() != second.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                got: second.dim(),
            });
        }
        let labels = default_labels(first.dim());
        Ok(BiAlgebra {
            first,
            second,
            role,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.first.dim()
    }

    pub fn first_algebra(&self) -> Algebra {
        Algebra {
            table: self.first.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn second_algebra(&self) -> Algebra {
        Algebra {
            table: self.second.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn specialize(&self, d: &Rational) -> Result<BiAlgebra> {
        Ok(BiAlgebra {
            first: self.first.specialize(d)?,
            second: self.second.specialize(d)?,
            role: self.role,
            labels: self.labels.clone(),
        })
    }
}

impl Structure for BiAlgebra {
    fn dim(&self) -> usize {
        self.first.dim()
    }
    fn product(&self, op: Op) -> Option<&Table> {
        match op {
            Op::First => Some(&self.first),
            Op::Second => Some(&self.second),
        }
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

pub fn table_from_entries(
    dim: usize,
    entries: &[(usize, usize, &[(usize, &str)])],
) -> Result<Table> {
    let mut t = Table::zero(dim);
    for &(i, j, out) in entries {
        for &(k, s) in out {
            if i == 0 || j == 0 || k == 0 || i > dim || j > dim || k > dim {
                return Err(Error::Invalid(format!(
                    "index out of range in ({i},{j})->{k}"
                )));
            }
            t.set(i - 1, j - 1, k - 1, s.parse()?);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n08(d: i64) -> Algebra {
        // e1e1 = e1, e2e1 = δ^{-1} e2
        let inv = format!("1/{d}");
        Algebra::from_entries(2, &[(1, 1, &[(1, "1")]), (2, 1, &[(2, &inv)])]).unwrap()
    }

    #[test]
    fn multiply_basis() {
        let a = n08(2);
        let v = a
            .multiply(&basis_vector(2, 1), &basis_vector(2, 0))
            .unwrap();
        assert_eq!(v, vec![Scalar::zero(), "1/2".parse().unwrap()]);
        assert!(is_zero_vector(
            &a.multiply(&zero_vector(2), &basis_vector(2, 1)).unwrap()
        ));
        assert!(matches!(
            a.multiply(&zero_vector(3), &zero_vector(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn opposite_and_commutator() {
        let a = n08(3);
        assert_eq!(a.opposite().opposite(), a);
        let c = Algebra::from_entries(1, &[(1, 1, &[(1, "1")])]).unwrap();
        assert_eq!(c.opposite(), c);
        assert!(c.commutator_algebra().table.is_zero());
        let e15 = Algebra::from_entries(2, &[(1, 2, &[(2, "1")])]).unwrap();
        let br = e15.commutator_algebra();
        assert_eq!(
            br.table.basis_product(0, 1),
            &[Scalar::zero(), Scalar::one()]
        );
    }

    #[test]
    fn units() {
        let a = Algebra::from_entries(
            2,
            &[
                (1, 1, &[(1, "1")]),
                (1, 2, &[(2, "1")]),
                (2, 1, &[(2, "1")]),
            ],
        )
        .unwrap();
        assert_eq!(a.table.unit(), Some(basis_vector(2, 0)));
        assert_eq!(n08(2).table.unit(), None);
    }
}
