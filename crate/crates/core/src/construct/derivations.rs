//! δ-derivations: maps with φ(xy) = δ(φ(x)y + xφ(y)).

use serde::Serialize;

use crate::algebra::{Algebra, Table};
use crate::error::{Error, Result};
use crate::linalg::{rank_and_nullspace, rref, ExactMatrix};
use crate::scalar::{DeltaPoly, Rational, Scalar};

use super::{add, mul, LinearMap};

/// All δ-derivations of an algebra at one rational δ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivationSpace {
    pub delta: Rational,
    /// Row-reduced when the matrices are read row by row.
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, phi: &LinearMap) -> bool {
        let mut rows: Vec<Vec<Scalar>> = self.basis.iter().map(flatten).collect();
        rows.push(flatten(phi));
        let m = ExactMatrix::from_rows(rows).expect("equal lengths");
        rank_and_nullspace(&m).rank == self.basis.len()
    }
}

fn flatten(phi: &LinearMap) -> Vec<Scalar> {
    let n = phi.dim();
    (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .map(|(r, c)| phi.get(r, c).clone())
        .collect()
}

fn unflatten(n: usize, v: &[Scalar]) -> LinearMap {
    let mut m = ExactMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, v[r * n + c].clone());
        }
    }
    LinearMap::new(m).expect("square")
}

/// The linear system in the n² matrix entries of φ (row-major) whose solutions are the δ-derivations.
pub fn derivation_system(t: &Table, d: &Scalar) -> ExactMatrix {
    let n = t.dim();
    let idx = |r: usize, c: usize| r * n + c;
    let mut m = ExactMatrix::zeros(0, 0);
    for i in 0..n {
        for j in 0..n {
            for out in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for k in 0..n {
                    let c = t.get(i, j, k);
                    if !c.is_zero() {
                        row[idx(out, k)] += c;
                    }
                    let a = t.get(k, j, out);
                    if !a.is_zero() {
                        row[idx(k, i)] = &row[idx(k, i)] - &(d * a);
                    }
                    let b = t.get(i, k, out);
                    if !b.is_zero() {
                        row[idx(k, j)] = &row[idx(k, j)] - &(d * b);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    m.push_row(row).expect("row length");
                }
            }
        }
    }
    m
}

/// First basis pair (0-based) on which φ fails the δ-derivation equation.
pub fn is_delta_derivation(
    t: &Table,
    phi: &LinearMap,
    d: &Scalar,
) -> Result<Option<(usize, usize)>> {
    let n = t.dim();
    phi.check_dim(n)?;
    let imgs: Vec<_> = (0..n).map(|j| phi.image(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(t.basis_product(i, j))?;
            let ei = crate::algebra::basis_vector(n, i);
            let ej = crate::algebra::basis_vector(n, j);
            let rhs = add(&mul(t, &imgs[i], &ej), &mul(t, &ei, &imgs[j]));
            let rhs: Vec<Scalar> = rhs.iter().map(|x| d * x).collect();
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

fn require_constant(t: &Table) -> Result<()> {
    if !t.is_constant() {
        return Err(Error::Invalid(
            "structure constants must be free of delta".into(),
        ));
    }
    Ok(())
}

/// Exact basis of the space of `d`-derivations.
pub fn solve_delta_derivations(a: &Algebra, d: &Rational) -> Result<DerivationSpace> {
    require_constant(&a.table)?;
    let n = a.dim();
    let sys = derivation_system(&a.table, &Scalar::from_rational(d.clone()));
    let null = if sys.rows() == 0 {
        (0..n * n)
            .map(|i| crate::algebra::basis_vector(n * n, i))
            .collect()
    } else {
        rank_and_nullspace(&sys).nullspace
    };
    let reduced: Vec<Vec<Rational>> = null
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| x.as_rational().expect("constant"))
                .collect()
        })
        .collect();
    let (rows, _) = if reduced.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        rref(reduced)
    };
    let basis = rows
        .into_iter()
        .map(|r| {
            let v: Vec<Scalar> = r.into_iter().map(Scalar::from_rational).collect();
            unflatten(n, &v)
        })
        .collect();
    Ok(DerivationSpace {
        delta: d.clone(),
        basis,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEntry {
    /// Irreducible monic factor of a pivot that was divided by.
    pub factor: DeltaPoly,
    /// Its root when rational.
    pub root: Option<Rational>,
    /// Exact dimension of the derivation space at `root`.
    pub nullity: Option<usize>,
    /// `nullity - generic_nullity`.
    pub jump: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub generic_nullity: usize,
    pub candidates: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    /// Rational δ-values where the dimension is larger than generic.
    pub fn jumps(&self) -> Vec<(Rational, usize)> {
        self.candidates
            .iter()
            .filter_map(|e| match (&e.root, e.jump) {
                (Some(r), Some(j)) if j > 0 => Some((r.clone(), j)),
                _ => None,
            })
            .collect()
    }
}

/// Dimension of the δ-derivation space for generic δ and at each special δ.
///
/// The nullity can only change where a pivot of the symbolic elimination
/// vanishes, so every irreducible factor of those pivots is a candidate; rational
/// candidates are then re-solved exactly.
pub fn derivation_delta_spectrum(a: &Algebra) -> Result<SpectrumReport> {
    require_constant(&a.table)?;
    let n = a.dim();
    let sys = derivation_system(&a.table, &Scalar::delta());
    if sys.rows() == 0 {
        return Ok(SpectrumReport {
            generic_nullity: n * n,
            candidates: Vec::new(),
        });
    }
    let rep = rank_and_nullspace(&sys);
    let generic = n * n - rep.rank;
    let mut factors: Vec<DeltaPoly> = Vec::new();
    for p in &rep.pivot_denominators {
        for (f, _) in p.factor() {
            if !factors.contains(&f) {
                factors.push(f);
            }
        }
    }
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    let mut candidates = Vec::new();
    for f in factors {
        let root = f.linear_root_value();
        let nullity = match &root {
            Some(r) => Some(solve_delta_derivations(a, r)?.dimension()),
            None => None,
        };
        candidates.push(SpectrumEntry {
            jump: nullity.map(|k| k - generic),
            factor: f,
            root,
            nullity,
        });
    }
    Ok(SpectrumReport {
        generic_nullity: generic,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn identity_is_half_derivation() {
        let a = Algebra::from_entries(2, &[(1, 1, &[(1, "1"), (2, "1")]), (2, 1, &[(2, "1")])])
            .unwrap();
        let sp = solve_delta_derivations(&a, &r(1, 2)).unwrap();
        assert!(sp.contains(&LinearMap::identity(2)));
        assert_eq!(
            is_delta_derivation(
                &a.table,
                &LinearMap::identity(2),
                &Scalar::from_rational(r(1, 2))
            )
            .unwrap(),
            None
        );
    }

    #[test]
    fn zero_derivation_example() {
        let a = Algebra::from_entries(2, &[(1, 1, &[(1, "1")])]).unwrap();
        let phi = LinearMap::parse(&[&["0", "1"], &["0", "0"]]).unwrap();
        let sp = solve_delta_derivations(&a, &Rational::zero()).unwrap();
        assert!(sp.contains(&phi));
        let spec = derivation_delta_spectrum(&a).unwrap();
        let jumps: Vec<Rational> = spec.jumps().into_iter().map(|(r, _)| r).collect();
        assert!(jumps.contains(&r(1, 2)));
        assert!(jumps.contains(&Rational::zero()));
    }

    #[test]
    fn zero_algebra_everything() {
        let a = Algebra::zero(2);
        assert_eq!(
            solve_delta_derivations(&a, &r(3, 1)).unwrap().dimension(),
            4
        );
        let s = derivation_delta_spectrum(&a).unwrap();
        assert_eq!(s.generic_nullity, 4);
        assert!(s.candidates.is_empty());
    }
}
