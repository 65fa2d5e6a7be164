//! Evaluating identities on algebras and collecting the δ-values where they hold.

use serde::Serialize;

use crate::algebra::{add_scaled, basis_vector, is_zero_vector, Op, Structure, Vector};
use crate::error::{Error, Result};
use crate::scalar::{DeltaPoly, Rational, Scalar};

use super::catalog::Family;
use super::expr::{FormalIdentity, Tree};

fn ensure_products(id: &FormalIdentity, s: &impl Structure) -> Result<()> {
    for op in id.products_used() {
        if s.product(op).is_none() {
            return Err(Error::MissingProduct {
                identity: id.name.clone(),
            });
        }
    }
    Ok(())
}

fn eval_tree(t: &Tree, s: &impl Structure, vs: &[Vector]) -> Vector {
    match t {
        Tree::Leaf(v) => vs[*v as usize].clone(),
        Tree::Node(op, l, r) => {
            let a = eval_tree(l, s, vs);
            if is_zero_vector(&a) {
                return a;
            }
            let b = eval_tree(r, s, vs);
            s.product(*op).expect("checked").mul_unchecked(&a, &b)
        }
    }
}

/// Value of the identity's polynomial at arbitrary vectors.
pub fn evaluate_vectors(id: &FormalIdentity, s: &impl Structure, vs: &[Vector]) -> Result<Vector> {
    ensure_products(id, s)?;
    if vs.len() != id.arity {
        return Err(Error::DimensionMismatch {
            expected: id.arity,
            got: vs.len(),
        });
    }
    let n = s.dim();
    for v in vs {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
    }
    let mut acc = vec![Scalar::zero(); n];
    for (c, t) in &id.terms {
        add_scaled(&mut acc, c, &eval_tree(t, s, vs));
    }
    Ok(acc)
}

/// Value at basis vectors; `assignment` holds 0-based basis indices.
pub fn evaluate(id: &FormalIdentity, s: &impl Structure, assignment: &[usize]) -> Result<Vector> {
    let n = s.dim();
    if let Some(&bad) = assignment.iter().find(|&&i| i >= n) {
        return Err(Error::Invalid(format!(
            "basis index {} out of range",
            bad + 1
        )));
    }
    let vs: Vec<Vector> = assignment.iter().map(|&i| basis_vector(n, i)).collect();
    evaluate_vectors(id, s, &vs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Satisfied,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// 1-based basis indices.
    pub tuple: Vec<usize>,
    pub defect: Vector,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// When coefficients involve δ: monic numerators that must all vanish for the identity to hold.
    pub delta_conditions: Vec<DeltaPoly>,
}

impl CheckReport {
    pub fn satisfied(&self) -> bool {
        self.verdict == Verdict::Satisfied
    }

    pub(crate) fn from_parts(
        identity: String,
        witness: Option<Witness>,
        delta_conditions: Vec<DeltaPoly>,
    ) -> Self {
        CheckReport {
            identity,
            verdict: if witness.is_some() {
                Verdict::Violated
            } else {
                Verdict::Satisfied
            },
            witness,
            delta_conditions,
        }
    }
}

/// All tuples in `0..n` of the given length, lexicographically.
pub(crate) fn tuples(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut k| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        t
    })
}

fn push_condition(conds: &mut Vec<DeltaPoly>, s: &Scalar) {
    let p = s.numerator().monic();
    if !conds.contains(&p) {
        conds.push(p);
    }
}

/// Checks the identity on every basis tuple; by multilinearity this decides it.
///
/// The witness is the lexicographically least failing tuple. If any defect
/// depends on δ, every tuple is scanned and the numerators of all nonzero
/// defect coordinates are returned as `delta_conditions`.
pub fn check(id: &FormalIdentity, s: &impl Structure) -> Result<CheckReport> {
    ensure_products(id, s)?;
    let n = s.dim();
    let mut witness = None;
    let mut conds = Vec::new();
    let mut symbolic = false;
    let scan_all = id.is_symbolic()
        || [Op::First, Op::Second]
            .iter()
            .any(|&op| s.product(op).is_some_and(|t| !t.is_constant()));
    for tup in tuples(n, id.arity) {
        let v = evaluate(id, s, &tup)?;
        if is_zero_vector(&v) {
            continue;
        }
        if witness.is_none() {
            witness = Some(Witness {
                tuple: tup.iter().map(|i| i + 1).collect(),
                defect: v.clone(),
            });
        }
        if !scan_all {
            break;
        }
        for x in v.iter().filter(|x| !x.is_zero()) {
            symbolic |= !x.is_constant();
            push_condition(&mut conds, x);
        }
    }
    if !symbolic {
        conds.clear();
    }
    Ok(CheckReport::from_parts(id.name.clone(), witness, conds))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub reports: Vec<CheckReport>,
}

impl FamilyReport {
    pub fn satisfied(&self) -> bool {
        self.reports.iter().all(CheckReport::satisfied)
    }

    /// First violated member.
    pub fn failure(&self) -> Option<&CheckReport> {
        self.reports.iter().find(|r| !r.satisfied())
    }
}

pub fn check_family(f: &Family, s: &impl Structure) -> Result<FamilyReport> {
    Ok(FamilyReport {
        family: f.name.clone(),
        reports: f
            .identities
            .iter()
            .map(|id| check(id, s))
            .collect::<Result<_>>()?,
    })
}

/// The δ-values for which a family holds on an algebra with δ-free constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "factors", rename_all = "lowercase")]
pub enum Admissible {
    All,
    Empty,
    /// Distinct monic irreducible factors of the gcd of all conditions.
    Roots(Vec<DeltaPoly>),
}

impl Admissible {
    pub fn rational_roots(&self) -> Vec<Rational> {
        match self {
            Admissible::Roots(fs) => fs.iter().filter_map(DeltaPoly::linear_root_value).collect(),
            _ => Vec::new(),
        }
    }

    pub fn contains(&self, d: &Rational) -> bool {
        match self {
            Admissible::All => true,
            Admissible::Empty => false,
            Admissible::Roots(fs) => fs.iter().any(|f| f.eval(d).is_zero()),
        }
    }

    /// The singleton `{d}` for rational `d`.
    pub fn singleton(d: &Rational) -> Admissible {
        Admissible::Roots(vec![DeltaPoly::linear_root(d)])
    }
}

/// Solves for the δ-values at which the family holds: the common roots of all defect coordinates.
pub fn admissible_deltas(f: &Family, s: &impl Structure) -> Result<Admissible> {
    for op in [Op::First, Op::Second] {
        if let Some(t) = s.product(op) {
            if !t.is_constant() {
                return Err(Error::Invalid(
                    "structure constants must be free of delta".into(),
                ));
            }
        }
    }
    let n = s.dim();
    let mut g = DeltaPoly::zero();
    for id in &f.identities {
        ensure_products(id, s)?;
        for tup in tuples(n, id.arity) {
            for x in evaluate(id, s, &tup)? {
                if x.is_zero() {
                    continue;
                }
                g = g.gcd(x.numerator());
                if g.is_one() {
                    return Ok(Admissible::Empty);
                }
            }
        }
    }
    if g.is_zero() {
        return Ok(Admissible::All);
    }
    let mut fs: Vec<DeltaPoly> = g.factor().into_iter().map(|(p, _)| p).collect();
    fs.dedup();
    Ok(Admissible::Roots(fs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{table_from_entries, Algebra, BiAlgebra, Role};
    use crate::identity::catalog;

    fn alg(n: usize, e: &[(usize, usize, &[(usize, &str)])]) -> Algebra {
        Algebra::from_entries(n, e).unwrap()
    }

    fn sym() -> Scalar {
        Scalar::delta()
    }

    #[test]
    fn admissible_small_rows() {
        let fam = catalog("delta-novikov", &sym()).unwrap();
        let n01 = alg(2, &[(1, 1, &[(1, "1"), (2, "1")]), (2, 1, &[(2, "1")])]);
        assert_eq!(
            admissible_deltas(&fam, &n01).unwrap(),
            Admissible::singleton(&Rational::one())
        );
        let n02 = alg(2, &[(1, 1, &[(2, "1")])]);
        assert_eq!(admissible_deltas(&fam, &n02).unwrap(), Admissible::All);
        let n12 = alg(
            2,
            &[
                (1, 1, &[(1, "1")]),
                (1, 2, &[(1, "-1")]),
                (2, 1, &[(2, "-1")]),
                (2, 2, &[(2, "1")]),
            ],
        );
        assert_eq!(
            admissible_deltas(&fam, &n12).unwrap(),
            Admissible::singleton(&Rational::from_int(-1))
        );
    }

    #[test]
    fn symbolic_check_reports_conditions() {
        let fam = catalog("delta-lsym", &sym()).unwrap();
        let n01 = alg(2, &[(1, 1, &[(1, "1"), (2, "1")]), (2, 1, &[(2, "1")])]);
        let r = check(&fam.identities[0], &n01).unwrap();
        assert!(!r.satisfied());
        assert_eq!(
            r.delta_conditions,
            vec![DeltaPoly::linear_root(&Rational::one())]
        );
        let at2 = catalog("delta-lsym", &Scalar::from_int(2)).unwrap();
        let r = check(&at2.identities[0], &n01).unwrap();
        assert_eq!(r.witness.as_ref().unwrap().tuple, vec![1, 2, 1]);
        assert!(r.delta_conditions.is_empty());
        // skew in the first two arguments
        assert!(is_zero_vector(
            &evaluate(&at2.identities[0], &n01, &[0, 0, 1]).unwrap()
        ));
    }

    fn a1() -> BiAlgebra {
        let dot = table_from_entries(3, &[(1, 1, &[(1, "1")])]).unwrap();
        let br = table_from_entries(3, &[(2, 3, &[(1, "1")]), (3, 2, &[(1, "-1")])]).unwrap();
        BiAlgebra::new(dot, br, Role::Bracket).unwrap()
    }

    fn a2() -> BiAlgebra {
        let dot = table_from_entries(
            4,
            &[
                (1, 1, &[(4, "1")]),
                (2, 2, &[(4, "1")]),
                (3, 3, &[(4, "1")]),
            ],
        )
        .unwrap();
        let br = table_from_entries(
            4,
            &[
                (1, 2, &[(3, "-1")]),
                (2, 1, &[(3, "1")]),
                (1, 3, &[(2, "1")]),
                (3, 1, &[(2, "-1")]),
                (2, 3, &[(1, "-1")]),
                (3, 2, &[(1, "1")]),
            ],
        )
        .unwrap();
        BiAlgebra::new(dot, br, Role::Bracket).unwrap()
    }

    #[test]
    fn counterexamples() {
        let tp0 = catalog("transposed-delta-poisson", &Scalar::zero()).unwrap();
        assert!(check_family(&tp0, &a1()).unwrap().satisfied());
        let gd = catalog("delta-gd", &Scalar::from_int(-1)).unwrap();
        let rep = check_family(&gd, &a1()).unwrap();
        let bad = rep.failure().unwrap();
        assert_eq!(bad.witness.as_ref().unwrap().tuple, vec![1, 2, 3]);

        let half = Scalar::from_rational(Rational::new(1, 2));
        assert!(check_family(&catalog("delta-gd", &half).unwrap(), &a2())
            .unwrap()
            .satisfied());
        let tp = catalog(
            "transposed-delta-poisson",
            &Scalar::from_rational(Rational::new(3, 2)),
        )
        .unwrap();
        let rep = check_family(&tp, &a2()).unwrap();
        assert_eq!(
            rep.failure().unwrap().witness.as_ref().unwrap().tuple,
            vec![1, 2, 3]
        );
    }

    #[test]
    fn combinations_hold_symbolically() {
        let fam = catalog("gd-tp-combinations", &sym()).unwrap();
        assert!(check_family(&fam, &a1()).unwrap().satisfied());
        assert!(check_family(&fam, &a2()).unwrap().satisfied());
    }

    #[test]
    fn missing_second_product() {
        let fam = catalog("np-compat", &Scalar::one()).unwrap();
        let n02 = alg(2, &[(1, 1, &[(2, "1")])]);
        assert!(matches!(
            check(&fam.identities[0], &n02),
            Err(Error::MissingProduct { .. })
        ));
    }

    #[test]
    fn lexicographic_tuples() {
        let t: Vec<_> = tuples(2, 2).collect();
        assert_eq!(t, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
