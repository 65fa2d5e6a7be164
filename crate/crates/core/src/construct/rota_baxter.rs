//! δ-Rota–Baxter operators and the products they induce.

use crate::algebra::{basis_vector, is_zero_vector, Algebra, Vector};
use crate::error::{Error, Result};
use crate::identity::{catalog, check, check_family, CheckReport, Witness};
use crate::scalar::{Rational, Scalar};

use super::{add, mul, sub, table_from_fn, LinearMap};

/// Checks `R(x)R(y) = δ R(R(x)y + xR(y) − λxy)` on all basis pairs; `weight` is 0 or 1.
pub fn check_rota_baxter(
    a: &Algebra,
    r: &LinearMap,
    d: &Rational,
    weight: u8,
) -> Result<CheckReport> {
    if weight > 1 {
        return Err(Error::Invalid(format!(
            "weight must be 0 or 1, got {weight}"
        )));
    }
    let n = a.dim();
    r.check_dim(n)?;
    let t = &a.table;
    let ds = Scalar::from_rational(d.clone());
    let imgs: Vec<Vector> = (0..n).map(|j| r.image(j)).collect();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis_vector(n, i), basis_vector(n, j));
            let lhs = mul(t, &imgs[i], &imgs[j]);
            let mut inner = add(&mul(t, &imgs[i], &y), &mul(t, &x, &imgs[j]));
            if weight == 1 {
                inner = sub(&inner, t.basis_product(i, j));
            }
            let rhs: Vector = r.apply(&inner)?.iter().map(|v| &ds * v).collect();
            let defect = sub(&lhs, &rhs);
            if !is_zero_vector(&defect) {
                witness = Some(Witness {
                    tuple: vec![i + 1, j + 1],
                    defect,
                });
                break 'outer;
            }
        }
    }
    Ok(CheckReport::from_parts(
        format!("rota-baxter-weight-{weight}"),
        witness,
        Vec::new(),
    ))
}

/// Which induced product to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbVariant {
    /// Lie carrier, weight 0: `x ⋆ y = R(x)y`.
    Lie,
    /// Associative carrier, weight 0: `x ⋆ y = R(x)y − yR(x)`.
    AssocLie,
    /// δ-associative carrier, ordinary weight-1 operator: `x ⋆ y = R(x)y + xR(y) − xy`.
    AssocWeight1,
}

impl RbVariant {
    pub fn parse(s: &str) -> Option<RbVariant> {
        match s {
            "lie" => Some(RbVariant::Lie),
            "assoc-lie" => Some(RbVariant::AssocLie),
            "assoc-weight1" => Some(RbVariant::AssocWeight1),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RbVariant::Lie => "lie",
            RbVariant::AssocLie => "assoc-lie",
            RbVariant::AssocWeight1 => "assoc-weight1",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RbProduct {
    pub algebra: Algebra,
    /// Lie variant only: whether `Σ_cyc (R(x)R(y))z = 0` on all basis triples.
    pub cyclic_condition: Option<bool>,
    /// Lie variant only: whether the induced product is δ-pre-Lie.
    pub pre_lie: Option<bool>,
}

fn hypothesis(name: &str, a: &Algebra, d: &Scalar) -> Result<()> {
    let rep = check_family(&catalog(name, d)?, a)?;
    match rep.failure() {
        None => Ok(()),
        Some(f) => Err(Error::HypothesisFailed(format!(
            "carrier fails {}",
            f.identity
        ))),
    }
}

fn rb_hypothesis(a: &Algebra, r: &LinearMap, d: &Rational, weight: u8) -> Result<()> {
    let rep = check_rota_baxter(a, r, d, weight)?;
    if !rep.satisfied() {
        return Err(Error::HypothesisFailed(format!(
            "not a {d}-Rota-Baxter operator of weight {weight}, fails at {:?}",
            rep.witness.map(|w| w.tuple).unwrap_or_default()
        )));
    }
    Ok(())
}

/// The product induced by a Rota–Baxter operator on `carrier`.
pub fn rb_induced_products(
    carrier: &Algebra,
    r: &LinearMap,
    d: &Rational,
    variant: RbVariant,
    validate: bool,
) -> Result<RbProduct> {
    let n = carrier.dim();
    r.check_dim(n)?;
    let ds = Scalar::from_rational(d.clone());
    if validate {
        match variant {
            RbVariant::Lie => {
                hypothesis("anticomm", carrier, &ds)?;
                hypothesis("jacobi", carrier, &ds)?;
                rb_hypothesis(carrier, r, d, 0)?;
            }
            RbVariant::AssocLie => {
                hypothesis("delta-assoc", carrier, &Scalar::one())?;
                rb_hypothesis(carrier, r, d, 0)?;
            }
            RbVariant::AssocWeight1 => {
                hypothesis("delta-assoc", carrier, &ds)?;
                rb_hypothesis(carrier, r, &Rational::one(), 1)?;
            }
        }
    }
    let t = &carrier.table;
    let imgs: Vec<Vector> = (0..n).map(|j| r.image(j)).collect();
    let table = table_from_fn(n, |i, j| {
        let (x, y) = (basis_vector(n, i), basis_vector(n, j));
        match variant {
            RbVariant::Lie => mul(t, &imgs[i], &y),
            RbVariant::AssocLie => sub(&mul(t, &imgs[i], &y), &mul(t, &y, &imgs[i])),
            RbVariant::AssocWeight1 => sub(
                &add(&mul(t, &imgs[i], &y), &mul(t, &x, &imgs[j])),
                t.basis_product(i, j),
            ),
        }
    });
    let algebra = Algebra {
        table,
        labels: carrier.labels.clone(),
    };
    let (cyclic_condition, pre_lie) = if variant == RbVariant::Lie {
        let cyc = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let term = |a: usize, b: usize, c: usize| {
                        mul(t, &mul(t, &imgs[a], &imgs[b]), &basis_vector(n, c))
                    };
                    let s = add(&add(&term(i, j, k), &term(j, k, i)), &term(k, i, j));
                    is_zero_vector(&s)
                })
            })
        });
        let pl = check_family(&catalog("delta-pre-lie", &ds)?, &algebra)?.satisfied();
        (Some(cyc), Some(pl))
    } else {
        (None, None)
    };
    Ok(RbProduct {
        algebra,
        cyclic_condition,
        pre_lie,
    })
}

/// δ-left-symmetry of the induced product, as a convenience for callers.
pub fn induced_is_left_symmetric(p: &RbProduct, d: &Rational) -> Result<bool> {
    let fam = catalog("delta-lsym", &Scalar::from_rational(d.clone()))?;
    Ok(check(&fam.identities[0], &p.algebra)?.satisfied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie2() -> Algebra {
        Algebra::from_entries(2, &[(1, 2, &[(2, "1")]), (2, 1, &[(2, "-1")])]).unwrap()
    }

    #[test]
    fn zero_operator() {
        let a = lie2();
        for w in [0, 1] {
            assert!(
                check_rota_baxter(&a, &LinearMap::zero(2), &Rational::from_int(3), w)
                    .unwrap()
                    .satisfied()
            );
        }
        assert!(check_rota_baxter(&a, &LinearMap::zero(2), &Rational::one(), 2).is_err());
    }

    #[test]
    fn nilpotent_operator_on_lie2() {
        // R(e1) = e2, R(e2) = 0
        let r = LinearMap::parse(&[&["0", "0"], &["1", "0"]]).unwrap();
        let a = lie2();
        assert!(check_rota_baxter(&a, &r, &Rational::one(), 0)
            .unwrap()
            .satisfied());
        let p = rb_induced_products(&a, &r, &Rational::one(), RbVariant::Lie, true).unwrap();
        assert!(induced_is_left_symmetric(&p, &Rational::one()).unwrap());
        assert_eq!(p.cyclic_condition, p.pre_lie);
    }

    #[test]
    fn hypothesis_failures() {
        let not_lie = Algebra::from_entries(2, &[(1, 1, &[(1, "1")])]).unwrap();
        let e = rb_induced_products(
            &not_lie,
            &LinearMap::zero(2),
            &Rational::one(),
            RbVariant::Lie,
            true,
        );
        assert!(matches!(e, Err(Error::HypothesisFailed(_))));
    }
}
