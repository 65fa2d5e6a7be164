//! Named identities and families.
//!
//! Every identity is stored as LHS − RHS. Variables are x, y, z, t in order.
//! In two-product families the commutative (or Novikov) product is `Op::First`
//! and the second product (∘ or the bracket) is `Op::Second`.

use crate::algebra::{BiAlgebra, Op};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

use super::check::{check_family, CheckReport};
use super::expr::{var, Expr, FormalIdentity};

/// A list of identities that hold together.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub name: String,
    pub identities: Vec<FormalIdentity>,
}

impl Family {
    fn new(name: &str, identities: Vec<FormalIdentity>) -> Family {
        Family {
            name: name.to_string(),
            identities,
        }
    }

    /// Moves every identity onto the given product.
    fn on(self, op: Op) -> Family {
        let identities = self
            .identities
            .into_iter()
            .map(|id| {
                let n = id.name.clone();
                id.map_ops(n, |_| op)
            })
            .collect();
        Family { identities, ..self }
    }

    pub fn arity(&self) -> usize {
        self.identities.iter().map(|i| i.arity).max().unwrap_or(0)
    }
}

/// Names accepted by [`catalog`].
pub const NAMES: &[&str] = &[
    "delta-lsym",
    "right-comm",
    "delta-novikov",
    "right-delta-novikov",
    "delta-assoc",
    "delta-pre-lie",
    "lie-admissible",
    "v0",
    "w-variety",
    "np-compat",
    "delta-novikov-poisson",
    "strong-right-comm",
    "commutator-product-id",
    "jacobi",
    "anticomm",
    "metabelian",
    "delta-poisson",
    "transposed-delta-poisson",
    "delta-gd",
    "gd-tp-combinations",
    "comm-assoc",
];

fn xyz() -> (Expr, Expr, Expr) {
    (var(0), var(1), var(2))
}

fn mk(name: &str, e: Expr) -> FormalIdentity {
    FormalIdentity::new(name, e).expect("catalog identities are multilinear")
}

fn p(a: &Expr, b: &Expr) -> Expr {
    a.dot(b)
}

fn lsym(d: &Scalar) -> FormalIdentity {
    let (x, y, z) = xyz();
    let e = &(&(&p(&p(&x, &y), &z).scale(d) - &p(&x, &p(&y, &z))) - &p(&p(&y, &x), &z).scale(d))
        + &p(&y, &p(&x, &z));
    mk("delta-lsym", e)
}

fn rcomm() -> FormalIdentity {
    let (x, y, z) = xyz();
    mk("right-comm", &p(&p(&x, &y), &z) - &p(&p(&x, &z), &y))
}

fn lcomm() -> FormalIdentity {
    let (x, y, z) = xyz();
    mk("left-comm", &p(&x, &p(&y, &z)) - &p(&y, &p(&x, &z)))
}

fn delta_assoc(d: &Scalar) -> FormalIdentity {
    let (x, y, z) = xyz();
    mk(
        "delta-assoc",
        &p(&p(&x, &y), &z).scale(d) - &p(&x, &p(&y, &z)),
    )
}

fn assoc() -> FormalIdentity {
    let (x, y, z) = xyz();
    mk("assoc", &p(&p(&x, &y), &z) - &p(&x, &p(&y, &z)))
}

fn comm() -> FormalIdentity {
    let (x, y) = (var(0), var(1));
    mk("comm", &p(&x, &y) - &p(&y, &x))
}

fn anticomm() -> FormalIdentity {
    let (x, y) = (var(0), var(1));
    mk("anticomm", &p(&x, &y) + &p(&y, &x))
}

fn jacobi() -> FormalIdentity {
    let (x, y, z) = xyz();
    mk(
        "jacobi",
        &(&p(&p(&x, &y), &z) + &p(&p(&y, &z), &x)) + &p(&p(&z, &x), &y),
    )
}

fn br(a: &Expr, b: &Expr) -> Expr {
    a.comm(Op::First, b)
}

/// `[x,y]z + [y,z]x + [z,x]y`.
fn cyclic_left() -> FormalIdentity {
    let (x, y, z) = xyz();
    mk(
        "cyclic-commutator-left",
        &(&p(&br(&x, &y), &z) + &p(&br(&y, &z), &x)) + &p(&br(&z, &x), &y),
    )
}

/// `x[y,z] + y[z,x] + z[x,y]`.
fn cyclic_right() -> FormalIdentity {
    let (x, y, z) = xyz();
    mk(
        "cyclic-commutator-right",
        &(&p(&x, &br(&y, &z)) + &p(&y, &br(&z, &x))) + &p(&z, &br(&x, &y)),
    )
}

fn strong_rcomm() -> FormalIdentity {
    let (x, y, z, t) = (var(0), var(1), var(2), var(3));
    mk(
        "strong-right-comm",
        &p(&p(&z, &p(&x, &y)), &t) - &p(&p(&z, &p(&x, &t)), &y),
    )
}

fn commutator_product(d: &Scalar) -> FormalIdentity {
    let (x, y, z, t) = (var(0), var(1), var(2), var(3));
    let rhs = &p(&p(&p(&x, &y), &z), &t) - &p(&p(&p(&z, &x), &y), &t);
    mk(
        "commutator-product-id",
        &br(&p(&x, &y), &p(&z, &t)) - &rhs.scale(d),
    )
}

fn metabelian() -> FormalIdentity {
    let (x, y, z, t) = (var(0), var(1), var(2), var(3));
    mk("metabelian", br(&br(&x, &y), &br(&z, &t)))
}

fn right_delta_novikov(d: &Scalar) -> Vec<FormalIdentity> {
    let (x, y, z) = xyz();
    let rsym = &(&(&p(&p(&x, &y), &z) - &p(&x, &p(&y, &z)).scale(d)) - &p(&p(&x, &z), &y))
        + &p(&x, &p(&z, &y)).scale(d);
    vec![mk("delta-rsym", rsym), lcomm()]
}

fn np_compat(d: &Scalar) -> Vec<FormalIdentity> {
    let (x, y, z) = xyz();
    let a = &x.dot(&y).circ(&z) - &x.dot(&y.circ(&z));
    let b = &(&(&x.circ(&y).dot(&z).scale(d) - &x.circ(&y.dot(&z))) - &y.circ(&x).dot(&z).scale(d))
        + &y.circ(&x.dot(&z));
    vec![mk("np-assoc", a), mk("np-lsym", b)]
}

fn two(name: &str, op: Op, id: FormalIdentity) -> FormalIdentity {
    id.map_ops(name, |_| op)
}

fn comm_assoc_base() -> Vec<FormalIdentity> {
    vec![
        two("comm", Op::First, comm()),
        two("assoc", Op::First, assoc()),
    ]
}

fn lie_second() -> Vec<FormalIdentity> {
    vec![
        two("bracket-anticomm", Op::Second, anticomm()),
        two("bracket-jacobi", Op::Second, jacobi()),
    ]
}

fn bracket(a: &Expr, b: &Expr) -> Expr {
    a.circ(b)
}

/// `{xy,z} − δ(x{y,z} + {x,z}y)`.
fn delta_poisson_compat(d: &Scalar) -> FormalIdentity {
    let (x, y, z) = xyz();
    let rhs = &x.dot(&bracket(&y, &z)) + &bracket(&x, &z).dot(&y);
    mk(
        "delta-poisson-compat",
        &bracket(&x.dot(&y), &z) - &rhs.scale(d),
    )
}

/// `TP(x,y,z) = (δ+1)x{y,z} + {z,xy} − {y,xz}`.
fn tp_expr(d: &Scalar, x: &Expr, y: &Expr, z: &Expr) -> Expr {
    let one = Scalar::one();
    &(&x.dot(&bracket(y, z)).scale(&(d + &one)) + &bracket(z, &x.dot(y))) - &bracket(y, &x.dot(z))
}

/// `GD(x,y,z) = {x,y∘z} − {z,y∘x} + δ{y,x}∘z − δ{y,z}∘x − y∘{x,z}`, with ∘ the first product.
fn gd_expr(d: &Scalar, x: &Expr, y: &Expr, z: &Expr) -> Expr {
    let a = &bracket(x, &y.dot(z)) - &bracket(z, &y.dot(x));
    let b = &bracket(y, x).dot(z).scale(d) - &bracket(y, z).dot(x).scale(d);
    &(&a + &b) - &y.dot(&bracket(x, z))
}

fn transposed_compat(d: &Scalar) -> FormalIdentity {
    let (x, y, z) = xyz();
    let e =
        &(&x.dot(&bracket(&y, &z)).scale(d) - &bracket(&x.dot(&y), &z)) - &bracket(&y, &x.dot(&z));
    mk("transposed-delta-poisson-compat", e)
}

fn gd_identity(d: &Scalar) -> FormalIdentity {
    let (x, y, z) = xyz();
    mk("delta-gd-compat", gd_expr(d, &x, &y, &z))
}

/// The two linear relations between GD and TP; `None` entries are undefined at this δ.
fn gd_tp_combinations(d: &Scalar) -> (Option<FormalIdentity>, Option<FormalIdentity>) {
    let (a, b, c) = xyz();
    let one = Scalar::one();
    let first = (&(d + d) - &one).inv().map(|k| {
        let comb = &(&gd_expr(d, &c, &b, &a).scale(d) - &gd_expr(d, &b, &c, &a).scale(d))
            - &gd_expr(d, &c, &a, &b).scale(&(&one - d));
        mk("tp-from-gd", &tp_expr(d, &a, &b, &c) - &comb.scale(&k))
    });
    let second = (d + &one).inv().map(|k| {
        let comb = &(&tp_expr(d, &a, &c, &b).scale(d) + &tp_expr(d, &c, &b, &a).scale(d))
            + &tp_expr(d, &b, &c, &a);
        mk("gd-from-tp", &gd_expr(d, &a, &b, &c) - &comb.scale(&k))
    });
    (first, second)
}

/// The δ-Novikov pair: δ-left-symmetry and right-commutativity.
pub fn delta_novikov(d: &Scalar) -> Family {
    Family::new("delta-novikov", vec![lsym(d), rcomm()])
}

/// δ-left-symmetry plus `[x,y]z + [y,z]x + [z,x]y = 0`.
pub fn delta_pre_lie(d: &Scalar) -> Family {
    Family::new("delta-pre-lie", vec![lsym(d), cyclic_left()])
}

/// Looks up a named identity or family; `delta` may be a number or the symbol δ.
pub fn catalog(name: &str, delta: &Scalar) -> Result<Family> {
    let d = delta;
    let single = |id: FormalIdentity| Family::new(name, vec![id.renamed(name)]);
    Ok(match name {
        "delta-lsym" => single(lsym(d)),
        "right-comm" => single(rcomm()),
        "left-comm" => single(lcomm()),
        "delta-novikov" => delta_novikov(d),
        "right-delta-novikov" => Family::new(name, right_delta_novikov(d)),
        "delta-assoc" => single(delta_assoc(d)),
        "delta-pre-lie" => delta_pre_lie(d),
        "lie-admissible" => Family::new(name, vec![cyclic_left(), cyclic_right()]),
        "v0" => {
            let (x, y, z) = xyz();
            let extra = mk("v0-extra", &p(&p(&x, &y), &z) - &p(&p(&y, &x), &z));
            Family::new(name, vec![lcomm(), rcomm(), extra])
        }
        "w-variety" => {
            let (x, y, z) = xyz();
            Family::new(name, vec![lcomm(), mk("right-nil", p(&p(&x, &y), &z))])
        }
        "np-compat" => Family::new(name, np_compat(d)),
        "delta-novikov-poisson" => {
            let mut ids = comm_assoc_base();
            ids.extend(delta_novikov(d).on(Op::Second).identities);
            ids.extend(np_compat(d));
            Family::new(name, ids)
        }
        "comm-assoc" => Family::new(name, comm_assoc_base()),
        "strong-right-comm" => single(strong_rcomm()),
        "commutator-product-id" => single(commutator_product(d)),
        "jacobi" => single(jacobi()),
        "anticomm" => single(anticomm()),
        "metabelian" => single(metabelian()),
        "delta-poisson" => {
            let mut ids = comm_assoc_base();
            ids.extend(lie_second());
            ids.push(delta_poisson_compat(d));
            Family::new(name, ids)
        }
        "transposed-delta-poisson" => {
            let mut ids = comm_assoc_base();
            ids.extend(lie_second());
            ids.push(transposed_compat(d));
            Family::new(name, ids)
        }
        "delta-gd" | "gd" => {
            let mut ids = delta_novikov(d).identities;
            ids.extend(lie_second());
            ids.push(gd_identity(d));
            Family::new("delta-gd", ids)
        }
        "gd-tp-combinations" => {
            let (first, second) = gd_tp_combinations(d);
            let first = first.ok_or_else(|| excluded("first", d))?;
            let second = second.ok_or_else(|| excluded("second", d))?;
            Family::new(name, vec![first, second])
        }
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    })
}

fn excluded(which: &str, d: &Scalar) -> Error {
    Error::ExcludedDelta {
        which: which.to_string(),
        delta: d.to_string(),
    }
}

/// The compatibility identity of a two-product family, without the axioms
/// of its two products.
pub fn compatibility(name: &str, delta: &Scalar) -> Result<FormalIdentity> {
    Ok(match name {
        "delta-poisson" => delta_poisson_compat(delta),
        "transposed-delta-poisson" => transposed_compat(delta),
        "delta-gd" | "gd" => gd_identity(delta),
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    })
}

/// Verifies both GD/TP linear relations on every basis triple of `b`.
pub fn gd_tp_combination_check(b: &BiAlgebra, d: &Rational) -> Result<CheckReport> {
    let fam = catalog("gd-tp-combinations", &Scalar::from_rational(d.clone()))?;
    let rep = check_family(&fam, b)?;
    let bad = rep.failure().cloned();
    let mut out = bad.unwrap_or_else(|| rep.reports[0].clone());
    out.identity = fam.name;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            let f = catalog(n, &Scalar::delta()).unwrap();
            assert!(!f.identities.is_empty(), "{n}");
        }
        assert!(matches!(
            catalog("nope", &Scalar::one()),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn shapes() {
        let f = catalog("delta-novikov", &Scalar::delta()).unwrap();
        assert_eq!(f.identities.len(), 2);
        assert_eq!(f.arity(), 3);
        let j = catalog("jacobi", &Scalar::one()).unwrap();
        assert_eq!(j.identities[0].arity, 3);
        assert_eq!(j.identities[0].products_used(), vec![Op::First]);
        let gd = compatibility("gd", &Scalar::from_rational(Rational::new(1, 2))).unwrap();
        assert_eq!(gd.terms.len(), 5);
        assert_eq!(catalog("metabelian", &Scalar::one()).unwrap().arity(), 4);
    }

    #[test]
    fn combinations_excluded() {
        let half = Scalar::from_rational(Rational::new(1, 2));
        assert_eq!(
            catalog("gd-tp-combinations", &half),
            Err(Error::ExcludedDelta {
                which: "first".into(),
                delta: "1/2".into()
            })
        );
        let e = catalog("gd-tp-combinations", &Scalar::from_int(-1)).unwrap_err();
        assert!(matches!(e, Error::ExcludedDelta { ref which, .. } if which == "second"));
    }
}
