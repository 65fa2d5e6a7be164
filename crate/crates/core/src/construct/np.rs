//! A_φ, Novikov–Poisson deformations, Kantor and tensor products, and brackets built from derivations.

use crate::algebra::{basis_vector, Algebra, BiAlgebra, Role, Table};
use crate::error::{Error, Result};
use crate::identity::{catalog, check_family};
use crate::scalar::{Rational, Scalar};

use super::derivations::is_delta_derivation;
use super::{mul, sub, table_from_fn, LinearMap};

/// Which factor the map is applied to in A_φ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `x ∘ y = x φ(y)`
    Left,
    /// `x ∘ y = φ(x) y`
    Right,
}

fn ds(d: &Rational) -> Scalar {
    Scalar::from_rational(d.clone())
}

/// Ok when `b` is a δ-Novikov–Poisson algebra at `d`.
pub fn np_check(b: &BiAlgebra, d: &Rational) -> Result<()> {
    let rep = check_family(&catalog("delta-novikov-poisson", &ds(d))?, b)?;
    match rep.failure() {
        None => Ok(()),
        Some(f) => Err(Error::NotNovikovPoisson {
            delta: d.to_string(),
            detail: match &f.witness {
                Some(w) => format!("{} fails at {:?}", f.identity, w.tuple),
                None => f.identity.clone(),
            },
        }),
    }
}

fn require_comm_assoc(t: &Table) -> Result<()> {
    if !t.is_commutative() {
        return Err(Error::NotCommutativeAssociative("not commutative".into()));
    }
    if !t.is_associative() {
        return Err(Error::NotCommutativeAssociative("not associative".into()));
    }
    Ok(())
}

fn require_derivation(t: &Table, phi: &LinearMap, d: &Rational) -> Result<()> {
    if let Some((i, j)) = is_delta_derivation(t, phi, &ds(d))? {
        return Err(Error::NotADerivation {
            delta: d.to_string(),
            i: i + 1,
            j: j + 1,
        });
    }
    Ok(())
}

fn require_len(v: &[Scalar], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok(())
}

/// `x ∘ y = x φ(y)` (left) or `φ(x) y` (right) on a commutative associative algebra.
pub fn build_a_phi(
    a: &Algebra,
    phi: &LinearMap,
    d: &Rational,
    side: Side,
    validate: bool,
) -> Result<Algebra> {
    let n = a.dim();
    phi.check_dim(n)?;
    if validate {
        require_comm_assoc(&a.table)?;
        require_derivation(&a.table, phi, d)?;
    }
    let imgs: Vec<_> = (0..n).map(|j| phi.image(j)).collect();
    let t = table_from_fn(n, |i, j| match side {
        Side::Left => mul(&a.table, &basis_vector(n, i), &imgs[j]),
        Side::Right => mul(&a.table, &imgs[i], &basis_vector(n, j)),
    });
    Ok(Algebra {
        table: t,
        labels: a.labels.clone(),
    })
}

/// The δ-Novikov–Poisson algebra `(A, ·, x φ(y))`.
pub fn np_from_derivation(
    a: &Algebra,
    phi: &LinearMap,
    d: &Rational,
    validate: bool,
) -> Result<BiAlgebra> {
    let circ = build_a_phi(a, phi, d, Side::Left, validate)?;
    Ok(BiAlgebra {
        first: a.table.clone(),
        second: circ.table,
        role: Role::Novikov,
        labels: a.labels.clone(),
    })
}

/// Replaces ∘ by `x × y = x ∘ y + h x y`.
pub fn np_deform_h(b: &BiAlgebra, h: &[Scalar], d: &Rational, validate: bool) -> Result<BiAlgebra> {
    let n = b.dim();
    require_len(h, n)?;
    if validate {
        np_check(b, d)?;
    }
    let second = table_from_fn(n, |i, j| {
        let xy = b.first.basis_product(i, j).to_vec();
        let hxy = mul(&b.first, h, &xy);
        super::add(b.second.basis_product(i, j), &hxy)
    });
    Ok(BiAlgebra {
        second,
        ..b.clone()
    })
}

/// Replaces · by `x ·_q y = q x y`.
pub fn scale_q(b: &BiAlgebra, q: &[Scalar], d: &Rational, validate: bool) -> Result<BiAlgebra> {
    let n = b.dim();
    require_len(q, n)?;
    if validate {
        np_check(b, d)?;
    }
    let first = table_from_fn(n, |i, j| mul(&b.first, q, b.first.basis_product(i, j)));
    Ok(BiAlgebra { first, ..b.clone() })
}

/// Kantor product `x ∗ y = u(x∘y) − (ux)∘y − x∘(uy)` of · and ∘.
pub fn kantor_product(
    b: &BiAlgebra,
    u: &[Scalar],
    d: &Rational,
    validate: bool,
) -> Result<Algebra> {
    let n = b.dim();
    require_len(u, n)?;
    if validate {
        np_check(b, d)?;
    }
    let (dot, circ) = (&b.first, &b.second);
    let t = table_from_fn(n, |i, j| {
        let (x, y) = (basis_vector(n, i), basis_vector(n, j));
        let a = mul(dot, u, circ.basis_product(i, j));
        let bb = mul(circ, &mul(dot, u, &x), &y);
        let c = mul(circ, &x, &mul(dot, u, &y));
        sub(&sub(&a, &bb), &c)
    });
    Ok(Algebra {
        table: t,
        labels: b.labels.clone(),
    })
}

/// Tensor product with `(x₁⊗x₂)∘(y₁⊗y₂) = (x₁∘y₁)⊗(x₂·y₂) + (x₁·y₁)⊗(x₂∘y₂)`; basis `e_i ⊗ f_j` at index `i·n₂ + j`.
pub fn tensor_np(
    b1: &BiAlgebra,
    d1: &Rational,
    b2: &BiAlgebra,
    d2: &Rational,
    validate: bool,
) -> Result<BiAlgebra> {
    if d1 != d2 {
        return Err(Error::DeltaMismatch {
            left: d1.to_string(),
            right: d2.to_string(),
        });
    }
    if validate {
        np_check(b1, d1)?;
        np_check(b2, d2)?;
    }
    let (n1, n2) = (b1.dim(), b2.dim());
    let n = n1 * n2;
    let kron = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = Vec::with_capacity(n);
        for a in u {
            for b in v {
                out.push(a * b);
            }
        }
        out
    };
    let split = |k: usize| (k / n2, k % n2);
    let first = table_from_fn(n, |p, q| {
        let ((i1, i2), (j1, j2)) = (split(p), split(q));
        kron(
            b1.first.basis_product(i1, j1),
            b2.first.basis_product(i2, j2),
        )
    });
    let second = table_from_fn(n, |p, q| {
        let ((i1, i2), (j1, j2)) = (split(p), split(q));
        let a = kron(
            b1.second.basis_product(i1, j1),
            b2.first.basis_product(i2, j2),
        );
        let c = kron(
            b1.first.basis_product(i1, j1),
            b2.second.basis_product(i2, j2),
        );
        super::add(&a, &c)
    });
    let mut labels = Vec::with_capacity(n);
    for l1 in &b1.labels {
        for l2 in &b2.labels {
            labels.push(format!("{l1}⊗{l2}"));
        }
    }
    Ok(BiAlgebra {
        first,
        second,
        role: Role::Novikov,
        labels,
    })
}

/// Bracket `⟦x,y⟧ = φ₁(x)φ₂(y) − φ₂(x)φ₁(y)` for commuting δ-derivations.
pub fn poisson_from_two_derivations(
    a: &Algebra,
    phi1: &LinearMap,
    phi2: &LinearMap,
    d: &Rational,
    validate: bool,
) -> Result<BiAlgebra> {
    let n = a.dim();
    phi1.check_dim(n)?;
    phi2.check_dim(n)?;
    if validate {
        require_comm_assoc(&a.table)?;
        require_derivation(&a.table, phi1, d)?;
        require_derivation(&a.table, phi2, d)?;
        if !phi1.commutes_with(phi2)? {
            return Err(Error::DerivationsDoNotCommute);
        }
    }
    let (i1, i2): (Vec<_>, Vec<_>) = (0..n).map(|j| (phi1.image(j), phi2.image(j))).unzip();
    let br = table_from_fn(n, |i, j| {
        sub(
            &mul(&a.table, &i1[i], &i2[j]),
            &mul(&a.table, &i2[i], &i1[j]),
        )
    });
    Ok(BiAlgebra {
        first: a.table.clone(),
        second: br,
        role: Role::Bracket,
        labels: a.labels.clone(),
    })
}

/// `(N, ·, [x,y] = x∘y − y∘x)`, a transposed (δ+1)-Poisson algebra.
pub fn np_commutator_bracket(b: &BiAlgebra, d: &Rational, validate: bool) -> Result<BiAlgebra> {
    if validate {
        np_check(b, d)?;
    }
    Ok(BiAlgebra {
        first: b.first.clone(),
        second: b.second.commutator(),
        role: Role::Bracket,
        labels: b.labels.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::table_from_entries;

    fn dual_numbers_cubed() -> Algebra {
        // x, x², x³ with x^a x^b = x^{a+b}, zero past x³
        Algebra::from_entries(
            3,
            &[
                (1, 1, &[(2, "1")]),
                (1, 2, &[(3, "1")]),
                (2, 1, &[(3, "1")]),
            ],
        )
        .unwrap()
    }

    fn phi_2() -> LinearMap {
        // a 2-derivation: φ(x) = x + x², φ(x²) = 4x² + 4x³, φ(x³) = 10x³
        LinearMap::parse(&[&["1", "0", "0"], &["1", "4", "0"], &["0", "4", "10"]]).unwrap()
    }

    #[test]
    fn a_phi_truncated() {
        let a = dual_numbers_cubed();
        let d = Rational::from_int(2);
        let ap = build_a_phi(&a, &phi_2(), &d, Side::Left, true).unwrap();
        let fam = catalog("delta-novikov", &Scalar::from_int(2)).unwrap();
        assert!(check_family(&fam, &ap).unwrap().satisfied());
        let e = |i| basis_vector(3, i);
        assert_eq!(
            ap.multiply(&e(0), &e(0)).unwrap(),
            a.multiply(&e(0), &phi_2().image(0)).unwrap()
        );
    }

    #[test]
    fn a_phi_rejects() {
        let a = dual_numbers_cubed();
        let bad = LinearMap::identity(3);
        assert!(matches!(
            build_a_phi(&a, &bad, &Rational::from_int(2), Side::Left, true),
            Err(Error::NotADerivation { .. })
        ));
        let e15 = Algebra::from_entries(3, &[(1, 2, &[(2, "1")])]).unwrap();
        assert!(matches!(
            build_a_phi(&e15, &bad, &Rational::new(1, 2), Side::Left, true),
            Err(Error::NotCommutativeAssociative(_))
        ));
    }

    #[test]
    fn tensor_with_unit_factor() {
        let a = dual_numbers_cubed();
        let d = Rational::from_int(2);
        let b1 = np_from_derivation(&a, &phi_2(), &d, true).unwrap();
        let one = BiAlgebra::new(
            table_from_entries(1, &[(1, 1, &[(1, "1")])]).unwrap(),
            Table::zero(1),
            Role::Novikov,
        )
        .unwrap();
        let t = tensor_np(&b1, &d, &one, &d, true).unwrap();
        assert_eq!(t.first, b1.first);
        assert_eq!(t.second, b1.second);
        assert!(matches!(
            tensor_np(&b1, &d, &one, &Rational::from_int(3), true),
            Err(Error::DeltaMismatch { .. })
        ));
    }
}
