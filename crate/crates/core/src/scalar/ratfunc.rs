//! Rational functions in δ, kept in canonical form.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{DeltaPoly, Rational};
use crate::error::{Error, Result};

/// `num / den` with `den` monic and coprime to `num`; zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: DeltaPoly,
    den: DeltaPoly,
}

impl Scalar {
    pub fn new(num: DeltaPoly, den: DeltaPoly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalize(num, den))
    }

    fn normalize(num: DeltaPoly, den: DeltaPoly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() {
            let inv = den.leading().inv().unwrap();
            return Scalar {
                num: num.scale(&inv),
                den: DeltaPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().inv().unwrap();
        Scalar {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: DeltaPoly::zero(),
            den: DeltaPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar {
            num: DeltaPoly::constant(r),
            den: DeltaPoly::one(),
        }
    }

    pub fn from_poly(p: DeltaPoly) -> Scalar {
        Scalar {
            num: p,
            den: DeltaPoly::one(),
        }
    }

    /// The formal parameter δ.
    pub fn delta() -> Scalar {
        Scalar::from_poly(DeltaPoly::delta())
    }

    pub fn numerator(&self) -> &DeltaPoly {
        &self.num
    }

    pub fn denominator(&self) -> &DeltaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on δ.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(Scalar::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Substitute δ = d.
    pub fn eval_at(&self, d: &Rational) -> Result<Rational> {
        let den = self.den.eval(d);
        if den.is_zero() {
            return Err(Error::PoleAtDelta {
                poly: self.den.to_string(),
                at: d.to_string(),
            });
        }
        Ok(&self.num.eval(d) / &den)
    }

    /// Substitute δ = d, keeping the result as a scalar.
    pub fn specialize(&self, d: &Rational) -> Result<Scalar> {
        if self.is_constant() {
            return Ok(self.clone());
        }
        self.eval_at(d).map(Scalar::from_rational)
    }

    /// Max of numerator and denominator degree, then bit size; smaller is a better pivot.
    pub fn pivot_cost(&self) -> (usize, u64) {
        let deg = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        (deg, self.num.bit_size() + self.den.bit_size())
    }

    fn add_impl(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::normalize(num, &self.den * &rhs.den)
    }

    fn mul_impl(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        Scalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_impl(rhs)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_impl(&-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_impl(rhs)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::inv`] to test first.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.mul_impl(&rhs.inv().expect("scalar division by zero"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs);
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

/// Integer coefficient vectors for `num` and `den` sharing one scale, for display.
fn integer_pair(num: &DeltaPoly, den: &DeltaPoly) -> (DeltaPoly, DeltaPoly) {
    let l = Rational::lcm_denoms(num.coeffs().iter().chain(den.coeffs()));
    let scale = Rational::from_bigint(l);
    let (n, d) = (num.scale(&scale), den.scale(&scale));
    let mut g = BigInt::zero();
    for c in n.coeffs().iter().chain(d.coeffs()) {
        g = g.gcd(c.numer());
    }
    let mut inv = Rational::from_bigints(BigInt::one(), g).unwrap();
    if d.leading().is_negative() {
        inv = -inv;
    }
    (n.scale(&inv), d.scale(&inv))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (n, d) = integer_pair(&self.num, &self.den);
        let ns = n.to_string();
        let ds = d.to_string();
        let ns = if ns.contains(' ') {
            format!("({ns})")
        } else {
            ns
        };
        let ds = if ds.chars().all(|c| c.is_ascii_alphanumeric()) {
            ds
        } else {
            format!("({ds})")
        };
        write!(f, "{ns}/{ds}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        super::parse::parse_scalar(s)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let x = s("(delta^2 - 1)/(2*delta - 2)");
        assert_eq!(x, s("delta/2 + 1/2"));
        assert!(x.denominator().is_one());
        let y = s("(delta-1)/(2*delta-1)");
        assert_eq!(y.to_string(), "(delta - 1)/(2*delta - 1)");
        assert_eq!(s(&y.to_string()), y);
    }

    #[test]
    fn evaluation() {
        let x = s("1/(delta+1)");
        assert_eq!(x.eval_at(&Rational::one()).unwrap(), Rational::new(1, 2));
        assert!(matches!(
            x.eval_at(&Rational::from_int(-1)),
            Err(Error::PoleAtDelta { .. })
        ));
        assert_eq!(
            s("delta/(2*delta-1)")
                .eval_at(&Rational::from_int(2))
                .unwrap(),
            Rational::new(2, 3)
        );
    }

    #[test]
    fn field_ops() {
        let a = s("(delta+3)/(delta^2+1)");
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!((&a - &a).is_zero());
        assert_eq!(s("delta^-1"), Scalar::delta().inv().unwrap());
    }
}
