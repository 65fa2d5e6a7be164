//! Dense univariate polynomials in δ over ℚ, with gcd and factoring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Polynomial in δ; `coeffs[k]` is the coefficient of δ^k, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DeltaPoly {
    coeffs: Vec<Rational>,
}

/// Give up on Kronecker factoring after this many candidate divisors.
const KRONECKER_BUDGET: usize = 200_000;

impl DeltaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DeltaPoly { coeffs }
    }

    pub fn zero() -> Self {
        DeltaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DeltaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        DeltaPoly::new(vec![c])
    }

    /// The polynomial δ.
    pub fn delta() -> Self {
        DeltaPoly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        DeltaPoly::new(v)
    }

    /// `δ - r`.
    pub fn linear_root(r: &Rational) -> Self {
        DeltaPoly::new(vec![-r, Rational::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        DeltaPoly::new(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn bit_size(&self) -> u64 {
        self.coeffs.iter().map(Rational::bit_size).sum()
    }

    pub fn eval(&self, d: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * d) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return DeltaPoly::zero();
        }
        DeltaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => DeltaPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = DeltaPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        DeltaPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, rhs: &DeltaPoly) -> (DeltaPoly, DeltaPoly) {
        let dr = rhs.degree().expect("polynomial division by zero");
        let lead_inv = rhs.leading().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dr {
            return (DeltaPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dr];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dr] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, b) in rhs.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[k + i] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dr);
        (DeltaPoly::new(quot), DeltaPoly::new(rem))
    }

    /// Quotient of an exact division; debug-asserts a zero remainder.
    pub fn exact_div(&self, rhs: &DeltaPoly) -> DeltaPoly {
        if rhs.is_constant() {
            return self.scale(&rhs.leading().inv().expect("division by zero polynomial"));
        }
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &DeltaPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &DeltaPoly) -> DeltaPoly {
        if self.is_constant() && !self.is_zero() || other.is_constant() && !other.is_zero() {
            return DeltaPoly::one();
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = Rational::lcm_denoms(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    fn from_bigints(cs: &[BigInt]) -> DeltaPoly {
        DeltaPoly::new(
            cs.iter()
                .map(|c| Rational::from_bigint(c.clone()))
                .collect(),
        )
    }

    /// Yun's square-free decomposition: pairs (factor, multiplicity), factors monic.
    pub fn square_free(&self) -> Vec<(DeltaPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.exact_div(&a);
        let mut c = fp.exact_div(&a);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return roots;
        }
        let mut f = self.clone();
        if f.constant_term().is_zero() {
            roots.push(Rational::zero());
            while f.constant_term().is_zero() {
                f = DeltaPoly::new(f.coeffs[1..].to_vec());
            }
        }
        if !f.is_constant() {
            let ints = f.primitive_integer();
            let ps = divisors(&ints[0]);
            let qs = divisors(ints.last().unwrap());
            for p in &ps {
                for q in &qs {
                    for s in [1i64, -1] {
                        let r = Rational::from_bigints(p * BigInt::from(s), q.clone()).unwrap();
                        if f.eval(&r).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Irreducible monic factors over ℚ with multiplicities, in a canonical order.
    ///
    /// Factors of degree ≥ 2 come from Kronecker's method; if its search budget
    /// runs out the remaining cofactor is reported whole.
    pub fn factor(&self) -> Vec<(DeltaPoly, usize)> {
        let mut out = Vec::new();
        for (sf, mult) in self.square_free() {
            let mut rest = sf;
            for r in rest.rational_roots() {
                let lin = DeltaPoly::linear_root(&r);
                out.push((lin.clone(), mult));
                rest = rest.exact_div(&lin);
            }
            for g in kronecker_split(&rest) {
                out.push((g, mult));
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        out
    }

    /// The rational root of a linear polynomial.
    pub fn linear_root_value(&self) -> Option<Rational> {
        if self.degree() == Some(1) {
            Some(-(&self.coeffs[0] / &self.coeffs[1]))
        } else {
            None
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Splits a square-free polynomial without rational roots into irreducible factors.
fn kronecker_split(f: &DeltaPoly) -> Vec<DeltaPoly> {
    let Some(n) = f.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    if n <= 3 {
        return vec![f.monic()];
    }
    let ints = f.primitive_integer();
    let fz = DeltaPoly::from_bigints(&ints);
    for d in 2..=n / 2 {
        let pts: Vec<i64> = (0..=d as i64)
            .map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
            .collect();
        let vals: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|&x| {
                let v = fz.eval(&Rational::from_int(x));
                let mut ds = divisors(v.numer());
                let neg: Vec<BigInt> = ds.iter().map(|x| -x).collect();
                ds.extend(neg);
                ds
            })
            .collect();
        let total: usize = vals.iter().map(Vec::len).product();
        if total > KRONECKER_BUDGET {
            return vec![f.monic()];
        }
        let mut idx = vec![0usize; vals.len()];
        loop {
            let ys: Vec<Rational> = idx
                .iter()
                .zip(&vals)
                .map(|(&i, v)| Rational::from_bigint(v[i].clone()))
                .collect();
            let xs: Vec<Rational> = pts.iter().map(|&x| Rational::from_int(x)).collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(d) && g.divides(&fz) {
                let g = g.monic();
                let h = f.exact_div(&g);
                let mut out = kronecker_split(&g);
                out.extend(kronecker_split(&h));
                return out;
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
                if idx[k] < vals[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    vec![f.monic()]
}

fn interpolate(xs: &[Rational], ys: &[Rational]) -> DeltaPoly {
    let mut acc = DeltaPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = DeltaPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let denom = (xi - xj).inv().unwrap();
                basis = &basis * &DeltaPoly::linear_root(xj).scale(&denom);
            }
        }
        acc = &acc + &basis;
    }
    acc
}

impl Add<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        DeltaPoly::new(v)
    }
}

impl Sub<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        self + &(-rhs)
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        DeltaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || rhs.is_zero() {
            return DeltaPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                v[i + j] += &t;
            }
        }
        DeltaPoly::new(v)
    }
}

impl fmt::Display for DeltaPoly {
    /// Prints in the scalar grammar, highest power first: `2*delta^2 - 1/2*delta + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "delta".to_string(),
                _ => format!("delta^{k}"),
            };
            if var.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{a}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaPoly({self})")
    }
}

impl serde::Serialize for DeltaPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> DeltaPoly {
        DeltaPoly::from_ints(cs)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 1]).gcd(&p(&[-1, 0, 1])), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&DeltaPoly::zero()), p(&[2, 4]).monic());
        assert_eq!(p(&[0, -1, 1]).gcd(&p(&[0, 1])), p(&[0, 1]));
        assert_eq!(DeltaPoly::zero().gcd(&DeltaPoly::zero()), DeltaPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[3, -1, 2]).to_string(), "2*delta^2 - delta + 3");
        assert_eq!(p(&[0, -1]).to_string(), "-delta");
        assert_eq!(DeltaPoly::zero().to_string(), "0");
    }

    #[test]
    fn roots_and_factors() {
        // (2δ - 1)(δ + 3)(δ^2 + 1)^2
        let f = &(&p(&[-1, 2]) * &p(&[3, 1])) * &p(&[1, 0, 1]).pow(2);
        assert_eq!(
            f.rational_roots(),
            vec![Rational::from_int(-3), Rational::new(1, 2)]
        );
        let fs = f.factor();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[2], (p(&[1, 0, 1]), 2));
    }

    #[test]
    fn kronecker_quartic() {
        // (δ^2 + 1)(δ^2 + δ + 2), no rational roots
        let f = &p(&[1, 0, 1]) * &p(&[2, 1, 1]);
        let fs: Vec<DeltaPoly> = f.factor().into_iter().map(|x| x.0).collect();
        assert_eq!(fs, vec![p(&[1, 0, 1]), p(&[2, 1, 1])]);
        let irr = p(&[2, 0, 0, 0, 1]);
        assert_eq!(irr.factor(), vec![(irr.clone(), 1)]);
    }

    #[test]
    fn division() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
    }
}
