//! Two-sided ideals: closure, the exact dimension-2 line test, and a heuristic probe.

use crate::error::{Error, Result};
use crate::scalar::{DeltaPoly, Rational, Scalar};

use super::{subspace_product, Subspace, Table, Vector};

/// Smallest two-sided ideal containing `gens`.
pub fn ideal_closure(t: &Table, gens: &Subspace) -> Subspace {
    let full = Subspace::full(t.dim());
    let mut cur = gens.clone();
    loop {
        let next = cur
            .sum(&subspace_product(t, &full, &cur).unwrap())
            .sum(&subspace_product(t, &cur, &full).unwrap());
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

pub fn is_ideal(t: &Table, s: &Subspace) -> bool {
    let full = Subspace::full(t.dim());
    s.contains_subspace(&subspace_product(t, &full, s).unwrap())
        && s.contains_subspace(&subspace_product(t, s, &full).unwrap())
}

/// A one-dimensional ideal of a two-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineIdeal {
    /// Spanned by this rational vector.
    Rational(Vec<Rational>),
    /// Spanned by `(1, t)` for any root `t` of this irreducible polynomial (printed in δ).
    Algebraic(DeltaPoly),
}

/// Decides whether a two-dimensional algebra with rational constants has a
/// one-dimensional two-sided ideal, returning one if so.
///
/// The line through `(1, t)` is an ideal exactly when `t` is a common root of
/// the closure conditions, so existence reduces to their gcd being nonconstant.
pub fn proper_ideal_exists_dim2(t: &Table) -> Result<Option<LineIdeal>> {
    if t.dim() != 2 {
        return Err(Error::UnsupportedDimension(t.dim()));
    }
    if !t.is_constant() {
        return Err(Error::Invalid(
            "structure constants must be free of delta".into(),
        ));
    }
    let c = |i: usize, j: usize, k: usize| t.get(i, j, k).as_rational().unwrap();
    // e_i v and v e_i for v = (1, t) have coordinates a + b t; the condition is w2 - t w1 = 0.
    let mut conds = Vec::new();
    for i in 0..2 {
        for left in [true, false] {
            let (w1, w2): ((Rational, Rational), (Rational, Rational)) = if left {
                ((c(i, 0, 0), c(i, 1, 0)), (c(i, 0, 1), c(i, 1, 1)))
            } else {
                ((c(0, i, 0), c(1, i, 0)), (c(0, i, 1), c(1, i, 1)))
            };
            // (w2.0 + w2.1 t) - t (w1.0 + w1.1 t)
            let mid = &w2.1 - &w1.0;
            conds.push(DeltaPoly::new(vec![w2.0, mid, -w1.1]));
        }
    }
    let g = conds.iter().fold(DeltaPoly::zero(), |g, p| g.gcd(p));
    let mut found = None;
    if g.is_zero() {
        found = Some(LineIdeal::Rational(vec![Rational::one(), Rational::zero()]));
    } else if !g.is_constant() {
        found = Some(match g.rational_roots().first() {
            Some(r) => LineIdeal::Rational(vec![Rational::one(), r.clone()]),
            None => LineIdeal::Algebraic(g.factor()[0].0.clone()),
        });
    }
    if found.is_none() {
        let e2 = Subspace::coordinate(2, &[1]);
        if is_ideal(t, &e2) {
            found = Some(LineIdeal::Rational(vec![Rational::zero(), Rational::one()]));
        }
    }
    Ok(found)
}

#[derive(Clone, Debug)]
pub struct ProbeResult {
    /// A proper nonzero ideal, which certifies non-simplicity.
    pub proper_ideal: Option<Subspace>,
    pub vectors_tried: usize,
}

/// Heuristic search for a proper ideal: closures of basis vectors and of
/// pseudo-random small-integer vectors. Finding none proves nothing.
pub fn probe_simplicity(t: &Table, trials: usize, seed: u64) -> ProbeResult {
    let n = t.dim();
    let mut candidates: Vec<Vector> = (0..n).map(|i| super::basis_vector(n, i)).collect();
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    for _ in 0..trials {
        let v: Vector = (0..n)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                Scalar::from_int(((state >> 33) % 7) as i64 - 3)
            })
            .collect();
        candidates.push(v);
    }
    let mut tried = 0;
    for v in candidates {
        if super::is_zero_vector(&v) {
            continue;
        }
        tried += 1;
        let s = ideal_closure(t, &Subspace::span(n, vec![v]).unwrap());
        if s.dim() < n {
            return ProbeResult {
                proper_ideal: Some(s),
                vectors_tried: tried,
            };
        }
    }
    ProbeResult {
        proper_ideal: None,
        vectors_tried: tried,
    }
}
