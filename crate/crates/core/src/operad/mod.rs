//! Multilinear components of free algebras with one binary operation and quadratic relations.
//!
//! Monomials of degree n are planar binary trees with leaves labelled by a
//! permutation of `0..n`. Shapes are ordered recursively by left-subtree size,
//! largest first; within a shape the labellings are lexicographic.

mod dual;

pub use dual::{
    derived_rules, dual_relations_via_lie_admissibility, left_base, printed_rules, rewrite_degree3,
    rule_holds, DualReport, RewriteRule,
};

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::Op;
use crate::error::{Error, Result};
use crate::identity::{delta_novikov, FormalIdentity, Tree};
use crate::linalg::{SparseEchelon, SparseRow};
use crate::scalar::{DeltaPoly, Rational, Scalar};

/// Largest degree handled unless a caller raises it.
pub const DEFAULT_DEGREE_CAP: usize = 5;

fn check_degree(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::DegreeTooLarge { degree: n, cap });
    }
    Ok(())
}

/// Unlabelled shapes with `n` leaves, all leaves `Leaf(0)`.
pub fn shapes(n: usize) -> Vec<Tree> {
    if n == 1 {
        return vec![Tree::Leaf(0)];
    }
    let mut out = Vec::new();
    for k in (1..n).rev() {
        for l in shapes(k) {
            for r in shapes(n - k) {
                out.push(Tree::node(Op::First, l.clone(), r));
            }
        }
    }
    out
}

fn label(shape: &Tree, labels: &mut impl Iterator<Item = u8>) -> Tree {
    match shape {
        Tree::Leaf(_) => Tree::Leaf(labels.next().expect("enough labels")),
        Tree::Node(op, l, r) => {
            let l = label(l, labels);
            let r = label(r, labels);
            Tree::node(*op, l, r)
        }
    }
}

fn catalan(k: usize) -> usize {
    (0..k).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// `Catalan(n−1)·n!`.
pub fn monomial_count(n: usize) -> usize {
    catalan(n - 1) * (1..=n).product::<usize>()
}

pub fn monomials_capped(n: usize, cap: usize) -> Result<Vec<Tree>> {
    check_degree(n, cap)?;
    let mut out = Vec::with_capacity(monomial_count(n));
    for s in shapes(n) {
        for p in (0..n as u8).permutations(n) {
            out.push(label(&s, &mut p.into_iter()));
        }
    }
    Ok(out)
}

/// All degree-`n` monomials in canonical order.
pub fn monomials(n: usize) -> Result<Vec<Tree>> {
    monomials_capped(n, DEFAULT_DEGREE_CAP)
}

/// Rows spanning the degree-`n` part of the ideal generated by the relations.
#[derive(Clone, Debug)]
pub struct ConsequenceSpace {
    pub degree: usize,
    pub monomials: Vec<Tree>,
    pub rows: Vec<SparseRow<Scalar>>,
}

impl ConsequenceSpace {
    pub fn index(&self) -> HashMap<&Tree, u32> {
        self.monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i as u32))
            .collect()
    }

    /// Dense form, one row per generated consequence.
    pub fn to_dense(&self) -> crate::linalg::ExactMatrix {
        let mut m = crate::linalg::ExactMatrix::zeros(self.rows.len(), self.monomials.len());
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                m.set(i, *c as usize, v.clone());
            }
        }
        m
    }
}

fn validate_relations(rels: &[FormalIdentity]) -> Result<()> {
    for r in rels {
        if r.arity != 3 || r.uses(Op::Second) || r.terms.iter().any(|(_, t)| t.degree() != 3) {
            return Err(Error::Invalid(format!(
                "relation `{}` must be a single-product identity of arity 3",
                r.name
            )));
        }
    }
    Ok(())
}

/// Replaces the leaf labelled `hole` by `plug`.
fn graft(ctx: &Tree, hole: u8, plug: &Tree) -> Tree {
    match ctx {
        Tree::Leaf(v) if *v == hole => plug.clone(),
        Tree::Leaf(v) => Tree::Leaf(*v),
        Tree::Node(op, l, r) => Tree::node(*op, graft(l, hole, plug), graft(r, hole, plug)),
    }
}

/// Every relation with monomials substituted for its variables, grafted into every context.
pub fn consequence_space_capped(
    rels: &[FormalIdentity],
    n: usize,
    cap: usize,
) -> Result<ConsequenceSpace> {
    validate_relations(rels)?;
    let monos = monomials_capped(n, cap)?;
    let index: HashMap<Tree, u32> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let mut rows = Vec::new();
    const HOLE: u8 = u8::MAX;
    for kc in 0..=n.saturating_sub(3) {
        // context: kc ordinary leaves plus one hole
        let mut contexts = Vec::new();
        for s in shapes(kc + 1) {
            for h in 0..=kc {
                contexts.push((s.clone(), h));
            }
        }
        let inner = n - kc;
        for k1 in 1..inner {
            for k2 in 1..inner - k1 {
                let k3 = inner - k1 - k2;
                for (cs, h) in &contexts {
                    for s1 in shapes(k1) {
                        for s2 in shapes(k2) {
                            for s3 in shapes(k3) {
                                for p in (0..n as u8).permutations(n) {
                                    let mut it = p.into_iter();
                                    let m = [
                                        label(&s1, &mut it),
                                        label(&s2, &mut it),
                                        label(&s3, &mut it),
                                    ];
                                    let rest: Vec<u8> = it.collect();
                                    let mut ctx_labels = Vec::with_capacity(kc + 1);
                                    let mut ri = rest.into_iter();
                                    for pos in 0..=kc {
                                        ctx_labels.push(if pos == *h {
                                            HOLE
                                        } else {
                                            ri.next().unwrap()
                                        });
                                    }
                                    let ctx = label(cs, &mut ctx_labels.into_iter());
                                    for r in rels {
                                        let mut row: SparseRow<Scalar> = r
                                            .terms
                                            .iter()
                                            .map(|(c, t)| {
                                                (
                                                    index[&graft(&ctx, HOLE, &t.substitute(&m))],
                                                    c.clone(),
                                                )
                                            })
                                            .collect();
                                        row.sort_by_key(|e| e.0);
                                        if !row.is_empty() {
                                            rows.push(row);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ConsequenceSpace {
        degree: n,
        monomials: monos,
        rows,
    })
}

pub fn consequence_space(rels: &[FormalIdentity], n: usize) -> Result<ConsequenceSpace> {
    consequence_space_capped(rels, n, DEFAULT_DEGREE_CAP)
}

/// A value of δ or δ left as a symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaArg {
    Value(Rational),
    Symbolic,
}

impl DeltaArg {
    pub fn scalar(&self) -> Scalar {
        match self {
            DeltaArg::Value(r) => Scalar::from_rational(r.clone()),
            DeltaArg::Symbolic => Scalar::delta(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentReport {
    pub degree: usize,
    pub monomials: usize,
    pub rank: usize,
    pub dim: usize,
    /// Symbolic mode: irreducible factors of the pivots divided by.
    pub exceptional_factors: Vec<DeltaPoly>,
}

/// Dimension of the degree-`n` component of the free algebra on the given relations.
pub fn quotient_dim(rels: &[FormalIdentity], n: usize, cap: usize) -> Result<ComponentReport> {
    let space = consequence_space_capped(rels, n, cap)?;
    let symbolic = rels.iter().any(FormalIdentity::is_symbolic);
    let (rank, exceptional) = if symbolic {
        let mut ech = SparseEchelon::<Scalar>::new();
        for r in space.rows {
            ech.insert(r);
        }
        let mut fs: Vec<DeltaPoly> = Vec::new();
        for p in ech.pivot_denominators() {
            for (f, _) in p.factor() {
                if !fs.contains(&f) {
                    fs.push(f);
                }
            }
        }
        fs.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs().cmp(b.coeffs()))
        });
        (ech.rank(), fs)
    } else {
        let mut ech = SparseEchelon::<Rational>::new();
        for r in space.rows {
            ech.insert(
                r.into_iter()
                    .map(|(c, v)| (c, v.as_rational().expect("constant")))
                    .collect(),
            );
        }
        (ech.rank(), Vec::new())
    };
    let total = space.monomials.len();
    Ok(ComponentReport {
        degree: n,
        monomials: total,
        rank,
        dim: total - rank,
        exceptional_factors: exceptional,
    })
}

/// Degree-`n` component of the free δ-Novikov algebra.
pub fn component_dim(d: &DeltaArg, n: usize) -> Result<ComponentReport> {
    quotient_dim(
        &delta_novikov(&d.scalar()).identities,
        n,
        DEFAULT_DEGREE_CAP,
    )
}

/// `(240 − 15β + α)/60`, the first possibly nonzero correction in `H(H!(x)) − x`.
pub fn koszul_coefficient(beta: usize, alpha: usize) -> Rational {
    Rational::new(240 - 15 * beta as i64 + alpha as i64, 60)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KoszulReport {
    pub delta: Rational,
    pub beta: usize,
    pub alpha: usize,
    pub coefficient: Rational,
    /// Nonzero coefficient means the operad is not Koszul at this δ.
    pub nonzero: bool,
}

pub fn koszul_obstruction(d: &Rational) -> Result<KoszulReport> {
    if d.is_one() {
        return Err(Error::DeltaExcluded(d.to_string()));
    }
    let arg = DeltaArg::Value(d.clone());
    let beta = component_dim(&arg, 4)?.dim;
    let alpha = component_dim(&arg, 5)?.dim;
    let coefficient = koszul_coefficient(beta, alpha);
    Ok(KoszulReport {
        delta: d.clone(),
        beta,
        alpha,
        nonzero: !coefficient.is_zero(),
        coefficient,
    })
}

/// Coefficients `c_1..c_n` of `H(x) = Σ (−1)^k d_k x^k / k!` from the dims `d_1..d_n`.
pub fn hilbert_coefficients(dims: &[usize]) -> Vec<Rational> {
    let mut fact = 1i64;
    dims.iter()
        .enumerate()
        .map(|(i, &d)| {
            let k = i as i64 + 1;
            fact *= k;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(sign * d as i64, fact)
        })
        .collect()
}

/// Coefficients of `f(g(x))` through `x^order`, for series without constant term (index 0 is `x^1`).
pub fn compose_series(f: &[Rational], g: &[Rational], order: usize) -> Vec<Rational> {
    let mul = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        // index i stands for x^(i+1)
        let mut out = vec![Rational::zero(); order];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j + 1 < order {
                    out[i + j + 1] += &(x * y);
                }
            }
        }
        out
    };
    let mut g_pow: Vec<Rational> = (0..order)
        .map(|i| g.get(i).cloned().unwrap_or_default())
        .collect();
    let mut out = vec![Rational::zero(); order];
    for c in f.iter().take(order) {
        for (o, p) in out.iter_mut().zip(&g_pow) {
            *o += &(c * p);
        }
        g_pow = mul(&g_pow, g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monomials(1).unwrap().len(), 1);
        assert_eq!(monomials(3).unwrap().len(), 12);
        assert_eq!(monomial_count(5), 1680);
        assert!(matches!(
            monomials(6),
            Err(Error::DegreeTooLarge { degree: 6, cap: 5 })
        ));
    }

    #[test]
    fn canonical_order() {
        let m = monomials(3).unwrap();
        assert_eq!(m[0].to_string(), "(x·y)·z");
        assert_eq!(m[1].to_string(), "(x·z)·y");
        assert_eq!(m[6].to_string(), "x·(y·z)");
    }

    #[test]
    fn free_and_single_relation() {
        let free = quotient_dim(&[], 4, 5).unwrap();
        assert_eq!(free.dim, 120);
        let rc = crate::identity::catalog("right-comm", &Scalar::one()).unwrap();
        assert_eq!(quotient_dim(&rc.identities, 3, 5).unwrap().rank, 3);
    }

    #[test]
    fn low_degrees() {
        let two = DeltaArg::Value(Rational::from_int(2));
        let dims: Vec<usize> = (1..=3)
            .map(|n| component_dim(&two, n).unwrap().dim)
            .collect();
        assert_eq!(dims, vec![1, 2, 6]);
        assert_eq!(
            component_dim(&DeltaArg::Value(Rational::zero()), 3)
                .unwrap()
                .dim,
            6
        );
    }

    #[test]
    fn series_composition_matches_formula() {
        for (b, a) in [(14usize, 21usize), (14, 30), (16, 0), (3, 7)] {
            let h = hilbert_coefficients(&[1, 2, 6, b, a]);
            let c = compose_series(&h, &h, 5);
            assert_eq!(c[0], Rational::one());
            assert!(c[1..4].iter().all(Rational::is_zero));
            assert_eq!(c[4], koszul_coefficient(b, a));
        }
        assert!(koszul_coefficient(16, 0).is_zero());
    }
}
