//! Multilinear expressions in the free bi-magma.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::Op;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const VAR_NAMES: [&str; 8] = ["x", "y", "z", "t", "u", "v", "w", "s"];

/// A full binary tree with variables at the leaves and a product at each node.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf(u8),
    Node(Op, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(op: Op, l: Tree, r: Tree) -> Tree {
        Tree::Node(op, Box::new(l), Box::new(r))
    }

    /// Leaf labels, left to right.
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(v) => out.push(*v),
            Tree::Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn uses(&self, op: Op) -> bool {
        match self {
            Tree::Leaf(_) => false,
            Tree::Node(o, l, r) => *o == op || l.uses(op) || r.uses(op),
        }
    }

    pub fn map_ops(&self, f: &impl Fn(Op) -> Op) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(*v),
            Tree::Node(o, l, r) => Tree::node(f(*o), l.map_ops(f), r.map_ops(f)),
        }
    }

    pub fn relabel(&self, f: &impl Fn(u8) -> u8) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(f(*v)),
            Tree::Node(o, l, r) => Tree::node(*o, l.relabel(f), r.relabel(f)),
        }
    }

    /// Replace each leaf `i` by `subs[i]`.
    pub fn substitute(&self, subs: &[Tree]) -> Tree {
        match self {
            Tree::Leaf(v) => subs[*v as usize].clone(),
            Tree::Node(o, l, r) => Tree::node(*o, l.substitute(subs), r.substitute(subs)),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &Tree, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
            match t {
                Tree::Leaf(v) => match VAR_NAMES.get(*v as usize) {
                    Some(n) => write!(f, "{n}"),
                    None => write!(f, "x{v}"),
                },
                Tree::Node(op, l, r) => {
                    if !top {
                        write!(f, "(")?;
                    }
                    go(l, f, false)?;
                    write!(f, "{}", if *op == Op::First { "·" } else { "∘" })?;
                    go(r, f, false)?;
                    if !top {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, true)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Linear combination of trees, used to build identities.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Expr {
    pub terms: Vec<(Scalar, Tree)>,
}

pub fn var(i: u8) -> Expr {
    Expr {
        terms: vec![(Scalar::one(), Tree::Leaf(i))],
    }
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::default()
    }

    pub fn op(&self, op: Op, rhs: &Expr) -> Expr {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, l) in &self.terms {
            for (b, r) in &rhs.terms {
                terms.push((a * b, Tree::node(op, l.clone(), r.clone())));
            }
        }
        Expr { terms }
    }

    /// First product.
    pub fn dot(&self, rhs: &Expr) -> Expr {
        self.op(Op::First, rhs)
    }

    /// Second product.
    pub fn circ(&self, rhs: &Expr) -> Expr {
        self.op(Op::Second, rhs)
    }

    /// Commutator `a op b - b op a`.
    pub fn comm(&self, op: Op, rhs: &Expr) -> Expr {
        &self.op(op, rhs) - &rhs.op(op, self)
    }

    pub fn scale(&self, c: &Scalar) -> Expr {
        Expr {
            terms: self.terms.iter().map(|(a, t)| (a * c, t.clone())).collect(),
        }
    }

    pub fn map_ops(&self, f: impl Fn(Op) -> Op) -> Expr {
        Expr {
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (a.clone(), t.map_ops(&f)))
                .collect(),
        }
    }
}

impl Add<&Expr> for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Expr { terms }
    }
}

impl Sub<&Expr> for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        self + &(-rhs)
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        &self + &rhs
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        &self - &rhs
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -&self
    }
}

/// A multilinear polynomial that is asserted to vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalIdentity {
    pub name: String,
    pub arity: usize,
    /// Like terms merged, zero terms dropped, sorted by tree.
    pub terms: Vec<(Scalar, Tree)>,
}

impl FormalIdentity {
    /// Checks multilinearity: every tree uses each of the variables `0..arity` exactly once.
    pub fn new(name: impl Into<String>, expr: Expr) -> Result<FormalIdentity> {
        let name = name.into();
        let arity = expr
            .terms
            .iter()
            .flat_map(|(_, t)| t.leaves())
            .map(|v| v as usize + 1)
            .max()
            .unwrap_or(0);
        let mut merged: BTreeMap<Tree, Scalar> = BTreeMap::new();
        for (c, t) in expr.terms {
            let mut ls = t.leaves();
            ls.sort_unstable();
            if ls.len() != arity || ls.iter().enumerate().any(|(i, &v)| v as usize != i) {
                return Err(Error::Invalid(format!(
                    "identity `{name}` is not multilinear in term {t}"
                )));
            }
            *merged.entry(t).or_default() += &c;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (c, t))
            .collect();
        Ok(FormalIdentity { name, arity, terms })
    }

    pub fn uses(&self, op: Op) -> bool {
        self.terms.iter().any(|(_, t)| t.uses(op))
    }

    pub fn products_used(&self) -> Vec<Op> {
        [Op::First, Op::Second]
            .into_iter()
            .filter(|&o| self.uses(o))
            .collect()
    }

    /// True when some coefficient depends on δ.
    pub fn is_symbolic(&self) -> bool {
        self.terms.iter().any(|(c, _)| !c.is_constant())
    }

    pub fn map_ops(&self, name: impl Into<String>, f: impl Fn(Op) -> Op) -> FormalIdentity {
        FormalIdentity {
            name: name.into(),
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(c, t)| (c.clone(), t.map_ops(&f)))
                .collect(),
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> FormalIdentity {
        self.name = name.into();
        self
    }

    pub fn to_expr(&self) -> Expr {
        Expr {
            terms: self.terms.clone(),
        }
    }
}

impl fmt::Display for FormalIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, t)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, cs),
            };
            if i > 0 {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let tree = if matches!(t, Tree::Leaf(_)) {
                t.to_string()
            } else {
                format!("({t})")
            };
            if mag == "1" {
                write!(f, "{tree}")?;
            } else if mag.contains(' ') {
                write!(f, "({mag}){tree}")?;
            } else {
                write!(f, "{mag}{tree}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn like_terms_merge() {
        let (x, y) = (var(0), var(1));
        let e = &x.dot(&y) + &x.dot(&y).scale(&Scalar::from_int(-1));
        let id = FormalIdentity::new("zero", e).unwrap();
        assert!(id.terms.is_empty());
        assert_eq!(id.arity, 2);
    }

    #[test]
    fn rejects_repeated_variables() {
        let x = var(0);
        assert!(FormalIdentity::new("sq", x.dot(&x)).is_err());
    }

    #[test]
    fn commutator_expands() {
        let (x, y) = (var(0), var(1));
        let id = FormalIdentity::new("c", x.comm(Op::First, &y)).unwrap();
        assert_eq!(id.terms.len(), 2);
        assert_eq!(id.to_string(), "(x·y) - (y·x)");
    }
}
