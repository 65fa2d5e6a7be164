//! Degree-3 normal forms and the dual relations obtained from Lie-admissibility of a tensor product.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::Op;
use crate::error::{Error, Result};
use crate::identity::{catalog, delta_novikov, FormalIdentity, Tree};
use crate::linalg::{rref, SparseEchelon, SparseRow};
use crate::scalar::Scalar;

use super::{consequence_space, monomials};

fn leaf(i: u8) -> Tree {
    Tree::Leaf(i)
}

fn p(l: Tree, r: Tree) -> Tree {
    Tree::node(Op::First, l, r)
}

/// `(a∘b)∘c, (b∘a)∘c, (c∘a)∘b, a∘(b∘c), a∘(c∘b), b∘(c∘a)` with `a, b, c = 0, 1, 2`.
pub fn left_base() -> [Tree; 6] {
    let (a, b, c) = (leaf(0), leaf(1), leaf(2));
    [
        p(p(a.clone(), b.clone()), c.clone()),
        p(p(b.clone(), a.clone()), c.clone()),
        p(p(c.clone(), a.clone()), b.clone()),
        p(a.clone(), p(b.clone(), c.clone())),
        p(a, p(c.clone(), b.clone())),
        p(b, p(c, leaf(0))),
    ]
}

/// `lhs = Σ coeff · base element`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: Tree,
    pub rhs: Vec<(Scalar, Tree)>,
}

impl std::fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let e = FormalIdentity {
            name: String::new(),
            arity: 3,
            terms: self.rhs.clone(),
        };
        write!(f, "{} = {}", self.lhs, e)
    }
}

/// Rules for the six non-base monomials, derived from the δ-Novikov relations.
pub fn derived_rules(d: &Scalar) -> Result<Vec<RewriteRule>> {
    let base = left_base();
    let monos = monomials(3)?;
    let others: Vec<Tree> = monos
        .iter()
        .filter(|m| !base.contains(m))
        .cloned()
        .collect();
    // non-base columns first, so the reduced rows read off `other = Σ base`
    let order: Vec<Tree> = others.iter().chain(base.iter()).cloned().collect();
    let pos: BTreeMap<&Tree, usize> = order.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let space = consequence_space(&delta_novikov(d).identities, 3)?;
    let dense: Vec<Vec<Scalar>> = space
        .rows
        .iter()
        .map(|r| {
            let mut v = vec![Scalar::zero(); 12];
            for (c, x) in r {
                v[pos[&space.monomials[*c as usize]]] = x.clone();
            }
            v
        })
        .collect();
    let (rows, pivots) = rref(dense);
    if pivots != (0..6).collect::<Vec<_>>() {
        return Err(Error::Invalid(format!(
            "the six base monomials do not span degree 3 at delta = {d}"
        )));
    }
    Ok(rows
        .into_iter()
        .zip(others)
        .map(|(row, lhs)| RewriteRule {
            lhs,
            rhs: (0..6)
                .filter(|&k| !row[6 + k].is_zero())
                .map(|k| (-row[6 + k].clone(), base[k].clone()))
                .collect(),
        })
        .collect())
}

/// Normal form of a degree-3 combination over [`left_base`].
pub fn rewrite_degree3(combo: &[(Scalar, Tree)], d: &Scalar) -> Result<Vec<(Scalar, Tree)>> {
    let rules = derived_rules(d)?;
    let base = left_base();
    let mut acc = vec![Scalar::zero(); 6];
    for (c, t) in combo {
        if let Some(k) = base.iter().position(|b| b == t) {
            acc[k] += c;
        } else if let Some(rule) = rules.iter().find(|r| &r.lhs == t) {
            for (x, b) in &rule.rhs {
                let k = base.iter().position(|bb| bb == b).expect("base element");
                acc[k] += &(c * x);
            }
        } else {
            return Err(Error::Invalid(format!(
                "`{t}` is not a degree-3 monomial in a, b, c"
            )));
        }
    }
    Ok(acc
        .into_iter()
        .zip(base)
        .filter(|(c, _)| !c.is_zero())
        .collect())
}

/// The six rules in the form they are usually printed, including the sixth one with `(c∘b)∘c` on the right.
pub fn printed_rules(d: &Scalar) -> Vec<RewriteRule> {
    let (a, b, c) = (leaf(0), leaf(1), leaf(2));
    let one = Scalar::one();
    let neg = -d.clone();
    vec![
        RewriteRule {
            lhs: p(p(a.clone(), c.clone()), b.clone()),
            rhs: vec![(one.clone(), p(p(a.clone(), b.clone()), c.clone()))],
        },
        RewriteRule {
            lhs: p(p(b.clone(), c.clone()), a.clone()),
            rhs: vec![(one.clone(), p(p(b.clone(), a.clone()), c.clone()))],
        },
        RewriteRule {
            lhs: p(p(c.clone(), b.clone()), a.clone()),
            rhs: vec![(one.clone(), p(p(c.clone(), a.clone()), b.clone()))],
        },
        RewriteRule {
            lhs: p(b.clone(), p(a.clone(), c.clone())),
            rhs: vec![
                (d.clone(), p(p(b.clone(), a.clone()), c.clone())),
                (neg.clone(), p(p(a.clone(), b.clone()), c.clone())),
                (one.clone(), p(a.clone(), p(b.clone(), c.clone()))),
            ],
        },
        RewriteRule {
            lhs: p(c.clone(), p(a.clone(), b.clone())),
            rhs: vec![
                (d.clone(), p(p(c.clone(), a.clone()), b.clone())),
                (neg.clone(), p(p(a.clone(), c.clone()), b.clone())),
                (one.clone(), p(a.clone(), p(c.clone(), b.clone()))),
            ],
        },
        RewriteRule {
            lhs: p(c.clone(), p(b.clone(), a.clone())),
            rhs: vec![
                (d.clone(), p(p(c.clone(), b.clone()), c.clone())),
                (neg, p(p(b.clone(), c.clone()), a.clone())),
                (one, p(b, p(c, a))),
            ],
        },
    ]
}

/// Whether `lhs − rhs` lies in the consequence space; false when the rule is not multilinear.
pub fn rule_holds(rule: &RewriteRule, d: &Scalar) -> Result<bool> {
    let mut terms = vec![(Scalar::one(), rule.lhs.clone())];
    terms.extend(rule.rhs.iter().map(|(c, t)| (-c.clone(), t.clone())));
    let Ok(id) = FormalIdentity::new("rule", crate::identity::Expr { terms }) else {
        return Ok(false);
    };
    let space = consequence_space(&delta_novikov(d).identities, 3)?;
    let index = space.index();
    let mut ech = SparseEchelon::<Scalar>::new();
    for r in space.rows.iter().cloned() {
        ech.insert(r);
    }
    Ok(ech.contains(to_row(&index, &id)))
}

fn to_row(index: &std::collections::HashMap<&Tree, u32>, id: &FormalIdentity) -> SparseRow<Scalar> {
    let mut row: SparseRow<Scalar> = id
        .terms
        .iter()
        .map(|(c, t)| (index[t], c.clone()))
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

/// Result of the Lie-admissibility expansion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualReport {
    /// One relation per base element: its coefficient in the cyclic sum.
    #[serde(serialize_with = "ser_relations")]
    pub relations: Vec<(String, FormalIdentity)>,
    pub rank: usize,
    /// Rank of all relabellings of the right δ-Novikov relations.
    pub right_novikov_rank: usize,
    /// The two spans coincide.
    pub equal: bool,
}

fn ser_relations<S: serde::Serializer>(
    rels: &[(String, FormalIdentity)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rels.len()))?;
    for (b, r) in rels {
        seq.serialize_element(&serde_json::json!({ "base": b, "relation": r.to_string() }))?;
    }
    seq.end()
}

type TensorTerm = (Scalar, Tree, Tree);

fn bracket(u: &[TensorTerm], v: &[TensorTerm]) -> Vec<TensorTerm> {
    let mut out = Vec::new();
    for (c1, l1, r1) in u {
        for (c2, l2, r2) in v {
            let c = c1 * c2;
            out.push((
                c.clone(),
                p(l1.clone(), l2.clone()),
                p(r1.clone(), r2.clone()),
            ));
            out.push((-c, p(l2.clone(), l1.clone()), p(r2.clone(), r1.clone())));
        }
    }
    out
}

/// Expands `Σ_cyc [[a⊗x, b⊗y], c⊗z]`, rewrites the left factors over [`left_base`], and
/// compares the collected right-hand relations with the right δ-Novikov relations.
pub fn dual_relations_via_lie_admissibility(d: &Scalar) -> Result<DualReport> {
    let gen = |i: u8| vec![(Scalar::one(), leaf(i), leaf(i))];
    let (a, b, c) = (gen(0), gen(1), gen(2));
    let mut sum = bracket(&bracket(&a, &b), &c);
    sum.extend(bracket(&bracket(&b, &c), &a));
    sum.extend(bracket(&bracket(&c, &a), &b));

    let base = left_base();
    let mut coeff: Vec<Vec<(Scalar, Tree)>> = vec![Vec::new(); 6];
    for (k, left, right) in sum {
        for (x, bt) in rewrite_degree3(&[(k, left)], d)? {
            let pos = base.iter().position(|b| *b == bt).expect("base element");
            coeff[pos].push((x, right.clone()));
        }
    }
    let relations = base
        .iter()
        .zip(coeff)
        .map(|(bt, terms)| {
            let name = bt
                .to_string()
                .replace('·', "∘")
                .replace('x', "a")
                .replace('y', "b")
                .replace('z', "c");
            let id = FormalIdentity::new(name.clone(), crate::identity::Expr { terms })?;
            Ok((name, id))
        })
        .collect::<Result<Vec<_>>>()?;

    let monos = monomials(3)?;
    let index: std::collections::HashMap<&Tree, u32> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i as u32))
        .collect();
    let mut ours = SparseEchelon::<Scalar>::new();
    for (_, r) in &relations {
        ours.insert(to_row(&index, r));
    }
    let mut theirs = SparseEchelon::<Scalar>::new();
    for r in &catalog("right-delta-novikov", d)?.identities {
        for perm in (0..3u8).permutations(3) {
            let id = FormalIdentity::new(
                "orbit",
                crate::identity::Expr {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, t)| (c.clone(), t.relabel(&|v| perm[v as usize])))
                        .collect(),
                },
            )?;
            theirs.insert(to_row(&index, &id));
        }
    }
    let rank = ours.rank();
    let right_novikov_rank = theirs.rank();
    let equal = rank == right_novikov_rank
        && relations
            .iter()
            .all(|(_, r)| theirs.contains(to_row(&index, r)));
    Ok(DualReport {
        relations,
        rank,
        right_novikov_rank,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn two() -> Scalar {
        Scalar::from_int(2)
    }

    #[test]
    fn first_rule_and_base_fixed() {
        let [ab_c, _, _, a_bc, ..] = left_base();
        let ac_b = p(p(leaf(0), leaf(2)), leaf(1));
        let r = rewrite_degree3(&[(Scalar::one(), ac_b)], &Scalar::delta()).unwrap();
        assert_eq!(r, vec![(Scalar::one(), ab_c)]);
        let r = rewrite_degree3(&[(Scalar::one(), a_bc.clone())], &two()).unwrap();
        assert_eq!(r, vec![(Scalar::one(), a_bc)]);
    }

    #[test]
    fn sixth_rule_derived_form() {
        let d = Scalar::delta();
        let c_ba = p(leaf(2), p(leaf(1), leaf(0)));
        let r = rewrite_degree3(&[(Scalar::one(), c_ba)], &d).unwrap();
        let base = left_base();
        assert_eq!(
            r,
            vec![
                (-d.clone(), base[1].clone()),
                (d.clone(), base[2].clone()),
                (Scalar::one(), base[5].clone()),
            ]
        );
    }

    #[test]
    fn printed_rules_against_relations() {
        let d = Scalar::from_rational(Rational::new(3, 7));
        let holds: Vec<bool> = printed_rules(&d)
            .iter()
            .map(|r| rule_holds(r, &d).unwrap())
            .collect();
        assert_eq!(holds, vec![true, true, true, true, true, false]);
        for r in derived_rules(&d).unwrap() {
            assert!(rule_holds(&r, &d).unwrap());
        }
    }

    #[test]
    fn dual_is_right_novikov() {
        let rep = dual_relations_via_lie_admissibility(&Scalar::delta()).unwrap();
        assert_eq!(rep.relations.len(), 6);
        assert_eq!(rep.rank, 6);
        assert_eq!(rep.right_novikov_rank, 6);
        assert!(rep.equal);
        let d = Scalar::delta();
        let (x, y, z) = (leaf(0), leaf(1), leaf(2));
        let expected = FormalIdentity::new(
            "",
            crate::identity::Expr {
                terms: vec![
                    (Scalar::one(), p(p(x.clone(), y.clone()), z.clone())),
                    (-d.clone(), p(y.clone(), p(x.clone(), z.clone()))),
                    (-Scalar::one(), p(p(x.clone(), z.clone()), y.clone())),
                    (d, p(z, p(x, y))),
                ],
            },
        )
        .unwrap();
        assert_eq!(rep.relations[0].1.terms, expected.terms);
        let one = dual_relations_via_lie_admissibility(&Scalar::one()).unwrap();
        assert!(one.equal);
    }
}
