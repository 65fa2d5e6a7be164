use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use deltanov::algebra::{
    ideal_closure, is_ideal, series, subspace_product, Algebra, SeriesKind, Structure, Subspace,
    Table, Vector,
};
use deltanov::construct::derivation_system;
use deltanov::corpus;
use deltanov::identity::{catalog, check, evaluate_vectors, Family};
use deltanov::linalg::{rank_and_nullspace, rank_at};
use deltanov::operad::{component_dim, DeltaArg};
use deltanov::scalar::{Rational, Scalar};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rational().prop_map(Scalar::from_rational), n)
}

fn table(n: usize) -> impl Strategy<Value = Table> {
    prop::collection::vec(-2i64..=2, n * n * n).prop_map(move |cs| {
        let mut t = Table::zero(n);
        for (idx, c) in cs.into_iter().enumerate() {
            t.set(idx / (n * n), (idx / n) % n, idx % n, Scalar::from_int(c));
        }
        t
    })
}

/// Families checked on a fixture: its declared checks and δ-Novikov at δ = 3.
fn families(name: &str) -> Vec<Family> {
    let fx = corpus::fixture(name).unwrap();
    let b = fx.default_bindings();
    let env_delta = fx.declared_delta(&b).unwrap();
    let mut out = Vec::new();
    for c in &fx.checks {
        let d = if c.delta == "delta" {
            env_delta.clone().unwrap_or_else(Scalar::delta)
        } else {
            deltanov::scalar::parse_scalar(&c.delta).unwrap_or_else(|_| Scalar::delta())
        };
        out.push(catalog(&c.family, &d).unwrap());
    }
    out.push(catalog("delta-novikov", &Scalar::from_int(3)).unwrap());
    out
}

#[test]
fn multilinearity_random_vectors_agree_with_basis_verdict() {
    let mut runner = TestRunner::deterministic();
    for name in corpus::names() {
        let loaded = corpus::load(name, &Default::default()).unwrap();
        let n = loaded.dim();
        for fam in families(name) {
            for id in &fam.identities {
                let Ok(basis) = check(id, &loaded) else {
                    continue;
                };
                let strat = prop::collection::vec(vector(n), id.arity);
                let mut random_zero = true;
                for _ in 0..50 {
                    let vs = strat.new_tree(&mut runner).unwrap().current();
                    let v = evaluate_vectors(id, &loaded, &vs).unwrap();
                    random_zero &= v.iter().all(Scalar::is_zero);
                }
                assert_eq!(
                    random_zero,
                    basis.satisfied(),
                    "{name}: {} basis verdict {:?}",
                    id.name,
                    basis.verdict
                );
            }
        }
    }
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n, d))
}

#[test]
fn specialization_of_operad_ranks() {
    let generic = component_dim(&DeltaArg::Symbolic, 3).unwrap();
    let mut runner = TestRunner::deterministic();
    for _ in 0..12 {
        let d = nonzero_rational().new_tree(&mut runner).unwrap().current();
        let at = component_dim(&DeltaArg::Value(d.clone()), 3).unwrap();
        let exceptional = generic
            .exceptional_factors
            .iter()
            .any(|f| f.eval(&d).is_zero());
        assert!(at.rank <= generic.rank, "delta {d}");
        if !exceptional {
            assert_eq!(at.rank, generic.rank, "delta {d}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivation_rank_specializes(t in table(2), d in small_rational()) {
        let sys = derivation_system(&t, &Scalar::delta());
        let rep = rank_and_nullspace(&sys);
        let exceptional = rep.pivot_denominators.iter().any(|p| p.eval(&d).is_zero());
        let at = rank_at(&sys, &d).unwrap();
        let direct = rank_and_nullspace(&derivation_system(&t, &Scalar::from_rational(d.clone()))).rank;
        prop_assert_eq!(at, direct);
        prop_assert!(at <= rep.rank);
        if !exceptional {
            prop_assert_eq!(at, rep.rank);
        }
    }

    #[test]
    fn series_are_monotone(t in table(3)) {
        for kind in SeriesKind::ALL {
            let s = series(&t, kind);
            prop_assert!(s.dims.windows(2).all(|w| w[0] >= w[1]), "{:?}", s);
            prop_assert_eq!(s.terminated, *s.dims.last().unwrap() == 0);
            if let Some(i) = s.index {
                prop_assert_eq!(s.dims[i - kind.first_index()], 0);
            }
        }
    }

    #[test]
    fn opposite_is_an_involution(t in table(3)) {
        let a = Algebra::new(t);
        prop_assert_eq!(a.opposite().opposite(), a.clone());
        if a.is_commutative() {
            prop_assert_eq!(a.opposite(), a);
        }
    }

    #[test]
    fn commutator_is_anticommutative(t in table(3), x in vector(3), y in vector(3)) {
        let c = Algebra::new(t).commutator_algebra();
        let xy = c.multiply(&x, &y).unwrap();
        let yx = c.multiply(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| (a + b).is_zero()));
    }

    #[test]
    fn ideal_closure_is_closed(t in table(3), v in vector(3)) {
        let gens = Subspace::span(3, vec![v.clone()]).unwrap();
        let i = ideal_closure(&t, &gens);
        prop_assert!(is_ideal(&t, &i));
        prop_assert!(i.contains(&v));
    }

    #[test]
    fn multiply_is_bilinear(t in table(2), x in vector(2), y in vector(2), z in vector(2), c in small_rational()) {
        let a = Algebra::new(t);
        let c = Scalar::from_rational(c);
        let xz: Vector = x.iter().zip(&z).map(|(p, q)| &(&c * p) + q).collect();
        let lhs = a.multiply(&xz, &y).unwrap();
        let l1 = a.multiply(&x, &y).unwrap();
        let l2 = a.multiply(&z, &y).unwrap();
        let rhs: Vector = l1.iter().zip(&l2).map(|(p, q)| &(&c * p) + q).collect();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Ideals generated by basis vectors in a δ-Novikov fixture: products and commutators of ideals are ideals.
#[test]
fn products_of_ideals_are_ideals() {
    for name in deltanov::verify::novikov_fixtures() {
        let fx = corpus::fixture(name).unwrap();
        let b = fx.default_bindings();
        if let Some(d) = fx.declared_delta(&b).unwrap().and_then(|d| d.as_rational()) {
            if d == Rational::from_int(-1) {
                continue;
            }
        }
        let a = fx.instantiate(&b).unwrap().first_algebra();
        let t = &a.table;
        let n = a.dim();
        let ideals: Vec<Subspace> = (0..n)
            .map(|i| ideal_closure(t, &Subspace::coordinate(n, &[i])))
            .collect();
        let c = a.commutator_algebra();
        for i in &ideals {
            for j in &ideals {
                assert!(is_ideal(t, &subspace_product(t, i, j).unwrap()), "{name}");
                assert!(
                    is_ideal(t, &subspace_product(&c.table, i, j).unwrap()),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn unital_novikov_fixtures_are_commutative_associative() {
    for name in corpus::names() {
        let loaded = corpus::load(name, &Default::default()).unwrap();
        let a = loaded.first_algebra();
        if a.table.unit().is_none() {
            continue;
        }
        let fam = catalog("delta-novikov", &Scalar::from_int(3)).unwrap();
        let holds = fam
            .identities
            .iter()
            .all(|id| check(id, &a).unwrap().satisfied());
        if holds {
            assert!(a.is_commutative() && a.is_associative(), "{name}");
        }
        assert!(loaded.product(deltanov::algebra::Op::First).is_some());
    }
}
