use std::collections::BTreeMap;

use deltanov::algebra::{basis_vector, Algebra, Table, Vector};
use deltanov::corpus;
use deltanov::identity::{admissible_deltas, catalog, Admissible};
use deltanov::scalar::{Rational, Scalar};
use deltanov::Error;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn bindings(pairs: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn table(name: &str, b: &BTreeMap<String, Rational>) -> Table {
    corpus::load(name, b).unwrap().first_algebra().table
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn scale(c: &Rational, x: &[Scalar]) -> Vector {
    let c = Scalar::from_rational(c.clone());
    x.iter().map(|a| &c * a).collect()
}

/// Direct loop over basis triples: (xy)z = (xz)y and δ(xy)z − x(yz) = δ(yx)z − y(xz).
fn novikov_by_hand(t: &Table, d: &Rational) -> bool {
    let n = t.dim();
    let m = |x: &[Scalar], y: &[Scalar]| t.mul(x, y).unwrap();
    let assoc =
        |x: &[Scalar], y: &[Scalar], z: &[Scalar]| sub(&scale(d, &m(&m(x, y), z)), &m(x, &m(y, z)));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
                if m(&m(&x, &y), &z) != m(&m(&x, &z), &y) {
                    return false;
                }
                if assoc(&x, &y, &z) != assoc(&y, &x, &z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Left-symmetry of the δ-associator alone.
fn pre_lie_by_hand(t: &Table, d: &Rational) -> bool {
    let n = t.dim();
    let m = |x: &[Scalar], y: &[Scalar]| t.mul(x, y).unwrap();
    let assoc =
        |x: &[Scalar], y: &[Scalar], z: &[Scalar]| sub(&scale(d, &m(&m(x, y), z)), &m(x, &m(y, z)));
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let (x, y, z) = (basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
                assoc(&x, &y, &z) == assoc(&y, &x, &z)
            })
        })
    })
}

enum Gamma {
    All,
    At(Rational),
}

fn expect(family: &str, name: &str, b: &BTreeMap<String, Rational>, gamma: Gamma) {
    let t = table(name, b);
    let got = admissible_deltas(
        &catalog(family, &Scalar::delta()).unwrap(),
        &Algebra::new(t.clone()),
    )
    .unwrap();
    let probes = [
        r(0, 1),
        r(1, 1),
        r(-1, 1),
        r(1, 2),
        r(2, 1),
        r(3, 1),
        r(-2, 3),
    ];
    let by_hand = |d: &Rational| {
        if family == "delta-novikov" {
            novikov_by_hand(&t, d)
        } else {
            pre_lie_by_hand(&t, d)
        }
    };
    match gamma {
        Gamma::All => {
            assert_eq!(got, Admissible::All, "{name}");
            assert!(probes.iter().all(by_hand), "{name}");
        }
        Gamma::At(g) => {
            assert_eq!(got, Admissible::singleton(&g), "{name}");
            assert!(by_hand(&g), "{name}");
            for d in probes.iter().filter(|d| **d != g) {
                assert!(!by_hand(d), "{name} at {d}");
            }
        }
    }
}

#[test]
fn novikov_rows() {
    let none = BTreeMap::new();
    let fam = "delta-novikov";
    expect(fam, "N01", &none, Gamma::At(r(1, 1)));
    expect(fam, "N02", &none, Gamma::All);
    expect(fam, "N03", &none, Gamma::At(r(0, 1)));
    expect(fam, "N04", &none, Gamma::All);
    expect(fam, "N05", &none, Gamma::At(r(0, 1)));
    expect(fam, "N06", &none, Gamma::At(r(0, 1)));
    expect(fam, "N07", &none, Gamma::All);
    for d in [r(3, 1), r(-1, 2), r(7, 1)] {
        expect(fam, "N08", &bindings(&[("delta", d.clone())]), Gamma::At(d));
    }
    expect(fam, "N09", &none, Gamma::All);
    for a in [r(3, 1), r(-2, 1), r(1, 3)] {
        expect(fam, "N10", &bindings(&[("alpha", a)]), Gamma::At(r(1, 1)));
    }
    expect(fam, "N11", &none, Gamma::All);
    expect(fam, "N12", &none, Gamma::At(r(-1, 1)));
}

#[test]
fn pre_lie_rows() {
    let none = BTreeMap::new();
    let fam = "delta-pre-lie";
    expect(fam, "P01", &none, Gamma::All);
    expect(fam, "P03", &none, Gamma::At(r(1, 2)));
    expect(fam, "P05", &none, Gamma::At(r(1, 2)));
    expect(fam, "P06", &none, Gamma::At(r(0, 1)));
    expect(fam, "P07", &none, Gamma::At(r(0, 1)));
    expect(fam, "P12", &none, Gamma::All);
    for d in [r(3, 1), r(-2, 1), r(2, 3)] {
        for row in ["P02", "P04", "P13", "P14"] {
            expect(
                fam,
                row,
                &bindings(&[("delta", d.clone())]),
                Gamma::At(d.clone()),
            );
        }
        let b = bindings(&[("delta", d.clone()), ("beta", r(5, 1))]);
        expect(fam, "P09", &b, Gamma::At(d));
    }
    for a in [r(3, 1), r(-1, 1), r(1, 2)] {
        expect(fam, "P08", &bindings(&[("alpha", a)]), Gamma::All);
    }
    for beta in [r(5, 1), r(-1, 1), r(2, 3)] {
        expect(fam, "P10", &bindings(&[("beta", beta)]), Gamma::At(r(0, 1)));
    }
    for (a, beta) in [(r(3, 1), r(5, 1)), (r(0, 1), r(2, 1)), (r(1, 1), r(1, 1))] {
        let b = bindings(&[("alpha", a), ("beta", beta)]);
        expect(fam, "P11", &b, Gamma::At(r(0, 1)));
    }
}

#[test]
fn excluded_parameters_are_rejected() {
    let cases: &[(&str, &[(&str, Rational)])] = &[
        ("N08", &[("delta", r(0, 1))]),
        ("N10", &[("alpha", r(1, 1))]),
        ("P02", &[("delta", r(1, 2))]),
        ("P04", &[("delta", r(1, 1))]),
        ("P09", &[("delta", r(3, 1)), ("beta", r(1, 3))]),
        ("P10", &[("beta", r(0, 1))]),
        ("P11", &[("alpha", r(1, 1)), ("beta", r(0, 1))]),
        ("P13", &[("delta", r(-1, 1))]),
    ];
    for (name, b) in cases {
        let err = corpus::load(name, &bindings(b)).unwrap_err();
        assert!(
            matches!(err, Error::ExcludedParameter { .. }),
            "{name}: {err}"
        );
    }
    corpus::load("P11", &bindings(&[("alpha", r(1, 1)), ("beta", r(1, 1))])).unwrap();
}

#[test]
fn n08_products_at_three() {
    let t = table("N08", &bindings(&[("delta", r(3, 1))]));
    let s = |q: Rational| Scalar::from_rational(q);
    assert_eq!(t.basis_product(1, 0), [s(r(0, 1)), s(r(1, 3))]);
    assert_eq!(t.basis_product(0, 0), [s(r(1, 1)), s(r(0, 1))]);
    assert_eq!(t.basis_product(0, 1), [s(r(0, 1)), s(r(0, 1))]);
}

#[test]
fn n12_products_and_commutator() {
    let a = corpus::load("N12", &BTreeMap::new())
        .unwrap()
        .first_algebra();
    let s = Scalar::from_int;
    let sum = vec![s(1), s(1)];
    assert_eq!(
        a.multiply(&sum, &basis_vector(2, 0)).unwrap(),
        [s(1), s(-1)]
    );
    assert_eq!(a.multiply(&sum, &sum).unwrap(), [s(0), s(0)]);
    let c = a.commutator_algebra();
    assert_eq!(
        c.multiply(&basis_vector(2, 0), &basis_vector(2, 1))
            .unwrap(),
        [s(-1), s(1)]
    );
    assert_eq!(
        c.multiply(&basis_vector(2, 1), &basis_vector(2, 0))
            .unwrap(),
        [s(1), s(-1)]
    );
}

#[test]
fn formal_delta_rows_have_poles_at_exclusions() {
    let fx = corpus::fixture("P02").unwrap();
    let formal = fx.instantiate(&BTreeMap::new()).unwrap().first_algebra();
    assert!(matches!(
        formal.specialize(&r(1, 2)),
        Err(Error::PoleAtDelta { .. })
    ));
    let at1 = formal.specialize(&r(1, 1)).unwrap();
    assert!(at1.table.basis_product(0, 1).iter().all(Scalar::is_zero));
}
