//! Built-in fixtures, compiled into the crate.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::io::{parse_fixture, Fixture, Loaded};
use crate::scalar::Rational;

const FILES: &[(&str, &str)] = &[
    ("N01", include_str!("../fixtures/N01.json")),
    ("N02", include_str!("../fixtures/N02.json")),
    ("N03", include_str!("../fixtures/N03.json")),
    ("N04", include_str!("../fixtures/N04.json")),
    ("N05", include_str!("../fixtures/N05.json")),
    ("N06", include_str!("../fixtures/N06.json")),
    ("N07", include_str!("../fixtures/N07.json")),
    ("N08", include_str!("../fixtures/N08.json")),
    ("N09", include_str!("../fixtures/N09.json")),
    ("N10", include_str!("../fixtures/N10.json")),
    ("N11", include_str!("../fixtures/N11.json")),
    ("N12", include_str!("../fixtures/N12.json")),
    ("P01", include_str!("../fixtures/P01.json")),
    ("P02", include_str!("../fixtures/P02.json")),
    ("P03", include_str!("../fixtures/P03.json")),
    ("P04", include_str!("../fixtures/P04.json")),
    ("P05", include_str!("../fixtures/P05.json")),
    ("P06", include_str!("../fixtures/P06.json")),
    ("P07", include_str!("../fixtures/P07.json")),
    ("P08", include_str!("../fixtures/P08.json")),
    ("P09", include_str!("../fixtures/P09.json")),
    ("P10", include_str!("../fixtures/P10.json")),
    ("P11", include_str!("../fixtures/P11.json")),
    ("P12", include_str!("../fixtures/P12.json")),
    ("P13", include_str!("../fixtures/P13.json")),
    ("P14", include_str!("../fixtures/P14.json")),
    ("A1", include_str!("../fixtures/A1.json")),
    ("A2", include_str!("../fixtures/A2.json")),
    ("E15", include_str!("../fixtures/E15.json")),
    ("LIE2", include_str!("../fixtures/LIE2.json")),
    ("NP2A", include_str!("../fixtures/NP2A.json")),
    ("NP2B", include_str!("../fixtures/NP2B.json")),
    ("NP3", include_str!("../fixtures/NP3.json")),
    ("NPUNIT", include_str!("../fixtures/NPUNIT.json")),
    ("THM112", include_str!("../fixtures/THM112.json")),
    ("TRUNC3", include_str!("../fixtures/TRUNC3.json")),
    ("TRUNC4", include_str!("../fixtures/TRUNC4.json")),
    ("W1", include_str!("../fixtures/W1.json")),
    ("W2", include_str!("../fixtures/W2.json")),
];

/// Names of all built-in fixtures: the N and P tables first, then the rest alphabetically.
pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// The two-dimensional δ-Novikov table.
pub fn novikov_table() -> Vec<&'static str> {
    table_rows('N')
}

/// The two-dimensional δ-pre-Lie table.
pub fn pre_lie_table() -> Vec<&'static str> {
    table_rows('P')
}

fn table_rows(letter: char) -> Vec<&'static str> {
    names()
        .into_iter()
        .filter(|n| n.starts_with(letter) && n[1..].chars().all(|c| c.is_ascii_digit()))
        .collect()
}

pub fn source(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn fixture(name: &str) -> Result<Fixture> {
    parse_fixture(source(name)?)
}

/// Instantiates a fixture; parameters missing from `bindings` take the fixture defaults.
pub fn load(name: &str, bindings: &BTreeMap<String, Rational>) -> Result<Loaded> {
    let fx = fixture(name)?;
    let mut b = fx.default_bindings();
    b.extend(bindings.iter().map(|(k, v)| (k.clone(), v.clone())));
    fx.instantiate(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses_and_self_checks() {
        for n in names() {
            let fx = fixture(n).unwrap();
            assert_eq!(fx.name, n);
            let reports = fx.self_check(&fx.default_bindings()).unwrap();
            for r in reports {
                assert!(r.satisfied(), "{n}: {:?}", r.failure());
            }
        }
        assert_eq!(novikov_table().len(), 12);
        assert_eq!(pre_lie_table().len(), 14);
    }
}
