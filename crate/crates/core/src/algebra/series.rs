//! Derived, right-power and lower-central series.

use std::fmt;

use serde::Serialize;

use super::{subspace_product, Subspace, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    /// `N^(0) = N`, `N^(k) = N^(k-1) N^(k-1)`.
    Derived,
    /// `N^1 = N`, `N^k = N^(k-1) N`.
    RightPower,
    /// `N^1 = N`, `N^k = Σ_{i+j=k} N^i N^j`.
    LowerCentral,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 3] = [
        SeriesKind::Derived,
        SeriesKind::RightPower,
        SeriesKind::LowerCentral,
    ];

    /// Index of the first term.
    pub fn first_index(&self) -> usize {
        match self {
            SeriesKind::Derived => 0,
            _ => 1,
        }
    }

    pub fn parse(s: &str) -> Option<SeriesKind> {
        match s {
            "derived" => Some(SeriesKind::Derived),
            "right-power" => Some(SeriesKind::RightPower),
            "lower-central" => Some(SeriesKind::LowerCentral),
            _ => None,
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Derived => "derived",
            SeriesKind::RightPower => "right-power",
            SeriesKind::LowerCentral => "lower-central",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Dimensions of the terms, starting at [`SeriesKind::first_index`].
    pub dims: Vec<usize>,
    pub terminated: bool,
    /// Index of the first zero term.
    pub index: Option<usize>,
}

/// The first `count` terms of the series started at `start` (the subalgebra generated
/// by `start` is assumed to be `start` itself).
pub fn series_terms(t: &Table, start: &Subspace, kind: SeriesKind, count: usize) -> Vec<Subspace> {
    let mut terms: Vec<Subspace> = Vec::with_capacity(count);
    if count == 0 {
        return terms;
    }
    terms.push(start.clone());
    while terms.len() < count {
        let last = terms.last().unwrap();
        let stable = terms.len() >= 2 && terms[terms.len() - 2] == *last;
        let next = if last.is_zero() || stable && kind != SeriesKind::LowerCentral {
            last.clone()
        } else {
            series_terms_step(t, start, &terms, kind)
        };
        terms.push(next);
    }
    terms
}

/// Series of the subalgebra `start`, run for `dim + 2` steps or until it stabilizes.
pub fn series_from(t: &Table, start: &Subspace, kind: SeriesKind) -> SeriesReport {
    let cap = start.ambient() + 2;
    let mut terms = vec![start.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() || terms.len() >= cap {
            break;
        }
        let next = series_terms_step(t, start, &terms, kind);
        let repeat = next == *terms.last().unwrap();
        terms.push(next);
        if repeat && kind != SeriesKind::LowerCentral {
            break;
        }
    }
    let dims: Vec<usize> = terms.iter().map(Subspace::dim).collect();
    let zero_at = dims.iter().position(|&d| d == 0);
    SeriesReport {
        kind,
        terminated: zero_at.is_some(),
        index: zero_at.map(|p| p + kind.first_index()),
        dims,
    }
}

fn series_terms_step(
    t: &Table,
    start: &Subspace,
    terms: &[Subspace],
    kind: SeriesKind,
) -> Subspace {
    let last = terms.last().unwrap();
    match kind {
        SeriesKind::Derived => subspace_product(t, last, last).unwrap(),
        SeriesKind::RightPower => subspace_product(t, last, start).unwrap(),
        SeriesKind::LowerCentral => {
            let k = terms.len() + 1;
            let mut acc = Subspace::zero(t.dim());
            for i in 1..k {
                acc = acc.sum(&subspace_product(t, &terms[i - 1], &terms[k - i - 1]).unwrap());
            }
            acc
        }
    }
}

/// Series of the whole algebra.
pub fn series(t: &Table, kind: SeriesKind) -> SeriesReport {
    series_from(t, &Subspace::full(t.dim()), kind)
}

/// The three properties compared by the nilpotency equivalence for δ-Novikov algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolvabilityReport {
    pub right_nilpotent: bool,
    /// Lower-central series of the subalgebra `N²` reaches zero.
    pub square_nilpotent: bool,
    pub solvable: bool,
}

impl SolvabilityReport {
    /// All three agree.
    pub fn consistent(&self) -> bool {
        self.right_nilpotent == self.square_nilpotent && self.square_nilpotent == self.solvable
    }
}

pub fn solvability(t: &Table) -> SolvabilityReport {
    let full = Subspace::full(t.dim());
    let sq = subspace_product(t, &full, &full).unwrap();
    SolvabilityReport {
        right_nilpotent: series(t, SeriesKind::RightPower).terminated,
        square_nilpotent: series_from(t, &sq, SeriesKind::LowerCentral).terminated,
        solvable: series(t, SeriesKind::Derived).terminated,
    }
}

/// Whether `(N^(m))_L^{3^n} ⊆ N^(m+n)`.
pub fn power_containment(t: &Table, m: usize, n: usize) -> bool {
    let full = Subspace::full(t.dim());
    let derived = series_terms(t, &full, SeriesKind::Derived, m + n + 1);
    let powers = series_terms(t, &derived[m], SeriesKind::RightPower, 3usize.pow(n as u32));
    derived[m + n].contains_subspace(powers.last().unwrap())
}
