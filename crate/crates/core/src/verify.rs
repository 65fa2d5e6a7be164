//! Batch driver re-running the theorem checks over the built-in corpus.
//!
//! Every check becomes one [`Entry`]; errors are recorded as failed entries,
//! so [`verify_paper`] itself never fails.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{
    basis_vector, is_zero_vector, power_containment, proper_ideal_exists_dim2, series, series_from,
    solvability, Algebra, SeriesKind, Subspace,
};
use crate::construct::{
    build_a_phi, induced_is_left_symmetric, kantor_product, np_commutator_bracket, np_deform_h,
    poisson_from_two_derivations, rb_induced_products, scale_q, solve_delta_derivations, tensor_np,
    LinearMap, RbVariant, Side,
};
use crate::corpus;
use crate::error::{Error, Result};
use crate::identity::{
    admissible_deltas, catalog, check_family, gd_tp_combination_check, Admissible, FamilyReport,
    Witness,
};
use crate::io::{Fixture, Loaded};
use crate::operad::{
    component_dim, dual_relations_via_lie_admissibility, koszul_obstruction, DeltaArg,
};
use crate::scalar::{parse_scalar_with, DeltaPoly, Env, Rational, Scalar};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Tables,
    Constructions,
    Operad,
    Series,
    All,
}

impl Scope {
    pub fn parse(s: &str) -> Option<Scope> {
        match s {
            "tables" => Some(Scope::Tables),
            "constructions" => Some(Scope::Constructions),
            "operad" => Some(Scope::Operad),
            "series" => Some(Scope::Series),
            "all" => Some(Scope::All),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Scope::Tables => "tables",
            Scope::Constructions => "constructions",
            Scope::Operad => "operad",
            Scope::Series => "series",
            Scope::All => "all",
        }
    }

    fn parts(self) -> Vec<Scope> {
        match self {
            Scope::All => vec![
                Scope::Tables,
                Scope::Constructions,
                Scope::Operad,
                Scope::Series,
            ],
            s => vec![s],
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Rational δ for the operad dimensions.
    pub operad_delta: Rational,
    /// Also run the degree-5 Koszulity obstruction (about a minute at δ=2).
    pub koszul: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            operad_delta: Rational::from_int(2),
            koszul: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub scope: Scope,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub scope: Scope,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<Entry>,
    /// Milliseconds per scope; the only field that varies between runs.
    pub timings_ms: BTreeMap<String, u64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

struct Outcome {
    passed: bool,
    detail: String,
    witness: Option<Witness>,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
        witness: None,
    }
}

/// Outcome of a family check that should come out as `expect`.
fn expect_family(rep: &FamilyReport, expect: bool) -> Outcome {
    let holds = rep.satisfied();
    let witness = rep.failure().and_then(|f| f.witness.clone());
    let detail = match rep.failure() {
        None => format!("{} holds", rep.family),
        Some(f) => format!("{} fails ({})", rep.family, f.identity),
    };
    Outcome {
        passed: holds == expect,
        detail,
        witness,
    }
}

struct Sink {
    scope: Scope,
    entries: Vec<Entry>,
}

impl Sink {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let o = f().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        self.entries.push(Entry {
            scope: self.scope,
            name: name.into(),
            passed: o.passed,
            detail: o.detail,
            witness: o.witness,
        });
    }
}

pub fn verify_paper(scope: Scope, opts: &VerifyOptions) -> Report {
    let mut entries = Vec::new();
    let mut timings_ms = BTreeMap::new();
    for part in scope.parts() {
        let start = Instant::now();
        let mut sink = Sink {
            scope: part,
            entries: Vec::new(),
        };
        match part {
            Scope::Tables => tables(&mut sink),
            Scope::Constructions => constructions(&mut sink),
            Scope::Operad => operad(&mut sink, opts),
            Scope::Series => series_checks(&mut sink),
            Scope::All => unreachable!(),
        }
        timings_ms.insert(
            part.as_str().to_string(),
            start.elapsed().as_millis() as u64,
        );
        entries.extend(sink.entries);
    }
    let passed = entries.iter().filter(|e| e.passed).count();
    Report {
        report_version: REPORT_VERSION,
        scope,
        passed,
        failed: entries.len() - passed,
        entries,
        timings_ms,
    }
}

type Bindings = BTreeMap<String, Rational>;

/// Up to `count` admissible parameter assignments: the defaults, then every parameter
/// set to one of a fixed list of values.
pub fn sample_bindings(fx: &Fixture, count: usize) -> Vec<Bindings> {
    if fx.params.is_empty() {
        return vec![Bindings::new()];
    }
    let mut out = vec![fx.default_bindings()];
    for (n, d) in [(3, 1), (5, 1), (-2, 1), (7, 1), (1, 3), (-3, 2)] {
        if out.len() >= count {
            break;
        }
        let b: Bindings = fx
            .params
            .iter()
            .map(|p| (p.clone(), Rational::new(n, d)))
            .collect();
        if !out.contains(&b) && fx.instantiate(&b).is_ok() {
            out.push(b);
        }
    }
    out.truncate(count);
    out
}

fn binding_label(name: &str, b: &Bindings) -> String {
    if b.is_empty() {
        return name.to_string();
    }
    let parts: Vec<String> = b.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{name}[{}]", parts.join(","))
}

/// What the declared δ of a table row predicts for `admissible_deltas`.
pub fn expected_admissible(fx: &Fixture, b: &Bindings) -> Result<Admissible> {
    let d = fx
        .declared_delta(b)?
        .ok_or_else(|| Error::Invalid(format!("fixture {} declares no check", fx.name)))?;
    Ok(match d.as_rational() {
        Some(r) => Admissible::singleton(&r),
        None => Admissible::All,
    })
}

fn show_admissible(a: &Admissible) -> String {
    match a {
        Admissible::All => "every delta".into(),
        Admissible::Empty => "no delta".into(),
        Admissible::Roots(fs) => {
            let parts: Vec<String> = fs
                .iter()
                .map(|f| match f.linear_root_value() {
                    Some(r) => r.to_string(),
                    None => format!("root of {f}"),
                })
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
    }
}

fn table_row(sink: &mut Sink, name: &str, family: &str) {
    let fx = match corpus::fixture(name) {
        Ok(fx) => fx,
        Err(e) => {
            sink.run(name, || Err(e));
            return;
        }
    };
    for b in sample_bindings(&fx, 3) {
        sink.run(binding_label(name, &b), || {
            let loaded = fx.instantiate(&b)?;
            let expected = expected_admissible(&fx, &b)?;
            let got = admissible_deltas(&catalog(family, &Scalar::delta())?, &loaded)?;
            let reports = fx.self_check(&b)?;
            let declared = reports.iter().all(FamilyReport::satisfied);
            Ok(outcome(
                got == expected && declared,
                format!(
                    "expected {}, admissible {}, declared checks {}",
                    show_admissible(&expected),
                    show_admissible(&got),
                    if declared { "hold" } else { "fail" }
                ),
            ))
        });
    }
}

/// Bindings for an excluded assignment, other parameters at their defaults.
fn excluded_bindings(fx: &Fixture, ex: &BTreeMap<String, String>) -> Result<Bindings> {
    let mut b = fx.default_bindings();
    let env: Env = b
        .iter()
        .map(|(k, v)| (k.clone(), Scalar::from_rational(v.clone())))
        .collect();
    for (p, v) in ex {
        let s = parse_scalar_with(v, &env)?;
        let r = s
            .as_rational()
            .ok_or_else(|| Error::Invalid(format!("excluded value `{v}` is not rational")))?;
        b.insert(p.clone(), r);
    }
    Ok(b)
}

/// Behaviour of a δ-parametrized row at an excluded δ: a pole, a failure, or agreement.
fn at_excluded_delta(fx: &Fixture, family: &str, d: &Rational) -> Result<&'static str> {
    let mut b = fx.default_bindings();
    b.remove("delta");
    let formal = fx.instantiate(&b)?.first_algebra();
    let a = match formal.specialize(d) {
        Ok(a) => a,
        Err(Error::PoleAtDelta { .. }) => return Ok("pole"),
        Err(e) => return Err(e),
    };
    let rep = check_family(&catalog(family, &Scalar::from_rational(d.clone()))?, &a)?;
    Ok(if rep.satisfied() { "holds" } else { "fails" })
}

fn exclusions(sink: &mut Sink, name: &str, family: &str) {
    let Ok(fx) = corpus::fixture(name) else {
        return;
    };
    for ex in &fx.excluded {
        let label: Vec<String> = ex.iter().map(|(k, v)| format!("{k}={v}")).collect();
        sink.run(format!("{name} excludes {}", label.join(",")), || {
            let b = excluded_bindings(&fx, ex)?;
            let rejected = matches!(fx.instantiate(&b), Err(Error::ExcludedParameter { .. }));
            let mut detail = format!("loader {}", if rejected { "rejects" } else { "accepts" });
            if ex.len() == 1 && fx.params.iter().any(|p| p == "delta") {
                if let Some(d) = ex.get("delta") {
                    let d: Rational = d
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad excluded delta `{d}`")))?;
                    detail += &format!(
                        ", family at delta={d}: {}",
                        at_excluded_delta(&fx, family, &d)?
                    );
                }
            }
            Ok(outcome(rejected, detail))
        });
    }
}

fn tables(sink: &mut Sink) {
    for name in corpus::novikov_table() {
        table_row(sink, name, "delta-novikov");
        exclusions(sink, name, "delta-novikov");
    }
    for name in corpus::pre_lie_table() {
        table_row(sink, name, "delta-pre-lie");
        exclusions(sink, name, "delta-pre-lie");
    }
}

fn load_default(name: &str) -> Result<(Fixture, Bindings, Loaded)> {
    let fx = corpus::fixture(name)?;
    let b = fx.default_bindings();
    let l = fx.instantiate(&b)?;
    Ok((fx, b, l))
}

fn rational_delta(fx: &Fixture, b: &Bindings) -> Result<Rational> {
    fx.declared_delta(b)?
        .and_then(|d| d.as_rational())
        .ok_or_else(|| Error::Invalid(format!("fixture {} has no rational delta", fx.name)))
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn sc(d: &Rational) -> Scalar {
    Scalar::from_rational(d.clone())
}

/// Fixtures that declare a δ-Novikov check.
pub fn novikov_fixtures() -> Vec<&'static str> {
    corpus::names()
        .into_iter()
        .filter(|n| {
            corpus::fixture(n)
                .map(|fx| fx.checks.iter().any(|c| c.family == "delta-novikov"))
                .unwrap_or(false)
        })
        .collect()
}

/// Fixtures that declare a δ-Novikov–Poisson check.
pub fn np_fixtures() -> Vec<&'static str> {
    corpus::names()
        .into_iter()
        .filter(|n| {
            corpus::fixture(n)
                .map(|fx| {
                    fx.checks
                        .iter()
                        .any(|c| c.family == "delta-novikov-poisson")
                })
                .unwrap_or(false)
        })
        .collect()
}

fn all_left_products_vanish(a: &Algebra) -> Result<bool> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let yz = a.multiply(&basis_vector(n, j), &basis_vector(n, k))?;
                if !is_zero_vector(&a.multiply(&basis_vector(n, i), &yz)?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn constructions(sink: &mut Sink) {
    let two = Rational::from_int(2);
    for (name, map) in [("TRUNC3", "phi"), ("TRUNC4", "phi1"), ("TRUNC4", "phi2")] {
        sink.run(format!("a-phi nilpotent {name}/{map}"), || {
            let (fx, b, l) = load_default(name)?;
            let ap = build_a_phi(
                &l.first_algebra(),
                &fx.map(map, &b)?,
                &two,
                Side::Left,
                true,
            )?;
            let s = series(&ap.table, SeriesKind::LowerCentral);
            Ok(outcome(
                s.index.is_some_and(|i| i <= 4),
                format!("lower-central dims {:?}", s.dims),
            ))
        });
    }
    sink.run("a-phi delta=0 THM112", || {
        let (fx, b, l) = load_default("THM112")?;
        let ap = build_a_phi(
            &l.first_algebra(),
            &fx.map("phi", &b)?,
            &Rational::zero(),
            Side::Left,
            true,
        )?;
        let left = all_left_products_vanish(&ap)?;
        let s = series(&ap.table, SeriesKind::RightPower);
        Ok(outcome(
            left && !s.terminated,
            format!(
                "left products vanish: {left}, right-power dims {:?}",
                s.dims
            ),
        ))
    });
    for name in ["TRUNC3", "TRUNC4", "THM112", "NPUNIT"] {
        sink.run(format!("a-phi identity at 1/2 {name}"), || {
            let (_, _, l) = load_default(name)?;
            let a = l.first_algebra();
            let ap = build_a_phi(
                &a,
                &LinearMap::identity(a.dim()),
                &r(1, 2),
                Side::Left,
                true,
            )?;
            Ok(outcome(ap.table == a.table, "output equals input"))
        });
    }
    sink.run("half-derivations contain the identity", || {
        let mut missing = Vec::new();
        for name in corpus::names() {
            let (_, _, l) = load_default(name)?;
            let a = l.first_algebra();
            if a.table.is_zero() || !a.table.is_constant() {
                continue;
            }
            let sp = solve_delta_derivations(&a, &r(1, 2))?;
            if !sp.contains(&LinearMap::identity(a.dim())) {
                missing.push(name);
            }
        }
        Ok(outcome(missing.is_empty(), format!("missing: {missing:?}")))
    });
    sink.run("0-derivations of e1e1=e1 contain the proof map", || {
        let (fx, b, l) = load_default("THM112")?;
        let sp = solve_delta_derivations(&l.first_algebra(), &Rational::zero())?;
        Ok(outcome(
            sp.contains(&fx.map("phi", &b)?),
            format!("space dimension {}", sp.dimension()),
        ))
    });
    for name in np_fixtures() {
        np_constructions(sink, name);
    }
    commutator_suite(sink);
    poisson_suite(sink);
}

fn np_constructions(sink: &mut Sink, name: &str) {
    let np = |d: &Rational| catalog("delta-novikov-poisson", &sc(d));
    sink.run(format!("deform-h {name}"), || {
        let (fx, b, l) = load_default(name)?;
        let d = rational_delta(&fx, &b)?;
        let bi = l
            .as_bialgebra()
            .ok_or_else(|| Error::Invalid("not a bialgebra".into()))?;
        let out = np_deform_h(bi, &fx.vector("h", &b)?, &d, true)?;
        Ok(expect_family(&check_family(&np(&d)?, &out)?, true))
    });
    sink.run(format!("scale-q {name}"), || {
        let (fx, b, l) = load_default(name)?;
        let d = rational_delta(&fx, &b)?;
        let bi = l
            .as_bialgebra()
            .ok_or_else(|| Error::Invalid("not a bialgebra".into()))?;
        let out = scale_q(bi, &fx.vector("q", &b)?, &d, true)?;
        Ok(expect_family(&check_family(&np(&d)?, &out)?, true))
    });
    sink.run(format!("kantor {name}"), || {
        let (fx, b, l) = load_default(name)?;
        let d = rational_delta(&fx, &b)?;
        let bi = l
            .as_bialgebra()
            .ok_or_else(|| Error::Invalid("not a bialgebra".into()))?;
        let u = fx.vector("u", &b)?;
        let out = kantor_product(bi, &u, &d, true)?;
        let n = bi.dim();
        let mut simplified = true;
        for i in 0..n {
            for j in 0..n {
                let uy = bi.first.mul(&u, &basis_vector(n, j))?;
                let v = bi.second.mul(&basis_vector(n, i), &uy)?;
                let neg: Vec<Scalar> = v.iter().map(|x| -x.clone()).collect();
                simplified &= out.table.basis_product(i, j) == neg.as_slice();
            }
        }
        let mut o = expect_family(
            &check_family(&catalog("delta-novikov", &sc(&d))?, &out)?,
            true,
        );
        o.passed &= simplified;
        o.detail += &format!(", equals -x∘(u·y): {simplified}");
        Ok(o)
    });
    sink.run(format!("tensor {name}"), || {
        let (fx, b, l) = load_default(name)?;
        let d = rational_delta(&fx, &b)?;
        let bi = l
            .as_bialgebra()
            .ok_or_else(|| Error::Invalid("not a bialgebra".into()))?;
        let out = tensor_np(bi, &d, bi, &d, true)?;
        Ok(expect_family(&check_family(&np(&d)?, &out)?, true))
    });
}

/// δ values at which a δ-Novikov fixture is checked for the commutator identities.
fn commutator_deltas(fx: &Fixture) -> Result<Vec<(Bindings, Rational)>> {
    let samples = [r(2, 1), r(3, 1), r(-1, 2), r(5, 3), r(-4, 1)];
    let base = fx.default_bindings();
    if fx.params.iter().any(|p| p == "delta") {
        return Ok(samples
            .iter()
            .map(|d| {
                let mut b = base.clone();
                b.insert("delta".into(), d.clone());
                (b, d.clone())
            })
            .collect());
    }
    Ok(
        match fx.declared_delta(&base)?.and_then(|d| d.as_rational()) {
            Some(d) if d.is_one() => Vec::new(),
            Some(d) => vec![(base, d)],
            None => samples.iter().map(|d| (base.clone(), d.clone())).collect(),
        },
    )
}

fn commutator_suite(sink: &mut Sink) {
    for name in novikov_fixtures() {
        sink.run(format!("commutator algebra {name}"), || {
            let fx = corpus::fixture(name)?;
            let runs = commutator_deltas(&fx)?;
            let metabelian_applies = !runs.is_empty();
            let b = runs
                .first()
                .map(|r| r.0.clone())
                .unwrap_or_else(|| fx.default_bindings());
            let a = fx.instantiate(&b)?.first_algebra();
            let c = a.commutator_algebra();
            let mut names = vec!["anticomm", "jacobi"];
            if metabelian_applies {
                names.push("metabelian");
            }
            for fam in names {
                let rep = check_family(&catalog(fam, &Scalar::one())?, &c)?;
                if !rep.satisfied() {
                    return Ok(expect_family(&rep, true));
                }
            }
            let mut checked = Vec::new();
            for (b, d) in &runs {
                let a = fx.instantiate(b)?.first_algebra();
                for fam in ["strong-right-comm", "commutator-product-id"] {
                    let rep = check_family(&catalog(fam, &sc(d))?, &a)?;
                    if !rep.satisfied() {
                        let mut o = expect_family(&rep, true);
                        o.detail += &format!(" at delta={d}");
                        return Ok(o);
                    }
                }
                checked.push(d.to_string());
            }
            Ok(outcome(
                true,
                format!(
                    "Lie{}; product identities at delta in {{{}}}",
                    if metabelian_applies {
                        ", metabelian"
                    } else {
                        ""
                    },
                    checked.join(", ")
                ),
            ))
        });
    }
    sink.run("commutator of E15 is not nilpotent", || {
        let (_, _, l) = load_default("E15")?;
        let c = l.first_algebra().commutator_algebra();
        let s = series(&c.table, SeriesKind::LowerCentral);
        Ok(outcome(
            !s.terminated && s.dims.last() == Some(&1),
            format!("lower-central dims {:?}", s.dims),
        ))
    });
}

fn poisson_suite(sink: &mut Sink) {
    let two = Rational::from_int(2);
    sink.run("poisson2d TRUNC4", || {
        let (fx, b, l) = load_default("TRUNC4")?;
        let out = poisson_from_two_derivations(
            &l.first_algebra(),
            &fx.map("phi1", &b)?,
            &fx.map("phi2", &b)?,
            &two,
            true,
        )?;
        Ok(expect_family(
            &check_family(&catalog("delta-poisson", &sc(&two))?, &out)?,
            true,
        ))
    });
    for name in np_fixtures() {
        sink.run(format!("commutator-bracket {name}"), || {
            let (fx, b, l) = load_default(name)?;
            let d = rational_delta(&fx, &b)?;
            let bi = l
                .as_bialgebra()
                .ok_or_else(|| Error::Invalid("not a bialgebra".into()))?;
            let out = np_commutator_bracket(bi, &d, true)?;
            let shifted = &d + &Rational::one();
            let fam = catalog("transposed-delta-poisson", &sc(&shifted))?;
            Ok(expect_family(&check_family(&fam, &out)?, true))
        });
    }
    let cases: [(&str, &str, Rational, bool); 4] = [
        ("A1", "transposed-delta-poisson", Rational::zero(), true),
        ("A1", "delta-gd", r(-1, 1), false),
        ("A2", "delta-gd", r(1, 2), true),
        ("A2", "transposed-delta-poisson", r(3, 2), false),
    ];
    for (name, fam, d, expect) in cases {
        let verb = if expect { "satisfies" } else { "violates" };
        sink.run(format!("{name} {verb} {fam} at {d}"), || {
            let (_, _, l) = load_default(name)?;
            let rep = check_family(&catalog(fam, &sc(&d))?, &l)?;
            let mut o = expect_family(&rep, expect);
            if !expect && o.witness.is_none() {
                o.passed = false;
            }
            Ok(o)
        });
    }
    for name in ["A1", "A2"] {
        sink.run(format!("gd-tp combinations {name}"), || {
            let (_, _, l) = load_default(name)?;
            let bi = l.as_bialgebra().ok_or_else(|| Error::Invalid("not a bialgebra".into()))?;
            let holds = gd_tp_combination_check(bi, &two)?.satisfied();
            let first = gd_tp_combination_check(bi, &r(1, 2));
            let second = gd_tp_combination_check(bi, &r(-1, 1));
            let excl = |e: &Result<_>, w: &str| {
                matches!(e, Err(Error::ExcludedDelta { which, .. }) if which == w)
            };
            let ok = holds && excl(&first, "first") && excl(&second, "second");
            Ok(outcome(
                ok,
                format!(
                    "holds at 2: {holds}; excluded at 1/2: {}; excluded at -1: {}",
                    excl(&first, "first"),
                    excl(&second, "second")
                ),
            ))
        });
    }
    sink.run("rota-baxter LIE2", || {
        let (fx, b, l) = load_default("LIE2")?;
        let p = rb_induced_products(
            &l.first_algebra(),
            &fx.map("R", &b)?,
            &Rational::one(),
            RbVariant::Lie,
            true,
        )?;
        let ls = induced_is_left_symmetric(&p, &Rational::one())?;
        Ok(outcome(ls, format!("induced product left-symmetric: {ls}")))
    });
}

fn operad(sink: &mut Sink, opts: &VerifyOptions) {
    let d = opts.operad_delta.clone();
    sink.run(format!("operad dims at delta={d}"), || {
        let arg = DeltaArg::Value(d.clone());
        let dims: Vec<usize> = (1..=4)
            .map(|n| component_dim(&arg, n).map(|c| c.dim))
            .collect::<Result<_>>()?;
        Ok(outcome(
            dims[..3] == [1, 2, 6] && dims[3] <= 14,
            format!("dims {dims:?}"),
        ))
    });
    sink.run("operad symbolic degree 3", || {
        let c = component_dim(&DeltaArg::Symbolic, 3)?;
        let has = c
            .exceptional_factors
            .contains(&DeltaPoly::linear_root(&Rational::one()));
        let fs: Vec<String> = c
            .exceptional_factors
            .iter()
            .map(|f| f.to_string())
            .collect();
        Ok(outcome(
            c.dim == 6 && has,
            format!("dim {}, exceptional factors [{}]", c.dim, fs.join(", ")),
        ))
    });
    if opts.koszul && !d.is_one() {
        sink.run(format!("koszul obstruction at delta={d}"), || {
            let k = koszul_obstruction(&d)?;
            Ok(outcome(
                k.nonzero,
                format!(
                    "beta {}, alpha {}, coefficient {}",
                    k.beta, k.alpha, k.coefficient
                ),
            ))
        });
    }
    sink.run("dual via Lie-admissibility", || {
        let rep = dual_relations_via_lie_admissibility(&Scalar::delta())?;
        Ok(outcome(
            rep.rank == 6 && rep.equal,
            format!(
                "rank {}, right-novikov rank {}, equal {}",
                rep.rank, rep.right_novikov_rank, rep.equal
            ),
        ))
    });
}

fn series_checks(sink: &mut Sink) {
    sink.run("N12 simple and not nilpotent", || {
        let (_, _, l) = load_default("N12")?;
        let a = l.first_algebra();
        let ideal = proper_ideal_exists_dim2(&a.table)?;
        let never = SeriesKind::ALL
            .iter()
            .all(|&k| !series(&a.table, k).terminated);
        Ok(outcome(
            ideal.is_none() && never,
            format!(
                "proper ideal: {}, series never vanish: {never}",
                ideal.is_some()
            ),
        ))
    });
    for name in novikov_fixtures() {
        sink.run(format!("solvability {name}"), || {
            let (_, _, l) = load_default(name)?;
            let t = &l.first_algebra().table;
            let s = solvability(t);
            let contained = [(0, 1), (0, 2), (1, 1), (1, 2)]
                .iter()
                .all(|&(m, n)| power_containment(t, m, n));
            let sq = {
                let full = Subspace::full(t.dim());
                crate::algebra::subspace_product(t, &full, &full)?
            };
            let lc = series_from(t, &sq, SeriesKind::LowerCentral);
            Ok(outcome(
                s.consistent() && contained,
                format!(
                    "right nilpotent {}, square nilpotent {} (dims {:?}), solvable {}, containments {}",
                    s.right_nilpotent, s.square_nilpotent, lc.dims, s.solvable, contained
                ),
            ))
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_and_constructions_pass() {
        let opts = VerifyOptions::default();
        for scope in [Scope::Tables, Scope::Constructions] {
            let rep = verify_paper(scope, &opts);
            let bad: Vec<_> = rep.entries.iter().filter(|e| !e.passed).collect();
            assert!(bad.is_empty(), "{bad:#?}");
            assert_eq!(rep.report_version, 1);
        }
    }

    #[test]
    fn zero_novikov_counterexample_to_solvability_equivalence() {
        // e1e2 = e1 at δ = 0: solvable, yet N_L^n = span(e1) for every n ≥ 2.
        let rep = verify_paper(Scope::Series, &VerifyOptions::default());
        let bad: Vec<&str> = rep
            .entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| e.name.as_str())
            .collect();
        assert_eq!(bad, ["solvability N03"]);
        let (_, _, l) = load_default("N03").unwrap();
        let s = solvability(&l.first_algebra().table);
        assert!(s.solvable && s.square_nilpotent && !s.right_nilpotent);
    }

    #[test]
    fn samples_avoid_exclusions() {
        for name in corpus::names() {
            let fx = corpus::fixture(name).unwrap();
            let s = sample_bindings(&fx, 3);
            let want = if fx.params.is_empty() { 1 } else { 3 };
            assert_eq!(s.len(), want, "{name}");
        }
    }
}
