//! Command-line front end: `deltanov <command> --algebra <fixture> [--delta d] [--json]`.
//!
//! Exit codes: 0 when every verdict passes, 1 on a failed verdict or hypothesis,
//! 2 on usage and parse errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use deltanov::algebra::{
    basis_vector, ideal_closure, invariant_fingerprint, probe_simplicity, proper_ideal_exists_dim2,
    series, Algebra, BiAlgebra, LineIdeal, SeriesKind, Subspace,
};
use deltanov::construct::{
    build_a_phi, derivation_delta_spectrum, kantor_product, np_commutator_bracket, np_deform_h,
    poisson_from_two_derivations, rb_induced_products, scale_q, solve_delta_derivations, tensor_np,
    LinearMap, RbVariant, Side,
};
use deltanov::identity::{admissible_deltas, catalog, check_family, Admissible};
use deltanov::io::{load_algebra, read_fixture, save_algebra, to_json, Fixture, Loaded};
use deltanov::operad::{
    component_dim, dual_relations_via_lie_admissibility, koszul_obstruction, DeltaArg,
    DEFAULT_DEGREE_CAP,
};
use deltanov::scalar::{parse_scalar, Rational, Scalar};
use deltanov::verify::{verify_paper, Scope, VerifyOptions};
use deltanov::{corpus, Error};

#[derive(Parser)]
#[command(
    name = "deltanov",
    version,
    about = "Exact workbench for delta-Novikov algebras"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Fixture file, or the name of a built-in fixture (N01, P02, A1, ...).
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// A rational such as 2 or -1/2, or `delta` for a formal parameter.
    #[arg(long, global = true, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Fixture parameter, e.g. `--param alpha=3`.
    #[arg(long = "param", global = true, value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long, global = true)]
    json: bool,
    /// Skip hypothesis checks in constructions.
    #[arg(long, global = true)]
    no_validate: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check identity families; with none given, run the fixture's own checks.
    Check { families: Vec<String> },
    /// Values of delta at which a family holds.
    Deltas {
        #[arg(default_value = "delta-novikov")]
        family: String,
    },
    /// Basis of the delta-derivations at a rational delta.
    Derivations,
    /// Dimension of the delta-derivation space, generic and at special delta.
    Spectrum,
    /// Build a new structure.
    Construct {
        #[command(subcommand)]
        which: Construct,
        /// Write the result as a fixture file.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Derived, right-power and lower-central series.
    Series {
        /// One of derived, right-power, lower-central; all three when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Ideals generated by basis vectors, or a heuristic simplicity probe.
    Ideals {
        /// Number of random vectors to try.
        #[arg(long)]
        probe: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Exact test for a one-dimensional ideal of a two-dimensional algebra.
    Simple2,
    /// Basis-independent invariants.
    Fingerprint,
    /// Free delta-Novikov operad computations.
    Operad {
        #[command(subcommand)]
        which: OperadCmd,
    },
    /// Re-run the theorem checks over the built-in corpus.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        scope: String,
        /// Skip the degree-5 obstruction.
        #[arg(long)]
        no_koszul: bool,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// x∘y = xφ(y) (or φ(x)y with --side right).
    APhi {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// x × y = x∘y + hxy.
    DeformH {
        #[arg(long)]
        vector: String,
    },
    /// x ·_q y = qxy.
    ScaleQ {
        #[arg(long)]
        vector: String,
    },
    /// x ∗ y = u(x∘y) − (ux)∘y − x∘(uy).
    Kantor {
        #[arg(long)]
        vector: String,
    },
    /// Tensor product with a second bialgebra.
    Tensor {
        #[arg(long)]
        with: String,
    },
    /// Bracket φ1(x)φ2(y) − φ2(x)φ1(y).
    Poisson2d {
        #[arg(long)]
        map: String,
        #[arg(long)]
        map2: String,
    },
    /// Commutator of ∘ as a bracket.
    CommutatorBracket,
    /// Product induced by a Rota-Baxter operator.
    RbProduct {
        #[arg(long)]
        map: String,
        /// lie, assoc-lie or assoc-weight1.
        #[arg(long, default_value = "lie")]
        variant: String,
    },
}

#[derive(Subcommand)]
enum OperadCmd {
    /// Dimension of the degree-n multilinear component.
    Dim {
        #[arg(long)]
        degree: usize,
    },
    /// Koszulity obstruction from the degree-4 and degree-5 dimensions.
    Koszul,
    /// Koszul dual relations via Lie-admissibility.
    Dual,
}

enum Failure {
    Usage(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotCommutativeAssociative(_)
            | Error::NotADerivation { .. }
            | Error::NotNovikovPoisson { .. }
            | Error::DerivationsDoNotCommute
            | Error::HypothesisFailed(_) => Failure::Verdict(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verdict(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(m: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(m.into()))
}

enum DeltaOpt {
    Unset,
    Formal,
    Value(Rational),
}

fn parse_delta(s: &Option<String>) -> Result<DeltaOpt, Failure> {
    match s.as_deref() {
        None => Ok(DeltaOpt::Unset),
        Some("delta") | Some("δ") | Some("symbolic") => Ok(DeltaOpt::Formal),
        Some(v) => v
            .parse::<Rational>()
            .map(DeltaOpt::Value)
            .map_err(|_| Failure::Usage(format!("invalid delta `{v}`"))),
    }
}

struct Input {
    fixture: Fixture,
    bindings: BTreeMap<String, Rational>,
    loaded: Loaded,
}

impl Input {
    fn map(&self, spec: &str) -> Result<LinearMap, Failure> {
        if self.fixture.maps.contains_key(spec) {
            return Ok(self.fixture.map(spec, &self.bindings)?);
        }
        let text = if spec.trim_start().starts_with(['[', '{']) {
            spec.to_string()
        } else if Path::new(spec).exists() {
            std::fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?
        } else {
            return usage(format!("no map `{spec}` in fixture {}", self.fixture.name));
        };
        let bad = |e: serde_json::Error| Failure::Usage(format!("bad map: {e}"));
        let mut v: serde_json::Value = serde_json::from_str(&text).map_err(bad)?;
        if v.is_array() {
            v = json!({ "matrix": v });
        }
        stringify_numbers(&mut v);
        serde_json::from_value(v).map_err(bad)
    }

    fn vector(&self, spec: &str) -> Result<Vec<Scalar>, Failure> {
        if self.fixture.vectors.contains_key(spec) {
            return Ok(self.fixture.vector(spec, &self.bindings)?);
        }
        spec.split(',')
            .map(|s| parse_scalar(s.trim()).map_err(Failure::from))
            .collect()
    }

    fn bialgebra(&self) -> Result<&BiAlgebra, Failure> {
        self.loaded
            .as_bialgebra()
            .ok_or_else(|| Failure::Usage(format!("{} has only one product", self.fixture.name)))
    }

    /// δ from the command line, else the fixture's declared δ, else formal.
    fn delta(&self, opt: &DeltaOpt) -> Result<Scalar, Failure> {
        Ok(match opt {
            DeltaOpt::Value(r) => Scalar::from_rational(r.clone()),
            DeltaOpt::Formal => Scalar::delta(),
            DeltaOpt::Unset => self
                .fixture
                .declared_delta(&self.bindings)?
                .unwrap_or_else(Scalar::delta),
        })
    }

    fn rational_delta(&self, opt: &DeltaOpt) -> Result<Rational, Failure> {
        self.delta(opt)?
            .as_rational()
            .ok_or_else(|| Failure::Usage("this command needs a rational --delta".into()))
    }

    fn constant_algebra(&self) -> Result<Algebra, Failure> {
        let a = self.loaded.first_algebra();
        if !a.table.is_constant() {
            return usage("structure constants depend on delta; pass --delta or --param delta=...");
        }
        Ok(a)
    }
}

fn load_input(spec: &str, g: &Global, delta: &DeltaOpt) -> Result<Input, Failure> {
    let path = Path::new(spec);
    let (fixture, from_file) = if path.exists() {
        (read_fixture(path)?.0, true)
    } else {
        (corpus::fixture(spec)?, false)
    };
    let mut bindings = fixture.default_bindings();
    if let DeltaOpt::Value(d) = delta {
        if fixture.params.iter().any(|p| p == "delta") {
            bindings.insert("delta".into(), d.clone());
        }
    }
    if matches!(delta, DeltaOpt::Formal) {
        bindings.remove("delta");
    }
    for p in &g.params {
        let Some((k, v)) = p.split_once('=') else {
            return usage(format!("expected NAME=VALUE, got `{p}`"));
        };
        let v: Rational = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("invalid value in `{p}`")))?;
        bindings.insert(k.trim().to_string(), v);
    }
    let loaded = if from_file {
        load_algebra(path, &bindings)?
    } else {
        fixture.instantiate(&bindings)?
    };
    Ok(Input {
        fixture,
        bindings,
        loaded,
    })
}

/// Lets matrices be written with bare JSON numbers.
fn stringify_numbers(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Number(n) => *v = serde_json::Value::String(n.to_string()),
        serde_json::Value::Array(xs) => xs.iter_mut().for_each(stringify_numbers),
        serde_json::Value::Object(m) => m.values_mut().for_each(stringify_numbers),
        _ => {}
    }
}

fn show_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn subspace_json(s: &Subspace) -> serde_json::Value {
    json!({ "dim": s.dim(), "basis": s.basis() })
}

fn print_json(v: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("report serializes")
    );
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let delta = parse_delta(&g.delta)?;
    let input = || -> Result<Input, Failure> {
        match &g.algebra {
            Some(a) => load_input(a, g, &delta),
            None => usage("--algebra is required for this command"),
        }
    };
    match &cli.command {
        Command::Check { families } => cmd_check(&input()?, families, &delta, g.json),
        Command::Deltas { family } => cmd_deltas(&input()?, family, g.json),
        Command::Derivations => {
            let inp = input()?;
            let d = inp.rational_delta(&delta)?;
            let sp = solve_delta_derivations(&inp.constant_algebra()?, &d)?;
            if g.json {
                print_json(&sp);
            } else {
                println!("{}-derivations: dimension {}", sp.delta, sp.dimension());
                for (k, m) in sp.basis.iter().enumerate() {
                    let imgs: Vec<String> =
                        (0..m.dim()).map(|j| show_vector(&m.image(j))).collect();
                    println!("  phi{}: e_j -> {}", k + 1, imgs.join(" "));
                }
            }
            Ok(true)
        }
        Command::Spectrum => {
            let inp = input()?;
            let rep = derivation_delta_spectrum(&inp.constant_algebra()?)?;
            if g.json {
                print_json(&rep);
            } else {
                println!("generic dimension {}", rep.generic_nullity);
                for c in &rep.candidates {
                    match (&c.root, c.nullity) {
                        (Some(r), Some(n)) => println!("  delta = {r}: dimension {n}"),
                        _ => println!("  {} = 0: not rational", c.factor),
                    }
                }
            }
            Ok(true)
        }
        Command::Construct { which, out } => {
            let inp = input()?;
            cmd_construct(&inp, which, out.as_deref(), &delta, g)
        }
        Command::Series { kind } => {
            let inp = input()?;
            let kinds = match kind {
                None => SeriesKind::ALL.to_vec(),
                Some(k) => vec![SeriesKind::parse(k)
                    .ok_or_else(|| Failure::Usage(format!("unknown series kind `{k}`")))?],
            };
            let t = inp.loaded.first_algebra().table;
            let reps: Vec<_> = kinds.iter().map(|&k| series(&t, k)).collect();
            if g.json {
                print_json(&reps);
            } else {
                for r in &reps {
                    let end = match r.index {
                        Some(i) => format!("zero at step {i}"),
                        None => "never zero".into(),
                    };
                    println!("{}: dims {:?}, {end}", r.kind, r.dims);
                }
            }
            Ok(true)
        }
        Command::Ideals { probe, seed } => {
            let inp = input()?;
            let t = inp.loaded.first_algebra().table;
            let n = t.dim();
            match probe {
                Some(trials) => {
                    let p = probe_simplicity(&t, *trials, *seed);
                    if g.json {
                        print_json(&json!({
                            "certifying": p.proper_ideal.is_some(),
                            "vectors_tried": p.vectors_tried,
                            "proper_ideal": p.proper_ideal.as_ref().map(subspace_json),
                        }));
                    } else {
                        match &p.proper_ideal {
                            Some(s) => println!("proper ideal of dimension {} (certified)", s.dim()),
                            None => println!(
                                "no proper ideal among {} vectors (heuristic, not a proof of simplicity)",
                                p.vectors_tried
                            ),
                        }
                    }
                }
                None => {
                    let closures: Vec<Subspace> = (0..n)
                        .map(|i| {
                            ideal_closure(&t, &Subspace::span(n, vec![basis_vector(n, i)]).unwrap())
                        })
                        .collect();
                    if g.json {
                        let v: Vec<_> = closures
                            .iter()
                            .enumerate()
                            .map(|(i, s)| json!({"generator": i + 1, "ideal": subspace_json(s)}))
                            .collect();
                        print_json(&v);
                    } else {
                        for (i, s) in closures.iter().enumerate() {
                            println!("(e{}): dimension {}", i + 1, s.dim());
                        }
                    }
                }
            }
            Ok(true)
        }
        Command::Simple2 => {
            let inp = input()?;
            let a = inp.constant_algebra()?;
            let found = proper_ideal_exists_dim2(&a.table)?;
            let witness = match &found {
                None => None,
                Some(LineIdeal::Rational(v)) => {
                    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    Some(format!("span({})", parts.join(", ")))
                }
                Some(LineIdeal::Algebraic(p)) => {
                    Some(format!("span(1, t) with {p} = 0 at delta = t"))
                }
            };
            if g.json {
                print_json(&json!({"proper_ideal": found.is_some(), "witness": witness}));
            } else {
                match witness {
                    None => println!("simple: no one-dimensional ideal"),
                    Some(w) => println!("not simple: ideal {w}"),
                }
            }
            Ok(true)
        }
        Command::Fingerprint => {
            let inp = input()?;
            let f = invariant_fingerprint(&inp.loaded.first_algebra().table);
            if g.json {
                print_json(&f);
            } else {
                println!("dim {}, dim A^2 {}", f.dim, f.dim_square);
                println!(
                    "annihilators: left {}, right {}",
                    f.left_annihilator, f.right_annihilator
                );
                println!(
                    "commutative {}, associative {}",
                    f.commutative, f.associative
                );
                for (i, tr) in &f.idempotent_traces {
                    println!("idempotent e{i}: trace {tr}");
                }
            }
            Ok(true)
        }
        Command::Operad { which } => cmd_operad(which, &delta, g.json),
        Command::VerifyPaper { scope, no_koszul } => {
            let scope = Scope::parse(scope)
                .ok_or_else(|| Failure::Usage(format!("unknown scope `{scope}`")))?;
            let mut opts = VerifyOptions {
                koszul: !no_koszul,
                ..VerifyOptions::default()
            };
            if let DeltaOpt::Value(d) = &delta {
                opts.operad_delta = d.clone();
            }
            let rep = verify_paper(scope, &opts);
            if g.json {
                print_json(&rep);
            } else {
                for e in &rep.entries {
                    let mark = if e.passed { "PASS" } else { "FAIL" };
                    println!("{mark} [{}] {}: {}", e.scope.as_str(), e.name, e.detail);
                    if let (false, Some(w)) = (e.passed, &e.witness) {
                        println!(
                            "       witness {:?}, defect {}",
                            w.tuple,
                            show_vector(&w.defect)
                        );
                    }
                }
                println!("{} passed, {} failed", rep.passed, rep.failed);
            }
            Ok(rep.all_passed())
        }
    }
}

fn cmd_check(inp: &Input, families: &[String], delta: &DeltaOpt, as_json: bool) -> Outcome {
    let reports = if families.is_empty() {
        if inp.fixture.checks.is_empty() {
            return usage("no families given and the fixture declares no checks");
        }
        inp.fixture.self_check(&inp.bindings)?
    } else {
        let d = inp.delta(delta)?;
        families
            .iter()
            .map(|f| check_family(&catalog(f, &d)?, &inp.loaded))
            .collect::<Result<Vec<_>, _>>()?
    };
    let ok = reports.iter().all(|r| r.satisfied());
    if as_json {
        print_json(&json!({ "satisfied": ok, "families": reports }));
    } else {
        for fam in &reports {
            for r in &fam.reports {
                match &r.witness {
                    None => println!("{}: satisfied", r.identity),
                    Some(w) => {
                        let t: Vec<String> = w.tuple.iter().map(|i| format!("e{i}")).collect();
                        println!(
                            "{}: violated at ({}), defect {}",
                            r.identity,
                            t.join(", "),
                            show_vector(&w.defect)
                        );
                    }
                }
                if !r.delta_conditions.is_empty() {
                    let c: Vec<String> = r.delta_conditions.iter().map(|p| p.to_string()).collect();
                    println!("  holds only where {} = 0", c.join(", "));
                }
            }
        }
    }
    Ok(ok)
}

fn cmd_deltas(inp: &Input, family: &str, as_json: bool) -> Outcome {
    let a = admissible_deltas(&catalog(family, &Scalar::delta())?, &inp.loaded)?;
    if as_json {
        print_json(&a);
    } else {
        match &a {
            Admissible::All => println!("{family} holds for every delta"),
            Admissible::Empty => println!("{family} holds for no delta"),
            Admissible::Roots(fs) => {
                for f in fs {
                    match f.linear_root_value() {
                        Some(r) => println!("delta = {r}"),
                        None => println!("{f} = 0"),
                    }
                }
            }
        }
    }
    Ok(a != Admissible::Empty)
}

fn cmd_construct(
    inp: &Input,
    which: &Construct,
    out: Option<&Path>,
    delta: &DeltaOpt,
    g: &Global,
) -> Outcome {
    let validate = !g.no_validate;
    let d = || inp.rational_delta(delta);
    let (name, result) = match which {
        Construct::APhi { map, side } => {
            let side = match side.as_str() {
                "left" => Side::Left,
                "right" => Side::Right,
                s => return usage(format!("unknown side `{s}`")),
            };
            let a = build_a_phi(
                &inp.constant_algebra()?,
                &inp.map(map)?,
                &d()?,
                side,
                validate,
            )?;
            ("a-phi", Loaded::Algebra(a))
        }
        Construct::DeformH { vector } => {
            let b = np_deform_h(inp.bialgebra()?, &inp.vector(vector)?, &d()?, validate)?;
            ("deform-h", Loaded::BiAlgebra(b))
        }
        Construct::ScaleQ { vector } => {
            let b = scale_q(inp.bialgebra()?, &inp.vector(vector)?, &d()?, validate)?;
            ("scale-q", Loaded::BiAlgebra(b))
        }
        Construct::Kantor { vector } => {
            let a = kantor_product(inp.bialgebra()?, &inp.vector(vector)?, &d()?, validate)?;
            ("kantor", Loaded::Algebra(a))
        }
        Construct::Tensor { with } => {
            let other = load_input(with, g, delta)?;
            let d2 = other.rational_delta(delta)?;
            let b = tensor_np(inp.bialgebra()?, &d()?, other.bialgebra()?, &d2, validate)?;
            ("tensor", Loaded::BiAlgebra(b))
        }
        Construct::Poisson2d { map, map2 } => {
            let b = poisson_from_two_derivations(
                &inp.constant_algebra()?,
                &inp.map(map)?,
                &inp.map(map2)?,
                &d()?,
                validate,
            )?;
            ("poisson2d", Loaded::BiAlgebra(b))
        }
        Construct::CommutatorBracket => {
            let b = np_commutator_bracket(inp.bialgebra()?, &d()?, validate)?;
            ("commutator-bracket", Loaded::BiAlgebra(b))
        }
        Construct::RbProduct { map, variant } => {
            let v = RbVariant::parse(variant)
                .ok_or_else(|| Failure::Usage(format!("unknown variant `{variant}`")))?;
            let p =
                rb_induced_products(&inp.constant_algebra()?, &inp.map(map)?, &d()?, v, validate)?;
            if !g.json {
                if let (Some(c), Some(pl)) = (p.cyclic_condition, p.pre_lie) {
                    eprintln!("cyclic condition {c}, delta-pre-Lie {pl}");
                }
            }
            ("rb-product", Loaded::Algebra(p.algebra))
        }
    };
    let label = format!("{}-{name}", inp.fixture.name);
    match out {
        Some(path) => {
            save_algebra(path, &label, &result)?;
            if !g.json {
                println!("wrote {}", path.display());
            }
        }
        None => println!("{}", to_json(&label, &result)),
    }
    Ok(true)
}

fn cmd_operad(which: &OperadCmd, delta: &DeltaOpt, as_json: bool) -> Outcome {
    match which {
        OperadCmd::Dim { degree } => {
            let arg = match delta {
                DeltaOpt::Value(r) => DeltaArg::Value(r.clone()),
                _ => DeltaArg::Symbolic,
            };
            if *degree > DEFAULT_DEGREE_CAP {
                return usage(format!(
                    "degree {degree} exceeds the cap {DEFAULT_DEGREE_CAP}"
                ));
            }
            let rep = component_dim(&arg, *degree)?;
            if as_json {
                print_json(&rep);
            } else {
                println!(
                    "degree {}: {} monomials, rank {}, dimension {}",
                    rep.degree, rep.monomials, rep.rank, rep.dim
                );
                if !rep.exceptional_factors.is_empty() {
                    let f: Vec<String> = rep
                        .exceptional_factors
                        .iter()
                        .map(|p| p.to_string())
                        .collect();
                    println!("exceptional factors: {}", f.join(", "));
                }
            }
            Ok(true)
        }
        OperadCmd::Koszul => {
            let DeltaOpt::Value(d) = delta else {
                return usage("operad koszul needs a rational --delta");
            };
            let k = koszul_obstruction(d)?;
            if as_json {
                print_json(&k);
            } else {
                println!(
                    "delta {}: beta {}, alpha {}, coefficient (240 - 15*beta + alpha)/60 = {}",
                    k.delta, k.beta, k.alpha, k.coefficient
                );
                println!(
                    "{}",
                    if k.nonzero {
                        "not Koszul"
                    } else {
                        "no obstruction"
                    }
                );
            }
            Ok(k.nonzero)
        }
        OperadCmd::Dual => {
            let d = match delta {
                DeltaOpt::Value(r) => Scalar::from_rational(r.clone()),
                _ => Scalar::delta(),
            };
            let rep = dual_relations_via_lie_admissibility(&d)?;
            if as_json {
                print_json(&rep);
            } else {
                for (base, rel) in &rep.relations {
                    println!("[{base}] {rel}");
                }
                println!(
                    "rank {}, right delta-Novikov rank {}, equal: {}",
                    rep.rank, rep.right_novikov_rank, rep.equal
                );
            }
            Ok(rep.equal)
        }
    }
}
