//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use deltanov::algebra::{
    power_containment, proper_ideal_exists_dim2, series, solvability, SeriesKind, Table, Vector,
};
use deltanov::construct::derivation_system;
use deltanov::corpus;
use deltanov::identity::{catalog, check, evaluate_vectors};
use deltanov::linalg::{rank_and_nullspace, rank_at};
use deltanov::operad::{
    component_dim, dual_relations_via_lie_admissibility, koszul_obstruction, DeltaArg,
};
use deltanov::scalar::{parse_scalar, DeltaPoly, Rational, Scalar};
use deltanov::verify::{novikov_fixtures, np_fixtures, verify_paper, Entry, Scope, VerifyOptions};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Entries of one scope whose name starts with a row label.
fn row_entries<'a>(entries: &'a [Entry], rows: &[&str]) -> Vec<&'a Entry> {
    entries
        .iter()
        .filter(|e| {
            rows.iter().any(|row| {
                e.name
                    .strip_prefix(row)
                    .is_some_and(|rest| rest.is_empty() || rest.starts_with(['[', ' ']))
            })
        })
        .collect()
}

fn summarize(entries: &[&Entry]) -> Outcome {
    let bad: Vec<String> = entries
        .iter()
        .filter(|e| !e.passed)
        .map(|e| format!("{} ({})", e.name, e.detail))
        .collect();
    if entries.is_empty() {
        return outcome(false, "no entries");
    }
    if bad.is_empty() {
        outcome(true, format!("{} checks", entries.len()))
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion_1() -> Outcome {
    let rows = corpus::novikov_table();
    let rep = verify_paper(Scope::Tables, &VerifyOptions::default());
    let mut o = summarize(&row_entries(&rep.entries, &rows));
    if rows.len() != 12 {
        o.passed = false;
        o.detail += &format!(", {} rows", rows.len());
    }
    o
}

fn criterion_2() -> Outcome {
    let rows = corpus::pre_lie_table();
    let rep = verify_paper(Scope::Tables, &VerifyOptions::default());
    summarize(&row_entries(&rep.entries, &rows))
}

fn criterion_3() -> Outcome {
    let a = corpus::load("N12", &Default::default())
        .unwrap()
        .first_algebra();
    let ideal = proper_ideal_exists_dim2(&a.table).unwrap();
    let dims: Vec<Vec<usize>> = SeriesKind::ALL
        .iter()
        .map(|&k| series(&a.table, k).dims)
        .collect();
    let never = dims.iter().all(|d| !d.contains(&0));
    outcome(
        ideal.is_none() && never,
        format!("proper ideal {}, series dims {dims:?}", ideal.is_some()),
    )
}

fn constructions() -> Vec<Entry> {
    verify_paper(Scope::Constructions, &VerifyOptions::default()).entries
}

fn by_prefix(entries: &[Entry], prefixes: &[&str]) -> Vec<Entry> {
    entries
        .iter()
        .filter(|e| prefixes.iter().any(|p| e.name.starts_with(p)))
        .cloned()
        .collect()
}

fn criterion_4() -> Outcome {
    let e = by_prefix(&constructions(), &["a-phi "]);
    summarize(&e.iter().collect::<Vec<_>>())
}

fn criterion_5() -> Outcome {
    let e = by_prefix(
        &constructions(),
        &["half-derivations contain", "0-derivations of e1e1=e1"],
    );
    let mut o = summarize(&e.iter().collect::<Vec<_>>());
    o.passed &= e.len() == 2;
    o
}

fn criterion_6() -> Outcome {
    let all = constructions();
    let mut o = summarize(
        &by_prefix(&all, &["deform-h ", "scale-q ", "kantor ", "tensor "])
            .iter()
            .collect::<Vec<_>>(),
    );
    for kind in ["deform-h ", "scale-q ", "kantor ", "tensor "] {
        let n = by_prefix(&all, &[kind]).len();
        if n < 3 {
            o.passed = false;
            o.detail += &format!(", only {n} {kind}instances");
        }
    }
    o.detail += &format!(" over {} fixtures", np_fixtures().len());
    o
}

fn criterion_7() -> Outcome {
    let e = by_prefix(
        &constructions(),
        &["commutator algebra ", "commutator of E15"],
    );
    let mut o = summarize(&e.iter().collect::<Vec<_>>());
    o.passed &= e.len() == novikov_fixtures().len() + 1;
    o
}

fn criterion_8() -> Outcome {
    let e = by_prefix(
        &constructions(),
        &[
            "poisson2d",
            "commutator-bracket",
            "A1 ",
            "A2 ",
            "gd-tp",
            "rota-baxter",
        ],
    );
    let witnessed = e
        .iter()
        .filter(|x| x.name.contains("violates"))
        .all(|x| x.witness.is_some());
    let mut o = summarize(&e.iter().collect::<Vec<_>>());
    if !witnessed {
        o.passed = false;
        o.detail += ", violation without witness";
    }
    o
}

fn criterion_9() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for d in [r(0, 1), r(2, 1), r(3, 1), r(-1, 1)] {
        let start = Instant::now();
        let dims: Vec<usize> = (1..=4)
            .map(|n| component_dim(&DeltaArg::Value(d.clone()), n).unwrap().dim)
            .collect();
        ok &= dims[..3] == [1, 2, 6] && dims[3] <= 14;
        ok &= start.elapsed() < Duration::from_secs(30);
        detail.push(format!("delta={d}: {dims:?}"));
    }
    let c = component_dim(&DeltaArg::Symbolic, 3).unwrap();
    let minus_one = DeltaPoly::linear_root(&Rational::one());
    let has = c.exceptional_factors.contains(&minus_one);
    ok &= has;
    let fs: Vec<String> = c
        .exceptional_factors
        .iter()
        .map(|f| f.to_string())
        .collect();
    detail.push(format!("symbolic degree 3 factors [{}]", fs.join(", ")));
    outcome(ok, detail.join("; "))
}

fn criterion_10() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in [r(0, 1), r(2, 1)] {
        let start = Instant::now();
        let k = koszul_obstruction(&d).unwrap();
        let expected = (Rational::from_int(240) - Rational::from_int(15 * k.beta as i64)
            + Rational::from_int(k.alpha as i64))
            / Rational::from_int(60);
        let elapsed = start.elapsed();
        ok &= k.coefficient == expected && !k.coefficient.is_zero() && k.nonzero;
        ok &= elapsed < Duration::from_secs(600);
        detail.push(format!(
            "delta={d}: beta {}, alpha {}, coefficient {} ({:.1}s)",
            k.beta,
            k.alpha,
            k.coefficient,
            elapsed.as_secs_f64()
        ));
    }
    outcome(ok, detail.join("; "))
}

fn criterion_11() -> Outcome {
    let rep = dual_relations_via_lie_admissibility(&Scalar::delta()).unwrap();
    outcome(
        rep.rank == 6 && rep.right_novikov_rank == 6 && rep.equal,
        format!(
            "rank {}, right-novikov rank {}, equal {}",
            rep.rank, rep.right_novikov_rank, rep.equal
        ),
    )
}

fn criterion_12() -> Outcome {
    let mut bad = Vec::new();
    let mut all_false = Vec::new();
    for name in novikov_fixtures() {
        let t = corpus::load(name, &Default::default())
            .unwrap()
            .first_algebra()
            .table;
        let s = solvability(&t);
        let contained = [(0, 1), (0, 2), (1, 1), (1, 2)]
            .iter()
            .all(|&(m, n)| power_containment(&t, m, n));
        if !s.right_nilpotent && !s.square_nilpotent && !s.solvable {
            all_false.push(name);
        }
        if !(s.consistent() && contained) {
            bad.push(format!(
                "{name}: right nilpotent {}, square nilpotent {}, solvable {}, containments {}",
                s.right_nilpotent, s.square_nilpotent, s.solvable, contained
            ));
        }
    }
    let detail = if bad.is_empty() {
        format!("all agree; all three false on {all_false:?}")
    } else {
        bad.join("; ")
    };
    outcome(bad.is_empty() && !all_false.is_empty(), detail)
}

fn random_rational(rng: &mut StdRng) -> Rational {
    r(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_vector(rng: &mut StdRng, n: usize) -> Vector {
    (0..n)
        .map(|_| Scalar::from_rational(random_rational(rng)))
        .collect()
}

fn random_table(rng: &mut StdRng, n: usize) -> Table {
    let mut t = Table::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(i, j, k, Scalar::from_int(rng.gen_range(-2..=2)));
            }
        }
    }
    t
}

fn criterion_13() -> Outcome {
    let mut rng = StdRng::seed_from_u64(13);
    let mut failures = Vec::new();
    let mut trials = 0usize;
    for name in corpus::names() {
        let fx = corpus::fixture(name).unwrap();
        let b = fx.default_bindings();
        let loaded = fx.instantiate(&b).unwrap();
        let declared = fx.declared_delta(&b).unwrap();
        let mut fams = vec![catalog("delta-novikov", &Scalar::from_int(3)).unwrap()];
        for c in &fx.checks {
            let d = if c.delta == "delta" {
                declared.clone().unwrap_or_else(Scalar::delta)
            } else {
                parse_scalar(&c.delta).unwrap_or_else(|_| Scalar::delta())
            };
            fams.push(catalog(&c.family, &d).unwrap());
        }
        for fam in &fams {
            for id in &fam.identities {
                let Ok(basis) = check(id, &loaded) else {
                    continue;
                };
                let mut zero = true;
                for _ in 0..50 {
                    let vs: Vec<Vector> = (0..id.arity)
                        .map(|_| random_vector(&mut rng, loaded.dim()))
                        .collect();
                    let v = evaluate_vectors(id, &loaded, &vs).unwrap();
                    zero &= v.iter().all(Scalar::is_zero);
                    trials += 1;
                }
                if zero != basis.satisfied() {
                    failures.push(format!("multilinearity {name}/{}", id.name));
                }
            }
        }
        let t = loaded.first_algebra().table;
        if t.is_constant() {
            let sys = derivation_system(&t, &Scalar::delta());
            let generic = rank_and_nullspace(&sys);
            for _ in 0..5 {
                let d = random_rational(&mut rng);
                let at = rank_at(&sys, &d).unwrap();
                let exceptional = generic
                    .pivot_denominators
                    .iter()
                    .any(|p| p.eval(&d).is_zero());
                if at > generic.rank || (!exceptional && at != generic.rank) {
                    failures.push(format!("specialization {name} at {d}"));
                }
            }
        }
        for kind in SeriesKind::ALL {
            let s = series(&t, kind);
            let monotone = s.dims.windows(2).all(|w| w[0] >= w[1]);
            if !monotone || s.terminated != (s.dims.last() == Some(&0)) {
                failures.push(format!("series {name} {kind:?}"));
            }
        }
    }
    let generic = component_dim(&DeltaArg::Symbolic, 3).unwrap();
    for _ in 0..5 {
        let d = random_rational(&mut rng);
        let at = component_dim(&DeltaArg::Value(d.clone()), 3).unwrap();
        let exceptional = generic
            .exceptional_factors
            .iter()
            .any(|f| f.eval(&d).is_zero());
        if at.rank > generic.rank || (!exceptional && at.rank != generic.rank) {
            failures.push(format!("operad specialization at {d}"));
        }
    }
    for _ in 0..50 {
        let t = random_table(&mut rng, 3);
        for kind in SeriesKind::ALL {
            let s = series(&t, kind);
            if !s.dims.windows(2).all(|w| w[0] >= w[1])
                || s.terminated != (s.dims.last() == Some(&0))
            {
                failures.push(format!("series random {kind:?}"));
            }
        }
    }
    if failures.is_empty() {
        outcome(true, format!("{trials} random evaluations, no failures"))
    } else {
        outcome(false, failures.join("; "))
    }
}

type Criterion = (u32, u64, fn() -> Outcome);

fn main() {
    // (number, runtime bound in seconds, check)
    let criteria: [Criterion; 13] = [
        (1, 5, criterion_1),
        (2, 10, criterion_2),
        (3, 1, criterion_3),
        (4, 1, criterion_4),
        (5, 1, criterion_5),
        (6, 10, criterion_6),
        (7, 10, criterion_7),
        (8, 5, criterion_8),
        (9, 120, criterion_9),
        (10, 1200, criterion_10),
        (11, 5, criterion_11),
        (12, 5, criterion_12),
        (13, 600, criterion_13),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (n, limit, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|a| a == &n.to_string()) {
            continue;
        }
        let start = Instant::now();
        let o = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| outcome(false, "panicked"));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let passed = o.passed && in_time;
        if !passed {
            failed += 1;
        }
        println!(
            "criterion {n}: {} ({:.2}s{}) {}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time {
                String::new()
            } else {
                format!(", over {limit}s")
            },
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
