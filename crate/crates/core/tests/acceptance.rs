//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::binomial;
use qschur::hecke::distinguished_reps;
use qschur::laurent::compositions;
use qschur::schur::{theta_matrices, ProductEngine};
use qschur::specialize::{bk_independence, check_kl_trivial};
use qschur::uqgl::{
    b3_family, first_independent_truncation, independence_check, DEFAULT_EVALUATION_POINTS,
};
use qschur::verify::{run_suite, Report, RunConfig, Suite};

type Verdict = Result<String, String>;

/// Name, check, and time budget in seconds.
type Criterion = (&'static str, fn() -> Verdict, u64);

fn suite(s: Suite, cfg: RunConfig) -> Result<Report, String> {
    run_suite(s, &cfg, false).map_err(|e| format!("{s}: {e}"))
}

fn all_pass(reports: &[Report]) -> Verdict {
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    match reports.iter().find(|r| !r.passed) {
        None => Ok(format!("{instances} instances")),
        Some(r) => {
            let first = r
                .failures
                .first()
                .map(|f| format!("{}: {}", f.instance, f.detail))
                .unwrap_or_default();
            Err(format!(
                "{} (n={}): {} of {} instances failed; first: {first}",
                r.suite, r.config.n, r.failure_count, r.instances
            ))
        }
    }
}

fn config(n: usize, r_max: usize) -> RunConfig {
    RunConfig {
        n,
        r_max,
        ..RunConfig::default()
    }
}

fn binomial_identities() -> Verdict {
    all_pass(&[suite(Suite::Binomials, RunConfig::default())?])
}

fn blm_formulas() -> Verdict {
    all_pass(&[
        suite(Suite::BlmFormulas, config(2, 4))?,
        suite(Suite::BlmFormulas, config(3, 4))?,
    ])
}

fn multiplication_formulas() -> Verdict {
    let mut reps = Vec::new();
    for n in [2, 3] {
        reps.push(suite(Suite::Formula1, config(n, 4))?);
        reps.push(suite(Suite::Formula2, config(n, 4))?);
    }
    all_pass(&reps)
}

fn relations() -> Verdict {
    all_pass(&[
        suite(Suite::Relations, config(2, 5))?,
        suite(Suite::Relations, config(3, 5))?,
    ])
}

fn triangular() -> Verdict {
    let cfg = |n| RunConfig {
        bound: 3,
        ..config(n, 4)
    };
    all_pass(&[
        suite(Suite::Triangular, cfg(2))?,
        suite(Suite::Triangular, cfg(3))?,
    ])
}

fn b3_witness() -> Verdict {
    const NOTE: &str = "truncation witness, not a proof";
    let (n, bound, r_max) = (2, 3, 6);
    let (_, fam) = b3_family(n, bound, r_max).map_err(|e| e.to_string())?;
    let v = independence_check(&fam, &DEFAULT_EVALUATION_POINTS);
    if v.independent {
        return Ok(format!(
            "{} elements independent in degrees r <= {r_max} ({NOTE})",
            v.size
        ));
    }
    let first =
        first_independent_truncation(r_max + 1, r_max + 4, |r| Ok(b3_family(n, bound, r)?.1))
            .map_err(|e| e.to_string())?
            .map_or_else(
                || format!("none up to r <= {}", r_max + 4),
                |(r, _)| format!("r <= {r}"),
            );
    Err(format!(
        "{} elements have rank {} in degrees r <= {r_max} ({} coordinates); first independent truncation: {first} ({NOTE})",
        v.size, v.rank, v.coordinates
    ))
}

fn specialization() -> Verdict {
    let engine = ProductEngine::default();
    let mut checked = 0;
    for l in [1, 3] {
        for n in [2, 3] {
            for i in 0..n {
                let rep = check_kl_trivial(n, i, l, 4).map_err(|e| e.to_string())?;
                if !rep.holds {
                    return Err(format!(
                        "K_{i}^{l} != 1 for n={n} in degree {:?}",
                        rep.failing_degree
                    ));
                }
                checked += 1;
            }
            let v = bk_independence(n, 2, l, 5, &engine).map_err(|e| e.to_string())?;
            if !v.independent {
                return Err(format!("l={l}, n={n}: {}", v.note));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} checks"))
}

fn basis_count() -> Verdict {
    for n in 1..=3usize {
        for r in 0..=4usize {
            let theta = theta_matrices(n, r as i64).len() as u64;
            let comps = compositions(n, r as i64);
            let mut cosets = 0;
            for lam in &comps {
                for mu in &comps {
                    cosets += distinguished_reps(lam, mu)
                        .map_err(|e| e.to_string())?
                        .len() as u64;
                }
            }
            let stars = binomial((n * n + r - 1) as u64, r as u64);
            if theta != cosets || theta != stars {
                return Err(format!(
                    "n={n}, r={r}: |Theta| = {theta}, cosets = {cosets}, C(n^2+r-1, r) = {stars}"
                ));
            }
        }
    }
    if theta_matrices(2, 2).len() != 10 {
        return Err("|Theta(2,2)| != 10".into());
    }
    Ok("n <= 3, r <= 4".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("binomial identities", binomial_identities, 10),
        ("BLM formulas vs Hecke oracle", blm_formulas, 120),
        (
            "new multiplication formulas vs componentwise products",
            multiplication_formulas,
            600,
        ),
        ("presentation relations (a)-(g)", relations, 120),
        ("triangular relation", triangular, 300),
        ("B3 family independence at r <= 6", b3_witness, 300),
        ("specialization at roots of unity", specialization, 300),
        ("basis count", basis_count, 10),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let t = start.elapsed();
        let time = format!("{:.1}s, budget {budget}s", t.as_secs_f64());
        let slow = if t > Duration::from_secs(*budget) {
            " [over budget]"
        } else {
            ""
        };
        match verdict {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg} ({time}){slow}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg} ({time}){slow}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
