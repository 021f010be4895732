//! Reproducible verification suites with machine-readable reports.

mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::DEFAULT_ORACLE_CAP;

pub use suites::run_suite_unreported;

/// Failures listed in full in a report; later ones are only counted.
pub const MAX_LISTED_FAILURES: usize = 20;

/// Parameters of a run. Equal configurations give identical reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    pub r_max: usize,
    pub oracle_cap: usize,
    /// Bound on `sigma(A) + sigma(lam)` (or `sigma(A)`) for enumerated families.
    pub bound: i64,
    pub seed: u64,
    /// Order of the root of unity; suites that need one default to 3.
    pub l: Option<u32>,
    /// Number of seeded random instances in randomized suites.
    pub random: usize,
    /// Test fixture: perturbs one computed coefficient so the harness must fail.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub corrupt: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 2,
            r_max: 4,
            oracle_cap: DEFAULT_ORACLE_CAP,
            bound: 2,
            seed: 0,
            l: None,
            random: 200,
            corrupt: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Domain(format!(
                "n must be at least 2, got {}",
                self.n
            )));
        }
        if self.bound < 0 {
            return Err(Error::Domain(format!(
                "bound must be natural, got {}",
                self.bound
            )));
        }
        if let Some(l) = self.l {
            crate::laurent::CycloScalar::zero(l)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Binomials,
    BasisCount,
    BlmFormulas,
    Formula1,
    Formula2,
    DeltaReduce,
    Relations,
    Triangular,
    Closure,
    PbwIndependence,
    B3Independence,
    Specialization,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Binomials,
        Suite::BasisCount,
        Suite::BlmFormulas,
        Suite::Formula1,
        Suite::Formula2,
        Suite::DeltaReduce,
        Suite::Relations,
        Suite::Triangular,
        Suite::Closure,
        Suite::PbwIndependence,
        Suite::B3Independence,
        Suite::Specialization,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Binomials => "binomials",
            Suite::BasisCount => "basis-count",
            Suite::BlmFormulas => "blm-formulas",
            Suite::Formula1 => "formula1",
            Suite::Formula2 => "formula2",
            Suite::DeltaReduce => "delta-reduce",
            Suite::Relations => "relations",
            Suite::Triangular => "triangular",
            Suite::Closure => "closure",
            Suite::PbwIndependence => "pbw-independence",
            Suite::B3Independence => "b3-independence",
            Suite::Specialization => "specialization",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// A failing instance with the data needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: serde_json::Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub config: RunConfig,
    pub instances: u64,
    pub failure_count: u64,
    /// The first [`MAX_LISTED_FAILURES`] failures in instance order.
    pub failures: Vec<Failure>,
    pub passed: bool,
    /// Suite-specific results such as rank verdicts.
    pub details: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Tally of a suite before it becomes a [`Report`].
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub details: serde_json::Value,
}

impl Outcome {
    pub fn record(
        &mut self,
        instance: impl FnOnce() -> serde_json::Value,
        result: std::result::Result<(), String>,
    ) {
        self.instances += 1;
        if let Err(detail) = result {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(Failure {
                    instance: instance(),
                    detail,
                });
            }
        }
    }

    pub fn merge(&mut self, other: Outcome) {
        self.instances += other.instances;
        self.failure_count += other.failure_count;
        let room = MAX_LISTED_FAILURES - self.failures.len();
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

/// Runs `suite` and assembles its report. Wall time is included only when
/// `timing` is set, so that reports stay byte-identical across runs.
pub fn run_suite(suite: Suite, config: &RunConfig, timing: bool) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let out = run_suite_unreported(suite, config)?;
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(Report {
        suite,
        config: config.clone(),
        instances: out.instances,
        failure_count: out.failure_count,
        passed: out.failure_count == 0,
        failures: out.failures,
        details: out.details,
        wall_time_ms: timing.then_some(elapsed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(
                serde_json::to_string(&s).unwrap(),
                format!("\"{}\"", s.name())
            );
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::Parse(_))));
    }
}
