//! Brute-force oracles and exhaustive theorem suites.
//!
//! Randomness comes from splitmix64: the state advances by
//! `0x9E3779B97F4A7C15` and each output is mixed by
//! `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
//! `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, `z ^ (z >> 31)`
//! (wrapping arithmetic), so streams are easy to reproduce elsewhere.

mod sampling;
mod separation;
mod theorems;

use std::time::Duration;

use serde::Serialize;

pub use sampling::{random_elem, random_positive, sample_semidirect_points, Rng};
pub use separation::{cross_check_separation, farkas_dichotomy, fm_sampling_soundness, random_system};
pub use theorems::{oracle_hull, run_caratheodory, run_helly, run_kakutani, run_pasch, run_radon};

/// Environment variable that overrides suite seeds.
pub const SEED_ENV: &str = "HYPERCONVEX_SEED";

/// `seed`, unless [`SEED_ENV`] holds a number.
pub fn effective_seed(seed: u64) -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instance: String,
    pub cases: u64,
    /// Cases the suite declined to judge, such as non-generic systems.
    pub skipped: u64,
    /// One replayable description per failing case.
    pub failures: Vec<String>,
    /// Wall time; left out of the serialized report so that reruns compare
    /// byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn new(suite: &str, instance: impl ToString) -> Self {
        SuiteReport {
            suite: suite.into(),
            instance: instance.to_string(),
            cases: 0,
            skipped: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
