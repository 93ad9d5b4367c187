//! Executable statements: each check recomputes one identity from first
//! principles and reports pass or fail with a witness.

mod checks;
pub mod forms;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;

pub use checks::*;
pub use forms::{
    closed_form_coefficient, closed_form_w0k_square, closed_form_with, f_k_at_root_of_unity,
    f_k_direct, f_k_from_closed_form, f_k_recurrence, f_k_separated, hecke_parameter,
    one_plus_neg_p_pow, p_reversal, parameter_matrix, quadratic_relation, tc_term, Matrix2,
};

/// Witnesses keep at most this many mismatches.
pub const MAX_MISMATCHES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Number of mismatches found, including those not kept.
    pub total: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (&str, Vec<(&str, i64)>) {
        (
            &self.statement,
            self.params.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}", self.statement)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " ({:.1} ms)", self.ms)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  {} mismatch(es)", w.total)?;
            for m in &w.mismatches {
                write!(f, "\n  at {}:\n    lhs = {}\n    rhs = {}", m.at, m.lhs, m.rhs)?;
            }
        }
        Ok(())
    }
}

/// Collects mismatches for one (statement, parameters) check.
pub(crate) struct Check {
    statement: String,
    params: BTreeMap<String, i64>,
    start: Instant,
    mismatches: Vec<Mismatch>,
    total: usize,
}

impl Check {
    pub(crate) fn new(statement: &str, params: &[(&str, i64)]) -> Self {
        Check {
            statement: statement.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            start: Instant::now(),
            mismatches: Vec::new(),
            total: 0,
        }
    }

    pub(crate) fn mismatch(&mut self, at: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) {
        self.total += 1;
        if self.mismatches.len() < MAX_MISMATCHES {
            self.mismatches.push(Mismatch {
                at: at.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub(crate) fn eq<T: PartialEq + fmt::Display>(&mut self, at: impl fmt::Display, lhs: &T, rhs: &T) {
        if lhs != rhs {
            self.mismatch(at, lhs, rhs);
        }
    }

    pub(crate) fn holds(&mut self, at: impl fmt::Display, cond: bool, detail: impl fmt::Display) {
        if !cond {
            self.mismatch(at, detail, "expected to hold");
        }
    }

    /// Unwraps `r`, recording the error as a mismatch.
    pub(crate) fn ok<T>(&mut self, at: impl fmt::Display, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.mismatch(at, format!("error: {e}"), "a value");
                None
            }
        }
    }

    /// Coefficient-wise comparison in the deterministic term order.
    pub(crate) fn hecke_eq(&mut self, label: &str, lhs: &HeckeElement, rhs: &HeckeElement) {
        if lhs.rank() != rhs.rank() {
            self.mismatch(
                format!("{label} rank"),
                lhs.rank(),
                rhs.rank(),
            );
            return;
        }
        let mut support: Vec<_> = lhs.support().chain(rhs.support()).collect();
        support.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        support.dedup();
        for w in support {
            let (l, r) = (lhs.coefficient(w), rhs.coefficient(w));
            if l != r {
                let at = if label.is_empty() { format!("T{w}") } else { format!("{label}: T{w}") };
                self.mismatch(at, l, r);
            }
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let ms = self.start.elapsed().as_secs_f64() * 1e3;
        let (status, witness) = if self.total == 0 {
            (Status::Pass, None)
        } else {
            (
                Status::Fail,
                Some(Witness {
                    total: self.total,
                    mismatches: self.mismatches,
                }),
            )
        };
        VerificationReport {
            statement: self.statement,
            params: self.params,
            status,
            witness,
            ms: (ms * 1e3).round() / 1e3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    All,
    W0k,
    Fk,
    Base,
    Conj,
    Tc,
    Baby,
    Main,
    Binom,
    Succ,
    Param,
    Coset,
}

impl Suite {
    pub const NAMES: [&'static str; 12] = [
        "all", "w0k", "fk", "base", "conj", "tc", "baby", "main", "binom", "succ", "param",
        "coset",
    ];

    const PARTS: [Suite; 11] = [
        Suite::W0k,
        Suite::Fk,
        Suite::Base,
        Suite::Conj,
        Suite::Tc,
        Suite::Baby,
        Suite::Main,
        Suite::Binom,
        Suite::Succ,
        Suite::Param,
        Suite::Coset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::W0k => "w0k",
            Suite::Fk => "fk",
            Suite::Base => "base",
            Suite::Conj => "conj",
            Suite::Tc => "tc",
            Suite::Baby => "baby",
            Suite::Main => "main",
            Suite::Binom => "binom",
            Suite::Succ => "succ",
            Suite::Param => "param",
            Suite::Coset => "coset",
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
        Suite::PARTS
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                ))
            })
    }
}

/// Fixed ranges for checks that never touch the Hecke engine.
pub const FK_MAX: usize = 8;
pub const BASE_MAX: usize = 8;
pub const PARAM_MAX: usize = 8;
pub const BINOM_MAX: usize = 30;
pub const SEPCOUNT_MAX: usize = 12;
pub const SUCC_MAX: usize = 6;
/// Largest rank for the exhaustive double-coset check.
pub const COSET_MAX_RANK: usize = 4;

type Job = Box<dyn Fn() -> VerificationReport + Send + Sync>;

fn job(f: impl Fn() -> VerificationReport + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn jobs(suite: Suite, max_rank: usize) -> Vec<Job> {
    let m = max_rank;
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for part in Suite::PARTS {
                out.extend(jobs(part, m));
            }
        }
        Suite::W0k => {
            for k in 1..=m {
                out.push(job(move || verify_w0k(k)));
            }
        }
        Suite::Fk => {
            for k in 1..=FK_MAX {
                out.push(job(move || verify_fk(k)));
            }
        }
        Suite::Base => {
            for k in 2..=BASE_MAX {
                out.push(job(move || verify_base_case_with(k, k <= m)));
            }
        }
        Suite::Conj => {
            for k in 1..m {
                out.push(job(move || verify_conj_lemma(k)));
            }
        }
        Suite::Tc => {
            for (n, k) in pairs(2, m.saturating_sub(1)) {
                out.push(job(move || verify_tc_identity(n, k)));
            }
        }
        Suite::Baby => {
            for (n, k) in pairs(1, m.saturating_sub(1)) {
                out.push(job(move || verify_baby_succ(n, k)));
            }
        }
        Suite::Main => {
            for (n, k) in pairs(2, m) {
                out.push(job(move || verify_main(n, k)));
            }
        }
        Suite::Binom => {
            for k in 0..=BINOM_MAX {
                out.push(job(move || verify_binom(k)));
            }
            for k in 1..=SEPCOUNT_MAX {
                out.push(job(move || verify_separated_count(k)));
            }
        }
        Suite::Succ => {
            for k in 1..=SUCC_MAX {
                out.push(job(move || verify_succ(k)));
            }
        }
        Suite::Param => {
            for k in 2..=PARAM_MAX {
                out.push(job(move || verify_hecke_parameter(k)));
            }
        }
        Suite::Coset => {
            for (n, k) in pairs(1, m.min(COSET_MAX_RANK)) {
                out.push(job(move || verify_double_coset(n, k)));
            }
        }
    }
    out
}

/// `(n, k)` with `n >= 0`, `k >= min_k`, `n + k <= max_sum`.
fn pairs(min_k: usize, max_sum: usize) -> Vec<(usize, usize)> {
    (min_k..=max_sum)
        .flat_map(|k| (0..=max_sum - k).map(move |n| (n, k)))
        .collect()
}

/// Runs every check of `suite` with Hecke computations bounded by rank
/// `max_rank`; independent checks run in parallel and the reports come back
/// sorted by statement, then parameters.
pub fn run_suite(suite: Suite, max_rank: usize) -> Vec<VerificationReport> {
    let mut reports: Vec<_> = jobs(suite, max_rank).par_iter().map(|j| j()).collect();
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    reports
}
