//! One line per acceptance criterion. Exact identities only, so there are no
//! numeric tolerances; the time limits below are the only thresholds.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_core::verify::*;
use hecke_core::{cyclotomic, BivarPoly};

const W0K_K6_LIMIT: Duration = Duration::from_secs(10);
const FK_LIMIT: Duration = Duration::from_secs(5);
const MAIN_SWEEP_LIMIT: Duration = Duration::from_secs(60);
const MAIN_RANK7_LIMIT: Duration = Duration::from_secs(15 * 60);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn from_reports(reports: &[VerificationReport], extra: Vec<(bool, String)>, summary: String) -> Self {
        let mut failures: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
        failures.extend(extra.into_iter().filter(|(ok, _)| !ok).map(|(_, why)| why));
        Outcome {
            pass: failures.is_empty(),
            summary,
            failures,
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn within(label: &str, took: Duration, limit: Duration) -> (bool, String) {
    (
        took < limit,
        format!("{label} took {took:.2?}, limit {limit:.0?}"),
    )
}

fn pairs(min_k: usize, max_sum: usize) -> Vec<(usize, usize)> {
    (min_k..=max_sum)
        .flat_map(|k| (0..=max_sum - k).map(move |n| (n, k)))
        .collect()
}

fn w0k_closed_form() -> Outcome {
    let mut reports: Vec<_> = (1..=5).map(verify_w0k).collect();
    let (r6, t6) = timed(|| verify_w0k(6));
    reports.push(r6);
    let bumped = closed_form_with(4, |k, w| {
        let c = closed_form_coefficient(k, w)?;
        Ok(if w.a_neg() == k { c * BivarPoly::p() } else { c })
    })
    .expect("closed form");
    let mutant = verify_w0k_against(4, &bumped);
    let caught = !mutant.passed() && mutant.witness.as_ref().is_some_and(|w| !w.mismatches.is_empty());
    Outcome::from_reports(
        &reports,
        vec![
            within("k = 6", t6, W0K_K6_LIMIT),
            (caught, "perturbed closed form was not rejected with a witness".into()),
        ],
        format!("T_(w_0,k)^2 equals the closed form, k = 1..6 (k = 6 in {t6:.2?}); perturbed form rejected"),
    )
}

fn fk_triple() -> Outcome {
    let (reports, took): (Vec<_>, _) = timed(|| (1..=8).map(verify_fk).collect());
    Outcome::from_reports(
        &reports,
        vec![within("k = 1..8", took, FK_LIMIT)],
        format!("f_k direct = recurrence = separated-set sum, k = 1..8 ({took:.2?})"),
    )
}

fn base_case() -> Outcome {
    let reports: Vec<_> = (2..=8).map(|k| verify_base_case_with(k, k <= 6)).collect();
    let printed = |k: usize, text: &str| {
        let reduced = cyclotomic(k).unwrap().reduce(&f_k_direct(k));
        (
            reduced.to_string() == text,
            format!("f_{k} mod Phi_{k} is {reduced}, printed value {text}"),
        )
    };
    Outcome::from_reports(
        &reports,
        vec![printed(2, "1 + p^2"), printed(3, "1 - p^3")],
        "f_k = 1 + (-p)^k mod Phi_k(q), k = 2..8; f_2 -> 1 + p^2, f_3 -> 1 - p^3".into(),
    )
}

fn main_theorem() -> Outcome {
    let (mut reports, sweep): (Vec<_>, _) =
        timed(|| pairs(2, 6).into_iter().map(|(n, k)| verify_main(n, k)).collect());
    let (seven, t7): (Vec<_>, _) = timed(|| {
        (2..=7).map(|k| verify_main(7 - k, k)).collect()
    });
    reports.extend(seven);
    Outcome::from_reports(
        &reports,
        vec![
            within("n + k <= 6 sweep", sweep, MAIN_SWEEP_LIMIT),
            within("n + k = 7", t7, MAIN_RANK7_LIMIT),
        ],
        format!(
            "trivial quotient of z_(w_n,k) = (1 + (-p)^k) T_1 mod Phi_k, n + k <= 6 ({sweep:.2?}) and n + k = 7 ({t7:.2?})"
        ),
    )
}

fn conj_lemma() -> Outcome {
    let reports: Vec<_> = (1..=5).map(verify_conj_lemma).collect();
    Outcome::from_reports(&reports, vec![], "T_x T_w T_(x^-1) expansion for every good w, k = 1..5".into())
}

fn tc_identity() -> Outcome {
    let reports: Vec<_> = pairs(2, 5).into_iter().map(|(n, k)| verify_tc_identity(n, k)).collect();
    Outcome::from_reports(&reports, vec![], "T_(c^-1) T_c expansion, n + k + 1 <= 6".into())
}

fn baby_succ() -> Outcome {
    let reports: Vec<_> = pairs(1, 5).into_iter().map(|(n, k)| verify_baby_succ(n, k)).collect();
    Outcome::from_reports(&reports, vec![], "conjugation by c between cosets, exhaustive for n + k <= 5".into())
}

fn counting() -> Outcome {
    let mut reports: Vec<_> = (1..=12).map(verify_separated_count).collect();
    reports.extend((0..=30).map(verify_binom));
    Outcome::from_reports(
        &reports,
        vec![],
        "separated-set counts for k <= 12; alternating binomial sum = 1 for i <= k <= 30".into(),
    )
}

fn succ_partition() -> Outcome {
    let reports: Vec<_> = (1..=6).map(verify_succ).collect();
    Outcome::from_reports(
        &reports,
        vec![],
        "G_(k+1) = disjoint union of Succ(w), Pred inverse, statistics transport, k <= 6".into(),
    )
}

fn oracles() -> Outcome {
    let checks = [
        ("Cayley BFS lengths on B_4", common::length_oracle(4)),
        ("group algebra at p = q = 1 on B_3", common::group_algebra_oracle(3)),
        ("reduced words on B_4", common::reduced_word_oracle(4, 6)),
    ];
    let extra = checks
        .iter()
        .map(|(name, r)| (r.is_ok(), format!("{name}: {}", r.as_ref().err().cloned().unwrap_or_default())))
        .collect();
    let counts: Vec<String> = checks
        .iter()
        .map(|(name, r)| format!("{name} ({})", r.as_ref().map_or(0, |n| *n)))
        .collect();
    Outcome::from_reports(&[], extra, counts.join("; "))
}

fn matrix_check() -> Outcome {
    let reports: Vec<_> = (2..=8).map(verify_hecke_parameter).collect();
    Outcome::from_reports(&reports, vec![], "(T - 1)(T + Q) = 0 with Q = -(-p)^k, k = 2..8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1", w0k_closed_form),
        ("2", fk_triple),
        ("3", base_case),
        ("4", main_theorem),
        ("5", conj_lemma),
        ("6", tc_identity),
        ("7", baby_succ),
        ("8", counting),
        ("9", succ_partition),
        ("10", oracles),
        ("11", matrix_check),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let outcome = run();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status}  {}", outcome.summary);
        for f in &outcome.failures {
            for line in f.lines() {
                println!("    {line}");
            }
        }
        failed += usize::from(!outcome.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
