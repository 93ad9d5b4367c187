use std::collections::{BTreeMap, BTreeSet};

use dashu_int::IBig;

use super::forms::*;
use super::{Check, VerificationReport};
use crate::combinatorics::{
    binomial_sum, count_separated, enumerate_good, enumerate_separated, pred, shift_separated,
    stat_d, succ, succ_labelled, x_deleted, x_element, GoodInvolution, Successor,
};
use crate::cyclotomic::cyclotomic;
use crate::hecke::HeckeElement;
use crate::parabolic::{component_at_w_nk, trivial_quotient, z_coefficient, Parabolic};
use crate::perm::{c_element, coset_membership, w_nk, Generator, SignedPermutation};
use crate::poly::BivarPoly;

fn t(w: &SignedPermutation) -> HeckeElement {
    HeckeElement::t_of(w)
}

fn t_square(w: &SignedPermutation) -> HeckeElement {
    let tw = t(w);
    tw.mul(&tw).expect("same rank")
}

fn sum(rank: usize, terms: Vec<(SignedPermutation, BivarPoly)>) -> HeckeElement {
    HeckeElement::from_terms(rank, terms).expect("terms of the stated rank")
}

/// The closed form of `T_{w_{0,k}}^2` against the engine.
pub fn verify_w0k(k: usize) -> VerificationReport {
    let mut check = Check::new("w0k", &[("k", k as i64)]);
    if let Some(rhs) = check.ok("closed form", closed_form_w0k_square(k)) {
        let lhs = t_square(&w_nk(0, k));
        check.hecke_eq("", &lhs, &rhs);
    }
    check.finish()
}

/// The engine's `T_{w_{0,k}}^2` against an arbitrary candidate.
pub fn verify_w0k_against(k: usize, candidate: &HeckeElement) -> VerificationReport {
    let mut check = Check::new("w0k", &[("k", k as i64)]);
    check.hecke_eq("", &t_square(&w_nk(0, k)), candidate);
    check.finish()
}

/// Agreement of the three computations of `f_k`, the printed `f_1`, `f_2`,
/// the palindromic identity `(-p)^k f_k(1/p, q) = f_k`, and (for `k >= 2`)
/// the value at a primitive `k`-th root of unity.
pub fn verify_fk(k: usize) -> VerificationReport {
    let mut check = Check::new("fk", &[("k", k as i64)]);
    let direct = f_k_direct(k);
    check.eq("recurrence", &direct, &f_k_recurrence(k));
    check.eq("separated sets", &direct, &f_k_separated(k));
    let printed = match k {
        1 => Some("1 - p"),
        2 => Some("1 - (1+q)p + p^2 = 1 - p - p*q + p^2"),
        _ => None,
    };
    if let Some(text) = printed {
        let value: BivarPoly = text.rsplit('=').next().unwrap().trim().parse().expect("literal");
        check.eq(format!("printed value {text}"), &direct, &value);
    }
    match p_reversal(&direct, k) {
        Some(rev) => check.eq("(-p)^k f(1/p, q)", &rev, &direct),
        None => check.mismatch("p-degree", direct.degree_p().unwrap_or(0), format!("<= {k}")),
    }
    if k >= 2 {
        if let Some(phi) = check.ok("cyclotomic", cyclotomic(k)) {
            check.eq(
                "root of unity value",
                &phi.reduce(&direct),
                &phi.reduce(&f_k_at_root_of_unity(k)),
            );
        }
    }
    check.finish()
}

/// `f_k = 1 + (-p)^k mod Phi_k`, with the engine's trivial quotient of
/// `z_{w_{0,k}}` compared to `f_k`.
pub fn verify_base_case(k: usize) -> VerificationReport {
    verify_base_case_with(k, k <= 6)
}

/// As [`verify_base_case`]; `engine` selects whether `T_{w_{0,k}}^2` is
/// also computed in `H(B_k)`.
pub fn verify_base_case_with(k: usize, engine: bool) -> VerificationReport {
    let mut check = Check::new("base", &[("k", k as i64)]);
    let Some(phi) = check.ok("cyclotomic", cyclotomic(k)) else {
        return check.finish();
    };
    let f = f_k_direct(k);
    let target = one_plus_neg_p_pow(k);
    check.eq("f_k mod Phi_k", &phi.reduce(&f), &phi.reduce(&target));
    if k >= 2 {
        check.eq("separated sum", &f_k_at_root_of_unity(k), &target);
    }
    if let Some(from_closed) = check.ok("closed form", f_k_from_closed_form(k)) {
        check.eq("trivial quotient of closed form", &from_closed, &f);
    }
    if engine {
        let quotient = z_coefficient(0, k).and_then(|z| trivial_quotient(&z, 0, k));
        if let Some(tq) = check.ok("engine", quotient) {
            let expected = HeckeElement::monomial(SignedPermutation::identity(0), f);
            check.hecke_eq("engine trivial quotient", &tq, &expected);
        }
    }
    check.finish()
}

fn coefficient(a: u32, b: u32, one_minus_p: u32, one_minus_q: u32) -> BivarPoly {
    BivarPoly::p().pow(a)
        * (BivarPoly::one() - BivarPoly::p()).pow(one_minus_p)
        * BivarPoly::q().pow(b)
        * (BivarPoly::one() - BivarPoly::q()).pow(one_minus_q)
}

/// `T_x T_w T_{x^{-1}}` for every good involution `w` of `B_k`, both in the
/// explicit form and in the successor form.
pub fn verify_conj_lemma(k: usize) -> VerificationReport {
    let mut check = Check::new("conj", &[("k", k as i64)]);
    let rank = k + 1;
    let x = x_element(k);
    let x_inv = x.inverse();
    let tx = t(&x);
    let tx_inv = t(&x_inv);
    for w in enumerate_good(k) {
        let we = w.perm().embed(rank).expect("rank bound");
        let lhs = tx
            .mul(&t(&we))
            .and_then(|h| h.mul(&tx_inv))
            .expect("same rank");

        let a = w.a() as u32;
        let conj = x.compose(&we).and_then(|v| v.compose(&x_inv)).expect("same rank");
        let conj_t = conj.compose(&SignedPermutation::generator(Generator::T, rank).unwrap()).unwrap();
        let mut terms = vec![
            (conj, coefficient(1, a, 0, 0)),
            (conj_t, coefficient(0, a, 1, 0)),
        ];
        for j in 1..=k {
            if we.apply(j as i64) == j as i64 {
                let xj_inv = x_deleted(k, j).expect("1 <= j <= k").inverse();
                let d = stat_d(j, w.perm()).expect("j <= k") as u32;
                terms.push((x.compose(&we).unwrap().compose(&xj_inv).unwrap(), coefficient(0, d, 0, 1)));
            }
        }
        check.hecke_eq(&format!("w={w}"), &lhs, &sum(rank, terms));

        let base = (k as i64, w.a() as i64, w.a_neg() as i64, w.c() as i64);
        let mut terms = Vec::new();
        for s in succ(&w) {
            let (a1, an1, c1) = (s.a() as i64, s.a_neg() as i64, s.c() as i64);
            let (k0, a0, an0, c0) = base;
            let alpha2 = (k0 + 1 + a1 - an1) - (k0 + a0 - an0);
            let delta2 = (k0 + 1 - a1 - an1) - (k0 - a0 - an0);
            let (beta, gamma) = (an1 - an0, c1 - c0);
            let exps = [alpha2, beta, gamma, delta2];
            if alpha2 % 2 != 0 || delta2 % 2 != 0 || exps.iter().any(|&e| e < 0) {
                check.mismatch(format!("successor exponents w={w} w'={s}"), format!("{exps:?}"), "even, nonnegative");
                continue;
            }
            terms.push((
                s.into_perm(),
                coefficient((alpha2 / 2) as u32, gamma as u32, beta as u32, (delta2 / 2) as u32),
            ));
        }
        check.hecke_eq(&format!("successor form w={w}"), &lhs, &sum(rank, terms));
    }
    check.finish()
}

/// `T_{c^{-1}} T_c = q^k T_1 + (1-q) sum_i q^(i-1) T_{s_{n+k}..s_{n+i}..s_{n+k}}`
/// with `c = s_{n+1} ... s_{n+k}` in `B_{n+k+1}`.
pub fn verify_tc_identity(n: usize, k: usize) -> VerificationReport {
    let mut check = Check::new("tc", &[("k", k as i64), ("n", n as i64)]);
    let rank = n + k + 1;
    let c = c_element(n, k);
    let lhs = t(&c.inverse()).mul(&t(&c)).expect("same rank");
    let mut terms = vec![(SignedPermutation::identity(rank), BivarPoly::q().pow(k as u32))];
    for i in 1..=k {
        let coeff = (BivarPoly::one() - BivarPoly::q()) * BivarPoly::q().pow(i as u32 - 1);
        terms.push((tc_term(n, k, i), coeff));
    }
    check.hecke_eq("", &lhs, &sum(rank, terms));
    let group = lhs.specialize(1, 1);
    let unit = vec![(SignedPermutation::identity(rank), IBig::ONE)];
    if group != unit {
        check.mismatch("p = q = 1", format!("{group:?}"), format!("{unit:?}"));
    }
    check.finish()
}

/// `(B_n x S_k) w_{n,k}`, generated as products `u w_{n,k}`.
fn coset(n: usize, k: usize) -> Vec<SignedPermutation> {
    let parabolic = Parabolic::new(n, k);
    let w = w_nk(n, k);
    let mut out: Vec<_> = SignedPermutation::all_elements(n + k)
        .into_iter()
        .filter(|u| parabolic.contains(u))
        .map(|u| u.compose(&w).expect("same rank"))
        .collect();
    out.sort();
    out
}

/// Conjugation by `c` between the cosets for `n` and `n + 1`: additive
/// lengths, landing in the right coset, the converse keyed on `w(n+1)`, and
/// no proper subword `y` of `c` giving `c^{-1} w y` in `B_{n+k}`.
pub fn verify_baby_succ(n: usize, k: usize) -> VerificationReport {
    let mut check = Check::new("baby", &[("k", k as i64), ("n", n as i64)]);
    let m = n + k;
    let c = c_element(n, k);
    let c_inv = c.inverse();
    let lc = c.length();

    let conj = c
        .compose(&w_nk(n, k).embed(m + 1).unwrap())
        .and_then(|v| v.compose(&c_inv))
        .unwrap();
    check.eq("c w_{n,k} c^-1", &conj, &w_nk(n + 1, k));

    let mut images = BTreeSet::new();
    for w in coset(n, k) {
        let we = w.embed(m + 1).unwrap();
        let v = c.compose(&we).and_then(|v| v.compose(&c_inv)).unwrap();
        check.eq(format!("length of c{w}c^-1"), &v.length(), &(lc + w.length() + lc));
        check.holds(
            format!("c{w}c^-1 in the coset for n+1"),
            coset_membership(&v, n + 1, k).unwrap(),
            &v,
        );
        images.insert(v);
    }

    let letters: Vec<Generator> = (n + 1..=n + k).map(Generator::S).collect();
    let proper: Vec<SignedPermutation> = (0u32..(1 << k) - 1)
        .map(|mask| {
            let sub: Vec<_> = letters
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, g)| *g)
                .collect();
            SignedPermutation::from_word(&sub, m + 1).unwrap()
        })
        .collect();

    for w in coset(n + 1, k) {
        let v = c_inv.compose(&w).and_then(|v| v.compose(&c)).unwrap();
        let back = v
            .restrict(m)
            .ok()
            .is_some_and(|r| coset_membership(&r, n, k).unwrap());
        let fixes = w.apply(n as i64 + 1) == n as i64 + 1;
        check.eq(format!("c^-1{w}c in the coset for n vs w(n+1) = n+1"), &back, &fixes);
        check.eq(format!("{w} is c-conjugate of the coset for n"), &images.contains(&w), &fixes);
        for y in &proper {
            let u = c_inv.compose(&w).and_then(|u| u.compose(y)).unwrap();
            check.holds(format!("c^-1{w}{y} outside B_{m}"), u.apply(m as i64 + 1) != m as i64 + 1, &u);
        }
    }
    check.finish()
}

/// The trivial quotient of `z_{w_{n,k}}` is `(1 + (-p)^k) T_1` modulo
/// `Phi_k(q)`.
pub fn verify_main(n: usize, k: usize) -> VerificationReport {
    let mut check = Check::new("main", &[("k", k as i64), ("n", n as i64)]);
    let Some(phi) = check.ok("cyclotomic", cyclotomic(k)) else {
        return check.finish();
    };
    let quotient = z_coefficient(n, k).and_then(|z| trivial_quotient(&z, n, k));
    let Some(tq) = check.ok("engine", quotient) else {
        return check.finish();
    };
    let id = SignedPermutation::identity(n);
    let target = one_plus_neg_p_pow(k);
    let reduced = tq.map_coefficients(|c| phi.reduce(c));
    let expected = HeckeElement::monomial(id.clone(), phi.reduce(&target));
    check.hecke_eq("reduced", &reduced, &expected);
    if n == 0 {
        check.eq("unreduced value", &tq.coefficient(&id), &f_k_direct(k));
    }
    if (n, k) == (0, 2) {
        check.holds(
            "reduction is necessary",
            tq.coefficient(&id) != target,
            tq.coefficient(&id),
        );
    }
    check.finish()
}

/// The alternating binomial sum equals 1 for every `0 <= i <= k`.
pub fn verify_binom(k: usize) -> VerificationReport {
    let mut check = Check::new("binom", &[("k", k as i64)]);
    for i in 0..=k {
        if let Some(v) = check.ok(format!("i={i}"), binomial_sum(k, i)) {
            check.eq(format!("i={i}"), &v, &IBig::ONE);
        }
    }
    check.finish()
}

/// Separated k-sets: the count by cardinality and closure under shifts.
pub fn verify_separated_count(k: usize) -> VerificationReport {
    let mut check = Check::new("sepcount", &[("k", k as i64)]);
    let all = enumerate_separated(k);
    // k = 1 has the singleton {0} above k/2
    let largest = all.iter().map(|s| s.len()).max().unwrap_or(0);
    for i in 0..=largest.max(k / 2) {
        let counted = IBig::from(all.iter().filter(|s| s.len() == i).count());
        check.eq(format!("i={i}"), &counted, &count_separated(k, i));
    }
    let set: BTreeSet<_> = all.iter().cloned().collect();
    for r in 0..k as i64 {
        let shifted: BTreeSet<_> = all.iter().map(|s| shift_separated(s, r)).collect();
        check.holds(format!("S -> S + {r} is a bijection"), shifted == set, r);
    }
    check.finish()
}

/// `G_{k+1}` is the disjoint union of `Succ(w)` over `G_k`, `Pred` inverts
/// `Succ`, and the statistics move as `a`, `a(-w)`, `c` should.
pub fn verify_succ(k: usize) -> VerificationReport {
    let mut check = Check::new("succ", &[("k", k as i64)]);
    let mut origin: BTreeMap<SignedPermutation, GoodInvolution> = BTreeMap::new();
    for w in enumerate_good(k) {
        let (a, an, c) = (w.a(), w.a_neg(), w.c());
        for (kind, s) in succ_labelled(&w) {
            let at = |what: &str| format!("{what} of {s} from {w}");
            let (first, da, dan, dc) = match kind {
                Successor::Conjugate => (1, a + 1, an, c + a),
                Successor::ConjugateT => (-1, a, an + 1, c + a),
                Successor::Deleted(i) => {
                    let d = stat_d(i, w.perm()).expect("i <= k");
                    (-(i as i64 + 1), a - 1, an, c + d)
                }
            };
            check.eq(at("first entry"), &s.perm().apply(1), &first);
            check.eq(at("a"), &s.a(), &da);
            check.eq(at("a(-w)"), &s.a_neg(), &dan);
            check.eq(at("c"), &s.c(), &dc);
            match pred(&s) {
                Ok(p) => check.eq(at("Pred"), &p.to_string(), &w.to_string()),
                Err(e) => check.mismatch(at("Pred"), e, &w),
            }
            if let Some(prev) = origin.insert(s.perm().clone(), w.clone()) {
                check.mismatch(format!("{s} in two successor sets"), prev, &w);
            }
        }
    }
    let produced: BTreeSet<_> = origin.keys().cloned().collect();
    let expected: BTreeSet<_> = enumerate_good(k + 1).into_iter().map(|g| g.into_perm()).collect();
    for missing in expected.difference(&produced) {
        check.mismatch(format!("{missing} not a successor"), "absent", "present");
    }
    for extra in produced.difference(&expected) {
        check.mismatch(format!("{extra} outside G_{}", k + 1), "present", "absent");
    }
    check.finish()
}

/// `Q = -(-p)^k` and `(T - 1)(T + Q) = 0` for the 2x2 parameter matrix.
pub fn verify_hecke_parameter(k: usize) -> VerificationReport {
    let mut check = Check::new("param", &[("k", k as i64)]);
    let q = -(-BivarPoly::p()).pow(k as u32);
    check.eq("Q", &hecke_parameter(k), &q);
    let rel = quadratic_relation(k);
    for (i, row) in rel.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            check.eq(format!("(T-1)(T+Q)[{i}][{j}]"), e, &BivarPoly::zero());
        }
    }
    check.finish()
}

/// For `T_w T_{w'}` with `w'` in `B_n x S_k`: no `w_{n,k}`-component unless
/// `w` is in the coset, and support inside the coset when it is.
pub fn verify_double_coset(n: usize, k: usize) -> VerificationReport {
    let mut check = Check::new("coset", &[("k", k as i64), ("n", n as i64)]);
    let parabolic = Parabolic::new(n, k);
    let all = SignedPermutation::all_elements(n + k);
    let sub: Vec<_> = all.iter().filter(|u| parabolic.contains(u)).map(t).collect();
    for w in &all {
        let inside = coset_membership(w, n, k).unwrap();
        let tw = t(w);
        for tu in &sub {
            let prod = tw.mul(tu).expect("same rank");
            if inside {
                for v in prod.support() {
                    check.holds(format!("T{w} T_u term T{v}"), coset_membership(v, n, k).unwrap(), v);
                }
            } else {
                let comp = component_at_w_nk(&prod, n, k).expect("same rank");
                check.holds(format!("T{w} T_u component"), comp.is_zero(), &comp);
            }
        }
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for r in [
            verify_w0k(2),
            verify_fk(3),
            verify_base_case(3),
            verify_conj_lemma(2),
            verify_tc_identity(0, 2),
            verify_baby_succ(0, 2),
            verify_main(0, 2),
            verify_binom(6),
            verify_separated_count(6),
            verify_succ(3),
            verify_hecke_parameter(3),
            verify_double_coset(1, 2),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn perturbed_closed_form_fails_with_witness() {
        let bumped = closed_form_with(3, |k, w| {
            let c = closed_form_coefficient(k, w)?;
            Ok(if w.a() == 0 && w.c() == 0 { c * BivarPoly::p() } else { c })
        })
        .unwrap();
        let r = verify_w0k_against(3, &bumped);
        assert!(!r.passed());
        let witness = r.witness.unwrap();
        assert!(witness.total >= 1);
        assert!(witness.mismatches[0].at.starts_with("T["));
    }
}
