//! Closed forms the checks compare the engine against.

use crate::combinatorics::{
    enumerate_good, enumerate_separated, neat_count, symmetric_involutions, GoodInvolution,
};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::perm::SignedPermutation;
use crate::poly::BivarPoly;

fn one_minus(x: &BivarPoly) -> BivarPoly {
    BivarPoly::one() - x
}

/// `num / 2`, or an error naming `element` when `num` is odd or negative.
fn half(num: i64, element: &dyn std::fmt::Display, what: &str) -> Result<u32> {
    if num < 0 || num % 2 != 0 {
        return Err(Error::OddExponent {
            element: element.to_string(),
            reason: format!("{what} = {num}/2"),
        });
    }
    Ok((num / 2) as u32)
}

/// The coefficient of `T_w` in `T_{w_{0,k}}^2`:
/// `p^((k+a(w)-a(-w))/2) (1-p)^a(-w) q^c(w) (1-q)^((k-a(w)-a(-w))/2)`.
pub fn closed_form_coefficient(k: usize, w: &GoodInvolution) -> Result<BivarPoly> {
    let (k, a, an) = (k as i64, w.a() as i64, w.a_neg() as i64);
    let ep = half(k + a - an, w, "p exponent")?;
    let eq = half(k - a - an, w, "(1-q) exponent")?;
    Ok(BivarPoly::p().pow(ep)
        * one_minus(&BivarPoly::p()).pow(an as u32)
        * BivarPoly::q().pow(w.c() as u32)
        * one_minus(&BivarPoly::q()).pow(eq))
}

/// `sum_{w in G_k} coeff(w) T_w` for an arbitrary coefficient rule.
pub fn closed_form_with(
    k: usize,
    coeff: impl Fn(usize, &GoodInvolution) -> Result<BivarPoly>,
) -> Result<HeckeElement> {
    let terms = enumerate_good(k)
        .iter()
        .map(|w| Ok((w.perm().clone(), coeff(k, w)?)))
        .collect::<Result<Vec<_>>>()?;
    HeckeElement::from_terms(k, terms)
}

/// The closed form of `T_{w_{0,k}}^2` as a sum over good involutions.
pub fn closed_form_w0k_square(k: usize) -> Result<HeckeElement> {
    closed_form_with(k, closed_form_coefficient)
}

/// `f_k` as a sum over involutions of `S_k`:
/// `(p(1-q))^((k-a)/2) (1-p)^a q^neat(w)`. `f_0 = 1`.
pub fn f_k_direct(k: usize) -> BivarPoly {
    let pq = BivarPoly::p() * one_minus(&BivarPoly::q());
    let one_p = one_minus(&BivarPoly::p());
    let mut acc = BivarPoly::zero();
    for w in symmetric_involutions(k) {
        let a = crate::combinatorics::stat_a(&w) as u32;
        let neat = neat_count(&w).expect("involution of S_k") as u32;
        acc += pq.pow((k as u32 - a) / 2) * one_p.pow(a) * BivarPoly::q().pow(neat);
    }
    acc
}

/// `f_k` from `f_1 = 1 - p`, `f_2 = 1 - (1+q)p + p^2` and
/// `f_k = p(1 - q^(k-1)) f_{k-2} + (1-p) f_{k-1}`. `f_0 = 1`.
pub fn f_k_recurrence(k: usize) -> BivarPoly {
    let f1: BivarPoly = "1 - p".parse().expect("literal");
    let f2: BivarPoly = "1 - p - p*q + p^2".parse().expect("literal");
    match k {
        0 => return BivarPoly::one(),
        1 => return f1,
        _ => {}
    }
    let one_p = one_minus(&BivarPoly::p());
    let (mut prev, mut cur) = (f1, f2);
    for j in 3..=k as u32 {
        let next = BivarPoly::p() * one_minus(&BivarPoly::q().pow(j - 1)) * &prev + &one_p * &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `f_k` as `sum_{S in Sep_k} p^|S| (1-p)^(k-2|S|) prod_{s in S} (1 - q^s)`.
/// `f_0 = 1`.
pub fn f_k_separated(k: usize) -> BivarPoly {
    if k == 0 {
        return BivarPoly::one();
    }
    let one_p = one_minus(&BivarPoly::p());
    let mut acc = BivarPoly::zero();
    // sets containing 0 carry the factor 1 - q^0 = 0; skipping them also
    // avoids the negative exponent of {0} when k = 1
    for s in enumerate_separated(k).into_iter().filter(|s| !s.members().contains(&0)) {
        let weight = s
            .members()
            .iter()
            .fold(BivarPoly::one(), |w, &m| w * one_minus(&BivarPoly::q().pow(m as u32)));
        acc += BivarPoly::p().pow(s.len() as u32) * one_p.pow((k - 2 * s.len()) as u32) * weight;
    }
    acc
}

/// `sum_{S in Sep_k} p^|S| (1-p)^(k-2|S|)`, the value of `f_k` at a
/// primitive `k`-th root of unity. Needs `k >= 2`.
pub fn f_k_at_root_of_unity(k: usize) -> BivarPoly {
    assert!(k >= 2, "separated-set exponents go negative for k < 2");
    let one_p = one_minus(&BivarPoly::p());
    enumerate_separated(k).iter().fold(BivarPoly::zero(), |acc, s| {
        acc + BivarPoly::p().pow(s.len() as u32) * one_p.pow((k - 2 * s.len()) as u32)
    })
}

/// `1 + (-p)^k`.
pub fn one_plus_neg_p_pow(k: usize) -> BivarPoly {
    BivarPoly::one() + BivarPoly::monomial(if k.is_multiple_of(2) { 1 } else { -1 }, k as u32, 0)
}

/// The parameter `Q = -(-p)^k`.
pub fn hecke_parameter(k: usize) -> BivarPoly {
    BivarPoly::one() - one_plus_neg_p_pow(k)
}

pub type Matrix2 = [[BivarPoly; 2]; 2];

pub fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let entry = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn mat_add_scalar(a: &Matrix2, s: &BivarPoly) -> Matrix2 {
    [
        [&a[0][0] + s, a[0][1].clone()],
        [a[1][0].clone(), &a[1][1] + s],
    ]
}

/// The matrix with rows `(0, -(-p)^k)` and `(1, 1 + (-p)^k)`.
pub fn parameter_matrix(k: usize) -> Matrix2 {
    [
        [BivarPoly::zero(), hecke_parameter(k)],
        [BivarPoly::one(), one_plus_neg_p_pow(k)],
    ]
}

/// `(T - 1)(T + Q)` for `T = parameter_matrix(k)`.
pub fn quadratic_relation(k: usize) -> Matrix2 {
    let t = parameter_matrix(k);
    mat_mul(
        &mat_add_scalar(&t, &-BivarPoly::one()),
        &mat_add_scalar(&t, &hecke_parameter(k)),
    )
}

/// `(-p)^k f(1/p, q)` for `f` of `p`-degree at most `k`: reverse the
/// `p`-coefficients and multiply by `(-1)^k`.
pub fn p_reversal(f: &BivarPoly, k: usize) -> Option<BivarPoly> {
    let k = k as u32;
    if f.degree_p().is_some_and(|d| d > k) {
        return None;
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    Some(BivarPoly::from_terms(
        f.terms().map(|(m, c)| (k - m.p, m.q, c * dashu_int::IBig::from(sign))),
    ))
}

/// The `w_{0,k}`-component of the closed form, pushed through the trivial
/// character of `H_q(S_k)`: the sum of closed-form coefficients over the
/// good involutions with `a(w) = 0`.
pub fn f_k_from_closed_form(k: usize) -> Result<BivarPoly> {
    let mut acc = BivarPoly::zero();
    for w in enumerate_good(k).iter().filter(|w| w.a() == 0) {
        acc += closed_form_coefficient(k, w)?;
    }
    Ok(acc)
}

/// Group elements listed by index so callers can build `T`-basis sums.
pub(crate) fn descending_ascending(n: usize, k: usize, i: usize) -> Vec<usize> {
    // s_{n+k} ... s_{n+i} ... s_{n+k}
    let mut idx: Vec<usize> = (n + i..=n + k).rev().collect();
    idx.extend(n + i + 1..=n + k);
    idx
}

/// `s_{n+k} ... s_{n+i} ... s_{n+k}` in `B_{n+k+1}`.
pub fn tc_term(n: usize, k: usize, i: usize) -> SignedPermutation {
    let letters: Vec<_> = descending_ascending(n, k, i)
        .into_iter()
        .map(crate::perm::Generator::S)
        .collect();
    SignedPermutation::from_word(&letters, n + k + 1).expect("indices below rank")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::w_nk;

    fn poly(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_base_cases() {
        let one = closed_form_w0k_square(1).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one.coefficient(&SignedPermutation::identity(1)), poly("p"));
        assert_eq!(one.coefficient(&w_nk(0, 1)), poly("1 - p"));
        let two = closed_form_w0k_square(2).unwrap();
        assert_eq!(two.len(), 5);
        let neg = SignedPermutation::identity(2).negate();
        assert_eq!(two.coefficient(&neg), poly("1 - 2*p + p^2"));
    }

    #[test]
    fn f_k_small_values() {
        assert_eq!(f_k_direct(1), poly("1 - p"));
        assert_eq!(f_k_direct(2), poly("1 - p - p*q + p^2"));
        let f3 = poly("1 - p - p*q + p^2 + p^2*q - p^3 - p*q^2 + p^2*q^2");
        assert_eq!(f_k_direct(3), f3);
        assert_eq!(f_k_recurrence(3), f3);
        assert_eq!(f_k_separated(3), f3);
        assert_eq!(f_k_from_closed_form(3).unwrap(), f3);
    }

    #[test]
    fn parameter_values() {
        assert_eq!(hecke_parameter(2), poly("-p^2"));
        assert_eq!(hecke_parameter(3), poly("p^3"));
        for k in 2..=8 {
            assert!(quadratic_relation(k).iter().flatten().all(BivarPoly::is_zero));
        }
    }

    #[test]
    fn printed_matrix_entry_fails_the_relation() {
        // -(-p^k) = p^k differs from -(-p)^k exactly when k is even
        let mut t = parameter_matrix(2);
        t[0][1] = BivarPoly::monomial(1, 2, 0);
        let q = hecke_parameter(2);
        let rel = mat_mul(&mat_add_scalar(&t, &-BivarPoly::one()), &mat_add_scalar(&t, &q));
        assert!(!rel.iter().flatten().all(BivarPoly::is_zero));
    }

    #[test]
    fn tc_terms() {
        assert_eq!(descending_ascending(0, 3, 1), vec![3, 2, 1, 2, 3]);
        assert_eq!(descending_ascending(1, 2, 2), vec![3]);
        assert_eq!(tc_term(0, 2, 2).length(), 1);
        assert_eq!(tc_term(0, 3, 1).length(), 5);
    }

    #[test]
    fn reversal() {
        let f2 = f_k_direct(2);
        assert_eq!(p_reversal(&f2, 2).unwrap(), f2);
        assert!(p_reversal(&f2, 1).is_none());
    }
}
