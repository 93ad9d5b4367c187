//! Cyclotomic polynomials in `q` and exact reduction of `Z[p, q]` modulo
//! `Phi_k(q)`, which realizes the specialization of `q` at a primitive
//! `k`-th root of unity without leaving exact arithmetic.

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::poly::BivarPoly;

/// `Phi_k(q)` stored as ascending coefficients; monic of degree `phi(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicModulus {
    k: usize,
    coeffs: Vec<IBig>,
}

impl CyclotomicModulus {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Ascending coefficients of `Phi_k`.
    pub fn coeffs(&self) -> &[IBig] {
        &self.coeffs
    }

    /// Euler's totient of `k`, the degree of `Phi_k`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn as_poly(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(b, c)| (0, b as u32, c.clone())),
        )
    }

    /// Residues of `q^b mod Phi_k` for `b = 0..=max_exp`, each of length
    /// `degree()`.
    fn power_residues(&self, max_exp: usize) -> Vec<Vec<IBig>> {
        let d = self.degree();
        let mut out = Vec::with_capacity(max_exp + 1);
        let mut cur = vec![IBig::ZERO; d];
        if d > 0 {
            cur[0] = IBig::ONE;
        }
        for _ in 0..=max_exp {
            out.push(cur.clone());
            // multiply by q, then replace q^d by -(Phi_k - q^d)
            let top = cur.pop().unwrap_or(IBig::ZERO);
            cur.insert(0, IBig::ZERO);
            for (c, phi) in cur.iter_mut().zip(&self.coeffs) {
                *c -= &top * phi;
            }
        }
        out
    }

    /// The unique representative of `a mod Phi_k(q)` with `q`-degree below
    /// `phi(k)`, coefficients in `Z[p]`.
    pub fn reduce(&self, a: &BivarPoly) -> BivarPoly {
        let Some(dq) = a.degree_q() else {
            return BivarPoly::zero();
        };
        if (dq as usize) < self.degree() {
            return a.clone();
        }
        let residues = self.power_residues(dq as usize);
        let mut terms = Vec::new();
        for (m, c) in a.terms() {
            for (b, r) in residues[m.q as usize].iter().enumerate() {
                if !r.is_zero() {
                    terms.push((m.p, b as u32, c * r));
                }
            }
        }
        BivarPoly::from_terms(terms)
    }
}

fn divisors(k: usize) -> Vec<usize> {
    (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
}

fn mul_univariate(a: &[IBig], b: &[IBig]) -> Vec<IBig> {
    let mut out = vec![IBig::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact long division by a monic polynomial; `None` if the remainder is
/// nonzero.
fn div_exact_monic(num: &[IBig], den: &[IBig]) -> Option<Vec<IBig>> {
    debug_assert!(den.last().is_some_and(|c| c.is_one()));
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return num.iter().all(|c| c.is_zero()).then(Vec::new);
    }
    let mut rem = num.to_vec();
    let mut quot = vec![IBig::ZERO; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in den.iter().enumerate() {
            rem[i + j] -= &lead * c;
        }
        quot[i] = lead;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

/// `Phi_k(q)`, computed as `(q^k - 1) / prod_{d | k, d < k} Phi_d(q)` by
/// exact division.
pub fn cyclotomic(k: usize) -> Result<CyclotomicModulus> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic polynomial needs k >= 1".into(),
        ));
    }
    let mut num = vec![IBig::ZERO; k + 1];
    num[0] = IBig::NEG_ONE;
    num[k] = IBig::ONE;
    let mut den = vec![IBig::ONE];
    for d in divisors(k).into_iter().filter(|&d| d < k) {
        den = mul_univariate(&den, &cyclotomic(d)?.coeffs);
    }
    let coeffs = div_exact_monic(&num, &den)
        .ok_or_else(|| Error::InvalidArgument(format!("q^{k} - 1 not divisible")))?;
    Ok(CyclotomicModulus { k, coeffs })
}

/// `a mod Phi_k(q)`; see [`CyclotomicModulus::reduce`].
pub fn reduce_mod_cyclotomic(a: &BivarPoly, m: &CyclotomicModulus) -> BivarPoly {
    m.reduce(a)
}
