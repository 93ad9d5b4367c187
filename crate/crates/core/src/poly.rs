//! Integer polynomials in the two Hecke parameters `p` (attached to `t`) and
//! `q` (attached to every `s_i`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_int::IBig;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The monomial `p^p q^q`. Ordered graded-lexicographically: total degree
/// first, then the exponent of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub p: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { p: 0, q: 0 };

    pub fn new(p: u32, q: u32) -> Self {
        Monomial { p, q }
    }

    pub fn degree(self) -> u32 {
        self.p + self.q
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.p + other.p, self.q + other.q)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.p.cmp(&other.p))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `Z[p, q]` in canonical sparse form: terms sorted by
/// [`Monomial`] order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: Vec<(Monomial, IBig)>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<IBig>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn p() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c p^a q^b`.
    pub fn monomial(c: impl Into<IBig>, a: u32, b: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: vec![(Monomial::new(a, b), c)],
        }
    }

    /// Builds a polynomial from arbitrary `(p-exponent, q-exponent, coeff)`
    /// triples, combining repeats and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<IBig>,
    {
        let mut raw: Vec<(Monomial, IBig)> = terms
            .into_iter()
            .map(|(a, b, c)| (Monomial::new(a, b), c.into()))
            .collect();
        raw.sort_by_key(|x| x.0);
        let mut out: Vec<(Monomial, IBig)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        BivarPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &IBig)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> IBig {
        let m = Monomial::new(a, b);
        self.terms
            .binary_search_by(|(tm, _)| tm.cmp(&m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or(IBig::ZERO)
    }

    pub fn degree_p(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.p).max()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.q).max()
    }

    /// Multiplies by `p^a q^b`. Shifting preserves the term order.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        let s = Monomial::new(a, b);
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (m.times(s), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &IBig) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn merge(a: &[(Monomial, IBig)], b: &[(Monomial, IBig)], negate_b: bool) -> Vec<(Monomial, IBig)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (*m, if negate_b { -c } else { c.clone() })),
        );
        out
    }

    /// Exact evaluation at integer points.
    pub fn evaluate(&self, p: &IBig, q: &IBig) -> IBig {
        self.terms.iter().fold(IBig::ZERO, |acc, (m, c)| {
            acc + c * p.pow(m.p as usize) * q.pow(m.q as usize)
        })
    }

    /// Groups the polynomial by powers of `q`: entry `b` holds the
    /// coefficient of `q^b` as a polynomial in `p` (index = exponent).
    pub fn q_slices(&self) -> Vec<Vec<IBig>> {
        let Some(dq) = self.degree_q() else {
            return Vec::new();
        };
        let dp = self.degree_p().unwrap_or(0) as usize;
        let mut out = vec![vec![IBig::ZERO; dp + 1]; dq as usize + 1];
        for (m, c) in &self.terms {
            out[m.q as usize][m.p as usize] = c.clone();
        }
        out
    }

    /// The polynomial `sum_b p_slice_b(p) q^b`, inverse of [`q_slices`](Self::q_slices).
    pub fn from_q_slices(slices: &[Vec<IBig>]) -> Self {
        Self::from_terms(slices.iter().enumerate().flat_map(|(b, row)| {
            row.iter()
                .enumerate()
                .map(move |(a, c)| (a as u32, b as u32, c.clone()))
        }))
    }
}

/// Exact evaluation of `a` at `p = p_val`, `q = q_val`.
pub fn specialize(a: &BivarPoly, p_val: i64, q_val: i64) -> IBig {
    a.evaluate(&IBig::from(p_val), &IBig::from(q_val))
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        BivarPoly {
            terms: BivarPoly::merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        BivarPoly {
            terms: BivarPoly::merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: BivarPoly) -> BivarPoly {
        &self - &rhs
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        self.terms = BivarPoly::merge(&self.terms, &rhs.terms, false);
    }
}

impl AddAssign for BivarPoly {
    fn add_assign(&mut self, rhs: BivarPoly) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        self.terms = BivarPoly::merge(&self.terms, &rhs.terms, true);
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.shift(m.p, m.q).scale(c);
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        BivarPoly::from_terms(self.terms.iter().flat_map(|(ma, ca)| {
            rhs.terms
                .iter()
                .map(move |(mb, cb)| (ma.p + mb.p, ma.q + mb.q, ca * cb))
        }))
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

macro_rules! mixed_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$method(rhs)
            }
        }

        impl $tr<BivarPoly> for &BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

mixed_ops!(Add add, Sub sub, Mul mul);

impl From<i64> for BivarPoly {
    fn from(c: i64) -> Self {
        BivarPoly::constant(c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("p", m.p), ("q", m.q)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Text form `1 - p - p*q + p^2`: terms in graded-lex order, unit
/// coefficients and exponents omitted.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = *c < IBig::ZERO;
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl FromStr for BivarPoly {
    type Err = Error;

    /// Parses the text form produced by `Display`. Factors within a term may
    /// appear in any order and repeat (`2*p*q*p`).
    fn from_str(s: &str) -> Result<Self> {
        let err = |offset: usize, message: String| Error::Parse { offset, message };
        let bytes = s.as_bytes();
        let mut terms: Vec<(u32, u32, IBig)> = Vec::new();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let read_uint = |i: &mut usize| -> Option<&str> {
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            (start < *i).then(|| &s[start..*i])
        };
        skip_ws(&mut i);
        if i == bytes.len() {
            return Err(err(0, "empty polynomial".into()));
        }
        let mut first = true;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-'".into()));
            }
            first = false;
            let mut coeff = IBig::ONE;
            let (mut a, mut b) = (0u32, 0u32);
            let mut factors = 0;
            loop {
                skip_ws(&mut i);
                let start = i;
                if let Some(digits) = read_uint(&mut i) {
                    let v: IBig = digits
                        .parse()
                        .map_err(|_| err(start, format!("bad integer {digits:?}")))?;
                    coeff *= v;
                } else if i < bytes.len() && (bytes[i] == b'p' || bytes[i] == b'q') {
                    let var = bytes[i];
                    i += 1;
                    let mut e = 1u32;
                    skip_ws(&mut i);
                    if i < bytes.len() && bytes[i] == b'^' {
                        i += 1;
                        skip_ws(&mut i);
                        let at = i;
                        let digits =
                            read_uint(&mut i).ok_or_else(|| err(at, "expected exponent".into()))?;
                        e = digits
                            .parse()
                            .map_err(|_| err(at, format!("bad exponent {digits:?}")))?;
                    }
                    if var == b'p' {
                        a += e;
                    } else {
                        b += e;
                    }
                } else {
                    return Err(err(start, "expected integer, 'p' or 'q'".into()));
                }
                factors += 1;
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b'*' {
                    i += 1;
                    continue;
                }
                break;
            }
            debug_assert!(factors > 0);
            terms.push((a, b, if negative { -coeff } else { coeff }));
            skip_ws(&mut i);
        }
        Ok(BivarPoly::from_terms(terms))
    }
}

/// JSON form: a list of `{"p": a, "q": b, "c": "integer-string"}` in
/// graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub p: u32,
    pub q: u32,
    pub c: String,
}

impl BivarPoly {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                p: m.p,
                q: m.q,
                c: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| {
                t.c.parse::<IBig>()
                    .map(|c| (t.p, t.q, c))
                    .map_err(|_| Error::Parse {
                        offset: 0,
                        message: format!("bad coefficient {:?}", t.c),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BivarPoly::from_terms(parsed))
    }
}

impl Serialize for BivarPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        BivarPoly::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}
