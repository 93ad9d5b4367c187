//! Sparse T-basis arithmetic in the Hecke algebra `H_{p,q}(B_m)` with
//! quadratic relations `(T_t - 1)(T_t + p) = 0` and `(T_s - 1)(T_s + q) = 0`.

use std::fmt;

use dashu_int::IBig;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Generator, SignedPermutation};
use crate::poly::{BivarPoly, TermJson};

/// The parameter `q(g)` as a monomial exponent pair: `p` for `t`, `q` for
/// every `s_i`.
fn parameter_shift(g: Generator) -> (u32, u32) {
    match g {
        Generator::T => (1, 0),
        Generator::S(_) => (0, 1),
    }
}

pub fn parameter(g: Generator) -> BivarPoly {
    let (a, b) = parameter_shift(g);
    BivarPoly::monomial(1, a, b)
}

/// `sum_w c_w T_w` with every key of rank `rank` and no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    terms: FxHashMap<SignedPermutation, BivarPoly>,
}

impl HeckeElement {
    pub fn zero(rank: usize) -> Self {
        HeckeElement {
            rank,
            terms: FxHashMap::default(),
        }
    }

    /// The unit `T_1`.
    pub fn one(rank: usize) -> Self {
        Self::t_of(&SignedPermutation::identity(rank))
    }

    /// The basis element `T_w`.
    pub fn t_of(w: &SignedPermutation) -> Self {
        Self::monomial(w.clone(), BivarPoly::one())
    }

    /// `c T_w`.
    pub fn monomial(w: SignedPermutation, c: BivarPoly) -> Self {
        let mut h = Self::zero(w.rank());
        if !c.is_zero() {
            h.terms.insert(w, c);
        }
        h
    }

    /// Collects `(w, c_w)` pairs, summing repeated keys.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SignedPermutation, BivarPoly)>,
    {
        let mut h = Self::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            h.add_term(w, c);
        }
        Ok(h)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, w: &SignedPermutation) -> BivarPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &SignedPermutation> + '_ {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedPermutation, &BivarPoly)> + '_ {
        self.terms.iter()
    }

    /// Terms ordered by length of `w`, then by window.
    pub fn sorted_terms(&self) -> Vec<(&SignedPermutation, &BivarPoly)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (w.length(), w, c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    fn add_term(&mut self, w: SignedPermutation, c: BivarPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &BivarPoly) -> Self {
        let mut out = Self::zero(self.rank);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Applies `f` to every coefficient, dropping the terms that vanish.
    pub fn map_coefficients(&self, mut f: impl FnMut(&BivarPoly) -> BivarPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    /// `h T_g`. Each `T_w` becomes `T_{wg}` if `wg` is longer, otherwise
    /// `q(g) T_{wg} + (1 - q(g)) T_w`.
    pub fn mul_generator_right(&self, g: Generator) -> Result<Self> {
        g.check_rank(self.rank)?;
        Ok(self.clone().fold_generator(g, Side::Right))
    }

    /// `T_g h`, the mirror of [`mul_generator_right`](Self::mul_generator_right)
    /// using left descents.
    pub fn mul_generator_left(&self, g: Generator) -> Result<Self> {
        g.check_rank(self.rank)?;
        Ok(self.clone().fold_generator(g, Side::Left))
    }

    fn fold_generator(self, g: Generator, side: Side) -> Self {
        let (a, b) = parameter_shift(g);
        let mut out: FxHashMap<SignedPermutation, BivarPoly> = FxHashMap::default();
        out.reserve(self.terms.len() * 2);
        let mut accumulate = |w: SignedPermutation, c: BivarPoly| match out.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        };
        for (w, c) in self.terms {
            let (descent, moved) = match side {
                Side::Right => (w.has_right_descent(g), w.mul_generator_right(g)),
                Side::Left => (w.has_left_descent(g), w.mul_generator_left(g)),
            };
            if descent {
                let shifted = c.shift(a, b);
                let stay = &c - &shifted;
                accumulate(moved, shifted);
                accumulate(w, stay);
            } else {
                accumulate(moved, c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        HeckeElement {
            rank: self.rank,
            terms: out,
        }
    }

    /// Right multiplication by `T_{g_1} ... T_{g_r}`.
    pub fn mul_word_right(&self, letters: &[Generator]) -> Result<Self> {
        for g in letters {
            g.check_rank(self.rank)?;
        }
        Ok(self.clone().fold_word_right(letters))
    }

    /// Left multiplication by `T_{g_1} ... T_{g_r}`.
    pub fn mul_word_left(&self, letters: &[Generator]) -> Result<Self> {
        for g in letters {
            g.check_rank(self.rank)?;
        }
        let mut h = self.clone();
        for &g in letters.iter().rev() {
            h = h.fold_generator(g, Side::Left);
        }
        Ok(h)
    }

    fn fold_word_right(self, letters: &[Generator]) -> Self {
        letters
            .iter()
            .fold(self, |h, &g| h.fold_generator(g, Side::Right))
    }

    /// Product in the Hecke algebra: every `c_v T_v` of the right factor is
    /// expanded along the reduced word of `v` and folded into the left
    /// factor one generator at a time.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        let mut right: Vec<_> = other.terms.iter().collect();
        right.sort_by(|a, b| a.0.cmp(b.0));
        for (v, cv) in right {
            let word = v.reduced_word();
            let part = self.clone().fold_word_right(word.letters());
            for (w, c) in part.terms {
                out.add_term(w, &c * cv);
            }
        }
        Ok(out)
    }

    /// `h^e`, with `h^0 = T_1`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..e {
            acc = acc.mul(self).expect("same rank");
        }
        acc
    }

    /// Evaluates every coefficient at integer `p`, `q`.
    pub fn specialize(&self, p: i64, q: i64) -> Vec<(SignedPermutation, IBig)> {
        let (p, q) = (IBig::from(p), IBig::from(q));
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.evaluate(&p, &q)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn to_json(&self) -> HeckeElementJson {
        HeckeElementJson {
            rank: self.rank,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| HeckeTermJson {
                    w: w.window(),
                    coeff: c.to_json_terms(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &HeckeElementJson) -> Result<Self> {
        let terms = json
            .terms
            .iter()
            .map(|t| {
                Ok((
                    SignedPermutation::from_window(&t.w)?,
                    BivarPoly::from_json_terms(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(json.rank, terms)
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// `(c) * T[w]` terms joined by ` + `, in the deterministic order.
impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*T{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement(rank {}: {self})", self.rank)
    }
}

/// `{"rank": m, "terms": [{"w": [...], "coeff": [...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeElementJson {
    pub rank: usize,
    pub terms: Vec<HeckeTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeTermJson {
    pub w: Vec<i64>,
    pub coeff: Vec<TermJson>,
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = HeckeElementJson::deserialize(deserializer)?;
        HeckeElement::from_json(&json).map_err(serde::de::Error::custom)
    }
}
