//! Signed permutations: the hyperoctahedral groups B_m with simple
//! reflections `t = (-1, 1)` and `s_i = (i, i+1)(-i, -(i+1))`.
//!
//! An element is stored as its window `(w(1), ..., w(m))`. Composition is
//! functional, `(u * v)(i) = u(v(i))`, so right multiplication by a
//! generator acts on positions and left multiplication acts on values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest rank a [`SignedPermutation`] may have.
pub const MAX_RANK: usize = 64;

type Window = SmallVec<[i8; 8]>;

/// A simple reflection of B_m: `t` or one of `s_1, ..., s_{m-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    T,
    S(usize),
}

impl Generator {
    /// Index 0 denotes `t`, index `i >= 1` denotes `s_i`.
    pub fn index(self) -> usize {
        match self {
            Generator::T => 0,
            Generator::S(i) => i,
        }
    }

    pub fn from_index(index: usize) -> Self {
        if index == 0 {
            Generator::T
        } else {
            Generator::S(index)
        }
    }

    pub fn is_valid_for(self, rank: usize) -> bool {
        match self {
            Generator::T => rank >= 1,
            Generator::S(i) => i >= 1 && i < rank,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if self.is_valid_for(rank) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                generator: self.to_string(),
                rank,
            })
        }
    }

    /// All simple reflections of B_rank, `t` first.
    pub fn all(rank: usize) -> Vec<Generator> {
        if rank == 0 {
            return Vec::new();
        }
        std::iter::once(Generator::T)
            .chain((1..rank).map(Generator::S))
            .collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T => write!(f, "t"),
            Generator::S(i) => write!(f, "s{i}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            offset: 0,
            message: format!("unknown generator {s:?}"),
        };
        if s == "t" {
            return Ok(Generator::T);
        }
        let digits = s.strip_prefix('s').ok_or_else(bad)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        Ok(Generator::S(i))
    }
}

/// An element of B_m, the group of permutations `w` of `{±1, ..., ±m}` with
/// `w(-i) = -w(i)`. Rank 0 is the trivial group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Window,
}

impl SignedPermutation {
    pub fn identity(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
        SignedPermutation {
            window: (1..=rank as i8).collect(),
        }
    }

    /// Builds an element from its window, validating that it is a signed
    /// permutation.
    pub fn from_window(window: &[i64]) -> Result<Self> {
        let rank = window.len();
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut seen = vec![false; rank + 1];
        for &v in window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > rank {
                return Err(Error::InvalidWindow {
                    window: window.to_vec(),
                    reason: format!("entry {v} outside ±1..={rank}"),
                });
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidWindow {
                    window: window.to_vec(),
                    reason: format!("absolute value {a} repeated"),
                });
            }
        }
        Ok(SignedPermutation {
            window: window.iter().map(|&v| v as i8).collect(),
        })
    }

    fn from_raw(window: Window) -> Self {
        SignedPermutation { window }
    }

    /// The simple reflection `g` as an element of B_rank.
    pub fn generator(g: Generator, rank: usize) -> Result<Self> {
        g.check_rank(rank)?;
        Ok(Self::identity(rank).mul_generator_right(g))
    }

    /// Evaluates the product `g_1 g_2 ... g_r` of a word in B_rank.
    pub fn from_word(letters: &[Generator], rank: usize) -> Result<Self> {
        let mut w = Self::identity(rank);
        for &g in letters {
            g.check_rank(rank)?;
            w = w.mul_generator_right(g);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> Vec<i64> {
        self.window.iter().map(|&v| v as i64).collect()
    }

    /// `w(i)` for `i` in `{±1, ..., ±m}`.
    pub fn apply(&self, i: i64) -> i64 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.rank());
        let v = self.window[i.unsigned_abs() as usize - 1] as i64;
        if i > 0 {
            v
        } else {
            -v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `u * v`, the map `i -> u(v(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self::from_raw(
            other
                .window
                .iter()
                .map(|&v| self.apply(v as i64) as i8)
                .collect(),
        )
    }

    pub fn inverse(&self) -> Self {
        let mut inv: Window = smallvec::smallvec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = (i + 1) as i8;
            let a = v.unsigned_abs() as usize;
            inv[a - 1] = if v > 0 { pos } else { -pos };
        }
        Self::from_raw(inv)
    }

    /// Coxeter length: inversions `i < j, w(i) > w(j)` plus the sum of
    /// `|w(i)|` over negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut len = 0usize;
        for i in 0..w.len() {
            if w[i] < 0 {
                len += w[i].unsigned_abs() as usize;
            }
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Whether `l(w g) < l(w)`.
    pub fn has_right_descent(&self, g: Generator) -> bool {
        match g {
            Generator::T => self.window[0] < 0,
            Generator::S(i) => self.window[i - 1] > self.window[i],
        }
    }

    /// Whether `l(g w) < l(w)`.
    pub fn has_left_descent(&self, g: Generator) -> bool {
        let pos = |value: usize| -> i8 {
            for (j, &v) in self.window.iter().enumerate() {
                if v.unsigned_abs() as usize == value {
                    let p = (j + 1) as i8;
                    return if v > 0 { p } else { -p };
                }
            }
            unreachable!("window is a signed permutation")
        };
        match g {
            Generator::T => pos(1) < 0,
            Generator::S(i) => pos(i) > pos(i + 1),
        }
    }

    /// `w g`: `t` negates the first entry, `s_i` swaps positions `i, i+1`.
    pub fn mul_generator_right(&self, g: Generator) -> Self {
        let mut w = self.window.clone();
        match g {
            Generator::T => w[0] = -w[0],
            Generator::S(i) => w.swap(i - 1, i),
        }
        Self::from_raw(w)
    }

    /// `g w`: `t` negates the value `±1`, `s_i` exchanges the values `±i`
    /// and `±(i+1)`.
    pub fn mul_generator_left(&self, g: Generator) -> Self {
        let w = self
            .window
            .iter()
            .map(|&v| {
                let a = v.unsigned_abs() as usize;
                let sign = v.signum();
                match g {
                    Generator::T if a == 1 => -v,
                    Generator::S(i) if a == i => sign * (i as i8 + 1),
                    Generator::S(i) if a == i + 1 => sign * i as i8,
                    _ => v,
                }
            })
            .collect();
        Self::from_raw(w)
    }

    /// A reduced word, found by repeatedly stripping the smallest-index right
    /// descent (`t` counts as index 0).
    pub fn reduced_word(&self) -> ReducedWord {
        let rank = self.rank();
        let mut w = self.clone();
        let mut stripped = Vec::with_capacity(rank * rank);
        'outer: loop {
            for g in Generator::all(rank) {
                if w.has_right_descent(g) {
                    w = w.mul_generator_right(g);
                    stripped.push(g);
                    continue 'outer;
                }
            }
            break;
        }
        stripped.reverse();
        ReducedWord {
            letters: stripped,
            rank,
        }
    }

    /// `-w = w_0 w`, the map `i -> -w(i)`.
    pub fn negate(&self) -> Self {
        Self::from_raw(self.window.iter().map(|&v| -v).collect())
    }

    /// The longest element `w_0 = -1` of B_rank.
    pub fn longest(rank: usize) -> Self {
        Self::identity(rank).negate()
    }

    pub fn is_involution(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| self.apply(v as i64) == (i + 1) as i64)
    }

    /// Image in B_new_rank, fixing `m+1, ..., new_rank`.
    pub fn embed(&self, new_rank: usize) -> Result<Self> {
        if new_rank < self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: new_rank,
            });
        }
        if new_rank > MAX_RANK {
            return Err(Error::RankTooLarge(new_rank));
        }
        let mut w = self.window.clone();
        w.extend((self.rank() + 1..=new_rank).map(|v| v as i8));
        Ok(Self::from_raw(w))
    }

    /// Inverse of [`embed`](Self::embed): requires `w` to fix every index
    /// above `new_rank`.
    pub fn restrict(&self, new_rank: usize) -> Result<Self> {
        if new_rank > self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: new_rank,
            });
        }
        let fixes_tail = self.window[new_rank..]
            .iter()
            .enumerate()
            .all(|(j, &v)| v as usize == new_rank + j + 1);
        if !fixes_tail {
            return Err(Error::NotRestrictable {
                element: self.to_string(),
                rank: new_rank,
            });
        }
        Ok(Self::from_raw(self.window[..new_rank].iter().copied().collect()))
    }

    /// Every element of B_rank, sorted.
    pub fn all_elements(rank: usize) -> Vec<Self> {
        assert!(rank <= 10, "enumerating B_{rank} is not supported");
        let mut perms: Vec<Vec<i8>> = vec![Vec::new()];
        for _ in 0..rank {
            let mut next = Vec::with_capacity(perms.len() * rank);
            for p in &perms {
                for v in 1..=rank as i8 {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let mut out = Vec::with_capacity(perms.len() << rank);
        for p in &perms {
            for signs in 0u32..(1 << rank) {
                let w = p
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if signs >> i & 1 == 1 { -v } else { v })
                    .collect();
                out.push(Self::from_raw(w));
            }
        }
        out.sort();
        out
    }
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.window.cmp(&other.window))
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"[1,-3,-2]"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("expected a bracketed window, got {s:?}"),
            })?;
        let mut window = Vec::new();
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let v: i64 = part.trim().parse().map_err(|_| Error::Parse {
                    offset: 0,
                    message: format!("bad window entry {part:?}"),
                })?;
                window.push(v);
            }
        }
        Self::from_window(&window)
    }
}

/// A reduced expression: evaluating the letters left to right gives an
/// element whose length is the number of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<Generator>,
    rank: usize,
}

impl ReducedWord {
    /// Validates that `letters` is a reduced expression in B_rank.
    pub fn new(letters: Vec<Generator>, rank: usize) -> Result<Self> {
        let mut w = SignedPermutation::identity(rank);
        for &g in &letters {
            g.check_rank(rank)?;
            if w.has_right_descent(g) {
                return Err(Error::InvalidArgument(format!(
                    "word {} is not reduced",
                    display_letters(&letters)
                )));
            }
            w = w.mul_generator_right(g);
        }
        Ok(ReducedWord { letters, rank })
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> SignedPermutation {
        SignedPermutation::from_word(&self.letters, self.rank)
            .expect("letters are validated on construction")
    }

    /// The reduced word of the inverse element.
    pub fn reversed(&self) -> ReducedWord {
        ReducedWord {
            letters: self.letters.iter().rev().copied().collect(),
            rank: self.rank,
        }
    }
}

fn display_letters(letters: &[Generator]) -> String {
    letters
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_letters(&self.letters))
    }
}

/// Parses whitespace-separated generator tokens such as `"t s1 t s1"`.
pub fn parse_word(text: &str) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let start = text[offset..].find(token).map_or(offset, |p| offset + p);
        offset = start + token.len();
        let g = token.parse::<Generator>().map_err(|_| Error::Parse {
            offset: start,
            message: format!("unknown generator {token:?}"),
        })?;
        out.push(g);
    }
    Ok(out)
}

/// `w_{n,k}` in B_{n+k}: fixes `1..=n` and sends `n+i` to `-(n+k+1-i)`.
/// This is the longest distinguished right coset representative of
/// `B_n x S_k`; for `n = 0` it is the longest element of B_k.
pub fn w_nk(n: usize, k: usize) -> SignedPermutation {
    let rank = n + k;
    assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
    let window = (1..=n as i8)
        .chain((1..=k).map(|i| -((n + k + 1 - i) as i8)))
        .collect();
    SignedPermutation::from_raw(window)
}

/// `c = s_{n+1} s_{n+2} ... s_{n+k}` in B_{n+k+1}.
pub fn c_element(n: usize, k: usize) -> SignedPermutation {
    let letters: Vec<Generator> = (n + 1..=n + k).map(Generator::S).collect();
    SignedPermutation::from_word(&letters, n + k + 1).expect("generators are in range")
}

/// Whether `w` lies in the right coset `(B_n x S_k) w_{n,k}`, i.e.
/// `w(n+i) < -n` for every `1 <= i <= k`.
pub fn coset_membership(w: &SignedPermutation, n: usize, k: usize) -> Result<bool> {
    if w.rank() != n + k {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: n + k,
        });
    }
    Ok((1..=k).all(|i| w.apply((n + i) as i64) < -(n as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i64]) -> SignedPermutation {
        SignedPermutation::from_window(w).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t1 = SignedPermutation::generator(Generator::T, 1).unwrap();
        assert!(t1.compose(&t1).unwrap().is_identity());
        let s1 = SignedPermutation::generator(Generator::S(1), 2).unwrap();
        let t = SignedPermutation::generator(Generator::T, 2).unwrap();
        assert_eq!(s1.compose(&t).unwrap(), sp(&[-2, 1]));
        let w = sp(&[2, -1, 3]);
        assert_eq!(SignedPermutation::identity(3).compose(&w).unwrap(), w);
        assert!(matches!(
            w.compose(&s1),
            Err(Error::RankMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn generator_multiplication_matches_compose() {
        let w = sp(&[3, -1, -4, 2]);
        for g in Generator::all(4) {
            let gen = SignedPermutation::generator(g, 4).unwrap();
            assert_eq!(w.mul_generator_right(g), w.compose(&gen).unwrap());
            assert_eq!(w.mul_generator_left(g), gen.compose(&w).unwrap());
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(SignedPermutation::identity(5).length(), 0);
        assert_eq!(sp(&[1, -3, -2]).length(), 7);
        assert_eq!(sp(&[-2, -1]).length(), 3);
        for m in 0..8 {
            assert_eq!(SignedPermutation::longest(m).length(), m * m);
        }
    }

    #[test]
    fn descents_agree_with_length() {
        for w in SignedPermutation::all_elements(3) {
            for g in Generator::all(3) {
                let r = w.mul_generator_right(g);
                let l = w.mul_generator_left(g);
                assert_eq!(w.has_right_descent(g), r.length() < w.length());
                assert_eq!(w.has_left_descent(g), l.length() < w.length());
                assert_ne!(r.length(), w.length());
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        assert!(SignedPermutation::identity(3).reduced_word().is_empty());
        let t = SignedPermutation::generator(Generator::T, 1).unwrap();
        assert_eq!(t.reduced_word().letters(), &[Generator::T]);
        let w = sp(&[-2, -1]);
        let word = w.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(word.evaluate(), w);
        assert_eq!(word.to_string(), "t s1 t");
    }

    #[test]
    fn reduced_word_rejects_non_reduced() {
        assert!(ReducedWord::new(vec![Generator::T, Generator::T], 2).is_err());
        assert!(ReducedWord::new(vec![Generator::S(2)], 2).is_err());
        assert!(ReducedWord::new(vec![Generator::T, Generator::S(1)], 2).is_ok());
    }

    #[test]
    fn negate_examples() {
        assert_eq!(SignedPermutation::identity(2).negate(), sp(&[-1, -2]));
        let w = sp(&[3, -1, 2]);
        assert_eq!(w.negate().negate(), w);
    }

    #[test]
    fn w_nk_examples() {
        assert_eq!(w_nk(0, 2), sp(&[-2, -1]));
        assert_eq!(w_nk(1, 2), sp(&[1, -3, -2]));
        assert_eq!(w_nk(0, 1), sp(&[-1]));
        for n in 0..4 {
            for k in 2..5 {
                let w = w_nk(n, k);
                assert!(w.is_involution());
                assert_eq!(w.length(), 2 * n * k + k * (k + 1) / 2);
            }
        }
    }

    #[test]
    fn c_element_shape() {
        // c(n+i) = n+i+1, c(n+k+1) = n+1
        let c = c_element(1, 3);
        assert_eq!(c, sp(&[1, 3, 4, 5, 2]));
        assert_eq!(c.length(), 3);
        let conj = c
            .compose(&w_nk(1, 3).embed(5).unwrap())
            .unwrap()
            .compose(&c.inverse())
            .unwrap();
        assert_eq!(conj, w_nk(2, 3));
    }

    #[test]
    fn coset_membership_examples() {
        assert!(coset_membership(&w_nk(1, 2), 1, 2).unwrap());
        assert!(!coset_membership(&SignedPermutation::identity(3), 1, 2).unwrap());
        let members = SignedPermutation::all_elements(3)
            .into_iter()
            .filter(|w| coset_membership(w, 1, 2).unwrap())
            .count();
        assert_eq!(members, 4);
        assert!(coset_membership(&SignedPermutation::identity(4), 1, 2).is_err());
    }

    #[test]
    fn embed_and_restrict() {
        let w = sp(&[-2, 1]);
        let e = w.embed(4).unwrap();
        assert_eq!(e, sp(&[-2, 1, 3, 4]));
        assert_eq!(e.length(), w.length());
        assert_eq!(e.restrict(2).unwrap(), w);
        assert!(sp(&[1, 3, 2]).restrict(2).is_err());
    }

    #[test]
    fn window_validation_and_text() {
        assert!(SignedPermutation::from_window(&[1, 1]).is_err());
        assert!(SignedPermutation::from_window(&[0]).is_err());
        assert!(SignedPermutation::from_window(&[3, 1]).is_err());
        let w: SignedPermutation = "[1,-3,-2]".parse().unwrap();
        assert_eq!(w.to_string(), "[1,-3,-2]");
        assert_eq!("[]".parse::<SignedPermutation>().unwrap().rank(), 0);
        assert_eq!(
            parse_word("t s1  s12").unwrap(),
            vec![Generator::T, Generator::S(1), Generator::S(12)]
        );
        assert!(matches!(
            parse_word("t s0"),
            Err(Error::Parse { offset: 2, .. })
        ));
    }

    #[test]
    fn all_elements_counts() {
        assert_eq!(SignedPermutation::all_elements(0).len(), 1);
        assert_eq!(SignedPermutation::all_elements(3).len(), 48);
        assert_eq!(SignedPermutation::all_elements(4).len(), 384);
    }
}
