//! Good involutions of B_k, their statistics `a`, `d`, `c`, and the
//! Succ/Pred recursion relating G_k and G_{k+1}.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Generator, SignedPermutation};

/// An involution `w` of B_k with `w(i) = i` or `w(i) < 0` for every
/// `1 <= i <= k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodInvolution {
    perm: SignedPermutation,
}

impl GoodInvolution {
    pub fn new(perm: SignedPermutation) -> Result<Self> {
        if is_good(&perm) {
            Ok(GoodInvolution { perm })
        } else {
            Err(Error::NotGood {
                element: perm.to_string(),
            })
        }
    }

    pub fn perm(&self) -> &SignedPermutation {
        &self.perm
    }

    pub fn into_perm(self) -> SignedPermutation {
        self.perm
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    /// The same involution viewed in G_{new_rank}.
    pub fn embed(&self, new_rank: usize) -> Result<Self> {
        Ok(GoodInvolution {
            perm: self.perm.embed(new_rank)?,
        })
    }

    pub fn a(&self) -> usize {
        stat_a(&self.perm)
    }

    /// `a(-w)`.
    pub fn a_neg(&self) -> usize {
        stat_a(&self.perm.negate())
    }

    pub fn c(&self) -> usize {
        stat_c(&self.perm)
    }
}

impl fmt::Display for GoodInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm, f)
    }
}

impl fmt::Debug for GoodInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Good{}", self.perm)
    }
}

pub fn is_good(w: &SignedPermutation) -> bool {
    w.is_involution() && (1..=w.rank() as i64).all(|i| w.apply(i) == i || w.apply(i) < 0)
}

/// G_k, sorted by window. Generated directly: each index is fixed, negated,
/// or paired with a later index `j` via `i -> -j`, `j -> -i`.
pub fn enumerate_good(k: usize) -> Vec<GoodInvolution> {
    fn go(i: usize, window: &mut Vec<i64>, out: &mut Vec<GoodInvolution>) {
        let k = window.len();
        if i == k {
            let perm = SignedPermutation::from_window(window).expect("valid by construction");
            out.push(GoodInvolution { perm });
            return;
        }
        if window[i] != 0 {
            return go(i + 1, window, out);
        }
        let idx = i as i64 + 1;
        for v in [idx, -idx] {
            window[i] = v;
            go(i + 1, window, out);
        }
        for j in i + 1..k {
            if window[j] == 0 {
                window[i] = -(j as i64 + 1);
                window[j] = -idx;
                go(i + 1, window, out);
                window[j] = 0;
            }
        }
        window[i] = 0;
    }
    let mut out = Vec::new();
    go(0, &mut vec![0; k], &mut out);
    out.sort();
    out
}

/// Involutions of S_k (no signs), as elements of B_k, sorted by window.
pub fn symmetric_involutions(k: usize) -> Vec<SignedPermutation> {
    fn go(i: usize, window: &mut Vec<i64>, out: &mut Vec<SignedPermutation>) {
        let k = window.len();
        if i == k {
            out.push(SignedPermutation::from_window(window).expect("valid by construction"));
            return;
        }
        if window[i] != 0 {
            return go(i + 1, window, out);
        }
        window[i] = i as i64 + 1;
        go(i + 1, window, out);
        for j in i + 1..k {
            if window[j] == 0 {
                window[i] = j as i64 + 1;
                window[j] = i as i64 + 1;
                go(i + 1, window, out);
                window[j] = 0;
            }
        }
        window[i] = 0;
    }
    let mut out = Vec::new();
    go(0, &mut vec![0; k], &mut out);
    out.sort();
    out
}

/// Number of fixed points of `w` in `{1..k}`.
pub fn stat_a(w: &SignedPermutation) -> usize {
    (1..=w.rank() as i64).filter(|&j| w.apply(j) == j).count()
}

/// Number of fixed points in `{i+1..k}`; `d(0, w) = a(w)`.
pub fn stat_d(i: usize, w: &SignedPermutation) -> Result<usize> {
    let k = w.rank();
    if i > k {
        return Err(Error::InvalidArgument(format!(
            "d(i, w) needs 0 <= i <= {k}, got {i}"
        )));
    }
    Ok((i as i64 + 1..=k as i64).filter(|&j| w.apply(j) == j).count())
}

/// Number of unordered pairs `{i, j}` that are tidy in `w`:
/// `-w(i) < j` and `-w(j) < i`.
pub fn stat_c(w: &SignedPermutation) -> usize {
    let k = w.rank() as i64;
    let mut count = 0;
    for i in 1..=k {
        for j in i + 1..=k {
            if -w.apply(i) < j && -w.apply(j) < i {
                count += 1;
            }
        }
    }
    count
}

/// Number of neat pairs of an involution `w` of S_k, i.e. pairs tidy in
/// `-w`: `w(j) < i` and `w(i) < j`.
pub fn neat_count(w: &SignedPermutation) -> Result<usize> {
    let positive = (1..=w.rank() as i64).all(|i| w.apply(i) > 0);
    if !positive || !w.is_involution() {
        return Err(Error::NotSymmetricInvolution {
            element: w.to_string(),
        });
    }
    Ok(stat_c(&w.negate()))
}

/// `x = t s_1 s_2 ... s_k` in B_{k+1}.
pub fn x_element(k: usize) -> SignedPermutation {
    let letters: Vec<Generator> = std::iter::once(Generator::T)
        .chain((1..=k).map(Generator::S))
        .collect();
    SignedPermutation::from_word(&letters, k + 1).expect("generators are in range")
}

/// `x_i = t s_1 ... s_{i-1} s_{i+1} ... s_k` in B_{k+1}, for `1 <= i <= k`.
pub fn x_deleted(k: usize, i: usize) -> Result<SignedPermutation> {
    if i == 0 || i > k {
        return Err(Error::InvalidArgument(format!(
            "x_i needs 1 <= i <= {k}, got {i}"
        )));
    }
    let letters: Vec<Generator> = std::iter::once(Generator::T)
        .chain((1..=k).filter(|&j| j != i).map(Generator::S))
        .collect();
    SignedPermutation::from_word(&letters, k + 1)
}

fn conj(x: &SignedPermutation, w: &SignedPermutation, y: &SignedPermutation) -> SignedPermutation {
    x.compose_unchecked(w).compose_unchecked(&y.inverse())
}

/// The successor kinds, in the order [`succ`] returns them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Successor {
    /// `x w x^{-1}`
    Conjugate,
    /// `x w x^{-1} t`
    ConjugateT,
    /// `x w x_i^{-1}` for a fixed point `i` of `w`
    Deleted(usize),
}

/// Succ(w) with the kind of each successor: `x w x^{-1}`, `x w x^{-1} t`,
/// then `x w x_i^{-1}` for every fixed point `i` of `w` in increasing order.
pub fn succ_labelled(w: &GoodInvolution) -> Vec<(Successor, GoodInvolution)> {
    let k = w.rank();
    let x = x_element(k);
    let we = w.perm.embed(k + 1).expect("rank bound");
    let base = conj(&x, &we, &x);
    let mut out = Vec::with_capacity(2 + w.a());
    let with_t = base.mul_generator_right(Generator::T);
    out.push((Successor::Conjugate, base));
    out.push((Successor::ConjugateT, with_t));
    for i in 1..=k {
        if w.perm.apply(i as i64) == i as i64 {
            let xi = x_deleted(k, i).expect("1 <= i <= k");
            out.push((Successor::Deleted(i), conj(&x, &we, &xi)));
        }
    }
    out.into_iter()
        .map(|(kind, perm)| {
            debug_assert!(is_good(&perm), "successor {perm} of {w} is not good");
            (kind, GoodInvolution { perm })
        })
        .collect()
}

pub fn succ(w: &GoodInvolution) -> Vec<GoodInvolution> {
    succ_labelled(w).into_iter().map(|(_, v)| v).collect()
}

/// Pred(w) for `w` in G_{k+1}, keyed on `w(1)`: `x^{-1} w x` if `w(1) = 1`,
/// `x^{-1} w t x` if `w(1) = -1`, `x^{-1} w x_i` if `w(1) = -(i+1)`.
pub fn pred(w: &GoodInvolution) -> Result<GoodInvolution> {
    let rank = w.rank();
    let no_pred = |reason: String| Error::NoPredecessor {
        element: w.to_string(),
        reason,
    };
    if rank == 0 {
        return Err(no_pred("rank 0 has no predecessor".into()));
    }
    let k = rank - 1;
    let x = x_element(k);
    let x_inv = x.inverse();
    let w1 = w.perm.apply(1);
    let lifted = match w1 {
        1 => x_inv.compose_unchecked(&w.perm).compose_unchecked(&x),
        -1 => x_inv
            .compose_unchecked(&w.perm.mul_generator_right(Generator::T))
            .compose_unchecked(&x),
        v if v < -1 => {
            let i = (-v - 1) as usize;
            x_inv
                .compose_unchecked(&w.perm)
                .compose_unchecked(&x_deleted(k, i)?)
        }
        v => return Err(no_pred(format!("w(1) = {v} matches no case"))),
    };
    let perm = lifted
        .restrict(k)
        .map_err(|_| no_pred(format!("{lifted} does not fix {rank}")))?;
    GoodInvolution::new(perm)
}
