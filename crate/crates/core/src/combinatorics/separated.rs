//! Separated k-sets: subsets of `{0, ..., k-1}` whose distinct members
//! satisfy `1 < |i - j| < k - 1`, i.e. no two are cyclically adjacent.

use std::fmt;

use dashu_int::IBig;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeparatedSet {
    k: usize,
    members: Vec<usize>,
}

fn separated(k: usize, members: &[usize]) -> bool {
    members.iter().all(|&m| m < k)
        && members.iter().enumerate().all(|(x, &i)| {
            members[x + 1..].iter().all(|&j| {
                let d = i.abs_diff(j);
                1 < d && d + 1 < k
            })
        })
}

impl SeparatedSet {
    pub fn new(k: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        let distinct = members.windows(2).all(|w| w[0] != w[1]);
        if k == 0 || !distinct || !separated(k, &members) {
            return Err(Error::NotSeparated { k, members });
        }
        Ok(SeparatedSet { k, members })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for SeparatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SeparatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sep{}{}", self.k, self)
    }
}

/// All separated k-sets, sorted by cardinality and then members. Built by
/// choosing members left to right with a gap of at least two, rejecting a
/// final member cyclically adjacent to 0.
pub fn enumerate_separated(k: usize) -> Vec<SeparatedSet> {
    fn go(k: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<SeparatedSet>) {
        out.push(SeparatedSet {
            k,
            members: cur.clone(),
        });
        for m in next..k {
            if cur.first() == Some(&0) && k >= 2 && m == k - 1 {
                continue;
            }
            cur.push(m);
            go(k, m + 2, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(k, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    out
}

/// Generalized binomial coefficient: zero for `t < 0` and for `t > n >= 0`,
/// the falling-factorial quotient otherwise (so `C(n, 0) = 1` for all `n`).
pub fn binomial(n: i64, t: i64) -> IBig {
    if t < 0 || (n >= 0 && t > n) {
        return IBig::ZERO;
    }
    let mut num = IBig::ONE;
    let mut den = IBig::ONE;
    for j in 0..t {
        num *= IBig::from(n - j);
        den *= IBig::from(j + 1);
    }
    num / den
}

/// Closed-form count of separated k-sets of cardinality `i`:
/// `C(k-i, i) + C(k-i-1, i-1)`.
pub fn count_separated(k: usize, i: usize) -> IBig {
    let (k, i) = (k as i64, i as i64);
    binomial(k - i, i) + binomial(k - i - 1, i - 1)
}

/// `S + r`: the cyclic shift of every member by `r` modulo `k`.
pub fn shift_separated(s: &SeparatedSet, r: i64) -> SeparatedSet {
    let k = s.k as i64;
    let mut members: Vec<usize> = s
        .members
        .iter()
        .map(|&m| (m as i64 + r).rem_euclid(k) as usize)
        .collect();
    members.sort_unstable();
    debug_assert!(separated(s.k, &members));
    SeparatedSet { k: s.k, members }
}

/// `sum_{j=0}^{i} (-1)^j C(k-2j, i-j) C(k-j, j)`, evaluated exactly.
pub fn binomial_sum(k: usize, i: usize) -> Result<IBig> {
    if i > k {
        return Err(Error::InvalidArgument(format!(
            "binomial sum needs i <= k, got k = {k}, i = {i}"
        )));
    }
    let (k, i) = (k as i64, i as i64);
    Ok((0..=i).fold(IBig::ZERO, |acc, j| {
        let term = binomial(k - 2 * j, i - j) * binomial(k - j, j);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(k: usize) -> Vec<Vec<usize>> {
        enumerate_separated(k)
            .into_iter()
            .map(|s| s.members().to_vec())
            .collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(members(1), vec![vec![], vec![0]]);
        assert_eq!(members(2), vec![vec![], vec![0], vec![1]]);
        assert_eq!(members(3), vec![vec![], vec![0], vec![1], vec![2]]);
        assert_eq!(
            members(4),
            vec![vec![], vec![0], vec![1], vec![2], vec![3], vec![0, 2], vec![1, 3]]
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_separated(6, 2), IBig::from(9));
        assert_eq!(enumerate_separated(6).iter().filter(|s| s.len() == 2).count(), 9);
        assert_eq!(count_separated(1, 1), IBig::from(1));
        assert_eq!(count_separated(5, 0), IBig::from(1));
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), IBig::from(10));
        assert_eq!(binomial(3, -1), IBig::ZERO);
        assert_eq!(binomial(2, 3), IBig::ZERO);
        assert_eq!(binomial(-1, 0), IBig::ONE);
        assert_eq!(binomial(-2, 2), IBig::from(3));
    }

    #[test]
    fn binomial_sum_examples() {
        assert_eq!(binomial_sum(7, 0).unwrap(), IBig::ONE);
        assert_eq!(binomial_sum(7, 7).unwrap(), IBig::ONE);
        assert_eq!(binomial_sum(5, 2).unwrap(), IBig::ONE);
        assert!(binomial_sum(2, 3).is_err());
    }

    #[test]
    fn shifts() {
        let empty = SeparatedSet::new(5, vec![]).unwrap();
        assert_eq!(shift_separated(&empty, 3), empty);
        let one = SeparatedSet::new(5, vec![1]).unwrap();
        assert_eq!(shift_separated(&one, 4).members(), &[0]);
        let s = SeparatedSet::new(6, vec![1, 4]).unwrap();
        assert_eq!(shift_separated(&s, 6), s);
        assert_eq!(shift_separated(&s, -2).members(), &[2, 5]);
    }

    #[test]
    fn validation() {
        assert!(SeparatedSet::new(5, vec![0, 4]).is_err());
        assert!(SeparatedSet::new(5, vec![1, 2]).is_err());
        assert!(SeparatedSet::new(5, vec![5]).is_err());
        assert!(SeparatedSet::new(5, vec![2, 2]).is_err());
        assert!(SeparatedSet::new(5, vec![0, 2]).is_ok());
    }
}
