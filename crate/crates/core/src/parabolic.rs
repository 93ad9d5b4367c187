//! The standard parabolic subgroup `B_n x S_k` of `B_{n+k}`, its distinguished
//! right coset representatives, the induced decomposition
//! `H(B_{n+k}) = sum_x H(B_n x S_k) T_x`, and the trivial-character quotient
//! `C_triv (x)_{H_q(S_k)} H_{p,q}(B_n x S_k) = H_p(B_n)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::perm::{coset_membership, w_nk, Generator, SignedPermutation};
use crate::poly::BivarPoly;

/// `B_n x S_k`, generated by `t, s_1, ..., s_{n-1}` and
/// `s_{n+1}, ..., s_{n+k-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parabolic {
    pub n: usize,
    pub k: usize,
}

impl Parabolic {
    pub fn new(n: usize, k: usize) -> Self {
        Parabolic { n, k }
    }

    pub fn rank(&self) -> usize {
        self.n + self.k
    }

    pub fn contains_generator(&self, g: Generator) -> bool {
        match g {
            Generator::T => self.n >= 1,
            Generator::S(i) => (i >= 1 && i < self.n) || (i > self.n && i < self.n + self.k),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        Generator::all(self.rank())
            .into_iter()
            .filter(|&g| self.contains_generator(g))
            .collect()
    }

    fn check_rank(&self, w: &SignedPermutation) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: w.rank(),
                right: self.rank(),
            })
        }
    }

    /// Whether `w` preserves `±{1..n}` and permutes `{n+1..n+k}` without signs.
    pub fn contains(&self, w: &SignedPermutation) -> bool {
        let n = self.n as i64;
        w.rank() == self.rank()
            && (1..=n).all(|i| w.apply(i).abs() <= n)
            && (n + 1..=self.rank() as i64).all(|i| w.apply(i) > n)
    }

    /// Splits `w = w' x` with `w'` in the subgroup and `x` the minimal-length
    /// element of the coset `(B_n x S_k) w`, by stripping left descents that
    /// lie in the subgroup.
    pub fn distinguished_factor(
        &self,
        w: &SignedPermutation,
    ) -> Result<(SignedPermutation, SignedPermutation)> {
        self.check_rank(w)?;
        let gens = self.generators();
        let mut x = w.clone();
        let mut prefix = Vec::new();
        'outer: loop {
            for &g in &gens {
                if x.has_left_descent(g) {
                    x = x.mul_generator_left(g);
                    prefix.push(g);
                    continue 'outer;
                }
            }
            break;
        }
        let head = SignedPermutation::from_word(&prefix, self.rank())?;
        Ok((head, x))
    }

    pub fn is_distinguished(&self, x: &SignedPermutation) -> bool {
        self.generators().into_iter().all(|g| !x.has_left_descent(g))
    }

    /// Writes an element of the subgroup as the commuting product `u v` with
    /// `u` in B_n and `v` in S_k, returning `u` (rank `n`) and `v` restricted
    /// to `{n+1..n+k}` as an element of rank `k`.
    pub fn split(&self, w: &SignedPermutation) -> Result<(SignedPermutation, SignedPermutation)> {
        if !self.contains(w) {
            return Err(Error::NotInParabolic {
                element: w.to_string(),
                n: self.n,
                k: self.k,
            });
        }
        let window = w.window();
        let u = SignedPermutation::from_window(&window[..self.n])?;
        let shifted: Vec<i64> = window[self.n..].iter().map(|v| v - self.n as i64).collect();
        let v = SignedPermutation::from_window(&shifted)?;
        Ok((u, v))
    }
}

/// The components `z_x` of `h = sum_x z_x T_x`, each supported on
/// `B_n x S_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDecomposition {
    pub n: usize,
    pub k: usize,
    pub components: BTreeMap<SignedPermutation, HeckeElement>,
}

impl ParabolicDecomposition {
    pub fn component(&self, x: &SignedPermutation) -> HeckeElement {
        self.components
            .get(x)
            .cloned()
            .unwrap_or_else(|| HeckeElement::zero(self.n + self.k))
    }

    /// `sum_x z_x T_x`.
    pub fn reassemble(&self) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero(self.n + self.k);
        for (x, z) in &self.components {
            out = out.add(&z.mul(&HeckeElement::t_of(x))?)?;
        }
        Ok(out)
    }
}

pub fn distinguished_factor(
    w: &SignedPermutation,
    n: usize,
    k: usize,
) -> Result<(SignedPermutation, SignedPermutation)> {
    Parabolic::new(n, k).distinguished_factor(w)
}

/// Groups `c_w T_w` by `w = w' x` into `c_w T_{w'}` at component `x`; exact
/// because `T_w = T_{w'} T_x` whenever the lengths add.
pub fn parabolic_decompose(h: &HeckeElement, n: usize, k: usize) -> Result<ParabolicDecomposition> {
    let parabolic = Parabolic::new(n, k);
    if h.rank() != parabolic.rank() {
        return Err(Error::RankMismatch {
            left: h.rank(),
            right: parabolic.rank(),
        });
    }
    let mut grouped: BTreeMap<SignedPermutation, Vec<(SignedPermutation, BivarPoly)>> = BTreeMap::new();
    for (w, c) in h.iter() {
        let (head, x) = parabolic.distinguished_factor(w)?;
        grouped.entry(x).or_default().push((head, c.clone()));
    }
    let components = grouped
        .into_iter()
        .map(|(x, terms)| Ok((x, HeckeElement::from_terms(parabolic.rank(), terms)?)))
        .collect::<Result<_>>()?;
    Ok(ParabolicDecomposition { n, k, components })
}

/// The image of `h` (supported on `B_n x S_k`) under `T_{uv} -> T_u`, an
/// element of `H_p(B_n)` of rank `n`. For `n = 0` the result is a multiple
/// of the rank-0 unit.
pub fn trivial_quotient(h: &HeckeElement, n: usize, k: usize) -> Result<HeckeElement> {
    let parabolic = Parabolic::new(n, k);
    if h.rank() != parabolic.rank() {
        return Err(Error::RankMismatch {
            left: h.rank(),
            right: parabolic.rank(),
        });
    }
    let mut terms = Vec::with_capacity(h.len());
    for (w, c) in h.iter() {
        let (u, _) = parabolic.split(w)?;
        terms.push((u, c.clone()));
    }
    HeckeElement::from_terms(n, terms)
}

/// The component at `x = w_{n,k}` of `T_{w_{n,k}}^2`, computed by the
/// engine in `H(B_{n+k})`.
pub fn z_coefficient(n: usize, k: usize) -> Result<HeckeElement> {
    let w = w_nk(n, k);
    let tw = HeckeElement::t_of(&w);
    let square = tw.mul(&tw)?;
    component_at_w_nk(&square, n, k)
}

/// Component of `h` at `w_{n,k}`. Elements of the coset
/// `(B_n x S_k) w_{n,k}` are recognized directly and factor as
/// `(w w_{n,k}) w_{n,k}`.
pub fn component_at_w_nk(h: &HeckeElement, n: usize, k: usize) -> Result<HeckeElement> {
    let w = w_nk(n, k);
    let mut terms = Vec::new();
    for (v, c) in h.iter() {
        if coset_membership(v, n, k)? {
            // w_{n,k} is an involution
            terms.push((v.compose(&w)?, c.clone()));
        }
    }
    HeckeElement::from_terms(n + k, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::cyclotomic;

    fn sp(w: &[i64]) -> SignedPermutation {
        SignedPermutation::from_window(w).unwrap()
    }

    fn poly(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn generators_of_parabolic() {
        use Generator::{S, T};
        assert_eq!(Parabolic::new(0, 3).generators(), vec![S(1), S(2)]);
        assert_eq!(Parabolic::new(2, 2).generators(), vec![T, S(1), S(3)]);
        assert_eq!(Parabolic::new(1, 2).generators(), vec![T, S(2)]);
    }

    #[test]
    fn factor_of_subgroup_element() {
        let par = Parabolic::new(2, 2);
        let w = sp(&[-2, 1, 4, 3]);
        assert!(par.contains(&w));
        assert_eq!(par.distinguished_factor(&w).unwrap(), (w.clone(), SignedPermutation::identity(4)));
    }

    #[test]
    fn factor_of_coset_element() {
        let par = Parabolic::new(1, 2);
        let wnk = w_nk(1, 2);
        for u in SignedPermutation::all_elements(3).into_iter().filter(|u| par.contains(u)) {
            let w = u.compose(&wnk).unwrap();
            assert_eq!(par.distinguished_factor(&w).unwrap(), (u, wnk.clone()));
        }
    }

    #[test]
    fn factorization_is_length_additive() {
        let par = Parabolic::new(1, 2);
        for w in SignedPermutation::all_elements(3) {
            let (head, x) = par.distinguished_factor(&w).unwrap();
            assert!(par.contains(&head));
            assert!(par.is_distinguished(&x));
            assert_eq!(head.compose(&x).unwrap(), w);
            assert_eq!(w.length(), head.length() + x.length());
        }
        assert!(par.distinguished_factor(&SignedPermutation::identity(4)).is_err());
    }

    #[test]
    fn decompose_distinguished_basis_element() {
        let x = w_nk(1, 2);
        let d = parabolic_decompose(&HeckeElement::t_of(&x), 1, 2).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.component(&x), HeckeElement::one(3));
    }

    #[test]
    fn decompose_square_of_w02() {
        let w = w_nk(0, 2);
        let tw = HeckeElement::t_of(&w);
        let sq = tw.mul(&tw).unwrap();
        let d = parabolic_decompose(&sq, 0, 2).unwrap();
        assert_eq!(d.reassemble().unwrap(), sq);
        let z = d.component(&w);
        assert_eq!(z, component_at_w_nk(&sq, 0, 2).unwrap());
        let f2 = trivial_quotient(&z, 0, 2).unwrap();
        assert_eq!(f2.coefficient(&SignedPermutation::identity(0)), poly("1 - p - p*q + p^2"));
    }

    #[test]
    fn trivial_quotient_examples() {
        let h = HeckeElement::from_terms(4, [(sp(&[-2, 1, 4, 3]), poly("q")), (sp(&[-2, 1, 3, 4]), poly("1"))]).unwrap();
        let img = trivial_quotient(&h, 2, 2).unwrap();
        assert_eq!(img.rank(), 2);
        assert_eq!(img.len(), 1);
        assert_eq!(img.coefficient(&sp(&[-2, 1])), poly("1 + q"));
        let outside = HeckeElement::t_of(&sp(&[1, 3, 2, 4]));
        assert!(matches!(trivial_quotient(&outside, 2, 2), Err(Error::NotInParabolic { .. })));
        let n0 = HeckeElement::t_of(&sp(&[2, 1]));
        assert!(trivial_quotient(&n0, 0, 2).unwrap().coefficient(&SignedPermutation::identity(0)).is_one());
    }

    #[test]
    fn z_coefficient_small_cases() {
        let reduce_scalar = |n: usize, k: usize| {
            let z = z_coefficient(n, k).unwrap();
            let m = cyclotomic(k).unwrap();
            trivial_quotient(&z, n, k).unwrap().map_coefficients(|c| m.reduce(c))
        };
        let id0 = SignedPermutation::identity(0);
        assert_eq!(reduce_scalar(0, 2).coefficient(&id0), poly("1 + p^2"));
        assert_eq!(reduce_scalar(0, 3).coefficient(&id0), poly("1 - p^3"));
        let h = reduce_scalar(1, 2);
        assert_eq!(h, HeckeElement::monomial(SignedPermutation::identity(1), poly("1 + p^2")));
    }
}
