//! Signed permutations, the two-parameter Hecke algebra of type B, and the
//! combinatorics of the square of the longest element of `B_k` relative to
//! the parabolic subgroup `B_n x S_k`.

pub mod combinatorics;
pub mod cyclotomic;
pub mod error;
pub mod hecke;
pub mod parabolic;
pub mod perm;
pub mod poly;
pub mod verify;

pub use cyclotomic::{cyclotomic, reduce_mod_cyclotomic, CyclotomicModulus};
pub use error::{Error, Result};
pub use hecke::{parameter, HeckeElement};
pub use parabolic::{
    distinguished_factor, parabolic_decompose, trivial_quotient, Parabolic,
    ParabolicDecomposition,
};
pub use perm::{c_element, coset_membership, parse_word, w_nk, Generator, ReducedWord, SignedPermutation};
pub use poly::{specialize, BivarPoly, Monomial};
