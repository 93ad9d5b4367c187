//! Good involutions of `B_k` and separated k-sets.

pub mod good;
pub mod separated;

pub use good::{
    enumerate_good, is_good, neat_count, pred, stat_a, stat_c, stat_d, succ, succ_labelled,
    symmetric_involutions, x_deleted, x_element, GoodInvolution, Successor,
};
pub use separated::{
    binomial, binomial_sum, count_separated, enumerate_separated, shift_separated, SeparatedSet,
};
