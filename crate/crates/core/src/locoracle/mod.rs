//! Brute-force torus localization on `P^1` for split bundles, with exact
//! Laurent bookkeeping in the equivariant parameter.

mod factors;
mod spec;
mod sums;

pub use spec::{compositions, subsets, FixedLocus, OracleConfig, SplitBundleSpec};
pub use sums::{raw_higher_rank, raw_punctual_dual, raw_punctual_exterior, raw_punctual_sym};
