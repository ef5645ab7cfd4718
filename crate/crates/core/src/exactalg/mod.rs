//! Exact coefficient arithmetic: rationals, sparse polynomials, truncated
//! series in one or many variables, and Laurent series in `ε`.

mod binomial;
pub mod dense;
mod laurent;
mod mpoly;
mod powerseries;
mod qseries;
mod rational;
mod ring;

pub use binomial::gen_binomial;
#[allow(unused_imports)]
pub(crate) use binomial::binom;
pub use laurent::LaurentEps;
pub use mpoly::MultiPoly;
pub use powerseries::UniSeries;
pub use qseries::QSeries;
pub use rational::Rational;
pub use ring::{determinant, Ring};
