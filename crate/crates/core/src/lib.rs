//! Exact Euler characteristics of tautological bundles over Quot schemes of
//! curves, computed by closed forms, symmetric-function determinants, and
//! torus localization, plus the checks that tie the routes together.
//!
//! ```
//! use quotchi::detform::punctual_exterior_det;
//! use quotchi::locoracle::{raw_punctual_exterior, OracleConfig, SplitBundleSpec};
//!
//! let spec = SplitBundleSpec::with_default_weights(&[1, 2], 0);
//! let raw = raw_punctual_exterior(&spec, 2, &OracleConfig::default()).unwrap();
//! assert_eq!(raw, punctual_exterior_det(2, spec.chi(), 2).unwrap());
//! ```

pub mod closedform;
pub mod detform;
pub mod error;
pub mod exactalg;
pub mod identities;
pub mod locoracle;
pub mod symfunc;

pub use error::{Error, Result};
pub use exactalg::{gen_binomial, LaurentEps, MultiPoly, QSeries, Rational, UniSeries};
