//! Partitions and Schur polynomials of the roots of a monic polynomial.

mod basis;
mod partition;
mod schur;

pub use basis::{charpoly_coeffs, elementary_from_charpoly, homogeneous_from_elementary, SymBasis};
pub use partition::Partition;
pub use schur::{
    alternant_normalize, schur_jt, schur_jt_with_cap, schur_ssyt_oracle, JtMode,
    DEFAULT_E_MODE_CAP,
};
