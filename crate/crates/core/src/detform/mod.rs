//! Determinant and Schur-polynomial routes to the genus-0 answers.

mod higher;
mod punctual;
mod roots;

pub use higher::{higher_rank_det_linebundle, higher_rank_exterior_det};
pub use punctual::{
    default_t_order, punctual_dual_det, punctual_exterior_det, punctual_sym_det, sym_min_chi,
};
pub use roots::{RootSystemSpec, SchurCoeffs};
