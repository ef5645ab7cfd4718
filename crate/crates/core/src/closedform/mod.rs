//! Closed-form generating series.

mod params;
mod formulas;
mod universal;

pub use params::{chi_values, CurveBundleParams, EulerChar};
pub use formulas::{one_minus_y_pow, series_thm1, series_thm2, sym_power_chi, sym_series_thm10, SymT10};
pub use universal::{
    check_fchi, float_spot_check_n2, series_a, series_a_via, series_b, series_bb_rhs, series_w,
    series_w_genus0, universal_f, universal_f_residual, universal_g, FchiCheck,
};
