//! Independent two-sided checks of the intermediate identities behind each route.

mod kernel;
mod lemmas;
mod report;
mod series;

pub use kernel::{kernel_property_suite, KERNEL_FAMILIES};
pub use lemmas::{check_l11, check_l12, check_l4, check_schur_cal, check_t_recursion};
pub use report::CheckReport;
pub use series::{check_down, check_fchi, check_w_recursion};

use crate::error::{Error, Result};

/// Check families with a default parameter grid.
pub const FAMILIES: [&str; 8] = [
    "l4",
    "schur_cal",
    "t_recursion",
    "l11",
    "l12",
    "down",
    "W_recursion",
    "fchi",
];

/// Run one family over its default grid, in parameter order.
pub fn default_grid(family: &str) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    match family {
        "l4" => {
            for n in 1..=3 {
                for d in 0..=3 {
                    for k in (0..=d).chain(d + n + 1..=d + n + 2) {
                        out.push(check_l4(n, d, k)?);
                    }
                }
            }
        }
        "schur_cal" => {
            for n in 2..=3 {
                for r in 0..n {
                    for d in 0..=2 {
                        for k in (0..=d).chain([d + n + 1]) {
                            out.push(check_schur_cal(n, r, d, k)?);
                        }
                    }
                }
            }
        }
        "t_recursion" => {
            for n in 1..=3 {
                for r in 0..n {
                    for m in 0..=4 {
                        out.push(check_t_recursion(n, r, m)?);
                    }
                }
            }
        }
        "l11" => {
            for n in 1..=3 {
                for d in 1..=3 {
                    for lp in 1..=4 {
                        out.push(check_l11(n, d, lp)?);
                    }
                }
            }
        }
        "l12" => {
            for n in 1..=3u32 {
                for d in 0..=3u32 {
                    let lo = (n * d) as i64;
                    for chi in lo..=lo + 3 {
                        out.push(check_l12(n, d, chi)?);
                    }
                }
            }
        }
        "down" => {
            for n in 1..=3 {
                for d in 0..=4 {
                    for k in 0..=d {
                        for chi in [-2, 0, 3, 7] {
                            out.push(check_down(n, d, k, chi)?);
                        }
                    }
                }
            }
        }
        "W_recursion" => {
            for n in 1..=3 {
                for l in 0..=2 {
                    for e in 0..=1 {
                        out.push(check_w_recursion(n, l, e, 4, 6)?);
                    }
                }
            }
        }
        "fchi" => {
            for n in 1..=4 {
                for chi in -2..=4 {
                    out.push(check_fchi(n, chi, 8)?);
                }
            }
        }
        other => return Err(Error::Parse(format!("unknown check family '{other}'"))),
    }
    Ok(out)
}

/// Every family's default grid.
pub fn all_default_grids() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for f in FAMILIES {
        out.extend(default_grid(f)?);
    }
    Ok(out)
}
