use std::time::Instant;

use super::CheckReport;
use crate::closedform::{self, series_b, series_w_genus0};
use crate::error::{Error, Result};
use crate::exactalg::{gen_binomial, Rational};

/// `C(-χ-N+d(N+1), k) = C(-χ+d(N+1), k) - Σ_{ℓ=1}^{k} (N/ℓ) C((N+1)(ℓ-1), ℓ-1) C(-χ+(d-ℓ)(N+1), k-ℓ)`
pub fn check_down(n: u32, d: u32, k: u32, chi: i64) -> Result<CheckReport> {
    let start = Instant::now();
    if k > d {
        return Err(Error::HypothesisViolated(format!("k={k} exceeds d={d}")));
    }
    let (n, d, k) = (n as i64, d as i64, k as i64);
    let lhs = gen_binomial(-chi - n + d * (n + 1), k)?;
    let mut rhs = gen_binomial(-chi + d * (n + 1), k)?;
    for l in 1..=k {
        let g = gen_binomial((n + 1) * (l - 1), l - 1)? * Rational::new(n, l);
        rhs = rhs - g * gen_binomial(-chi + (d - l) * (n + 1), k - l)?;
    }
    let params = [("N", n), ("d", d), ("k", k), ("chi", chi)];
    Ok(CheckReport::compare("down", &params, lhs, rhs, start))
}

/// `W_{ℓ+1} = W_ℓ B^N` through `(q^dq, y^dy)`, with `W_ℓ` the genus-0
/// symmetric-power series at `χ = deg E + N(ℓ+1)`.
pub fn check_w_recursion(n: u32, deg_l: i64, deg_e: i64, dq: usize, dy: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let chi = deg_e + n as i64 * (deg_l + 1);
    let lhs = series_w_genus0(n, chi + n as i64, dq, dy);
    let b = series_b(n, dq, dy)?;
    let rhs = series_w_genus0(n, chi, dq, dy).mul(&b.int_pow(n as i64)?);
    let params = [
        ("N", n as i64),
        ("l", deg_l),
        ("degE", deg_e),
        ("Dq", dq as i64),
        ("Dy", dy as i64),
    ];
    Ok(CheckReport::compare("W_recursion", &params, lhs, rhs, start))
}

/// `Σ z^d C(-χ+(N+1)d, d) = (1+t)^{1-χ}/(1-Nt)` at `z = t/(1+t)^{N+1}`.
pub fn check_fchi(n: u32, chi: i64, order: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let c = closedform::check_fchi(n, chi, order)?;
    let params = [("N", n as i64), ("chi", chi), ("D", order as i64)];
    Ok(CheckReport::compare("fchi", &params, c.lhs, c.rhs, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn down_examples() {
        let r = check_down(1, 1, 1, 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "1");
        assert!(check_down(2, 3, 0, 5).unwrap().pass);
        assert!(check_down(3, 4, 3, 7).unwrap().pass);
    }

    #[test]
    fn w_recursion_examples() {
        assert!(check_w_recursion(1, 0, 0, 4, 6).unwrap().pass);
        assert!(check_w_recursion(2, 1, 1, 4, 6).unwrap().pass);
        assert!(check_w_recursion(2, 0, 0, 0, 3).unwrap().pass);
    }

    #[test]
    fn fchi_examples() {
        assert!(check_fchi(1, 0, 5).unwrap().pass);
        assert!(check_fchi(3, 2, 5).unwrap().pass);
    }
}
