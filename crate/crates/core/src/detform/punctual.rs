use super::roots::{require, sign, RootSystemSpec, SchurCoeffs};
use crate::closedform::one_minus_y_pow;
use crate::error::{Error, Result};
use crate::exactalg::{binom, MultiPoly, Rational};
use crate::symfunc::alternant_normalize;

/// Exponent vector `(d+N, ..., d+1, k)` for `N + 1` roots.
fn exterior_exponents(n: u32, d: u32, k: i64) -> Vec<i64> {
    let mut a: Vec<i64> = (1..=n as i64).rev().map(|j| d as i64 + j).collect();
    a.push(k);
    a
}

/// `Σ_k c_k [q^d] det(z^{a(k)}) / Vandermonde` with `c_k` supplied per `k`,
/// asserting the zero alternants for `d < k ≤ d+N` and the vanishing of the
/// next `N+2` shapes beyond.
fn punctual_sum(
    schur: &mut SchurCoeffs,
    n: u32,
    d: u32,
    coeffs: &[MultiPoly],
) -> Result<MultiPoly> {
    let top = d as i64 + n as i64;
    let mut acc = MultiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as i64;
        let (sg, lambda) = alternant_normalize(&exterior_exponents(n, d, k))?;
        if k > d as i64 && k <= top {
            if sg != 0 {
                return Err(Error::Internal(format!("alternant at k={k} should repeat an exponent")));
            }
            continue;
        }
        let check_vanishing = k > top && k <= top + n as i64 + 2;
        if c.is_zero() && !check_vanishing {
            continue;
        }
        let v = schur.coeff(&lambda)?;
        if k > top {
            if check_vanishing && !v.is_zero() {
                return Err(Error::Internal(format!(
                    "[q^{d}] s_{lambda} = {v} should vanish for k={k} > d+N"
                )));
            }
            continue;
        }
        acc = acc.add(&v.mul(c).scale(&Rational::from(sg as i64)));
    }
    Ok(acc.scale(&sign((n as i64 - 1) * d as i64)))
}

/// `χ(Quot_d, ∧_y L^[d])` for `C = P^1` via Schur polynomials of the roots
/// of `z(z-1)^N - q(z+y)`.
pub fn punctual_exterior_det(n: u32, chi: i64, d: u32) -> Result<MultiPoly> {
    require(n >= 1, || "rank must be at least 1".into())?;
    require(chi >= 0, || format!("χ = {chi} must be nonnegative"))?;
    let mut schur = SchurCoeffs::new(&RootSystemSpec::punctual_exterior(n), d as usize, None)?;
    let coeffs: Vec<MultiPoly> = (0..=chi)
        .map(|k| MultiPoly::constant(binom(chi, k) * sign(k)))
        .collect();
    punctual_sum(&mut schur, n, d, &coeffs)
}

/// `(1 + x t)^e` through `t^order`.
fn one_plus_xt_pow(x: &str, e: i64, order: u32) -> MultiPoly {
    let xt = MultiPoly::monomial(Rational::one(), &[(x, 1), ("t", 1)]);
    (0..=order).fold(MultiPoly::zero(), |acc, j| acc.add(&xt.pow(j).scale(&binom(e, j as i64))))
}

/// Default `t`-order for [`punctual_dual_det`]: `d + 2N + 2`.
pub fn default_t_order(n: u32, d: u32) -> u32 {
    d + 2 * n + 2
}

/// Twisted version with factors `M_p` of degrees `mlist`; the answer is a
/// polynomial in `y, x_1, ..., x_r`.
pub fn punctual_dual_det(
    n: u32,
    chi: i64,
    deg_l: i64,
    mlist: &[i64],
    d: u32,
    t_order: Option<u32>,
) -> Result<MultiPoly> {
    require(n >= 1, || "rank must be at least 1".into())?;
    if mlist.len() >= n as usize {
        return Err(Error::RankBoundViolated(format!(
            "{} dual factors for rank {n}",
            mlist.len()
        )));
    }
    require(chi >= 0, || format!("χ = {chi} must be nonnegative"))?;
    let order = t_order.unwrap_or_else(|| default_t_order(n, d));
    require(order >= d, || format!("t-order {order} below d = {d}"))?;
    let mut f = one_minus_y_pow(chi, order).substitute("y", &MultiPoly::var("t"));
    for (p, m) in mlist.iter().enumerate() {
        f = f
            .mul(&one_plus_xt_pow(&format!("x{}", p + 1), m - deg_l, order))
            .truncate_in("t", order);
    }
    let coeffs: Vec<MultiPoly> = (0..=order).map(|k| f.coeff_in("t", k)).collect();
    let roots = RootSystemSpec::punctual_dual(n, mlist.len());
    let mut schur = SchurCoeffs::new(&roots, d as usize, None)?;
    punctual_sum(&mut schur, n, d, &coeffs)
}

/// Smallest `χ` accepted by [`punctual_sym_det`].
pub fn sym_min_chi(n: u32, d: u32) -> i64 {
    (d as i64 + 1).max(n as i64 * d as i64)
}

/// `χ(Quot_d, Sym_y L^[d])` for `C = P^1`, through `y^dy`, via alternants
/// over the roots of `(z-1)^N (z-y) - q z`.
///
/// Requires `χ ≥ max(d+1, N d)`; below `N d` the alternant sum no longer
/// reproduces the answer.
pub fn punctual_sym_det(n: u32, chi: i64, d: u32, dy: u32) -> Result<MultiPoly> {
    require(n >= 1, || "rank must be at least 1".into())?;
    require(chi >= sym_min_chi(n, d), || {
        format!("χ = {chi} below max(d+1, N d) = {}", sym_min_chi(n, d))
    })?;
    let mut schur = SchurCoeffs::new(&RootSystemSpec::punctual_sym(n), d as usize, Some(dy))?;
    let neg_y = MultiPoly::var("y").neg();
    let mut acc = MultiPoly::zero();
    for lp in 0..=chi {
        let outer = binom(chi, lp) * sign(lp);
        // column j carries (z - y) z^{d+N-j}; expand multilinearly
        for mask in 0u32..(1 << n) {
            let mut exps = Vec::with_capacity(n as usize + 1);
            let mut c = MultiPoly::constant(outer.clone());
            for j in 1..=n {
                let base = (d + n - j) as i64;
                if mask & (1 << (j - 1)) == 0 {
                    exps.push(base + 1);
                } else {
                    exps.push(base);
                    c = c.mul(&neg_y);
                }
            }
            exps.push(lp);
            let (sg, lambda) = alternant_normalize(&exps)?;
            if sg == 0 {
                continue;
            }
            let v = schur.coeff(&lambda)?;
            acc = acc.add(&v.mul(&c).scale(&Rational::from(sg as i64)));
        }
    }
    Ok(acc
        .truncate_in("y", dy)
        .mul(&one_minus_y_pow(-chi, dy))
        .truncate_in("y", dy)
        .scale(&sign((n as i64 - 1) * d as i64)))
}
