use std::time::Instant;

use super::CheckReport;
use crate::closedform::one_minus_y_pow;
use crate::detform::{RootSystemSpec, SchurCoeffs};
use crate::error::{Error, Result};
use crate::exactalg::{binom, MultiPoly, Rational};
use crate::symfunc::Partition;

fn sign(e: i64) -> Rational {
    Rational::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn neg_y_pow(k: u32) -> MultiPoly {
    MultiPoly::var("y").neg().pow(k)
}

/// `λ_k = (d^N, k)` for `k ≤ d`, `(k-N, (d+1)^N)` for `k > d+N`.
fn lambda_k(n: u32, d: u32, k: u32) -> Result<Partition> {
    let (n, d, k) = (n as i64, d as i64, k as i64);
    if k <= d {
        let mut parts = vec![d; n as usize];
        parts.push(k);
        Partition::new(&parts)
    } else if k > d + n {
        let mut parts = vec![k - n];
        parts.extend(std::iter::repeat_n(d + 1, n as usize));
        Partition::new(&parts)
    } else {
        Err(Error::HypothesisViolated(format!(
            "k={k} lies in the band d < k ≤ d+N where the statement is silent"
        )))
    }
}

/// `[t^m] 1/((1-t) Π_{p≤r} (1 - x_p y t))`
fn geometric_coeff(r: usize, m: u32) -> MultiPoly {
    let y = MultiPoly::var("y");
    let mut series = MultiPoly::one();
    let t = MultiPoly::var("t");
    let mut factors = vec![MultiPoly::one()];
    for p in 1..=r {
        factors.push(y.mul(&MultiPoly::var(&format!("x{p}"))));
    }
    for a in factors {
        // 1/(1 - a t) through t^m
        let mut g = MultiPoly::zero();
        for j in 0..=m {
            g = g.add(&a.mul(&t).pow(j));
        }
        series = series.mul(&g).truncate_in("t", m);
    }
    series.coeff_in("t", m)
}

/// `[q^d] s_{λ_k}` over the roots of `z(z-1)^N - q(z+y)` against
/// `(-1)^{d(N-1)} (-y)^k`, or 0 beyond `d+N`.
pub fn check_l4(n: u32, d: u32, k: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let lambda = lambda_k(n, d, k)?;
    let mut schur = SchurCoeffs::new(&RootSystemSpec::punctual_exterior(n), d as usize, None)?;
    let lhs = schur.coeff(&lambda)?;
    let rhs = if k <= d {
        neg_y_pow(k).scale(&sign((d * (n - 1)) as i64))
    } else {
        MultiPoly::zero()
    };
    let params = [("N", n as i64), ("d", d as i64), ("k", k as i64)];
    Ok(CheckReport::compare("l4", &params, lhs, rhs, start))
}

/// The same coefficient over the roots of `z(z-1)^N - q(z+y) Π (1 + z x_p)`
/// against `(-1)^{(N-1)d} (-y)^k [t^{d-k}] 1/((1-t) Π (1 - x_p y t))`.
pub fn check_schur_cal(n: u32, r: u32, d: u32, k: u32) -> Result<CheckReport> {
    let start = Instant::now();
    if r >= n {
        return Err(Error::RankBoundViolated(format!("r={r} must be below N={n}")));
    }
    let lambda = lambda_k(n, d, k)?;
    let roots = RootSystemSpec::punctual_dual(n, r as usize);
    let mut schur = SchurCoeffs::new(&roots, d as usize, None)?;
    let lhs = schur.coeff(&lambda)?;
    let rhs = if k <= d {
        neg_y_pow(k)
            .mul(&geometric_coeff(r as usize, d - k))
            .scale(&sign(((n - 1) * d) as i64))
    } else {
        MultiPoly::zero()
    };
    let params = [("N", n as i64), ("r", r as i64), ("d", d as i64), ("k", k as i64)];
    Ok(CheckReport::compare("schur_cal", &params, lhs, rhs, start))
}

/// `T_m` from its first-column recursion in the `q`-linear parts
/// `e_j = (-1)^{j-1} [z^{N+1-j}] (y+z) Π (1 + z x_p)`, against
/// `(-1)^{(N-1)m} [t^m] 1/((1-t) Π (1 - x_p y t))`.
pub fn check_t_recursion(n: u32, r: u32, m: u32) -> Result<CheckReport> {
    let start = Instant::now();
    if r >= n {
        return Err(Error::RankBoundViolated(format!("r={r} must be below N={n}")));
    }
    let z = MultiPoly::var("z");
    let mut g = z.add(&MultiPoly::var("y"));
    for p in 1..=r {
        g = g.mul(&MultiPoly::one().add(&z.mul(&MultiPoly::var(&format!("x{p}")))));
    }
    let e = |j: i64| -> MultiPoly {
        if j < 1 || j > n as i64 + 1 {
            return MultiPoly::zero();
        }
        g.coeff_in("z", (n as i64 + 1 - j) as u32).scale(&sign(j - 1))
    };
    let top = e(n as i64 + 1);
    let mut t: Vec<MultiPoly> = vec![MultiPoly::one()];
    for mm in 1..=m as i64 {
        let mut acc = MultiPoly::zero();
        for j in 0..=r as i64 {
            if mm - j - 1 < 0 {
                break;
            }
            let term = top.pow(j as u32).mul(&e(n as i64 - j)).mul(&t[(mm - j - 1) as usize]);
            acc = acc.add(&term.scale(&sign(j)));
        }
        t.push(acc);
    }
    let lhs = t[m as usize].clone();
    let rhs = geometric_coeff(r as usize, m).scale(&sign(((n - 1) * m) as i64));
    let params = [("N", n as i64), ("r", r as i64), ("m", m as i64)];
    Ok(CheckReport::compare("t_recursion", &params, lhs, rhs, start))
}

/// `[q^d] Σ_m (-y)^m s_{(ℓ', 1^{N-m})}` over the roots of
/// `(z-1)^N (z-y) - q z` against
/// `(-1)^N [t^{ℓ'}] y t^{N(d-1)+1} / ((1-t)^{Nd} (1-yt)^{d+1})`.
pub fn check_l11(n: u32, d: u32, lp: u32) -> Result<CheckReport> {
    let start = Instant::now();
    if lp == 0 || d == 0 {
        return Err(Error::HypothesisViolated("need ℓ' > 0 and d ≥ 1".into()));
    }
    let mut schur = SchurCoeffs::new(&RootSystemSpec::punctual_sym(n), d as usize, None)?;
    let mut lhs = MultiPoly::zero();
    for m in 0..=n {
        let mut parts = vec![lp as i64];
        parts.extend(std::iter::repeat_n(1, (n - m) as usize));
        lhs = lhs.add(&schur.coeff(&Partition::new(&parts)?)?.mul(&neg_y_pow(m)));
    }
    // t^{N(d-1)+1} shifts the extraction down to [t^{ℓ'-N(d-1)-1}]
    let j = lp as i64 - (n as i64 * (d as i64 - 1) + 1);
    let rhs = if j < 0 {
        MultiPoly::zero()
    } else {
        let j = j as u32;
        let y = MultiPoly::var("y");
        let a = one_minus_y_pow(-((n * d) as i64), j);
        let b = one_minus_y_pow(-(d as i64 + 1), j);
        // Σ_i [t^i](1-t)^{-Nd} · [t^{j-i}](1-yt)^{-(d+1)}
        let mut acc = MultiPoly::zero();
        for i in 0..=j {
            let c = a.coeff_in("y", i).constant_term();
            acc = acc.add(&b.coeff_in("y", j - i).mul(&y.pow(j - i)).scale(&c));
        }
        acc.mul(&y).scale(&sign(n as i64))
    };
    let params = [("N", n as i64), ("d", d as i64), ("l'", lp as i64)];
    Ok(CheckReport::compare("l11", &params, lhs, rhs, start))
}

/// `1 + (-1)^{(N-1)d+χ} y^{d+1} Res_{t=0} ω` against the `t10` numerator
/// over `(1-y)^{(N+1)d-χ}`, both multiplied out to polynomials.
pub fn check_l12(n: u32, d: u32, chi: i64) -> Result<CheckReport> {
    let start = Instant::now();
    let (ni, di) = (n as i64, d as i64);
    if chi < ni * di {
        return Err(Error::HypothesisViolated(format!("χ = {chi} below N d = {}", ni * di)));
    }
    let y = MultiPoly::var("y");
    // Res = [t^{χ-(N+1)d-1}] (1-t)^{χ-Nd} (1-yt)^{-(d+1)}
    let m = chi - (ni + 1) * di - 1;
    let mut res = MultiPoly::zero();
    for i in 0..=m.max(-1) {
        let jj = m - i;
        let c = binom(chi - ni * di, i) * sign(i) * binom(di + jj, jj);
        res = res.add(&y.pow(jj as u32).scale(&c));
    }
    let lhs = MultiPoly::one().add(&y.pow(d + 1).mul(&res).scale(&sign((ni - 1) * di + chi)));
    let mut numerator = MultiPoly::zero();
    for k in 0..=di {
        numerator = numerator.add(&neg_y_pow(k as u32).scale(&binom(-chi + (ni + 1) * di, k)));
    }
    let e = (ni + 1) * di - chi;
    let (lhs, rhs) = if e >= 0 {
        (lhs.mul(&one_minus_y_pow(e, e as u32)), numerator)
    } else {
        (lhs, numerator.mul(&one_minus_y_pow(-e, (-e) as u32)))
    };
    let params = [("N", ni), ("d", di), ("chi", chi)];
    Ok(CheckReport::compare("l12", &params, lhs, rhs, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l4_examples() {
        let r = check_l4(2, 1, 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "-1");
        let r = check_l4(2, 1, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "y");
        assert!(check_l4(2, 1, 4).unwrap().pass);
        assert!(matches!(check_l4(2, 1, 2), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn schur_cal_examples() {
        let a = check_schur_cal(3, 0, 2, 1).unwrap();
        let b = check_l4(3, 2, 1).unwrap();
        assert!(a.pass && b.pass);
        assert_eq!(a.lhs, b.lhs);
        let r = check_schur_cal(2, 1, 1, 0).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.rhs, "-1-y*x1");
        assert!(check_schur_cal(3, 2, 2, 2).unwrap().pass);
        for m in 0..=4 {
            assert!(check_t_recursion(3, 2, m).unwrap().pass);
        }
    }

    #[test]
    fn l11_examples() {
        assert!(check_l11(1, 1, 1).unwrap().pass);
        assert!(check_l11(2, 1, 3).unwrap().pass);
        let r = check_l11(2, 2, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs, "0");
    }

    #[test]
    fn l12_examples() {
        let r = check_l12(1, 1, 1).unwrap();
        assert!(r.pass, "{r}");
        assert!(check_l12(2, 1, 2).unwrap().pass);
        let r = check_l12(3, 0, 2).unwrap();
        assert!(r.pass);
        assert!(check_l12(2, 2, 3).is_err());
    }
}
