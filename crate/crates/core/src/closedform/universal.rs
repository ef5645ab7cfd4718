use super::params::{chi_values, CurveBundleParams};
use super::formulas::{one_minus_y_pow, sym_series_thm10};
use crate::error::Result;
use crate::exactalg::{binom, MultiPoly, QSeries, Rational, UniSeries};

/// The series `f` with `f^N - f^{N+1} + z = 0` and `f(0) = 1`, through `z^dz`.
pub fn universal_f(n: u32, dz: usize) -> UniSeries {
    assert!(n >= 1, "rank must be at least 1");
    let n = n as i64;
    let z = UniSeries::identity(dz);
    let mut f = UniSeries::one(dz);
    let mut correct = 1usize;
    loop {
        let fn_ = f.pow(n - 1).expect("nonnegative power");
        let fn1 = fn_.mul(&f);
        let residual = fn1.sub(&fn1.mul(&f)).add(&z);
        let deriv = fn_
            .scale(&Rational::from(n))
            .sub(&fn1.scale(&Rational::from(n + 1)));
        // constant term of the derivative is -1, so this never fails
        let step = residual.mul(&deriv.inv().expect("unit derivative"));
        f = f.sub(&step);
        if correct > dz {
            break;
        }
        correct *= 2;
    }
    f
}

/// `f^N - f^{N+1} + z`, which vanishes through the truncation.
pub fn universal_f_residual(n: u32, f: &UniSeries) -> UniSeries {
    let fnn = f.pow(n as i64).expect("nonnegative power");
    fnn.sub(&fnn.mul(f)).add(&UniSeries::identity(f.order()))
}

/// `G(z) = Σ_{d≥1} z^d (N/d) C((N+1)(d-1), d-1)`.
pub fn universal_g(n: u32, dz: usize) -> UniSeries {
    let n = n as i64;
    let coeffs = (0..=dz as i64)
        .map(|d| {
            if d == 0 {
                Rational::zero()
            } else {
                binom((n + 1) * (d - 1), d - 1) * Rational::new(n, d)
            }
        })
        .collect();
    UniSeries::from_coeffs(coeffs, dz)
}

/// `q y / (1-y)^{N+1}` scaled by `sign`, with y truncated at `dy`.
fn bb_argument(n: u32, sign: i64, dq: usize, dy: u32) -> QSeries {
    let c = one_minus_y_pow(-(n as i64 + 1), dy)
        .mul(&MultiPoly::var("y"))
        .truncate_in("y", dy)
        .scale(&Rational::from(sign));
    QSeries::from_coeffs(vec![MultiPoly::zero(), c], dq).with_truncation("y", dy)
}

/// `B = f(q y / (1-y)^{N+1})` through `(q^dq, y^dy)`.
pub fn series_b(n: u32, dq: usize, dy: u32) -> Result<QSeries> {
    QSeries::compose(&universal_f(n, dq), &bb_argument(n, 1, dq, dy))
}

/// `1 - G(-q y / (1-y)^{N+1})`, which should equal `B^N`.
pub fn series_bb_rhs(n: u32, dq: usize, dy: u32) -> Result<QSeries> {
    let g = QSeries::compose(&universal_g(n, dq), &bb_argument(n, -1, dq, dy))?;
    Ok(QSeries::one(dq).with_truncation("y", dy).sub(&g))
}

/// The genus-0 series `W_ℓ = Σ_d q^d t10(N, χ, d)` for `χ = deg E + N(ℓ+1)`.
pub fn series_w_genus0(n: u32, chi: i64, dq: usize, dy: u32) -> QSeries {
    let coeffs = (0..=dq as u32)
        .map(|d| sym_series_thm10(n, chi, d, dy).expanded)
        .collect();
    QSeries::from_coeffs(coeffs, dq).with_truncation("y", dy)
}

/// `A = W_ℓ B^{-χ}` computed from a chosen genus-0 configuration.
pub fn series_a_via(n: u32, deg_l: i64, deg_e: i64, dq: usize, dy: u32) -> Result<QSeries> {
    let chi = chi_values(&CurveBundleParams::new(0, n, deg_e, deg_l)).chi_el;
    let b = series_b(n, dq, dy)?;
    Ok(series_w_genus0(n, chi, dq, dy).mul(&b.int_pow(-chi)?))
}

/// `A` from the configuration `ℓ = 0`, `deg E = 0`.
pub fn series_a(n: u32, dq: usize, dy: u32) -> Result<QSeries> {
    series_a_via(n, 0, 0, dq, dy)
}

/// `W = A^{χ(O)} B^{χ(E⊗L)}` for arbitrary genus.
pub fn series_w(p: &CurveBundleParams, dq: usize, dy: u32) -> Result<QSeries> {
    p.validate()?;
    let chi = chi_values(p);
    let a = series_a(p.rank, dq, dy)?;
    let b = series_b(p.rank, dq, dy)?;
    Ok(a.int_pow(chi.chi_o)?.mul(&b.int_pow(chi.chi_el)?))
}

/// Both sides of the `F_χ` identity.
#[derive(Clone, Debug)]
pub struct FchiCheck {
    pub pass: bool,
    /// `Σ z^d C(-χ + (N+1)d, d)`
    pub lhs: UniSeries,
    /// `(1+t)^{1-χ} / (1 - N t)` at `t = t(z)`
    pub rhs: UniSeries,
}

pub fn check_fchi(n: u32, chi: i64, order: usize) -> Result<FchiCheck> {
    let n = n as i64;
    let lhs = UniSeries::from_coeffs(
        (0..=order as i64)
            .map(|d| binom(-chi + (n + 1) * d, d))
            .collect(),
        order,
    );
    let z_of_t =
        UniSeries::identity(order).mul(&UniSeries::binomial_power(&Rational::one(), -(n + 1), order));
    let t_of_z = z_of_t.revert()?;
    let closed = UniSeries::binomial_power(&Rational::one(), 1 - chi, order)
        .mul(&UniSeries::binomial_power(&Rational::from(-n), -1, order));
    let rhs = closed.compose(&t_of_z)?;
    Ok(FchiCheck {
        pass: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Floating-point comparison of the truncated `f` (N = 2) against the
/// hyperbolic closed form at a small `z`; returns `(series, closed)`.
pub fn float_spot_check_n2(z: f64, order: usize) -> (f64, f64) {
    let f = universal_f(2, order);
    let series = f
        .coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z + c.to_f64());
    let s = ((3.0 * (3.0 * z).sqrt() / 2.0).asinh() / 3.0).sinh();
    (series, 1.0 + 4.0 / 3.0 * s * s)
}
