use super::params::{chi_values, CurveBundleParams};
use crate::error::{Error, Result};
use crate::exactalg::{binom, MultiPoly, QSeries, Rational};

/// `(1 - y)^e` as a polynomial, truncated after `y^dy` when `e < 0`.
pub fn one_minus_y_pow(e: i64, dy: u32) -> MultiPoly {
    let y = MultiPoly::var("y");
    let top = if e >= 0 { (e as u32).min(dy) } else { dy };
    let mut out = MultiPoly::zero();
    for j in 0..=top {
        let c = binom(e, j as i64) * Rational::from(if j % 2 == 0 { 1 } else { -1 });
        out = out.add(&y.pow(j).scale(&c));
    }
    out
}

/// `(1 - q)^{-χ(O)} (1 + qy)^{χ(E⊗L)}` through `q^dq`.
pub fn series_thm1(p: &CurveBundleParams, dq: usize) -> Result<QSeries> {
    p.validate()?;
    let chi = chi_values(p);
    let one_minus_q = QSeries::from_poly(&"1-q".parse()?, dq);
    let one_plus_qy = QSeries::from_poly(&"1+q*y".parse()?, dq);
    Ok(one_minus_q
        .int_pow(-chi.chi_o)?
        .mul(&one_plus_qy.int_pow(chi.chi_el)?))
}

/// The `∧_y` series times `Π_p (1 - q x_p y)^{-χ(M_p^∨⊗L)}`.
pub fn series_thm2(p: &CurveBundleParams, dq: usize) -> Result<QSeries> {
    p.validate()?;
    let chi = chi_values(p);
    let mut s = series_thm1(p, dq)?;
    for (i, c) in chi.chi_dual.iter().enumerate() {
        let f = MultiPoly::one().sub(&MultiPoly::monomial(
            Rational::one(),
            &[("q", 1), (&format!("x{}", i + 1), 1), ("y", 1)],
        ));
        s = s.mul(&QSeries::from_poly(&f, dq).int_pow(-c)?);
    }
    Ok(s)
}

/// The genus-0 symmetric-power answer for one degree `d`, kept both as an
/// exact fraction `numerator / (1-y)^denom_exp` and expanded through `y^dy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymT10 {
    pub numerator: MultiPoly,
    pub denom_exp: i64,
    pub expanded: MultiPoly,
}

/// `Σ_{k≤d} C(-χ + d(N+1), k) (-y)^k / (1-y)^{d(N+1)}`.
pub fn sym_series_thm10(n: u32, chi: i64, d: u32, dy: u32) -> SymT10 {
    let y = MultiPoly::var("y");
    let top = d as i64 * (n as i64 + 1);
    let mut numerator = MultiPoly::zero();
    for k in 0..=d {
        let sign = Rational::from(if k % 2 == 0 { 1 } else { -1 });
        numerator = numerator.add(&y.pow(k).scale(&(binom(-chi + top, k as i64) * sign)));
    }
    let expanded = numerator
        .mul(&one_minus_y_pow(-top, dy))
        .truncate_in("y", dy);
    SymT10 {
        numerator,
        denom_exp: top,
        expanded,
    }
}

/// `χ(Quot_d, Sym^k L^[d])` in genus 0, by coefficient extraction. For
/// `d ≥ k` the value is cross-checked against `C(χ+k-1, k)`.
pub fn sym_power_chi(n: u32, chi: i64, d: u32, k: u32) -> Result<Rational> {
    let t10 = sym_series_thm10(n, chi, d, k);
    let value = t10.expanded.coeff_in("y", k).constant_term();
    if d >= k {
        let stable = binom(chi + k as i64 - 1, k as i64);
        if stable != value {
            return Err(Error::Internal(format!(
                "stable value {stable} differs from extraction {value} at N={n}, χ={chi}, d={d}, k={k}"
            )));
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn exterior_examples() {
        let s = series_thm1(&CurveBundleParams::new(0, 2, 3, 0), 3).unwrap();
        assert_eq!(s.coeff_at(2).unwrap(), p("1+5y+10y^2"));
        assert_eq!(s.coeff_at(0).unwrap(), MultiPoly::one());
    }

    #[test]
    fn twisted_examples() {
        let base = CurveBundleParams::new(0, 2, 0, 0);
        let s = series_thm2(&base.clone().with_duals(&[0]), 2).unwrap();
        assert_eq!(s.coeff_at(1).unwrap(), p("1+2y+x1*y"));
        let zeroed = s.substitute("x1", &MultiPoly::zero());
        assert_eq!(zeroed, series_thm1(&base, 2).unwrap());
        assert!(matches!(
            series_thm2(&base.with_duals(&[0, 0]), 2),
            Err(Error::RankBoundViolated(_))
        ));
    }

    #[test]
    fn t10_examples() {
        assert_eq!(sym_series_thm10(2, 5, 0, 4).expanded, MultiPoly::one());
        let t = sym_series_thm10(1, 2, 1, 3);
        assert_eq!(t.numerator, MultiPoly::one());
        assert_eq!(t.denom_exp, 2);
        assert_eq!(t.expanded, p("1+2y+3y^2+4y^3"));
    }

    #[test]
    fn sym_power_examples() {
        assert_eq!(sym_power_chi(2, 5, 3, 2).unwrap(), Rational::from(15));
        assert_eq!(sym_power_chi(3, -4, 2, 0).unwrap(), Rational::one());
        for chi in -3..6 {
            assert_eq!(sym_power_chi(1, chi, 1, 2).unwrap(), Rational::from(2 * chi - 1));
        }
    }

    #[test]
    fn one_minus_y_powers() {
        assert_eq!(one_minus_y_pow(2, 5), p("1-2y+y^2"));
        assert_eq!(one_minus_y_pow(-1, 3), p("1+y+y^2+y^3"));
        assert_eq!(one_minus_y_pow(0, 3), MultiPoly::one());
    }
}
