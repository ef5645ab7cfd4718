use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Univariate power series over [`Rational`], truncated after `z^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<Rational>,
}

impl UniSeries {
    pub fn zero(order: usize) -> Self {
        UniSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The series `z` (or zero when `order == 0`).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Build from leading coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(coeffs: Vec<Rational>, order: usize) -> Self {
        let mut c = coeffs;
        c.resize(order + 1, Rational::zero());
        UniSeries { coeffs: c }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        UniSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        UniSeries { coeffs: out }
    }

    pub fn inv(&self) -> Result<Self> {
        let c = self.coeffs[0].inv().ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(c.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &out[m - k]);
                }
            }
            out.push(-(acc * &c));
        }
        Ok(UniSeries { coeffs: out })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(result)
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        // Horner from the top coefficient down
        let mut acc = Self::zero(n);
        for k in (0..=n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse: `r` with `self(r(z)) = z` through `z^order`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        if self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(Error::NotRevertible);
        }
        let n = self.order();
        let a1inv = self.coeffs[1].inv().unwrap();
        // Fixed-point iteration r <- r - (s(r) - z)/s'(0), one new coefficient per pass.
        let mut r = Self::identity(n).scale(&a1inv);
        for _ in 1..n {
            let err = self.compose(&r)?.sub(&Self::identity(n));
            r = r.sub(&err.scale(&a1inv));
        }
        Ok(r)
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..=n)
            .map(|k| &self.coeffs[k] * &Rational::from(k))
            .collect::<Vec<_>>();
        Self::from_coeffs(coeffs, n.saturating_sub(1))
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rational::zero()];
        for k in 0..=n {
            coeffs.push(&self.coeffs[k] / &Rational::from(k + 1));
        }
        Self::from_coeffs(coeffs, n + 1)
    }

    /// `(1 + c z)^e` expanded to `order`.
    pub fn binomial_power(c: &Rational, e: i64, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| super::binomial::binom(e, k as i64) * c.pow(k as i64))
            .collect();
        Self::from_coeffs(coeffs, order)
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "O(z^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(z^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

impl fmt::Debug for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversion_examples() {
        let t = UniSeries::identity(3);
        assert_eq!(t.revert().unwrap(), t);
        // t/(1+t)^2
        let s = UniSeries::binomial_power(&Rational::one(), -2, 3).mul(&t);
        let r = s.revert().unwrap();
        assert_eq!(r, UniSeries::from_ints(&[0, 1, 2, 5], 3));
        assert_eq!(s.compose(&r).unwrap(), t);
        let s = UniSeries::from_ints(&[0, 1, -1], 3);
        assert_eq!(s.revert().unwrap(), UniSeries::from_ints(&[0, 1, 1, 2], 3));
    }

    #[test]
    fn revert_errors() {
        let s = UniSeries::from_ints(&[0, 0, 1], 3);
        assert!(matches!(s.revert(), Err(Error::NotRevertible)));
    }

    #[test]
    fn inverse_and_powers() {
        let s = UniSeries::from_ints(&[1, -1], 3);
        assert_eq!(s.inv().unwrap(), UniSeries::from_ints(&[1, 1, 1, 1], 3));
        assert_eq!(s.pow(-2).unwrap(), UniSeries::from_ints(&[1, 2, 3, 4], 3));
        assert!(UniSeries::identity(3).inv().is_err());
    }

    #[test]
    fn compose_geometric() {
        let geo = UniSeries::from_ints(&[1, 1, 1, 1, 1], 4);
        let inner = UniSeries::from_ints(&[0, 1, 1], 4);
        // 1/(1 - z - z^2): Fibonacci
        assert_eq!(
            geo.compose(&inner).unwrap(),
            UniSeries::from_ints(&[1, 1, 2, 3, 5], 4)
        );
        assert!(geo.compose(&geo).is_err());
    }

    #[test]
    fn calculus() {
        let s = UniSeries::from_ints(&[3, 2, 6], 2);
        assert_eq!(s.derivative(), UniSeries::from_ints(&[2, 12], 1));
        assert_eq!(s.derivative().integrate(), UniSeries::from_ints(&[0, 2, 6], 2));
    }
}
