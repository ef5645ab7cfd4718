use std::collections::BTreeMap;
use std::fmt;

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// Laurent series in `ε` with [`MultiPoly`] coefficients, stored on a
/// window `[lo, hi]`.
///
/// Besides the window, each value records the highest exponent whose
/// coefficient is exactly known (`None` for a finite, fully known value).
/// Products and inverses propagate that bound, so truncation error never
/// leaks into reported coefficients.
#[derive(Clone)]
pub struct LaurentEps {
    lo: i64,
    hi: i64,
    coeffs: BTreeMap<i64, MultiPoly>,
    known_hi: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

impl LaurentEps {
    pub fn zero(lo: i64, hi: i64) -> Self {
        assert!(lo <= 0 && 0 <= hi, "window must contain 0");
        LaurentEps {
            lo,
            hi,
            coeffs: BTreeMap::new(),
            known_hi: None,
        }
    }

    /// A finite Laurent polynomial, fully known. The window widens to hold
    /// every given exponent.
    pub fn exact(lo: i64, hi: i64, terms: impl IntoIterator<Item = (i64, MultiPoly)>) -> Self {
        let mut s = Self::zero(lo, hi);
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            s.lo = s.lo.min(e);
            s.hi = s.hi.max(e);
            let slot = s.coeffs.entry(e).or_insert_with(MultiPoly::zero);
            *slot = slot.add(&c);
            if slot.is_zero() {
                s.coeffs.remove(&e);
            }
        }
        s
    }

    /// `ε^shift * Σ series[j] ε^j`, where `series` is known exactly through
    /// its last entry and nothing beyond.
    pub fn from_truncated(lo: i64, hi: i64, shift: i64, series: Vec<MultiPoly>) -> Result<Self> {
        let mut s = Self::zero(lo, hi);
        let top = shift + series.len() as i64 - 1;
        for (j, c) in series.into_iter().enumerate() {
            let e = shift + j as i64;
            if c.is_zero() || e > hi {
                continue;
            }
            if e < lo {
                return Err(Error::EpsWindowExhausted {
                    required_lo: e,
                    required_hi: hi,
                });
            }
            s.coeffs.insert(e, c);
        }
        s.known_hi = Some(top.min(hi));
        Ok(s)
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    /// Highest exponent with an exactly known coefficient (`hi` when exact).
    pub fn known_hi(&self) -> i64 {
        self.known_hi.unwrap_or(self.hi)
    }

    pub fn is_exact(&self) -> bool {
        self.known_hi.is_none()
    }

    /// Lowest exponent with a nonzero coefficient; `None` if no nonzero
    /// coefficient is stored.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Lower bound on the true valuation, usable for precision bookkeeping.
    fn val_bound(&self) -> Option<i64> {
        self.valuation().or(self.known_hi.map(|k| k + 1))
    }

    pub fn coeff(&self, e: i64) -> Result<MultiPoly> {
        if e > self.known_hi() && !(self.is_exact() && e > self.hi) {
            return Err(Error::BeyondTruncation {
                requested: e,
                truncation: self.known_hi(),
            });
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    /// Nonzero coefficients at negative exponents, lowest first.
    pub fn polar_part(&self) -> Vec<(i64, MultiPoly)> {
        self.coeffs
            .range(..0)
            .map(|(e, c)| (*e, c.clone()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi).max(0);
        let known = min_opt(self.known_hi, other.known_hi);
        let mut coeffs = BTreeMap::new();
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            let slot = coeffs.entry(*e).or_insert_with(MultiPoly::zero);
            *slot = slot.add(c);
        }
        coeffs.retain(|e, c: &mut MultiPoly| !c.is_zero() && known.is_none_or(|k| *e <= k));
        let lo = coeffs.keys().next().map_or(lo, |&e| lo.min(e));
        let mut s = LaurentEps {
            lo,
            hi,
            coeffs,
            known_hi: known,
        };
        s.clip_hi();
        s
    }

    pub fn neg(&self) -> Self {
        LaurentEps {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn clip_hi(&mut self) {
        if self.coeffs.keys().next_back().is_some_and(|&e| e > self.hi) {
            let hi = self.hi;
            self.coeffs.retain(|e, _| *e <= hi);
            self.known_hi = Some(self.known_hi.map_or(hi, |k| k.min(hi)));
        }
        if let Some(k) = self.known_hi {
            self.known_hi = Some(k.min(self.hi));
        }
    }

    /// Product on the intersected window. Fails if the product's leading
    /// exponent falls below the window.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        let (va, vb) = match (self.val_bound(), other.val_bound()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                // one side is exactly zero
                return Ok(LaurentEps::zero(lo, hi));
            }
        };
        if va + vb < lo && self.valuation().is_some() && other.valuation().is_some() {
            return Err(Error::EpsWindowExhausted {
                required_lo: va + vb,
                required_hi: hi,
            });
        }
        let known = min_opt(
            self.known_hi.map(|k| k + vb),
            other.known_hi.map(|k| k + va),
        );
        let mut coeffs: BTreeMap<i64, MultiPoly> = BTreeMap::new();
        let cap = known.unwrap_or(i64::MAX).min(hi);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e > cap {
                    break;
                }
                let slot = coeffs.entry(e).or_insert_with(MultiPoly::zero);
                *slot = slot.add(&ca.mul(cb));
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        let finite_fits = known.is_none()
            && self.coeffs.keys().next_back().copied().unwrap_or(0)
                + other.coeffs.keys().next_back().copied().unwrap_or(0)
                <= hi;
        let known = if finite_fits { None } else { Some(cap) };
        Ok(LaurentEps {
            lo,
            hi,
            coeffs,
            known_hi: known,
        })
    }

    /// Inverse of a value whose lowest coefficient is a nonzero rational,
    /// on this value's own window.
    pub fn inv_leading(&self) -> Result<Self> {
        self.inv_leading_in(self.lo, self.hi)
    }

    /// Inverse computed on the window `[lo, hi]`.
    pub fn inv_leading_in(&self, lo: i64, hi: i64) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NonUnitConstantTerm)?;
        let c = match self.coeffs[&v].as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::NonUnitConstantTerm),
        };
        if -v < lo {
            return Err(Error::EpsWindowExhausted {
                required_lo: -v,
                required_hi: hi,
            });
        }
        let cinv = c.inv().unwrap();
        if self.coeffs.len() == 1 && self.is_exact() {
            return Ok(LaurentEps::exact(
                lo,
                hi,
                [(-v, MultiPoly::constant(cinv))],
            ));
        }
        // relative terms a_j = coefficient at v + j
        let rel_prec = self.known_hi.map(|k| k - v);
        let top = min_opt(rel_prec, Some(hi + v)).unwrap();
        let a: Vec<MultiPoly> = (0..=top)
            .map(|j| self.coeffs.get(&(v + j)).cloned().unwrap_or_default())
            .collect();
        let mut b: Vec<MultiPoly> = vec![MultiPoly::constant(cinv.clone())];
        for m in 1..=top as usize {
            let mut acc = MultiPoly::zero();
            for k in 1..=m {
                if !a[k].is_zero() && !b[m - k].is_zero() {
                    acc = acc.add(&a[k].mul(&b[m - k]));
                }
            }
            b.push(acc.scale(&-&cinv));
        }
        LaurentEps::from_truncated(lo, hi, -v, b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentEps {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, p)| (*e, p.scale(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
            ..self.clone()
        }
    }
}

impl fmt::Display for LaurentEps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| format!("({c})*eps^{e}"))
            .collect();
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        };
        match self.known_hi {
            None => f.write_str(&body),
            Some(k) => write!(f, "{body} + O(eps^{})", k + 1),
        }
    }
}

impl fmt::Debug for LaurentEps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> MultiPoly {
        MultiPoly::from(v)
    }

    #[test]
    fn invert_monomial() {
        let a = LaurentEps::exact(-1, 1, [(1, c(2))]);
        let inv = a.inv_leading().unwrap();
        assert_eq!(inv.coeff(-1).unwrap(), MultiPoly::constant(Rational::new(1, 2)));
        assert!(inv.coeff(0).unwrap().is_zero());
        let prod = a.mul(&inv).unwrap();
        assert_eq!(prod.coeff(0).unwrap(), MultiPoly::one());
        assert!(prod.is_exact());
    }

    #[test]
    fn pole_times_zero() {
        let a = LaurentEps::exact(-1, 1, [(-1, c(1))]);
        let b = LaurentEps::exact(-1, 1, [(1, c(1))]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeff(0).unwrap(), MultiPoly::one());
        assert!(p.polar_part().is_empty());
    }

    #[test]
    fn invert_with_tail() {
        let a = LaurentEps::exact(-1, 1, [(1, c(1)), (2, c(1))]);
        let inv = a.inv_leading_in(-1, 1).unwrap();
        assert_eq!(inv.coeff(-1).unwrap(), c(1));
        assert_eq!(inv.coeff(0).unwrap(), c(-1));
        assert_eq!(inv.coeff(1).unwrap(), c(1));
        let back = a.mul(&inv).unwrap();
        assert_eq!(back.coeff(0).unwrap(), c(1));
        for e in back.window().0..=back.known_hi() {
            let expect = if e == 0 { c(1) } else { c(0) };
            assert_eq!(back.coeff(e).unwrap(), expect, "exponent {e}");
        }
    }

    #[test]
    fn window_exhaustion_reports_requirement() {
        let a = LaurentEps::exact(-1, 1, [(2, c(1))]).inv_leading_in(-1, 1);
        assert!(matches!(
            a,
            Err(Error::EpsWindowExhausted { required_lo: -2, .. })
        ));
        let p = LaurentEps::exact(-1, 1, [(-1, c(1))]);
        assert!(matches!(
            p.mul(&p),
            Err(Error::EpsWindowExhausted { required_lo: -2, .. })
        ));
    }

    #[test]
    fn precision_propagates() {
        let a = LaurentEps::from_truncated(-2, 2, -1, vec![c(1), c(3)]).unwrap();
        assert_eq!(a.known_hi(), 0);
        let b = LaurentEps::exact(-2, 2, [(1, c(1))]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.known_hi(), 1);
        assert_eq!(p.coeff(1).unwrap(), c(3));
        assert!(p.coeff(2).is_err());
    }
}
