use std::collections::BTreeMap;
use std::fmt;

use super::powerseries::UniSeries;
use super::ring::Ring;
use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// Power series in `q` truncated after `q^dq`, with [`MultiPoly`]
/// coefficients.
///
/// Optional per-variable truncations (for instance `y <= 8` in symmetric
/// power computations) are applied to every coefficient after each product.
#[derive(Clone)]
pub struct QSeries {
    coeffs: Vec<MultiPoly>,
    var_trunc: BTreeMap<String, u32>,
}

impl QSeries {
    pub fn zero(dq: usize) -> Self {
        QSeries {
            coeffs: vec![MultiPoly::zero(); dq + 1],
            var_trunc: BTreeMap::new(),
        }
    }

    pub fn one(dq: usize) -> Self {
        Self::constant(MultiPoly::one(), dq)
    }

    pub fn constant(c: MultiPoly, dq: usize) -> Self {
        let mut s = Self::zero(dq);
        s.coeffs[0] = c;
        s
    }

    /// Series from explicit coefficients of `q^0, q^1, ...`.
    pub fn from_coeffs(coeffs: Vec<MultiPoly>, dq: usize) -> Self {
        let mut c = coeffs;
        c.resize(dq + 1, MultiPoly::zero());
        QSeries {
            coeffs: c,
            var_trunc: BTreeMap::new(),
        }
    }

    /// Split a polynomial containing `q` into its `q`-coefficients.
    pub fn from_poly(p: &MultiPoly, dq: usize) -> Self {
        let coeffs = (0..=dq).map(|d| p.coeff_in("q", d as u32)).collect();
        Self::from_coeffs(coeffs, dq)
    }

    /// Truncate coefficients at `var^deg`, now and after every later product.
    pub fn with_truncation(mut self, var: &str, deg: u32) -> Self {
        let deg = match self.var_trunc.get(var) {
            Some(&old) => old.min(deg),
            None => deg,
        };
        self.var_trunc.insert(var.to_string(), deg);
        self.apply_trunc();
        self
    }

    pub fn truncations(&self) -> &BTreeMap<String, u32> {
        &self.var_trunc
    }

    fn apply_trunc(&mut self) {
        for c in &mut self.coeffs {
            for (v, &k) in &self.var_trunc {
                if c.degree_in(v) > k {
                    *c = c.truncate_in(v, k);
                }
            }
        }
    }

    pub fn dq(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Coefficient of `q^d`.
    pub fn coeff_at(&self, d: usize) -> Result<MultiPoly> {
        self.coeffs
            .get(d)
            .cloned()
            .ok_or(Error::BeyondTruncation {
                requested: d as i64,
                truncation: self.dq() as i64,
            })
    }

    pub fn truncate_q(&self, dq: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(dq + 1, MultiPoly::zero());
        QSeries {
            coeffs: c,
            var_trunc: self.var_trunc.clone(),
        }
    }

    /// Reassemble as a polynomial in `q`.
    pub fn to_poly(&self) -> MultiPoly {
        let q = MultiPoly::var("q");
        let mut out = MultiPoly::zero();
        for (d, c) in self.coeffs.iter().enumerate() {
            out = out.add(&c.mul(&q.pow(d as u32)));
        }
        out
    }

    fn merged_trunc(&self, other: &Self) -> BTreeMap<String, u32> {
        let mut t = self.var_trunc.clone();
        for (v, &k) in &other.var_trunc {
            let e = t.entry(v.clone()).or_insert(k);
            *e = (*e).min(k);
        }
        t
    }

    fn binary(&self, other: &Self, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Self {
        let n = self.dq().min(other.dq());
        let mut s = QSeries {
            coeffs: (0..=n).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect(),
            var_trunc: self.merged_trunc(other),
        };
        s.apply_trunc();
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Multiply every coefficient by a `q`-free polynomial.
    pub fn scale_poly(&self, p: &MultiPoly) -> Self {
        let mut s = self.map(|c| c.mul(p));
        s.apply_trunc();
        s
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
            var_trunc: self.var_trunc.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dq().min(other.dq());
        let trunc = self.merged_trunc(other);
        let mut out = vec![MultiPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let mut prod = self.coeffs[i].mul(&other.coeffs[j]);
                for (v, &k) in &trunc {
                    if prod.degree_in(v) > k {
                        prod = prod.truncate_in(v, k);
                    }
                }
                out[i + j] = out[i + j].add(&prod);
            }
        }
        QSeries {
            coeffs: out,
            var_trunc: trunc,
        }
    }

    /// Multiplicative inverse; the `q^0` coefficient must be a nonzero rational.
    pub fn inv(&self) -> Result<Self> {
        let c = match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => c.inv().unwrap(),
            _ => return Err(Error::NonUnitConstantTerm),
        };
        let n = self.dq();
        let mut out: Vec<MultiPoly> = vec![MultiPoly::constant(c.clone())];
        for m in 1..=n {
            let mut acc = MultiPoly::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !out[m - k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[m - k]));
                }
            }
            let mut next = acc.scale(&-&c);
            for (v, &k) in &self.var_trunc {
                if next.degree_in(v) > k {
                    next = next.truncate_in(v, k);
                }
            }
            out.push(next);
        }
        Ok(QSeries {
            coeffs: out,
            var_trunc: self.var_trunc.clone(),
        })
    }

    /// Integer power; negative exponents invert first.
    pub fn int_pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut result = Self::one(self.dq());
        result.var_trunc = self.var_trunc.clone();
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

    /// `outer(inner)`, where `inner` has zero `q^0` coefficient.
    pub fn compose(outer: &UniSeries, inner: &QSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = inner.dq().min(outer.order());
        let mut acc = QSeries::zero(inner.dq());
        acc.var_trunc = inner.var_trunc.clone();
        for k in (0..=n).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(&MultiPoly::constant(outer.coeff(k)));
        }
        Ok(acc)
    }

    /// Apply a polynomial map to every coefficient; used for substitutions.
    pub fn substitute(&self, var: &str, value: &MultiPoly) -> Self {
        self.map(|c| c.substitute(var, value))
    }
}

impl PartialEq for QSeries {
    /// Equality of coefficients up to the common truncation.
    fn eq(&self, other: &Self) -> bool {
        self.dq() == other.dq() && self.coeffs == other.coeffs
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.dq() + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for QSeries {
    fn zero_like(&self) -> Self {
        let mut z = QSeries::zero(self.dq());
        z.var_trunc = self.var_trunc.clone();
        z
    }
    fn one_like(&self) -> Self {
        let mut z = QSeries::one(self.dq());
        z.var_trunc = self.var_trunc.clone();
        z
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        QSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QSeries::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QSeries::mul(self, other)
    }
    fn neg(&self) -> Self {
        QSeries::neg(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        QSeries::scale(self, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn qs(s: &str, dq: usize) -> QSeries {
        QSeries::from_poly(&p(s), dq)
    }

    #[test]
    fn inverse_and_powers() {
        assert_eq!(qs("1-q", 3).inv().unwrap(), qs("1+q+q^2+q^3", 3));
        assert_eq!(qs("1+q*y", 2).int_pow(2).unwrap(), qs("1+2q*y+q^2*y^2", 2));
        assert_eq!(qs("1+q*y", 2).int_pow(-1).unwrap(), qs("1-q*y+q^2*y^2", 2));
        assert!(matches!(qs("q", 2).inv(), Err(Error::NonUnitConstantTerm)));
        assert!(matches!(qs("y+q", 2).inv(), Err(Error::NonUnitConstantTerm)));
    }

    #[test]
    fn coefficient_extraction() {
        let s = qs("1-q", 4).inv().unwrap().mul(&qs("1+q*y", 4).int_pow(5).unwrap());
        assert_eq!(s.coeff_at(2).unwrap(), p("1+5y+10y^2"));
        assert_eq!(s.coeff_at(0).unwrap(), MultiPoly::one());
        assert!(matches!(s.coeff_at(5), Err(Error::BeyondTruncation { .. })));
        let shifted = qs("q", 4).mul(&s);
        assert!(shifted.coeff_at(0).unwrap().is_zero());
    }

    #[test]
    fn composition() {
        let one_plus_z = UniSeries::from_ints(&[1, 1], 2);
        let inner = qs("q*y+q*y^2+q*y^3", 2).with_truncation("y", 2);
        let c = QSeries::compose(&one_plus_z, &inner).unwrap();
        assert_eq!(c, qs("1+q*y+q*y^2", 2));
        let geo = UniSeries::one(1).sub(&UniSeries::identity(1));
        let geo = geo.truncate(4).inv().unwrap();
        let c = QSeries::compose(&geo, &qs("q", 4)).unwrap();
        assert_eq!(c, qs("1+q+q^2+q^3+q^4", 4));
        assert!(QSeries::compose(&geo, &qs("1+q", 4)).is_err());
    }

    #[test]
    fn truncation_is_sticky() {
        let a = qs("1-q*y^2", 2).with_truncation("y", 3);
        let inv = a.inv().unwrap();
        assert_eq!(inv.coeff_at(2).unwrap(), MultiPoly::zero());
        let b = qs("1+y+y^2+y^3+q*y^3", 2).with_truncation("y", 3);
        assert_eq!(b.mul(&b).coeff_at(1).unwrap(), p("2y^3"));
    }
}
