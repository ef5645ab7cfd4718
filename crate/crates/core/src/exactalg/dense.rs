//! Dense multivariate power series with per-variable degree caps.
//!
//! Coefficients are stored as big-integer numerators over one shared
//! denominator. Exponent vectors are laid out mixed-radix, so the product of
//! two monomials whose exponents fit the caps lands at the sum of their flat
//! indices; a packed guard-bit test decides fit without unpacking.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Variable caps and the derived index tables for [`TruncSeries`].
#[derive(Debug)]
pub struct Shape {
    caps: Vec<u32>,
    strides: Vec<usize>,
    len: usize,
    packed: Vec<u64>,
    bias: u64,
    guard: u64,
    tdeg: Vec<u32>,
}

impl Shape {
    pub fn new(caps: &[u32]) -> Arc<Shape> {
        let mut strides = Vec::with_capacity(caps.len());
        let mut len = 1usize;
        for &c in caps.iter().rev() {
            strides.push(len);
            len = len.checked_mul(c as usize + 1).expect("shape too large");
        }
        strides.reverse();
        let mut offsets = Vec::with_capacity(caps.len());
        let mut bias = 0u64;
        let mut guard = 0u64;
        let mut off = 0u32;
        for &c in caps {
            let mut w = 1u32;
            while (1u64 << (w - 1)) <= c as u64 {
                w += 1;
            }
            assert!(off + w <= 64, "too many series variables for packed indexing");
            let m = 1u64 << (w - 1);
            bias |= (m - 1 - c as u64) << off;
            guard |= m << off;
            offsets.push(off);
            off += w;
        }
        let mut packed = Vec::with_capacity(len);
        let mut tdeg = Vec::with_capacity(len);
        for flat in 0..len {
            let mut rem = flat;
            let mut p = 0u64;
            let mut t = 0u32;
            for (v, &s) in strides.iter().enumerate() {
                let e = (rem / s) as u64;
                rem %= s;
                p |= e << offsets[v];
                t += e as u32;
            }
            packed.push(p);
            tdeg.push(t);
        }
        Arc::new(Shape {
            caps: caps.to_vec(),
            strides,
            len,
            packed,
            bias,
            guard,
            tdeg,
        })
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Flat index of an exponent vector, `None` if it exceeds a cap.
    pub fn index(&self, exps: &[u32]) -> Option<usize> {
        assert_eq!(exps.len(), self.caps.len());
        let mut i = 0;
        for ((&e, &c), &s) in exps.iter().zip(&self.caps).zip(&self.strides) {
            if e > c {
                return None;
            }
            i += e as usize * s;
        }
        Some(i)
    }

    pub fn exps(&self, flat: usize) -> Vec<u32> {
        let mut rem = flat;
        self.strides
            .iter()
            .map(|&s| {
                let e = rem / s;
                rem %= s;
                e as u32
            })
            .collect()
    }

    #[inline]
    fn fits(&self, i: usize, j: usize) -> bool {
        (self.packed[i] + self.packed[j] + self.bias) & self.guard == 0
    }
}

/// Truncated multivariate power series over the rationals.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    shape: Arc<Shape>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl TruncSeries {
    pub fn zero(shape: &Arc<Shape>) -> Self {
        TruncSeries {
            shape: shape.clone(),
            num: vec![BigInt::zero(); shape.len],
            den: BigInt::one(),
        }
    }

    pub fn constant(shape: &Arc<Shape>, c: &Rational) -> Self {
        let mut s = Self::zero(shape);
        s.num[0] = c.numer().clone();
        s.den = c.denom().clone();
        s
    }

    pub fn one(shape: &Arc<Shape>) -> Self {
        Self::constant(shape, &Rational::one())
    }

    /// Sum of the given monomials; monomials beyond a cap are dropped.
    pub fn from_terms<I>(shape: &Arc<Shape>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut vals: Vec<(usize, Rational)> = Vec::new();
        let mut den = BigInt::one();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            if let Some(i) = shape.index(&e) {
                den = den.lcm(c.denom());
                vals.push((i, c));
            }
        }
        let mut s = Self::zero(shape);
        for (i, c) in vals {
            s.num[i] += c.numer() * (&den / c.denom());
        }
        s.den = den;
        s.reduce();
        s
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        match self.shape.index(exps) {
            Some(i) => Rational::new(self.num[i].clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        Rational::new(self.num[0].clone(), self.den.clone())
    }

    /// Nonzero coefficients with their exponent vectors, in flat order.
    pub fn nonzero_terms(&self) -> Vec<(Vec<u32>, Rational)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_zero())
            .map(|(i, n)| (self.shape.exps(i), Rational::new(n.clone(), self.den.clone())))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|n| n.is_zero())
    }

    fn same_shape(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.shape, &other.shape) || self.shape.caps == other.shape.caps,
            "series shapes differ"
        );
    }

    fn reduce(&mut self) {
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if !n.is_zero() {
                g = g.gcd(n);
                if g.is_one() {
                    return;
                }
            }
        }
        if self.num.iter().all(|n| n.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        for n in &mut self.num {
            if !n.is_zero() {
                *n /= &g;
            }
        }
        self.den /= &g;
        if self.den.is_negative() {
            self.den = -&self.den;
            for n in &mut self.num {
                *n = -&*n;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_shape(other);
        let g = self.den.gcd(&other.den);
        let fa = &other.den / &g;
        let fb = &self.den / &g;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &fa + b * &fb)
            .collect();
        let mut s = TruncSeries {
            shape: self.shape.clone(),
            num,
            den: &self.den * &fa,
        };
        s.reduce();
        s
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            shape: self.shape.clone(),
            num: self.num.iter().map(|n| -n).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut s = TruncSeries {
            shape: self.shape.clone(),
            num: self.num.iter().map(|n| n * c.numer()).collect(),
            den: &self.den * c.denom(),
        };
        s.reduce();
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_shape(other);
        let shape = &self.shape;
        let a: Vec<usize> = (0..shape.len).filter(|&i| !self.num[i].is_zero()).collect();
        let b: Vec<usize> = (0..shape.len).filter(|&j| !other.num[j].is_zero()).collect();
        let mut out = vec![BigInt::zero(); shape.len];
        for &i in &a {
            let ai = &self.num[i];
            for &j in &b {
                if i + j >= shape.len {
                    break;
                }
                if shape.fits(i, j) {
                    out[i + j] += ai * &other.num[j];
                }
            }
        }
        let mut s = TruncSeries {
            shape: shape.clone(),
            num: out,
            den: &self.den * &other.den,
        };
        s.reduce();
        s
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Self> {
        let n0 = self.num[0].clone();
        if n0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let shape = &self.shape;
        let maxdeg = shape.tdeg.iter().copied().max().unwrap_or(0);
        let mut n0pow = vec![BigInt::one()];
        for k in 1..=maxdeg as usize + 1 {
            let next = &n0pow[k - 1] * &n0;
            n0pow.push(next);
        }
        // 1/N = Σ X_m / n0^{|m|+1}, with X_m = -Σ_{k≠0} N_k n0^{|k|-1} X_{m-k}
        let support: Vec<usize> = (1..shape.len).filter(|&k| !self.num[k].is_zero()).collect();
        let mut x = vec![BigInt::zero(); shape.len];
        x[0] = BigInt::one();
        for m in 1..shape.len {
            let mut acc = BigInt::zero();
            for &k in &support {
                if k > m {
                    break;
                }
                let r = m - k;
                if x[r].is_zero() || !shape.fits(k, r) {
                    continue;
                }
                acc += &self.num[k] * &n0pow[shape.tdeg[k] as usize - 1] * &x[r];
            }
            x[m] = -acc;
        }
        // common denominator n0^{maxdeg+1}
        let num = x
            .into_iter()
            .enumerate()
            .map(|(m, v)| v * &n0pow[(maxdeg - shape.tdeg[m]) as usize] * &self.den)
            .collect();
        let mut s = TruncSeries {
            shape: shape.clone(),
            num,
            den: n0pow[maxdeg as usize + 1].clone(),
        };
        if s.den.is_negative() {
            s.den = -&s.den;
            for v in &mut s.num {
                *v = -&*v;
            }
        }
        s.reduce();
        Ok(s)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut result = Self::one(&self.shape);
        let mut b = base;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                result = if first { b.clone() } else { result.mul(&b) };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(result)
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.num[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let maxdeg = self.shape.tdeg.iter().copied().max().unwrap_or(0);
        let mut term = Self::one(&self.shape);
        let mut acc = term.clone();
        for n in 1..=maxdeg as i64 {
            term = term.mul(self).scale(&Rational::new(1, n));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        self.shape.caps == other.shape.caps && self.den == other.den && self.num == other.num
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn product_respects_caps() {
        let sh = Shape::new(&[2, 1]);
        let a = TruncSeries::from_terms(&sh, [(vec![0, 0], r(1, 1)), (vec![1, 0], r(1, 1))]);
        let b = TruncSeries::from_terms(&sh, [(vec![0, 0], r(1, 1)), (vec![1, 1], r(1, 2))]);
        let p = a.mul(&b);
        assert_eq!(p.coeff(&[0, 0]), r(1, 1));
        assert_eq!(p.coeff(&[1, 0]), r(1, 1));
        assert_eq!(p.coeff(&[1, 1]), r(1, 2));
        assert_eq!(p.coeff(&[2, 1]), r(1, 2));
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(&[2, 0]), r(1, 1));
        assert_eq!(sq.coeff(&[2, 1]), r(2, 1) * r(1, 2) + r(2, 1) * r(1, 2));
    }

    #[test]
    fn inverse_is_two_sided() {
        let sh = Shape::new(&[3, 2, 2]);
        let a = TruncSeries::from_terms(
            &sh,
            [
                (vec![0, 0, 0], r(3, 2)),
                (vec![1, 0, 0], r(-1, 3)),
                (vec![0, 1, 1], r(5, 1)),
                (vec![2, 0, 1], r(1, 7)),
            ],
        );
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), TruncSeries::one(&sh));
        assert_eq!(a.pow(-2).unwrap().mul(&a.pow(2).unwrap()), TruncSeries::one(&sh));
    }

    #[test]
    fn geometric_inverse() {
        let sh = Shape::new(&[4]);
        let a = TruncSeries::from_terms(&sh, [(vec![0], r(1, 1)), (vec![1], r(-1, 1))]);
        let inv = a.inv().unwrap();
        for k in 0..=4 {
            assert_eq!(inv.coeff(&[k]), r(1, 1));
        }
    }

    #[test]
    fn exponential() {
        let sh = Shape::new(&[4]);
        let x = TruncSeries::from_terms(&sh, [(vec![1], r(2, 1))]);
        let e = x.exp().unwrap();
        assert_eq!(e.coeff(&[3]), r(8, 6));
        assert_eq!(e.mul(&x.neg().exp().unwrap()), TruncSeries::one(&sh));
    }
}
