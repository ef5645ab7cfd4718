use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, QSeries, Rational, Ring};

/// Elementary and complete homogeneous symmetric functions of the roots of
/// a monic polynomial, with values in a ring `R`.
///
/// The `h` list is extended only through [`SymBasis::with_homogeneous`];
/// after that the basis is read-only.
#[derive(Clone, Debug)]
pub struct SymBasis<R> {
    e: Vec<R>,
    h: Vec<R>,
}

/// Vieta: `P(z) = z^n - e_1 z^(n-1) + e_2 z^(n-2) - ...`.
///
/// `coeffs[j]` is the coefficient of `z^j`; the last entry must be 1.
pub fn elementary_from_charpoly(coeffs: &[MultiPoly]) -> Result<SymBasis<MultiPoly>> {
    let n = coeffs.len().checked_sub(1).ok_or(Error::NotMonic)?;
    if coeffs[n].as_constant().is_none_or(|c| !c.is_one()) {
        return Err(Error::NotMonic);
    }
    let e = (0..=n)
        .map(|j| {
            let c = &coeffs[n - j];
            if j % 2 == 1 {
                c.neg()
            } else {
                c.clone()
            }
        })
        .collect();
    Ok(SymBasis::from_elementary(e))
}

/// Split a polynomial in `z` into ascending coefficients.
pub fn charpoly_coeffs(p: &MultiPoly) -> Vec<MultiPoly> {
    let n = p.degree_in("z");
    (0..=n).map(|j| p.coeff_in("z", j)).collect()
}

/// `h_1..h_k` from `e` via `h_k = Σ_{i=1}^{min(k,n)} (-1)^(i-1) e_i h_(k-i)`.
pub fn homogeneous_from_elementary<R: Ring>(basis: SymBasis<R>, k: usize) -> SymBasis<R> {
    basis.with_homogeneous(k)
}

impl<R: Ring> SymBasis<R> {
    /// `e[0]` must be one; `h_0 = 1` is filled in.
    pub fn from_elementary(e: Vec<R>) -> Self {
        let one = e[0].one_like();
        SymBasis { e, h: vec![one] }
    }

    /// Extend the homogeneous list through index `k`.
    pub fn with_homogeneous(mut self, k: usize) -> Self {
        let n = self.nvars();
        while self.h.len() <= k {
            let m = self.h.len();
            let mut acc = self.e[0].zero_like();
            for i in 1..=m.min(n) {
                let t = self.e[i].mul(&self.h[m - i]);
                acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
            }
            self.h.push(acc);
        }
        self
    }

    pub fn nvars(&self) -> usize {
        self.e.len() - 1
    }

    /// `e_i`; zero for negative `i` or `i > n`.
    pub fn e(&self, i: i64) -> R {
        if i < 0 || i as usize >= self.e.len() {
            self.e[0].zero_like()
        } else {
            self.e[i as usize].clone()
        }
    }

    /// `h_k`; zero for negative `k`, an error past the computed range.
    pub fn h(&self, k: i64) -> Result<R> {
        if k < 0 {
            return Ok(self.e[0].zero_like());
        }
        self.h.get(k as usize).cloned().ok_or(Error::BasisTooShort {
            have: self.h.len() - 1,
            need: k as usize,
        })
    }

    pub fn max_h(&self) -> usize {
        self.h.len() - 1
    }

    pub fn elementary(&self) -> &[R] {
        &self.e
    }

    pub fn homogeneous(&self) -> &[R] {
        &self.h
    }

    /// `Σ_{i=0}^{min(k,n)} (-1)^i e_i h_(k-i)` for every computed `k >= 1`;
    /// all must vanish.
    pub fn newton_residuals(&self) -> Vec<R> {
        (1..self.h.len())
            .map(|k| {
                let mut acc = self.e[0].zero_like();
                for i in 0..=k.min(self.nvars()) {
                    let t = self.e[i].mul(&self.h[k - i]);
                    acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                }
                acc
            })
            .collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SymBasis<S> {
        SymBasis {
            e: self.e.iter().map(&f).collect(),
            h: self.h.iter().map(&f).collect(),
        }
    }
}

impl SymBasis<Rational> {
    /// Basis of explicit rational roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut e = vec![Rational::one()];
        for r in roots {
            let mut next = e.clone();
            next.push(Rational::zero());
            for j in 1..next.len() {
                next[j] = &e.get(j).cloned().unwrap_or_default() + &(r * &e[j - 1]);
            }
            e = next;
        }
        SymBasis::from_elementary(e)
    }
}

impl SymBasis<MultiPoly> {
    /// Re-express over `q`-series truncated at `dq`, optionally also
    /// truncating `y`. Only `[q^0..q^dq]` of later products is kept.
    pub fn to_qseries(&self, dq: usize, y_trunc: Option<u32>) -> SymBasis<QSeries> {
        self.map(|p| {
            let s = QSeries::from_poly(p, dq);
            match y_trunc {
                Some(k) => s.with_truncation("y", k),
                None => s,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn vieta_examples() {
        let b = elementary_from_charpoly(&charpoly_coeffs(&p("z^2-3z+2"))).unwrap();
        assert_eq!(b.elementary(), &[p("1"), p("3"), p("2")]);
        // z(z-1)^2 - q(z+y)
        let b = elementary_from_charpoly(&charpoly_coeffs(&p("z^3-2z^2+z-q*z-q*y"))).unwrap();
        assert_eq!(b.elementary(), &[p("1"), p("2"), p("1-q"), p("y*q")]);
        // (z-1)^2 - q(z+y)
        let b = elementary_from_charpoly(&charpoly_coeffs(&p("z^2-2z+1-q*z-q*y"))).unwrap();
        assert_eq!(b.elementary(), &[p("1"), p("2+q"), p("1-q*y")]);
        assert!(matches!(
            elementary_from_charpoly(&charpoly_coeffs(&p("2z^2+1"))),
            Err(Error::NotMonic)
        ));
    }

    #[test]
    fn homogeneous_examples() {
        let b = SymBasis::from_elementary(vec![p("1"), p("2"), p("1")]).with_homogeneous(2);
        assert_eq!(b.h(2).unwrap(), p("3"));
        let b = SymBasis::from_elementary(vec![p("1"), p("0"), p("0")]).with_homogeneous(4);
        assert!((1..=4).all(|k| b.h(k).unwrap().is_zero()));
        let b = elementary_from_charpoly(&charpoly_coeffs(&p("z^3-2z^2+z-q*z-q*y")))
            .unwrap()
            .with_homogeneous(5);
        assert_eq!(b.h(1).unwrap(), p("2"));
        assert!(b.newton_residuals().iter().all(|r| r.is_zero()));
        assert!(matches!(b.h(6), Err(Error::BasisTooShort { need: 6, .. })));
    }

    #[test]
    fn roots_basis() {
        let b = SymBasis::from_roots(&[Rational::from(1), Rational::from(2)]).with_homogeneous(3);
        assert_eq!(b.elementary(), &[Rational::from(1), Rational::from(3), Rational::from(2)]);
        // h_3(1,2) = 1 + 2 + 4 + 8
        assert_eq!(b.h(3).unwrap(), Rational::from(15));
    }
}
