use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, QSeries, Rational};
use crate::symfunc::{charpoly_coeffs, elementary_from_charpoly, schur_jt, JtMode, Partition, SymBasis};

/// A monic polynomial in `z` whose roots feed the Schur evaluations.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystemSpec {
    pub charpoly: MultiPoly,
    pub nroots: usize,
    pub tag: String,
}

fn monomial(vars: &[(&str, u32)]) -> MultiPoly {
    MultiPoly::monomial(Rational::one(), vars)
}

fn z_minus_one_pow(n: u32) -> MultiPoly {
    MultiPoly::var("z").sub(&MultiPoly::one()).pow(n)
}

fn dual_product(r: usize) -> MultiPoly {
    (1..=r).fold(MultiPoly::one(), |acc, p| {
        let x = format!("x{p}");
        acc.mul(&MultiPoly::one().add(&monomial(&[("z", 1), (&x, 1)])))
    })
}

impl RootSystemSpec {
    fn build(charpoly: MultiPoly, tag: &str) -> Self {
        let nroots = charpoly.degree_in("z") as usize;
        RootSystemSpec {
            charpoly,
            nroots,
            tag: tag.to_string(),
        }
    }

    /// `z(z-1)^N - q(z+y)`
    pub fn punctual_exterior(n: u32) -> Self {
        Self::punctual_dual(n, 0)
    }

    /// `z(z-1)^N - q(z+y) Π_{p≤r} (1 + z x_p)`
    pub fn punctual_dual(n: u32, r: usize) -> Self {
        let z = MultiPoly::var("z");
        let zy = z.add(&MultiPoly::var("y"));
        let p = z
            .mul(&z_minus_one_pow(n))
            .sub(&MultiPoly::var("q").mul(&zy).mul(&dual_product(r)));
        Self::build(p, if r == 0 { "punctual-exterior" } else { "punctual-dual" })
    }

    /// `(z-1)^N (z-y) - q z`
    pub fn punctual_sym(n: u32) -> Self {
        let z = MultiPoly::var("z");
        let p = z_minus_one_pow(n)
            .mul(&z.sub(&MultiPoly::var("y")))
            .sub(&monomial(&[("q", 1), ("z", 1)]));
        Self::build(p, "punctual-sym")
    }

    /// `(z-1)^N - q(z+y) z^{r-1}`
    pub fn higher_rank(n: u32, r: u32) -> Self {
        let zy = MultiPoly::var("z").add(&MultiPoly::var("y"));
        let p = z_minus_one_pow(n).sub(&monomial(&[("q", 1), ("z", r - 1)]).mul(&zy));
        Self::build(p, "higher-rank")
    }

    /// `(z-1)^N - q z^{r-1}`
    pub fn det_linebundle(n: u32, r: u32) -> Self {
        let p = z_minus_one_pow(n).sub(&monomial(&[("q", 1), ("z", r - 1)]));
        Self::build(p, "det-linebundle")
    }

    pub fn basis(&self) -> Result<SymBasis<MultiPoly>> {
        elementary_from_charpoly(&charpoly_coeffs(&self.charpoly))
    }
}

/// `[q^d] s_λ` over the roots of a [`RootSystemSpec`], with the homogeneous
/// list extended on demand and results cached per shape.
pub struct SchurCoeffs {
    basis: SymBasis<QSeries>,
    d: usize,
    cache: HashMap<Vec<u32>, MultiPoly>,
}

impl SchurCoeffs {
    /// `y_trunc` drops powers of `y` above the given degree.
    pub fn new(roots: &RootSystemSpec, d: usize, y_trunc: Option<u32>) -> Result<Self> {
        Ok(SchurCoeffs {
            basis: roots.basis()?.to_qseries(d, y_trunc),
            d,
            cache: HashMap::new(),
        })
    }

    pub fn coeff(&mut self, lambda: &Partition) -> Result<MultiPoly> {
        if let Some(v) = self.cache.get(lambda.parts()) {
            return Ok(v.clone());
        }
        let need = lambda.first() as usize + lambda.len().saturating_sub(1);
        if self.basis.max_h() < need {
            let b = self.basis.clone();
            self.basis = b.with_homogeneous(need);
        }
        let v = schur_jt(lambda, &self.basis, JtMode::H)?.coeff_at(self.d)?;
        self.cache.insert(lambda.parts().to_vec(), v.clone());
        Ok(v)
    }
}

/// `(-1)^e`
pub(crate) fn sign(e: i64) -> Rational {
    Rational::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(msg()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn charpolys() {
        let r = RootSystemSpec::punctual_exterior(2);
        assert_eq!(r.charpoly, p("z^3-2z^2+z-q*z-q*y"));
        assert_eq!(r.nroots, 3);
        let r = RootSystemSpec::punctual_dual(3, 1);
        assert_eq!(r.nroots, 4);
        assert_eq!(r.charpoly.coeff_in("z", 2), p("3-q*x1"));
        assert_eq!(RootSystemSpec::punctual_sym(1).charpoly, p("z^2-z-y*z+y-q*z"));
        assert_eq!(RootSystemSpec::higher_rank(2, 1).charpoly, p("z^2-2z+1-q*z-q*y"));
        assert_eq!(RootSystemSpec::det_linebundle(3, 2).nroots, 3);
    }

    #[test]
    fn schur_at_q0_counts_tableaux() {
        // all roots equal 1 at q = 0
        let roots = RootSystemSpec::det_linebundle(3, 1);
        let mut s = SchurCoeffs::new(&roots, 0, None).unwrap();
        let lam = Partition::new(&[2, 1]).unwrap();
        assert_eq!(s.coeff(&lam).unwrap(), MultiPoly::constant(Rational::from(8)));
    }
}
