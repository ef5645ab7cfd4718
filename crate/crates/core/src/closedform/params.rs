use crate::error::{Error, Result};

/// A curve of genus `g`, a bundle `E` of rank `N` and degree `deg_e`, a line
/// bundle `L` of degree `deg_l`, and optional line bundles `M_p` of degrees
/// `duals[p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveBundleParams {
    pub genus: u32,
    pub rank: u32,
    pub deg_e: i64,
    pub deg_l: i64,
    pub duals: Vec<i64>,
}

/// Riemann-Roch values entering the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerChar {
    /// `χ(O_C) = 1 - g`
    pub chi_o: i64,
    /// `χ(E ⊗ L) = deg E + N (ℓ + 1 - g)`
    pub chi_el: i64,
    /// `χ(M_p^∨ ⊗ L) = ℓ - m_p + 1 - g`
    pub chi_dual: Vec<i64>,
}

impl CurveBundleParams {
    pub fn new(genus: u32, rank: u32, deg_e: i64, deg_l: i64) -> Self {
        CurveBundleParams {
            genus,
            rank,
            deg_e,
            deg_l,
            duals: Vec::new(),
        }
    }

    pub fn with_duals(mut self, duals: &[i64]) -> Self {
        self.duals = duals.to_vec();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::HypothesisViolated("rank must be at least 1".into()));
        }
        if self.duals.len() >= self.rank as usize {
            return Err(Error::RankBoundViolated(format!(
                "{} dual factors for rank {}; at most rank - 1 allowed",
                self.duals.len(),
                self.rank
            )));
        }
        Ok(())
    }
}

pub fn chi_values(p: &CurveBundleParams) -> EulerChar {
    let g = p.genus as i64;
    let n = p.rank as i64;
    EulerChar {
        chi_o: 1 - g,
        chi_el: p.deg_e + n * (p.deg_l + 1 - g),
        chi_dual: p.duals.iter().map(|m| p.deg_l - m + 1 - g).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_roch_examples() {
        let e = chi_values(&CurveBundleParams::new(0, 2, 3, 0));
        assert_eq!((e.chi_o, e.chi_el), (1, 5));
        assert_eq!(chi_values(&CurveBundleParams::new(1, 3, 7, -2)).chi_o, 0);
        let e = chi_values(&CurveBundleParams::new(0, 3, 0, 1).with_duals(&[0]));
        assert_eq!(e.chi_dual, vec![2]);
    }

    #[test]
    fn additive_in_degree() {
        for deg in -3..4 {
            let a = chi_values(&CurveBundleParams::new(2, 3, deg, 1)).chi_el;
            let b = chi_values(&CurveBundleParams::new(2, 3, deg + 1, 1)).chi_el;
            assert_eq!(b - a, 1);
        }
    }

    #[test]
    fn dual_count_is_bounded() {
        assert!(CurveBundleParams::new(0, 2, 0, 0).with_duals(&[0]).validate().is_ok());
        assert!(matches!(
            CurveBundleParams::new(0, 2, 0, 0).with_duals(&[0, 1]).validate(),
            Err(Error::RankBoundViolated(_))
        ));
    }
}
