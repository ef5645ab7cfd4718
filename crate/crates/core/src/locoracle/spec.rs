use crate::error::{Error, Result};

/// `E = ⊕ O(a_i)` on `P^1` with torus weights `-w_i`, twisted by `L` of
/// degree `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBundleSpec {
    pub a: Vec<i64>,
    pub weights: Vec<i64>,
    pub deg_l: i64,
}

impl SplitBundleSpec {
    pub fn new(a: &[i64], weights: &[i64], deg_l: i64) -> Self {
        SplitBundleSpec {
            a: a.to_vec(),
            weights: weights.to_vec(),
            deg_l,
        }
    }

    /// Weights `1, 2, ..., N`.
    pub fn with_default_weights(a: &[i64], deg_l: i64) -> Self {
        let w: Vec<i64> = (1..=a.len() as i64).collect();
        Self::new(a, &w, deg_l)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `b_i = a_i + ℓ + 1`
    pub fn b(&self) -> Vec<i64> {
        self.a.iter().map(|a| a + self.deg_l + 1).collect()
    }

    /// `χ(E ⊗ L) = Σ b_i`
    pub fn chi(&self) -> i64 {
        self.b().iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_empty() {
            return Err(Error::HypothesisViolated("rank must be at least 1".into()));
        }
        if self.weights.len() != self.a.len() {
            return Err(Error::HypothesisViolated(format!(
                "{} weights for rank {}",
                self.weights.len(),
                self.a.len()
            )));
        }
        let mut w = self.weights.clone();
        w.sort_unstable();
        if w.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::HypothesisViolated(format!(
                "weights {:?} are not pairwise distinct",
                self.weights
            )));
        }
        Ok(())
    }

    pub(crate) fn require_nonnegative_b(&self) -> Result<()> {
        if let Some(b) = self.b().into_iter().find(|&b| b < 0) {
            return Err(Error::HypothesisViolated(format!(
                "b_i = a_i + ℓ + 1 = {b} is negative"
            )));
        }
        Ok(())
    }
}

/// A torus-fixed component: a composition of `d`, together with the subset
/// `I` of summands for higher-rank quotients (all of `[N]` otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocus {
    pub degrees: Vec<u32>,
    pub subset: Vec<usize>,
}

impl FixedLocus {
    /// Loci `P^{d_1} × ... × P^{d_N}` for the punctual Quot scheme.
    pub fn punctual(n: usize, d: u32) -> Vec<FixedLocus> {
        compositions(d, n)
            .into_iter()
            .map(|degrees| FixedLocus {
                degrees,
                subset: (0..n).collect(),
            })
            .collect()
    }

    /// Loci indexed by `(d⃗, I)` with `|I| = s`.
    pub fn higher_rank(n: usize, s: usize, d: u32) -> Vec<FixedLocus> {
        let mut out = Vec::new();
        for subset in subsets(n, s) {
            for degrees in compositions(d, s) {
                out.push(FixedLocus {
                    degrees,
                    subset: subset.clone(),
                });
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

/// Weak compositions of `d` into `parts` parts, lexicographic.
pub fn compositions(d: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Size guards and the ε window for the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_rank: usize,
    pub max_d: u32,
    /// ε orders kept per fixed-point term; `None` uses the pole-order bound.
    pub eps_window: Option<u32>,
    /// Times the window is doubled after `EpsWindowExhausted`.
    pub max_retries: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_rank: 3,
            max_d: 4,
            eps_window: None,
            max_retries: 4,
        }
    }
}

impl OracleConfig {
    pub(crate) fn guard(&self, n: usize, d: u32) -> Result<()> {
        if n > self.max_rank || d > self.max_d {
            return Err(Error::GuardExceeded(format!(
                "N={n}, d={d} exceeds oracle limits N≤{}, d≤{}",
                self.max_rank, self.max_d
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(FixedLocus::higher_rank(3, 2, 1).len(), 6);
        assert_eq!(FixedLocus::punctual(2, 3).len(), 4);
    }

    #[test]
    fn spec_validation() {
        let s = SplitBundleSpec::new(&[0, 1], &[1, 1], 0);
        assert!(matches!(s.validate(), Err(Error::HypothesisViolated(_))));
        let s = SplitBundleSpec::with_default_weights(&[0, 1], 2);
        assert_eq!(s.b(), vec![3, 4]);
        assert_eq!(s.chi(), 7);
        assert!(s.validate().is_ok());
        assert!(SplitBundleSpec::new(&[-2], &[0], 0).require_nonnegative_b().is_err());
    }
}
