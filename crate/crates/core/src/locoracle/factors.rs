//! Building blocks of a fixed-point contribution.
//!
//! With `h_i = ε h̃_i`, `α_i = e^{w_i ε}` and `z_i = e^{ε(w_i + h̃_i)}`, every
//! factor is a power series in `ε` whose coefficients are polynomials in the
//! `h̃_i`. Differences `z_i - α_j` and `z_i - z_j` are divided by `ε` so that
//! their constant terms `w_i - w_j` are invertible.

use std::sync::Arc;

use crate::error::Result;
use crate::exactalg::dense::{Shape, TruncSeries};
use crate::exactalg::{binom, MultiPoly, Rational};

fn factorial(n: u32) -> Rational {
    (1..=n as i64).map(Rational::from).product()
}

/// Dense series ring `Q[ε, h̃, y, x_1..x_r]` with caps fitted to one fixed
/// locus.
pub(crate) struct LocRing {
    pub shape: Arc<Shape>,
    eps_cap: u32,
    /// shape slot and cap of `h̃_i` per summand, `None` when `d_i = 0` or the
    /// summand is outside the locus
    h: Vec<Option<(usize, u32)>>,
    y: Option<usize>,
    x: Vec<usize>,
    weights: Vec<i64>,
}

impl LocRing {
    /// `degrees[i]` is the cap on `h̃_i` (use 0 for summands not in the locus).
    pub fn new(weights: &[i64], degrees: &[u32], eps_cap: u32, y_cap: Option<u32>, x_caps: &[u32]) -> Self {
        let mut caps = vec![eps_cap];
        let h = degrees
            .iter()
            .map(|&d| {
                (d > 0).then(|| {
                    caps.push(d);
                    (caps.len() - 1, d)
                })
            })
            .collect();
        let y = y_cap.map(|c| {
            caps.push(c);
            caps.len() - 1
        });
        let x = x_caps
            .iter()
            .map(|&c| {
                caps.push(c);
                caps.len() - 1
            })
            .collect();
        LocRing {
            shape: Shape::new(&caps),
            eps_cap,
            h,
            y,
            x,
            weights: weights.to_vec(),
        }
    }

    fn nvars(&self) -> usize {
        self.shape.caps().len()
    }

    fn exps(&self, slots: &[(usize, u32)]) -> Vec<u32> {
        let mut e = vec![0; self.nvars()];
        for &(s, k) in slots {
            e[s] += k;
        }
        e
    }

    pub fn one(&self) -> TruncSeries {
        TruncSeries::one(&self.shape)
    }

    pub fn constant(&self, c: i64) -> TruncSeries {
        TruncSeries::constant(&self.shape, &Rational::from(c))
    }

    pub fn y(&self) -> TruncSeries {
        let slot = self.y.expect("ring built without y");
        TruncSeries::from_terms(&self.shape, [(self.exps(&[(slot, 1)]), Rational::one())])
    }

    pub fn x(&self, p: usize) -> TruncSeries {
        TruncSeries::from_terms(&self.shape, [(self.exps(&[(self.x[p], 1)]), Rational::one())])
    }

    /// Terms of `(w_i + h̃_i)^n / n!` placed at `ε^{n-1}`, for `n ≥ 1`.
    fn shifted_exp_terms(&self, i: usize, sign: i64) -> Vec<(Vec<u32>, Rational)> {
        let w = Rational::from(self.weights[i]);
        let mut out = Vec::new();
        for n in 1..=self.eps_cap + 1 {
            let hcap = self.h[i].map_or(0, |(_, c)| c).min(n);
            for m in 0..=hcap {
                let c = binom(n as i64, m as i64) * w.pow((n - m) as i64) / factorial(n)
                    * Rational::from(sign);
                let mut slots = vec![(0, n - 1)];
                if m > 0 {
                    slots.push((self.h[i].unwrap().0, m));
                }
                out.push((self.exps(&slots), c));
            }
        }
        out
    }

    /// `ε (w_i + h̃_i)`
    fn log_z(&self, i: usize) -> TruncSeries {
        let mut terms = vec![(self.exps(&[(0, 1)]), Rational::from(self.weights[i]))];
        if let Some((slot, _)) = self.h[i] {
            terms.push((self.exps(&[(0, 1), (slot, 1)]), Rational::one()));
        }
        TruncSeries::from_terms(&self.shape, terms)
    }

    /// `z_i^k`
    pub fn z_pow(&self, i: usize, k: i64) -> Result<TruncSeries> {
        self.log_z(i).scale(&Rational::from(k)).exp()
    }

    /// `α_i^k`
    pub fn alpha_pow(&self, i: usize, k: i64) -> Result<TruncSeries> {
        let t = (self.exps(&[(0, 1)]), Rational::from(k * self.weights[i]));
        TruncSeries::from_terms(&self.shape, [t]).exp()
    }

    /// `(z_i - α_j) / ε`
    pub fn z_minus_alpha(&self, i: usize, j: usize) -> TruncSeries {
        let w = Rational::from(self.weights[j]);
        let mut terms = self.shifted_exp_terms(i, 1);
        for n in 1..=self.eps_cap + 1 {
            terms.push((self.exps(&[(0, n - 1)]), -(w.pow(n as i64) / factorial(n))));
        }
        TruncSeries::from_terms(&self.shape, terms)
    }

    /// `(z_i - z_j) / ε`
    pub fn z_minus_z(&self, i: usize, j: usize) -> TruncSeries {
        let mut terms = self.shifted_exp_terms(i, 1);
        terms.extend(self.shifted_exp_terms(j, -1));
        TruncSeries::from_terms(&self.shape, terms)
    }

    /// `h_i / (z_i - α_i) = e^{-w_i ε} · h̃_i ε / (e^{h̃_i ε} - 1)`
    pub fn todd_factor(&self, i: usize) -> Result<TruncSeries> {
        let inv_alpha = self.alpha_pow(i, -1)?;
        let Some((slot, cap)) = self.h[i] else {
            return Ok(inv_alpha);
        };
        // (e^x - 1)/x = Σ x^n/(n+1)!
        let terms = (0..=cap.min(self.eps_cap)).map(|n| (self.exps(&[(0, n), (slot, n)]), factorial(n + 1).inv().unwrap()));
        Ok(inv_alpha.mul(&TruncSeries::from_terms(&self.shape, terms).inv()?))
    }

    /// Collect `[h̃^{degrees}]` as a list indexed by the power of `ε`, with
    /// coefficients polynomials in `y` and `x_p`.
    pub fn extract(&self, s: &TruncSeries, degrees: &[u32]) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.eps_cap as usize + 1];
        'terms: for (e, c) in s.nonzero_terms() {
            for (i, h) in self.h.iter().enumerate() {
                if let Some((slot, _)) = h {
                    if e[*slot] != degrees[i] {
                        continue 'terms;
                    }
                }
            }
            let mut vars: Vec<(String, u32)> = Vec::new();
            if let Some(slot) = self.y {
                vars.push(("y".into(), e[slot]));
            }
            for (p, &slot) in self.x.iter().enumerate() {
                vars.push((format!("x{}", p + 1), e[slot]));
            }
            let refs: Vec<(&str, u32)> = vars.iter().filter(|v| v.1 > 0).map(|(n, k)| (n.as_str(), *k)).collect();
            let m = MultiPoly::monomial(c, &refs);
            out[e[0] as usize] = out[e[0] as usize].add(&m);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differences_recover_exponential_gaps() {
        // z_0 = e^{ε(w_0 + h̃_0)}, α_1 = e^{w_1 ε}; (z_0 - α_1)/ε at h̃ = 0
        let r = LocRing::new(&[2, 5], &[1, 0], 3, None, &[]);
        let d = r.z_minus_alpha(0, 1);
        let direct = r.z_pow(0, 1).unwrap().sub(&r.alpha_pow(1, 1).unwrap());
        // multiply back by ε: compare coefficients shifted by one
        for (e, c) in d.nonzero_terms() {
            if e[0] < 3 {
                let mut e2 = e.clone();
                e2[0] += 1;
                assert_eq!(direct.coeff(&e2), c, "{e:?}");
            }
        }
        assert_eq!(d.constant_term(), Rational::from(-3));
        let x = r.z_minus_z(0, 1);
        assert_eq!(x.constant_term(), Rational::from(-3));
        assert_eq!(x.coeff(&[0, 1]), Rational::one());
    }

    #[test]
    fn todd_factor_times_difference_is_h() {
        let r = LocRing::new(&[3], &[2], 2, None, &[]);
        // (z - α)/ε · h/(z - α) = h̃
        let prod = r.z_minus_alpha(0, 0).mul(&r.todd_factor(0).unwrap());
        assert_eq!(prod.nonzero_terms(), vec![(vec![0, 1], Rational::one())]);
    }
}
