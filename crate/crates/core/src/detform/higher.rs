use super::roots::{require, sign, RootSystemSpec, SchurCoeffs};
use crate::error::{Error, Result};
use crate::exactalg::{binom, MultiPoly, Rational};
use crate::symfunc::{alternant_normalize, Partition};

fn check_rank(n: u32, r: u32) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::RankBoundViolated(format!("need 0 < r < N, got r={r}, N={n}")));
    }
    Ok(())
}

/// `χ(Quot_d(O^N, r), ∧_y L^[d])` on `P^1` for `deg L = ℓ`.
///
/// The rows `z^{N-i}(z+y)^{ℓ+1}` are expanded binomially; each monomial
/// choice is an alternant reduced to a signed Schur polynomial.
pub fn higher_rank_exterior_det(n: u32, r: u32, deg_l: i64, d: u32) -> Result<MultiPoly> {
    check_rank(n, r)?;
    if deg_l + 1 < 0 {
        return Err(Error::ExponentUnderflow(format!(
            "(z+y)^{} rows need ℓ ≥ -1",
            deg_l + 1
        )));
    }
    let s = n - r;
    let e = (deg_l + 1) as u32;
    let fixed: Vec<i64> = (1..=s as i64)
        .map(|i| deg_l + d as i64 + n as i64 - i + 1)
        .collect();
    let roots = RootSystemSpec::higher_rank(n, r);
    let mut schur = SchurCoeffs::new(&roots, d as usize, None)?;
    let y = MultiPoly::var("y");
    let mut acc = MultiPoly::zero();
    // choice[i] = power of z taken from row s+1+i's binomial
    let mut choice = vec![0u32; r as usize];
    loop {
        let mut exps = fixed.clone();
        let mut c = Rational::one();
        for (i, &j) in choice.iter().enumerate() {
            let row = s as i64 + 1 + i as i64;
            exps.push(n as i64 - row + j as i64);
            c = c * binom(e as i64, j as i64);
        }
        let (sg, lambda) = alternant_normalize(&exps)?;
        if sg != 0 {
            let ypow: u32 = choice.iter().map(|&j| e - j).sum();
            let v = schur.coeff(&lambda)?;
            acc = acc.add(&v.mul(&y.pow(ypow)).scale(&(c * Rational::from(sg as i64))));
        }
        // odometer over {0..=e}^r
        let mut i = 0;
        while i < choice.len() {
            if choice[i] < e {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    Ok(acc.scale(&sign((s as i64 - 1) * d as i64)))
}

/// `χ(Quot_d(O^N, r), det L^[d])` on `P^1`: a rectangular Schur polynomial
/// over the roots of `(z-1)^N - q z^{r-1}`.
pub fn higher_rank_det_linebundle(n: u32, r: u32, deg_l: i64, d: u32) -> Result<Rational> {
    check_rank(n, r)?;
    require(deg_l >= -(d as i64) - 1, || {
        format!("ℓ = {deg_l} below -d-1 = {}", -(d as i64) - 1)
    })?;
    let s = n - r;
    let lambda = Partition::rectangle((d as i64 + deg_l + 1) as u32, s as usize);
    let mut schur = SchurCoeffs::new(&RootSystemSpec::det_linebundle(n, r), d as usize, None)?;
    let v = schur.coeff(&lambda)?;
    let c = v
        .as_constant()
        .ok_or_else(|| Error::Internal(format!("non-constant value {v}")))?;
    Ok(c * sign((s as i64 - 1) * d as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::schur_ssyt_oracle;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn exterior_examples() {
        assert_eq!(higher_rank_exterior_det(2, 1, 0, 1).unwrap(), p("1+2y+y^2"));
        // P^1 with L^[0] = O(1)
        assert_eq!(higher_rank_exterior_det(2, 1, 0, 0).unwrap(), p("1+2y"));
        assert!(matches!(
            higher_rank_exterior_det(2, 2, 0, 1),
            Err(Error::RankBoundViolated(_))
        ));
        assert!(matches!(
            higher_rank_exterior_det(3, 1, -2, 1),
            Err(Error::ExponentUnderflow(_))
        ));
    }

    #[test]
    fn det_examples() {
        assert_eq!(higher_rank_det_linebundle(3, 1, 0, 1).unwrap(), Rational::from(3));
        assert_eq!(higher_rank_det_linebundle(3, 1, 1, 5).unwrap(), Rational::zero());
        assert_eq!(higher_rank_det_linebundle(3, 1, 1, 4).unwrap(), Rational::one());
    }

    #[test]
    fn binomial_specialization() {
        for n in 2..=4u32 {
            for r in 1..n {
                for d in 0..=3u32 {
                    let expect = binom(n as i64, (r + d) as i64);
                    assert_eq!(higher_rank_det_linebundle(n, r, 0, d).unwrap(), expect, "N={n} r={r} d={d}");
                }
            }
        }
    }

    #[test]
    fn grassmannian_values() {
        for n in 2..=4u32 {
            for r in 1..n {
                for l in -1..=2i64 {
                    let lam = Partition::rectangle((l + 1) as u32, (n - r) as usize);
                    let ones = vec![Rational::one(); n as usize];
                    let expect = schur_ssyt_oracle(&lam, &ones).unwrap();
                    assert_eq!(higher_rank_det_linebundle(n, r, l, 0).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn top_coefficient_is_the_determinant() {
        for (n, r, l, d) in [(2u32, 1u32, 0i64, 1u32), (3, 1, 0, 2), (3, 2, 1, 1), (2, 1, 1, 2)] {
            let v = higher_rank_exterior_det(n, r, l, d).unwrap();
            let rank = d + r * (l as u32 + 1);
            assert_eq!(v.degree_in("y"), rank);
            assert_eq!(
                v.coeff_in("y", rank).constant_term(),
                higher_rank_det_linebundle(n, r, l, d).unwrap()
            );
        }
    }
}
