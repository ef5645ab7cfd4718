use super::factors::LocRing;
use super::spec::{FixedLocus, OracleConfig, SplitBundleSpec};
use crate::error::{Error, Result};
use crate::exactalg::dense::TruncSeries;
use crate::exactalg::{LaurentEps, MultiPoly};

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sum the loci contributions `ε^shift · series` and return the `ε^0`
/// coefficient, after checking that no negative power of `ε` survives.
/// `pole_bound` is the number of `ε` orders each term needs.
fn sum_loci<F>(
    loci: &[FixedLocus],
    shift: i64,
    pole_bound: u32,
    config: &OracleConfig,
    term: F,
) -> Result<MultiPoly>
where
    F: Fn(&FixedLocus, u32) -> Result<Vec<MultiPoly>>,
{
    let mut cap = config.eps_window.unwrap_or(pole_bound);
    let mut retries = 0;
    loop {
        let mut total = LaurentEps::zero(shift, 0);
        for locus in loci {
            let t = LaurentEps::from_truncated(shift, 0, shift, term(locus, cap)?)?;
            total = total.add(&t);
        }
        if total.known_hi() < 0 {
            if retries < config.max_retries {
                retries += 1;
                cap = (cap * 2).max(1);
                continue;
            }
            return Err(Error::EpsWindowExhausted {
                required_lo: shift,
                required_hi: 0,
            });
        }
        if let Some((e, _)) = total.polar_part().first() {
            return Err(Error::NonCancellingPoles { exponent: *e });
        }
        return total.coeff(0);
    }
}

/// Drop `y^{top}` after checking it vanishes.
fn strip_top(v: MultiPoly, top: u32) -> Result<MultiPoly> {
    let c = v.coeff_in("y", top);
    if !c.is_zero() {
        return Err(Error::Internal(format!(
            "oracle value has a nonzero y^{top} coefficient {c}"
        )));
    }
    Ok(v.truncate_in("y", top - 1))
}

/// The factors shared by the punctual integrands: `u`, the Todd factors,
/// `z_i^{d+1}`, the `(z_i - α_j)` powers and the squared Vandermonde.
fn punctual_common(ring: &LocRing, spec: &SplitBundleSpec, degrees: &[u32]) -> Result<TruncSeries> {
    let n = spec.rank();
    let b = spec.b();
    let d: u32 = degrees.iter().sum();
    let u = (n as i64 - 1) * (d as i64 + b.iter().sum::<i64>()) + (n * (n - 1) / 2) as i64;
    let mut acc = ring.constant(sign(u));
    for i in 0..n {
        let di = degrees[i] as i64;
        acc = acc
            .mul(&ring.todd_factor(i)?.pow(di + 1)?)
            .mul(&ring.z_pow(i, d as i64 + 1)?);
        for j in (0..n).filter(|&j| j != i) {
            acc = acc.mul(&ring.z_minus_alpha(i, j).pow(b[i] - b[j] - di - 1)?);
        }
        for j in i + 1..n {
            acc = acc.mul(&ring.z_minus_z(i, j).pow(2)?);
        }
    }
    Ok(acc)
}

/// `ch(∧_y L^[d])` restricted to a locus:
/// `Π (z_i(α_i+y) / (α_i(z_i+y)))^{b_i} ((z_i+y)/z_i)^{d_i}`.
fn exterior_character(ring: &LocRing, spec: &SplitBundleSpec, degrees: &[u32]) -> Result<TruncSeries> {
    let y = ring.y();
    let mut acc = ring.one();
    for (i, b) in spec.b().into_iter().enumerate() {
        let di = degrees[i] as i64;
        let zy = ring.z_pow(i, 1)?.add(&y);
        let ay = ring.alpha_pow(i, 1)?.add(&y);
        acc = acc
            .mul(&ring.z_pow(i, b - di)?)
            .mul(&ring.alpha_pow(i, -b)?)
            .mul(&ay.pow(b)?)
            .mul(&zy.pow(di - b)?);
    }
    Ok(acc)
}

fn punctual_setup(spec: &SplitBundleSpec, d: u32, config: &OracleConfig) -> Result<(Vec<FixedLocus>, i64, u32)> {
    spec.validate()?;
    config.guard(spec.rank(), d)?;
    let n = spec.rank();
    let pole = n as u32 * d;
    Ok((FixedLocus::punctual(n, d), -(pole as i64), pole))
}

/// `χ(Quot_d(E), ∧_y L^[d])` on `P^1` as a raw torus-localization sum.
pub fn raw_punctual_exterior(spec: &SplitBundleSpec, d: u32, config: &OracleConfig) -> Result<MultiPoly> {
    raw_punctual_dual(spec, &[], d, config)
}

/// As [`raw_punctual_exterior`], tensored with `(∧_{x_p} M_p^[d])^∨` for
/// line bundles of degrees `mlist`.
pub fn raw_punctual_dual(
    spec: &SplitBundleSpec,
    mlist: &[i64],
    d: u32,
    config: &OracleConfig,
) -> Result<MultiPoly> {
    let (loci, shift, pole) = punctual_setup(spec, d, config)?;
    spec.require_nonnegative_b()?;
    if !mlist.is_empty() && mlist.len() >= spec.rank() {
        return Err(Error::RankBoundViolated(format!(
            "{} dual factors for rank {}",
            mlist.len(),
            spec.rank()
        )));
    }
    let x_caps = vec![d; mlist.len()];
    let v = sum_loci(&loci, shift, pole, config, |locus, cap| {
        let ring = LocRing::new(&spec.weights, &locus.degrees, cap, Some(d + 1), &x_caps);
        let mut f = punctual_common(&ring, spec, &locus.degrees)?
            .mul(&exterior_character(&ring, spec, &locus.degrees)?);
        for (p, m) in mlist.iter().enumerate() {
            let x = ring.x(p);
            for (i, a) in spec.a.iter().enumerate() {
                let e = a + m + 1;
                let ax = ring.one().add(&ring.alpha_pow(i, 1)?.mul(&x));
                let zx = ring.one().add(&ring.z_pow(i, 1)?.mul(&x));
                f = f.mul(&ax.pow(e)?).mul(&zx.pow(locus.degrees[i] as i64 - e)?);
            }
        }
        Ok(ring.extract(&f, &locus.degrees))
    })?;
    strip_top(v, d + 1)
}

/// `χ(Quot_d(E), Sym_y L^[d])` on `P^1` through `y^dy`.
pub fn raw_punctual_sym(spec: &SplitBundleSpec, d: u32, dy: u32, config: &OracleConfig) -> Result<MultiPoly> {
    let (loci, shift, pole) = punctual_setup(spec, d, config)?;
    spec.require_nonnegative_b()?;
    sum_loci(&loci, shift, pole, config, |locus, cap| {
        let ring = LocRing::new(&spec.weights, &locus.degrees, cap, Some(dy), &[]);
        let y = ring.y();
        let mut f = punctual_common(&ring, spec, &locus.degrees)?;
        // Π (α_i(z_i-y) / (z_i(α_i-y)))^{b_i} (z_i/(z_i-y))^{d_i}
        for (i, b) in spec.b().into_iter().enumerate() {
            let di = locus.degrees[i] as i64;
            let zy = ring.z_pow(i, 1)?.sub(&y);
            let ay = ring.alpha_pow(i, 1)?.sub(&y);
            f = f
                .mul(&ring.alpha_pow(i, b)?)
                .mul(&ay.pow(-b)?)
                .mul(&ring.z_pow(i, di - b)?)
                .mul(&zy.pow(b - di)?);
        }
        Ok(ring.extract(&f, &locus.degrees))
    })
}

/// `χ(Quot_d(O^N, r), ∧_y L^[d])` on `P^1`, summing over loci `(d⃗, I)`.
pub fn raw_higher_rank(
    n: u32,
    r: u32,
    deg_l: i64,
    d: u32,
    weights: &[i64],
    config: &OracleConfig,
) -> Result<MultiPoly> {
    if r == 0 || r >= n {
        return Err(Error::RankBoundViolated(format!("need 0 < r < N, got r={r}, N={n}")));
    }
    if deg_l < -1 {
        return Err(Error::ExponentUnderflow(format!("ℓ = {deg_l} below -1")));
    }
    SplitBundleSpec::new(&vec![0; n as usize], weights, deg_l).validate()?;
    config.guard(n as usize, d)?;
    let (nn, s) = (n as usize, (n - r) as usize);
    let (ni, si, di) = (n as i64, s as i64, d as i64);
    let shift = -(ni - 1) * (di + si) + si * (si - 1) - di;
    let top = d + r * (deg_l + 1) as u32 + 1;
    let loci = FixedLocus::higher_rank(nn, s, d);
    let v = sum_loci(&loci, shift, (-shift) as u32, config, |locus, cap| {
        let mut degrees = vec![0u32; nn];
        for (k, &i) in locus.subset.iter().enumerate() {
            degrees[i] = locus.degrees[k];
        }
        let ring = LocRing::new(weights, &degrees, cap, Some(top), &[]);
        let y = ring.y();
        let vsign = sign((s * (s - 1) / 2) as i64);
        let mut f = ring.constant(sign((si - 1) * di) * vsign);
        for j in 0..nn {
            let t = ring.one().add(&y.mul(&ring.alpha_pow(j, -1)?));
            f = f.mul(&t.pow(deg_l + 1)?);
        }
        for (k, &i) in locus.subset.iter().enumerate() {
            let dk = degrees[i] as i64;
            f = f
                .mul(&ring.todd_factor(i)?.pow(dk + 1)?)
                .mul(&ring.z_pow(i, (ni - si) * (dk + 1) + di + 1)?);
            for j in (0..nn).filter(|&j| j != i) {
                f = f.mul(&ring.z_minus_alpha(i, j).pow(-(dk + 1))?);
            }
            let t = ring.one().add(&y.mul(&ring.z_pow(i, -1)?));
            f = f.mul(&t.pow(dk - deg_l - 1)?);
            for &j in &locus.subset[k + 1..] {
                f = f.mul(&ring.z_minus_z(i, j).pow(2)?);
            }
        }
        Ok(ring.extract(&f, &degrees))
    })?;
    strip_top(v, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::sym_series_thm10;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn exterior_examples() {
        let s = SplitBundleSpec::new(&[0, 0], &[1, 2], 0);
        assert_eq!(raw_punctual_exterior(&s, 0, &cfg()).unwrap(), MultiPoly::one());
        assert_eq!(raw_punctual_exterior(&s, 1, &cfg()).unwrap(), p("1+2y"));
        let s2 = SplitBundleSpec::new(&[0, 0], &[0, 5], 0);
        assert_eq!(raw_punctual_exterior(&s2, 1, &cfg()).unwrap(), p("1+2y"));
        let s3 = SplitBundleSpec::new(&[1, 2], &[1, 3], 0);
        assert_eq!(raw_punctual_exterior(&s3, 2, &cfg()).unwrap(), p("1+5y+10y^2"));
    }

    #[test]
    fn dual_example() {
        let s = SplitBundleSpec::new(&[0, 0], &[1, 2], 0);
        assert_eq!(raw_punctual_dual(&s, &[0], 1, &cfg()).unwrap(), p("1+2y+x1*y"));
    }

    #[test]
    fn sym_examples() {
        let s = SplitBundleSpec::new(&[0, 0], &[1, 2], 1);
        let v = raw_punctual_sym(&s, 1, 4, &cfg()).unwrap();
        assert_eq!(v.coeff_in("y", 0), MultiPoly::one());
        assert_eq!(v, sym_series_thm10(2, 4, 1, 4).expanded);
        let s = SplitBundleSpec::new(&[0, 1], &[1, 2], 1);
        assert_eq!(raw_punctual_sym(&s, 1, 4, &cfg()).unwrap(), sym_series_thm10(2, 5, 1, 4).expanded);
        assert_eq!(raw_punctual_sym(&s, 0, 4, &cfg()).unwrap(), MultiPoly::one());
    }

    #[test]
    fn higher_rank_examples() {
        assert_eq!(raw_higher_rank(2, 1, 0, 1, &[1, 2], &cfg()).unwrap(), p("1+2y+y^2"));
        assert_eq!(raw_higher_rank(2, 1, 0, 0, &[1, 2], &cfg()).unwrap(), p("1+2y"));
    }

    #[test]
    fn pole_bound_is_tight() {
        let s = SplitBundleSpec::with_default_weights(&[-1, 0, 2], 1);
        let exact = OracleConfig {
            max_retries: 0,
            ..OracleConfig::default()
        };
        assert!(raw_punctual_exterior(&s, 2, &exact).is_ok());
        let short = OracleConfig {
            eps_window: Some(3 * 2 - 1),
            ..exact
        };
        assert!(matches!(
            raw_punctual_exterior(&s, 2, &short),
            Err(Error::EpsWindowExhausted { .. })
        ));
    }

    #[test]
    fn higher_rank_at_l_minus_one() {
        for (n, r) in [(2, 1), (3, 1), (3, 2)] {
            let w: Vec<i64> = (1..=n as i64).collect();
            for d in 0..=2 {
                assert_eq!(
                    raw_higher_rank(n, r, -1, d, &w, &cfg()).unwrap(),
                    crate::detform::higher_rank_exterior_det(n, r, -1, d).unwrap()
                );
            }
        }
        assert!(matches!(
            raw_higher_rank(2, 1, -2, 1, &[1, 2], &cfg()),
            Err(Error::ExponentUnderflow(_))
        ));
    }

    #[test]
    fn window_and_guards() {
        let s = SplitBundleSpec::new(&[0, 0], &[1, 2], 0);
        let tight = OracleConfig {
            eps_window: Some(0),
            max_retries: 0,
            ..OracleConfig::default()
        };
        assert!(matches!(
            raw_punctual_exterior(&s, 1, &tight),
            Err(Error::EpsWindowExhausted { .. })
        ));
        let retry = OracleConfig {
            eps_window: Some(0),
            ..OracleConfig::default()
        };
        assert_eq!(raw_punctual_exterior(&s, 1, &retry).unwrap(), p("1+2y"));
        let big = SplitBundleSpec::with_default_weights(&[0; 4], 0);
        assert!(matches!(raw_punctual_exterior(&big, 1, &cfg()), Err(Error::GuardExceeded(_))));
    }
}
