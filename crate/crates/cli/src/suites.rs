use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quotchi::closedform::{
    check_fchi as fchi_values, series_a, series_a_via, series_b, series_bb_rhs, series_thm1,
    series_thm2, sym_series_thm10, universal_f, universal_f_residual, universal_g,
    CurveBundleParams,
};
use quotchi::detform::{
    higher_rank_det_linebundle, punctual_dual_det, punctual_exterior_det, punctual_sym_det,
    sym_min_chi,
};
use quotchi::exactalg::{gen_binomial, Rational, UniSeries};
use quotchi::identities::{all_default_grids, kernel_property_suite, CheckReport};
use quotchi::locoracle::{
    raw_higher_rank, raw_punctual_dual, raw_punctual_exterior, raw_punctual_sym, OracleConfig,
    SplitBundleSpec,
};
use quotchi::symfunc::{schur_jt, schur_ssyt_oracle, JtMode, Partition, SymBasis};
use quotchi::Result;

use crate::args::Suite;
use crate::{thm3_det, RunContext};

const KERNEL_CASES: usize = 500;

fn check(name: &str, params: &[(&str, String)], lhs: impl ToString, rhs: impl ToString) -> CheckReport {
    let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
    CheckReport {
        name: name.to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        pass: lhs == rhs,
        lhs,
        rhs,
        elapsed: Default::default(),
    }
}

fn list(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Splitting type with entries in `-1..=2`, sorted.
fn sample_splitting(rng: &mut ChaCha8Rng, n: u32) -> Vec<i64> {
    let mut a: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=2)).collect();
    a.sort_unstable();
    a
}

/// Weights: a shuffled selection from `1..=2N+1`, so runs with different
/// seeds exercise different torus actions.
fn sample_weights(rng: &mut ChaCha8Rng, n: u32) -> Vec<i64> {
    let mut pool: Vec<i64> = (1..=2 * n as i64 + 1).collect();
    pool.shuffle(rng);
    pool.truncate(n as usize);
    pool
}

pub fn run_suite(suite: Suite, seed: u64, ctx: &RunContext) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Kernel => kernel_property_suite(seed, KERNEL_CASES),
        Suite::Symfunc => symfunc(&mut rng),
        Suite::Punctual => punctual(&mut rng, ctx),
        Suite::Dual => dual(&mut rng, ctx),
        Suite::Sym => sym(&mut rng, ctx),
        Suite::HigherRank => higher_rank(&mut rng, ctx),
        Suite::Identities => all_default_grids(),
        Suite::Universal => universal(),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Kernel,
                Suite::Symfunc,
                Suite::Punctual,
                Suite::Dual,
                Suite::Sym,
                Suite::HigherRank,
                Suite::Identities,
                Suite::Universal,
            ] {
                out.extend(run_suite(s, seed, ctx)?);
            }
            Ok(out)
        }
    }
}

fn partitions(size: u32, max_part: u32) -> Vec<Vec<i64>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=size.min(max_part)).rev() {
        for mut rest in partitions(size - first, first) {
            rest.insert(0, first as i64);
            out.push(rest);
        }
    }
    out
}

/// Both Jacobi-Trudi forms against tableau enumeration at random rational
/// points.
fn symfunc(rng: &mut ChaCha8Rng) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for nvars in 1..=3usize {
        let values: Vec<Rational> = (0..nvars)
            .map(|_| Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
            .collect();
        let basis = SymBasis::from_roots(&values).with_homogeneous(10);
        for size in 0..=5 {
            for parts in partitions(size, size) {
                let lambda = Partition::new(&parts)?;
                let oracle = schur_ssyt_oracle(&lambda, &values)?;
                let params = [("vars", nvars.to_string()), ("lambda", list(&parts))];
                out.push(check("schur_jt_h", &params, schur_jt(&lambda, &basis, JtMode::H)?, &oracle));
                out.push(check("schur_jt_e", &params, schur_jt(&lambda, &basis, JtMode::E)?, &oracle));
            }
        }
    }
    Ok(out)
}

fn oracle_config(ctx: &RunContext) -> OracleConfig {
    OracleConfig {
        max_rank: ctx.max_rank,
        max_d: ctx.max_d,
        ..OracleConfig::default()
    }
}

fn punctual(rng: &mut ChaCha8Rng, ctx: &RunContext) -> Result<Vec<CheckReport>> {
    let config = oracle_config(ctx);
    let mut out = Vec::new();
    for n in 1..=ctx.max_rank as u32 {
        for _ in 0..2 {
            let a = sample_splitting(rng, n);
            let deg_l = rng.gen_range(0..=2);
            let spec = SplitBundleSpec::new(&a, &sample_weights(rng, n), deg_l);
            let series = series_thm1(&CurveBundleParams::new(0, n, a.iter().sum(), deg_l), ctx.max_d as usize)?;
            for d in 0..=ctx.max_d {
                let closed = series.coeff_at(d as usize)?;
                let params = [
                    ("N", n.to_string()),
                    ("a", list(&a)),
                    ("l", deg_l.to_string()),
                    ("weights", list(&spec.weights)),
                    ("d", d.to_string()),
                ];
                out.push(check("oracle_exterior=thm1", &params, raw_punctual_exterior(&spec, d, &config)?, &closed));
                out.push(check("det_exterior=thm1", &params, punctual_exterior_det(n, spec.chi(), d)?, &closed));
            }
        }
    }
    Ok(out)
}

fn dual(rng: &mut ChaCha8Rng, ctx: &RunContext) -> Result<Vec<CheckReport>> {
    let config = oracle_config(ctx);
    let max_d = ctx.max_d.min(2);
    let mut out = Vec::new();
    for n in 2..=ctx.max_rank as u32 {
        for r in 1..n {
            let a = sample_splitting(rng, n);
            let deg_l = rng.gen_range(0..=1);
            let ms: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=1)).collect();
            let spec = SplitBundleSpec::new(&a, &sample_weights(rng, n), deg_l);
            let params = CurveBundleParams::new(0, n, a.iter().sum(), deg_l).with_duals(&ms);
            let series = series_thm2(&params, max_d as usize)?;
            for d in 0..=max_d {
                let closed = series.coeff_at(d as usize)?;
                let params = [
                    ("N", n.to_string()),
                    ("a", list(&a)),
                    ("l", deg_l.to_string()),
                    ("m", list(&ms)),
                    ("d", d.to_string()),
                ];
                out.push(check("oracle_dual=thm2", &params, raw_punctual_dual(&spec, &ms, d, &config)?, &closed));
                out.push(check(
                    "det_dual=thm2",
                    &params,
                    punctual_dual_det(n, spec.chi(), deg_l, &ms, d, None)?,
                    &closed,
                ));
            }
        }
    }
    Ok(out)
}

fn sym(rng: &mut ChaCha8Rng, ctx: &RunContext) -> Result<Vec<CheckReport>> {
    let config = oracle_config(ctx);
    let dy = 6;
    let mut out = Vec::new();
    for n in 1..=(ctx.max_rank as u32).min(2) {
        for d in 0..=ctx.max_d.min(2) {
            let a = sample_splitting(rng, n);
            let spec = SplitBundleSpec::new(&a, &sample_weights(rng, n), 0);
            let params = [("N", n.to_string()), ("a", list(&a)), ("d", d.to_string())];
            out.push(check(
                "oracle_sym=t10",
                &params,
                raw_punctual_sym(&spec, d, dy, &config)?,
                sym_series_thm10(n, spec.chi(), d, dy).expanded,
            ));
            let chi = sym_min_chi(n, d) + rng.gen_range(0..=3);
            let params = [("N", n.to_string()), ("chi", chi.to_string()), ("d", d.to_string())];
            out.push(check(
                "det_sym=t10",
                &params,
                punctual_sym_det(n, chi, d, dy)?,
                sym_series_thm10(n, chi, d, dy).expanded,
            ));
        }
    }
    Ok(out)
}

fn higher_rank(rng: &mut ChaCha8Rng, ctx: &RunContext) -> Result<Vec<CheckReport>> {
    let config = oracle_config(ctx);
    let mut out = Vec::new();
    for n in 2..=ctx.max_rank as u32 {
        for r in 1..n {
            let weights = sample_weights(rng, n);
            for deg_l in 0..=1i64 {
                for d in 0..=ctx.max_d.min(2) {
                    let params = [
                        ("N", n.to_string()),
                        ("r", r.to_string()),
                        ("l", deg_l.to_string()),
                        ("weights", list(&weights)),
                        ("d", d.to_string()),
                    ];
                    out.push(check(
                        "oracle_higher=thm3",
                        &params,
                        raw_higher_rank(n, r, deg_l, d, &weights, &config)?,
                        thm3_det(n, r, deg_l, d, ctx.fault)?,
                    ));
                }
            }
            for d in 0..=n - r {
                let params = [("N", n.to_string()), ("r", r.to_string()), ("d", d.to_string())];
                out.push(check(
                    "corollary=binomial",
                    &params,
                    higher_rank_det_linebundle(n, r, 0, d)?,
                    gen_binomial(n as i64, (r + d) as i64)?,
                ));
            }
        }
    }
    Ok(out)
}

fn universal() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let order = 6;
    for n in 1..=3u32 {
        let p = [("N", n.to_string())];
        out.push(check("B^N=bb", &p, series_b(n, order, order as u32)?.int_pow(n as i64)?, series_bb_rhs(n, order, order as u32)?));
        let f = universal_f(n, order);
        out.push(check("f_residual", &p, universal_f_residual(n, &f), UniSeries::zero(order)));
        let f_neg = f.compose(&UniSeries::identity(order).scale(&Rational::from(-1)))?;
        out.push(check(
            "f(-z)^N+G=1",
            &p,
            f_neg.pow(n as i64)?.add(&universal_g(n, order)),
            UniSeries::one(order),
        ));
        let base = series_a(n, 4, 6)?;
        out.push(check("A_paths", &p, series_a_via(n, 1, 0, 4, 6)?, &base));
        for chi in -1..=2 {
            let v = fchi_values(n, chi, order)?;
            let p = [("N", n.to_string()), ("chi", chi.to_string())];
            out.push(check("F_chi", &p, v.lhs, v.rhs));
        }
    }
    Ok(out)
}
