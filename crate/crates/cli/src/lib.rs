//! Command-line front end: argument parsing, dispatch to the library, and
//! JSON/CSV/text rendering.
//!
//! Exit codes: 0 success, 1 internal error, 2 violated precondition (the
//! error name is printed), 3 a verification check failed.

pub mod args;
mod render;
mod suites;

use std::path::PathBuf;

use quotchi::closedform::{
    series_a, series_b, series_thm1, series_thm2, sym_series_thm10, universal_f,
    CurveBundleParams,
};
use quotchi::detform::{higher_rank_det_linebundle, higher_rank_exterior_det, punctual_sym_det};
use quotchi::identities::CheckReport;
use quotchi::locoracle::{
    raw_higher_rank, raw_punctual_dual, raw_punctual_exterior, raw_punctual_sym, OracleConfig,
    SplitBundleSpec,
};
use quotchi::{Error, MultiPoly, Result};

pub use args::{Cli, Command, Fault, Format, GlobalOpts, Suite};
pub use render::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Environment variable naming the directory for relative `--output` paths.
pub const OUTPUT_DIR_VAR: &str = "QUOTCHI_OUTPUT_DIR";

/// Guard settings and fault switches shared by every route.
#[derive(Clone, Debug)]
pub struct RunContext {
    pub max_rank: usize,
    pub max_d: u32,
    pub fault: Option<Fault>,
}

impl From<&GlobalOpts> for RunContext {
    fn from(g: &GlobalOpts) -> Self {
        RunContext {
            max_rank: g.max_rank,
            max_d: g.max_d,
            fault: g.inject_fault,
        }
    }
}

/// Computed value: a single canonical string or a coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Text(String),
    Series(Vec<(usize, String)>),
}

/// Everything a run produces before rendering.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub command: String,
    pub params: serde_json::Value,
    pub result: Value,
    pub route: &'static str,
    pub checks: Vec<CheckReport>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().all(|c| c.pass) {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }
}

/// Higher-rank determinant route, optionally with the injected sign fault.
pub fn thm3_det(n: u32, r: u32, deg_l: i64, d: u32, fault: Option<Fault>) -> Result<MultiPoly> {
    let v = higher_rank_exterior_det(n, r, deg_l, d)?;
    Ok(match fault {
        Some(Fault::Thm3Sign) if d % 2 == 1 => v.neg(),
        _ => v,
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Thm1(_) => "thm1",
        Command::Thm2 { .. } => "thm2",
        Command::Thm3(_) => "thm3",
        Command::Corollary(_) => "corollary",
        Command::Sym { .. } => "sym",
        Command::UniversalF { .. } => "universal-f",
        Command::UniversalB { .. } => "universal-B",
        Command::UniversalA { .. } => "universal-A",
        Command::OracleExterior(_) => "oracle-exterior",
        Command::OracleDual { .. } => "oracle-dual",
        Command::OracleSym { .. } => "oracle-sym",
        Command::OracleHigherRank { .. } => "oracle-higher-rank",
        Command::Verify { .. } => "verify",
    }
}

fn require_rank(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::HypothesisViolated("rank must be at least 1".into()));
    }
    Ok(())
}

fn oracle_config(ctx: &RunContext) -> OracleConfig {
    OracleConfig {
        max_rank: ctx.max_rank,
        max_d: ctx.max_d,
        ..OracleConfig::default()
    }
}

fn split_spec(a: &[i64], weights: &Option<Vec<i64>>, deg_l: i64) -> SplitBundleSpec {
    match weights {
        Some(w) => SplitBundleSpec::new(a, w, deg_l),
        None => SplitBundleSpec::with_default_weights(a, deg_l),
    }
}

fn series_value<T: ToString>(coeffs: impl IntoIterator<Item = T>) -> Value {
    Value::Series(coeffs.into_iter().map(|c| c.to_string()).enumerate().collect())
}

/// Dispatch a parsed command.
pub fn execute(command: &Command, ctx: &RunContext) -> Result<Outcome> {
    let (result, route, checks) = match command {
        Command::Thm1(c) => {
            let p = CurveBundleParams::new(c.genus, c.rank, c.deg_e, c.deg_l);
            (series_value(series_thm1(&p, c.qmax)?.coeffs()), "closedform", vec![])
        }
        Command::Thm2 { curve: c, m } => {
            let p = CurveBundleParams::new(c.genus, c.rank, c.deg_e, c.deg_l).with_duals(m);
            (series_value(series_thm2(&p, c.qmax)?.coeffs()), "closedform", vec![])
        }
        Command::Thm3(h) => {
            let v = thm3_det(h.rank, h.r, h.deg_l, h.d, ctx.fault)?;
            (Value::Text(v.to_string()), "detform", vec![])
        }
        Command::Corollary(h) => {
            let v = higher_rank_det_linebundle(h.rank, h.r, h.deg_l, h.d)?;
            (Value::Text(v.to_string()), "detform", vec![])
        }
        Command::Sym { rank, chi, d, ymax, route } => {
            require_rank(*rank)?;
            match route {
                args::SymRoute::Closed => {
                    let v = sym_series_thm10(*rank, *chi, *d, *ymax).expanded;
                    (Value::Text(v.to_string()), "closedform", vec![])
                }
                args::SymRoute::Det => {
                    let v = punctual_sym_det(*rank, *chi, *d, *ymax)?;
                    (Value::Text(v.to_string()), "detform", vec![])
                }
            }
        }
        Command::UniversalF { rank, zmax } => {
            require_rank(*rank)?;
            (series_value(universal_f(*rank, *zmax).coeffs()), "closedform", vec![])
        }
        Command::UniversalB { rank, qmax, ymax } => {
            require_rank(*rank)?;
            (series_value(series_b(*rank, *qmax, *ymax)?.coeffs()), "closedform", vec![])
        }
        Command::UniversalA { rank, qmax, ymax } => {
            require_rank(*rank)?;
            (series_value(series_a(*rank, *qmax, *ymax)?.coeffs()), "closedform", vec![])
        }
        Command::OracleExterior(s) => {
            let spec = split_spec(&s.a, &s.weights, s.deg_l);
            let v = raw_punctual_exterior(&spec, s.d, &oracle_config(ctx))?;
            (Value::Text(v.to_string()), "locoracle", vec![])
        }
        Command::OracleDual { split: s, m } => {
            let spec = split_spec(&s.a, &s.weights, s.deg_l);
            let v = raw_punctual_dual(&spec, m, s.d, &oracle_config(ctx))?;
            (Value::Text(v.to_string()), "locoracle", vec![])
        }
        Command::OracleSym { split: s, ymax } => {
            let spec = split_spec(&s.a, &s.weights, s.deg_l);
            let v = raw_punctual_sym(&spec, s.d, *ymax, &oracle_config(ctx))?;
            (Value::Text(v.to_string()), "locoracle", vec![])
        }
        Command::OracleHigherRank { higher: h, weights } => {
            let w = weights.clone().unwrap_or_else(|| (1..=h.rank as i64).collect());
            let v = raw_higher_rank(h.rank, h.r, h.deg_l, h.d, &w, &oracle_config(ctx))?;
            (Value::Text(v.to_string()), "locoracle", vec![])
        }
        Command::Verify { suite, seed } => {
            let checks = suites::run_suite(*suite, *seed, ctx)?;
            let passed = checks.iter().filter(|c| c.pass).count();
            let summary = format!("{passed}/{} checks passed", checks.len());
            (Value::Text(summary), "identities", checks)
        }
    };
    Ok(Outcome {
        command: command_name(command).to_string(),
        params: serde_json::to_value(command).map_err(|e| Error::Internal(e.to_string()))?,
        result,
        route,
        checks,
    })
}

/// Where `--output` writes, honoring [`OUTPUT_DIR_VAR`] for relative paths.
pub fn output_path(path: &std::path::Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_VAR) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Full run: execute, render, and map the outcome to an exit code.
/// Returns `(exit code, stdout text, stderr text)`.
pub fn run(cli: &Cli) -> (i32, String, String) {
    let ctx = RunContext::from(&cli.global);
    let format = cli.global.format;
    match execute(&cli.command, &ctx) {
        Ok(outcome) => (outcome.exit_code(), render(&outcome, format), String::new()),
        Err(e) => {
            let code = if e.is_precondition() {
                EXIT_PRECONDITION
            } else {
                EXIT_INTERNAL
            };
            let stdout = match format {
                Format::Json => render::render_error_json(command_name(&cli.command), &cli.command, &e),
                _ => String::new(),
            };
            (code, stdout, format!("error: {}: {e}\n", e.name()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fault_flips_odd_degrees_only() {
        let clean = thm3_det(2, 1, 0, 1, None).unwrap();
        assert_eq!(thm3_det(2, 1, 0, 1, Some(Fault::Thm3Sign)).unwrap(), clean.neg());
        assert_eq!(
            thm3_det(2, 1, 0, 2, Some(Fault::Thm3Sign)).unwrap(),
            thm3_det(2, 1, 0, 2, None).unwrap()
        );
    }

    #[test]
    fn absolute_output_path_is_kept() {
        let p = std::path::Path::new("/abs/out.json");
        assert_eq!(output_path(p), p);
    }
}
