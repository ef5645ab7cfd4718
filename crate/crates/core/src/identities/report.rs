use std::fmt;
use std::time::{Duration, Instant};

/// Outcome of one identity check: both sides rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub elapsed: Duration,
}

impl CheckReport {
    /// `pass` is text equality of the two sides.
    pub fn compare(
        name: &str,
        params: &[(&str, i64)],
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
        start: Instant,
    ) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        CheckReport {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            pass: lhs == rhs,
            lhs,
            rhs,
            elapsed: start.elapsed(),
        }
    }

    pub fn param_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} [{}]", self.name, self.param_text())?;
        if !self.pass {
            write!(f, "\n  lhs: {}\n  rhs: {}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}
