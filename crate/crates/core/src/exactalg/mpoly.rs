use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use smallvec::SmallVec;

use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

pub(crate) type Exps = SmallVec<[u32; 4]>;

/// Sort key for variable names: `y`, then `x1, x2, ...` numerically, then
/// `t`, `q`, `z`, then everything else alphabetically.
fn var_key(name: &str) -> (u8, u64, String) {
    match name {
        "y" => (0, 0, String::new()),
        "t" => (2, 0, String::new()),
        "q" => (3, 0, String::new()),
        "z" => (4, 0, String::new()),
        _ => {
            if let Some(rest) = name.strip_prefix('x') {
                if let Ok(n) = rest.parse::<u64>() {
                    return (1, n, String::new());
                }
            }
            (5, 0, name.to_string())
        }
    }
}

fn sorted_vars<I: IntoIterator<Item = String>>(names: I) -> Vec<String> {
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort_by_key(|a| var_key(a));
    v.dedup();
    v
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse polynomial over [`Rational`] in named variables.
///
/// Arithmetic between polynomials with different variable lists embeds
/// both into the union list first. Zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Exps, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Arc::new(Vec::new()),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Exps::new(), c);
        }
        p
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `c * prod(name^exp)`; repeated names multiply.
    pub fn monomial(c: Rational, powers: &[(&str, u32)]) -> Self {
        assert!(
            powers.iter().all(|(n, _)| valid_var_name(n)),
            "invalid variable name"
        );
        let vars = sorted_vars(powers.iter().map(|(n, _)| n.to_string()));
        let mut e: Exps = SmallVec::from_elem(0, vars.len());
        for (n, k) in powers {
            let i = vars.iter().position(|v| v == n).unwrap();
            e[i] += k;
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly {
            vars: Arc::new(vars),
            terms,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate `(exponent map, coefficient)` over the stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<(&str, u32)>, &Rational)> + '_ {
        self.terms.iter().map(move |(e, c)| {
            let m = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| (v.as_str(), k))
                .collect();
            (m, c)
        })
    }

    pub fn constant_term(&self) -> Rational {
        let zero: Exps = SmallVec::from_elem(0, self.vars.len());
        self.terms.get(&zero).cloned().unwrap_or_default()
    }

    /// `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn embed(&self, vars: &Arc<Vec<String>>) -> BTreeMap<Exps, Rational> {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return self.terms.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("embedding"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut f: Exps = SmallVec::from_elem(0, vars.len());
                for (i, &k) in e.iter().enumerate() {
                    f[map[i]] = k;
                }
                (f, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Arc<Vec<String>> {
        if Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars {
            return self.vars.clone();
        }
        if other.vars.iter().all(|v| self.vars.contains(v)) {
            return self.vars.clone();
        }
        if self.vars.iter().all(|v| other.vars.contains(v)) {
            return other.vars.clone();
        }
        Arc::new(sorted_vars(
            self.vars.iter().chain(other.vars.iter()).cloned(),
        ))
    }

    /// Re-express over a variable list containing at least the current one.
    pub fn with_variables(&self, names: &[&str]) -> Self {
        let vars = Arc::new(sorted_vars(
            self.vars
                .iter()
                .cloned()
                .chain(names.iter().map(|s| s.to_string())),
        ));
        MultiPoly {
            terms: self.embed(&vars),
            vars,
        }
    }

    fn from_parts(vars: Arc<Vec<String>>, terms: BTreeMap<Exps, Rational>) -> Self {
        MultiPoly { vars, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let vars = self.union_vars(other);
        let mut terms = self.embed(&vars);
        for (e, c) in other.embed(&vars) {
            add_term(&mut terms, e, c);
        }
        Self::from_parts(vars, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let vars = self.union_vars(other);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, ca * cb);
            }
        }
        Self::from_parts(vars, terms)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Highest power of `name` present; 0 for the zero polynomial.
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.index_of(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, name: &str, k: u32) -> Self {
        let Some(i) = self.index_of(name) else {
            return if k == 0 { self.clone() } else { Self::zero() };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] == k)
            .map(|(e, c)| {
                let mut f = e.clone();
                f[i] = 0;
                (f, c.clone())
            })
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Drop every term whose power of `name` exceeds `deg`.
    pub fn truncate_in(&self, name: &str, deg: u32) -> Self {
        let Some(i) = self.index_of(name) else {
            return self.clone();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] <= deg)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Replace `name` by `value` everywhere.
    pub fn substitute(&self, name: &str, value: &Self) -> Self {
        let Some(i) = self.index_of(name) else {
            return self.clone();
        };
        let maxdeg = self.degree_in(name);
        let mut powers = vec![Self::one()];
        for k in 1..=maxdeg as usize {
            powers.push(powers[k - 1].mul(value));
        }
        let mut out = Self::zero();
        let mut rest = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[i];
            f[i] = 0;
            rest.entry(k).or_insert_with(BTreeMap::new).insert(f, c.clone());
        }
        for (k, terms) in rest {
            let part = Self::from_parts(self.vars.clone(), terms);
            out = out.add(&part.mul(&powers[k as usize]));
        }
        out.prune_variable(name)
    }

    pub fn eval_var(&self, name: &str, value: &Rational) -> Self {
        self.substitute(name, &Self::constant(value.clone()))
    }

    /// Drop a variable that no longer occurs.
    fn prune_variable(&self, name: &str) -> Self {
        let Some(i) = self.index_of(name) else {
            return self.clone();
        };
        if self.terms.keys().any(|e| e[i] != 0) {
            return self.clone();
        }
        let mut vars = (*self.vars).clone();
        vars.remove(i);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = e.clone();
                f.remove(i);
                (f, c.clone())
            })
            .collect();
        Self::from_parts(Arc::new(vars), terms)
    }

    /// Inverse as a power series in `name`, truncated at degree `deg`.
    ///
    /// The constant term in `name` must be a nonzero rational.
    pub fn series_inverse_in(&self, name: &str, deg: u32) -> Result<Self> {
        let a0 = self.coeff_in(name, 0);
        let c = match a0.as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::NonUnitConstantTerm),
        };
        let cinv = c.inv().unwrap();
        let x = Self::var(name);
        let parts: Vec<Self> = (0..=deg).map(|k| self.coeff_in(name, k)).collect();
        let mut inv: Vec<Self> = vec![Self::constant(cinv.clone())];
        for n in 1..=deg as usize {
            let mut acc = Self::zero();
            for k in 1..=n {
                if !parts[k].is_zero() {
                    acc = acc.add(&parts[k].mul(&inv[n - k]));
                }
            }
            inv.push(acc.scale(&-&cinv));
        }
        let mut out = Self::zero();
        for (k, p) in inv.iter().enumerate() {
            out = out.add(&p.mul(&x.pow(k as u32)));
        }
        Ok(out)
    }

    /// Canonical text; identical to `Display`.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

fn add_term(terms: &mut BTreeMap<Exps, Rational>, e: Exps, c: Rational) {
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let vars = self.union_vars(other);
        self.embed(&vars) == other.embed(&vars)
    }
}

impl Eq for MultiPoly {}

impl Default for MultiPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        Self::constant(Rational::from(c))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            let coeff = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                String::new()
            } else if (-c).is_one() {
                "-".to_string()
            } else {
                c.to_string()
            };
            if n > 0 && !coeff.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&coeff)?;
            f.write_str(&mono.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the canonical text form (and any reordering of it).
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut out = MultiPoly::zero();
        while pos < bytes.len() {
            let mut sign = Rational::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(Error::Parse(format!("expected sign at {pos} in {s:?}")));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let term = parse_term(&s[start..pos])?;
            out = out.add(&term.scale(&sign));
        }
        Ok(out)
    }
}

fn parse_term(t: &str) -> Result<MultiPoly> {
    if t.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let digits_end = t.find(|c: char| !c.is_ascii_digit() && c != '/').unwrap_or(t.len());
    let coeff = if digits_end == 0 {
        Rational::one()
    } else {
        t[..digits_end].parse::<Rational>()?
    };
    let rest = &t[digits_end..];
    let mut powers: Vec<(String, u32)> = Vec::new();
    if !rest.is_empty() {
        for factor in rest.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            if !valid_var_name(name) {
                return Err(Error::Parse(format!("bad variable {name:?}")));
            }
            powers.push((name.to_string(), exp));
        }
    }
    let refs: Vec<(&str, u32)> = powers.iter().map(|(n, e)| (n.as_str(), *e)).collect();
    Ok(MultiPoly::monomial(coeff, &refs))
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero()
    }
    fn one_like(&self) -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
}
