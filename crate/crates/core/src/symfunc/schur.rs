use super::{Partition, SymBasis};
use crate::error::{Error, Result};
use crate::exactalg::{determinant, Rational, Ring};

/// Which Jacobi-Trudi identity to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum JtMode {
    /// `det(h_{λ_i - i + j})`, size = number of parts.
    #[default]
    H,
    /// `det(e_{λ'_i - i + j})`, size = largest part.
    E,
}

/// Largest `λ_1` accepted in [`JtMode::E`] by [`schur_jt`].
pub const DEFAULT_E_MODE_CAP: u32 = 12;

/// Schur polynomial `s_λ` of the basis roots via Jacobi-Trudi.
///
/// Partitions with more parts than roots give zero.
pub fn schur_jt<R: Ring>(lambda: &Partition, basis: &SymBasis<R>, mode: JtMode) -> Result<R> {
    schur_jt_with_cap(lambda, basis, mode, DEFAULT_E_MODE_CAP)
}

pub fn schur_jt_with_cap<R: Ring>(
    lambda: &Partition,
    basis: &SymBasis<R>,
    mode: JtMode,
    e_cap: u32,
) -> Result<R> {
    let template = basis.e(0);
    if lambda.len() > basis.nvars() {
        return Ok(template.zero_like());
    }
    match mode {
        JtMode::H => {
            let m = lambda.len();
            let mut rows = Vec::with_capacity(m);
            for i in 0..m {
                let mut row = Vec::with_capacity(m);
                for j in 0..m {
                    row.push(basis.h(lambda.part(i) as i64 - i as i64 + j as i64)?);
                }
                rows.push(row);
            }
            Ok(determinant(&rows, &template))
        }
        JtMode::E => {
            if lambda.first() > e_cap {
                return Err(Error::GuardExceeded(format!(
                    "dual Jacobi-Trudi size {} exceeds cap {e_cap}",
                    lambda.first()
                )));
            }
            let conj = lambda.conjugate();
            let m = conj.len();
            let rows: Vec<Vec<R>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| basis.e(conj.part(i) as i64 - i as i64 + j as i64))
                        .collect()
                })
                .collect();
            Ok(determinant(&rows, &template))
        }
    }
}

/// Reduce `det(z_j^{a_i})` to `sign * s_λ * Vandermonde`.
///
/// Returns sign 0 (and the empty partition) when an exponent repeats.
pub fn alternant_normalize(exponents: &[i64]) -> Result<(i8, Partition)> {
    if let Some(&a) = exponents.iter().find(|&&a| a < 0) {
        return Err(Error::NegativeExponent(a));
    }
    let n = exponents.len();
    let mut a = exponents.to_vec();
    // insertion sort descending, counting swaps
    let mut swaps = 0usize;
    for i in 1..n {
        let mut j = i;
        while j > 0 && a[j - 1] < a[j] {
            a.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if a.windows(2).any(|w| w[0] == w[1]) {
        return Ok((0, Partition::empty()));
    }
    let parts: Vec<i64> = a
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (n - 1 - i) as i64)
        .collect();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    Ok((sign, Partition::new(&parts)?))
}

/// Brute-force `s_λ(values)` as a sum over semistandard tableaux.
pub fn schur_ssyt_oracle(lambda: &Partition, values: &[Rational]) -> Result<Rational> {
    let cells = lambda.size();
    if cells > 12 || values.len() > 5 {
        return Err(Error::GuardExceeded(format!(
            "tableau enumeration limited to 12 cells and 5 variables (got {cells}, {})",
            values.len()
        )));
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut total = Rational::zero();
    fill(&shape, &mut grid, 0, 0, values, &Rational::one(), &mut total);
    Ok(total)
}

fn fill(
    shape: &[usize],
    grid: &mut Vec<Vec<usize>>,
    row: usize,
    col: usize,
    values: &[Rational],
    weight: &Rational,
    total: &mut Rational,
) {
    if row == shape.len() {
        *total += weight;
        return;
    }
    if col == shape[row] {
        fill(shape, grid, row + 1, 0, values, weight, total);
        return;
    }
    let min_left = if col > 0 { grid[row][col - 1] } else { 0 };
    let min_up = if row > 0 { grid[row - 1][col] + 1 } else { 0 };
    for v in min_left.max(min_up)..values.len() {
        grid[row][col] = v;
        let w = weight * &values[v];
        fill(shape, grid, row, col + 1, values, &w, total);
    }
}
