use super::Rational;

/// Minimal commutative-ring interface shared by the coefficient types, so
/// that determinants and Schur evaluation are written once.
///
/// `zero_like`/`one_like` take a template because some rings carry context
/// (a variable registry, a truncation order).
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Determinant by Laplace expansion with memoisation over column subsets.
///
/// Row `k` is expanded against every `k`-subset of columns, so the cost is
/// `n * 2^(n-1)` ring multiplications, division-free. Zero entries are
/// skipped. `template` supplies the ring context for the empty matrix.
pub fn determinant<R: Ring>(matrix: &[Vec<R>], template: &R) -> R {
    let n = matrix.len();
    if n == 0 {
        return template.one_like();
    }
    assert!(n <= 24, "determinant too large for subset expansion");
    for row in matrix {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let full = (1usize << n) - 1;
    // minors[mask] = det of rows 0..popcount(mask) restricted to columns in mask
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(template.one_like());
    let mut by_count: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 1..=full {
        by_count[mask.count_ones() as usize].push(mask);
    }
    for (k, masks) in by_count.iter().enumerate().skip(1) {
        let row = &matrix[k - 1];
        for &mask in masks {
            let mut acc: Option<R> = None;
            let mut above = 0u32; // columns of mask to the right of c
            for c in (0..n).rev() {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = &row[c];
                if !entry.is_zero() {
                    if let Some(minor) = &minors[mask & !(1 << c)] {
                        if !minor.is_zero() {
                            let term = entry.mul(minor);
                            acc = Some(match acc {
                                None if above.is_multiple_of(2) => term,
                                None => term.neg(),
                                Some(a) if above.is_multiple_of(2) => a.add(&term),
                                Some(a) => a.sub(&term),
                            });
                        }
                    }
                }
                above += 1;
            }
            minors[mask] = acc;
        }
    }
    minors[full].take().unwrap_or_else(|| template.zero_like())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn brute(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Rational::zero();
        permute(&mut perm, 0, m, &mut total);
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, m: &[Vec<Rational>], total: &mut Rational) {
        if k == p.len() {
            let mut inv = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let mut prod = Rational::one();
            for (i, &c) in p.iter().enumerate() {
                prod *= &m[i][c];
            }
            if inv % 2 == 1 {
                prod = -prod;
            }
            *total += &prod;
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, m, total);
            p.swap(k, i);
        }
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![r(1), r(2)], vec![r(3), r(4)]];
        assert_eq!(determinant(&m, &r(0)), r(-2));
        let empty: Vec<Vec<Rational>> = vec![];
        assert_eq!(determinant(&empty, &r(0)), r(1));
        let sing = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(determinant(&sing, &r(0)), r(0));
    }

    #[test]
    fn matches_permutation_expansion() {
        let mut seed = 7u64;
        for n in 1..=5 {
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            r(((seed >> 33) % 7) as i64 - 3)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&m, &r(0)), brute(&m), "n = {n}");
        }
    }
}
