use num_bigint::BigInt;
use num_traits::One;

use super::Rational;
use crate::error::{Error, Result};

/// Generalized binomial coefficient `a (a-1) ... (a-k+1) / k!` for any
/// integer `a`. Always an integer; negative `k` is rejected.
pub fn gen_binomial(a: i64, k: i64) -> Result<Rational> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    Ok(Rational::from(binomial_int(a, k as u64)))
}

/// Integer-valued generalized binomial; `k` is already known nonnegative.
pub(crate) fn binomial_int(a: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(a) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Shorthand for call sites where `k >= 0` holds by construction.
pub(crate) fn binom(a: i64, k: i64) -> Rational {
    if k < 0 {
        Rational::zero()
    } else {
        Rational::from(binomial_int(a, k as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(gen_binomial(5, 2).unwrap(), Rational::from(10));
        assert_eq!(gen_binomial(-3, 2).unwrap(), Rational::from(6));
        assert_eq!(gen_binomial(4, 0).unwrap(), Rational::from(1));
        assert_eq!(gen_binomial(3, 5).unwrap(), Rational::from(0));
        assert_eq!(gen_binomial(0, 0).unwrap(), Rational::from(1));
        assert_eq!(gen_binomial(-1, 3).unwrap(), Rational::from(-1));
        assert!(matches!(gen_binomial(2, -1), Err(Error::NegativeIndex(-1))));
    }

    #[test]
    fn pascal_rule() {
        for a in -6..8 {
            for k in 1..7 {
                let lhs = gen_binomial(a, k).unwrap();
                let rhs = gen_binomial(a - 1, k).unwrap() + gen_binomial(a - 1, k - 1).unwrap();
                assert_eq!(lhs, rhs, "a={a} k={k}");
            }
        }
    }
}
