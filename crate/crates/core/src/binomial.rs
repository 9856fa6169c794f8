//! Exact binomial coefficients and the peak-ratio bound on sums of binomials.

use num_bigint::BigUint;

use crate::error::{invalid, Error, Result};

/// `a choose t`, with out-of-range arguments (`t < 0`, `a < 0`, `t > a`) giving 0.
///
/// Fails with [`Error::Overflow`] rather than wrapping when the value does not
/// fit in a `u64`.
pub fn binomial(a: i64, t: i64) -> Result<u64> {
    if a < 0 || t < 0 || t > a {
        return Ok(0);
    }
    let t = t.min(a - t) as u64;
    let a = a as u64;
    let mut acc: u128 = 1;
    for i in 0..t {
        // acc = C(a, i) here, and C(a, i) <= C(a, t) while i <= t <= a/2.
        acc = acc * u128::from(a - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow(format!("binomial({a}, {t})")));
        }
    }
    Ok(acc as u64)
}

/// `binomial` for unsigned arguments; the common case.
pub fn choose(a: usize, t: usize) -> Result<u64> {
    binomial(a as i64, t as i64)
}

pub fn binomial_big(a: u64, t: u64) -> BigUint {
    if t > a {
        return BigUint::from(0u32);
    }
    let t = t.min(a - t);
    let mut acc = BigUint::from(1u32);
    for i in 0..t {
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}

/// Checks `sum_i C(z_i, t) <= (sum_i z_i / z_1) * C(z_1, t)` exactly, for a
/// non-increasing sequence with `z_1 >= t >= 1`.
///
/// The comparison is done after clearing the denominator, in arbitrary
/// precision, so no rounding is involved.
pub fn binomial_sum_bound_holds(z: &[u64], t: u64) -> Result<bool> {
    let first = *z.first().ok_or_else(|| invalid("sequence must be nonempty"))?;
    if t == 0 {
        return Err(invalid("t must be at least 1"));
    }
    if first < t {
        return Err(invalid(format!("z_1 = {first} is smaller than t = {t}")));
    }
    if z.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid("sequence must be non-increasing"));
    }
    let lhs: BigUint = z.iter().map(|&zi| binomial_big(zi, t)).sum::<BigUint>() * first;
    let total: BigUint = z.iter().map(|&zi| BigUint::from(zi)).sum();
    let rhs = total * binomial_big(first, t);
    Ok(lhs <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(10, 3).unwrap(), 120);
        assert_eq!(binomial(4, 5).unwrap(), 0);
        assert_eq!(binomial(-3, 1).unwrap(), 0);
        assert_eq!(binomial(7, 0).unwrap(), 1);
        assert_eq!(binomial(0, 0).unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(BigUint::from(binomial(67, 33).unwrap()), binomial_big(67, 33));
        assert!(matches!(binomial(68, 34), Err(Error::Overflow(_))));
        assert!(matches!(binomial(200, 100), Err(Error::Overflow(_))));
    }

    #[test]
    fn bound_rejects_bad_input() {
        assert!(binomial_sum_bound_holds(&[], 1).is_err());
        assert!(binomial_sum_bound_holds(&[3, 4], 1).is_err());
        assert!(binomial_sum_bound_holds(&[2, 1], 3).is_err());
        assert!(binomial_sum_bound_holds(&[2, 1], 0).is_err());
    }

    #[test]
    fn bound_tight_for_constant_sequences() {
        // Every term equals the peak term, so both sides coincide.
        assert!(binomial_sum_bound_holds(&[5, 5, 5], 3).unwrap());
    }

    proptest! {
        #[test]
        fn pascal_rule(a in 1i64..60, t in 1i64..30) {
            prop_assert_eq!(
                binomial(a, t).unwrap(),
                binomial(a - 1, t - 1).unwrap() + binomial(a - 1, t).unwrap()
            );
        }

        #[test]
        fn matches_big_version(a in 0u64..66, t in 0u64..66) {
            prop_assert_eq!(BigUint::from(binomial(a as i64, t as i64).unwrap()), binomial_big(a, t));
        }
    }
}
