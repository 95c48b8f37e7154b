//! Exact scalars: arbitrary-precision integers and rationals.
//!
//! Every number in this crate is either a [`BigInt`] or a [`Rational`];
//! no floating point appears anywhere. Rationals are kept in lowest terms
//! with a positive denominator by construction.

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
use num_traits::{One, Signed, Zero};

/// Integer as an exact rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The exact fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Extracts an exact integer from a rational, if the denominator is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// True when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Formats a rational as `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0, or 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(14), BigInt::from(87_178_291_200u64));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 7), BigInt::from(0));
        assert_eq!(binomial(11, 0), BigInt::from(1));
    }

    #[test]
    fn rationals_are_normalized() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        // normalization is idempotent: rebuilding from parts changes nothing
        let again = Rational::new(r.numer().clone(), r.denom().clone());
        assert_eq!(again, r);
    }

    proptest::proptest! {
        // exact field axioms on random rationals
        #[test]
        fn field_axioms(
            (an, ad) in (-40i64..=40, 1i64..=12),
            (bn, bd) in (-40i64..=40, 1i64..=12),
            (cn, cd) in (-40i64..=40, 1i64..=12),
        ) {
            let a = ratio(an, ad);
            let b = ratio(bn, bd);
            let c = ratio(cn, cd);
            proptest::prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            proptest::prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            proptest::prop_assert_eq!(&a + &b, &b + &a);
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            proptest::prop_assert_eq!(&a + &Rational::zero(), a.clone());
            proptest::prop_assert_eq!(&a * &Rational::one(), a.clone());
            proptest::prop_assert_eq!(&a - &a, Rational::zero());
            if !a.is_zero() {
                proptest::prop_assert_eq!(&a * &(Rational::one() / &a), Rational::one());
            }
        }
    }
}
