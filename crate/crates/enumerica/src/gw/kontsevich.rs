//! The recursion for the number of rational plane curves of degree d through
//! 3d-1 general points.

use crate::scalar::{binomial, BigInt};
use num_traits::One;

/// Table of curve counts `N_1..N_dmax`. `N_1 = 1` and every entry is a
/// positive big integer (the values overflow 64 bits quickly).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KontsevichTable {
    values: Vec<BigInt>,
}

impl KontsevichTable {
    pub fn from_values(values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty() && values[0].is_one(), "table starts at N_1 = 1");
        KontsevichTable { values }
    }

    pub fn d_max(&self) -> u32 {
        self.values.len() as u32
    }

    /// `N_d`, 1-based.
    pub fn value(&self, d: u32) -> &BigInt {
        assert!(d >= 1 && d <= self.d_max(), "degree {d} out of table range");
        &self.values[(d - 1) as usize]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Computes `N_1..N_dmax` by the two-term recursion: each `N_d` is a sum over
/// splittings `d = d1 + d2` of
/// `N_{d1} N_{d2} (d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1))`.
pub fn kontsevich(d_max: u32) -> KontsevichTable {
    assert!(d_max >= 1);
    let mut values: Vec<BigInt> = vec![BigInt::one()];
    for d in 2..=d_max as u64 {
        let mut acc = BigInt::from(0);
        for d1 in 1..d {
            let d2 = d - d1;
            let n1 = &values[(d1 - 1) as usize];
            let n2 = &values[(d2 - 1) as usize];
            let square_term =
                BigInt::from(d1 * d1 * d2 * d2) * binomial(3 * d - 4, 3 * d1 - 2);
            let cube_term =
                BigInt::from(d1 * d1 * d1 * d2) * binomial(3 * d - 4, 3 * d1 - 1);
            acc += n1 * n2 * (square_term - cube_term);
        }
        values.push(acc);
    }
    KontsevichTable { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{factorial, Rational};
    use num_traits::{One, Zero};

    #[test]
    fn first_values() {
        let t = kontsevich(5);
        assert_eq!(t.value(1), &BigInt::from(1));
        assert_eq!(t.value(2), &BigInt::from(1));
        assert_eq!(t.value(3), &BigInt::from(12));
        // frozen from an independent hand evaluation of the recursion
        assert_eq!(t.value(4), &BigInt::from(620));
        assert_eq!(t.value(5), &BigInt::from(87304));
    }

    // Independent oracle: the factorial form of the same relation,
    // N_d/(3d-4)! = sum d1^2 d2^2 N1 N2 / ((3d1-2)!(3d2-2)!)
    //             - d1^3 d2 N1 N2 / ((3d1-1)!(3d2-3)!),
    // evaluated in exact rationals.
    fn factorial_form(d: u64, known: &[BigInt]) -> BigInt {
        let mut acc = Rational::zero();
        for d1 in 1..d {
            let d2 = d - d1;
            let n1 = Rational::from_integer(known[(d1 - 1) as usize].clone());
            let n2 = Rational::from_integer(known[(d2 - 1) as usize].clone());
            let pos = Rational::new(
                BigInt::from(d1 * d1 * d2 * d2),
                factorial(3 * d1 - 2) * factorial(3 * d2 - 2),
            );
            let neg = Rational::new(
                BigInt::from(d1 * d1 * d1 * d2),
                factorial(3 * d1 - 1) * factorial(3 * d2 - 3),
            );
            acc += (pos - neg) * n1 * n2;
        }
        let nd = acc * Rational::from_integer(factorial(3 * d - 4));
        assert!(nd.denom().is_one(), "curve count must be an integer");
        nd.numer().clone()
    }

    #[test]
    fn binomial_and_factorial_forms_agree() {
        let t = kontsevich(8);
        for d in 2..=8u64 {
            let expected = factorial_form(d, t.values());
            assert_eq!(t.value(d as u32), &expected, "d={d}");
        }
    }

    #[test]
    fn counts_grow_and_stay_positive() {
        let t = kontsevich(12);
        for d in 1..=12 {
            assert!(t.value(d) > &BigInt::zero());
        }
        // N_10 and beyond need big integers (far outside u64)
        assert!(t.value(12) > &BigInt::from(u64::MAX));
    }

    #[test]
    #[should_panic(expected = "out of table range")]
    fn out_of_range_lookup_panics() {
        kontsevich(3).value(4);
    }
}
