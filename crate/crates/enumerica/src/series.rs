//! Truncated formal power series in graded (even/odd) variables over the
//! exact rationals, with a single Novikov variable `q`.
//!
//! Odd variables square to zero and anticommute; monomials are stored in a
//! canonical form (odd factors in ascending index order) with the sign of the
//! sorting permutation absorbed into the coefficient. Truncation is tracked
//! per series as a bound on the total `t`-exponent and on the `q`-exponent;
//! binary operations take the componentwise minimum of the operand bounds.

use crate::scalar::{format_rational, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// A formal variable `t_i` with an assigned (possibly negative) degree.
/// The parity is determined by the degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GradedVariable {
    pub index: usize,
    pub degree: i64,
}

impl GradedVariable {
    pub fn parity(&self) -> Parity {
        if self.degree.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The ordered list of variables a series lives over.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarTable {
    vars: Vec<GradedVariable>,
}

impl VarTable {
    pub fn new(degrees: impl IntoIterator<Item = i64>) -> Arc<VarTable> {
        let vars = degrees
            .into_iter()
            .enumerate()
            .map(|(index, degree)| GradedVariable { index, degree })
            .collect();
        Arc::new(VarTable { vars })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, i: usize) -> GradedVariable {
        self.vars[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.vars[i].parity() == Parity::Odd
    }

    pub fn vars(&self) -> &[GradedVariable] {
        &self.vars
    }
}

/// A canonical monomial: one exponent slot per variable plus a `q` power.
/// Odd variables carry exponent 0 or 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SuperMonomial {
    exponents: Vec<u32>,
    q_power: u32,
}

impl SuperMonomial {
    pub fn unit(table: &VarTable) -> Self {
        SuperMonomial {
            exponents: vec![0; table.len()],
            q_power: 0,
        }
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn q_power(&self) -> u32 {
        self.q_power
    }

    /// Total `t`-exponent (truncation counts exponents, not formal degree).
    pub fn t_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Formal degree: sum of variable degrees weighted by exponents.
    /// The `q` contribution must be added by the caller, since `deg q`
    /// depends on the target space.
    pub fn formal_t_degree(&self, table: &VarTable) -> i64 {
        self.exponents
            .iter()
            .zip(table.vars())
            .map(|(&e, v)| e as i64 * v.degree)
            .sum()
    }

    pub fn parity(&self, table: &VarTable) -> Parity {
        let odd_count: u32 = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(i, _)| table.is_odd(*i))
            .map(|(_, &e)| e)
            .sum();
        if odd_count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn odd_indices<'a>(&'a self, table: &'a VarTable) -> impl Iterator<Item = usize> + 'a {
        (0..table.len()).filter(move |&i| table.is_odd(i) && self.exponents[i] == 1)
    }

    /// Product of two canonical monomials. Returns the permutation sign and
    /// the canonical product, or `None` when an odd variable repeats.
    pub fn mul(&self, other: &SuperMonomial, table: &VarTable) -> Option<(i32, SuperMonomial)> {
        let mut exponents = self.exponents.clone();
        let mut sign = 1i32;
        // Sorting other's odd factors past self's: each pair (x in self, y in
        // other) with y < x is one transposition of odd symbols.
        let mut inversions = 0u32;
        for y in other.odd_indices(table) {
            inversions += self.odd_indices(table).filter(|&x| x > y).count() as u32;
        }
        if inversions % 2 == 1 {
            sign = -1;
        }
        for (i, &e) in other.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if table.is_odd(i) && self.exponents[i] + e > 1 {
                return None;
            }
            exponents[i] += e;
        }
        Some((
            sign,
            SuperMonomial {
                exponents,
                q_power: self.q_power + other.q_power,
            },
        ))
    }
}

/// Normalizes an ordered product of variable powers into a canonical
/// monomial. Returns the sign of the permutation sorting the odd factors,
/// or `None` when the product is annihilated (an odd variable squared).
pub fn monomial_normalize(
    table: &VarTable,
    factors: &[(usize, u32)],
) -> Option<(i32, SuperMonomial)> {
    let mut mono = SuperMonomial::unit(table);
    let mut odd_seen: Vec<usize> = Vec::new();
    let mut sign = 1i32;
    for &(i, e) in factors {
        assert!(i < table.len(), "variable index {i} out of range");
        if e == 0 {
            continue;
        }
        if table.is_odd(i) {
            if e >= 2 || mono.exponents[i] == 1 {
                return None;
            }
            // Moving t_i into sorted position crosses every odd factor
            // already placed with a larger index.
            let crossings = odd_seen.iter().filter(|&&j| j > i).count();
            if crossings % 2 == 1 {
                sign = -sign;
            }
            odd_seen.push(i);
            mono.exponents[i] = 1;
        } else {
            mono.exponents[i] += e;
        }
    }
    Some((sign, mono))
}

/// Truncation bounds: maximal total `t`-exponent and maximal `q`-exponent.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Truncation {
    pub t_degree: u32,
    pub q_power: u32,
}

impl Truncation {
    pub fn new(t_degree: u32, q_power: u32) -> Self {
        Truncation { t_degree, q_power }
    }

    pub fn meet(self, other: Truncation) -> Truncation {
        Truncation {
            t_degree: self.t_degree.min(other.t_degree),
            q_power: self.q_power.min(other.q_power),
        }
    }

    pub fn admits(&self, m: &SuperMonomial) -> bool {
        m.t_degree() <= self.t_degree && m.q_power() <= self.q_power
    }
}

/// A truncated formal series with exact rational coefficients.
///
/// Zero coefficients are never stored, so equal series have equal term maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperSeries {
    table: Arc<VarTable>,
    trunc: Truncation,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperSeries {
    pub fn zero(table: &Arc<VarTable>, trunc: Truncation) -> Self {
        SuperSeries {
            table: Arc::clone(table),
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &Arc<VarTable>, trunc: Truncation, c: Rational) -> Self {
        let mut s = Self::zero(table, trunc);
        s.add_term(SuperMonomial::unit(table), c);
        s
    }

    pub fn one(table: &Arc<VarTable>, trunc: Truncation) -> Self {
        Self::constant(table, trunc, Rational::one())
    }

    /// The variable `t_i` as a series.
    pub fn variable(table: &Arc<VarTable>, trunc: Truncation, i: usize) -> Self {
        let (sign, mono) = monomial_normalize(table, &[(i, 1)]).expect("single variable");
        debug_assert_eq!(sign, 1);
        let mut s = Self::zero(table, trunc);
        s.add_term(mono, Rational::one());
        s
    }

    /// The Novikov monomial `q^d` as a series.
    pub fn q_power(table: &Arc<VarTable>, trunc: Truncation, d: u32) -> Self {
        let mut mono = SuperMonomial::unit(table);
        mono.q_power = d;
        let mut s = Self::zero(table, trunc);
        s.add_term(mono, Rational::one());
        s
    }

    /// Builds a monomial from ordered factors and returns it as a series with
    /// the given coefficient (sign-adjusted; annihilated products give zero).
    pub fn monomial(
        table: &Arc<VarTable>,
        trunc: Truncation,
        factors: &[(usize, u32)],
        q: u32,
        coeff: Rational,
    ) -> Self {
        let mut s = Self::zero(table, trunc);
        if let Some((sign, mut mono)) = monomial_normalize(table, factors) {
            mono.q_power = q;
            s.add_term(mono, coeff * Rational::from_integer(sign.into()));
        }
        s
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &SuperMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial with the given even exponents and `q` power
    /// (all odd exponents zero). Convenience for tests and extraction.
    pub fn coefficient_of(&self, factors: &[(usize, u32)], q: u32) -> Rational {
        match monomial_normalize(&self.table, factors) {
            Some((sign, mut mono)) => {
                mono.q_power = q;
                self.coefficient(&mono) * Rational::from_integer(sign.into())
            }
            None => Rational::zero(),
        }
    }

    /// True when every stored term has even parity.
    pub fn is_even(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.parity(&self.table) == Parity::Even)
    }

    fn add_term(&mut self, mono: SuperMonomial, coeff: Rational) {
        if coeff.is_zero() || !self.trunc.admits(&mono) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_table(&self, other: &SuperSeries) {
        assert!(
            self.table == other.table,
            "series operands use different variable tables"
        );
    }

    /// Re-truncates to tighter bounds, dropping excess terms.
    pub fn truncated(&self, trunc: Truncation) -> SuperSeries {
        let trunc = self.trunc.meet(trunc);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| trunc.admits(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        SuperSeries {
            table: Arc::clone(&self.table),
            trunc,
            terms,
        }
    }

    pub fn scaled(&self, c: &Rational) -> SuperSeries {
        if c.is_zero() {
            return SuperSeries::zero(&self.table, self.trunc);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v * c))
            .collect();
        SuperSeries {
            table: Arc::clone(&self.table),
            trunc: self.trunc,
            terms,
        }
    }

    /// Left partial derivative with respect to `t_i`.
    ///
    /// For an odd variable the factor is first moved to the front of the
    /// canonical monomial, picking up a sign for each odd factor it crosses.
    /// The reliable total-degree bound drops by one.
    pub fn partial(&self, i: usize) -> SuperSeries {
        assert!(i < self.table.len(), "variable index {i} out of range");
        let trunc = Truncation::new(self.trunc.t_degree.saturating_sub(1), self.trunc.q_power);
        let mut out = SuperSeries::zero(&self.table, trunc);
        let odd = self.table.is_odd(i);
        for (mono, coeff) in &self.terms {
            let e = mono.exponent(i);
            if e == 0 {
                continue;
            }
            let mut m = mono.clone();
            m.exponents[i] -= 1;
            if odd {
                let crossings = mono.odd_indices(&self.table).take_while(|&j| j < i).count();
                let sign = if crossings % 2 == 0 { 1 } else { -1 };
                out.add_term(m, coeff * Rational::from_integer(sign.into()));
            } else {
                out.add_term(m, coeff * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Exponential `sum a^n / n!` up to truncation.
    ///
    /// Panics unless `a` has zero constant term and even parity.
    pub fn exp(&self) -> SuperSeries {
        let unit = SuperMonomial::unit(&self.table);
        assert!(
            self.coefficient(&unit).is_zero(),
            "exp requires a zero constant term"
        );
        assert!(self.is_even(), "exp requires an even-parity series");
        let mut acc = SuperSeries::one(&self.table, self.trunc);
        let mut power = SuperSeries::one(&self.table, self.trunc);
        let bound = self.trunc.t_degree as u64 + self.trunc.q_power as u64;
        for n in 1..=bound {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            power = power.scaled(&Rational::new(1.into(), n.into()));
            acc = &acc + &power;
        }
        acc
    }

    /// Stable sorted term records for machine-readable output.
    pub fn term_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                monomial: display_monomial(m, false),
                exponents: m.exponents.clone(),
                q: m.q_power,
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }
}

/// One term of a series in serialized form.
#[derive(Clone, Debug, Serialize)]
pub struct TermRecord {
    pub monomial: String,
    pub exponents: Vec<u32>,
    pub q: u32,
    pub numerator: String,
    pub denominator: String,
}

impl Add for &SuperSeries {
    type Output = SuperSeries;
    fn add(self, rhs: &SuperSeries) -> SuperSeries {
        self.assert_same_table(rhs);
        let trunc = self.trunc.meet(rhs.trunc);
        let mut out = SuperSeries::zero(&self.table, trunc);
        for (m, c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SuperSeries {
    type Output = SuperSeries;
    fn sub(self, rhs: &SuperSeries) -> SuperSeries {
        self + &(-rhs)
    }
}

impl Neg for &SuperSeries {
    type Output = SuperSeries;
    fn neg(self) -> SuperSeries {
        self.scaled(&Rational::from_integer((-1).into()))
    }
}

impl Mul for &SuperSeries {
    type Output = SuperSeries;
    fn mul(self, rhs: &SuperSeries) -> SuperSeries {
        self.assert_same_table(rhs);
        let trunc = self.trunc.meet(rhs.trunc);
        let mut out = SuperSeries::zero(&self.table, trunc);
        for (m1, c1) in &self.terms {
            if m1.q_power() > trunc.q_power || m1.t_degree() > trunc.t_degree {
                continue;
            }
            for (m2, c2) in &rhs.terms {
                if let Some((sign, m)) = m1.mul(m2, &self.table) {
                    if !trunc.admits(&m) {
                        continue;
                    }
                    out.add_term(m, c1 * c2 * Rational::from_integer(sign.into()));
                }
            }
        }
        out
    }
}

fn display_monomial(m: &SuperMonomial, with_unit: bool) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &e) in m.exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("t{i}")),
            _ => parts.push(format!("t{i}^{e}")),
        }
    }
    match m.q_power {
        0 => {}
        1 => parts.push("q".to_string()),
        d => parts.push(format!("q^{d}")),
    }
    if parts.is_empty() {
        if with_unit {
            "1".to_string()
        } else {
            String::new()
        }
    } else {
        parts.join("*")
    }
}

impl fmt::Display for SuperSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let body = display_monomial(m, false);
            let coeff = format_rational(c);
            let (sign, mag) = if let Some(stripped) = coeff.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", coeff)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{body}")?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::*;

    fn table_p1() -> Arc<VarTable> {
        VarTable::new([-2, 0])
    }

    // t0 even, t1..t4 odd, t5 even: the genus-2 surface layout.
    fn table_sigma2() -> Arc<VarTable> {
        VarTable::new([-2, -1, -1, -1, -1, 0])
    }

    #[test]
    fn normalize_even_variables_commute() {
        let t = table_p1();
        let (sign, m) = monomial_normalize(&t, &[(0, 2), (1, 1)]).unwrap();
        assert_eq!(sign, 1);
        assert_eq!(m.exponent(0), 2);
        assert_eq!(m.exponent(1), 1);
        assert_eq!(m.t_degree(), 3);
    }

    #[test]
    fn normalize_transposes_odd_variables() {
        let t = table_sigma2();
        // (t3, t1) -> -t1 t3
        let (sign, m) = monomial_normalize(&t, &[(3, 1), (1, 1)]).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(m.exponent(1), 1);
        assert_eq!(m.exponent(3), 1);
    }

    #[test]
    fn normalize_annihilates_odd_squares() {
        let t = table_sigma2();
        assert!(monomial_normalize(&t, &[(1, 1), (1, 1)]).is_none());
        assert!(monomial_normalize(&t, &[(1, 2)]).is_none());
    }

    #[test]
    fn square_of_one_plus_t1() {
        let t = table_p1();
        let trunc = Truncation::new(2, 0);
        let a = &SuperSeries::one(&t, trunc) + &SuperSeries::variable(&t, trunc, 1);
        let sq = &a * &a;
        assert_eq!(sq.coefficient_of(&[], 0), rat(1));
        assert_eq!(sq.coefficient_of(&[(1, 1)], 0), rat(2));
        assert_eq!(sq.coefficient_of(&[(1, 2)], 0), rat(1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn odd_variables_anticommute_in_products() {
        let t = table_sigma2();
        let trunc = Truncation::new(4, 0);
        let t1 = SuperSeries::variable(&t, trunc, 1);
        let t2 = SuperSeries::variable(&t, trunc, 2);
        let ab = &t1 * &t2;
        let ba = &t2 * &t1;
        assert_eq!(ab.coefficient_of(&[(1, 1), (2, 1)], 0), rat(1));
        assert_eq!(ba.coefficient_of(&[(1, 1), (2, 1)], 0), rat(-1));
        assert!((&ab + &ba).is_zero());
        // every odd variable squares to zero
        for i in 0..t.len() {
            if t.is_odd(i) {
                let ti = SuperSeries::variable(&t, trunc, i);
                assert!((&ti * &ti).is_zero(), "t{i}^2 != 0");
            }
        }
    }

    #[test]
    fn identity_element() {
        let t = table_p1();
        let trunc = Truncation::new(3, 2);
        let a = SuperSeries::monomial(&t, trunc, &[(0, 1), (1, 2)], 1, ratio(5, 3));
        assert_eq!(&a * &SuperSeries::one(&t, trunc), a);
    }

    #[test]
    fn partial_derivative_basics() {
        let t = table_p1();
        let trunc = Truncation::new(3, 0);
        // d/dt0 (1/2 t0^2 t1) = t0 t1
        let f = SuperSeries::monomial(&t, trunc, &[(0, 2), (1, 1)], 0, ratio(1, 2));
        let df = f.partial(0);
        assert_eq!(df.coefficient_of(&[(0, 1), (1, 1)], 0), rat(1));
        assert_eq!(df.num_terms(), 1);
        // derivative of a constant is zero
        assert!(SuperSeries::one(&t, trunc).partial(1).is_zero());
    }

    #[test]
    fn mixed_partials_of_odd_pair_differ_by_sign() {
        let t = table_sigma2();
        let trunc = Truncation::new(2, 0);
        let f = SuperSeries::monomial(&t, trunc, &[(1, 1), (3, 1)], 0, rat(1));
        // t1 sits at the front of the canonical monomial, so taking t1 first
        // costs no sign; taking t3 first crosses t1 once.
        let d1_then_d3 = f.partial(1).partial(3);
        let d3_then_d1 = f.partial(3).partial(1);
        assert_eq!(d1_then_d3.coefficient_of(&[], 0), rat(1));
        assert_eq!(d3_then_d1.coefficient_of(&[], 0), rat(-1));
        assert_eq!(&d1_then_d3 + &d3_then_d1, SuperSeries::zero(&t, Truncation::new(0, 0)));
    }

    #[test]
    fn exp_matches_taylor_coefficients() {
        let t = table_p1();
        let trunc = Truncation::new(3, 0);
        let e = SuperSeries::variable(&t, trunc, 1).exp();
        assert_eq!(e.coefficient_of(&[], 0), rat(1));
        assert_eq!(e.coefficient_of(&[(1, 1)], 0), rat(1));
        assert_eq!(e.coefficient_of(&[(1, 2)], 0), ratio(1, 2));
        assert_eq!(e.coefficient_of(&[(1, 3)], 0), ratio(1, 6));

        let zero = SuperSeries::zero(&t, trunc);
        assert_eq!(zero.exp(), SuperSeries::one(&t, trunc));
    }

    #[test]
    fn exp_of_scaled_variable() {
        let t = table_p1();
        let trunc = Truncation::new(6, 0);
        let d = 4i64;
        let e = SuperSeries::variable(&t, trunc, 1).scaled(&rat(d)).exp();
        for k in 0..=6u32 {
            let expected = Rational::new(
                num_bigint::BigInt::from(d).pow(k),
                crate::scalar::factorial(k as u64),
            );
            assert_eq!(e.coefficient_of(&[(1, k)], 0), expected);
        }
    }

    #[test]
    fn truncation_meets_on_multiplication() {
        let t = table_p1();
        let a = SuperSeries::variable(&t, Truncation::new(5, 3), 1);
        let b = SuperSeries::variable(&t, Truncation::new(2, 1), 1);
        let p = &a * &b;
        assert_eq!(p.truncation(), Truncation::new(2, 1));
        assert_eq!(p.coefficient_of(&[(1, 2)], 0), rat(1));
    }

    #[test]
    #[should_panic(expected = "different variable tables")]
    fn mismatched_tables_rejected() {
        let a = SuperSeries::one(&table_p1(), Truncation::new(1, 0));
        let b = SuperSeries::one(&VarTable::new([-2, 0, 2]), Truncation::new(1, 0));
        let _ = &a * &b;
    }

    // Random homogeneous-parity series over the genus-2 table.
    fn arb_series(max_terms: usize) -> impl Strategy<Value = SuperSeries> {
        let term = (
            proptest::collection::vec(0u32..=2, 6),
            0u32..=1,
            -6i64..=6,
            1i64..=4,
        );
        proptest::collection::vec(term, 0..=max_terms).prop_map(|terms| {
            let table = table_sigma2();
            let trunc = Truncation::new(6, 2);
            let mut s = SuperSeries::zero(&table, trunc);
            for (exps, q, num, den) in terms {
                let factors: Vec<(usize, u32)> = exps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (i, if table.is_odd(i) { e.min(1) } else { e }))
                    .collect();
                let m = SuperSeries::monomial(&table, trunc, &factors, q, ratio(num, den));
                s = &s + &m;
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiplication_is_associative(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
            let lhs = &(&a * &b) * &c;
            let rhs = &a * &(&b * &c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn addition_commutes_and_mul_distributes(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
            prop_assert_eq!(&a + &b, &b + &a);
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
        }

        // a*b = (-1)^{parity a * parity b} b*a, checked on parity-homogeneous slices.
        #[test]
        fn supercommutativity(a in arb_series(4), b in arb_series(4)) {
            let table = table_sigma2();
            let trunc = Truncation::new(6, 2);
            for pa in [Parity::Even, Parity::Odd] {
                for pb in [Parity::Even, Parity::Odd] {
                    let sa = filter_parity(&a, pa, &table, trunc);
                    let sb = filter_parity(&b, pb, &table, trunc);
                    let ab = &sa * &sb;
                    let ba = &sb * &sa;
                    let expect = if pa == Parity::Odd && pb == Parity::Odd { -&ba } else { ba };
                    prop_assert_eq!(ab, expect);
                }
            }
        }

        // The displayed sign law for second partials holds on every series.
        #[test]
        fn mixed_partial_sign_law(a in arb_series(5)) {
            let table = table_sigma2();
            for i in 0..6usize {
                for j in 0..6usize {
                    let lhs = a.partial(j).partial(i);
                    let rhs = a.partial(i).partial(j);
                    let di = table.var(i).degree;
                    let dj = table.var(j).degree;
                    let expect = if (di * dj) % 2 != 0 { -&rhs } else { rhs };
                    prop_assert_eq!(lhs, expect);
                }
            }
        }
    }

    fn filter_parity(
        s: &SuperSeries,
        p: Parity,
        table: &Arc<VarTable>,
        trunc: Truncation,
    ) -> SuperSeries {
        let mut out = SuperSeries::zero(table, trunc);
        for (m, c) in s.terms() {
            if m.parity(table) == p {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}
