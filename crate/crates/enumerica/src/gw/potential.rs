//! Genus-0 potentials as truncated formal series.
//!
//! The classical (degree-zero) part is an exact cubic; the quantum part is
//! truncated at the requested total t-degree and q-power.

use super::basis::{CohBasis, Target};
use super::kontsevich::kontsevich;
use crate::scalar::{factorial, rat, ratio, BigInt, Rational};
use crate::series::{SuperSeries, Truncation};

/// The genus-0 potential of a target space, truncated to total t-degree
/// `t_order` and q-power `q_order`.
pub fn potential(target: Target, t_order: u32, q_order: u32) -> SuperSeries {
    match target {
        Target::P2 => {
            let counts = kontsevich(q_order.max(1));
            potential_p2(t_order, q_order, counts.values())
        }
        _ => potential_with_counts(target, t_order, q_order, &[]),
    }
}

/// Plane potential with explicit curve counts (`counts[d-1]` is the degree-d
/// count). Accepting the table as a slice lets callers perturb entries or
/// solve for them order by order.
pub fn potential_p2(t_order: u32, q_order: u32, counts: &[BigInt]) -> SuperSeries {
    assert!(
        counts.len() >= q_order as usize,
        "need curve counts up to the q truncation"
    );
    potential_with_counts(Target::P2, t_order, q_order, counts)
}

fn potential_with_counts(
    target: Target,
    t_order: u32,
    q_order: u32,
    counts: &[BigInt],
) -> SuperSeries {
    let basis = CohBasis::new(target);
    let table = basis.variable_table();
    let trunc = Truncation::new(t_order, q_order);
    match target {
        Target::P1 => {
            // (1/2) t0^2 t1 + e^{t1} q
            let classical =
                SuperSeries::monomial(&table, trunc, &[(0, 2), (1, 1)], 0, ratio(1, 2));
            let quantum = &SuperSeries::variable(&table, trunc, 1).exp()
                * &SuperSeries::q_power(&table, trunc, 1);
            &classical + &quantum
        }
        Target::P2 => {
            // (1/2)(t0^2 t2 + t0 t1^2) + sum_d e^{d t1} N_d t2^{3d-1}/(3d-1)! q^d
            let mut phi =
                SuperSeries::monomial(&table, trunc, &[(0, 2), (2, 1)], 0, ratio(1, 2));
            phi = &phi + &SuperSeries::monomial(&table, trunc, &[(0, 1), (1, 2)], 0, ratio(1, 2));
            for d in 1..=q_order {
                let nd = Rational::from_integer(counts[(d - 1) as usize].clone());
                let coeff = nd / Rational::from_integer(factorial(3 * d as u64 - 1));
                let exp_part = SuperSeries::variable(&table, trunc, 1)
                    .scaled(&rat(d as i64))
                    .exp();
                let tail = SuperSeries::monomial(&table, trunc, &[(2, 3 * d - 1)], d, coeff);
                phi = &phi + &(&exp_part * &tail);
            }
            phi
        }
        Target::Surface { genus } => {
            // (1/2) t0^2 t_pt - sum_j t0 t_{2j-1} t_{2j}; constant maps only,
            // so there are no q terms.
            let pt = basis.point_index();
            let mut phi = SuperSeries::monomial(&table, trunc, &[(0, 2), (pt, 1)], 0, ratio(1, 2));
            for j in 1..=genus as usize {
                let odd_pair = SuperSeries::monomial(
                    &table,
                    trunc,
                    &[(0, 1), (2 * j - 1, 1), (2 * j, 1)],
                    0,
                    rat(-1),
                );
                phi = &phi + &odd_pair;
            }
            phi
        }
    }
}
