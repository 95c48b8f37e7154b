//! The associativity constraint on third partials of the potential, and the
//! order-by-order solution for plane curve counts that it encodes.

use super::basis::CohBasis;
use super::kontsevich::{kontsevich, KontsevichTable};
use super::potential::potential_p2;
use super::quantum::third_partial;
use crate::scalar::{as_integer, factorial, BigInt, Rational};
use crate::series::SuperSeries;
use num_traits::One;

/// Left side minus right side of the associativity identity at indices
/// `(i, j, k, l)`:
///
/// `sum_{a,b} Phi_{ija} g^{ab} Phi_{bkl}
///  - (-1)^{deg t_i (deg t_j + deg t_k)} sum_{a,b} Phi_{jka} g^{ab} Phi_{bil}`
///
/// Identically zero, up to the reliable truncation, for a correctly built
/// potential.
pub fn wdvv_residual(basis: &CohBasis, phi: &SuperSeries, idx: [usize; 4]) -> SuperSeries {
    let [i, j, k, l] = idx;
    let rank = basis.rank();
    assert!(i < rank && j < rank && k < rank && l < rank);

    let contracted = |x: usize, y: usize, z: usize, w: usize| -> SuperSeries {
        let mut acc: Option<SuperSeries> = None;
        for a in 0..rank {
            for b in 0..rank {
                let g = basis.pairing_inverse(a, b);
                if g == 0 {
                    continue;
                }
                let left = third_partial(phi, x, y, a);
                if left.is_zero() {
                    continue;
                }
                let right = third_partial(phi, b, z, w);
                let term = (&left * &right).scaled(&crate::scalar::rat(g));
                acc = Some(match acc {
                    None => term,
                    Some(s) => &s + &term,
                });
            }
        }
        acc.unwrap_or_else(|| {
            let t = phi.truncation();
            SuperSeries::zero(
                phi.table(),
                crate::series::Truncation::new(t.t_degree.saturating_sub(3), t.q_power),
            )
        })
    };

    let lhs = contracted(i, j, k, l);
    let rhs = contracted(j, k, i, l);
    let table = phi.table();
    let di = table.var(i).degree;
    let dj = table.var(j).degree;
    let dk = table.var(k).degree;
    let sign_flip = (di * (dj + dk)).rem_euclid(2) == 1;
    if sign_flip {
        &lhs + &rhs
    } else {
        &lhs - &rhs
    }
}

/// Solves for the plane curve counts order by order from the associativity
/// identity at indices `(1,1,2,2)`, independently of the closed-form
/// recursion: for each degree the count enters the residual's pure
/// `t2^(3d-4) q^d` coefficient linearly, through the potential itself.
pub fn recursion_from_wdvv(d_max: u32) -> KontsevichTable {
    assert!(d_max >= 1);
    let basis = CohBasis::new(super::basis::Target::P2);
    let mut counts: Vec<BigInt> = vec![BigInt::one()];
    for d in 2..=d_max {
        let t_order = 3 * d - 1;
        counts.push(BigInt::from(0)); // placeholder for the unknown count
        let phi = potential_p2(t_order, d, &counts);
        let residual = wdvv_residual(&basis, &phi, [1, 1, 2, 2]);
        let c = residual.coefficient_of(&[(2, 3 * d - 4)], d);
        // residual coefficient = N_d/(3d-4)! + (known lower-order terms);
        // with the placeholder at zero, the count is minus the coefficient
        // scaled back up.
        let nd = -c * Rational::from_integer(factorial(3 * d as u64 - 4));
        let nd = as_integer(&nd).expect("curve count must be an integer");
        *counts.last_mut().expect("nonempty") = nd;
    }
    KontsevichTable::from_values(counts)
}

/// Convenience: the residual for the plane potential built from the closed
/// recursion, at the truncation needed to certify degrees up to `q_order`.
pub fn plane_wdvv_residual(q_order: u32, idx: [usize; 4]) -> SuperSeries {
    let basis = CohBasis::new(super::basis::Target::P2);
    let t_order = 3 * q_order + 2;
    let counts = kontsevich(q_order.max(1));
    let phi = potential_p2(t_order, q_order, counts.values());
    wdvv_residual(&basis, &phi, idx)
}
