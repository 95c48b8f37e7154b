//! Axiom-based evaluation of genus-0 invariants.
//!
//! Queries are reduced by a fixed rewrite order: dimension check first, then
//! the fundamental-class rule, then divisor stripping, then the base cases
//! (constant-map triple intersections, and the plane curve counts).

use super::basis::{CohBasis, Target};
use super::kontsevich::kontsevich;
use crate::scalar::{BigInt, Rational};
use crate::Error;
use num_traits::Zero;
use serde::Serialize;

/// A genus-0 invariant query: target space, curve degree, and an insertion
/// multiset (basis indices, kept sorted).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GwQuery {
    pub target: Target,
    pub degree: u32,
    insertions: Vec<usize>,
}

impl GwQuery {
    pub fn new(target: Target, degree: u32, mut insertions: Vec<usize>) -> Self {
        let basis = CohBasis::new(target);
        assert!(
            insertions.iter().all(|&i| i < basis.rank()),
            "insertion index outside the basis"
        );
        insertions.sort_unstable();
        GwQuery {
            target,
            degree,
            insertions,
        }
    }

    pub fn insertions(&self) -> &[usize] {
        &self.insertions
    }

    pub fn n(&self) -> usize {
        self.insertions.len()
    }
}

/// Required total real degree of the insertions for a nonzero genus-0
/// invariant: `2 dim X - 2 int_beta omega_X + 2(n-3)`.
pub fn dimension_sum(target: Target, degree: u32, n: usize) -> i64 {
    let basis = CohBasis::new(target);
    let dim = basis.space_dimension() as i64;
    let anticanonical = basis.anticanonical_degree().unwrap_or(0) as i64;
    2 * dim + 2 * anticanonical * degree as i64 + 2 * (n as i64 - 3)
}

/// Evaluates a genus-0 invariant exactly.
///
/// Supported: both projective targets for every degree (the plane counts are
/// looked up from the recursion), and surfaces in curve class zero.
pub fn evaluate_gw(query: &GwQuery) -> Result<Rational, Error> {
    let basis = CohBasis::new(query.target);
    let d = query.degree;
    let n = query.n();

    if matches!(query.target, Target::Surface { .. }) && d > 0 {
        return Err(Error::UnsupportedQuery(format!(
            "no nonconstant maps to {}: degree must be 0, got {d}",
            query.target
        )));
    }

    // Degree axiom: dimension mismatch kills the invariant.
    let total: i64 = query
        .insertions
        .iter()
        .map(|&i| basis.degree(i) as i64)
        .sum();
    if total != dimension_sum(query.target, d, n) {
        return Ok(Rational::zero());
    }

    if d == 0 {
        // Constant maps contribute only through three-pointed invariants.
        if n != 3 {
            return Ok(Rational::zero());
        }
        let (a, b, c) = (
            query.insertions[0],
            query.insertions[1],
            query.insertions[2],
        );
        return Ok(basis.triple_intersection(a, b, c));
    }

    // Fundamental class axiom: positive-degree invariants with a fundamental
    // class insertion vanish.
    if query.insertions.contains(&0) {
        return Ok(Rational::zero());
    }

    // Divisor axiom: each degree-2 insertion integrates to `d` over the
    // curve class.
    let divisor_count = query
        .insertions
        .iter()
        .filter(|&&i| basis.degree(i) == 2)
        .count();
    let multiplier = BigInt::from(d).pow(divisor_count as u32);
    let rest: Vec<usize> = query
        .insertions
        .iter()
        .copied()
        .filter(|&i| basis.degree(i) > 2)
        .collect();

    let core = match query.target {
        Target::P1 => {
            debug_assert!(rest.is_empty());
            if d == 1 {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        }
        Target::P2 => {
            // all remaining insertions are point classes; the degree axiom
            // already forced their number to 3d-1
            debug_assert_eq!(rest.len() as i64, 3 * d as i64 - 1);
            kontsevich(d).value(d).clone()
        }
        Target::Surface { .. } => unreachable!("positive degree rejected above"),
    };
    Ok(Rational::from_integer(multiplier * core))
}

/// Insertion profiles not killed outright by the degree and fundamental
/// class axioms, for sizes up to `n_max`. Each profile is a sorted list of
/// basis indices.
pub fn enumerate_nonzero(target: Target, degree: u32, n_max: usize) -> Vec<Vec<usize>> {
    let basis = CohBasis::new(target);
    let mut out = Vec::new();
    if degree == 0 {
        if n_max < 3 {
            return out;
        }
        // three-pointed constant-map profiles with a nonzero triple product
        let r = basis.rank();
        for a in 0..r {
            for b in a..r {
                for c in b..r {
                    let q = GwQuery::new(target, 0, vec![a, b, c]);
                    if let Ok(v) = evaluate_gw(&q) {
                        if !v.is_zero() {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        return out;
    }
    match target {
        Target::P1 => {
            // every size works: points are divisors here
            for n in 0..=n_max {
                if dimension_sum(target, degree, n) == 2 * n as i64 {
                    out.push(vec![1; n]);
                }
            }
        }
        Target::P2 => {
            let a = 3 * degree as usize - 1; // point insertions forced by dimension
            for n in a..=n_max {
                let b = n - a;
                let mut profile = vec![1usize; b];
                profile.extend(std::iter::repeat_n(2, a));
                out.push(profile);
            }
        }
        Target::Surface { .. } => {}
    }
    out
}
