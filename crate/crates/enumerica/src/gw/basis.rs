//! Cohomology bases and pairing data for the target spaces whose genus-0
//! invariants the crate computes.

use crate::scalar::Rational;
use crate::series::VarTable;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// A target space for genus-0 invariants.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Target {
    P1,
    P2,
    /// A smooth genus-g surface, g >= 1. Only constant maps exist, so every
    /// invariant lives in curve class zero.
    Surface { genus: u32 },
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::P1 => write!(f, "P1"),
            Target::P2 => write!(f, "P2"),
            Target::Surface { genus } => write!(f, "Sigma_{genus}"),
        }
    }
}

/// An ordered cohomology basis `T_0..T_m` with its intersection pairing.
///
/// Conventions: `T_0` is the fundamental class and the last element is the
/// point class. For a surface of genus g the middle classes are the odd
/// one-cycles `a_1, b_1, .., a_g, b_g`, and the pairing is the standard
/// block form, graded-symmetric: antisymmetric on the odd-odd blocks
/// (`integral of b cup a = -1`), symmetric elsewhere. The inverse is stored
/// separately since the odd blocks are not involutions.
#[derive(Clone, Debug)]
pub struct CohBasis {
    target: Target,
    degrees: Vec<u32>,
    labels: Vec<String>,
    pairing: Vec<Vec<i64>>,
    inverse: Vec<Vec<i64>>,
    anticanonical: Option<u32>,
}

impl CohBasis {
    pub fn new(target: Target) -> Self {
        match target {
            Target::P1 => CohBasis {
                target,
                degrees: vec![0, 2],
                labels: vec!["[P1]".into(), "[pt]".into()],
                pairing: vec![vec![0, 1], vec![1, 0]],
                inverse: vec![vec![0, 1], vec![1, 0]],
                anticanonical: Some(2),
            },
            Target::P2 => CohBasis {
                target,
                degrees: vec![0, 2, 4],
                labels: vec!["[P2]".into(), "[line]".into(), "[pt]".into()],
                pairing: vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
                inverse: vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
                anticanonical: Some(3),
            },
            Target::Surface { genus } => {
                assert!(genus >= 1, "use P1 for the genus-zero case");
                let g = genus as usize;
                let rank = 2 * g + 2;
                let mut degrees = vec![0u32];
                let mut labels = vec!["[S]".to_string()];
                for j in 1..=g {
                    degrees.push(1);
                    degrees.push(1);
                    labels.push(format!("[a{j}]"));
                    labels.push(format!("[b{j}]"));
                }
                degrees.push(2);
                labels.push("[pt]".into());
                let mut pairing = vec![vec![0i64; rank]; rank];
                let mut inverse = vec![vec![0i64; rank]; rank];
                pairing[0][rank - 1] = 1;
                pairing[rank - 1][0] = 1;
                inverse[0][rank - 1] = 1;
                inverse[rank - 1][0] = 1;
                for j in 0..g {
                    let (a, b) = (1 + 2 * j, 2 + 2 * j);
                    pairing[a][b] = 1;
                    pairing[b][a] = -1;
                    inverse[a][b] = -1;
                    inverse[b][a] = 1;
                }
                CohBasis {
                    target,
                    degrees,
                    labels,
                    pairing,
                    inverse,
                    anticanonical: None,
                }
            }
        }
    }

    pub fn target(&self) -> Target {
        self.target
    }

    /// Number of basis elements.
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Complex dimension of the space.
    pub fn space_dimension(&self) -> u32 {
        match self.target {
            Target::P1 | Target::Surface { .. } => 1,
            Target::P2 => 2,
        }
    }

    /// Real cohomological degree of `T_i`.
    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the point class.
    pub fn point_index(&self) -> usize {
        self.rank() - 1
    }

    /// The anticanonical degree of the unit curve class, when curves exist.
    pub fn anticanonical_degree(&self) -> Option<u32> {
        self.anticanonical
    }

    /// Intersection pairing `g_{ij}` (graded-symmetric block form).
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    /// Inverse pairing `g^{ij}` (checked against the identity in tests).
    pub fn pairing_inverse(&self, i: usize, j: usize) -> i64 {
        self.inverse[i][j]
    }

    /// The raised basis element `T^k = sum_l g^{kl} T_l` as a signed index:
    /// the pairing is a signed permutation, so raising is a relabeling with
    /// a possible sign.
    pub fn raised(&self, k: usize) -> (usize, i64) {
        (0..self.rank())
            .find_map(|l| {
                let g = self.pairing_inverse(k, l);
                (g != 0).then_some((l, g))
            })
            .expect("pairing row is nonzero")
    }

    /// The formal variable table: `deg t_i = deg T_i - 2`.
    pub fn variable_table(&self) -> Arc<VarTable> {
        VarTable::new(self.degrees.iter().map(|&d| d as i64 - 2))
    }

    /// Formal degree of `q`: `2 * integral over the unit curve class of the
    /// canonical class`, i.e. `-2(r+1)` on projective r-space.
    pub fn q_degree(&self) -> i64 {
        match self.anticanonical {
            Some(a) => -2 * a as i64,
            None => 0,
        }
    }

    /// Structure constants of the cup product: `T_i cup T_j` as a signed sum
    /// of basis elements (at most one term for these spaces).
    pub fn cup(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        let top = 2 * self.space_dimension();
        if self.degree(i) + self.degree(j) > top {
            return None;
        }
        if i == 0 {
            return Some((j, 1));
        }
        if j == 0 {
            return Some((i, 1));
        }
        match self.target {
            Target::P1 => None, // [pt]^2 = 0
            Target::P2 => match (i, j) {
                (1, 1) => Some((2, 1)), // line . line = pt
                _ => None,
            },
            Target::Surface { .. } => {
                if self.degree(i) == 1 && self.degree(j) == 1 {
                    // a_m pairs with b_m; the reversed order picks up a sign
                    if j == i + 1 && i % 2 == 1 {
                        Some((self.point_index(), 1))
                    } else if i == j + 1 && j % 2 == 1 {
                        Some((self.point_index(), -1))
                    } else {
                        None
                    }
                } else {
                    None
                }
            }
        }
    }

    /// Exact triple intersection `integral of T_a cup T_b cup T_c` in the
    /// given order (order matters for odd classes).
    pub fn triple_intersection(&self, a: usize, b: usize, c: usize) -> Rational {
        let ab = match self.cup(a, b) {
            Some(t) => t,
            None => return Rational::zero(),
        };
        let abc = match self.cup(ab.0, c) {
            Some(t) => t,
            None => return Rational::zero(),
        };
        if abc.0 == self.point_index() {
            crate::scalar::rat(ab.1 * abc.1)
        } else {
            Rational::zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn pairing_inverse_is_a_true_inverse() {
        for target in [
            Target::P1,
            Target::P2,
            Target::Surface { genus: 1 },
            Target::Surface { genus: 3 },
        ] {
            let basis = CohBasis::new(target);
            let n = basis.rank();
            for i in 0..n {
                for k in 0..n {
                    let prod: i64 = (0..n)
                        .map(|j| basis.pairing_inverse(i, j) * basis.pairing(j, k))
                        .sum();
                    assert_eq!(prod, i64::from(i == k), "target {target} at ({i},{k})");
                }
            }
        }
    }

    #[test]
    fn degrees_and_variable_parities() {
        let basis = CohBasis::new(Target::Surface { genus: 2 });
        assert_eq!(basis.rank(), 6);
        assert_eq!(basis.degree(0), 0);
        assert_eq!(basis.degree(1), 1);
        assert_eq!(basis.degree(5), 2);
        let table = basis.variable_table();
        assert_eq!(table.var(0).degree, -2);
        assert_eq!(table.var(1).degree, -1);
        assert!(table.is_odd(1));
        assert!(!table.is_odd(0));
        assert!(!table.is_odd(5));
    }

    #[test]
    fn raised_indices_follow_the_block_form() {
        let basis = CohBasis::new(Target::Surface { genus: 2 });
        assert_eq!(basis.raised(0), (5, 1));
        assert_eq!(basis.raised(5), (0, 1));
        // odd classes raise with a sign from the graded pairing
        assert_eq!(basis.raised(1), (2, -1));
        assert_eq!(basis.raised(2), (1, 1));
        assert_eq!(basis.raised(3), (4, -1));
        assert_eq!(basis.raised(4), (3, 1));

        let p1 = CohBasis::new(Target::P1);
        assert_eq!(p1.raised(0), (1, 1));
        assert_eq!(p1.raised(1), (0, 1));
    }

    #[test]
    fn pairing_is_graded_symmetric() {
        let basis = CohBasis::new(Target::Surface { genus: 2 });
        let n = basis.rank();
        for i in 0..n {
            for j in 0..n {
                let sign = if basis.degree(i) % 2 == 1 && basis.degree(j) % 2 == 1 {
                    -1
                } else {
                    1
                };
                assert_eq!(basis.pairing(i, j), sign * basis.pairing(j, i));
            }
        }
    }

    #[test]
    fn triple_intersections_on_a_surface() {
        let basis = CohBasis::new(Target::Surface { genus: 2 });
        // [S].[a1].[b1] = 1, and swapping the odd pair flips the sign
        assert_eq!(basis.triple_intersection(0, 1, 2), rat(1));
        assert_eq!(basis.triple_intersection(0, 2, 1), rat(-1));
        assert_eq!(basis.triple_intersection(1, 2, 0), rat(1));
        assert_eq!(basis.triple_intersection(0, 1, 4), rat(0));
        assert_eq!(basis.triple_intersection(0, 0, 5), rat(1));
        assert_eq!(basis.triple_intersection(0, 5, 5), rat(0));
    }

    #[test]
    fn triple_intersections_on_projective_spaces() {
        let p1 = CohBasis::new(Target::P1);
        assert_eq!(p1.triple_intersection(0, 0, 1), rat(1));
        assert_eq!(p1.triple_intersection(0, 1, 1), rat(0));

        let p2 = CohBasis::new(Target::P2);
        assert_eq!(p2.triple_intersection(0, 0, 2), rat(1));
        assert_eq!(p2.triple_intersection(0, 1, 1), rat(1));
        assert_eq!(p2.triple_intersection(1, 1, 0), rat(1));
        assert_eq!(p2.triple_intersection(0, 0, 1), rat(0));
    }
}
