//! Quantum products: the big product from third partials of the potential,
//! and the small product from three-point invariants.

use super::basis::{CohBasis, Target};
use super::query::{evaluate_gw, GwQuery};
use crate::scalar::{rat, Rational};
use crate::series::SuperSeries;
use crate::Error;
use num_traits::Zero;

/// Third partial of the potential, rightmost index applied first. This is
/// the order that reproduces the signed product tables for odd classes.
pub fn third_partial(phi: &SuperSeries, i: usize, j: usize, k: usize) -> SuperSeries {
    phi.partial(k).partial(j).partial(i)
}

/// A big quantum product `T_i * T_j`: coefficient series on the raised basis
/// `T^k`, one per basis index.
#[derive(Clone, Debug)]
pub struct QuantumProduct {
    on_dual: Vec<SuperSeries>,
}

impl QuantumProduct {
    /// Coefficient series of `T^k`.
    pub fn dual_coefficient(&self, k: usize) -> &SuperSeries {
        &self.on_dual[k]
    }

    pub fn dual_coefficients(&self) -> &[SuperSeries] {
        &self.on_dual
    }

    /// Coefficient series of `T_l` after lowering through the pairing.
    pub fn basis_coefficient(&self, basis: &CohBasis, l: usize) -> SuperSeries {
        let mut acc: Option<SuperSeries> = None;
        for k in 0..basis.rank() {
            let g = basis.pairing_inverse(k, l);
            if g == 0 {
                continue;
            }
            let term = self.on_dual[k].scaled(&rat(g));
            acc = Some(match acc {
                None => term,
                Some(s) => &s + &term,
            });
        }
        acc.expect("pairing has a nonzero entry per column")
    }
}

/// The big quantum product `T_i * T_j = sum_k (d^3 Phi / dt_i dt_j dt_k) T^k`
/// for a potential built over the same space.
pub fn big_quantum_product(
    basis: &CohBasis,
    phi: &SuperSeries,
    i: usize,
    j: usize,
) -> QuantumProduct {
    assert!(i < basis.rank() && j < basis.rank());
    let on_dual = (0..basis.rank())
        .map(|k| third_partial(phi, i, j, k))
        .collect();
    QuantumProduct { on_dual }
}

/// One term of a small quantum product: `coeff * q^power * T_basis`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallTerm {
    pub coeff: Rational,
    pub q_power: u32,
    pub basis_index: usize,
}

/// The small quantum product `T_i * T_j` from three-point invariants only.
///
/// Supported for the projective line and for surfaces (where it coincides
/// with the big product and the cup product).
pub fn small_quantum_product(
    basis: &CohBasis,
    i: usize,
    j: usize,
) -> Result<Vec<SmallTerm>, Error> {
    assert!(i < basis.rank() && j < basis.rank());
    let max_degree = match basis.target() {
        Target::P1 => 1,
        Target::Surface { .. } => 0,
        Target::P2 => {
            return Err(Error::UnsupportedQuery(
                "small quantum product is implemented for the line and surfaces".into(),
            ))
        }
    };
    let mut out = Vec::new();
    for m in 0..basis.rank() {
        for d in 0..=max_degree {
            let value = if d == 0 {
                // ordered triple intersection keeps the odd-class signs
                basis.triple_intersection(i, j, m)
            } else {
                evaluate_gw(&GwQuery::new(basis.target(), d, vec![i, j, m]))?
            };
            if value.is_zero() {
                continue;
            }
            let (basis_index, sign) = basis.raised(m);
            out.push(SmallTerm {
                coeff: value * rat(sign),
                q_power: d,
                basis_index,
            });
        }
    }
    out.sort_by_key(|t| (t.q_power, t.basis_index));
    Ok(out)
}

/// Renders a small product as text, e.g. `q*T0` or `T1`.
pub fn format_small_product(terms: &[SmallTerm]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, t) in terms.iter().enumerate() {
        let c = crate::scalar::format_rational(&t.coeff);
        let (sign, mag) = match c.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", c),
        };
        if pos == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mut body = String::new();
        if mag != "1" {
            body.push_str(&mag);
        }
        match t.q_power {
            0 => {}
            1 => {
                if !body.is_empty() {
                    body.push('*');
                }
                body.push('q');
            }
            p => {
                if !body.is_empty() {
                    body.push('*');
                }
                body.push_str(&format!("q^{p}"));
            }
        }
        if !body.is_empty() {
            body.push('*');
        }
        body.push_str(&format!("T{}", t.basis_index));
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gw::potential::potential;
    use crate::scalar::ratio;
    use crate::series::Truncation;

    #[test]
    fn small_product_table_for_the_line() {
        let basis = CohBasis::new(Target::P1);
        // T0 * T0 = T0
        let p = small_quantum_product(&basis, 0, 0).unwrap();
        assert_eq!(p, vec![SmallTerm { coeff: rat(1), q_power: 0, basis_index: 0 }]);
        // T0 * T1 = T1
        let p = small_quantum_product(&basis, 0, 1).unwrap();
        assert_eq!(p, vec![SmallTerm { coeff: rat(1), q_power: 0, basis_index: 1 }]);
        // T1 * T1 = q T0
        let p = small_quantum_product(&basis, 1, 1).unwrap();
        assert_eq!(p, vec![SmallTerm { coeff: rat(1), q_power: 1, basis_index: 0 }]);
        assert_eq!(format_small_product(&p), "q*T0");
    }

    #[test]
    fn small_product_table_for_surfaces() {
        for genus in 1..=3u32 {
            let basis = CohBasis::new(Target::Surface { genus });
            let pt = basis.point_index();
            // unit row
            for j in 0..basis.rank() {
                let p = small_quantum_product(&basis, 0, j).unwrap();
                assert_eq!(
                    p,
                    vec![SmallTerm { coeff: rat(1), q_power: 0, basis_index: j }],
                    "unit fails at j={j}"
                );
            }
            // odd squares vanish; point class kills everything of positive degree
            for i in 1..basis.rank() {
                if basis.degree(i) == 1 {
                    assert!(small_quantum_product(&basis, i, i).unwrap().is_empty());
                }
                assert!(small_quantum_product(&basis, i, pt).unwrap().is_empty());
                assert!(small_quantum_product(&basis, pt, i).unwrap().is_empty());
            }
            // a_j * b_j = [pt] = - b_j * a_j
            for m in 1..=genus as usize {
                let (a, b) = (2 * m - 1, 2 * m);
                let p = small_quantum_product(&basis, a, b).unwrap();
                assert_eq!(p, vec![SmallTerm { coeff: rat(1), q_power: 0, basis_index: pt }]);
                let p = small_quantum_product(&basis, b, a).unwrap();
                assert_eq!(p, vec![SmallTerm { coeff: rat(-1), q_power: 0, basis_index: pt }]);
                // mixed pairs vanish
                for other in 1..=genus as usize {
                    if other != m {
                        let q = small_quantum_product(&basis, a, 2 * other).unwrap();
                        assert!(q.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn plane_small_product_is_unsupported() {
        let basis = CohBasis::new(Target::P2);
        assert!(small_quantum_product(&basis, 1, 1).is_err());
    }

    #[test]
    fn big_product_on_the_line() {
        let basis = CohBasis::new(Target::P1);
        let phi = potential(Target::P1, 8, 2);
        // T1 * T1 = e^{t1} q T0: the T^1 coefficient is e^{t1} q
        let p = big_quantum_product(&basis, &phi, 1, 1);
        let expect = {
            let table = phi.table();
            let trunc = Truncation::new(5, 2);
            &SuperSeries::variable(table, trunc, 1).exp() * &SuperSeries::q_power(table, trunc, 1)
        };
        assert_eq!(p.dual_coefficient(1).terms().count(), expect.terms().count());
        for (m, c) in expect.terms() {
            assert_eq!(&p.dual_coefficient(1).coefficient(m), c);
        }
        // and the T^0 coefficient vanishes
        assert!(p.dual_coefficient(0).is_zero());
        // on the lowered basis: coefficient of T0 is e^{t1} q
        let t0_coeff = p.basis_coefficient(&basis, 0);
        assert_eq!(t0_coeff.coefficient_of(&[], 1), rat(1));
        assert_eq!(t0_coeff.coefficient_of(&[(1, 2)], 1), ratio(1, 2));
    }

    #[test]
    fn big_product_unit_rows() {
        // T0 * T_j = T_j exactly, across spaces and truncations
        let targets = [Target::P1, Target::P2, Target::Surface { genus: 2 }];
        for target in targets {
            let basis = CohBasis::new(target);
            for t_order in [3u32, 5, 8] {
                let phi = potential(target, t_order, 2);
                for j in 0..basis.rank() {
                    let p = big_quantum_product(&basis, &phi, 0, j);
                    for l in 0..basis.rank() {
                        let coeff = p.basis_coefficient(&basis, l);
                        if l == j {
                            assert_eq!(coeff.coefficient_of(&[], 0), rat(1), "{target} j={j}");
                            assert_eq!(coeff.num_terms(), 1);
                        } else {
                            assert!(coeff.is_zero(), "{target} j={j} l={l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn surface_big_product_signs() {
        for genus in 1..=3u32 {
            let basis = CohBasis::new(Target::Surface { genus });
            let phi = potential(Target::Surface { genus }, 6, 0);
            let pt = basis.point_index();
            for m in 1..=genus as usize {
                let (a, b) = (2 * m - 1, 2 * m);
                let ab = big_quantum_product(&basis, &phi, a, b);
                let ba = big_quantum_product(&basis, &phi, b, a);
                // a*b = [pt], b*a = -[pt]
                assert_eq!(ab.basis_coefficient(&basis, pt).coefficient_of(&[], 0), rat(1));
                assert_eq!(ba.basis_coefficient(&basis, pt).coefficient_of(&[], 0), rat(-1));
                for l in 0..basis.rank() {
                    if l != pt {
                        assert!(ab.basis_coefficient(&basis, l).is_zero());
                        assert!(ba.basis_coefficient(&basis, l).is_zero());
                    }
                }
                // delta constraint across different pairs
                for other in 1..=genus as usize {
                    if other != m {
                        let cross = big_quantum_product(&basis, &phi, a, 2 * other);
                        for l in 0..basis.rank() {
                            assert!(cross.basis_coefficient(&basis, l).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_and_big_products_agree_on_surfaces() {
        let basis = CohBasis::new(Target::Surface { genus: 2 });
        let phi = potential(Target::Surface { genus: 2 }, 6, 0);
        for i in 0..basis.rank() {
            for j in 0..basis.rank() {
                let small = small_quantum_product(&basis, i, j).unwrap();
                let big = big_quantum_product(&basis, &phi, i, j);
                for l in 0..basis.rank() {
                    let series = big.basis_coefficient(&basis, l);
                    let small_coeff: Rational = small
                        .iter()
                        .filter(|t| t.basis_index == l && t.q_power == 0)
                        .map(|t| t.coeff.clone())
                        .sum();
                    assert_eq!(series.coefficient_of(&[], 0), small_coeff, "i={i} j={j} l={l}");
                }
            }
        }
    }
}
