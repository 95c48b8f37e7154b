//! Splitting-principle Chern class calculus for rank-2 bundles, and tangent
//! bundle classes of projective spaces and their hypersurfaces.
//!
//! For a rank-2 bundle with Chern roots `a`, `b`, the d-th symmetric power has
//! roots `{ j*a + (d-j)*b : j = 0..d }`; symmetric polynomials in the roots
//! are rewritten in `c1 = a + b` and `c2 = a*b`.

use crate::scalar::{binomial, BigInt};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `c1` and `c2`, graded with `deg c1 = 1`, `deg c2 = 2`.
/// Keys are `(exponent of c1, exponent of c2)`; zero terms are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymPoly2 {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl SymPoly2 {
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, c1_exp: u32, c2_exp: u32) -> BigInt {
        self.terms
            .get(&(c1_exp, c2_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: (u32, u32), value: BigInt) {
        if !value.is_zero() {
            self.terms.insert(key, value);
        }
    }

    /// Evaluates at numeric `(c1, c2)`; the independent check against direct
    /// root products lives in the tests.
    pub fn eval(&self, c1: &crate::scalar::Rational, c2: &crate::scalar::Rational) -> crate::scalar::Rational {
        use crate::scalar::Rational;
        let mut acc = Rational::zero();
        for (&(e1, e2), coeff) in &self.terms {
            let mut term = Rational::from_integer(coeff.clone());
            for _ in 0..e1 {
                term *= c1;
            }
            for _ in 0..e2 {
                term *= c2;
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for SymPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(e1, e2), c) in self.terms.iter().rev() {
            let mut body = String::new();
            match e1 {
                0 => {}
                1 => body.push_str("c1"),
                _ => body.push_str(&format!("c1^{e1}")),
            }
            if e2 > 0 {
                if !body.is_empty() {
                    body.push('*');
                }
                if e2 == 1 {
                    body.push_str("c2");
                } else {
                    body.push_str(&format!("c2^{e2}"));
                }
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", cs),
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

// Bivariate polynomials in the Chern roots, keyed by (alpha_exp, beta_exp).
type RootPoly = BTreeMap<(u32, u32), BigInt>;

fn root_poly_mul_linear(p: &RootPoly, a_coeff: u64, b_coeff: u64) -> RootPoly {
    // multiply by (a_coeff * alpha + b_coeff * beta)
    let mut out = RootPoly::new();
    for (&(i, j), c) in p {
        if a_coeff > 0 {
            *out.entry((i + 1, j)).or_insert_with(BigInt::zero) += c * a_coeff;
        }
        if b_coeff > 0 {
            *out.entry((i, j + 1)).or_insert_with(BigInt::zero) += c * b_coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn root_poly_add(p: &mut RootPoly, other: &RootPoly, scale: &BigInt) {
    for (&k, c) in other {
        let entry = p.entry(k).or_insert_with(BigInt::zero);
        *entry += c * scale;
        if entry.is_zero() {
            p.remove(&k);
        }
    }
}

// e1^m * e2^n expanded in the roots: (a+b)^m * (ab)^n.
fn elementary_power(m: u32, n: u32) -> RootPoly {
    let mut out = RootPoly::new();
    for k in 0..=m {
        out.insert((k + n, m - k + n), binomial(m as u64, k as u64));
    }
    out
}

/// Rewrites a symmetric root polynomial in terms of `c1 = a+b`, `c2 = ab` by
/// repeatedly eliminating the lexicographically leading monomial. Any
/// asymmetry is an internal error.
fn symmetrize(mut p: RootPoly) -> SymPoly2 {
    let mut out = SymPoly2::default();
    while let Some((&(i, j), _)) = p.iter().next_back() {
        assert!(
            i >= j,
            "leading monomial a^{i} b^{j} is not dominant; input was not symmetric"
        );
        let coeff = p[&(i, j)].clone();
        let (m, n) = (i - j, j);
        let image = elementary_power(m, n);
        root_poly_add(&mut p, &image, &(-coeff.clone()));
        out.insert((m, n), coeff);
    }
    // Re-sorting: elimination emits terms in decreasing lex order already
    // canonical in the BTreeMap.
    out
}

/// The `i`-th Chern class of `Sym^d(E)` for a rank-2 bundle `E`, expressed in
/// `c1(E)`, `c2(E)`.
///
/// Panics unless `d >= 1` and `0 <= i <= d+1` (the rank of `Sym^d`).
pub fn sym_chern(d: u32, i: u32) -> SymPoly2 {
    assert!(d >= 1, "symmetric power degree must be at least 1");
    assert!(i <= d + 1, "Chern index {i} exceeds rank {}", d + 1);
    // degree-i part of prod_{j=0..d} (1 + j*a + (d-j)*b): iterate the product
    // keeping only terms of root-degree <= i.
    let mut layers: Vec<RootPoly> = vec![RootPoly::new(); (i + 1) as usize];
    layers[0].insert((0, 0), BigInt::one());
    for j in 0..=d {
        for deg in (1..=i).rev() {
            let promoted = root_poly_mul_linear(&layers[(deg - 1) as usize], j as u64, (d - j) as u64);
            let target = &mut layers[deg as usize];
            root_poly_add(target, &promoted, &BigInt::one());
        }
    }
    symmetrize(layers[i as usize].clone())
}

/// Truncated polynomial in the hyperplane class `h`; entry `k` is the
/// coefficient of `h^k`, and the length is `dim + 1` for the underlying space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HPoly {
    coeffs: Vec<BigInt>,
}

impl HPoly {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Product truncated to `len` coefficients.
    pub fn mul_truncated(&self, other: &HPoly, len: usize) -> HPoly {
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < len {
                    coeffs[i + j] += a * b;
                }
            }
        }
        HPoly { coeffs }
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "h")?,
                1 => write!(f, "{mag}*h")?,
                _ if mag == "1" => write!(f, "h^{k}")?,
                _ => write!(f, "{mag}*h^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Total Chern class of the tangent bundle of projective `r`-space,
/// `(1+h)^(r+1)` truncated at `h^r`.
pub fn projective_tangent_chern(r: u32) -> HPoly {
    assert!(r >= 1);
    let coeffs = (0..=r)
        .map(|k| binomial(r as u64 + 1, k as u64))
        .collect();
    HPoly { coeffs }
}

/// Total Chern class of the tangent bundle of a smooth degree-`d`
/// hypersurface in projective `r`-space: `(1+h)^(r+1) / (1+dh)` truncated at
/// the hypersurface dimension `r-1`.
///
/// The `h^1` coefficient vanishes exactly when `d = r+1`.
pub fn hypersurface_tangent_chern(r: u32, d: u32) -> HPoly {
    assert!(r >= 2, "need an ambient projective space of dimension >= 2");
    assert!(d >= 1, "hypersurface degree must be at least 1");
    let len = r as usize; // dim Q = r-1, so powers h^0 .. h^{r-1}
    let numerator = projective_tangent_chern(r);
    // 1/(1+dh) = sum (-d)^k h^k
    let mut inv = Vec::with_capacity(len);
    let mut acc = BigInt::one();
    for _ in 0..len {
        inv.push(acc.clone());
        acc *= -BigInt::from(d);
    }
    numerator.mul_truncated(&HPoly { coeffs: inv }, len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, Rational};
    use proptest::prelude::*;

    #[test]
    fn top_class_of_cubic_symmetric_power() {
        // c4(Sym^3 E) = 18 c1^2 c2 + 9 c2^2
        let p = sym_chern(3, 4);
        assert_eq!(p.coefficient(2, 1), BigInt::from(18));
        assert_eq!(p.coefficient(0, 2), BigInt::from(9));
        assert_eq!(p.terms().count(), 2);
        assert_eq!(p.to_string(), "18*c1^2*c2 + 9*c2^2");
    }

    #[test]
    fn first_symmetric_power_is_identity() {
        assert_eq!(sym_chern(1, 1).to_string(), "c1");
        assert_eq!(sym_chern(1, 2).to_string(), "c2");
    }

    #[test]
    fn first_class_of_cubic_symmetric_power() {
        // roots 3a, 2a+b, a+2b, 3b sum to 6(a+b)
        let p = sym_chern(3, 1);
        assert_eq!(p.coefficient(1, 0), BigInt::from(6));
        assert_eq!(p.terms().count(), 1);
    }

    #[test]
    fn zeroth_class_is_one() {
        let p = sym_chern(5, 0);
        assert_eq!(p.coefficient(0, 0), BigInt::one());
        assert_eq!(p.terms().count(), 1);
    }

    #[test]
    fn quintic_threefold_tangent_class() {
        let c = hypersurface_tangent_chern(4, 5);
        let expect: Vec<BigInt> = [1, 0, 10, -40].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(c.coeffs(), &expect[..]);
        assert_eq!(c.to_string(), "1 + 10*h^2 - 40*h^3");
    }

    #[test]
    fn projective_space_tangent_classes() {
        assert_eq!(
            projective_tangent_chern(1).coeffs(),
            &[BigInt::from(1), BigInt::from(2)][..]
        );
        assert_eq!(
            projective_tangent_chern(2).coeffs(),
            &[BigInt::from(1), BigInt::from(3), BigInt::from(3)][..]
        );
        assert_eq!(
            projective_tangent_chern(4).coeffs(),
            &[1, 5, 10, 10, 5].map(BigInt::from)[..]
        );
    }

    #[test]
    fn calabi_yau_degree_kills_first_class() {
        for r in 2..=8 {
            for d in 1..=10 {
                let c = hypersurface_tangent_chern(r, d);
                let c1_zero = c.coefficient(1).is_zero();
                assert_eq!(c1_zero, d == r + 1, "r={r} d={d}");
            }
        }
    }

    #[test]
    fn whitney_product_recovers_ambient_class() {
        for r in 2..=8u32 {
            for d in 1..=9u32 {
                let q = hypersurface_tangent_chern(r, d);
                let line = HPoly {
                    coeffs: vec![BigInt::one(), BigInt::from(d)],
                };
                let lhs = q.mul_truncated(&line, r as usize);
                let ambient = projective_tangent_chern(r);
                let rhs = HPoly {
                    coeffs: ambient.coeffs()[..r as usize].to_vec(),
                };
                assert_eq!(lhs, rhs, "r={r} d={d}");
            }
        }
    }

    // Direct product over the roots, the independent route for sym_chern.
    fn eval_roots(d: u32, i: u32, alpha: &Rational, beta: &Rational) -> Rational {
        // elementary symmetric e_i of { j*alpha + (d-j)*beta }
        let roots: Vec<Rational> = (0..=d)
            .map(|j| alpha * rat(j as i64) + beta * rat((d - j) as i64))
            .collect();
        let mut elem = vec![Rational::zero(); (i + 1) as usize];
        elem[0] = rat(1);
        for r in &roots {
            for k in (1..=i as usize).rev() {
                let add = elem[k - 1].clone() * r;
                elem[k] += add;
            }
        }
        elem[i as usize].clone()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn splitting_matches_root_products(
            d in 1u32..=7,
            num_a in -9i64..=9, num_b in -9i64..=9,
            den_a in 1i64..=4, den_b in 1i64..=4,
        ) {
            let alpha = ratio(num_a, den_a);
            let beta = ratio(num_b, den_b);
            let c1 = &alpha + &beta;
            let c2 = &alpha * &beta;
            for i in 0..=d + 1 {
                let via_poly = sym_chern(d, i).eval(&c1, &c2);
                let via_roots = eval_roots(d, i, &alpha, &beta);
                prop_assert_eq!(via_poly, via_roots);
            }
        }
    }

    #[test]
    fn odd_degree_top_class_divisibility() {
        // at (c1, c2) = (0, x), the top class of Sym^d for odd d is divisible
        // by x^ceil((d+1)/2): roots pair up as j*a+(d-j)*b <-> (d-j)*a+j*b.
        for d in [1u32, 3, 5, 7] {
            let p = sym_chern(d, d + 1);
            let min_c2 = p
                .terms()
                .filter(|(&(e1, _), _)| e1 == 0)
                .map(|(&(_, e2), _)| e2)
                .min();
            let need = (d + 2) / 2;
            if let Some(min_c2) = min_c2 {
                assert!(min_c2 >= need, "d={d}: c2 exponent {min_c2} < {need}");
            }
        }
    }
}
