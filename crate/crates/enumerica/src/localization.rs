//! Torus localization on Grassmannians: fixed points, equivariant Euler
//! classes, and the localized integral counting lines on hypersurfaces.
//!
//! The localized sum is a weight-independent constant, so instead of
//! simplifying rational functions symbolically we evaluate the sum exactly at
//! several random distinct-integer weight vectors and insist all trials
//! agree and give an integer.

use crate::rng::SeededRng;
use crate::scalar::{as_integer, BigInt, Rational};
use crate::Error;
use num_traits::Zero;
use serde::Serialize;

/// A torus weight vector: pairwise distinct rational weights, one per
/// coordinate. Distinctness guarantees no vanishing denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Self {
        for i in 0..weights.len() {
            for j in (i + 1)..weights.len() {
                assert!(
                    weights[i] != weights[j],
                    "torus weights must be pairwise distinct"
                );
            }
        }
        WeightVector { weights }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| crate::scalar::rat(v)).collect())
    }

    /// Distinct random integer weights in `[-10^6, 10^6]`.
    pub fn random(n: usize, rng: &mut SeededRng) -> Self {
        Self::from_integers(&rng.distinct_in_range(n, -1_000_000, 1_000_000))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        assert!(!c.is_zero());
        WeightVector {
            weights: self.weights.iter().map(|w| w * c).collect(),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.weights.len());
        WeightVector {
            weights: perm.iter().map(|&i| self.weights[i].clone()).collect(),
        }
    }
}

/// A torus-fixed point of the Grassmannian: a sorted k-subset of `{1..n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct FixedPoint {
    indices: Vec<u32>,
}

impl FixedPoint {
    pub fn new(indices: Vec<u32>) -> Self {
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must be sorted and distinct");
        assert!(indices.iter().all(|&i| i >= 1), "indices are 1-based");
        FixedPoint { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn k(&self) -> u32 {
        self.indices.len() as u32
    }

    /// Equivariant Euler class of the tangent space at this fixed point:
    /// the product of `w_i - w_j` over `i` in the subset, `j` outside.
    pub fn tangent_euler(&self, w: &WeightVector, n: u32) -> Rational {
        assert!(w.len() as u32 >= n);
        assert!(self.indices.iter().all(|&i| i <= n));
        let inside: Vec<u32> = self.indices.clone();
        let mut acc = crate::scalar::rat(1);
        for &i in &inside {
            for j in 1..=n {
                if !inside.contains(&j) {
                    acc *= w.weight((i - 1) as usize) - w.weight((j - 1) as usize);
                }
            }
        }
        acc
    }

    /// Equivariant Euler class of the d-th symmetric power of the dual
    /// tautological bundle restricted to this fixed 2-plane:
    /// the product of `a*w_{i1} + (d-a)*w_{i2}` for `a = 0..d`.
    ///
    /// Panics unless the subset has size 2.
    pub fn sym_euler(&self, d: u32, w: &WeightVector) -> Rational {
        assert!(self.k() == 2, "symmetric-power Euler class implemented for 2-planes only");
        let w1 = w.weight((self.indices[0] - 1) as usize);
        let w2 = w.weight((self.indices[1] - 1) as usize);
        let mut acc = crate::scalar::rat(1);
        for a in 0..=d {
            acc *= w1 * crate::scalar::rat(a as i64) + w2 * crate::scalar::rat((d - a) as i64);
        }
        acc
    }
}

/// All torus-fixed points of the Grassmannian of `k`-planes in `n`-space:
/// the k-subsets of `{1..n}` in lexicographic order.
pub fn fixed_points(k: u32, n: u32) -> Vec<FixedPoint> {
    assert!(k >= 1 && k < n, "need 1 <= k < n");
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    subsets(1, k, n, &mut current, &mut out);
    out
}

fn subsets(start: u32, k: u32, n: u32, current: &mut Vec<u32>, out: &mut Vec<FixedPoint>) {
    if current.len() == k as usize {
        out.push(FixedPoint {
            indices: current.clone(),
        });
        return;
    }
    let remaining = k as usize - current.len();
    for i in start..=(n + 1 - remaining as u32) {
        current.push(i);
        subsets(i + 1, k, n, current, out);
        current.pop();
    }
}

/// The localized integral over the Grassmannian of 2-planes for one weight
/// vector: the sum over fixed points of the symmetric-power Euler class
/// divided by the tangent Euler class.
pub fn localized_line_sum(n: u32, d: u32, w: &WeightVector) -> Rational {
    let mut acc = Rational::zero();
    for fp in fixed_points(2, n) {
        acc += fp.sym_euler(d, w) / fp.tangent_euler(w, n);
    }
    acc
}

/// Number of lines on a generic degree `2n-5` hypersurface in projective
/// `(n-1)`-space by torus localization.
///
/// Evaluates the fixed-point sum at `trials` independent random weight
/// vectors; all trials must agree and the common value must be an integer
/// (both failures signal an implementation bug, since the sum is a
/// weight-independent constant).
pub fn lines_via_localization(n: u32, trials: u32, seed: u64) -> Result<BigInt, Error> {
    assert!(n >= 3, "need n >= 3");
    assert!(trials >= 2, "need at least two trials to cross-check");
    let d = 2 * n - 5;
    let mut rng = SeededRng::new(seed);
    let mut value: Option<Rational> = None;
    for trial in 0..trials {
        let w = WeightVector::random(n as usize, &mut rng);
        let s = localized_line_sum(n, d, &w);
        match &value {
            None => value = Some(s),
            Some(prev) => {
                if *prev != s {
                    return Err(Error::TrialDisagreement {
                        trial,
                        expected: crate::scalar::format_rational(prev),
                        got: crate::scalar::format_rational(&s),
                    });
                }
            }
        }
    }
    let v = value.expect("at least one trial");
    as_integer(&v).ok_or_else(|| Error::NonIntegerSum {
        value: crate::scalar::format_rational(&v),
    })
}

/// Spaces whose Euler characteristic is a torus-fixed-point count.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Space {
    /// Projective n-space: n+1 fixed points.
    Projective(u32),
    /// Grassmannian of k-planes in n-space: C(n,k) fixed points.
    Grassmannian(u32, u32),
    /// Complete flag variety in n-space: n! fixed points.
    Flag(u32),
    /// The 2-torus: a free circle action, no fixed points.
    Torus,
}

/// Euler characteristic as the number of torus-fixed points.
pub fn euler_char(space: Space) -> u64 {
    match space {
        Space::Projective(n) => n as u64 + 1,
        Space::Grassmannian(k, n) => {
            assert!(k >= 1 && k < n, "need 1 <= k < n");
            let b = crate::scalar::binomial(n as u64, k as u64);
            u64::try_from(&b).expect("fixed-point count fits u64")
        }
        Space::Flag(n) => {
            assert!((1..=20).contains(&n), "factorial fits u64 for n <= 20");
            (1..=n as u64).product()
        }
        Space::Torus => 0,
    }
}
