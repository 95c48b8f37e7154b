//! Schubert cell combinatorics: cell dimensions, Betti numbers, the
//! Grassmannian duality, flag variety statistics, and Euler characteristics
//! from cell counts.

use crate::localization::{fixed_points, FixedPoint};
use crate::partition::partitions_bounded;
use serde::Serialize;

/// Complex dimension of the Schubert cell flowing to a fixed point: the sum
/// of the subset indices minus `k(k+1)/2`.
pub fn cell_dimension(fp: &FixedPoint) -> u32 {
    let k = fp.k();
    let sum: u32 = fp.indices().iter().sum();
    sum - k * (k + 1) / 2
}

/// Even Betti numbers of the Grassmannian: entry `i` counts partitions of
/// `i` into at most `n-k` parts, each of size at most `k`. Odd Betti numbers
/// all vanish and are not listed.
pub fn betti(k: u32, n: u32) -> Vec<u64> {
    assert!(k >= 1 && k < n, "need 1 <= k < n");
    let dim = k * (n - k);
    (0..=dim)
        .map(|i| partitions_bounded(i, n - k, k).len() as u64)
        .collect()
}

/// Betti numbers recomputed as the histogram of cell dimensions over all
/// fixed points; the second, independent route.
pub fn betti_from_cells(k: u32, n: u32) -> Vec<u64> {
    assert!(k >= 1 && k < n, "need 1 <= k < n");
    let dim = k * (n - k);
    let mut counts = vec![0u64; dim as usize + 1];
    for fp in fixed_points(k, n) {
        counts[cell_dimension(&fp) as usize] += 1;
    }
    counts
}

/// The dimension-preserving bijection between cells of dual Grassmannians:
/// a subset maps to the reversed complement `{ n+1-j : j not in I }`.
pub fn dual_fixed_point(fp: &FixedPoint, n: u32) -> FixedPoint {
    let inside = fp.indices();
    let mut out: Vec<u32> = (1..=n)
        .filter(|j| !inside.contains(j))
        .map(|j| n + 1 - j)
        .collect();
    out.sort_unstable();
    FixedPoint::new(out)
}

/// Verifies the cell-count duality between the Grassmannian of `k`-planes
/// and of `(n-k)`-planes: equal Betti vectors, and the explicit complement
/// bijection preserves cell dimension.
pub fn duality_check(k: u32, n: u32) -> bool {
    if betti(k, n) != betti(n - k, n) {
        return false;
    }
    fixed_points(k, n)
        .iter()
        .all(|fp| cell_dimension(fp) == cell_dimension(&dual_fixed_point(fp, n)))
}

/// Whether cell counts are indexed by complex or real dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CellMode {
    /// Complex cells contribute in even real dimension: all signs +1.
    Complex,
    /// Real cells contribute with alternating signs.
    Real,
}

/// A finite cell decomposition: entry `r` counts the `r`-dimensional cells.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CellDecomposition {
    counts: Vec<u64>,
}

impl CellDecomposition {
    pub fn new(counts: Vec<u64>) -> Self {
        CellDecomposition { counts }
    }

    /// The Schubert cell decomposition of a Grassmannian.
    pub fn grassmannian(k: u32, n: u32) -> Self {
        CellDecomposition {
            counts: betti_from_cells(k, n),
        }
    }

    /// Morse cell counts of a closed orientable genus-g surface from the
    /// height function: one minimum, 2g saddles, one maximum.
    pub fn surface_morse(genus: u32) -> Self {
        CellDecomposition {
            counts: vec![1, 2 * genus as u64, 1],
        }
    }

    /// A finite graph as a 1-complex.
    pub fn graph(vertices: u64, edges: u64) -> Self {
        CellDecomposition {
            counts: vec![vertices, edges],
        }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Euler characteristic from a cell decomposition: the plain sum for complex
/// cells, the alternating sum for real cells.
pub fn euler_from_cells(d: &CellDecomposition, mode: CellMode) -> i64 {
    match mode {
        CellMode::Complex => d.total() as i64,
        CellMode::Real => d
            .counts()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i.is_multiple_of(2) { c as i64 } else { -(c as i64) })
            .sum(),
    }
}

/// Euler characteristic and complex dimension of the complete flag variety:
/// `n!` fixed flags, dimension `C(n,2)`.
pub fn flag_stats(n: u32) -> (u64, u64) {
    assert!((1..=20).contains(&n), "factorial fits u64 for n <= 20");
    let chi = (1..=n as u64).product();
    let dim = n as u64 * (n as u64 - 1) / 2;
    (chi, dim)
}
