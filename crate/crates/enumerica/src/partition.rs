//! Integer partitions: the index set for Schubert classes and Betti counts.

use serde::Serialize;
use std::fmt;

/// A partition: weakly decreasing positive integers. Trailing zeros are
/// stripped at construction, so the empty partition is `[]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence; zeros are dropped.
    ///
    /// Panics if the sequence increases anywhere.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when the partition has at most `max_parts` parts, each at most `max_size`.
    pub fn fits_box(&self, max_parts: u32, max_size: u32) -> bool {
        self.parts.len() as u32 <= max_parts && self.parts.first().map_or(0, |&p| p) <= max_size
    }

    /// The conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Complement inside a `max_parts x max_size` box, used for Poincare duality
    /// of the Schubert basis.
    pub fn box_complement(&self, max_parts: u32, max_size: u32) -> Partition {
        assert!(self.fits_box(max_parts, max_size));
        let parts: Vec<u32> = (0..max_parts)
            .rev()
            .map(|i| max_size - self.part(i as usize))
            .collect();
        Partition::new(parts)
    }

    /// True when `self` contains `other` cell-wise.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `weight` with at most `max_parts` parts, each of size at
/// most `max_size`, listed once each (descending lexicographic order).
pub fn partitions_bounded(weight: u32, max_parts: u32, max_size: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(weight, max_parts, max_size, &mut current, &mut out);
    out
}

fn fill(remaining: u32, slots: u32, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = cap.min(remaining);
    // Each subsequent part may not exceed the one just placed.
    for p in (1..=hi).rev() {
        current.push(p);
        fill(remaining - p, slots - 1, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bounded_partitions_match_known_counts() {
        // weight 2 in a 2x2 box: {2}, {1,1}
        let ps = partitions_bounded(2, 2, 2);
        assert_eq!(ps.len(), 2);
        assert!(ps.contains(&Partition::new(vec![2])));
        assert!(ps.contains(&Partition::new(vec![1, 1])));

        // weight 0: exactly the empty partition
        assert_eq!(partitions_bounded(0, 3, 3), vec![Partition::empty()]);

        // weight 4 in a 2x2 box: only {2,2}
        assert_eq!(partitions_bounded(4, 2, 2), vec![Partition::new(vec![2, 2])]);

        // too heavy for the box
        assert!(partitions_bounded(5, 2, 2).is_empty());
    }

    #[test]
    fn listed_once_each() {
        let ps = partitions_bounded(6, 3, 4);
        let mut sorted = ps.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ps.len());
        for p in &ps {
            assert_eq!(p.weight(), 6);
            assert!(p.fits_box(3, 4));
        }
    }

    #[test]
    fn conjugate_and_complement() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]));
        assert_eq!(p.conjugate().conjugate(), p);

        // complement of (2) in the 2x2 box is (2): cells (2,0) -> (2-0, 2-2) reversed
        let c = Partition::new(vec![2]).box_complement(2, 2);
        assert_eq!(c, Partition::new(vec![2]));
        let c = Partition::new(vec![1]).box_complement(2, 2);
        assert_eq!(c, Partition::new(vec![2, 1]));
    }

    #[test]
    #[should_panic]
    fn increasing_sequence_rejected() {
        Partition::new(vec![1, 2]);
    }

    proptest! {
        // Conjugation swaps the box bounds, so the two counts agree.
        #[test]
        fn conjugation_symmetry(w in 0u32..=20, a in 1u32..=6, b in 1u32..=6) {
            let lhs = partitions_bounded(w, a, b);
            let rhs = partitions_bounded(w, b, a);
            prop_assert_eq!(lhs.len(), rhs.len());
            // and the conjugation bijection is explicit
            let mut conj: Vec<_> = lhs.iter().map(|p| p.conjugate()).collect();
            conj.sort();
            let mut rhs_sorted = rhs.clone();
            rhs_sorted.sort();
            prop_assert_eq!(conj, rhs_sorted);
        }

        #[test]
        fn weights_and_bounds_hold(w in 0u32..=18, a in 1u32..=5, b in 1u32..=5) {
            for p in partitions_bounded(w, a, b) {
                prop_assert_eq!(p.weight(), w);
                prop_assert!(p.fits_box(a, b));
            }
        }
    }
}
