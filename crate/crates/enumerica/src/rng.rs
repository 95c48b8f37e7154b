//! Small deterministic pseudorandom generator (splitmix64).
//!
//! The localization engine draws torus weights from this generator; the
//! reproducibility contract is that the same seed always yields the same
//! weight vectors, on every platform.

#[derive(Clone, Debug)]
pub struct SeededRng {
    state: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `lo..=hi`.
    pub fn next_in_range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    /// `count` pairwise distinct integers from `lo..=hi`.
    pub fn distinct_in_range(&mut self, count: usize, lo: i64, hi: i64) -> Vec<i64> {
        assert!((hi - lo) as u64 + 1 >= count as u64, "range too small");
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let v = self.next_in_range(lo, hi);
            if seen.insert(v) {
                out.push(v);
            }
        }
        out
    }
}
