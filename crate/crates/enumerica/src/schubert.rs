//! The Chow ring of a Grassmannian on its Schubert-class basis.
//!
//! Classes are integer combinations of partitions fitting the `k x (n-k)`
//! box; multiplication is the Littlewood-Richardson rule, computed by direct
//! enumeration of skew tableaux, with out-of-box partitions discarded (the
//! ring quotient). The count of lines on a hypersurface comes from pushing
//! the top Chern class of a symmetric power of the dual tautological bundle
//! through this ring.

use crate::chern::sym_chern;
use crate::partition::{partitions_bounded, Partition};
use crate::scalar::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// The ambient Grassmannian of `k`-planes in `n`-space.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GrassContext {
    pub k: u32,
    pub n: u32,
}

impl GrassContext {
    pub fn new(k: u32, n: u32) -> Self {
        assert!(k >= 1 && k < n, "need 1 <= k < n, got k={k}, n={n}");
        GrassContext { k, n }
    }

    /// Rows of the partition box.
    pub fn max_parts(&self) -> u32 {
        self.k
    }

    /// Columns of the partition box.
    pub fn max_size(&self) -> u32 {
        self.n - self.k
    }

    pub fn dimension(&self) -> u32 {
        self.k * (self.n - self.k)
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.fits_box(self.max_parts(), self.max_size())
    }

    /// The full-box partition, Poincare dual to the point class.
    pub fn top_partition(&self) -> Partition {
        Partition::new(vec![self.max_size(); self.max_parts() as usize])
    }

    /// All box partitions of the given weight.
    pub fn partitions_of_weight(&self, w: u32) -> Vec<Partition> {
        partitions_bounded(w, self.max_parts(), self.max_size())
    }

    /// Littlewood-Richardson coefficient for box partitions.
    ///
    /// Panics if any partition leaves the box; returns 0 when the weights do
    /// not add up or the shapes are incompatible.
    pub fn lr_coefficient(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        assert!(
            self.fits(lam) && self.fits(mu) && self.fits(nu),
            "partition outside the {}x{} box",
            self.max_parts(),
            self.max_size()
        );
        lr_coefficient(lam, mu, nu)
    }
}

/// Littlewood-Richardson coefficient `c^nu_{lam,mu}`: the number of
/// semistandard skew tableaux of shape `nu/lam` and content `mu` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lam.weight() + mu.weight() || !nu.contains(lam) {
        return 0;
    }
    if mu.is_empty() {
        return if nu == lam { 1 } else { 0 };
    }
    // Cells of nu/lam in reverse reading order: rows top to bottom, each row
    // right to left. Filling in this order keeps the lattice prefix check
    // incremental.
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for row in 0..nu.len() {
        let lo = lam.part(row);
        let hi = nu.part(row);
        for col in (lo..hi).rev() {
            cells.push((row, col));
        }
    }
    let mut grid: BTreeMap<(usize, u32), u32> = BTreeMap::new();
    let mut counts = vec![0u32; mu.len()];
    let mut total = 0u64;
    search(&mut grid, &mut counts, &cells, 0, lam, mu, &mut total);
    total
}

fn search(
    grid: &mut BTreeMap<(usize, u32), u32>,
    counts: &mut Vec<u32>,
    cells: &[(usize, u32)],
    pos: usize,
    lam: &Partition,
    mu: &Partition,
    total: &mut u64,
) {
    if pos == cells.len() {
        *total += 1;
        return;
    }
    let (row, col) = cells[pos];
    // Row entries weakly increase left to right; the right neighbour is
    // already placed in this fill order.
    let right_cap = grid.get(&(row, col + 1)).copied().unwrap_or(u32::MAX);
    // Column entries strictly increase top to bottom.
    let above_floor = if row > 0 && col >= lam.part(row - 1) {
        grid.get(&(row - 1, col)).copied().map_or(1, |v| v + 1)
    } else {
        1
    };
    for value in above_floor..=right_cap.min(mu.len() as u32) {
        let idx = (value - 1) as usize;
        if counts[idx] + 1 > mu.part(idx) {
            continue;
        }
        // Lattice word: after each prefix, value v may not outnumber v-1.
        if value > 1 && counts[idx] + 1 > counts[idx - 1] {
            continue;
        }
        counts[idx] += 1;
        grid.insert((row, col), value);
        search(grid, counts, cells, pos + 1, lam, mu, total);
        grid.remove(&(row, col));
        counts[idx] -= 1;
    }
}

/// An integer combination of Schubert classes in a fixed Grassmannian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChowClass {
    context: GrassContext,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowClass {
    pub fn zero(context: GrassContext) -> Self {
        ChowClass {
            context,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class (empty partition).
    pub fn one(context: GrassContext) -> Self {
        Self::from_partition(context, Partition::empty())
    }

    pub fn from_partition(context: GrassContext, p: Partition) -> Self {
        Self::from_terms(context, [(p, BigInt::one())])
    }

    pub fn from_terms(
        context: GrassContext,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Self {
        let mut out = Self::zero(context);
        for (p, c) in terms {
            assert!(context.fits(&p), "partition {p} outside the box");
            out.accumulate(p, c);
        }
        out
    }

    pub fn context(&self) -> GrassContext {
        self.context
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    fn accumulate(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ChowClass) -> ChowClass {
        assert_eq!(self.context, other.context, "Grassmannian context mismatch");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.accumulate(p.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigInt) -> ChowClass {
        if c.is_zero() {
            return ChowClass::zero(self.context);
        }
        ChowClass {
            context: self.context,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Product in the Chow ring; partitions leaving the box are dropped.
    pub fn mul(&self, other: &ChowClass) -> ChowClass {
        assert_eq!(self.context, other.context, "Grassmannian context mismatch");
        let ctx = self.context;
        let mut out = ChowClass::zero(ctx);
        for (lam, a) in &self.terms {
            for (mu, b) in &other.terms {
                let w = lam.weight() + mu.weight();
                if w > ctx.dimension() {
                    continue;
                }
                let coeff = a * b;
                for nu in ctx.partitions_of_weight(w) {
                    let c = lr_coefficient(lam, mu, &nu);
                    if c > 0 {
                        out.accumulate(nu, &coeff * BigInt::from(c));
                    }
                }
            }
        }
        out
    }

    /// The degree map: coefficient of the full-box class.
    ///
    /// Panics unless the class is homogeneous of top weight (or zero).
    pub fn degree(&self) -> BigInt {
        let top = self.context.dimension();
        assert!(
            self.terms.keys().all(|p| p.weight() == top),
            "degree is defined on top-weight classes only"
        );
        self.coefficient(&self.context.top_partition())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
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
            let body = if p.is_empty() {
                "1".to_string()
            } else {
                format!("s{p}")
            };
            if mag == "1" && !p.is_empty() {
                write!(f, "{body}")?;
            } else if p.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

/// Number of lines on a generic degree `2n-5` hypersurface in projective
/// `(n-1)`-space, by Schubert calculus on the Grassmannian of 2-planes:
/// the forced degree makes the symmetric power's rank match the
/// Grassmannian dimension, so its top Chern class is a point count.
pub fn lines_on_hypersurface(n: u32) -> BigInt {
    assert!(n >= 3, "need n >= 3");
    let d = 2 * n - 5;
    let top = 2 * n - 4; // rank Sym^d = d+1 = dim Gr(2,n)
    let ctx = GrassContext::new(2, n);
    let sigma1 = ChowClass::from_partition(ctx, Partition::new(vec![1]));
    let sigma11 = ChowClass::from_partition(ctx, Partition::new(vec![1, 1]));
    let class = sym_chern(d, top);

    let mut total = ChowClass::zero(ctx);
    for (&(e1, e2), coeff) in class.terms() {
        let mut term = ChowClass::one(ctx);
        for _ in 0..e1 {
            term = term.mul(&sigma1);
        }
        for _ in 0..e2 {
            term = term.mul(&sigma11);
        }
        total = total.add(&term.scaled(coeff));
    }
    total.degree()
}
