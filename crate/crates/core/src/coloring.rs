//! Symmetric 2-colorings of the unordered pairs of `[0, N)`.

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A color of a pair: 0 or 1.
pub type Color = u8;

/// A 2-coloring of `[N]^2`.
///
/// Stored as one adjacency row per element holding the color-1 neighbours, so
/// `color(x, y) == color(y, x)` by construction and every unlisted pair is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairColoring {
    ones: Vec<BitSet>,
}

impl PairColoring {
    /// The constant-0 coloring on `n` elements.
    pub fn new(n: usize) -> Self {
        PairColoring { ones: vec![BitSet::new(n); n] }
    }

    /// Build from a function evaluated once on every pair `x < y`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let mut c = PairColoring::new(n);
        for y in 0..n {
            for x in 0..y {
                if f(x, y) != 0 {
                    c.set(x, y, 1);
                }
            }
        }
        c
    }

    /// Build from the list of pairs colored 1.
    pub fn from_one_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut c = PairColoring::new(n);
        for &(x, y) in edges {
            if x == y || x >= n || y >= n {
                return Err(Error::input(format!("pair ({x}, {y}) is not a pair of [0, {n})")));
            }
            c.set(x, y, 1);
        }
        Ok(c)
    }

    pub fn universe_size(&self) -> usize {
        self.ones.len()
    }

    pub fn num_pairs(&self) -> usize {
        let n = self.universe_size();
        n * n.saturating_sub(1) / 2
    }

    #[inline]
    pub fn color(&self, x: usize, y: usize) -> Color {
        debug_assert!(x != y, "pairs need two distinct elements");
        self.ones[x].contains(y) as Color
    }

    pub fn set(&mut self, x: usize, y: usize, c: Color) {
        assert!(x != y, "pairs need two distinct elements");
        if c == 0 {
            self.ones[x].remove(y);
            self.ones[y].remove(x);
        } else {
            self.ones[x].insert(y);
            self.ones[y].insert(x);
        }
    }

    /// Elements joined to `x` by color `c` (never contains `x`).
    pub fn neighbours(&self, x: usize, c: Color) -> BitSet {
        if c == 1 {
            self.ones[x].clone()
        } else {
            let mut s = self.ones[x].complement();
            s.remove(x);
            s
        }
    }

    /// All 1-colored pairs `(x, y)` with `x < y`, in ascending order.
    pub fn one_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, row) in self.ones.iter().enumerate() {
            out.extend(row.iter().filter(|&y| y > x).map(|y| (x, y)));
        }
        out
    }

    fn check_elements(&self, set: &[usize]) -> Result<()> {
        let n = self.universe_size();
        match set.iter().find(|&&x| x >= n) {
            Some(x) => Err(Error::input(format!("element {x} outside universe [0, {n})"))),
            None => Ok(()),
        }
    }

    /// True iff every pair of distinct elements of `set` has color `c`.
    /// Sets with at most one element are homogeneous for both colors.
    pub fn is_homogeneous(&self, set: &[usize], c: Color) -> Result<bool> {
        self.check_elements(set)?;
        Ok(self.homogeneity_violation(set, c).is_none())
    }

    /// First pair of `set` (in iteration order) whose color is not `c`.
    pub fn homogeneity_violation(&self, set: &[usize], c: Color) -> Option<(usize, usize)> {
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                if x != y && self.color(x, y) != c {
                    return Some((x.min(y), x.max(y)));
                }
            }
        }
        None
    }

    /// The lexicographically least triple `x < y < z` with
    /// `f(x,y) = f(y,z) = c != f(x,z)`, if one exists.
    pub fn transitivity_witness(&self, c: Color) -> Option<(usize, usize, usize)> {
        let n = self.universe_size();
        for x in 0..n {
            let row_x = self.neighbours(x, c);
            for y in row_x.iter().filter(|&y| y > x) {
                let mut bad = self.neighbours(y, c);
                bad.retain_range(y + 1, n);
                bad.difference_with(&row_x);
                if let Some(z) = bad.first() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// True iff for all `x < y < z`, `f(x,y) = f(y,z) = c` implies `f(x,z) = c`.
    pub fn is_transitive(&self, c: Color) -> bool {
        self.transitivity_witness(c).is_none()
    }

    pub fn require_transitive(&self, c: Color) -> Result<()> {
        match self.transitivity_witness(c) {
            Some((x, y, z)) => Err(Error::NotTransitive { color: c, x, y, z }),
            None => Ok(()),
        }
    }

    /// The coloring `h(a, b) = f(X[a], X[b])` for an index-increasing sequence `X`.
    pub fn reindex(&self, seq: &[usize]) -> Result<PairColoring> {
        self.check_elements(seq)?;
        if seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("reindexing sequence must be strictly increasing"));
        }
        Ok(PairColoring::from_fn(seq.len(), |a, b| self.color(seq[a], seq[b])))
    }
}

/// The pair coloring `f(x, y) = 0` iff `g(x) = g(y)` for a coloring `g` of the universe.
///
/// No set of size `k + 1` is 1-homogeneous when `g` takes `k` values, and the
/// 0-homogeneous sets are exactly the `g`-monochromatic ones.
pub fn hirst_reduction(g: &[usize]) -> PairColoring {
    PairColoring::from_fn(g.len(), |x, y| (g[x] != g[y]) as Color)
}
