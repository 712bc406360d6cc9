//! Finite strict partial orders on `[0, N)` and their translation to and from colorings.

use crate::bits::BitSet;
use crate::coloring::{Color, PairColoring};
use crate::error::{Error, Result};

/// A strict partial order on `[0, N)`, stored as one row of strict upper bounds per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetView {
    above: Vec<BitSet>,
}

impl PosetView {
    /// Validate an explicit relation: `above[x]` holds every `y` with `x <_P y`.
    pub fn new(above: Vec<BitSet>) -> Result<Self> {
        let n = above.len();
        if let Some(row) = above.iter().find(|r| r.len() != n) {
            return Err(Error::input(format!("relation row of length {} in a universe of {n}", row.len())));
        }
        for x in 0..n {
            if above[x].contains(x) {
                return Err(Error::input(format!("relation is not irreflexive at {x}")));
            }
            for y in above[x].iter() {
                if above[y].contains(x) {
                    return Err(Error::input(format!("relation is not antisymmetric on ({x}, {y})")));
                }
                let mut missing = above[y].clone();
                missing.difference_with(&above[x]);
                if let Some(z) = missing.first() {
                    return Err(Error::input(format!(
                        "relation is not transitive: {x} < {y} < {z} but not {x} < {z}"
                    )));
                }
            }
        }
        Ok(PosetView { above })
    }

    /// The transitive closure of the given `x < y` pairs; fails on cycles.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut above = vec![BitSet::new(n); n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::input(format!("relation ({x}, {y}) outside universe [0, {n})")));
            }
            above[x].insert(y);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = above[k].clone();
            for row in above.iter_mut() {
                if row.contains(k) {
                    for z in row_k.iter() {
                        row.insert(z);
                    }
                }
            }
        }
        PosetView::new(above)
    }

    /// The empty order on `n` elements.
    pub fn antichain(n: usize) -> Self {
        PosetView { above: vec![BitSet::new(n); n] }
    }

    /// The order `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let above = (0..n)
            .map(|x| {
                let mut r = BitSet::full(n);
                r.retain_range(x + 1, n);
                r
            })
            .collect();
        PosetView { above }
    }

    pub fn universe_size(&self) -> usize {
        self.above.len()
    }

    #[inline]
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    pub fn above(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    /// Elements comparable to `x`, excluding `x`.
    pub fn comparable_row(&self, x: usize) -> BitSet {
        let mut row = self.above[x].clone();
        for y in 0..self.universe_size() {
            if self.above[y].contains(x) {
                row.insert(y);
            }
        }
        row
    }

    /// All relations `x <_P y`, ascending by `(x, y)`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, row) in self.above.iter().enumerate() {
            out.extend(row.iter().map(|y| (x, y)));
        }
        out
    }

    /// True iff every `x <_P y` has `x < y` as integers.
    pub fn is_index_aligned(&self) -> bool {
        self.above.iter().enumerate().all(|(x, row)| row.first().is_none_or(|y| y > x))
    }

    /// A linear extension: a permutation listing every element after all its predecessors.
    /// Ties are broken by smallest index, so aligned orders return the identity.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.universe_size();
        let mut below_count = vec![0usize; n];
        for row in &self.above {
            for y in row.iter() {
                below_count[y] += 1;
            }
        }
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..n).filter(|&x| below_count[x] == 0).map(std::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(std::cmp::Reverse(x)) = ready.pop() {
            order.push(x);
            for y in self.above[x].iter() {
                below_count[y] -= 1;
                if below_count[y] == 0 {
                    ready.push(std::cmp::Reverse(y));
                }
            }
        }
        order
    }

    /// The same order transported along `perm`: element `perm[i]` becomes `i`.
    pub fn relabel(&self, perm: &[usize]) -> PosetView {
        let n = self.universe_size();
        let mut pos = vec![0; n];
        for (i, &x) in perm.iter().enumerate() {
            pos[x] = i;
        }
        let above = perm
            .iter()
            .map(|&x| BitSet::from_iter_with_len(n, self.above[x].iter().map(|y| pos[y])))
            .collect();
        PosetView { above }
    }
}

/// The order `x <_P y` iff `x < y` and `f(x, y) = c`; requires `f` transitive for `c`.
pub fn poset_from_coloring(f: &PairColoring, c: Color) -> Result<PosetView> {
    f.require_transitive(c)?;
    let n = f.universe_size();
    let above = (0..n)
        .map(|x| {
            let mut row = f.neighbours(x, c);
            row.retain_range(x + 1, n);
            row
        })
        .collect();
    Ok(PosetView { above })
}

/// Color 0 on comparable pairs, 1 on incomparable pairs.
pub fn coloring_from_poset(p: &PosetView) -> PairColoring {
    PairColoring::from(p)
}

impl From<&PosetView> for PairColoring {
    fn from(p: &PosetView) -> Self {
        PairColoring::from_fn(p.universe_size(), |x, y| (!p.comparable(x, y)) as Color)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_from_coloring_examples() {
        let p = poset_from_coloring(&PairColoring::new(4), 0).unwrap();
        assert_eq!(p, PosetView::chain(4));

        let ones = PairColoring::from_fn(4, |_, _| 1);
        assert_eq!(poset_from_coloring(&ones, 0).unwrap(), PosetView::antichain(4));

        let parity = PairColoring::from_fn(6, |x, y| (x % 2 == y % 2) as Color);
        let p = poset_from_coloring(&parity, 1).unwrap();
        assert_eq!(p.relations(), vec![(0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5)]);

        let bad = PairColoring::from_one_edges(3, &[(0, 2)]).unwrap();
        assert_eq!(
            poset_from_coloring(&bad, 0),
            Err(Error::NotTransitive { color: 0, x: 0, y: 1, z: 2 })
        );
    }

    #[test]
    fn coloring_from_poset_examples() {
        assert_eq!(coloring_from_poset(&PosetView::chain(3)), PairColoring::new(3));
        assert_eq!(PairColoring::from(&PosetView::antichain(3)).one_edges().len(), 3);
        let p = PosetView::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(PairColoring::from(&p).one_edges(), vec![(0, 1)]);
    }

    #[test]
    fn construction_rejects_cycles_and_closes() {
        assert!(PosetView::from_relations(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
        let p = PosetView::from_relations(4, &[(3, 1), (1, 0)]).unwrap();
        assert!(p.less(3, 0));
        assert!(!p.is_index_aligned());
        let ext = p.linear_extension();
        assert_eq!(ext, vec![2, 3, 1, 0]);
        let q = p.relabel(&ext);
        assert!(q.is_index_aligned());
    }

    #[test]
    fn new_rejects_non_transitive_rows() {
        let mut rows = vec![BitSet::new(3); 3];
        rows[0].insert(1);
        rows[1].insert(2);
        assert!(PosetView::new(rows).is_err());
    }
}
