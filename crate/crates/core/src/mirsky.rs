//! Antichain partitions: the on-line pair-of-ranks partition and the exact offline one.

use crate::error::Result;
use crate::partition::ColorPartition;
use crate::poset::PosetView;

/// `g0(x)`: one less than the length of the longest sequence ending at `x`
/// that increases both in the order and in index.
pub fn g0(p: &PosetView) -> Vec<usize> {
    monotone_ranks(p, |p, prev, x| p.less(prev, x))
}

/// `g1(x)`: as [`g0`] for sequences decreasing in the order and increasing in index.
pub fn g1(p: &PosetView) -> Vec<usize> {
    monotone_ranks(p, |p, prev, x| p.less(x, prev))
}

fn monotone_ranks(p: &PosetView, step: impl Fn(&PosetView, usize, usize) -> bool) -> Vec<usize> {
    let n = p.universe_size();
    let mut rank = vec![0; n];
    for x in 0..n {
        rank[x] = (0..x).filter(|&y| step(p, y, x)).map(|y| rank[y] + 1).max().unwrap_or(0);
    }
    rank
}

/// Partition by the pair `(g0(x), g1(x))`.
///
/// Two elements with the same pair are incomparable: if `x < y` (as indices)
/// and `x <_P y` then `g0(y) > g0(x)`, and if `y <_P x` then `g1(y) > g1(x)`.
/// Classes are numbered lexicographically by the pair, over used pairs only;
/// the declared bound is `h^2` for `h = max rank + 1`.
pub fn run_weak(p: &PosetView) -> ColorPartition {
    let (r0, r1) = (g0(p), g1(p));
    let mut pairs: Vec<(usize, usize)> = r0.iter().copied().zip(r1.iter().copied()).collect();
    pairs.sort_unstable();
    pairs.dedup();
    let class_of = r0
        .iter()
        .zip(&r1)
        .map(|(&a, &b)| pairs.binary_search(&(a, b)).expect("pair present"))
        .collect();
    let h = r0.iter().chain(&r1).map(|r| r + 1).max().unwrap_or(0);
    ColorPartition::new(class_of, (h * h).max(pairs.len())).expect("class indices below bound")
}

/// Partition by the length of the longest chain with `x` on top, minus one.
///
/// Ranks are computed along a linear extension, so they are exact for any
/// labelling; the number of classes equals the height.
pub fn run_exact(p: &PosetView) -> Result<ColorPartition> {
    let order = p.linear_extension();
    let n = p.universe_size();
    let mut rank = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        rank[x] = order[..i]
            .iter()
            .filter(|&&y| p.less(y, x))
            .map(|&y| rank[y] + 1)
            .max()
            .unwrap_or(0);
    }
    let h = rank.iter().map(|r| r + 1).max().unwrap_or(0);
    ColorPartition::new(rank, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee() -> PosetView {
        PosetView::from_relations(3, &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn rank_examples() {
        let c = PosetView::chain(3);
        assert_eq!(g0(&c), vec![0, 1, 2]);
        assert_eq!(g1(&c), vec![0, 0, 0]);
        let a = PosetView::antichain(4);
        assert_eq!(g0(&a), vec![0; 4]);
        assert_eq!(g1(&a), vec![0; 4]);
        assert_eq!(g0(&vee()), vec![0, 0, 1]);
        assert_eq!(g1(&vee()), vec![0, 0, 0]);
    }

    #[test]
    fn weak_examples() {
        assert_eq!(run_weak(&PosetView::antichain(5)).used_classes(), 1);
        let v = run_weak(&vee());
        assert_eq!(v.classes().into_iter().filter(|c| !c.is_empty()).collect::<Vec<_>>(), vec![vec![0, 1], vec![2]]);
        assert_eq!(v.class_bound(), 4);
        let c = run_weak(&PosetView::chain(3));
        assert_eq!(c.used_classes(), 3);
        assert_eq!(c.class_bound(), 9);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(run_exact(&PosetView::chain(3)).unwrap().used_classes(), 3);
        assert_eq!(run_exact(&PosetView::antichain(3)).unwrap().used_classes(), 1);
        let v = run_exact(&vee()).unwrap();
        assert_eq!(v.labels(), &[0, 0, 1]);
    }

    #[test]
    fn exact_handles_unaligned_labels() {
        // 3 < 1 < 0 with 2 isolated: the longest chain ends at 0.
        let p = PosetView::from_relations(4, &[(3, 1), (1, 0)]).unwrap();
        assert_eq!(run_exact(&p).unwrap().labels(), &[2, 1, 0, 0]);
    }

    #[test]
    fn g0_is_prefix_stable() {
        let p = PosetView::from_relations(6, &[(0, 3), (1, 3), (3, 5), (2, 4)]).unwrap();
        let full = g0(&p);
        for m in 0..6 {
            let rels: Vec<_> = p.relations().into_iter().filter(|&(x, y)| x < m && y < m).collect();
            let prefix = PosetView::from_relations(m, &rels).unwrap();
            assert_eq!(g0(&prefix), full[..m]);
        }
    }
}
