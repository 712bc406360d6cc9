//! Minimum chain cover through maximum matching in the split bipartite graph.
//!
//! Left copy `x` is joined to right copy `y` whenever `x <_P y`. A matching of
//! size `m` links elements into `N - m` chains; König's theorem turns the same
//! matching into an antichain of size `N - m`, which certifies optimality.

use crate::poset::PosetView;

pub(crate) struct ChainCover {
    /// `chain_of[x]`: index of the chain containing `x`, chains numbered by their least element.
    pub chain_of: Vec<usize>,
    pub chains: usize,
    /// An antichain of the same size as the cover.
    pub antichain: Vec<usize>,
}

/// Kuhn's augmenting-path matching; `match_right[y]` is the left partner of `y`.
fn max_matching(p: &PosetView) -> Vec<Option<usize>> {
    let n = p.universe_size();
    let mut match_right: Vec<Option<usize>> = vec![None; n];

    fn augment(p: &PosetView, x: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for y in p.above(x).iter() {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if match_right[y].is_none_or(|x2| augment(p, x2, seen, match_right)) {
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }

    for x in 0..n {
        let mut seen = vec![false; n];
        augment(p, x, &mut seen, &mut match_right);
    }
    match_right
}

pub(crate) fn chain_cover(p: &PosetView) -> ChainCover {
    let n = p.universe_size();
    let match_right = max_matching(p);
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    for (y, x) in match_right.iter().enumerate() {
        if let Some(x) = *x {
            match_left[x] = Some(y);
        }
    }

    // Chains start at elements that are nobody's successor.
    let mut chain_id = vec![usize::MAX; n];
    let heads: Vec<usize> = (0..n).filter(|&y| match_right[y].is_none()).collect();
    for (id, &head) in heads.iter().enumerate() {
        let mut cur = Some(head);
        while let Some(x) = cur {
            chain_id[x] = id;
            cur = match_left[x];
        }
    }
    // Renumber by least element.
    let mut first = vec![usize::MAX; heads.len()];
    for x in 0..n {
        first[chain_id[x]] = first[chain_id[x]].min(x);
    }
    let mut by_first: Vec<usize> = (0..heads.len()).collect();
    by_first.sort_by_key(|&id| first[id]);
    let mut rank = vec![0; heads.len()];
    for (r, &id) in by_first.iter().enumerate() {
        rank[id] = r;
    }
    let chain_of: Vec<usize> = chain_id.iter().map(|&id| rank[id]).collect();

    // König: vertices reachable from unmatched left vertices by alternating paths.
    let mut left_seen = vec![false; n];
    let mut right_seen = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&x| match_left[x].is_none()).collect();
    for &x in &stack {
        left_seen[x] = true;
    }
    while let Some(x) = stack.pop() {
        for y in p.above(x).iter() {
            if right_seen[y] || match_left[x] == Some(y) {
                continue;
            }
            right_seen[y] = true;
            if let Some(x2) = match_right[y] {
                if !left_seen[x2] {
                    left_seen[x2] = true;
                    stack.push(x2);
                }
            }
        }
    }
    // Vertex cover = (left not reached) ∪ (right reached); the antichain avoids it on both sides.
    let antichain: Vec<usize> = (0..n).filter(|&x| left_seen[x] && !right_seen[x]).collect();

    ChainCover { chains: by_first.len(), chain_of, antichain }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_and_antichain_agree() {
        let p = PosetView::from_relations(6, &[(0, 2), (2, 4), (1, 3), (3, 5), (0, 5)]).unwrap();
        let c = chain_cover(&p);
        assert_eq!(c.chains, 2);
        assert_eq!(c.antichain.len(), 2);
        for (i, &a) in c.antichain.iter().enumerate() {
            for &b in &c.antichain[i + 1..] {
                assert!(!p.comparable(a, b));
            }
        }
        assert_eq!(c.chain_of, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn extremes() {
        let c = chain_cover(&PosetView::chain(5));
        assert_eq!((c.chains, c.antichain.len()), (1, 1));
        let c = chain_cover(&PosetView::antichain(4));
        assert_eq!((c.chains, c.antichain.len()), (4, 4));
        let c = chain_cover(&PosetView::antichain(0));
        assert_eq!((c.chains, c.antichain.len()), (0, 0));
    }
}
