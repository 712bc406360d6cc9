//! Direct checks used by the integration tests, written without the library's own predicates.

#![allow(dead_code)]

use bounded_ramsey::PairColoring;

/// Every pair of `set` has color `c`, checked pair by pair.
pub fn all_pairs(f: &PairColoring, set: &[usize], c: u8) -> bool {
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if set[i] == set[j] || f.color(set[i], set[j]) != c {
                return false;
            }
        }
    }
    true
}

pub fn strictly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

/// No three elements pairwise colored 1, by intersecting neighbourhoods of each 1-pair.
pub fn no_one_triangle(f: &PairColoring) -> bool {
    let n = f.universe_size();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| y != x && f.color(x, y) == 1).collect()).collect();
    for x in 0..n {
        for &y in nbrs[x].iter().filter(|&&y| y > x) {
            if nbrs[y].iter().any(|&z| z > y && f.color(x, z) == 1) {
                return false;
            }
        }
    }
    true
}

/// Coloring of `[n]^2` read from the bits of `mask`, pairs in lexicographic order.
pub fn coloring_from_mask(n: usize, mask: u64) -> PairColoring {
    let mut bit = 0;
    let mut f = PairColoring::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if mask >> bit & 1 == 1 {
                f.set(x, y, 1);
            }
            bit += 1;
        }
    }
    f
}

/// `floor(log2 n) + 1`, by repeated halving.
pub fn halvings(mut n: usize) -> usize {
    let mut count = 0;
    while n > 0 {
        n /= 2;
        count += 1;
    }
    count
}
