//! Largest subsequence on which a coloring is transitive for both colors.

use crate::coloring::PairColoring;

/// Lexicographically least among the longest index-increasing sequences whose
/// reindexed coloring is transitive for both colors.
pub(crate) fn longest_transitive(f: &PairColoring) -> Vec<usize> {
    let n = f.universe_size();
    let mut best = Vec::new();
    let mut cur = Vec::with_capacity(n);
    search(f, 0, &mut cur, &mut best);
    best
}

/// Adding `z` above every element of `seq` keeps both colors transitive iff no
/// `x < y` in `seq` has `f(x,y) = f(y,z) != f(x,z)`.
fn extends(f: &PairColoring, seq: &[usize], z: usize) -> bool {
    seq.iter().enumerate().all(|(i, &x)| {
        seq[i + 1..]
            .iter()
            .all(|&y| f.color(x, y) != f.color(y, z) || f.color(x, z) == f.color(x, y))
    })
}

fn search(f: &PairColoring, next: usize, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    let n = f.universe_size();
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    for z in next..n {
        if cur.len() + (n - z) <= best.len() {
            return;
        }
        if extends(f, cur, z) {
            cur.push(z);
            search(f, z + 1, cur, best);
            cur.pop();
        }
    }
}
