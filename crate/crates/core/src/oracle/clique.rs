//! Exact maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Vertices are colored greedily from the highest index down, so branching
//! visits them in ascending order and the first maximum clique found is kept.
//! The witness is therefore a deterministic function of the graph.

use crate::bits::BitSet;

/// Maximum clique of the graph whose adjacency rows are `adj` (symmetric, no loops).
/// Returns the clique in ascending order.
pub fn max_clique(adj: &[BitSet]) -> Vec<usize> {
    let n = adj.len();
    if n <= 64 {
        let small: Vec<u64> = adj
            .iter()
            .map(|row| row.iter().fold(0u64, |m, y| m | 1 << y))
            .collect();
        return max_clique_small(&small);
    }
    let mut search = Search { adj, best: Vec::new(), current: Vec::new() };
    search.expand(BitSet::full(n));
    let mut best = search.best;
    best.sort_unstable();
    best
}

struct Search<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential coloring of `cand`: vertices in color order with their color number.
    fn color_sort(&self, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.last() {
                q.remove(v);
                uncolored.remove(v);
                q.difference_with(&self.adj[v]);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, mut cand: BitSet) {
        let (order, colors) = self.color_sort(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

fn max_clique_small(adj: &[u64]) -> Vec<usize> {
    /// Greedy coloring into fixed buffers; returns the number of vertices written.
    fn color_sort(adj: &[u64], cand: u64, order: &mut [u8; 64], colors: &mut [u8; 64]) -> usize {
        let mut uncolored = cand;
        let mut color = 0;
        let mut len = 0;
        while uncolored != 0 {
            color += 1;
            let mut q = uncolored;
            while q != 0 {
                let v = 63 - q.leading_zeros() as usize;
                q &= !(1 << v);
                uncolored &= !(1 << v);
                q &= !adj[v];
                order[len] = v as u8;
                colors[len] = color;
                len += 1;
            }
        }
        len
    }

    fn expand(adj: &[u64], mut cand: u64, current: &mut u64, size: usize, best: &mut (u64, usize)) {
        let mut order = [0u8; 64];
        let mut colors = [0u8; 64];
        let len = color_sort(adj, cand, &mut order, &mut colors);
        for idx in (0..len).rev() {
            if size + colors[idx] as usize <= best.1 {
                return;
            }
            let v = order[idx] as usize;
            *current |= 1 << v;
            let next = cand & adj[v];
            if next == 0 {
                if size + 1 > best.1 {
                    *best = (*current, size + 1);
                }
            } else {
                expand(adj, next, current, size + 1, best);
            }
            *current &= !(1 << v);
            cand &= !(1 << v);
        }
    }

    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best = (0u64, 0usize);
    expand(adj, all, &mut 0, 0, &mut best);
    (0..n).filter(|&v| best.0 >> v & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<BitSet> {
        let mut adj = vec![BitSet::new(n); n];
        for &(x, y) in edges {
            adj[x].insert(y);
            adj[y].insert(x);
        }
        adj
    }

    fn brute(adj: &[BitSet]) -> usize {
        let n = adj.len();
        let mut best = 0;
        for mask in 0u32..1 << n {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let ok = vs.iter().all(|&a| vs.iter().all(|&b| a == b || adj[a].contains(b)));
            if ok {
                best = best.max(vs.len());
            }
        }
        best
    }

    #[test]
    fn small_graphs() {
        assert!(max_clique(&[]).is_empty());
        assert_eq!(max_clique(&graph(3, &[])).len(), 1);
        let pentagon = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(max_clique(&pentagon).len(), 2);
        let k4 = graph(6, &[(0, 2), (0, 3), (0, 5), (2, 3), (2, 5), (3, 5), (1, 4)]);
        assert_eq!(max_clique(&k4), vec![0, 2, 3, 5]);
    }

    #[test]
    fn large_path_matches_small_path() {
        // 70 vertices: a K5 hidden among a cycle.
        let mut edges: Vec<(usize, usize)> = (0..70).map(|v| (v, (v + 1) % 70)).collect();
        for a in [3, 17, 40, 55, 66] {
            for b in [3, 17, 40, 55, 66] {
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        let adj = graph(70, &edges);
        assert_eq!(max_clique(&adj), vec![3, 17, 40, 55, 66]);
    }

    #[test]
    fn agrees_with_brute_force_on_pseudo_random_graphs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 1..=10 {
            for _ in 0..30 {
                let mut edges = Vec::new();
                for x in 0..n {
                    for y in x + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 2 == 0 {
                            edges.push((x, y));
                        }
                    }
                }
                let adj = graph(n, &edges);
                let c = max_clique(&adj);
                assert_eq!(c.len(), brute(&adj));
                assert!(c.iter().all(|&a| c.iter().all(|&b| a == b || adj[a].contains(b))));
            }
        }
    }
}
