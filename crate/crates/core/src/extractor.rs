//! Placement trees and extraction of large 0-homogeneous sets.
//!
//! Each element is inserted by descending from the root into the first child
//! (in insertion order) it is 1-joined to, and attached as a new child where
//! no such child exists. Hence every root-to-node path is 1-homogeneous and
//! every sibling set is 0-homogeneous. With no 1-homogeneous set of size `l`
//! the depth stays below `l`, so some node has at least
//! `(N / (l-1))^(1/(l-1))` children, and those children are the answer.

use serde::Serialize;

use crate::coloring::PairColoring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct Node {
    label: Option<usize>,
    parent: Option<usize>,
    depth: usize,
    children: Vec<usize>,
}

/// Rooted tree whose non-root nodes are labelled by distinct universe elements.
/// Node 0 is the root; nodes are numbered in creation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacementTree {
    nodes: Vec<Node>,
    /// `node_of[x]`: node labelled `x`.
    node_of: Vec<Option<usize>>,
}

impl Default for PlacementTree {
    fn default() -> Self {
        Self::new()
    }
}

impl PlacementTree {
    pub fn new() -> Self {
        PlacementTree {
            nodes: vec![Node { label: None, parent: None, depth: 0, children: Vec::new() }],
            node_of: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.node_of.get(x).is_some_and(Option::is_some)
    }

    /// Insert `x`; returns the new node's depth (root children have depth 1).
    pub fn insert(&mut self, x: usize, f: &PairColoring) -> Result<usize> {
        if x >= f.universe_size() {
            return Err(Error::input(format!("element {x} outside universe [0, {})", f.universe_size())));
        }
        if self.contains(x) {
            return Err(Error::input(format!("element {x} already placed")));
        }
        let mut at = 0;
        'descend: loop {
            for &child in &self.nodes[at].children {
                let y = self.nodes[child].label.expect("non-root");
                if f.color(y, x) == 1 {
                    at = child;
                    continue 'descend;
                }
            }
            break;
        }
        let id = self.nodes.len();
        let depth = self.nodes[at].depth + 1;
        self.nodes.push(Node { label: Some(x), parent: Some(at), depth, children: Vec::new() });
        self.nodes[at].children.push(id);
        if self.node_of.len() <= x {
            self.node_of.resize(x + 1, None);
        }
        self.node_of[x] = Some(id);
        Ok(depth)
    }

    /// Labels from the root's child down to the node holding `x`.
    pub fn path_to(&self, x: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = self.node_of.get(x).copied().flatten();
        while let Some(id) = cur {
            if let Some(label) = self.nodes[id].label {
                path.push(label);
            }
            cur = self.nodes[id].parent;
        }
        path.reverse();
        path
    }

    /// Labels of the children of `x` (`None` for the root), in insertion order.
    pub fn children_of(&self, x: Option<usize>) -> Vec<usize> {
        let id = match x {
            None => 0,
            Some(x) => match self.node_of.get(x).copied().flatten() {
                Some(id) => id,
                None => return Vec::new(),
            },
        };
        self.nodes[id].children.iter().map(|&c| self.nodes[c].label.expect("non-root")).collect()
    }

    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Number of nodes at each depth, root level first.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.depth() + 1];
        for n in &self.nodes {
            sizes[n.depth] += 1;
        }
        sizes
    }

    /// Node (by label, `None` for the root) with the most children; earliest-created wins ties.
    pub fn widest_node(&self) -> (Option<usize>, usize) {
        let mut best = (None, self.nodes[0].children.len());
        for n in &self.nodes[1..] {
            if n.children.len() > best.1 {
                best = (n.label, n.children.len());
            }
        }
        best
    }

    /// Check that paths are 1-homogeneous and sibling sets 0-homogeneous.
    pub fn check_invariants(&self, f: &PairColoring) -> std::result::Result<(), String> {
        for n in &self.nodes {
            let kids = self.children_of(n.label);
            if let Some((x, y)) = f.homogeneity_violation(&kids, 0) {
                return Err(format!("siblings {x} and {y} are 1-joined"));
            }
            if let Some(x) = n.label {
                if let Some((a, b)) = f.homogeneity_violation(&self.path_to(x), 1) {
                    return Err(format!("path to {x} has 0-pair ({a}, {b})"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractStats {
    /// Nodes per depth, the root level first.
    pub level_sizes: Vec<usize>,
    pub depth: usize,
    /// Label of the node whose children were returned (`None` for the root).
    pub chosen_parent: Option<usize>,
    /// `floor((N / (l-1))^(1/(l-1)))`, the guaranteed size.
    pub guaranteed_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub set: Vec<usize>,
    pub stats: ExtractStats,
}

/// Largest `m` with `(l-1) * m^(l-1) <= n`, i.e. `floor((n / (l-1))^(1/(l-1)))`.
pub fn guaranteed_size(n: usize, l: usize) -> usize {
    assert!(l >= 2, "bound must be at least 2");
    let d = (l - 1) as u32;
    let fits = |m: usize| -> bool {
        (m as u128)
            .checked_pow(d)
            .and_then(|p| p.checked_mul(d as u128))
            .is_some_and(|v| v <= n as u128)
    };
    let mut m = 0;
    while fits(m + 1) {
        m += 1;
    }
    m
}

/// Extract a 0-homogeneous set from a coloring with no 1-homogeneous set of size `l`.
///
/// Fails as soon as some insertion creates a path of `l` nodes; that path is
/// returned as the 1-homogeneous witness.
pub fn solve_brt(f: &PairColoring, l: usize) -> Result<Extraction> {
    if l < 2 {
        return Err(Error::input("bound l must be at least 2"));
    }
    let n = f.universe_size();
    let mut tree = PlacementTree::new();
    for x in 0..n {
        let depth = tree.insert(x, f)?;
        if depth >= l {
            return Err(Error::HypothesisViolated { witness: tree.path_to(x) });
        }
    }
    let (chosen_parent, _) = tree.widest_node();
    let set = tree.children_of(chosen_parent);
    Ok(Extraction {
        set,
        stats: ExtractStats {
            level_sizes: tree.level_sizes(),
            depth: tree.depth(),
            chosen_parent,
            guaranteed_size: guaranteed_size(n, l),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(n: usize, w: usize) -> PairColoring {
        PairColoring::from_fn(n, |x, y| (x / w == y / w) as u8)
    }

    #[test]
    fn first_insert_is_root_child() {
        let f = PairColoring::new(3);
        let mut t = PlacementTree::new();
        assert_eq!(t.insert(0, &f).unwrap(), 1);
        assert_eq!(t.children_of(None), vec![0]);
        assert!(t.insert(0, &f).is_err());
    }

    #[test]
    fn block_coloring_tree_shape() {
        let f = blocks(6, 2);
        let mut t = PlacementTree::new();
        for x in 0..6 {
            t.insert(x, &f).unwrap();
        }
        assert_eq!(t.children_of(None), vec![0, 2, 4]);
        assert_eq!(t.children_of(Some(0)), vec![1]);
        assert_eq!(t.children_of(Some(2)), vec![3]);
        assert_eq!(t.children_of(Some(4)), vec![5]);
        t.check_invariants(&f).unwrap();
        assert_eq!(t.level_sizes(), vec![1, 3, 3]);
    }

    #[test]
    fn solve_examples() {
        let zero = solve_brt(&PairColoring::new(10), 2).unwrap();
        assert_eq!(zero.set, (0..10).collect::<Vec<_>>());

        let b = solve_brt(&blocks(6, 2), 3).unwrap();
        assert_eq!(b.set, vec![0, 2, 4]);
        assert_eq!(b.stats.guaranteed_size, 1);
        assert_eq!(b.stats.chosen_parent, None);

        let ones = PairColoring::from_fn(3, |_, _| 1);
        assert_eq!(solve_brt(&ones, 3), Err(Error::HypothesisViolated { witness: vec![0, 1, 2] }));
        assert!(solve_brt(&ones, 1).is_err());
    }

    #[test]
    fn guaranteed_size_matches_float_formula() {
        for l in 2..6 {
            for n in 0..3000 {
                let exact = guaranteed_size(n, l);
                let approx = ((n as f64) / (l - 1) as f64).powf(1.0 / (l - 1) as f64);
                assert!(exact as f64 <= approx + 1e-9 && approx < (exact + 1) as f64 + 1e-9, "n={n} l={l}");
            }
        }
        assert_eq!(guaranteed_size(6, 3), 1);
        assert_eq!(guaranteed_size(8, 3), 2);
        assert_eq!(guaranteed_size(500, 3), 15);
    }
}
