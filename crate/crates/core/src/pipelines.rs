//! End-to-end solvers: find a 0-homogeneous set when no 1-homogeneous set of size `k` exists.

use serde::Serialize;

use crate::coloring::{Color, PairColoring};
use crate::error::{Error, Result};
use crate::felsner;
use crate::mirsky;
use crate::poset::poset_from_coloring;

/// Repeatedly take the least remaining element and keep whichever color class
/// of its remaining neighbours is larger (ties keep color 0).
///
/// The result is min-homogeneous: `f(x_i, x_j)` for `i < j` depends only on `i`.
pub fn greedy_min_homogeneous(f: &PairColoring) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..f.universe_size()).collect();
    let mut out = Vec::new();
    while let Some((&x, rest)) = remaining.split_first() {
        out.push(x);
        let (zero, one): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&y| f.color(x, y) == 0);
        remaining = if one.len() > zero.len() { one } else { zero };
    }
    out
}

/// `h(a, b) = f(x_a, x_b)` for an index-increasing `xs`.
pub fn reindex(f: &PairColoring, xs: &[usize]) -> Result<PairColoring> {
    f.reindex(xs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineOutput {
    pub set: Vec<usize>,
    /// Greedy subsequence (EM) or `None` (HEM).
    pub subsequence: Option<Vec<usize>>,
    pub classes_used: usize,
    pub class_bound: usize,
    /// Size the construction guarantees.
    pub guaranteed_size: usize,
}

fn floor_log2_plus_one(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        n.ilog2() as usize + 1
    }
}

/// Greedy subsequence, reindex, Felsner with bound `k`, largest class, pull back.
pub fn pipeline_em(f: &PairColoring, k: usize) -> Result<PipelineOutput> {
    let xs = greedy_min_homogeneous(f);
    let h = reindex(f, &xs)?;
    let run = felsner::run(&h, k).map_err(|e| match e {
        Error::HypothesisViolated { witness } => Error::HypothesisViolated { witness: witness.iter().map(|&a| xs[a]).collect() },
        other => other,
    })?;
    let class = run.partition.largest_class();
    let set: Vec<usize> = class.iter().map(|&a| xs[a]).collect();
    check_zero_homogeneous(f, &set)?;
    let bound = felsner::color_bound(k);
    Ok(PipelineOutput {
        set,
        classes_used: run.partition.used_classes(),
        class_bound: bound,
        guaranteed_size: floor_log2_plus_one(f.universe_size()).div_ceil(bound.max(1)),
        subsequence: Some(xs),
    })
}

/// Solve a coloring transitive for `c`: Felsner when `c = 0`, weak Mirsky on the
/// color-1 order when `c = 1`; then take the largest class.
pub fn pipeline_hem(f: &PairColoring, k: usize, c: Color) -> Result<PipelineOutput> {
    let n = f.universe_size();
    let (partition, bound) = match c {
        0 => {
            let run = felsner::run(f, k)?;
            (run.partition, felsner::color_bound(k))
        }
        1 => {
            let p = poset_from_coloring(f, 1)?;
            // The order is index-aligned, so g0 is the exact rank and a longest
            // chain can be read back from it.
            let rank = mirsky::g0(&p);
            if let Some(top) = (0..n).find(|&x| rank[x] + 1 >= k.max(1)) {
                let mut chain = vec![top];
                let mut cur = top;
                while rank[cur] > 0 && chain.len() < k {
                    cur = (0..cur).rev().find(|&y| p.less(y, cur) && rank[y] + 1 == rank[cur]).expect("rank predecessor");
                    chain.push(cur);
                }
                chain.reverse();
                return Err(Error::HypothesisViolated { witness: chain });
            }
            let bound = (k - 1) * (k - 1);
            (mirsky::run_weak(&p), bound)
        }
        _ => return Err(Error::input(format!("color must be 0 or 1, got {c}"))),
    };
    let set = partition.largest_class();
    check_zero_homogeneous(f, &set)?;
    Ok(PipelineOutput {
        set,
        subsequence: None,
        classes_used: partition.used_classes(),
        class_bound: bound,
        guaranteed_size: n.div_ceil(bound.max(1)),
    })
}

fn check_zero_homogeneous(f: &PairColoring, set: &[usize]) -> Result<()> {
    match f.homogeneity_violation(set, 0) {
        Some((x, y)) => Err(Error::Internal(format!("pipeline output has 1-pair ({x}, {y})"))),
        None => Ok(()),
    }
}
