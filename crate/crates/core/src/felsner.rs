//! On-line chain partition of colorings that are transitive for color 0.
//!
//! Reading such a coloring as an up-growing order (`x <_P y` iff `x < y` and
//! `f(x, y) = 0`), the algorithm keeps levels `F^1, ..., F^{k-1}` of chains
//! (0-homogeneous sets) with
//!
//! 1. `|F^i| <= i`,
//! 2. the chains of all levels partition the elements seen so far,
//! 3. the maxima of the chains of one level form a 1-homogeneous set.
//!
//! Element `s` goes to the least level that has room or holds a chain whose
//! maximum is 0-joined to `s`. Extending a chain at level `i > 1` swaps it
//! down: the rest of `F^i` becomes `F^{i-1}` and the old `F^{i-1}` plus the
//! extended chain becomes `F^i`. If no level qualifies, the maxima of
//! `F^{k-1}` plus `s` are a 1-homogeneous set of size `k`.
//!
//! Chains never split or disappear, so coloring each element by the chain it
//! joined gives a partition into 0-homogeneous classes, fixed on-line.

use serde::Serialize;

use crate::coloring::PairColoring;
use crate::error::{Error, Result};
use crate::partition::ColorPartition;

/// Number of colors the partition may use: `k(k+1)/2`.
pub fn color_bound(k: usize) -> usize {
    k * (k + 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    /// Creation order, which is also the color of its members.
    pub id: usize,
    pub elements: Vec<usize>,
}

impl Chain {
    pub fn max(&self) -> usize {
        *self.elements.last().expect("chains are never empty")
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }
}

/// The levels `F^1 .. F^{k-1}` after `stage` elements have been placed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLibrary {
    k: usize,
    stage: usize,
    next_id: usize,
    /// `levels[i - 1]` is `F^i`, chains sorted by id.
    levels: Vec<Vec<Chain>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepCase {
    /// Case 1: an existing chain was extended (and swapped down when `level > 1`).
    Extend,
    /// Case 2: a new singleton chain was opened.
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub element: usize,
    /// The 1-based level index chosen.
    pub level: usize,
    pub case: StepCase,
    /// Id of the chain extended or created.
    pub chain: usize,
}

pub type StepTrace = Vec<StepRecord>;

impl ChainLibrary {
    /// Empty levels for bound `k` (no 1-homogeneous set of size `k` expected).
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("Felsner bound k must be at least 1"));
        }
        Ok(ChainLibrary { k, stage: 0, next_id: 0, levels: vec![Vec::new(); k - 1] })
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Chains of `F^i` (1-based), sorted by id.
    pub fn level(&self, i: usize) -> &[Chain] {
        &self.levels[i - 1]
    }

    pub fn chains_created(&self) -> usize {
        self.next_id
    }

    /// Level contents as plain element sets, `F^1` first.
    pub fn snapshot(&self) -> Vec<Vec<Vec<usize>>> {
        self.levels
            .iter()
            .map(|lvl| lvl.iter().map(|c| c.elements.clone()).collect())
            .collect()
    }

    /// Place element `stage` and advance.
    pub fn step(&mut self, f: &PairColoring) -> Result<StepRecord> {
        let s = self.stage;
        if s >= f.universe_size() {
            return Err(Error::input(format!("no element {s} in a universe of {}", f.universe_size())));
        }
        for i in 1..self.k {
            let level = &self.levels[i - 1];
            // Among chains whose max is 0-joined to s, the one with the largest max.
            let candidate = level
                .iter()
                .enumerate()
                .filter(|(_, h)| f.color(h.max(), s) == 0)
                .max_by(|(_, a), (_, b)| a.max().cmp(&b.max()).then(b.min().cmp(&a.min())))
                .map(|(pos, _)| pos);
            if let Some(pos) = candidate {
                let mut chain = self.levels[i - 1].remove(pos);
                chain.elements.push(s);
                let id = chain.id;
                if i == 1 {
                    self.levels[0].push(chain);
                } else {
                    self.levels.swap(i - 2, i - 1);
                    self.levels[i - 1].push(chain);
                }
                self.levels[i - 1].sort_by_key(|c| c.id);
                self.stage += 1;
                return Ok(StepRecord { element: s, level: i, case: StepCase::Extend, chain: id });
            }
            if level.len() < i {
                let id = self.next_id;
                self.next_id += 1;
                self.levels[i - 1].push(Chain { id, elements: vec![s] });
                self.stage += 1;
                return Ok(StepRecord { element: s, level: i, case: StepCase::Open, chain: id });
            }
        }
        let mut witness: Vec<usize> = match self.levels.last() {
            Some(top) => top.iter().map(Chain::max).collect(),
            None => Vec::new(),
        };
        witness.push(s);
        witness.sort_unstable();
        Err(Error::HypothesisViolated { witness })
    }

    /// Rebuild a library from its trace alone.
    pub fn replay(k: usize, trace: &[StepRecord]) -> Result<Self> {
        let mut lib = ChainLibrary::new(k)?;
        for rec in trace {
            let bad = || Error::input(format!("trace record {rec:?} does not apply"));
            if rec.element != lib.stage || rec.level == 0 || rec.level >= k {
                return Err(bad());
            }
            let i = rec.level;
            match rec.case {
                StepCase::Open => {
                    if rec.chain != lib.next_id || lib.levels[i - 1].len() >= i {
                        return Err(bad());
                    }
                    lib.next_id += 1;
                    lib.levels[i - 1].push(Chain { id: rec.chain, elements: vec![rec.element] });
                }
                StepCase::Extend => {
                    let pos = lib.levels[i - 1].iter().position(|c| c.id == rec.chain).ok_or_else(bad)?;
                    let mut chain = lib.levels[i - 1].remove(pos);
                    chain.elements.push(rec.element);
                    if i > 1 {
                        lib.levels.swap(i - 2, i - 1);
                    }
                    lib.levels[i - 1].push(chain);
                    lib.levels[i - 1].sort_by_key(|c| c.id);
                }
            }
            lib.stage += 1;
        }
        Ok(lib)
    }

    /// Check the three level invariants and 0-homogeneity of every chain.
    pub fn check_invariants(&self, f: &PairColoring) -> std::result::Result<(), String> {
        let mut seen = vec![false; self.stage];
        for (idx, level) in self.levels.iter().enumerate() {
            let i = idx + 1;
            if level.len() > i {
                return Err(format!("level {i} holds {} chains", level.len()));
            }
            for chain in level {
                for &x in &chain.elements {
                    if x >= self.stage || std::mem::replace(&mut seen[x], true) {
                        return Err(format!("element {x} misplaced or repeated"));
                    }
                }
                if let Some((x, y)) = f.homogeneity_violation(&chain.elements, 0) {
                    return Err(format!("chain {} has 1-pair ({x}, {y})", chain.id));
                }
            }
            let maxes: Vec<usize> = level.iter().map(Chain::max).collect();
            if let Some((x, y)) = f.homogeneity_violation(&maxes, 1) {
                return Err(format!("maxima of level {i} have 0-pair ({x}, {y})"));
            }
        }
        match seen.iter().position(|s| !s) {
            Some(x) => Err(format!("element {x} is in no chain")),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FelsnerRun {
    pub partition: ColorPartition,
    pub trace: StepTrace,
    pub library: ChainLibrary,
}

/// Run the on-line partition over the whole universe of `f`.
///
/// `f` must be transitive for color 0. The run fails with the size-`k`
/// witness as soon as it meets a 1-homogeneous set of size `k`.
pub fn run(f: &PairColoring, k: usize) -> Result<FelsnerRun> {
    f.require_transitive(0)?;
    let mut library = ChainLibrary::new(k)?;
    let n = f.universe_size();
    let mut trace = Vec::with_capacity(n);
    let mut color = vec![0; n];
    for x in 0..n {
        let rec = library.step(f)?;
        color[x] = rec.chain;
        trace.push(rec);
        #[cfg(debug_assertions)]
        if let Err(msg) = library.check_invariants(f) {
            return Err(Error::Internal(format!("after stage {x}: {msg}")));
        }
    }
    let partition = ColorPartition::new(color, color_bound(k))?;
    Ok(FelsnerRun { partition, trace, library })
}
