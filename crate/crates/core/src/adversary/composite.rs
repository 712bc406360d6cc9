//! The composite coloring `f(x, s) = max_i f^i(x, s)` driven by a schedule.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::fnb::{run_machine, FnbRun};
use super::schedule::ApproximationSchedule;
use crate::coloring::PairColoring;
use crate::error::{Error, Result};
use crate::stream::StreamFamily;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeColoring {
    pub coloring: PairColoring,
    /// `components[i]` is `f^i`.
    pub components: Vec<PairColoring>,
    /// `block_starts[i][s] = b^i_s`.
    pub block_starts: Vec<Vec<usize>>,
    /// Every `(n, b)` machine the schedule touched.
    pub machines: BTreeMap<(usize, usize), FnbRun>,
}

impl CompositeColoring {
    pub fn machine(&self, n: usize, b: usize) -> Option<&FnbRun> {
        self.machines.get(&(n, b))
    }
}

/// Build `f^i(x, s) = f_{g_s(i)}^{b^i_s}(x, s)` for each `i < k`, and their union.
///
/// Streams with index at least the family size count as empty.
pub fn build_composite(streams: &StreamFamily, schedule: &ApproximationSchedule) -> Result<CompositeColoring> {
    let horizon = schedule.horizon();
    if horizon > streams.horizon() {
        return Err(Error::input(format!(
            "schedule horizon {horizon} exceeds stream horizon {}",
            streams.horizon()
        )));
    }
    let k = schedule.k();
    let block_starts: Vec<Vec<usize>> =
        (0..k).map(|i| (0..horizon).map(|s| schedule.block_start(i, s)).collect()).collect();

    let mut machines = BTreeMap::new();
    for i in 0..k {
        for s in 0..horizon {
            let key = (schedule.value(s, i), block_starts[i][s]);
            if let Entry::Vacant(slot) = machines.entry(key) {
                slot.insert(run_machine(streams, key.0, key.1, horizon)?);
            }
        }
    }

    let mut coloring = PairColoring::new(horizon);
    let mut components = Vec::with_capacity(k);
    for i in 0..k {
        let mut fi = PairColoring::new(horizon);
        for s in 0..horizon {
            let machine = &machines[&(schedule.value(s, i), block_starts[i][s])];
            for &x in &machine.records[s].column_ones {
                fi.set(x, s, 1);
                coloring.set(x, s, 1);
            }
        }
        components.push(fi);
    }
    Ok(CompositeColoring { coloring, components, block_starts, machines })
}
