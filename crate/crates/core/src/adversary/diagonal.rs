//! Finite checks that a stream has been diagonalized against.
//!
//! Stream `e` is caught at horizon `S` when it activated before `S` and lists
//! (before `S`) some `y < S` at or past the machine's last reset and above its
//! final state-1 element `x`. Then `x` lies in `W_e`, is at least `b`, and has
//! `f(x, y) = 1`, so `W_e` is not contained in the limit-0 set.

use serde::Serialize;

use super::composite::CompositeColoring;
use super::fnb::FnbRun;
use super::schedule::ApproximationSchedule;
use crate::coloring::PairColoring;
use crate::stream::StreamFamily;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Caught { x: usize, y: usize },
    NotYetCaught { reason: String },
    /// The sufficient condition held but the witness did not check out.
    Failed { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StreamVerdict {
    pub stream: usize,
    /// Component whose machine was used, for composite checks.
    pub component: Option<usize>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalizationReport {
    pub streams: Vec<StreamVerdict>,
}

impl DiagonalizationReport {
    pub fn caught(&self) -> usize {
        self.streams.iter().filter(|v| matches!(v.verdict, Verdict::Caught { .. })).count()
    }

    pub fn failures(&self) -> Vec<&StreamVerdict> {
        self.streams.iter().filter(|v| matches!(v.verdict, Verdict::Failed { .. })).collect()
    }
}

fn judge(run: &FnbRun, streams: &StreamFamily, e: usize, f: &PairColoring) -> Verdict {
    let Some(activated) = run.activation_stage.get(e).copied().flatten() else {
        return Verdict::NotYetCaught {
            reason: format!("at most {} elements in the window before the horizon", run.n * run.n),
        };
    };
    let last_flush = run.flush_stages().last().copied().unwrap_or(activated);
    let Some(x) = run.chosen_after(e, run.horizon - 1) else {
        return Verdict::Failed { reason: "active stream holds no state-1 element".into() };
    };
    let listed = |y: usize| streams.first_seen(e, y).is_some_and(|t| t < run.horizon);
    let Some(y) = (last_flush.max(x + 1)..run.horizon).find(|&y| listed(y)) else {
        return Verdict::NotYetCaught { reason: format!("no element listed at or past the last reset at stage {last_flush}") };
    };
    if x < run.base {
        return Verdict::Failed { reason: format!("witness {x} below block start {}", run.base) };
    }
    if streams.first_seen(e, x).is_none() {
        return Verdict::Failed { reason: format!("witness {x} not in the stream") };
    }
    if f.color(x, y) != 1 {
        return Verdict::Failed { reason: format!("f({x}, {y}) = 0") };
    }
    Verdict::Caught { x, y }
}

/// Verdicts for streams `e < n` of a single `f_n^b` run.
pub fn check_fnb(run: &FnbRun, streams: &StreamFamily) -> DiagonalizationReport {
    let f = run.coloring();
    let verdicts = (0..run.n)
        .map(|e| StreamVerdict { stream: e, component: None, verdict: judge(run, streams, e, &f) })
        .collect();
    DiagonalizationReport { streams: verdicts }
}

/// Verdicts for every stream of the family against the composite coloring.
///
/// Stream `e` is judged by the first component whose final value exceeds `e`,
/// on the machine that component ends with.
pub fn check_composite(
    composite: &CompositeColoring,
    schedule: &ApproximationSchedule,
    streams: &StreamFamily,
) -> DiagonalizationReport {
    let last = schedule.horizon().saturating_sub(1);
    let verdicts = (0..streams.stream_count())
        .map(|e| {
            let component = (0..schedule.k()).find(|&i| schedule.horizon() > 0 && schedule.value(last, i) > e);
            let verdict = match component {
                None => Verdict::NotYetCaught { reason: "no component has a final value above the stream index".into() },
                Some(i) => {
                    let key = (schedule.value(last, i), composite.block_starts[i][last]);
                    match composite.machine(key.0, key.1) {
                        Some(run) => judge(run, streams, e, &composite.coloring),
                        None => Verdict::Failed { reason: format!("machine {key:?} missing") },
                    }
                }
            };
            StreamVerdict { stream: e, component, verdict }
        })
        .collect();
    DiagonalizationReport { streams: verdicts }
}

#[cfg(test)]
mod tests {
    use super::super::{build_composite, build_fnb};
    use super::*;
    use crate::stream::StreamEvent;

    fn delayed_identity(horizon: usize) -> StreamFamily {
        let events = (0..horizon - 1).map(|x| StreamEvent { stream: 0, element: x, stage: x + 1 }).collect();
        StreamFamily::new(1, horizon, events).unwrap()
    }

    #[test]
    fn single_stream_caught() {
        let w = delayed_identity(6);
        let run = build_fnb(&w, 1, 0, 6).unwrap();
        let report = check_fnb(&run, &w);
        assert_eq!(report.streams[0].verdict, Verdict::Caught { x: 0, y: 2 });
        assert!(crate::stability_profile(&run.coloring()).limit_zero_set.iter().all(|&z| z != 0));
    }

    #[test]
    fn small_stream_not_caught() {
        let w = StreamFamily::new(1, 6, vec![StreamEvent { stream: 0, element: 1, stage: 1 }]).unwrap();
        let run = build_fnb(&w, 1, 0, 6).unwrap();
        assert!(matches!(check_fnb(&run, &w).streams[0].verdict, Verdict::NotYetCaught { .. }));
    }

    #[test]
    fn composite_catches_through_last_block() {
        let w = delayed_identity(8);
        let g = ApproximationSchedule::from_cells(1, 8, &[(0, 3, 1)]).unwrap();
        let c = build_composite(&w, &g).unwrap();
        let report = check_composite(&c, &g, &w);
        assert_eq!(report.streams[0].component, Some(0));
        assert_eq!(report.streams[0].verdict, Verdict::Caught { x: 3, y: 5 });
    }
}
