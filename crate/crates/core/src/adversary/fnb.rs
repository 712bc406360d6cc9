//! The single-block stage construction `f_n^b`.
//!
//! Every element is in state 0 or 1; at stage `s` each `x < s` gets
//! `f(x, s) = state(x)`. Stream `e < n` becomes active once
//! `|W_e[s] ∩ [b, s]| > n^2`. At a stage where some stream becomes active,
//! every state-1 element is reset to 0 and trashed for good, then every active
//! stream puts the least element of `W_e[s] ∩ [b, s]` outside the trash into
//! state 1.

use serde::Serialize;

use crate::coloring::PairColoring;
use crate::error::{Error, Result};
use crate::stream::StreamFamily;

/// Machine state after a stage has been processed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdversaryState {
    pub stage: usize,
    /// Elements currently in state 1, ascending.
    pub state_one: Vec<usize>,
    /// Trashed elements, ascending.
    pub trash: Vec<usize>,
    /// Active streams, ascending.
    pub active: Vec<usize>,
    /// `(stream, element)` for every active stream's current state-1 element.
    pub chosen: Vec<(usize, usize)>,
}

/// What happened at one stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub stage: usize,
    pub newly_active: Vec<usize>,
    pub trashed: Vec<usize>,
    pub picks: Vec<(usize, usize)>,
    pub trash_size: usize,
    /// Elements `x < stage` colored 1 against `stage`.
    pub column_ones: Vec<usize>,
}

/// Stage-by-stage run of `f_n^b` over `[0, horizon)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FnbRun {
    pub n: usize,
    pub base: usize,
    pub horizon: usize,
    pub records: Vec<StageRecord>,
    pub final_state: AdversaryState,
    /// Stage at which each stream `e < n` became active, if it did.
    pub activation_stage: Vec<Option<usize>>,
}

impl FnbRun {
    /// Stages at which a new activation triggered a reset, ascending.
    pub fn flush_stages(&self) -> Vec<usize> {
        self.records.iter().filter(|r| !r.newly_active.is_empty()).map(|r| r.stage).collect()
    }

    /// `f_n^b(x, y)` for `x < y < horizon`.
    pub fn color(&self, x: usize, y: usize) -> u8 {
        let (x, y) = (x.min(y), x.max(y));
        self.records[y].column_ones.binary_search(&x).is_ok() as u8
    }

    pub fn coloring(&self) -> PairColoring {
        let mut f = PairColoring::new(self.horizon);
        for rec in &self.records {
            for &x in &rec.column_ones {
                f.set(x, rec.stage, 1);
            }
        }
        f
    }

    /// The element stream `e` held in state 1 after stage `s`, if any.
    pub fn chosen_after(&self, e: usize, s: usize) -> Option<usize> {
        // Picks only change at flush stages.
        self.records[..=s]
            .iter()
            .rev()
            .find(|r| !r.picks.is_empty())
            .and_then(|r| r.picks.iter().find(|(e2, _)| *e2 == e).map(|&(_, x)| x))
    }
}

/// Run the construction without checking `n` against the stream count;
/// streams beyond the family are empty and never activate.
pub(crate) fn run_machine(streams: &StreamFamily, n: usize, base: usize, horizon: usize) -> Result<FnbRun> {
    let threshold = n.checked_mul(n).ok_or_else(|| Error::input("n^2 overflows"))?;
    let mut state_one: Vec<usize> = Vec::new();
    let mut in_trash = vec![false; horizon];
    let mut trash_size = 0;
    let mut active = vec![false; n];
    let mut activation_stage = vec![None; n];
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    // Running |W_e[s] ∩ [b, s]| per stream.
    let mut counts = vec![0usize; n];
    let live_streams = n.min(streams.stream_count());
    let mut records = Vec::with_capacity(horizon);

    for s in 0..horizon {
        for (e, count) in counts.iter_mut().enumerate().take(live_streams) {
            if s >= base {
                // Elements newly in the window: x = s already listed, or x in [b, s) listed at stage s.
                if streams.contains_at(e, s, s) {
                    *count += 1;
                }
                for x in base..s {
                    if streams.first_seen(e, x) == Some(s) {
                        *count += 1;
                    }
                }
            }
        }
        let newly_active: Vec<usize> =
            (0..live_streams).filter(|&e| !active[e] && counts[e] > threshold).collect();
        let mut trashed = Vec::new();
        let mut picks = Vec::new();
        if !newly_active.is_empty() {
            for &e in &newly_active {
                active[e] = true;
                activation_stage[e] = Some(s);
            }
            for x in state_one.drain(..) {
                if !in_trash[x] {
                    in_trash[x] = true;
                    trash_size += 1;
                    trashed.push(x);
                }
            }
            if trash_size > threshold {
                return Err(Error::Internal(format!("trash holds {trash_size} > n^2 = {threshold} at stage {s}")));
            }
            chosen.clear();
            for e in (0..n).filter(|&e| active[e]) {
                let pick = (base..=s).find(|&x| x < horizon && !in_trash[x] && streams.contains_at(e, x, s));
                let x = pick.ok_or_else(|| {
                    Error::Internal(format!("no pick for active stream {e} at stage {s}"))
                })?;
                picks.push((e, x));
                chosen.push((e, x));
                if !state_one.contains(&x) {
                    state_one.push(x);
                }
            }
            state_one.sort_unstable();
        }
        let column_ones: Vec<usize> = state_one.iter().copied().filter(|&x| x < s).collect();
        records.push(StageRecord { stage: s, newly_active, trashed, picks, trash_size, column_ones });
    }

    let final_state = AdversaryState {
        stage: horizon,
        state_one: state_one.clone(),
        trash: (0..horizon).filter(|&x| in_trash[x]).collect(),
        active: (0..n).filter(|&e| active[e]).collect(),
        chosen,
    };
    Ok(FnbRun { n, base, horizon, records, final_state, activation_stage })
}

/// Build `f_n^b` up to `horizon` from the first `n` streams of `streams`.
pub fn build_fnb(streams: &StreamFamily, n: usize, base: usize, horizon: usize) -> Result<FnbRun> {
    if n > streams.stream_count() {
        return Err(Error::input(format!("n = {n} exceeds the {} available streams", streams.stream_count())));
    }
    if horizon > streams.horizon() {
        return Err(Error::input(format!("horizon {horizon} exceeds stream horizon {}", streams.horizon())));
    }
    if base > horizon {
        return Err(Error::input(format!("base {base} beyond horizon {horizon}")));
    }
    run_machine(streams, n, base, horizon)
}
