//! Finite-horizon enumerations `W_e`: each stream lists elements with the stage they appear.

use serde::Serialize;

use crate::error::{Error, Result};

/// One enumeration event: stream `stream` lists `element` at stage `stage`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StreamEvent {
    pub stream: usize,
    pub element: usize,
    pub stage: usize,
}

/// A family of `stream_count` streams over elements and stages below `horizon`.
///
/// `W_e[s]` is the set of elements listed by stream `e` at some stage `<= s`,
/// so it is monotone in `s` whatever order the events arrive in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamFamily {
    stream_count: usize,
    horizon: usize,
    events: Vec<StreamEvent>,
    /// `first_seen[e][x]`: earliest stage at which `x` enters `W_e`.
    first_seen: Vec<Vec<Option<usize>>>,
}

impl StreamFamily {
    pub fn new(stream_count: usize, horizon: usize, events: Vec<StreamEvent>) -> Result<Self> {
        let mut first_seen = vec![vec![None; horizon]; stream_count];
        for ev in &events {
            if ev.stream >= stream_count || ev.element >= horizon || ev.stage >= horizon {
                return Err(Error::input(format!(
                    "event (e={}, x={}, s={}) outside header bounds E={stream_count}, S={horizon}",
                    ev.stream, ev.element, ev.stage
                )));
            }
            let slot: &mut Option<usize> = &mut first_seen[ev.stream][ev.element];
            *slot = Some(slot.map_or(ev.stage, |s| s.min(ev.stage)));
        }
        Ok(StreamFamily { stream_count, horizon, events, first_seen })
    }

    pub fn empty(horizon: usize) -> Self {
        StreamFamily { stream_count: 0, horizon, events: Vec::new(), first_seen: Vec::new() }
    }

    pub fn stream_count(&self) -> usize {
        self.stream_count
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn events(&self) -> &[StreamEvent] {
        &self.events
    }

    /// Stage at which `x` enters `W_e`; `None` for streams beyond the family.
    pub fn first_seen(&self, e: usize, x: usize) -> Option<usize> {
        self.first_seen.get(e).and_then(|row| row.get(x).copied().flatten())
    }

    pub fn contains_at(&self, e: usize, x: usize, s: usize) -> bool {
        self.first_seen(e, x).is_some_and(|t| t <= s)
    }

    /// `W_e` at the horizon, ascending.
    pub fn members(&self, e: usize) -> Vec<usize> {
        match self.first_seen.get(e) {
            Some(row) => (0..self.horizon).filter(|&x| row[x].is_some()).collect(),
            None => Vec::new(),
        }
    }

    /// `W_e[s] ∩ [lo, s]`, ascending.
    pub fn window(&self, e: usize, lo: usize, s: usize) -> Vec<usize> {
        (lo..=s.min(self.horizon.saturating_sub(1)))
            .filter(|&x| self.contains_at(e, x, s))
            .collect()
    }
}
