//! Plain-text instance formats.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.
//!
//! - coloring: `N`, then `x y c` with `x < y < N`; unlisted pairs are 0, repeats are an error.
//! - streams: `E S`, then `e x s` with `e < E` and `x, s < S`.
//! - schedule: `k S`, then `i s v`; missing cells inherit the previous stage.
//! - poset: `N`, then `x y` meaning `x` is below `y`; closed transitively on reading.
//! - partition: JSON `{"class_of": [...], "class_bound": n}`.

use std::collections::HashSet;

use serde::Deserialize;

use crate::adversary::ApproximationSchedule;
use crate::coloring::PairColoring;
use crate::error::{Error, Result};
use crate::partition::ColorPartition;
use crate::poset::PosetView;
use crate::stream::{StreamEvent, StreamFamily};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next non-empty, non-comment line as `(line number, numbers)`.
    fn next_numbers(&mut self) -> Result<Option<(usize, Vec<usize>)>> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::input(format!("line {}: bad number {t:?}", i + 1))))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Some((i + 1, nums)));
        }
        Ok(None)
    }

    fn header<const K: usize>(&mut self, what: &str) -> Result<[usize; K]> {
        match self.next_numbers()? {
            Some((line, nums)) => nums
                .try_into()
                .map_err(|_| Error::input(format!("line {line}: {what} header needs {K} numbers"))),
            None => Err(Error::input(format!("empty {what} file"))),
        }
    }

    fn rows<const K: usize>(&mut self, what: &str) -> Result<Vec<(usize, [usize; K])>> {
        let mut out = Vec::new();
        while let Some((line, nums)) = self.next_numbers()? {
            let row: [usize; K] = nums
                .try_into()
                .map_err(|_| Error::input(format!("line {line}: {what} rows have {K} numbers")))?;
            out.push((line, row));
        }
        Ok(out)
    }
}

pub fn parse_coloring(text: &str) -> Result<PairColoring> {
    let mut lines = Lines::new(text);
    let [n] = lines.header::<1>("coloring")?;
    let mut f = PairColoring::new(n);
    let mut seen = HashSet::new();
    for (line, [x, y, c]) in lines.rows::<3>("coloring")? {
        if !(x < y && y < n) {
            return Err(Error::input(format!("line {line}: need x < y < {n}, got {x} {y}")));
        }
        if c > 1 {
            return Err(Error::input(format!("line {line}: color {c} is not 0 or 1")));
        }
        if !seen.insert((x, y)) {
            return Err(Error::input(format!("line {line}: pair ({x}, {y}) listed twice")));
        }
        f.set(x, y, c as u8);
    }
    Ok(f)
}

/// Writes only the 1-pairs.
pub fn write_coloring(f: &PairColoring) -> String {
    let mut out = format!("{}\n", f.universe_size());
    for (x, y) in f.one_edges() {
        out.push_str(&format!("{x} {y} 1\n"));
    }
    out
}

pub fn parse_streams(text: &str) -> Result<StreamFamily> {
    let mut lines = Lines::new(text);
    let [e, s] = lines.header::<2>("stream")?;
    let events = lines
        .rows::<3>("stream")?
        .into_iter()
        .map(|(_, [stream, element, stage])| StreamEvent { stream, element, stage })
        .collect();
    StreamFamily::new(e, s, events)
}

pub fn write_streams(w: &StreamFamily) -> String {
    let mut out = format!("{} {}\n", w.stream_count(), w.horizon());
    let mut events = w.events().to_vec();
    events.sort();
    for ev in events {
        out.push_str(&format!("{} {} {}\n", ev.stream, ev.element, ev.stage));
    }
    out
}

pub fn parse_schedule(text: &str) -> Result<ApproximationSchedule> {
    let mut lines = Lines::new(text);
    let [k, s] = lines.header::<2>("schedule")?;
    let cells: Vec<(usize, usize, usize)> =
        lines.rows::<3>("schedule")?.into_iter().map(|(_, [i, st, v])| (i, st, v)).collect();
    ApproximationSchedule::from_cells(k, s, &cells)
}

pub fn write_schedule(g: &ApproximationSchedule) -> String {
    let mut out = format!("{} {}\n", g.k(), g.horizon());
    for (i, s, v) in g.cells() {
        out.push_str(&format!("{i} {s} {v}\n"));
    }
    out
}

pub fn parse_poset(text: &str) -> Result<PosetView> {
    let mut lines = Lines::new(text);
    let [n] = lines.header::<1>("poset")?;
    let pairs: Vec<(usize, usize)> = lines.rows::<2>("poset")?.into_iter().map(|(_, [x, y])| (x, y)).collect();
    PosetView::from_relations(n, &pairs)
}

/// Writes every relation of the (closed) order.
pub fn write_poset(p: &PosetView) -> String {
    let mut out = format!("{}\n", p.universe_size());
    for (x, y) in p.relations() {
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}

#[derive(Deserialize)]
struct RawPartition {
    class_of: Vec<usize>,
    class_bound: Option<usize>,
}

/// Reads a partition; a missing `class_bound` defaults to one past the largest class.
pub fn parse_partition(text: &str) -> Result<ColorPartition> {
    let raw: RawPartition = serde_json::from_str(text).map_err(|e| Error::input(format!("partition JSON: {e}")))?;
    let bound = raw.class_bound.unwrap_or_else(|| raw.class_of.iter().max().map_or(0, |m| m + 1));
    ColorPartition::new(raw.class_of, bound)
}

pub fn write_partition(g: &ColorPartition) -> String {
    serde_json::to_string(g).expect("partition serializes")
}
