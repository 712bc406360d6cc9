//! Finite approximation schedules `g_s(i)` for `s < S`, `i < k`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApproximationSchedule {
    k: usize,
    horizon: usize,
    /// `table[s][i] = g_s(i)`.
    table: Vec<Vec<usize>>,
}

impl ApproximationSchedule {
    /// Validate a full table: non-decreasing in `i` and in `s`, and `g_s(i) < s` for `s > 0`.
    pub fn new(k: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let horizon = table.len();
        for (s, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Schedule { index: row.len(), stage: s, reason: format!("row has {} entries, expected {k}", row.len()) });
            }
            for i in 0..k {
                if i > 0 && row[i] < row[i - 1] {
                    return Err(Error::Schedule { index: i, stage: s, reason: "decreases in i".into() });
                }
                if s > 0 && row[i] < table[s - 1][i] {
                    return Err(Error::Schedule { index: i, stage: s, reason: "decreases in s".into() });
                }
                if s > 0 && row[i] >= s {
                    return Err(Error::Schedule { index: i, stage: s, reason: format!("value {} not below stage", row[i]) });
                }
            }
        }
        Ok(ApproximationSchedule { k, horizon, table })
    }

    /// From sparse `(i, s, v)` cells; missing cells inherit stage `s - 1` (stage 0 defaults to 0).
    pub fn from_cells(k: usize, horizon: usize, cells: &[(usize, usize, usize)]) -> Result<Self> {
        let mut given: Vec<Vec<Option<usize>>> = vec![vec![None; k]; horizon];
        for &(i, s, v) in cells {
            if i >= k || s >= horizon {
                return Err(Error::input(format!("schedule cell ({i}, {s}) outside k = {k}, S = {horizon}")));
            }
            if given[s][i].replace(v).is_some() {
                return Err(Error::input(format!("schedule cell ({i}, {s}) given twice")));
            }
        }
        let mut table = vec![vec![0; k]; horizon];
        for s in 0..horizon {
            for i in 0..k {
                let inherited = if s == 0 { 0 } else { table[s - 1][i] };
                table[s][i] = given[s][i].unwrap_or(inherited);
            }
        }
        ApproximationSchedule::new(k, table)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn value(&self, s: usize, i: usize) -> usize {
        self.table[s][i]
    }

    /// The cells where the value changes (plus nonzero stage-0 cells), for serialization.
    pub fn cells(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.horizon {
            for i in 0..self.k {
                let prev = if s == 0 { 0 } else { self.table[s - 1][i] };
                if self.table[s][i] != prev {
                    out.push((i, s, self.table[s][i]));
                }
            }
        }
        out
    }

    /// `b^i_s`: the last stage `b <= s` where `g_b(i) != g_{b-1}(i)`, or 0.
    pub fn block_start(&self, i: usize, s: usize) -> usize {
        (1..=s).rev().find(|&b| self.table[b][i] != self.table[b - 1][i]).unwrap_or(0)
    }
}
