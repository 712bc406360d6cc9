//! On-line chain partitions against the offline optimum (the width).

use std::time::Instant;

use serde::Serialize;

use crate::coloring::PairColoring;
use crate::error::Result;
use crate::felsner;
use crate::oracle::{self, OracleConfig};
use crate::partition::ColorPartition;
use crate::poset::poset_from_coloring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Felsner,
    /// Put each element on the oldest chain whose maximum is 0-joined to it.
    FirstFit,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "felsner" => Ok(Strategy::Felsner),
            "first-fit" => Ok(Strategy::FirstFit),
            _ => Err(format!("unknown strategy {s:?} (felsner | first-fit)")),
        }
    }
}

/// First-fit chain partition of a coloring transitive for 0.
pub fn first_fit(f: &PairColoring) -> Result<ColorPartition> {
    f.require_transitive(0)?;
    let mut tops: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(f.universe_size());
    for x in 0..f.universe_size() {
        let c = match tops.iter().position(|&m| f.color(m, x) == 0) {
            Some(c) => c,
            None => {
                tops.push(x);
                tops.len() - 1
            }
        };
        tops[c] = x;
        class_of.push(c);
    }
    ColorPartition::new(class_of, tops.len())
}

#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub name: String,
    pub coloring: PairColoring,
    /// The promised bound: no 1-homogeneous set of size `k`.
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub k: usize,
    pub strategy: Strategy,
    pub colors: Option<usize>,
    pub width: Option<usize>,
    pub ratio: Option<f64>,
    pub micros: Option<u128>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrategySummary {
    pub strategy: Strategy,
    pub runs: usize,
    pub skipped: usize,
    pub max_colors: usize,
    pub max_ratio: f64,
    pub mean_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
    pub summary: Vec<StrategySummary>,
}

impl BenchTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("instance,n,k,strategy,colors,width,ratio,micros,skipped\n");
        let opt = |v: Option<String>| v.unwrap_or_default();
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.instance,
                r.n,
                r.k,
                serde_json::to_value(r.strategy).unwrap().as_str().unwrap(),
                opt(r.colors.map(|v| v.to_string())),
                opt(r.width.map(|v| v.to_string())),
                opt(r.ratio.map(|v| format!("{v:.4}"))),
                opt(r.micros.map(|v| v.to_string())),
                opt(r.skipped.clone()),
            ));
        }
        out
    }
}

/// Run every strategy on every instance whose hypothesis holds.
///
/// An instance is skipped when it is not transitive for 0, when its width
/// (via a certified minimum chain cover) is at least `k`, or when the oracle
/// refuses it. Runtimes are measured only with `timing`.
pub fn bench(strategies: &[Strategy], instances: &[BenchInstance], cfg: &OracleConfig, timing: bool) -> BenchTable {
    let mut rows = Vec::new();
    for inst in instances {
        let f = &inst.coloring;
        let n = f.universe_size();
        let width = match poset_from_coloring(f, 0).and_then(|p| oracle::min_chain_cover(&p, cfg)) {
            Ok(cover) => Ok(cover.used_classes()),
            Err(e) => Err(e.to_string()),
        };
        let skip = match &width {
            Err(msg) => Some(msg.clone()),
            Ok(w) if *w >= inst.k => Some(format!("width {w} is not below k = {}", inst.k)),
            Ok(_) => None,
        };
        for &strategy in strategies {
            let mut row = BenchRow {
                instance: inst.name.clone(),
                n,
                k: inst.k,
                strategy,
                colors: None,
                width: width.as_ref().ok().copied(),
                ratio: None,
                micros: None,
                skipped: skip.clone(),
            };
            if skip.is_none() {
                let start = Instant::now();
                let out = match strategy {
                    Strategy::Felsner => felsner::run(f, inst.k).map(|r| r.partition),
                    Strategy::FirstFit => first_fit(f),
                };
                let elapsed = start.elapsed().as_micros();
                match out {
                    Ok(g) => {
                        let colors = g.used_classes();
                        let w = row.width.unwrap_or(0).max(1);
                        row.colors = Some(colors);
                        row.ratio = Some(colors as f64 / w as f64);
                        row.micros = timing.then_some(elapsed);
                    }
                    Err(e) => row.skipped = Some(e.to_string()),
                }
            }
            rows.push(row);
        }
    }
    let summary = strategies
        .iter()
        .map(|&strategy| {
            let mine: Vec<&BenchRow> = rows.iter().filter(|r| r.strategy == strategy).collect();
            let ratios: Vec<f64> = mine.iter().filter_map(|r| r.ratio).collect();
            StrategySummary {
                strategy,
                runs: ratios.len(),
                skipped: mine.len() - ratios.len(),
                max_colors: mine.iter().filter_map(|r| r.colors).max().unwrap_or(0),
                max_ratio: ratios.iter().copied().fold(0.0, f64::max),
                mean_ratio: if ratios.is_empty() { 0.0 } else { ratios.iter().sum::<f64>() / ratios.len() as f64 },
            }
        })
        .collect();
    BenchTable { rows, summary }
}
