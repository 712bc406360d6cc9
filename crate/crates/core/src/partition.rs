//! Total assignments of universe elements to classes, and their validation.

use serde::{Deserialize, Serialize};

use crate::coloring::PairColoring;
use crate::error::{Error, Result};
use crate::poset::PosetView;

/// A total map `[0, N) -> [0, class_bound)`.
///
/// `class_bound` is the declared number of classes (the bound an algorithm
/// promises); [`ColorPartition::used_classes`] counts the classes actually hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorPartition {
    class_of: Vec<usize>,
    class_bound: usize,
}

impl ColorPartition {
    pub fn new(class_of: Vec<usize>, class_bound: usize) -> Result<Self> {
        if let Some((x, &c)) = class_of.iter().enumerate().find(|(_, &c)| c >= class_bound) {
            return Err(Error::input(format!(
                "element {x} has class {c}, outside the declared bound {class_bound}"
            )));
        }
        Ok(ColorPartition { class_of, class_bound })
    }

    /// A partition whose bound is exactly the number of distinct labels,
    /// after relabelling classes by first occurrence.
    pub fn compact(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        ColorPartition { class_bound: map.len(), class_of }
    }

    pub fn universe_size(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_bound(&self) -> usize {
        self.class_bound
    }

    pub fn used_classes(&self) -> usize {
        self.classes().iter().filter(|c| !c.is_empty()).count()
    }

    /// Members of every class index below the bound, each in ascending order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_bound];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// The largest class; ties go to the smallest class index.
    pub fn largest_class(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        for class in self.classes() {
            if class.len() > best.len() {
                best = class;
            }
        }
        best
    }
}

/// What every class of a partition must be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionMode {
    /// Every pair inside a class has color 0.
    ZeroHomog,
    /// Every pair inside a class is comparable (color 0 when the subject is a coloring).
    Chain,
    /// Every pair inside a class is incomparable (color 1 when the subject is a coloring).
    Antichain,
}

impl std::str::FromStr for PartitionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero-homog" => Ok(PartitionMode::ZeroHomog),
            "chain" => Ok(PartitionMode::Chain),
            "antichain" => Ok(PartitionMode::Antichain),
            other => Err(Error::input(format!("unknown partition mode `{other}`"))),
        }
    }
}

/// The structure a partition is validated against.
#[derive(Debug, Clone, Copy)]
pub enum Subject<'a> {
    Coloring(&'a PairColoring),
    Poset(&'a PosetView),
}

impl Subject<'_> {
    fn universe_size(&self) -> usize {
        match self {
            Subject::Coloring(f) => f.universe_size(),
            Subject::Poset(p) => p.universe_size(),
        }
    }

    /// Whether `x` and `y` may share a class under `mode`.
    fn compatible(&self, mode: PartitionMode, x: usize, y: usize) -> bool {
        match (self, mode) {
            (Subject::Coloring(f), PartitionMode::ZeroHomog | PartitionMode::Chain) => f.color(x, y) == 0,
            (Subject::Coloring(f), PartitionMode::Antichain) => f.color(x, y) == 1,
            (Subject::Poset(p), PartitionMode::ZeroHomog | PartitionMode::Chain) => p.comparable(x, y),
            (Subject::Poset(p), PartitionMode::Antichain) => !p.comparable(x, y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub class: usize,
    pub witness: (usize, usize),
}

/// One entry per class breaking its contract; empty iff the partition is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_partition(
    subject: Subject<'_>,
    g: &ColorPartition,
    mode: PartitionMode,
) -> Result<ValidationReport> {
    if subject.universe_size() != g.universe_size() {
        return Err(Error::input(format!(
            "partition covers {} elements but the subject has {}",
            g.universe_size(),
            subject.universe_size()
        )));
    }
    let mut violations = Vec::new();
    for (class, members) in g.classes().into_iter().enumerate() {
        let witness = members.iter().enumerate().find_map(|(i, &x)| {
            members[i + 1..]
                .iter()
                .find(|&&y| !subject.compatible(mode, x, y))
                .map(|&y| (x, y))
        });
        if let Some(witness) = witness {
            violations.push(Violation { class, witness });
        }
    }
    Ok(ValidationReport { violations })
}
