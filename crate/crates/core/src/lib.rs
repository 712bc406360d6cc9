//! Finite-scale algorithms around the bounded Ramsey theorem for pairs.

pub mod adversary;
pub mod bench;
pub mod cli;
mod bits;
pub mod coloring;
pub mod error;
pub mod extractor;
pub mod felsner;
pub mod format;
pub mod generate;
pub mod mirsky;
pub mod oracle;
pub mod partition;
pub mod pipelines;
pub mod poset;
pub mod report;
pub mod stability;
pub mod stream;

pub use bits::BitSet;
pub use coloring::{hirst_reduction, Color, PairColoring};
pub use error::{Error, Result};
pub use partition::{validate_partition, ColorPartition, PartitionMode, Subject, ValidationReport};
pub use poset::{coloring_from_poset, poset_from_coloring, PosetView};
pub use stability::{stability_profile, StabilityProfile};
pub use stream::{StreamEvent, StreamFamily};
