//! Stage-by-stage adversarial colorings against enumerated streams.

mod composite;
mod diagonal;
mod fnb;
mod schedule;

pub use composite::{build_composite, CompositeColoring};
pub use diagonal::{check_composite, check_fnb, DiagonalizationReport, StreamVerdict, Verdict};
pub use fnb::{build_fnb, AdversaryState, FnbRun, StageRecord};
pub use schedule::ApproximationSchedule;
