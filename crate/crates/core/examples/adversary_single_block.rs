// The single-block stage construction and its diagonalization report.

use bounded_ramsey::adversary::{build_fnb, check_fnb};
use bounded_ramsey::{stability_profile, StreamEvent, StreamFamily};

pub fn run_example() -> bounded_ramsey::Result<()> {
    // One stream enumerating x at stage x + 1.
    let events = (0..5).map(|x| StreamEvent { stream: 0, element: x, stage: x + 1 }).collect();
    let w = StreamFamily::new(1, 6, events)?;
    let run = build_fnb(&w, 1, 0, 6)?;
    for rec in run.records.iter().filter(|r| !r.newly_active.is_empty()) {
        println!("stage {}: streams {:?} activate, picks {:?}", rec.stage, rec.newly_active, rec.picks);
    }
    let f = run.coloring();
    println!("1-pairs: {:?}", f.one_edges());
    let profile = stability_profile(&f);
    println!("limit-0 set: {:?}", profile.limit_zero_set);
    let report = check_fnb(&run, &w);
    println!("{:?}", report.streams);
    assert_eq!(report.caught(), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
