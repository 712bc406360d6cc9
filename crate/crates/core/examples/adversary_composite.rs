// A two-component composite driven by a random schedule.

use bounded_ramsey::adversary::{build_composite, check_composite};
use bounded_ramsey::generate;
use bounded_ramsey::oracle::{self, OracleConfig};

pub fn run_example() -> bounded_ramsey::Result<()> {
    let w = generate::stream_family(3, 150, 0.3, 2)?;
    let g = generate::schedule(2, 150, 3, 0.05, 2)?;
    let c = build_composite(&w, &g)?;
    let cfg = OracleConfig::with_exhaustive_limit(150);
    for (i, fi) in c.components.iter().enumerate() {
        let m = oracle::max_homog(fi, 1, &cfg)?;
        println!("component {i}: largest 1-homogeneous set {:?}", m.witness);
        assert!(m.size <= 2);
    }
    // R(3,3) = 6 bounds the union of two triangle-free components.
    let m = oracle::max_homog(&c.coloring, 1, &cfg)?;
    println!("composite: largest 1-homogeneous set has {} elements", m.size);
    assert!(m.size < 6);
    let report = check_composite(&c, &g, &w);
    println!("{} of {} streams caught", report.caught(), w.stream_count());
    assert!(report.failures().is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
