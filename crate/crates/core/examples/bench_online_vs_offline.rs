// Colors used on-line against the width.

use bounded_ramsey::bench::{bench, BenchInstance, Strategy};
use bounded_ramsey::generate;
use bounded_ramsey::oracle::OracleConfig;

pub fn run_example() -> bounded_ramsey::Result<()> {
    let instances = (0..6)
        .map(|i| {
            Ok(BenchInstance { name: format!("w2-{i}"), coloring: generate::up_growing(120, 2, 0.05, i)?, k: 3 })
        })
        .collect::<bounded_ramsey::Result<Vec<_>>>()?;
    let table = bench(&[Strategy::Felsner, Strategy::FirstFit], &instances, &OracleConfig::default(), false);
    print!("{}", table.to_csv());
    for s in &table.summary {
        println!("{:?}: max ratio {:.2}, mean {:.2}", s.strategy, s.max_ratio, s.mean_ratio);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
