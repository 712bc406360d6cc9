// Antichain partitions of a random order: pairs of ranks versus exact ranks.

use bounded_ramsey::oracle::{self, OracleConfig};
use bounded_ramsey::{generate, mirsky, validate_partition, PartitionMode, Subject};

pub fn run_example() -> bounded_ramsey::Result<()> {
    let p = generate::random_poset(40, 0.08, 11)?;
    let h = oracle::height(&p, &OracleConfig::default())?.size;
    let weak = mirsky::run_weak(&p);
    let exact = mirsky::run_exact(&p)?;
    println!("height {h}: weak uses {} classes (bound {}), exact uses {}", weak.used_classes(), h * h, exact.used_classes());
    for g in [&weak, &exact] {
        assert!(validate_partition(Subject::Poset(&p), g, PartitionMode::Antichain)?.is_valid());
    }
    assert!(weak.used_classes() <= h * h);
    assert_eq!(exact.used_classes(), h);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
