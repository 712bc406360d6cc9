// Colorings, the Hirst reduction, transitivity and partition validation.

use bounded_ramsey::{hirst_reduction, validate_partition, ColorPartition, PairColoring, PartitionMode, Subject};

pub fn run_example() -> bounded_ramsey::Result<()> {
    // Points colored by g; pairs get 0 exactly when their points agree.
    let g = [0, 1, 2, 0, 1, 2];
    let f = hirst_reduction(&g);
    println!("1-pairs of the Hirst reduction: {:?}", f.one_edges());
    assert!(f.is_homogeneous(&[0, 3], 0)?);
    assert!(f.is_homogeneous(&[0, 1, 2], 1)?);

    // Color classes of g are 0-homogeneous.
    let partition = ColorPartition::new(g.to_vec(), 3)?;
    let report = validate_partition(Subject::Coloring(&f), &partition, PartitionMode::ZeroHomog)?;
    println!("partition valid: {}", report.is_valid());
    assert!(report.is_valid());

    let skew = PairColoring::from_one_edges(3, &[(0, 2)])?;
    println!("transitivity witness for color 0: {:?}", skew.transitivity_witness(0));
    assert!(!skew.is_transitive(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
