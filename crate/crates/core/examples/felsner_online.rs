// On-line chain partition, one element at a time.

use bounded_ramsey::felsner::{self, ChainLibrary};
use bounded_ramsey::PairColoring;

pub fn run_example() -> bounded_ramsey::Result<()> {
    let f = PairColoring::from_one_edges(4, &[(0, 1), (2, 3)])?;
    let mut library = ChainLibrary::new(3)?;
    for _ in 0..f.universe_size() {
        let step = library.step(&f)?;
        println!("element {} -> level {} ({:?}), chain {}: {:?}", step.element, step.level, step.case, step.chain, library.snapshot());
    }

    let run = felsner::run(&f, 3)?;
    println!("colors: {:?} (bound {})", run.partition.labels(), felsner::color_bound(3));
    assert_eq!(run.partition.labels(), &[0, 1, 0, 1]);

    // Three pairwise 1-joined elements are fine for k = 3 but the fourth is not.
    let ones = PairColoring::from_fn(4, |_, _| 1);
    match felsner::run(&ones, 3) {
        Err(bounded_ramsey::Error::HypothesisViolated { witness }) => println!("1-homogeneous witness: {witness:?}"),
        other => panic!("unexpected {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
