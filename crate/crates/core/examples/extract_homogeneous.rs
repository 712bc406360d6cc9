// Placement-tree extraction of a 0-homogeneous set.

use bounded_ramsey::extractor::{self, PlacementTree};
use bounded_ramsey::generate;

pub fn run_example() -> bounded_ramsey::Result<()> {
    let f = generate::blocks(6, 2)?;
    let mut tree = PlacementTree::new();
    for x in 0..6 {
        let depth = tree.insert(x, &f)?;
        println!("{x} placed at depth {depth}, path {:?}", tree.path_to(x));
    }

    // No three pairwise 1-joined elements: ask for l = 3.
    let f = generate::thinned_pigeonhole(500, 2, 0.8, 5)?;
    let ex = extractor::solve_brt(&f, 3)?;
    println!("levels {:?}; found {} (guaranteed {})", ex.stats.level_sizes, ex.set.len(), ex.stats.guaranteed_size);
    assert!(f.is_homogeneous(&ex.set, 0)?);
    assert!(ex.set.len() >= ex.stats.guaranteed_size);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
