// The two reduction pipelines.

use bounded_ramsey::generate;
use bounded_ramsey::pipelines::{greedy_min_homogeneous, pipeline_em, pipeline_hem};

pub fn run_example() -> bounded_ramsey::Result<()> {
    let f = generate::thinned_pigeonhole(128, 2, 0.9, 3)?;
    println!("greedy subsequence: {:?}", greedy_min_homogeneous(&f));
    let em = pipeline_em(&f, 3)?;
    println!("em: {:?} (guaranteed {})", em.set, em.guaranteed_size);
    assert!(f.is_homogeneous(&em.set, 0)?);

    let h = generate::height_bounded(90, 3, 0.05, 3)?;
    let hem = pipeline_hem(&h, 4, 1)?;
    println!("hem: {} elements (guaranteed {})", hem.set.len(), hem.guaranteed_size);
    assert!(hem.set.len() >= hem.guaranteed_size);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
