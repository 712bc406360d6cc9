// Brute-force ground truth.

use bounded_ramsey::oracle::{self, OracleConfig};
use bounded_ramsey::{generate, poset_from_coloring};

pub fn run_example() -> bounded_ramsey::Result<()> {
    let cfg = OracleConfig::default();
    let f = generate::random_coloring(30, 0.5, 1)?;
    let m = oracle::max_homog(&f, 1, &cfg)?;
    println!("max 1-homogeneous: {} {:?}", m.size, m.witness);

    let p = poset_from_coloring(&generate::up_growing(40, 3, 0.1, 1)?, 0)?;
    let width = oracle::width(&p, &cfg)?;
    let cover = oracle::min_chain_cover(&p, &cfg)?;
    println!("width {} = chains in a minimum cover {}", width.size, cover.used_classes());
    assert_eq!(width.size, cover.used_classes());

    let six = oracle::ramsey_certify(2, 3, 6, &cfg)?;
    let five = oracle::ramsey_certify(2, 3, 5, &cfg)?;
    println!("6 -> (3)^2_2: {}; 5 -> (3)^2_2: {} ({:?})", six.holds, five.holds, five.counterexample);

    let t = oracle::max_transitive_subseq(&generate::random_coloring(12, 0.5, 2)?, &cfg)?;
    println!("longest subsequence transitive for both colors: {:?}", t.witness);
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
