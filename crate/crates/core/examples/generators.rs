// Seeded generators and the text formats.

use bounded_ramsey::{format, generate};

pub fn run_example() -> bounded_ramsey::Result<()> {
    let f = generate::pigeonhole(9, 3, true, 0)?;
    let text = format::write_coloring(&f);
    print!("{text}");
    assert_eq!(format::parse_coloring(&text)?, f);

    // Same seed, same instance.
    assert_eq!(generate::random_coloring(20, 0.3, 42)?, generate::random_coloring(20, 0.3, 42)?);

    let w = generate::stream_family(2, 12, 0.5, 7)?;
    print!("{}", format::write_streams(&w));
    let g = generate::schedule(2, 12, 3, 0.3, 7)?;
    print!("{}", format::write_schedule(&g));
    let p = generate::random_poset(6, 0.3, 7)?;
    print!("{}", format::write_poset(&p));
    Ok(())
}

#[allow(dead_code)]
fn main() -> bounded_ramsey::Result<()> {
    run_example()
}
