// Driving the command line in-process and reading its JSON report.

use bounded_ramsey::cli;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("brt-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let col = dir.join("blocks.col");
    let col = col.to_str().ok_or("non-UTF-8 temp path")?;

    let mut sink = Vec::new();
    let code = cli::run(["brt", "gen", "blocks", "--n", "8", "--w", "2", "--out", col], &mut sink, &mut std::io::stderr());
    assert_eq!(code, 0);

    let mut out = Vec::new();
    let code = cli::run(["brt", "extract", "--input", col, "--bound", "3", "--format", "json"], &mut out, &mut std::io::stderr());
    let report: serde_json::Value = serde_json::from_slice(&out)?;
    println!("exit {code}, set {}, validation passed {}", report["result"]["set"], report["validation"]["passed"]);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
