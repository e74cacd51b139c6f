//! Runs the bundled instance suite against the exact oracle and prints the
//! table with per-engine mean subproblem counts.

use std::path::Path;

use arbor::harness::{bench, Engine, SolveOptions};

fn main() -> arbor::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("suite");
    let table = bench(&dir, &SolveOptions::default())?;
    print!("{}", table.render(true));
    for engine in [Engine::Rg, Engine::RgQp, Engine::RgFast] {
        if let Some(m) = table.mean_subproblems(engine) {
            println!("{engine}: mean subproblems {m:.0}");
        }
    }
    Ok(())
}
