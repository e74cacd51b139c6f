//! Generate an instance, write it in the text format, read it back and solve
//! it through the same entry point the command line uses.

use arbor::generate::{generate, Family, GenParams};
use arbor::harness::{solve, Problem, SolveOptions};
use arbor::instance::Instance;

fn main() -> arbor::Result<()> {
    let inst = generate(Family::Layered, &GenParams { n: 6, seed: 2, terminals: 2, ..GenParams::default() });
    let text = inst.emit();
    print!("{text}");
    let back = Instance::parse(&text)?;
    assert_eq!(back, inst);

    let opts = SolveOptions { oracle: true, no_time: true, ..SolveOptions::default() };
    println!("--- orienteering");
    print!("{}", solve(&back, &opts)?.to_lines());
    println!("--- directed Steiner over the terminal lines");
    let report = solve(&back, &SolveOptions { problem: Some(Problem::Dst), ..opts })?;
    print!("{}", report.to_lines());
    print!("{}", report.edge_lines());
    Ok(())
}
