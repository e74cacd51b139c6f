//! Block recursion: `s` levels of guesses per block trade running time for a
//! ratio of `⌈d / s⌉` instead of `d`.

use arbor::exact::{brute_force_sto, OracleBudget};
use arbor::fast::rg_fast_run;
use arbor::generate::{generate, Family, GenParams};
use arbor::greedy::{depth_for_size, MetricInstance, SolverConfig, Subproblem};
use arbor::oracle::RewardOracle;

fn main() -> arbor::Result<()> {
    let inst = generate(Family::StarTrap, &GenParams { n: 6, seed: 4, ..GenParams::default() });
    let f = inst.linear_rewards();
    let m = MetricInstance::from_graph(&inst.graph(), inst.root, inst.budget)?;
    let d = depth_for_size(m.n() - 1);
    let (opt, _) = brute_force_sto(m.cost(), m.root(), &f, m.budget(), &OracleBudget::default())?;
    println!("depth {d}, optimum {opt}");

    for s in 1..=d {
        let blocks = d.div_ceil(s);
        let run = rg_fast_run(&m, &f, &Subproblem::top(m.root(), m.budget(), blocks), s, &SolverConfig::default());
        let value = run.solution.tree().map_or(0, |t| f.eval(t.vertices()));
        println!("block size {s}: {blocks} blocks, value {value:>3}, ratio bound {blocks}, calls {}", run.stats.calls);
        assert!(value * blocks as u64 >= opt);
    }
    Ok(())
}
