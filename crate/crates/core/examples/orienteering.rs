//! Budgeted tree orienteering on a random metric: every plain engine next
//! to the exact optimum.

use arbor::exact::{brute_force_sto, OracleBudget};
use arbor::generate::{generate, Family, GenParams};
use arbor::greedy::{solve_sto, EngineKind, MetricInstance, SolverConfig};
use arbor::oracle::RewardOracle;

fn main() -> arbor::Result<()> {
    let inst = generate(Family::RandomMetric, &GenParams { n: 7, seed: 11, ..GenParams::default() });
    let f = inst.linear_rewards();
    let m = MetricInstance::from_graph(&inst.graph(), inst.root, inst.budget)?;
    println!("n={} budget={} reward upper bound={}", m.n(), m.budget(), f.upper_bound());

    let (opt, witness) = brute_force_sto(m.cost(), m.root(), &f, m.budget(), &OracleBudget::default())?;
    println!("optimum {opt} at cost {}", witness.cost());

    for engine in [EngineKind::Rg, EngineKind::RgQp] {
        let (tree, report) = solve_sto(&m, &f, &SolverConfig::with_engine(engine));
        println!(
            "{engine:<6} value {:>3} cost {:>3} depth {} calls {:>8} tree {:?}",
            report.value,
            report.cost,
            report.depth,
            report.stats.calls,
            tree.edges().iter().map(|(c, e)| (e.parent, *c)).collect::<Vec<_>>()
        );
        assert!(report.value * report.depth as u64 >= opt);
    }
    Ok(())
}
