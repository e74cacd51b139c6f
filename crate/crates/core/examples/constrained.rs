//! Orienteering with side constraints: a total path-length budget, per-vertex
//! deadlines, and per-vertex priority requirements.

use arbor::closure::{build_priority_closure, build_two_cost_closure};
use arbor::constrained::{rg_dc, rg_dl, rg_pr, ConstrainedSubproblem};
use arbor::exact::{brute_force_constrained, Constraint, OracleBudget};
use arbor::generate::{generate, Family, GenParams};
use arbor::greedy::depth_for_size;
use arbor::oracle::{gated_value, Gate, RewardOracle};
use arbor::VertexSet;

fn main() -> arbor::Result<()> {
    let ob = OracleBudget::default();
    let inst = generate(Family::TwoCost, &GenParams { n: 6, seed: 8, ..GenParams::default() });
    let f = inst.linear_rewards();
    let n = inst.n;
    let d = depth_for_size(n - 1);
    let tc = build_two_cost_closure(&inst.graph(), 12);

    let length_budget = inst.length_budget.unwrap_or(6);
    let t = rg_dc(&tc, &f, &ConstrainedSubproblem::top(inst.root, inst.budget, length_budget, d)).into_tree().unwrap();
    let c = Constraint::Length { closure: &tc, length_budget, charged: VertexSet::full(n) };
    let (opt, _) = brute_force_constrained(&c, inst.root, &f, inst.budget, &ob)?;
    let total: u64 = t.vertices().iter().map(|v| t.path_length(v).unwrap()).sum();
    println!("length budget {length_budget}: value {} (optimum {opt}), total length {total}", f.eval(t.vertices()));

    let deadlines: Vec<u64> = (0..n as u64).map(|v| 2 + v % 3).collect();
    let t = rg_dl(&tc, &f, &deadlines, &ConstrainedSubproblem::top(inst.root, inst.budget, u64::MAX, d)).into_tree().unwrap();
    let c = Constraint::Deadline { closure: &tc, deadlines: &deadlines };
    let (opt, _) = brute_force_constrained(&c, inst.root, &f, inst.budget, &ob)?;
    println!("deadlines {deadlines:?}: value {} (optimum {opt})", gated_value(&f, &t, &Gate::deadlines(deadlines.clone())));

    let prio = generate(Family::Priority, &GenParams { n: 6, seed: 8, levels: 3, ..GenParams::default() });
    let pc = build_priority_closure(&prio.graph(), 3);
    let requirement = prio.requirements();
    let f = prio.linear_rewards();
    let t = rg_pr(&pc, &f, &requirement, &ConstrainedSubproblem::top(prio.root, prio.budget, u64::MAX, d)).into_tree().unwrap();
    let c = Constraint::Priority { closure: &pc, requirement: &requirement };
    let (opt, _) = brute_force_constrained(&c, prio.root, &f, prio.budget, &ob)?;
    println!("requirements {requirement:?}: value {} (optimum {opt})", gated_value(&f, &t, &Gate::priorities(requirement.clone())));
    Ok(())
}
