//! Engine and exact-oracle behaviour on small instances.

mod common;

use arbor::arborescence::TreeEdge;
use arbor::closure::{build_metric_closure, build_priority_closure, build_two_cost_closure, CostMatrix};
use arbor::constrained::{rg_dc, rg_dl, rg_pr, ConstrainedSubproblem};
use arbor::exact::{brute_force_constrained, brute_force_min_cover, brute_force_sto, Constraint, CoverTarget, OracleBudget};
use arbor::fast::rg_fast;
use arbor::generate::{generate, Family, GenParams};
use arbor::graph::{DirectedGraph, Edge};
use arbor::greedy::{
    depth_for_size, min_budget_for_value, rg, rg_qp, solve_sto, EngineKind, MetricInstance, SolverConfig, Subproblem,
};
use arbor::oracle::{gated_value, Gate, LinearRewards, RewardOracle};
use arbor::validate::{validate, LengthBudget, Requirements};
use arbor::VertexSet;
use common::{random_coverage, random_linear};

fn two_vertex(cost: u64, budget: u64) -> MetricInstance {
    MetricInstance::new(CostMatrix::from_rows(&[vec![0, cost], vec![cost, 0]]), 0, budget).unwrap()
}

#[test]
fn unaffordable_leaf_leaves_the_root_alone() {
    let m = two_vertex(5, 4);
    let f = LinearRewards::new(vec![0, 1]);
    let t = rg(&m, &f, &Subproblem::top(0, 4, 1)).into_tree().unwrap();
    assert!(t.is_single());
    let must_visit = Subproblem { required: VertexSet::singleton(1), ..Subproblem::top(0, 4, 1) };
    assert!(rg(&m, &f, &must_visit).is_infeasible());
    assert!(rg_qp(&m, &f, &must_visit).is_infeasible());
}

#[test]
fn base_case_picks_the_best_affordable_leaf() {
    let m = MetricInstance::new(CostMatrix::from_rows(&[vec![0, 2, 3], vec![2, 0, 5], vec![3, 5, 0]]), 0, 3).unwrap();
    let f = LinearRewards::new(vec![0, 3, 7]);
    for engine in [rg, rg_qp] {
        let t = engine(&m, &f, &Subproblem::top(0, 3, 1)).into_tree().unwrap();
        assert_eq!(t.vertices(), [0, 2].into_iter().collect());
        assert_eq!(f.eval(t.vertices()), 7);
    }
    assert_eq!(min_budget_for_value(&m, &f, 0, VertexSet::EMPTY, VertexSet::EMPTY, 1, 7), Some(3));
    assert_eq!(min_budget_for_value(&m, &f, 0, VertexSet::EMPTY, VertexSet::EMPTY, 1, 8), None);
}

#[test]
fn zero_rewards_still_visit_responsibilities() {
    let g = generate(Family::RandomMetric, &GenParams { n: 6, seed: 3, ..GenParams::default() }).graph();
    let m = MetricInstance::from_graph(&g, 0, 60).unwrap();
    let f = LinearRewards::new(vec![0; 6]);
    let y: VertexSet = [2, 4].into_iter().collect();
    let sub = Subproblem { required: y, ..Subproblem::top(0, 60, 3) };
    let t = rg_qp(&m, &f, &sub).into_tree().unwrap();
    assert!(y.is_subset(t.vertices()));
    assert!(t.cost() <= 60);
    let (top, report) = solve_sto(&m, &f, &SolverConfig::with_engine(EngineKind::RgQp));
    assert_eq!(report.value, 0);
    assert!(top.is_single());
}

#[test]
fn affordable_star_collects_everything() {
    let n = 7;
    let g = DirectedGraph::from_edges(n, (1..n).map(|v| Edge::new(0, v, v as u64)));
    let budget: u64 = (1..n as u64).sum();
    let m = MetricInstance::from_graph(&g, 0, budget).unwrap();
    let f = LinearRewards::unit(n, VertexSet::full(n));
    let (opt, _) = brute_force_sto(m.cost(), 0, &f, budget, &OracleBudget::default()).unwrap();
    assert_eq!(opt, n as u64);
    let d = depth_for_size(n - 1) as u64;
    for engine in [EngineKind::Rg, EngineKind::RgQp, EngineKind::RgFast] {
        let (t, report) = solve_sto(&m, &f, &SolverConfig::with_engine(engine));
        assert!(report.value * d >= opt, "{engine}: {} of {opt}", report.value);
        assert!(t.cost() <= budget);
    }
}

#[test]
fn exact_oracle_trivial_answers() {
    let g = DirectedGraph::from_edges(4, [Edge::new(0, 1, 2), Edge::new(0, 2, 3), Edge::new(0, 3, 4)]);
    let mc = build_metric_closure(&g);
    let ob = OracleBudget::default();
    let zero = LinearRewards::new(vec![0; 4]);
    let (v, t) = brute_force_sto(&mc.matrix, 0, &zero, 100, &ob).unwrap();
    assert_eq!(v, 0);
    assert!(t.is_single());
    let f = LinearRewards::new(vec![0, 1, 2, 3]);
    let (v, t) = brute_force_sto(&mc.matrix, 0, &f, 9, &ob).unwrap();
    assert_eq!((v, t.cost()), (6, 9));
    let one = brute_force_min_cover(&CoverTarget::Steiner { cost: &mc.matrix, terminals: VertexSet::singleton(2) }, 0, &ob);
    assert_eq!(one.unwrap().unwrap().0, 3);
    let all = brute_force_min_cover(&CoverTarget::Steiner { cost: &mc.matrix, terminals: VertexSet::full(4) }, 0, &ob);
    assert_eq!(all.unwrap().unwrap().0, 9);
}

#[test]
fn zero_length_budget_blocks_positive_lengths() {
    let g = DirectedGraph::from_edges(3, [Edge::new(0, 1, 1).with_length(1), Edge::new(1, 2, 1).with_length(2)]);
    let tc = build_two_cost_closure(&g, 10);
    let f = LinearRewards::new(vec![0, 4, 4]);
    let c = Constraint::Length { closure: &tc, length_budget: 0, charged: VertexSet::full(3) };
    let (v, t) = brute_force_constrained(&c, 0, &f, 100, &OracleBudget::default()).unwrap();
    assert_eq!(v, 0);
    assert!(t.is_single());
    // the path 0 -> 1 -> 2 is the only tree that reaches both
    let c = Constraint::Length { closure: &tc, length_budget: 4, charged: VertexSet::full(3) };
    let (v, t) = brute_force_constrained(&c, 0, &f, 2, &OracleBudget::default()).unwrap();
    assert_eq!(v, 8);
    assert_eq!(t.in_edge(2), Some(&TreeEdge::new(1, 1).with_length(2)));
}

#[test]
fn zero_lengths_reduce_to_the_plain_oracle() {
    for seed in 0..20 {
        let inst = generate(Family::RandomMetric, &GenParams { n: 6, seed, ..GenParams::default() });
        let g = inst.graph();
        let zeroed = DirectedGraph::from_edges(6, g.edges().iter().map(|e| Edge::new(e.from, e.to, e.cost).with_length(0)));
        let tc = build_two_cost_closure(&zeroed, 0);
        let mc = build_metric_closure(&g);
        let f = random_coverage(6, seed);
        let budget = 10 + seed * 2;
        let ob = OracleBudget::default();
        let (plain, _) = brute_force_sto(&mc.matrix, 0, &f, budget, &ob).unwrap();
        let c = Constraint::Length { closure: &tc, length_budget: 0, charged: VertexSet::full(6) };
        let (lc, _) = brute_force_constrained(&c, 0, &f, budget, &ob).unwrap();
        assert_eq!(plain, lc, "seed {seed}");
    }
}

/// Every engine value stays below the exact optimum of its problem.
#[test]
fn oracles_bound_every_engine() {
    let ob = OracleBudget::default();
    for seed in 0..12 {
        let n = 6;
        let p = GenParams { n, seed, ..GenParams::default() };
        let g = generate(Family::TwoCost, &p).graph();
        let f = random_linear(n, seed);
        let budget = 8 + seed;
        let d = depth_for_size(n - 1);

        let m = MetricInstance::from_graph(&g, 0, budget).unwrap();
        let (opt, _) = brute_force_sto(m.cost(), 0, &f, budget, &ob).unwrap();
        let sub = Subproblem::top(0, budget, d);
        for (name, sol) in [("rg", rg(&m, &f, &sub)), ("rg-qp", rg_qp(&m, &f, &sub)), ("rg-fast", rg_fast(&m, &f, &sub, 2))] {
            let t = sol.into_tree().unwrap();
            assert!(f.eval(t.vertices()) <= opt, "{name} beat the oracle on seed {seed}");
            let req = Requirements { root: 0, budget: Some(budget), metric: Some(m.cost()), ..Default::default() };
            validate(&t, &req).unwrap_or_else(|e| panic!("{name} seed {seed}: {e:?}"));
        }

        let tc = build_two_cost_closure(&g, 12);
        let length_budget = 6;
        let c = Constraint::Length { closure: &tc, length_budget, charged: VertexSet::full(n) };
        let (opt, _) = brute_force_constrained(&c, 0, &f, budget, &ob).unwrap();
        let t = rg_dc(&tc, &f, &ConstrainedSubproblem::top(0, budget, length_budget, d)).into_tree().unwrap();
        assert!(f.eval(t.vertices()) <= opt);
        let req = Requirements {
            root: 0,
            budget: Some(budget),
            two_cost: Some(&tc),
            length_budget: Some(LengthBudget { limit: length_budget, offset: 0, charged: VertexSet::full(n) }),
            ..Default::default()
        };
        validate(&t, &req).unwrap_or_else(|e| panic!("rg-dc seed {seed}: {e:?}"));

        let deadlines: Vec<u64> = (0..n as u64).map(|v| (v * 3 + seed) % 7).collect();
        let c = Constraint::Deadline { closure: &tc, deadlines: &deadlines };
        let (opt, _) = brute_force_constrained(&c, 0, &f, budget, &ob).unwrap();
        let t = rg_dl(&tc, &f, &deadlines, &ConstrainedSubproblem::top(0, budget, u64::MAX, d)).into_tree().unwrap();
        assert!(gated_value(&f, &t, &Gate::deadlines(deadlines.clone())) <= opt);

        let pg = generate(Family::Priority, &GenParams { levels: 2, ..p.clone() });
        let pc = build_priority_closure(&pg.graph(), 2);
        let requirement = pg.requirements();
        let c = Constraint::Priority { closure: &pc, requirement: &requirement };
        let (opt, _) = brute_force_constrained(&c, 0, &f, budget, &ob).unwrap();
        let t = rg_pr(&pc, &f, &requirement, &ConstrainedSubproblem::top(0, budget, u64::MAX, d)).into_tree().unwrap();
        assert!(gated_value(&f, &t, &Gate::priorities(requirement.clone())) <= opt);
    }
}

#[test]
fn deadline_engine_prefers_the_empty_tree_when_late() {
    let g = DirectedGraph::from_edges(2, [Edge::new(0, 1, 1).with_length(2)]);
    let tc = build_two_cost_closure(&g, 4);
    let f = LinearRewards::new(vec![0, 5]);
    let sub = ConstrainedSubproblem::top(0, 10, u64::MAX, 1);
    let late = rg_dl(&tc, &f, &[0, 1], &sub).into_tree().unwrap();
    assert!(late.is_single());
    let on_time = rg_dl(&tc, &f, &[0, 2], &sub).into_tree().unwrap();
    assert_eq!(gated_value(&f, &on_time, &Gate::deadlines(vec![0, 2])), 5);
}

#[test]
fn oversized_instances_are_refused() {
    let m = CostMatrix::filled(5, 1);
    let f = LinearRewards::new(vec![1; 5]);
    let small = OracleBudget::default().with_max_vertices(4);
    assert!(matches!(brute_force_sto(&m, 0, &f, 3, &small), Err(arbor::Error::TooLarge(_))));
}
