//! Randomized properties checked against independent recomputations.

mod common;

use std::path::Path;

use arbor::arborescence::{merge_and_prune, merge_by_length, merge_by_priority, Arborescence, TreeEdge};
use arbor::closure::{build_metric_closure, build_priority_closure, build_two_cost_closure, CostMatrix, INFEASIBLE_COST};
use arbor::exact::{brute_force_min_cover, brute_force_sto, CoverTarget, OracleBudget};
use arbor::fast::rg_fast;
use arbor::generate::{generate, Family, GenParams};
use arbor::graph::{DirectedGraph, Edge};
use arbor::greedy::{
    depth_for_size, min_budget_for_value, rg, rg_qp, solve_sto, EngineKind, MetricInstance, SolverConfig, Subproblem,
};
use arbor::instance::Instance;
use arbor::min_arb::min_arborescence;
use arbor::oracle::{contract, gated_value, rank_oracle, Gate, LinearRewards, Matroid, RewardOracle};
use arbor::reductions::concave_to_two_cost;
use arbor::VertexSet;
use common::{naive_best, random_coverage, random_linear, random_matroid, rng};
use proptest::prelude::*;
use rand::Rng;

const N: usize = 8;

fn graphic_four_cycle_plus(n: usize) -> Matroid {
    // vertices 1..=4 are the cycle edges, 5 is a chord, 6 and 7 a pendant path
    let mut edges = vec![None; n];
    let shape = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5)];
    for (i, e) in shape.iter().enumerate() {
        if i + 1 < n {
            edges[i + 1] = Some(*e);
        }
    }
    Matroid::Graphic { nodes: 6, edges }
}

fn oracles(seed: u64) -> Vec<(&'static str, Box<dyn RewardOracle>)> {
    let mut r = rng(seed);
    let c = VertexSet(r.gen::<u64>() & ((1 << N) - 2));
    vec![
        ("linear", Box::new(random_linear(N, seed))),
        ("coverage", Box::new(random_coverage(N, seed))),
        ("matroid rank", Box::new(rank_oracle(&random_matroid(N, seed)))),
        ("graphic rank", Box::new(rank_oracle(&graphic_four_cycle_plus(N)))),
        ("contracted rank", Box::new(contract(&random_matroid(N, seed.wrapping_add(1)), c))),
        ("contracted graphic", Box::new(contract(&graphic_four_cycle_plus(N), c))),
    ]
}

fn small_set() -> impl Strategy<Value = VertexSet> {
    (0u64..(1 << N)).prop_map(VertexSet)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn oracles_are_monotone_and_submodular(seed in 0u64..64, s in small_set(), extra in small_set(), x in 0usize..N) {
        let t = s.union(extra);
        for (name, f) in oracles(seed) {
            prop_assert!(f.eval(s) <= f.eval(t), "{name}: f(S) > f(T)");
            if !t.contains(x) {
                let gain_s = f.eval(s.with(x)) - f.eval(s);
                let gain_t = f.eval(t.with(x)) - f.eval(t);
                prop_assert!(gain_s >= gain_t, "{name}: exchange inequality fails");
            }
            prop_assert!(f.eval(t) <= f.upper_bound(), "{name}: value above upper bound");
            prop_assert_eq!(f.marginal(t, s), f.eval(t.union(s)) - f.eval(t));
            if s.is_subset(t) {
                prop_assert_eq!(f.marginal(t, s), 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn marginals_stay_monotone_submodular(seed in 0u64..1000, x in 0u64..32) {
        let ground = VertexSet::full(5);
        let x = VertexSet(x);
        for (name, f) in oracles(seed) {
            let g = |s: VertexSet| f.marginal(x, s);
            for t in ground.subsets() {
                for s in t.subsets() {
                    prop_assert!(g(s) <= g(t), "{name}: marginal not monotone");
                    for v in ground.difference(t).iter() {
                        prop_assert!(g(s.with(v)) - g(s) >= g(t.with(v)) - g(t), "{name}: marginal not submodular");
                    }
                }
            }
        }
    }
}

/// A random tree on a random vertex subset, each vertex hanging off an
/// earlier one.
fn random_tree(n: usize, seed: u64, root: usize) -> Arborescence {
    let mut r = rng(seed);
    let mut placed = vec![root];
    let mut edges = Vec::new();
    for v in (0..n).filter(|&v| v != root) {
        if r.gen_bool(0.3) {
            continue;
        }
        let p = placed[r.gen_range(0..placed.len())];
        let e = TreeEdge::new(p, r.gen_range(0..8)).with_length(r.gen_range(0..4)).with_priority(r.gen_range(1..=3));
        edges.push((v, e));
        placed.push(v);
    }
    Arborescence::from_edges(root, edges).unwrap()
}

/// Root-path (length, min priority) of every vertex by walking parents.
fn walk(t: &Arborescence, v: usize) -> (u64, u32) {
    let (mut len, mut pr, mut cur) = (0, u32::MAX, v);
    while cur != t.root() {
        let e = t.in_edge(cur).unwrap();
        len += e.length;
        pr = pr.min(e.priority);
        cur = e.parent;
    }
    (len, pr)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gated_values_filter_then_evaluate(seed in 0u64..100_000) {
        let mut r = rng(seed ^ 7);
        let t = random_tree(N, seed, 0);
        let f = random_linear(N, seed);
        let deadlines: Vec<u64> = (0..N).map(|_| r.gen_range(0..8)).collect();
        let requirement: Vec<u32> = (0..N).map(|_| r.gen_range(1..=3)).collect();
        let by_deadline: VertexSet = t.vertices().iter().filter(|&v| walk(&t, v).0 <= deadlines[v]).collect();
        let by_priority: VertexSet = t.vertices().iter().filter(|&v| walk(&t, v).1 >= requirement[v]).collect();
        let dv = gated_value(&f, &t, &Gate::deadlines(deadlines));
        let pv = gated_value(&f, &t, &Gate::priorities(requirement));
        prop_assert_eq!(dv, f.eval(by_deadline));
        prop_assert_eq!(pv, f.eval(by_priority));
        prop_assert!(dv <= f.eval(t.vertices()) && pv <= f.eval(t.vertices()));
    }

    #[test]
    fn derived_tree_quantities_match_walks(seed in 0u64..100_000) {
        let t = random_tree(N, seed, 0);
        let lengths = t.lengths();
        let prios = t.min_priorities();
        for v in t.vertices().iter() {
            let (len, pr) = walk(&t, v);
            prop_assert_eq!(lengths[v], len);
            prop_assert_eq!(t.path_length(v), Some(len));
            if v != t.root() {
                prop_assert_eq!(prios[v], pr);
            }
        }
        prop_assert_eq!(t.cost(), t.edges().iter().map(|(_, e)| e.cost).sum::<u64>());
    }

    #[test]
    fn merges_keep_every_vertex_and_never_add_cost(seed in 0u64..100_000) {
        let t1 = random_tree(N, seed, 0);
        let verts: Vec<usize> = t1.vertices().iter().collect();
        let hang = verts[(seed as usize) % verts.len()];
        let t2 = random_tree(N, seed.wrapping_mul(31) + 1, hang);
        for (name, m) in [
            ("cost", merge_and_prune(&t1, &t2).unwrap()),
            ("length", merge_by_length(&t1, &t2).unwrap()),
            ("priority", merge_by_priority(&t1, &t2).unwrap()),
        ] {
            prop_assert_eq!(m.root(), 0, "{} merge changed the root", name);
            prop_assert_eq!(m.vertices(), t1.vertices().union(t2.vertices()), "{} merge lost a vertex", name);
            prop_assert!(m.cost() <= t1.cost() + t2.cost(), "{} merge added cost", name);
            // every vertex reachable from the root through recorded in-edges
            for v in m.vertices().iter() {
                let mut cur = v;
                let mut steps = 0;
                while cur != 0 {
                    cur = m.in_edge(cur).unwrap().parent;
                    steps += 1;
                    prop_assert!(steps <= N);
                }
            }
        }
        let plain = merge_and_prune(&t1, &t2).unwrap();
        for v in t1.vertices().iter().filter(|&v| v != 0) {
            prop_assert_eq!(plain.in_edge(v), t1.in_edge(v));
        }
        let bylen = merge_by_length(&t1, &t2).unwrap();
        let (l1, lm) = (t1.lengths(), bylen.lengths());
        for v in t1.vertices().iter() {
            prop_assert!(lm[v] <= l1[v]);
        }
        let bypr = merge_by_priority(&t1, &t2).unwrap();
        let (p1, pm) = (t1.min_priorities(), bypr.min_priorities());
        for v in t1.vertices().iter().filter(|&v| v != 0) {
            prop_assert!(pm[v] >= p1[v]);
        }
    }
}

fn random_graph(n: usize, seed: u64, density: f64, max_len: u64, levels: u32) -> DirectedGraph {
    let mut r = rng(seed);
    let mut g = DirectedGraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && r.gen_bool(density) {
                let copies = if r.gen_bool(0.2) { 2 } else { 1 };
                for _ in 0..copies {
                    g.add_edge(
                        Edge::new(u, v, r.gen_range(0..=12))
                            .with_length(r.gen_range(0..=max_len))
                            .with_priority(r.gen_range(1..=levels)),
                    );
                }
            }
        }
    }
    g
}

/// Single-source label correcting: relax every edge until nothing changes.
fn bellman_ford(g: &DirectedGraph, s: usize, keep: impl Fn(&Edge) -> bool) -> Vec<Option<u64>> {
    let mut d = vec![None; g.n()];
    d[s] = Some(0);
    loop {
        let mut changed = false;
        for e in g.edges().iter().filter(|e| keep(e)) {
            if let Some(du) = d[e.from] {
                if d[e.to].is_none_or(|dv| du + e.cost < dv) {
                    d[e.to] = Some(du + e.cost);
                    changed = true;
                }
            }
        }
        if !changed {
            return d;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn metric_closure_matches_label_correcting(seed in 0u64..100_000) {
        let g = random_graph(N, seed, 0.3, 0, 1);
        let mc = build_metric_closure(&g);
        for s in 0..N {
            let d = bellman_ford(&g, s, |_| true);
            for v in 0..N {
                let want = d[v].unwrap_or(INFEASIBLE_COST);
                prop_assert_eq!(mc.cost(s, v), want, "pair {} -> {}", s, v);
                if let Some(path) = mc.path(&g, s, v) {
                    let total: u64 = path.iter().map(|&e| g.edges()[e].cost).sum();
                    prop_assert_eq!(total, want);
                    let mut at = s;
                    for &e in &path {
                        prop_assert_eq!(g.edges()[e].from, at);
                        at = g.edges()[e].to;
                    }
                    prop_assert_eq!(at, v);
                } else {
                    prop_assert!(want == INFEASIBLE_COST);
                }
            }
        }
        let m = &mc.matrix;
        for u in 0..N {
            for v in 0..N {
                for w in 0..N {
                    if m.is_finite(u, v) && m.is_finite(v, w) {
                        prop_assert!(m.get(u, w) <= m.get(u, v) + m.get(v, w));
                    }
                }
            }
        }
        prop_assert!(m.satisfies_triangle_inequality());
    }

    #[test]
    fn priority_closure_grows_with_level(seed in 0u64..100_000) {
        let g = random_graph(N, seed, 0.35, 0, 3);
        let pc = build_priority_closure(&g, 3);
        for q in 1..=3 {
            let d: Vec<Vec<Option<u64>>> = (0..N).map(|s| bellman_ford(&g, s, |e| e.priority_or_lowest() >= q)).collect();
            for u in 0..N {
                for v in 0..N {
                    prop_assert_eq!(pc.cost(q, u, v), d[u][v].unwrap_or(INFEASIBLE_COST));
                    if q > 1 {
                        prop_assert!(pc.cost(q, u, v) >= pc.cost(q - 1, u, v));
                    }
                }
            }
        }
    }
}

/// Pareto set of (cost, length) over all simple paths with length <= cap.
fn simple_path_pareto(g: &DirectedGraph, s: usize, t: usize, cap: u64) -> Vec<(u64, u64)> {
    let mut found = Vec::new();
    fn dfs(g: &DirectedGraph, at: usize, t: usize, seen: u64, c: u64, l: u64, cap: u64, out: &mut Vec<(u64, u64)>) {
        if at == t {
            out.push((c, l));
            return;
        }
        for e in g.edges().iter().filter(|e| e.from == at && seen & (1 << e.to) == 0) {
            let nl = l + e.len_or_zero();
            if nl <= cap {
                dfs(g, e.to, t, seen | (1 << e.to), c + e.cost, nl, cap, out);
            }
        }
    }
    dfs(g, s, t, 1 << s, 0, 0, cap, &mut found);
    let mut pareto: Vec<(u64, u64)> = found
        .iter()
        .copied()
        .filter(|&(c, l)| !found.iter().any(|&(c2, l2)| c2 <= c && l2 <= l && (c2, l2) != (c, l)))
        .collect();
    pareto.sort();
    pareto.dedup();
    pareto
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn two_cost_frontiers_match_simple_paths(seed in 0u64..100_000, cap in 0u64..12) {
        let n = 6;
        let g = random_graph(n, seed, 0.4, 5, 1);
        let tc = build_two_cost_closure(&g, cap);
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                let fr = tc.frontier(u, v);
                let got: Vec<(u64, u64)> = fr.iter().map(|e| (e.cost, e.length)).collect();
                prop_assert_eq!(&got, &simple_path_pareto(&g, u, v, cap), "pair {} -> {}", u, v);
                prop_assert!(got.len() as u64 <= cap + 1);
                for w in got.windows(2) {
                    prop_assert!(w[0].0 < w[1].0 && w[0].1 > w[1].1, "dominated pair in frontier");
                }
                for e in fr {
                    let (mut at, mut c, mut l) = (u, 0, 0);
                    for &ix in &e.path {
                        let edge = g.edges()[ix];
                        prop_assert_eq!(edge.from, at);
                        c += edge.cost;
                        l += edge.len_or_zero();
                        at = edge.to;
                    }
                    prop_assert_eq!((at, c, l), (v, e.cost, e.length));
                }
            }
        }
    }
}

/// Minimum arborescence spanning exactly `w` by trying every parent choice.
fn enumerate_min_arborescence(m: &CostMatrix, root: usize, w: VertexSet) -> Option<u64> {
    let others: Vec<usize> = w.without(root).iter().collect();
    let members: Vec<usize> = w.iter().collect();
    let mut best = None;
    let mut choice = vec![0usize; others.len()];
    loop {
        let parent = |v: usize| members[choice[others.iter().position(|&o| o == v).unwrap()]];
        let ok = others.iter().all(|&v| {
            let (mut cur, mut steps) = (v, 0);
            while cur != root && steps <= others.len() {
                let p = parent(cur);
                if p == cur || !m.is_finite(p, cur) {
                    return false;
                }
                cur = p;
                steps += 1;
            }
            cur == root
        });
        if ok {
            let c: u64 = others.iter().map(|&v| m.get(parent(v), v)).sum();
            best = Some(best.map_or(c, |b: u64| b.min(c)));
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return best;
            }
            choice[i] += 1;
            if choice[i] < members.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn random_matrix(n: usize, seed: u64, hole: f64) -> CostMatrix {
    let mut r = rng(seed);
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|v| if u == v { 0 } else if r.gen_bool(hole) { INFEASIBLE_COST } else { r.gen_range(0..=20) }).collect())
        .collect();
    CostMatrix::from_rows(&rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn min_arborescence_matches_enumeration(seed in 0u64..100_000, mask in 0u64..128) {
        let m = random_matrix(7, seed, 0.25);
        let w = VertexSet(mask).with(0);
        let want = enumerate_min_arborescence(&m, 0, w);
        match min_arborescence(&m, 0, w) {
            Ok(t) => {
                prop_assert_eq!(Some(t.cost()), want);
                prop_assert_eq!(t.vertices(), w);
            }
            Err(_) => prop_assert_eq!(want, None),
        }
    }
}

/// Minimum cost over every parent-function tree spanning `terminals`.
fn enumerate_steiner(m: &CostMatrix, terminals: VertexSet) -> Option<u64> {
    let n = m.n();
    let rest = VertexSet::full(n).without(0);
    rest.subsets().filter(|w| terminals.without(0).is_subset(*w)).filter_map(|w| enumerate_min_arborescence(m, 0, w.with(0))).min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn steiner_oracles_agree(seed in 0u64..100_000, terminals in 1u64..64) {
        let m = random_matrix(6, seed, 0.2);
        let terminals = VertexSet(terminals << 1).intersection(VertexSet::full(6));
        let got = brute_force_min_cover(&CoverTarget::Steiner { cost: &m, terminals }, 0, &OracleBudget::default()).unwrap();
        prop_assert_eq!(got.map(|(c, _)| c), enumerate_steiner(&m, terminals));
    }

    #[test]
    fn subset_oracle_matches_parent_enumeration(seed in 0u64..100_000, budget in 0u64..40) {
        let g = generate(Family::RandomMetric, &GenParams { n: 5, seed, ..GenParams::default() }).graph();
        let m = build_metric_closure(&g).matrix;
        for (name, f) in [("linear", Box::new(random_linear(5, seed)) as Box<dyn RewardOracle>), ("coverage", Box::new(random_coverage(5, seed)))] {
            let (value, t) = brute_force_sto(&m, 0, f.as_ref(), budget, &OracleBudget::default()).unwrap();
            prop_assert_eq!(value, naive_best(&m, f.as_ref(), budget), "{}", name);
            prop_assert_eq!(f.eval(t.vertices()), value);
            prop_assert!(t.cost() <= budget);
        }
    }
}

fn metric_instance(n: usize, seed: u64, budget: u64) -> MetricInstance {
    let g = generate(Family::RandomMetric, &GenParams { n, seed, ..GenParams::default() }).graph();
    MetricInstance::from_graph(&g, 0, budget).unwrap()
}

fn value_of(f: &dyn RewardOracle, x: VertexSet, s: &arbor::greedy::Solution) -> Option<u64> {
    s.tree().map(|t| f.marginal(x, t.vertices()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn values_grow_with_budget(seed in 0u64..100_000, x in 0u64..64, y in 0u64..64) {
        let n = 6;
        let m = metric_instance(n, seed, 20);
        let f = random_coverage(n, seed);
        let x = VertexSet(x << 1).intersection(VertexSet::full(n));
        let y = if y % 3 == 0 { VertexSet(y << 1).intersection(VertexSet::full(n)).difference(x) } else { VertexSet::EMPTY };
        let d = depth_for_size(n - 1);
        for (name, engine) in [("rg", rg as fn(&_, &_, &_) -> _), ("rg-qp", rg_qp)] {
            let mut prev: Option<u64> = None;
            for b in 1..=20 {
                let sub = Subproblem { root: 0, required: y, budget: b, augment: x, depth: d };
                let v = value_of(&f, x, &engine(&m, &f, &sub));
                if let (Some(p), Some(v)) = (prev, v) {
                    prop_assert!(v >= p, "{}: value fell from {} to {} at budget {}", name, p, v, b);
                }
                prop_assert!(prev.is_none() || v.is_some(), "{}: feasible then infeasible at budget {}", name, b);
                prev = v.or(prev);
            }
        }
    }

    #[test]
    fn least_budget_matches_linear_scan(seed in 0u64..100_000, x in 0u64..64) {
        let n = 6;
        let max_b = 20;
        let m = metric_instance(n, seed, max_b);
        let f = random_linear(n, seed);
        let x = VertexSet(x << 1).intersection(VertexSet::full(n));
        let d = depth_for_size(n - 1);
        let values: Vec<u64> = (0..=max_b)
            .map(|b| value_of(&f, x, &rg_qp(&m, &f, &Subproblem { root: 0, required: VertexSet::EMPTY, budget: b, augment: x, depth: d })).unwrap())
            .collect();
        for u in 1..=f.upper_bound() + 1 {
            let scan = (0..=max_b).find(|&b| values[b as usize] >= u);
            prop_assert_eq!(min_budget_for_value(&m, &f, 0, VertexSet::EMPTY, x, d, u), scan, "target {}", u);
        }
    }

    #[test]
    fn single_level_blocks_reproduce_rg(seed in 0u64..100_000, budget in 0u64..40) {
        let n = 7;
        let m = metric_instance(n, seed, budget);
        let f = random_coverage(n, seed);
        let sub = Subproblem::top(0, budget, depth_for_size(n - 1));
        let plain = rg(&m, &f, &sub);
        let fast = rg_fast(&m, &f, &sub, 1);
        prop_assert_eq!(value_of(&f, VertexSet::EMPTY, &fast), value_of(&f, VertexSet::EMPTY, &plain));
    }

    #[test]
    fn repeated_runs_are_identical(seed in 0u64..100_000, budget in 0u64..40) {
        let n = 7;
        let m = metric_instance(n, seed, budget);
        let f = random_coverage(n, seed);
        for engine in [EngineKind::Rg, EngineKind::RgQp, EngineKind::RgFast] {
            let cfg = SolverConfig::with_engine(engine);
            let (t1, r1) = solve_sto(&m, &f, &cfg);
            let (t2, r2) = solve_sto(&m, &f, &cfg);
            prop_assert_eq!(t1, t2);
            prop_assert_eq!((r1.value, r1.cost, r1.stats), (r2.value, r2.cost, r2.stats));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn envelope_reproduces_concave_samples(x_steps in prop::collection::vec(1u64..6, 1..6), drops in prop::collection::vec(0u64..4, 6), base in 0u64..10, top in 0u64..12) {
        // strictly decreasing integer slopes starting from `top + len`
        let mut slope = top + x_steps.len() as u64 * 4;
        let mut samples = vec![(0u64, base)];
        for (i, &dx) in x_steps.iter().enumerate() {
            let (x0, g0) = *samples.last().unwrap();
            samples.push((x0 + dx, g0 + slope * dx));
            slope = slope.saturating_sub(drops[i] + 1);
        }
        let lines = concave_to_two_cost(&samples).unwrap();
        prop_assert!(!lines.is_empty());
        for &(x, g) in &samples {
            let env = lines.iter().map(|&(sigma, rho)| sigma + rho * x).min().unwrap();
            prop_assert_eq!(env, g, "envelope differs at x = {}", x);
        }
        for w in lines.windows(2) {
            prop_assert!(w[0].1 > w[1].1 && w[0].0 < w[1].0);
        }
    }

    #[test]
    fn generated_files_round_trip(seed in 0u64..100_000, n in 2usize..10, family in 0usize..5) {
        let family = [Family::RandomMetric, Family::Layered, Family::StarTrap, Family::TwoCost, Family::Priority][family];
        let inst = generate(family, &GenParams { n, seed, levels: 3, ..GenParams::default() });
        let text = inst.emit();
        let back = Instance::parse(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.emit(), text);
    }
}

#[test]
fn bundled_suite_round_trips() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("suite");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let inst = Instance::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let again = Instance::parse(&inst.emit()).unwrap();
        assert_eq!(again, inst, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= 20);
}

#[test]
fn linear_oracle_has_exact_marginals() {
    let f = LinearRewards::new(vec![0, 3, 7]);
    let v = VertexSet::singleton(1);
    assert_eq!(f.marginal(v, v.with(2)), 7);
    assert_eq!(f.marginal(v.with(2), v), 0);
}
