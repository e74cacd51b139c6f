//! Budgeted submodular tree orienteering on a complete cost metric.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::arborescence::{merge_and_prune, Arborescence, TreeEdge};
use crate::closure::{build_metric_closure, CostMatrix, INFEASIBLE_COST};
use crate::engine::{solve_frame, Model, RecursionParams, Search, Stats};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::oracle::RewardOracle;
use crate::set::VertexSet;
use crate::VertexId;

/// A complete directed metric with a root and a cost budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricInstance {
    root: VertexId,
    cost: CostMatrix,
    budget: u64,
}

impl MetricInstance {
    /// Rejects matrices violating the directed triangle inequality.
    pub fn new(cost: CostMatrix, root: VertexId, budget: u64) -> Result<Self> {
        if root >= cost.n() {
            return Err(Error::Invalid(format!("root {root} out of range")));
        }
        if cost.n() > crate::set::MAX_VERTICES {
            return Err(Error::Invalid(format!("{} vertices exceed the limit of 64", cost.n())));
        }
        if !cost.satisfies_triangle_inequality() {
            return Err(Error::Invalid("cost matrix violates the triangle inequality".into()));
        }
        if budget >= INFEASIBLE_COST {
            return Err(Error::Invalid("budget too large".into()));
        }
        Ok(MetricInstance { root, cost, budget })
    }

    /// Metric closure of `g`.
    pub fn from_graph(g: &DirectedGraph, root: VertexId, budget: u64) -> Result<Self> {
        Self::new(build_metric_closure(g).matrix, root, budget)
    }

    pub fn n(&self) -> usize {
        self.cost.n()
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn cost(&self) -> &CostMatrix {
        &self.cost
    }

    pub fn with_budget(&self, budget: u64) -> Self {
        MetricInstance { budget, ..self.clone() }
    }

    /// Largest finite off-diagonal cost.
    pub fn max_edge_cost(&self) -> u64 {
        let n = self.n();
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && self.cost.is_finite(u, v))
            .map(|(u, v)| self.cost.get(u, v))
            .max()
            .unwrap_or(0)
    }
}

/// Which recursion answers a cost-only instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineKind {
    Rg,
    RgQp,
    RgFast,
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineKind::Rg => "rg",
            EngineKind::RgQp => "rg-qp",
            EngineKind::RgFast => "rg-fast",
        })
    }
}

impl FromStr for EngineKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rg" => Ok(EngineKind::Rg),
            "rg-qp" => Ok(EngineKind::RgQp),
            "rg-fast" => Ok(EngineKind::RgFast),
            _ => Err(Error::Invalid(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub engine: EngineKind,
    /// Scales the default block size of `rg-fast`.
    pub epsilon: f64,
    /// Explicit recursion depth; otherwise derived from `k_cap`.
    pub depth: Option<usize>,
    /// Bound on the optimum's vertex count; defaults to `n - 1`.
    pub k_cap: Option<usize>,
    /// Explicit `rg-fast` block size.
    pub block: Option<usize>,
    pub workers: usize,
    /// Panic on a frame-invariant violation instead of only counting it.
    pub debug_checks: bool,
    /// Re-check every budget bisection with a linear scan.
    pub verify_search: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            engine: EngineKind::Rg,
            epsilon: 1.0,
            depth: None,
            k_cap: None,
            block: None,
            workers: 1,
            debug_checks: cfg!(debug_assertions),
            verify_search: false,
        }
    }
}

impl SolverConfig {
    pub fn with_engine(engine: EngineKind) -> Self {
        SolverConfig { engine, ..Self::default() }
    }

    /// `d = ⌈log_{3/2} k⌉` (at least 1) with `k` the size cap.
    pub fn depth_for(&self, n: usize) -> usize {
        self.depth.unwrap_or_else(|| depth_for_size(self.k_cap.unwrap_or(n.saturating_sub(1))))
    }

    /// `max(1, ⌊ε · log₂ log₂ k⌋)` clamped to `1..=d`.
    pub fn block_for(&self, n: usize) -> usize {
        let d = self.depth_for(n);
        let s = self.block.unwrap_or_else(|| {
            let k = self.k_cap.unwrap_or(n.saturating_sub(1)) as f64;
            let ll = if k > 2.0 { k.log2().log2() } else { 0.0 };
            (self.epsilon * ll).floor().max(1.0) as usize
        });
        s.clamp(1, d)
    }
}

/// Smallest `d >= 1` with `(3/2)^d >= k`.
pub fn depth_for_size(k: usize) -> usize {
    let mut d = 1usize;
    let (mut num, mut den) = (3u128, 2u128);
    while num < (k as u128) * den {
        d += 1;
        num *= 3;
        den *= 2;
    }
    d
}

/// `⌊(3/2)^i⌋`.
pub fn size_bound(i: usize) -> usize {
    let (mut num, mut den) = (1u128, 1u128);
    for _ in 0..i {
        num *= 3;
        den *= 2;
        if num / den > 1 << 40 {
            return usize::MAX;
        }
    }
    (num / den) as usize
}

/// A recursion frame: root, responsibilities, budget, collected vertices, depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subproblem {
    pub root: VertexId,
    pub required: VertexSet,
    pub budget: u64,
    pub augment: VertexSet,
    pub depth: usize,
}

impl Subproblem {
    /// The top frame `(root, ∅, budget, ∅, depth)`.
    pub fn top(root: VertexId, budget: u64, depth: usize) -> Self {
        Subproblem { root, required: VertexSet::EMPTY, budget, augment: VertexSet::EMPTY, depth }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Tree(Arborescence),
    Infeasible,
}

impl Solution {
    pub fn tree(&self) -> Option<&Arborescence> {
        match self {
            Solution::Tree(t) => Some(t),
            Solution::Infeasible => None,
        }
    }

    pub fn into_tree(self) -> Option<Arborescence> {
        match self {
            Solution::Tree(t) => Some(t),
            Solution::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Solution::Infeasible)
    }
}

/// Cost-only trees on the metric closure.
pub(crate) struct PlainModel<'a> {
    pub cost: &'a CostMatrix,
}

impl Model for PlainModel<'_> {
    type Ctx = ();
    const PLAIN: bool = true;

    fn n(&self) -> usize {
        self.cost.n()
    }

    fn edges(&self, r: VertexId, v: VertexId, _: (), out: &mut Vec<TreeEdge>) {
        if self.cost.is_finite(r, v) {
            out.push(TreeEdge::new(r, self.cost.get(r, v)));
        }
    }

    fn merge(&self, t1: &Arborescence, t2: &Arborescence) -> Arborescence {
        merge_and_prune(t1, t2).expect("right root lies in the left tree")
    }

    fn right_ctx(&self, _: (), _: &Arborescence, _: VertexId) {}

    fn claimed(&self, t: &Arborescence, _: ()) -> VertexSet {
        t.vertices()
    }

    fn charge(&self, _: &Arborescence, _: ()) -> u64 {
        0
    }

    fn bounds(&self, _: &Arborescence, _: VertexSet) -> Vec<u64> {
        Vec::new()
    }
}

/// Solution of a frame together with the run's counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub solution: Solution,
    pub stats: Stats,
}

fn check_subproblem(m: &MetricInstance, sub: &Subproblem) {
    assert!(sub.root < m.n(), "root out of range");
    assert!(!sub.required.contains(sub.root), "the root may not be a responsibility vertex");
    assert!(sub.required.is_subset(VertexSet::full(m.n())), "responsibility out of range");
    assert!(sub.depth >= 1, "depth must be at least 1");
}

pub(crate) fn plain_params(m: &MetricInstance, sub: &Subproblem, search: Search, cfg: &SolverConfig) -> RecursionParams {
    RecursionParams {
        budget_cap: sub.budget,
        length_cap: u64::MAX,
        depth_limit: sub.required.len() + sub.depth,
        search,
        verify: cfg.verify_search,
        strict: cfg.debug_checks,
        loop_cap: (m.n() as u64).saturating_mul(m.max_edge_cost()),
    }
}

fn run_plain(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem, search: Search, cfg: &SolverConfig) -> Run {
    check_subproblem(m, sub);
    let model = PlainModel { cost: m.cost() };
    let params = plain_params(m, sub, search, cfg);
    let (fr, stats) = solve_frame(&model, f, params, sub.root, (), sub.required, sub.augment, sub.depth, cfg.workers);
    let solution = match fr.best_within(sub.budget) {
        Some(o) => Solution::Tree((*o.tree).clone()),
        None => Solution::Infeasible,
    };
    Run { solution, stats }
}

/// Recursive greedy with a linear budget split loop.
pub fn rg(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem) -> Solution {
    rg_run(m, f, sub, &SolverConfig::default()).solution
}

pub fn rg_run(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem, cfg: &SolverConfig) -> Run {
    run_plain(m, f, sub, Search::Linear, cfg)
}

/// Recursive greedy with the left budget found by bisection per target value.
pub fn rg_qp(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem) -> Solution {
    rg_qp_run(m, f, sub, &SolverConfig::default()).solution
}

pub fn rg_qp_run(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem, cfg: &SolverConfig) -> Run {
    run_plain(m, f, sub, Search::Bisect, cfg)
}

/// Least budget `b <= m.budget()` at which [`rg_qp`] on `(r, y, b, x, i)`
/// reaches value `u`; `None` when even the full budget falls short.
pub fn min_budget_for_value(
    m: &MetricInstance,
    f: &dyn RewardOracle,
    r: VertexId,
    y: VertexSet,
    x: VertexSet,
    i: usize,
    u: u64,
) -> Option<u64> {
    let sub = Subproblem { root: r, required: y, budget: m.budget(), augment: x, depth: i };
    check_subproblem(m, &sub);
    if u > f.upper_bound() {
        return None;
    }
    let model = PlainModel { cost: m.cost() };
    let params = plain_params(m, &sub, Search::Bisect, &SolverConfig::default());
    let (fr, _) = solve_frame(&model, f, params, r, (), y, x, i, 1);
    crate::engine::least_budget(&fr, u, m.budget()).0
}

/// Outcome of a top-level orienteering solve.
#[derive(Debug, Clone, PartialEq)]
pub struct StoReport {
    pub engine: EngineKind,
    pub depth: usize,
    pub block: Option<usize>,
    pub value: u64,
    pub cost: u64,
    pub wall_ms: u128,
    pub stats: Stats,
}

/// Runs the configured engine on `(root, ∅, B, ∅, d)`. The empty tree is the
/// answer when nothing better fits.
pub fn solve_sto(m: &MetricInstance, f: &dyn RewardOracle, cfg: &SolverConfig) -> (Arborescence, StoReport) {
    let start = Instant::now();
    let n = m.n();
    let d = cfg.depth_for(n);
    let (run, block) = match cfg.engine {
        EngineKind::Rg => (rg_run(m, f, &Subproblem::top(m.root(), m.budget(), d), cfg), None),
        EngineKind::RgQp => (rg_qp_run(m, f, &Subproblem::top(m.root(), m.budget(), d), cfg), None),
        EngineKind::RgFast => {
            let s = cfg.block_for(n);
            let blocks = d.div_ceil(s);
            (crate::fast::rg_fast_run(m, f, &Subproblem::top(m.root(), m.budget(), blocks), s, cfg), Some(s))
        }
    };
    let tree = run.solution.into_tree().unwrap_or_else(|| Arborescence::single(m.root()));
    let value = f.eval(tree.vertices());
    let report = StoReport {
        engine: cfg.engine,
        depth: d,
        block,
        value,
        cost: tree.cost(),
        wall_ms: start.elapsed().as_millis(),
        stats: run.stats,
    };
    (tree, report)
}
