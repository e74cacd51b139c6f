//! Covering drivers: repeated orienteering solves with unit rewards on the
//! still-uncovered terminals, wrapped in a doubling search over the budget.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arborescence::{merge_and_prune, merge_by_length, merge_by_priority, Arborescence, TreeEdge};
use crate::closure::{
    build_metric_closure, build_priority_closure, build_two_cost_closure, MetricClosure, PriorityClosure,
    TwoCostClosure, INFEASIBLE_COST,
};
use crate::constrained::{rg_dc_run, rg_pr_run, ConstrainedSubproblem};
use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Edge};
use crate::engine::Stats;
use crate::greedy::{depth_for_size, solve_sto, EngineKind, MetricInstance, SolverConfig};
use crate::oracle::{contract, LinearRewards, Matroid};
use crate::set::VertexSet;
use crate::VertexId;

/// One pass of the covering loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iteration {
    pub tree: Arborescence,
    /// Vertices the inner engine selected. Differs from the tree's vertices
    /// only when closure edges were expanded into original paths.
    pub selected: VertexSet,
    pub newly_covered: VertexSet,
    pub stats: Stats,
}

/// What one inner solve returns to [`cover_loop`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pass {
    pub tree: Arborescence,
    pub selected: VertexSet,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverOutcome {
    pub forest: Arborescence,
    pub covered: VertexSet,
    pub iterations: Vec<Iteration>,
}

/// A covering problem driven by [`cover_loop`].
pub trait CoverStep {
    fn root(&self) -> VertexId;
    /// A tree rooted at the root for the current budget, given what the
    /// forest already covers, and the vertices the inner engine selected.
    fn solve(&mut self, forest: &Arborescence, budget: u64) -> Result<Pass>;
    fn merge(&self, forest: &Arborescence, t: &Arborescence) -> Arborescence;
    /// Terminals (or ground elements) the forest covers.
    fn covered(&self, forest: &Arborescence) -> VertexSet;
    fn done(&self, covered: VertexSet) -> bool;
    /// Whether growing the cover from `before` to `after` is progress.
    fn progress(&self, before: VertexSet, after: VertexSet) -> bool {
        !after.difference(before).is_empty()
    }
}

fn pass(tree: Arborescence, stats: Stats) -> Pass {
    Pass { selected: tree.vertices(), tree, stats }
}

/// Solves, merges and marks until everything is covered. Fails with
/// [`Error::BudgetTooSmall`] on the first pass that makes no progress.
pub fn cover_loop(step: &mut dyn CoverStep, budget: u64) -> Result<CoverOutcome> {
    let mut forest = Arborescence::single(step.root());
    let mut covered = step.covered(&forest);
    let mut iterations = Vec::new();
    while !step.done(covered) {
        let Pass { tree: t, selected, stats } = step.solve(&forest, budget)?;
        let next = step.merge(&forest, &t);
        let now = step.covered(&next);
        if !step.progress(covered, now) {
            return Err(Error::BudgetTooSmall(budget));
        }
        iterations.push(Iteration { newly_covered: now.difference(covered), selected, tree: t, stats });
        forest = next;
        covered = now;
    }
    Ok(CoverOutcome { forest, covered, iterations })
}

/// Result of a covering driver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub tree: Arborescence,
    pub cost: u64,
    /// Cost, or cost plus terminal path lengths for buy-at-bulk.
    pub objective: u64,
    /// The budget guess that succeeded.
    pub budget: u64,
    pub rounds: usize,
    pub depth: usize,
    pub iterations: Vec<Iteration>,
}

impl CoverSolution {
    /// Engine counters summed over the passes at the accepted budget.
    pub fn stats(&self) -> Stats {
        let mut total = Stats::default();
        for it in &self.iterations {
            total.absorb(&it.stats);
        }
        total
    }
}

/// Driver settings. Inner plain solves default to `rg-qp`.
#[derive(Debug, Clone, PartialEq)]
pub struct DriverConfig {
    pub solver: SolverConfig,
}

impl Default for DriverConfig {
    fn default() -> Self {
        DriverConfig { solver: SolverConfig::with_engine(EngineKind::RgQp) }
    }
}

/// Depth for a driver whose optimum spans at most `2k` vertices.
fn driver_depth(cfg: &SolverConfig, n: usize, k: usize) -> usize {
    cfg.depth.unwrap_or_else(|| depth_for_size((2 * k).min(n.saturating_sub(1)).max(1)))
}

/// Budgets `1, 2, 4, …` up to the first power of two at or above `upper`;
/// just `0` when `upper` is 0.
fn guesses(upper: u64) -> Vec<u64> {
    if upper == 0 {
        return vec![0];
    }
    let mut out = vec![1u64];
    while *out.last().unwrap() < upper {
        out.push(out.last().unwrap().saturating_mul(2));
    }
    out
}

fn doubling(
    upper: u64,
    mut attempt: impl FnMut(u64) -> Result<CoverOutcome>,
) -> Result<(CoverOutcome, u64, usize)> {
    let gs = guesses(upper);
    let mut last = Error::BudgetTooSmall(0);
    for (i, &b) in gs.iter().enumerate() {
        match attempt(b) {
            Ok(o) => return Ok((o, b, i + 1)),
            Err(e @ Error::BudgetTooSmall(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

struct SteinerStep<'a> {
    metric: &'a MetricInstance,
    terminals: VertexSet,
    cfg: SolverConfig,
}

impl CoverStep for SteinerStep<'_> {
    fn root(&self) -> VertexId {
        self.metric.root()
    }

    fn solve(&mut self, forest: &Arborescence, budget: u64) -> Result<Pass> {
        let open = self.terminals.difference(forest.vertices());
        let f = LinearRewards::unit(self.metric.n(), open);
        let (t, report) = solve_sto(&self.metric.with_budget(budget), &f, &self.cfg);
        Ok(pass(t, report.stats))
    }

    fn merge(&self, forest: &Arborescence, t: &Arborescence) -> Arborescence {
        merge_and_prune(forest, t).expect("trees share the root")
    }

    fn covered(&self, forest: &Arborescence) -> VertexSet {
        forest.vertices().intersection(self.terminals)
    }

    fn done(&self, covered: VertexSet) -> bool {
        covered == self.terminals
    }
}

fn steiner_metric(cost: &crate::closure::CostMatrix, root: VertexId) -> Result<MetricInstance> {
    MetricInstance::new(cost.clone(), root, 0)
}

/// Directed Steiner tree on a metric: span `terminals` from `root` cheaply.
pub fn solve_directed_steiner(
    cost: &crate::closure::CostMatrix,
    root: VertexId,
    terminals: VertexSet,
    cfg: &DriverConfig,
) -> Result<CoverSolution> {
    let terminals = terminals.without(root);
    let mut upper = 0u64;
    for t in terminals.iter() {
        if !cost.is_finite(root, t) {
            return Err(Error::UnreachableTerminal(t));
        }
        upper += cost.get(root, t);
    }
    let depth = driver_depth(&cfg.solver, cost.n(), terminals.len());
    let (out, budget, rounds) = doubling(upper, |b| cover_steiner(cost, root, terminals, b, cfg))?;
    Ok(finish(out, budget, rounds, depth, |t| t.cost()))
}

/// One covering pass for directed Steiner tree at a fixed budget.
pub fn cover_steiner(
    cost: &crate::closure::CostMatrix,
    root: VertexId,
    terminals: VertexSet,
    budget: u64,
    cfg: &DriverConfig,
) -> Result<CoverOutcome> {
    let terminals = terminals.without(root);
    let metric = steiner_metric(cost, root)?;
    let depth = driver_depth(&cfg.solver, metric.n(), terminals.len());
    let solver = SolverConfig { depth: Some(depth), ..cfg.solver.clone() };
    cover_loop(&mut SteinerStep { metric: &metric, terminals, cfg: solver }, budget)
}

fn finish(out: CoverOutcome, budget: u64, rounds: usize, depth: usize, objective: impl Fn(&Arborescence) -> u64) -> CoverSolution {
    CoverSolution {
        cost: out.forest.cost(),
        objective: objective(&out.forest),
        tree: out.forest,
        budget,
        rounds,
        depth,
        iterations: out.iterations,
    }
}

struct PolymatroidStep<'a> {
    metric: &'a MetricInstance,
    matroid: &'a Matroid,
    full: usize,
    cfg: SolverConfig,
}

impl CoverStep for PolymatroidStep<'_> {
    fn root(&self) -> VertexId {
        self.metric.root()
    }

    fn solve(&mut self, forest: &Arborescence, budget: u64) -> Result<Pass> {
        let f = contract(self.matroid, forest.vertices());
        let (t, report) = solve_sto(&self.metric.with_budget(budget), &f, &self.cfg);
        Ok(pass(t, report.stats))
    }

    fn merge(&self, forest: &Arborescence, t: &Arborescence) -> Arborescence {
        merge_and_prune(forest, t).expect("trees share the root")
    }

    fn covered(&self, forest: &Arborescence) -> VertexSet {
        forest.vertices().intersection(self.matroid.ground())
    }

    fn done(&self, covered: VertexSet) -> bool {
        self.matroid.rank(covered) == self.full
    }

    fn progress(&self, before: VertexSet, after: VertexSet) -> bool {
        self.matroid.rank(after) > self.matroid.rank(before)
    }
}

/// Polymatroid Steiner tree: span a set of full rank in `matroid`.
pub fn solve_polymatroid(
    cost: &crate::closure::CostMatrix,
    root: VertexId,
    matroid: &Matroid,
    cfg: &DriverConfig,
) -> Result<CoverSolution> {
    let reachable: VertexSet = (0..cost.n()).filter(|&v| cost.is_finite(root, v)).fold(VertexSet::EMPTY, VertexSet::with);
    let full = matroid.full_rank();
    if matroid.rank(reachable) < full {
        return Err(Error::RankUnreachable);
    }
    let upper: u64 = reachable.intersection(matroid.ground()).iter().map(|v| cost.get(root, v)).sum();
    let depth = driver_depth(&cfg.solver, cost.n(), full);
    let (out, budget, rounds) = doubling(upper, |b| cover_polymatroid(cost, root, matroid, b, cfg))?;
    Ok(finish(out, budget, rounds, depth, |t| t.cost()))
}

/// One covering pass for polymatroid Steiner tree at a fixed budget.
pub fn cover_polymatroid(
    cost: &crate::closure::CostMatrix,
    root: VertexId,
    matroid: &Matroid,
    budget: u64,
    cfg: &DriverConfig,
) -> Result<CoverOutcome> {
    let metric = steiner_metric(cost, root)?;
    let full = matroid.full_rank();
    let depth = driver_depth(&cfg.solver, metric.n(), full);
    let solver = SolverConfig { depth: Some(depth), ..cfg.solver.clone() };
    cover_loop(&mut PolymatroidStep { metric: &metric, matroid, full, cfg: solver }, budget)
}

/// Buy-at-bulk input: a two-cost multigraph, root and terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuyAtBulkInstance {
    pub graph: DirectedGraph,
    pub root: VertexId,
    pub terminals: VertexSet,
}

impl BuyAtBulkInstance {
    /// Builds the multigraph from per-edge concave functions given as
    /// breakpoint samples `(x, g(x))`.
    pub fn from_concave(
        n: usize,
        root: VertexId,
        terminals: VertexSet,
        edges: &[(VertexId, VertexId, Vec<(u64, u64)>)],
    ) -> Result<Self> {
        let mut graph = DirectedGraph::new(n);
        for (u, v, samples) in edges {
            for (sigma, rho) in concave_to_two_cost(samples)? {
                graph.add_edge(Edge::new(*u, *v, sigma).with_length(rho));
            }
        }
        Ok(BuyAtBulkInstance { graph, root, terminals })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// A length-rescaled copy of a buy-at-bulk graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledInstance {
    /// Kept edges with rounded lengths.
    pub graph: DirectedGraph,
    /// Index in the original graph of every kept edge.
    pub origin: Vec<usize>,
    /// The unit length is `budget / units`.
    pub budget: u64,
    pub units: u64,
    /// Scaled length budget; equals `units`.
    pub length_budget: u64,
}

impl ScaledInstance {
    /// Unit length as a reduced fraction `(numerator, denominator)`.
    pub fn unit(&self) -> (u64, u64) {
        let g = gcd(self.budget, self.units).max(1);
        (self.budget / g, self.units / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Drops edges longer than `budget` and measures lengths in units of
/// `budget / n⁴`, rounding down; the length budget becomes `n⁴`.
pub fn scale_lengths(inst: &BuyAtBulkInstance, budget: u64) -> ScaledInstance {
    let n = inst.n() as u64;
    let units = n.pow(4);
    let mut graph = DirectedGraph::new(inst.n());
    let mut origin = Vec::new();
    for (i, e) in inst.graph.edges().iter().enumerate() {
        let l = e.len_or_zero();
        if l > budget || e.from == e.to {
            continue;
        }
        let scaled = if budget == 0 { 0 } else { (l as u128 * units as u128 / budget as u128) as u64 };
        graph.add_edge(Edge { length: Some(scaled), ..*e });
        origin.push(i);
    }
    ScaledInstance { graph, origin, budget, units, length_budget: units }
}

struct BuyAtBulkStep<'a> {
    inst: &'a BuyAtBulkInstance,
    scaled: &'a ScaledInstance,
    closure: &'a TwoCostClosure,
    depth: usize,
    cfg: SolverConfig,
}

impl CoverStep for BuyAtBulkStep<'_> {
    fn root(&self) -> VertexId {
        self.inst.root
    }

    fn solve(&mut self, forest: &Arborescence, budget: u64) -> Result<Pass> {
        let open = self.inst.terminals.difference(forest.vertices());
        let f = LinearRewards::unit(self.inst.n(), open);
        let sub = ConstrainedSubproblem {
            charged: self.inst.terminals,
            ..ConstrainedSubproblem::top(self.inst.root, budget, self.scaled.length_budget, self.depth)
        };
        let run = rg_dc_run(self.closure, &f, &sub, &self.cfg);
        let t = run.solution.into_tree().unwrap_or_else(|| Arborescence::single(self.inst.root));
        Ok(Pass { tree: expand_to_graph(&t, self.closure, self.scaled, &self.inst.graph), selected: t.vertices(), stats: run.stats })
    }

    fn merge(&self, forest: &Arborescence, t: &Arborescence) -> Arborescence {
        merge_by_length(forest, t).expect("trees share the root")
    }

    fn covered(&self, forest: &Arborescence) -> VertexSet {
        forest.vertices().intersection(self.inst.terminals)
    }

    fn done(&self, covered: VertexSet) -> bool {
        covered == self.inst.terminals
    }
}

/// Replaces closure edges by their witness paths and keeps a shortest-path
/// tree (scaled length, then cost) of the union, so every root path is a
/// simple path of original edges. Edges carry their true lengths. Vertices
/// of `t` keep scaled root distances at most those in `t`; witness paths may
/// add further vertices.
pub fn expand_to_graph(
    t: &Arborescence,
    closure: &TwoCostClosure,
    scaled: &ScaledInstance,
    original: &DirectedGraph,
) -> Arborescence {
    let root = t.root();
    let mut used: Vec<usize> = Vec::new();
    for &(c, e) in t.edges() {
        let entry = closure
            .frontier(e.parent, c)
            .iter()
            .find(|x| x.cost == e.cost && x.length == e.length)
            .expect("tree edges come from the closure");
        used.extend(entry.path.iter().copied());
    }
    used.sort_unstable();
    used.dedup();
    let n = original.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &ei in &used {
        adj[scaled.graph.edges()[ei].from].push(ei);
    }
    let mut best: Vec<Option<(u64, u64)>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    best[root] = Some((0, 0));
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(((0u64, 0u64), root)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if best[u].is_some_and(|b| d > b) {
            continue;
        }
        for &ei in &adj[u] {
            let e = &scaled.graph.edges()[ei];
            let nd = (d.0 + e.len_or_zero(), d.1 + e.cost);
            if best[e.to].is_none_or(|b| nd < b) {
                best[e.to] = Some(nd);
                pred[e.to] = Some(ei);
                heap.push(Reverse((nd, e.to)));
            }
        }
    }
    let keep = t.vertices();
    let mut edges: Vec<(VertexId, TreeEdge)> = Vec::new();
    for v in 0..n {
        if let Some(ei) = pred[v] {
            let o = &original.edges()[scaled.origin[ei]];
            edges.push((v, TreeEdge::new(o.from, o.cost).with_length(o.len_or_zero()).with_priority(o.priority_or_lowest())));
        }
    }
    let full = Arborescence::from_edges(root, edges).expect("shortest-path tree");
    prune_leaves(&full, keep)
}

/// Repeatedly removes leaves outside `keep`.
pub fn prune_leaves(t: &Arborescence, keep: VertexSet) -> Arborescence {
    let mut edges: Vec<(VertexId, TreeEdge)> = t.edges().to_vec();
    loop {
        let parents: VertexSet = edges.iter().fold(VertexSet::EMPTY, |s, (_, e)| s.with(e.parent));
        let before = edges.len();
        edges.retain(|(c, _)| keep.contains(*c) || parents.contains(*c));
        if edges.len() == before {
            break;
        }
    }
    Arborescence::from_edges(t.root(), edges).expect("pruning keeps a tree")
}

/// `c(T) + Σ_{t ∈ terminals} l_T(t)` with the edge lengths stored in `t`.
pub fn buy_at_bulk_objective(t: &Arborescence, terminals: VertexSet) -> u64 {
    let len = t.lengths();
    t.cost() + terminals.intersection(t.vertices()).iter().map(|v| len[v]).sum::<u64>()
}

/// Single-sink buy-at-bulk: minimise `c(T) + Σ_{t ∈ S} l_T(t)`.
pub fn solve_buy_at_bulk(inst: &BuyAtBulkInstance, cfg: &DriverConfig) -> Result<CoverSolution> {
    let terminals = inst.terminals.without(inst.root);
    let inst = &BuyAtBulkInstance { terminals, ..inst.clone() };
    // star of cheapest cost-plus-length paths bounds the optimum
    let combined = DirectedGraph::from_edges(
        inst.n(),
        inst.graph.edges().iter().map(|e| Edge::new(e.from, e.to, e.cost + e.len_or_zero())),
    );
    let mc = build_metric_closure(&combined);
    let mut upper = 0u64;
    for t in terminals.iter() {
        let d = mc.cost(inst.root, t);
        if d >= INFEASIBLE_COST {
            return Err(Error::UnreachableTerminal(t));
        }
        upper += d;
    }
    let depth = driver_depth(&cfg.solver, inst.n(), terminals.len());
    let (out, budget, rounds) = doubling(upper, |b| cover_buy_at_bulk(inst, b, cfg))?;
    Ok(finish(out, budget, rounds, depth, |t| buy_at_bulk_objective(t, terminals)))
}

/// One covering pass for buy-at-bulk at a fixed guess: lengths are rescaled
/// for `budget` and each pass is a length-budgeted solve charging terminals.
/// Iteration trees are expanded to original edges with true lengths.
pub fn cover_buy_at_bulk(inst: &BuyAtBulkInstance, budget: u64, cfg: &DriverConfig) -> Result<CoverOutcome> {
    let inst = &BuyAtBulkInstance { terminals: inst.terminals.without(inst.root), ..inst.clone() };
    let depth = driver_depth(&cfg.solver, inst.n(), inst.terminals.len());
    let solver = SolverConfig { depth: Some(depth), ..cfg.solver.clone() };
    let scaled = scale_lengths(inst, budget);
    let closure = build_two_cost_closure(&scaled.graph, scaled.length_budget);
    cover_loop(&mut BuyAtBulkStep { inst, scaled: &scaled, closure: &closure, depth, cfg: solver }, budget)
}

/// Turns breakpoint samples of a nondecreasing concave function into the
/// `(intercept, slope)` lines whose lower envelope reproduces it.
pub fn concave_to_two_cost(samples: &[(u64, u64)]) -> Result<Vec<(u64, u64)>> {
    if samples.len() < 2 {
        return Err(Error::Invalid("need at least two samples".into()));
    }
    let mut lines: Vec<(u64, u64)> = Vec::new();
    let mut prev_slope: Option<(u64, u64)> = None;
    for w in samples.windows(2) {
        let ((x0, g0), (x1, g1)) = (w[0], w[1]);
        if x1 <= x0 {
            return Err(Error::Invalid("sample abscissae must increase".into()));
        }
        if g1 < g0 {
            return Err(Error::NotConcave(format!("decreases between x={x0} and x={x1}")));
        }
        let (rise, run) = (g1 - g0, x1 - x0);
        if let Some((pr, pn)) = prev_slope {
            // slope must not increase: rise/run <= pr/pn
            if rise as u128 * pn as u128 > pr as u128 * run as u128 {
                return Err(Error::NotConcave(format!("slope increases at x={x0}")));
            }
        }
        prev_slope = Some((rise, run));
        if rise % run != 0 {
            return Err(Error::Invalid(format!("non-integral slope between x={x0} and x={x1}")));
        }
        let rho = rise / run;
        let sigma = g0
            .checked_sub(rho * x0)
            .ok_or_else(|| Error::Invalid(format!("negative intercept for the segment at x={x0}")))?;
        if lines.last() != Some(&(sigma, rho)) {
            lines.push((sigma, rho));
        }
    }
    Ok(lines)
}

struct PriorityStep<'a> {
    closure: &'a PriorityClosure,
    requirement: &'a [u32],
    root: VertexId,
    terminals: VertexSet,
    depth: usize,
    cfg: SolverConfig,
}

impl CoverStep for PriorityStep<'_> {
    fn root(&self) -> VertexId {
        self.root
    }

    fn solve(&mut self, forest: &Arborescence, budget: u64) -> Result<Pass> {
        let open = self.terminals.difference(self.covered(forest));
        let f = LinearRewards::unit(self.closure.n(), open);
        let sub = ConstrainedSubproblem::top(self.root, budget, u64::MAX, self.depth);
        let run = rg_pr_run(self.closure, &f, self.requirement, &sub, &self.cfg);
        Ok(pass(run.solution.into_tree().unwrap_or_else(|| Arborescence::single(self.root)), run.stats))
    }

    fn merge(&self, forest: &Arborescence, t: &Arborescence) -> Arborescence {
        merge_by_priority(forest, t).expect("trees share the root")
    }

    fn covered(&self, forest: &Arborescence) -> VertexSet {
        let pr = forest.min_priorities();
        forest.vertices().intersection(self.terminals).iter().filter(|&t| pr[t] >= self.requirement[t]).fold(VertexSet::EMPTY, VertexSet::with)
    }

    fn done(&self, covered: VertexSet) -> bool {
        covered == self.terminals
    }
}

/// Priority Steiner tree: reach each terminal `t` along edges of priority at
/// least `requirement[t]`.
pub fn solve_priority_steiner(
    closure: &PriorityClosure,
    root: VertexId,
    terminals: VertexSet,
    requirement: &[u32],
    cfg: &DriverConfig,
) -> Result<CoverSolution> {
    let terminals = terminals.without(root);
    let mut upper = 0u64;
    for t in terminals.iter() {
        let q = requirement[t].max(1);
        if q > closure.levels() || !closure.level(q).matrix.is_finite(root, t) {
            return Err(Error::UnreachableTerminal(t));
        }
        upper += closure.cost(q, root, t);
    }
    let depth = driver_depth(&cfg.solver, closure.n(), terminals.len());
    let (out, budget, rounds) = doubling(upper, |b| cover_priority(closure, root, terminals, requirement, b, cfg))?;
    Ok(finish(out, budget, rounds, depth, |t| t.cost()))
}

/// One covering pass for priority Steiner tree at a fixed budget.
pub fn cover_priority(
    closure: &PriorityClosure,
    root: VertexId,
    terminals: VertexSet,
    requirement: &[u32],
    budget: u64,
    cfg: &DriverConfig,
) -> Result<CoverOutcome> {
    let terminals = terminals.without(root);
    let depth = driver_depth(&cfg.solver, closure.n(), terminals.len());
    let step = &mut PriorityStep { closure, requirement, root, terminals, depth, cfg: cfg.solver.clone() };
    cover_loop(step, budget)
}

/// Builds the closures a priority instance needs from a graph.
pub fn priority_closure_of(g: &DirectedGraph) -> PriorityClosure {
    build_priority_closure(g, g.max_priority().max(1))
}

/// Metric closure of a graph's costs.
pub fn metric_of(g: &DirectedGraph) -> MetricClosure {
    build_metric_closure(g)
}

/// Contracts non-root vertices outside `keep` that have exactly one child,
/// adding up costs and lengths and taking the lower priority.
pub fn shortcut(t: &Arborescence, keep: VertexSet) -> Arborescence {
    let mut edges: Vec<(VertexId, TreeEdge)> = t.edges().to_vec();
    loop {
        let mut changed = false;
        for i in 0..edges.len() {
            let v = edges[i].0;
            if keep.contains(v) {
                continue;
            }
            let kids: Vec<usize> = (0..edges.len()).filter(|&j| edges[j].1.parent == v).collect();
            if kids.len() != 1 {
                continue;
            }
            let up = edges[i].1;
            let j = kids[0];
            let down = edges[j].1;
            edges[j].1 = TreeEdge {
                parent: up.parent,
                cost: up.cost + down.cost,
                length: up.length + down.length,
                priority: up.priority.min(down.priority),
            };
            edges.remove(i);
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }
    Arborescence::from_edges(t.root(), edges).expect("shortcutting keeps a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::CostMatrix;

    fn star(k: usize) -> CostMatrix {
        let n = k + 1;
        let mut g = DirectedGraph::new(n);
        for t in 1..n {
            g.add_edge(Edge::new(0, t, 1));
        }
        build_metric_closure(&g).matrix
    }

    #[test]
    fn star_is_one_iteration_at_full_budget() {
        let m = MetricInstance::new(star(4), 0, 0).unwrap();
        let mut step = SteinerStep { metric: &m, terminals: VertexSet(0b11110), cfg: SolverConfig::default() };
        let out = cover_loop(&mut step, 4).unwrap();
        assert_eq!(out.iterations.len(), 1);
        assert_eq!(out.forest.cost(), 4);
    }

    #[test]
    fn zero_budget_is_too_small() {
        let m = MetricInstance::new(star(2), 0, 0).unwrap();
        let mut step = SteinerStep { metric: &m, terminals: VertexSet(0b110), cfg: SolverConfig::default() };
        assert_eq!(cover_loop(&mut step, 0), Err(Error::BudgetTooSmall(0)));
    }

    #[test]
    fn scaling_arithmetic() {
        let g = DirectedGraph::from_edges(10, [Edge::new(0, 1, 1).with_length(7), Edge::new(0, 2, 1).with_length(30_000)]);
        let inst = BuyAtBulkInstance { graph: g, root: 0, terminals: VertexSet(0b10) };
        let s = scale_lengths(&inst, 10_000);
        assert_eq!(s.unit(), (1, 1));
        assert_eq!(s.graph.edges().len(), 1);
        assert_eq!(s.graph.edges()[0].length, Some(7));
        let s = scale_lengths(&inst, 20_000);
        assert_eq!(s.unit(), (2, 1));
        assert_eq!(s.graph.edges()[0].length, Some(3));
        assert_eq!(s.length_budget, 10_000);
    }

    #[test]
    fn concave_lines() {
        assert_eq!(concave_to_two_cost(&[(0, 0), (1, 3), (2, 6)]).unwrap(), vec![(0, 3)]);
        assert_eq!(concave_to_two_cost(&[(0, 0), (1, 3), (2, 6), (3, 7), (4, 8)]).unwrap(), vec![(0, 3), (4, 1)]);
        assert!(matches!(concave_to_two_cost(&[(0, 0), (1, 1), (2, 5)]), Err(Error::NotConcave(_))));
    }

    #[test]
    fn shortcut_merges_chains() {
        let t = Arborescence::from_edges(0, [(1, TreeEdge::new(0, 2)), (2, TreeEdge::new(1, 3))]).unwrap();
        let s = shortcut(&t, VertexSet::singleton(2));
        assert_eq!(s.edges(), &[(2, TreeEdge::new(0, 5))]);
    }
}
