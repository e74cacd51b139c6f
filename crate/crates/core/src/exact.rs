//! Exhaustive solvers for small instances, used as ground truth.

use std::time::{Duration, Instant};

use crate::arborescence::{Arborescence, TreeEdge};
use crate::closure::{CostMatrix, PriorityClosure, TwoCostClosure};
use crate::error::{Error, Result};
use crate::min_arb::min_arborescence;
use crate::oracle::{Matroid, RewardOracle};
use crate::set::VertexSet;
use crate::VertexId;

/// Limits on exhaustive work. Exceeding any of them is an error, never a
/// partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_nodes: u64,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 8, max_nodes: 2_000_000_000, time_cap: Duration::from_secs(600) }
    }
}

impl OracleBudget {
    /// Default budget with the time cap taken from `ARBOR_TIME_CAP_MS` when set.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(ms) = std::env::var("ARBOR_TIME_CAP_MS").ok().and_then(|s| s.parse::<u64>().ok()) {
            b.time_cap = Duration::from_millis(ms);
        }
        b
    }

    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self
    }
}

struct Meter {
    budget: OracleBudget,
    start: Instant,
    nodes: u64,
}

impl Meter {
    fn new(budget: OracleBudget, n: usize) -> Result<Self> {
        if n > budget.max_vertices {
            return Err(Error::TooLarge(format!("{n} vertices exceed the oracle cap of {}", budget.max_vertices)));
        }
        Ok(Meter { budget, start: Instant::now(), nodes: 0 })
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::TooLarge("enumeration node cap reached".into()));
        }
        if self.nodes & 0xffff == 0 && self.start.elapsed() > self.budget.time_cap {
            return Err(Error::TooLarge("oracle time cap reached".into()));
        }
        Ok(())
    }
}

/// Vertex sets containing `root`, by increasing size then increasing mask.
fn rooted_subsets(n: usize, root: VertexId) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = VertexSet::full(n).without(root).subsets().map(|s| s.with(root)).collect();
    all.sort_by_key(|s| (s.len(), s.0));
    all
}

/// Optimal budgeted orienteering value and a witness tree: every vertex set
/// holding the root is tried, accepted when its minimum arborescence fits.
pub fn brute_force_sto(
    cost: &CostMatrix,
    root: VertexId,
    f: &dyn RewardOracle,
    budget: u64,
    ob: &OracleBudget,
) -> Result<(u64, Arborescence)> {
    let mut meter = Meter::new(*ob, cost.n())?;
    let mut best = (0u64, Arborescence::single(root));
    for w in rooted_subsets(cost.n(), root) {
        meter.tick()?;
        let value = f.eval(w);
        if value <= best.0 {
            continue;
        }
        if let Ok(t) = min_arborescence(cost, root, w) {
            if t.cost() <= budget {
                best = (value, t);
            }
        }
    }
    Ok(best)
}

/// Side constraints for [`brute_force_constrained`].
#[derive(Debug, Clone, Copy)]
pub enum Constraint<'a> {
    /// `Σ_{charged v ≠ root} l_T(v) <= length_budget`.
    Length { closure: &'a TwoCostClosure, length_budget: u64, charged: VertexSet },
    /// Reward only from `v` with `l_T(v) <= deadlines[v]`.
    Deadline { closure: &'a TwoCostClosure, deadlines: &'a [u64] },
    /// Reward only from `v` whose root path has minimum priority `>= requirement[v]`.
    Priority { closure: &'a PriorityClosure, requirement: &'a [u32] },
}

impl Constraint<'_> {
    fn n(&self) -> usize {
        match self {
            Constraint::Length { closure, .. } | Constraint::Deadline { closure, .. } => closure.n(),
            Constraint::Priority { closure, .. } => closure.n(),
        }
    }

    /// Non-dominated closure edges `u -> v`.
    fn variants(&self, u: VertexId, v: VertexId) -> Vec<TreeEdge> {
        match self {
            Constraint::Length { closure, .. } | Constraint::Deadline { closure, .. } => {
                closure.frontier(u, v).iter().map(|e| TreeEdge::new(u, e.cost).with_length(e.length)).collect()
            }
            Constraint::Priority { closure, .. } => priority_variants(closure, u, v),
        }
    }
}

/// Per priority level the cheapest `u -> v` edge, dropping levels matched in
/// cost by a higher level.
pub fn priority_variants(pc: &PriorityClosure, u: VertexId, v: VertexId) -> Vec<TreeEdge> {
    let mut out: Vec<TreeEdge> = Vec::new();
    for q in (1..=pc.levels()).rev() {
        if !pc.level(q).matrix.is_finite(u, v) {
            continue;
        }
        let c = pc.cost(q, u, v);
        if out.last().is_none_or(|e| c < e.cost) {
            out.push(TreeEdge::new(u, c).with_priority(q));
        }
    }
    out.reverse();
    out
}

/// Calls `visit` on every arborescence rooted at `root` whose edges are
/// closure edges and whose cost is at most `budget`. Vertices in `must` are
/// always present.
fn for_each_tree(
    n: usize,
    root: VertexId,
    budget: u64,
    must: VertexSet,
    variants: &dyn Fn(VertexId, VertexId) -> Vec<TreeEdge>,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&Arborescence) -> Result<()>,
) -> Result<()> {
    let others: Vec<VertexId> = (0..n).filter(|&v| v != root).collect();
    // choices[k]: in-edge options of others[k]
    let choices: Vec<Vec<(VertexId, TreeEdge)>> = others
        .iter()
        .map(|&w| {
            (0..n)
                .filter(|&p| p != w)
                .flat_map(|p| variants(p, w).into_iter().map(move |e| (w, e)))
                .filter(|(_, e)| e.cost <= budget)
                .collect()
        })
        .collect();
    let mut picked: Vec<Option<(VertexId, TreeEdge)>> = vec![None; others.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        spent: u64,
        budget: u64,
        root: VertexId,
        others: &[VertexId],
        must: VertexSet,
        choices: &[Vec<(VertexId, TreeEdge)>],
        picked: &mut Vec<Option<(VertexId, TreeEdge)>>,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&Arborescence) -> Result<()>,
    ) -> Result<()> {
        meter.tick()?;
        if k == others.len() {
            let present: VertexSet = picked.iter().flatten().map(|(w, _)| *w).collect::<VertexSet>().with(root);
            if picked.iter().flatten().any(|(_, e)| !present.contains(e.parent)) {
                return Ok(());
            }
            if let Ok(t) = Arborescence::from_edges(root, picked.iter().flatten().copied()) {
                visit(&t)?;
            }
            return Ok(());
        }
        if !must.contains(others[k]) {
            picked[k] = None;
            rec(k + 1, spent, budget, root, others, must, choices, picked, meter, visit)?;
        }
        for &(w, e) in &choices[k] {
            if spent + e.cost > budget {
                continue;
            }
            // a parent already decided absent can never be used
            if let Some(pk) = others.iter().position(|&o| o == e.parent) {
                if pk < k && picked[pk].is_none() {
                    continue;
                }
            }
            picked[k] = Some((w, e));
            rec(k + 1, spent + e.cost, budget, root, others, must, choices, picked, meter, visit)?;
        }
        picked[k] = None;
        Ok(())
    }
    rec(0, 0, budget, root, &others, must, &choices, &mut picked, meter, visit)
}

/// Optimal value under a constraint family, by enumerating every closure
/// arborescence within the cost budget.
pub fn brute_force_constrained(
    c: &Constraint,
    root: VertexId,
    f: &dyn RewardOracle,
    budget: u64,
    ob: &OracleBudget,
) -> Result<(u64, Arborescence)> {
    let n = c.n();
    let mut meter = Meter::new(*ob, n)?;
    let mut best: (u64, u64, Arborescence) = (0, 0, Arborescence::single(root));
    let variants = |u, v| c.variants(u, v);
    for_each_tree(n, root, budget, VertexSet::EMPTY, &variants, &mut meter, &mut |t| {
        let claimed = match c {
            Constraint::Length { length_budget, charged, .. } => {
                let len = t.lengths();
                let total: u64 = t.vertices().iter().filter(|&v| v != root && charged.contains(v)).map(|v| len[v]).sum();
                if total > *length_budget {
                    return Ok(());
                }
                t.vertices()
            }
            Constraint::Deadline { deadlines, .. } => {
                let len = t.lengths();
                t.vertices().iter().filter(|&v| len[v] <= deadlines[v]).collect()
            }
            Constraint::Priority { requirement, .. } => {
                let pr = t.min_priorities();
                t.vertices().iter().filter(|&v| pr[v] >= requirement[v]).collect()
            }
        };
        let value = f.eval(claimed);
        if value > best.0 || (value == best.0 && t.cost() < best.1) {
            best = (value, t.cost(), t.clone());
        }
        Ok(())
    })?;
    Ok((best.0, best.2))
}

/// Covering targets for [`brute_force_min_cover`].
#[derive(Debug, Clone, Copy)]
pub enum CoverTarget<'a> {
    /// Span every terminal at least cost.
    Steiner { cost: &'a CostMatrix, terminals: VertexSet },
    /// Span a set of full matroid rank.
    Polymatroid { cost: &'a CostMatrix, matroid: &'a Matroid },
    /// Minimise `c(T) + Σ_{t ∈ S} l_T(t)` over trees spanning `S`.
    BuyAtBulk { closure: &'a TwoCostClosure, terminals: VertexSet },
    /// Span every terminal `t` along a path of priority `>= requirement[t]`.
    Priority { closure: &'a PriorityClosure, terminals: VertexSet, requirement: &'a [u32] },
}

/// Minimum cost (or buy-at-bulk objective) over all covering trees, with a
/// witness; `Ok(None)` if nothing covers.
pub fn brute_force_min_cover(
    target: &CoverTarget,
    root: VertexId,
    ob: &OracleBudget,
) -> Result<Option<(u64, Arborescence)>> {
    match *target {
        CoverTarget::Steiner { cost, terminals } => {
            let mut meter = Meter::new(*ob, cost.n())?;
            min_over_subsets(cost, root, &mut meter, |w| terminals.is_subset(w))
        }
        CoverTarget::Polymatroid { cost, matroid } => {
            let mut meter = Meter::new(*ob, cost.n())?;
            let full = matroid.full_rank();
            min_over_subsets(cost, root, &mut meter, |w| matroid.rank(w) == full)
        }
        CoverTarget::BuyAtBulk { closure, terminals } => {
            let n = closure.n();
            let mut meter = Meter::new(*ob, n)?;
            let mut best: Option<(u64, Arborescence)> = None;
            // a star of cheapest edges bounds the search
            let mut cap = 0u64;
            for t in terminals.without(root).iter() {
                let e = closure.frontier(root, t).iter().map(|e| e.cost + e.length).min();
                match e {
                    Some(x) => cap += x,
                    None => return Ok(None),
                }
            }
            let variants = |u, v| {
                closure.frontier(u, v).iter().map(|e| TreeEdge::new(u, e.cost).with_length(e.length)).collect()
            };
            for_each_tree(n, root, cap, terminals.without(root), &variants, &mut meter, &mut |t| {
                let len = t.lengths();
                let obj = t.cost() + terminals.iter().map(|v| len[v]).sum::<u64>();
                if best.as_ref().is_none_or(|b| obj < b.0) {
                    best = Some((obj, t.clone()));
                }
                Ok(())
            })?;
            Ok(best)
        }
        CoverTarget::Priority { closure, terminals, requirement } => {
            let n = closure.n();
            let mut meter = Meter::new(*ob, n)?;
            let mut best: Option<(u64, Arborescence)> = None;
            let mut cap = 0u64;
            for t in terminals.without(root).iter() {
                let q = requirement[t].max(1);
                if q > closure.levels() || !closure.level(q).matrix.is_finite(root, t) {
                    return Ok(None);
                }
                cap += closure.cost(q, root, t);
            }
            let variants = |u, v| priority_variants(closure, u, v);
            for_each_tree(n, root, cap, terminals.without(root), &variants, &mut meter, &mut |t| {
                let pr = t.min_priorities();
                if terminals.iter().all(|v| pr[v] >= requirement[v]) && best.as_ref().is_none_or(|b| t.cost() < b.0) {
                    best = Some((t.cost(), t.clone()));
                }
                Ok(())
            })?;
            Ok(best)
        }
    }
}

fn min_over_subsets(
    cost: &CostMatrix,
    root: VertexId,
    meter: &mut Meter,
    accept: impl Fn(VertexSet) -> bool,
) -> Result<Option<(u64, Arborescence)>> {
    let mut best: Option<(u64, Arborescence)> = None;
    for w in rooted_subsets(cost.n(), root) {
        meter.tick()?;
        if !accept(w) {
            continue;
        }
        if let Ok(t) = min_arborescence(cost, root, w) {
            if best.as_ref().is_none_or(|b| t.cost() < b.0) {
                best = Some((t.cost(), t));
            }
        }
    }
    Ok(best)
}
