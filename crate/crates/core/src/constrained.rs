//! Recursions with side constraints: a total-length budget, per-vertex
//! deadlines, and edge priorities.

use std::collections::BTreeMap;

use crate::arborescence::{merge_by_length, merge_by_priority, Arborescence, TreeEdge};
use crate::closure::{PriorityClosure, TwoCostClosure};
use crate::engine::{solve_frame, Model, RecursionParams, Search};
use crate::exact::priority_variants;
use crate::frontier::Limits;
use crate::greedy::{Run, Solution, SolverConfig};
use crate::oracle::RewardOracle;
use crate::set::VertexSet;
use crate::VertexId;

/// Per responsibility vertex: a root-path length cap or a priority floor.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundTable(BTreeMap<VertexId, u64>);

impl BoundTable {
    pub fn new() -> Self {
        BoundTable(BTreeMap::new())
    }

    pub fn insert(&mut self, w: VertexId, bound: u64) {
        self.0.insert(w, bound);
    }

    pub fn with(mut self, w: VertexId, bound: u64) -> Self {
        self.insert(w, bound);
        self
    }

    pub fn get(&self, w: VertexId) -> Option<u64> {
        self.0.get(&w).copied()
    }

    pub fn keys(&self) -> VertexSet {
        self.0.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u64)> + '_ {
        self.0.iter().map(|(&w, &b)| (w, b))
    }
}

impl FromIterator<(VertexId, u64)> for BoundTable {
    fn from_iter<I: IntoIterator<Item = (VertexId, u64)>>(iter: I) -> Self {
        BoundTable(iter.into_iter().collect())
    }
}

/// A constrained recursion frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstrainedSubproblem {
    pub root: VertexId,
    /// Root-path length from the original root to `root`.
    pub offset: u64,
    /// Minimum priority on the path from the original root to `root`.
    pub path_priority: u32,
    pub required: VertexSet,
    /// Keys must equal `required`.
    pub bounds: BoundTable,
    pub budget: u64,
    /// Total charged-length budget (length budget engine only).
    pub length_budget: u64,
    pub augment: VertexSet,
    pub depth: usize,
    /// Vertices whose root-path length is charged to `length_budget`.
    pub charged: VertexSet,
}

impl ConstrainedSubproblem {
    /// Top frame: no responsibilities, offset 0, every vertex charged.
    pub fn top(root: VertexId, budget: u64, length_budget: u64, depth: usize) -> Self {
        ConstrainedSubproblem {
            root,
            offset: 0,
            path_priority: u32::MAX,
            required: VertexSet::EMPTY,
            bounds: BoundTable::new(),
            budget,
            length_budget,
            augment: VertexSet::EMPTY,
            depth,
            charged: VertexSet::full(64),
        }
    }

    fn check(&self, n: usize) {
        assert!(self.root < n, "root out of range");
        assert!(!self.required.contains(self.root), "the root may not be a responsibility vertex");
        assert!(self.required.is_subset(VertexSet::full(n)), "responsibility out of range");
        assert_eq!(self.bounds.keys(), self.required, "bound table keys must equal the responsibility set");
        assert!(self.depth >= 1, "depth must be at least 1");
    }
}

/// Two-cost trees; with `deadlines` the reward of `v` counts only when
/// `offset + l_T(v) <= deadline(v)` and no length budget applies.
pub(crate) struct LengthModel<'a> {
    pub closure: &'a TwoCostClosure,
    pub charged: VertexSet,
    pub deadlines: Option<&'a [u64]>,
}

impl Model for LengthModel<'_> {
    type Ctx = u64;
    const PLAIN: bool = false;

    fn n(&self) -> usize {
        self.closure.n()
    }

    fn edges(&self, r: VertexId, v: VertexId, _: u64, out: &mut Vec<TreeEdge>) {
        out.extend(self.closure.frontier(r, v).iter().map(|e| TreeEdge::new(r, e.cost).with_length(e.length)));
    }

    fn merge(&self, t1: &Arborescence, t2: &Arborescence) -> Arborescence {
        merge_by_length(t1, t2).expect("right root lies in the left tree")
    }

    fn right_ctx(&self, k: u64, t1: &Arborescence, v: VertexId) -> u64 {
        k + t1.path_length(v).expect("separator lies in the left tree")
    }

    fn claimed(&self, t: &Arborescence, k: u64) -> VertexSet {
        match self.deadlines {
            None => t.vertices(),
            Some(dl) => {
                let len = t.lengths();
                t.vertices().iter().filter(|&u| k.saturating_add(len[u]) <= dl[u]).collect()
            }
        }
    }

    fn charge(&self, t: &Arborescence, k: u64) -> u64 {
        if self.deadlines.is_some() {
            return 0;
        }
        let len = t.lengths();
        t.vertices()
            .without(t.root())
            .intersection(self.charged)
            .iter()
            .map(|u| k + len[u])
            .sum()
    }

    fn bounds(&self, t: &Arborescence, y: VertexSet) -> Vec<u64> {
        let len = t.lengths();
        y.iter().map(|w| len[w]).collect()
    }
}

/// Priority trees over per-level closures; the reward of `v` counts only
/// when its effective path priority meets `requirement[v]`.
pub(crate) struct PriorityModel<'a> {
    pub closure: &'a PriorityClosure,
    pub requirement: &'a [u32],
}

impl Model for PriorityModel<'_> {
    type Ctx = u32;
    const PLAIN: bool = false;

    fn n(&self) -> usize {
        self.closure.n()
    }

    fn edges(&self, r: VertexId, v: VertexId, _: u32, out: &mut Vec<TreeEdge>) {
        out.extend(priority_variants(self.closure, r, v));
    }

    fn merge(&self, t1: &Arborescence, t2: &Arborescence) -> Arborescence {
        merge_by_priority(t1, t2).expect("right root lies in the left tree")
    }

    fn right_ctx(&self, p: u32, t1: &Arborescence, v: VertexId) -> u32 {
        p.min(t1.path_min_priority(v).expect("separator lies in the left tree"))
    }

    fn claimed(&self, t: &Arborescence, p: u32) -> VertexSet {
        let pr = t.min_priorities();
        t.vertices().iter().filter(|&u| p.min(pr[u]) >= self.requirement.get(u).copied().unwrap_or(1)).collect()
    }

    fn charge(&self, _: &Arborescence, _: u32) -> u64 {
        0
    }

    fn bounds(&self, t: &Arborescence, y: VertexSet) -> Vec<u64> {
        let pr = t.min_priorities();
        y.iter().map(|w| priority_measure(pr[w])).collect()
    }
}

/// Priorities as a smaller-is-better measure.
fn priority_measure(p: u32) -> u64 {
    (u32::MAX - p) as u64
}

fn params(sub: &ConstrainedSubproblem, length_cap: u64, cfg: &SolverConfig) -> RecursionParams {
    RecursionParams {
        budget_cap: sub.budget,
        length_cap,
        depth_limit: sub.required.len() + sub.depth,
        search: Search::Exhaustive,
        verify: false,
        strict: cfg.debug_checks,
        loop_cap: 0,
    }
}

/// Total-length-budgeted recursion: the tree visits `Y`, costs at most `B`,
/// keeps `Σ_{charged v ≠ root} (offset + l_T(v)) <= L` and `l_T(w) <= D(w)`.
pub fn rg_dc(tc: &TwoCostClosure, f: &dyn RewardOracle, sub: &ConstrainedSubproblem) -> Solution {
    rg_dc_run(tc, f, sub, &SolverConfig::default()).solution
}

pub fn rg_dc_run(tc: &TwoCostClosure, f: &dyn RewardOracle, sub: &ConstrainedSubproblem, cfg: &SolverConfig) -> Run {
    sub.check(tc.n());
    let model = LengthModel { closure: tc, charged: sub.charged, deadlines: None };
    let (fr, stats) = solve_frame(
        &model,
        f,
        params(sub, sub.length_budget, cfg),
        sub.root,
        sub.offset,
        sub.required,
        sub.augment,
        sub.depth,
        cfg.workers,
    );
    let lim = Limits { budget: sub.budget, length: sub.length_budget, caps: sub.bounds.iter().map(|(_, b)| b).collect() };
    Run { solution: pick(fr.best(&lim).map(|o| &*o.tree)), stats }
}

/// Deadline recursion: reward only from vertices reached by their deadline;
/// `D` caps root-path lengths of responsibility vertices.
pub fn rg_dl(tc: &TwoCostClosure, f: &dyn RewardOracle, deadlines: &[u64], sub: &ConstrainedSubproblem) -> Solution {
    rg_dl_run(tc, f, deadlines, sub, &SolverConfig::default()).solution
}

pub fn rg_dl_run(
    tc: &TwoCostClosure,
    f: &dyn RewardOracle,
    deadlines: &[u64],
    sub: &ConstrainedSubproblem,
    cfg: &SolverConfig,
) -> Run {
    sub.check(tc.n());
    assert_eq!(deadlines.len(), tc.n(), "one deadline per vertex");
    let model = LengthModel { closure: tc, charged: VertexSet::EMPTY, deadlines: Some(deadlines) };
    let (fr, stats) = solve_frame(
        &model,
        f,
        params(sub, u64::MAX, cfg),
        sub.root,
        sub.offset,
        sub.required,
        sub.augment,
        sub.depth,
        cfg.workers,
    );
    let lim = Limits { budget: sub.budget, length: u64::MAX, caps: sub.bounds.iter().map(|(_, b)| b).collect() };
    Run { solution: pick(fr.best(&lim).map(|o| &*o.tree)), stats }
}

/// Priority recursion: every `w ∈ Y` is reached along edges of priority at
/// least `D(w)`; rewards are gated by `requirement`.
pub fn rg_pr(pc: &PriorityClosure, f: &dyn RewardOracle, requirement: &[u32], sub: &ConstrainedSubproblem) -> Solution {
    rg_pr_run(pc, f, requirement, sub, &SolverConfig::default()).solution
}

pub fn rg_pr_run(
    pc: &PriorityClosure,
    f: &dyn RewardOracle,
    requirement: &[u32],
    sub: &ConstrainedSubproblem,
    cfg: &SolverConfig,
) -> Run {
    sub.check(pc.n());
    assert_eq!(requirement.len(), pc.n(), "one requirement per vertex");
    let model = PriorityModel { closure: pc, requirement };
    let (fr, stats) = solve_frame(
        &model,
        f,
        params(sub, u64::MAX, cfg),
        sub.root,
        sub.path_priority,
        sub.required,
        sub.augment,
        sub.depth,
        cfg.workers,
    );
    let caps = sub.bounds.iter().map(|(_, b)| priority_measure(b.min(u32::MAX as u64) as u32)).collect();
    let lim = Limits { budget: sub.budget, length: u64::MAX, caps };
    Run { solution: pick(fr.best(&lim).map(|o| &*o.tree)), stats }
}

fn pick(t: Option<&Arborescence>) -> Solution {
    match t {
        Some(t) => Solution::Tree(t.clone()),
        None => Solution::Infeasible,
    }
}
