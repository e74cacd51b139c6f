//! The memoised recursion shared by every engine.
//!
//! A frame `(r, ctx, Y, X, i)` is solved for all budgets at once: its result
//! is the frontier of non-dominated outcomes, each a tree rooted at `r` that
//! visits `Y`. A budget query against the frontier returns what the frame
//! would return for that budget. `ctx` is the accrued root length (length
//! models) or the root path's minimum priority (priority model).

use std::hash::Hash;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::arborescence::{Arborescence, TreeEdge};
use crate::frontier::{Frontier, Outcome};
use crate::oracle::RewardOracle;
use crate::set::VertexSet;
use crate::VertexId;

/// How a model builds, joins and measures trees.
pub trait Model: Sync {
    type Ctx: Copy + Eq + Hash + Send + Sync + std::fmt::Debug;

    /// Only value and cost matter; trees join with `merge_and_prune`.
    const PLAIN: bool;

    fn n(&self) -> usize;

    /// Usable single edges `r -> v` given the frame context.
    fn edges(&self, r: VertexId, v: VertexId, ctx: Self::Ctx, out: &mut Vec<TreeEdge>);

    fn merge(&self, t1: &Arborescence, t2: &Arborescence) -> Arborescence;

    /// Context of the right call rooted at `v` after the left tree `t1`.
    fn right_ctx(&self, ctx: Self::Ctx, t1: &Arborescence, v: VertexId) -> Self::Ctx;

    /// Vertices whose reward counts.
    fn claimed(&self, t: &Arborescence, ctx: Self::Ctx) -> VertexSet;

    /// Length charge against the total-length budget.
    fn charge(&self, t: &Arborescence, ctx: Self::Ctx) -> u64;

    /// Per-vertex bound measures for `y`, smaller is better.
    fn bounds(&self, t: &Arborescence, y: VertexSet) -> Vec<u64>;
}

/// How the left budget is chosen for each separator and split guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Search {
    /// Every budget in `0..=B` (or every distinct left cost once `B`
    /// exceeds `n · max edge cost`).
    Linear,
    /// For each target value, the least budget reaching it, by bisection.
    Bisect,
    /// Every left outcome (models with extra measures).
    Exhaustive,
}

/// Counters collected during a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Distinct frames evaluated.
    pub frames: u64,
    /// Recursive invocations issued, including ones answered from the memo
    /// and the probes of the budget bisection.
    pub calls: u64,
    /// Frames entered with `|Y| + i` above the depth limit.
    pub invariant_violations: u64,
    /// Bisection results that disagreed with a linear scan.
    pub search_mismatches: u64,
    /// Bisection probes checked against a linear scan.
    pub search_checks: u64,
}

impl Stats {
    pub fn absorb(&mut self, o: &Stats) {
        self.frames += o.frames;
        self.calls += o.calls;
        self.invariant_violations += o.invariant_violations;
        self.search_mismatches += o.search_mismatches;
        self.search_checks += o.search_checks;
    }
}

type Key<C> = (VertexId, C, u64, u64, usize);

pub(crate) struct Recursion<'a, M: Model> {
    model: &'a M,
    f: &'a dyn RewardOracle,
    support: VertexSet,
    budget_cap: u64,
    length_cap: u64,
    depth_limit: usize,
    search: Search,
    verify: bool,
    strict: bool,
    value_cap: u64,
    loop_cap: u64,
    memo: FxHashMap<Key<M::Ctx>, Arc<Frontier>>,
    pub stats: Stats,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RecursionParams {
    pub budget_cap: u64,
    pub length_cap: u64,
    pub depth_limit: usize,
    pub search: Search,
    pub verify: bool,
    pub strict: bool,
    /// `n · max edge cost`; above it the linear budget loop visits only
    /// distinct left costs.
    pub loop_cap: u64,
}

impl<'a, M: Model> Recursion<'a, M> {
    pub fn new(model: &'a M, f: &'a dyn RewardOracle, p: RecursionParams) -> Self {
        Recursion {
            model,
            f,
            support: f.ground(),
            budget_cap: p.budget_cap,
            length_cap: p.length_cap,
            depth_limit: p.depth_limit,
            search: p.search,
            verify: p.verify,
            strict: p.strict,
            value_cap: f.upper_bound(),
            loop_cap: p.loop_cap,
            memo: FxHashMap::default(),
            stats: Stats::default(),
        }
    }

    fn outcome(&self, tree: Arborescence, ctx: M::Ctx, y: VertexSet, x: VertexSet, fx: u64) -> Outcome {
        let chain = self.model.claimed(&tree, ctx);
        let value = self.f.eval(chain.union(x)) - fx;
        Outcome {
            value,
            cost: tree.cost(),
            charge: self.model.charge(&tree, ctx),
            unclaimed: (tree.vertices().len() - chain.len()) as u32,
            bounds: if M::PLAIN { Vec::new() } else { self.model.bounds(&tree, y) },
            chain,
            tree: Arc::new(tree),
        }
    }

    fn admissible(&self, o: &Outcome) -> bool {
        o.cost <= self.budget_cap && o.charge <= self.length_cap
    }

    pub fn frame(&mut self, r: VertexId, ctx: M::Ctx, y: VertexSet, x: VertexSet, i: usize) -> Arc<Frontier> {
        debug_assert!(i >= 1 && !y.contains(r));
        let x = x.intersection(self.support);
        let key = (r, ctx, y.0, x.0, i);
        if let Some(fr) = self.memo.get(&key) {
            return fr.clone();
        }
        self.stats.frames += 1;
        if y.len() + i > self.depth_limit {
            self.stats.invariant_violations += 1;
            assert!(!self.strict, "frame invariant |Y| + i <= d violated at |Y|={} i={}", y.len(), i);
        }
        let mut fr = Frontier::new(M::PLAIN);
        if (y.len() as f64) <= 1.5f64.powi(i as i32) {
            let fx = self.f.eval(x);
            if i == 1 {
                self.base(&mut fr, r, ctx, y, x, fx);
            } else {
                self.split(&mut fr, r, ctx, y, x, i, fx, 0..self.model.n());
            }
        }
        let fr = Arc::new(fr);
        self.memo.insert(key, fr.clone());
        fr
    }

    fn base(&mut self, fr: &mut Frontier, r: VertexId, ctx: M::Ctx, y: VertexSet, x: VertexSet, fx: u64) {
        let mut es = Vec::new();
        let targets: Vec<VertexId> = if y.is_empty() {
            fr.insert(self.outcome(Arborescence::single(r), ctx, y, x, fx));
            (0..self.model.n()).filter(|&v| v != r).collect()
        } else {
            y.iter().collect()
        };
        if y.len() > 1 {
            return;
        }
        for v in targets {
            es.clear();
            self.model.edges(r, v, ctx, &mut es);
            for &e in &es {
                let o = self.outcome(Arborescence::edge(r, v, e), ctx, y, x, fx);
                if self.admissible(&o) {
                    fr.insert(o);
                }
            }
        }
    }

    /// The recursive step restricted to separator guesses in `seps`.
    #[allow(clippy::too_many_arguments)]
    pub fn split(
        &mut self,
        fr: &mut Frontier,
        r: VertexId,
        ctx: M::Ctx,
        y: VertexSet,
        x: VertexSet,
        i: usize,
        fx: u64,
        seps: std::ops::Range<VertexId>,
    ) {
        if y.is_empty() && seps.start == 0 {
            fr.insert(self.outcome(Arborescence::single(r), ctx, y, x, fx));
        }
        for v in seps {
            for s in y.subsets() {
                let ly = s.with(v).without(r);
                let ry = y.difference(s.with(v));
                self.stats.calls += 1;
                let left = self.frame(r, ctx, ly, x, i - 1);
                if left.is_empty() {
                    continue;
                }
                for li in self.left_candidates(&left) {
                    let t1 = &left.items()[li];
                    let rctx = self.model.right_ctx(ctx, &t1.tree, v);
                    self.stats.calls += 1;
                    let right = self.frame(v, rctx, ry, x.union(t1.chain), i - 1);
                    self.combine(fr, t1, &right, ctx, y, x, fx);
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn combine(&self, fr: &mut Frontier, t1: &Outcome, right: &Frontier, ctx: M::Ctx, y: VertexSet, x: VertexSet, fx: u64) {
        let room = self.budget_cap - t1.cost;
        for t2 in right.items() {
            if t2.cost > room {
                if M::PLAIN {
                    break;
                }
                continue;
            }
            if t1.charge + t2.charge > self.length_cap {
                continue;
            }
            if M::PLAIN {
                let value = self.f.eval(t1.chain.union(t2.chain).union(x)) - fx;
                let cost = crate::arborescence::merge_and_prune_cost(&t1.tree, &t2.tree);
                if fr.rejects_plain(value, cost) {
                    continue;
                }
            }
            let t = self.model.merge(&t1.tree, &t2.tree);
            let o = self.outcome(t, ctx, y, x, fx);
            fr.insert(o);
        }
    }

    /// Indices of the left outcomes the configured budget search visits.
    fn left_candidates(&mut self, left: &Frontier) -> Vec<usize> {
        let search = if M::PLAIN { self.search } else { Search::Exhaustive };
        match search {
            Search::Exhaustive => {
                // one right call per left outcome, already counted by the caller
                (0..left.len()).collect()
            }
            Search::Linear => {
                let mut out: Vec<usize> = Vec::new();
                let budgets: Vec<u64> = if self.budget_cap <= self.loop_cap {
                    (0..=self.budget_cap).collect()
                } else {
                    let mut b: Vec<u64> = left.items().iter().map(|o| o.cost).collect();
                    b.push(self.budget_cap);
                    b
                };
                // every budget issues a left and a right call
                self.stats.calls += 2 * budgets.len() as u64;
                for b in budgets {
                    if let Some(ix) = left.index_within(b) {
                        if out.last() != Some(&ix) {
                            out.push(ix);
                        }
                    }
                }
                self.stats.calls -= out.len() as u64;
                out
            }
            Search::Bisect => {
                let mut out = Vec::new();
                let mut u = 0u64;
                loop {
                    let (b1, probes) = least_budget(left, u, self.budget_cap);
                    self.stats.calls += probes;
                    if self.verify {
                        self.stats.search_checks += 1;
                        if b1 != least_budget_linear(left, u, self.budget_cap) {
                            self.stats.search_mismatches += 1;
                        }
                    }
                    let Some(b1) = b1 else { break };
                    let ix = left.index_within(b1).expect("a budget reaching u has an outcome");
                    out.push(ix);
                    u = left.items()[ix].value + 1;
                    if u > self.value_cap {
                        break;
                    }
                }
                // plus the left call at each chosen budget
                self.stats.calls += out.len() as u64;
                out
            }
        }
    }
}

/// Least `b <= cap` whose best outcome reaches value `u`, by bisection over
/// the budget, and the number of probes spent.
pub(crate) fn least_budget(fr: &Frontier, u: u64, cap: u64) -> (Option<u64>, u64) {
    let reaches = |b: u64| fr.best_within(b).is_some_and(|o| o.value >= u);
    let mut probes = 1;
    if !reaches(cap) {
        return (None, probes);
    }
    let (mut lo, mut hi) = (0u64, cap);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        probes += 1;
        if reaches(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (Some(lo), probes)
}

pub(crate) fn least_budget_linear(fr: &Frontier, u: u64, cap: u64) -> Option<u64> {
    (0..=cap).find(|&b| fr.best_within(b).is_some_and(|o| o.value >= u))
}

/// Solves one frame, fanning the separator guesses of the top frame out over
/// `workers` threads. Each worker keeps its own memo; results are merged in
/// guess order, so the frontier does not depend on the worker count.
#[allow(clippy::too_many_arguments)]
pub(crate) fn solve_frame<M: Model>(
    model: &M,
    f: &dyn RewardOracle,
    params: RecursionParams,
    r: VertexId,
    ctx: M::Ctx,
    y: VertexSet,
    x: VertexSet,
    i: usize,
    workers: usize,
) -> (Arc<Frontier>, Stats) {
    let n = model.n();
    if workers <= 1 || i == 1 || n < 2 {
        let mut rec = Recursion::new(model, f, params);
        let fr = rec.frame(r, ctx, y, x, i);
        return (fr, rec.stats);
    }
    let x = x.intersection(f.ground());
    let mut stats = Stats { frames: 1, ..Stats::default() };
    if y.len() + i > params.depth_limit {
        stats.invariant_violations += 1;
        assert!(!params.strict, "frame invariant |Y| + i <= d violated at the top frame");
    }
    if (y.len() as f64) > 1.5f64.powi(i as i32) {
        return (Arc::new(Frontier::new(M::PLAIN)), stats);
    }
    let workers = workers.min(n);
    let chunk = n.div_ceil(workers);
    let fx = f.eval(x);
    let parts: Vec<(Frontier, Stats)> = std::thread::scope(|sc| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let p = params;
                sc.spawn(move || {
                    let mut rec = Recursion::new(model, f, p);
                    let mut fr = Frontier::new(M::PLAIN);
                    let lo = w * chunk;
                    rec.split(&mut fr, r, ctx, y, x, i, fx, lo..((w + 1) * chunk).min(n));
                    (fr, rec.stats)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut fr = Frontier::new(M::PLAIN);
    for (part, st) in parts {
        stats.absorb(&st);
        for o in part.items() {
            fr.insert(o.clone());
        }
    }
    (Arc::new(fr), stats)
}
