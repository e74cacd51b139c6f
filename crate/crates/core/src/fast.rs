//! Depth-compressed recursive greedy: each block guesses `s` levels of the
//! split recursion jointly and keeps every combination, so only block
//! boundaries apply the greedy choice.
//!
//! Block `i` covers levels `(i-1)s+1 ..= is` of the plain recursion. Its
//! leaves are block `i-1` frames solved left to right, each seeing the
//! vertices of the leaves before it. Block 1 bottoms out in single edges and
//! does not depend on the collected set.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::arborescence::{merge_and_prune, merge_and_prune_cost, Arborescence, TreeEdge};
use crate::engine::Stats;
use crate::frontier::{Frontier, Outcome};
use crate::greedy::{MetricInstance, Run, Solution, SolverConfig, Subproblem};
use crate::oracle::RewardOracle;
use crate::set::VertexSet;
use crate::VertexId;

/// Candidate trees keyed by vertex set: the cheapest tree per set, in order of
/// the guess that first produced that cost.
#[derive(Debug, Default)]
struct SetMap {
    items: Vec<(VertexSet, u64, u64, Arc<Arborescence>)>,
    index: FxHashMap<u64, usize>,
}

impl SetMap {
    fn offer(&mut self, w: VertexSet, cost: u64, seq: u64, t: impl FnOnce() -> Arborescence) {
        match self.index.get(&w.0) {
            Some(&ix) => {
                if cost < self.items[ix].1 {
                    self.items[ix] = (w, cost, seq, Arc::new(t()));
                }
            }
            None => {
                self.index.insert(w.0, self.items.len());
                self.items.push((w, cost, seq, Arc::new(t())));
            }
        }
    }

    /// Order by the sequence number of the kept candidate.
    fn finish(mut self, prune_subsets: bool) -> Vec<(VertexSet, u64, Arc<Arborescence>)> {
        self.items.sort_by_key(|e| e.2);
        let all: Vec<(VertexSet, u64)> = self.items.iter().map(|e| (e.0, e.1)).collect();
        self.items
            .into_iter()
            .filter(|(w, c, _, _)| {
                // a strict superset at no greater cost is never worse
                !prune_subsets || !all.iter().any(|(w2, c2)| w2 != w && w.is_subset(*w2) && c2 <= c)
            })
            .map(|(w, c, _, t)| (w, c, t))
            .collect()
    }
}

type Entries = Arc<Vec<(VertexSet, u64, Arc<Arborescence>)>>;

struct Compressed<'a> {
    m: &'a MetricInstance,
    f: &'a dyn RewardOracle,
    support: VertexSet,
    s: usize,
    budget_cap: u64,
    depth_limit: usize,
    strict: bool,
    inner_memo: FxHashMap<(VertexId, u64, u64, usize, usize), Entries>,
    block_memo: FxHashMap<(VertexId, u64, u64, usize), Arc<Frontier>>,
    stats: Stats,
}

impl Compressed<'_> {
    fn level(&self, i: usize, t: usize) -> usize {
        (i - 1) * self.s + t
    }

    fn block(&mut self, r: VertexId, y: VertexSet, x: VertexSet, i: usize) -> Arc<Frontier> {
        let x = x.intersection(self.support);
        let key = (r, y.0, x.0, i);
        if let Some(fr) = self.block_memo.get(&key) {
            return fr.clone();
        }
        let fx = self.f.eval(x);
        let cands = self.inner(r, y, x, self.s, i, false);
        let mut fr = Frontier::new(true);
        for (w, cost, t) in cands.iter() {
            let value = self.f.eval(w.union(x)) - fx;
            if !fr.rejects_plain(value, *cost) {
                fr.insert(Outcome {
                    tree: t.clone(),
                    value,
                    cost: *cost,
                    charge: 0,
                    unclaimed: 0,
                    bounds: Vec::new(),
                    chain: *w,
                });
            }
        }
        let fr = Arc::new(fr);
        self.block_memo.insert(key, fr.clone());
        fr
    }

    /// Candidates of the `t` remaining levels of block `i` at root `r`.
    fn inner(&mut self, r: VertexId, y: VertexSet, x: VertexSet, t: usize, i: usize, prune: bool) -> Entries {
        if t == 0 {
            let fr = self.block(r, y, x, i - 1);
            return Arc::new(fr.items().iter().map(|o| (o.tree.vertices(), o.cost, o.tree.clone())).collect());
        }
        // block 1 never reaches a leaf that reads the collected set
        let xk = if i == 1 { VertexSet::EMPTY } else { x.intersection(self.support) };
        let key = (r, y.0, xk.0, t, i);
        if let Some(e) = self.inner_memo.get(&key) {
            return e.clone();
        }
        self.stats.frames += 1;
        let lvl = self.level(i, t);
        if y.len() + lvl > self.depth_limit {
            self.stats.invariant_violations += 1;
            assert!(!self.strict, "frame invariant |Y| + i <= d violated");
        }
        let mut map = SetMap::default();
        let mut seq = 0u64;
        let n = self.m.n();
        let cost = self.m.cost();
        if (y.len() as f64) <= 1.5f64.powi(lvl as i32) {
            if y.is_empty() {
                map.offer(VertexSet::singleton(r), 0, seq, || Arborescence::single(r));
                seq += 1;
            }
            if i == 1 && t == 1 {
                let targets: Vec<VertexId> = if y.is_empty() { (0..n).filter(|&v| v != r).collect() } else { y.iter().collect() };
                if y.len() <= 1 {
                    for v in targets {
                        let c = cost.get(r, v);
                        if cost.is_finite(r, v) && c <= self.budget_cap {
                            map.offer(VertexSet::singleton(r).with(v), c, seq, || Arborescence::edge(r, v, TreeEdge::new(r, c)));
                            seq += 1;
                        }
                    }
                }
            } else {
                for v in 0..n {
                    for s in y.subsets() {
                        let ly = s.with(v).without(r);
                        let ry = y.difference(s.with(v));
                        self.stats.calls += 1;
                        let left = self.inner(r, ly, xk, t - 1, i, true);
                        for (w1, c1, t1) in left.iter() {
                            self.stats.calls += 1;
                            let right = self.inner(v, ry, xk.union(*w1), t - 1, i, true);
                            for (w2, c2, t2) in right.iter() {
                                if c1 + c2 > self.budget_cap {
                                    continue;
                                }
                                let c = merge_and_prune_cost(t1, t2);
                                map.offer(w1.union(*w2), c, seq, || merge_and_prune(t1, t2).expect("right root lies in the left tree"));
                                seq += 1;
                            }
                        }
                    }
                }
            }
        }
        let e = Arc::new(map.finish(prune));
        self.inner_memo.insert(key, e.clone());
        e
    }
}

/// Depth-compressed engine with block size `s`; `sub.depth` counts blocks.
pub fn rg_fast(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem, s: usize) -> Solution {
    rg_fast_run(m, f, sub, s, &SolverConfig::default()).solution
}

pub fn rg_fast_run(m: &MetricInstance, f: &dyn RewardOracle, sub: &Subproblem, s: usize, cfg: &SolverConfig) -> Run {
    assert!(s >= 1 && sub.depth >= 1, "block size and block count must be positive");
    assert!(!sub.required.contains(sub.root), "the root may not be a responsibility vertex");
    let mut c = Compressed {
        m,
        f,
        support: f.ground(),
        s,
        budget_cap: sub.budget,
        depth_limit: sub.required.len() + sub.depth * s,
        strict: cfg.debug_checks,
        inner_memo: FxHashMap::default(),
        block_memo: FxHashMap::default(),
        stats: Stats::default(),
    };
    let fr = c.block(sub.root, sub.required, sub.augment, sub.depth);
    let solution = match fr.best_within(sub.budget) {
        Some(o) => Solution::Tree((*o.tree).clone()),
        None => Solution::Infeasible,
    };
    Run { solution, stats: c.stats }
}
