//! Shortest-path completions of a [`DirectedGraph`]: the cost-only metric
//! closure, the Pareto (cost, length) closure, and per-priority-level closures.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{DirectedGraph, Edge};
use crate::VertexId;

/// Cost of an ordered pair with no connecting path. Budgets must stay below it.
pub const INFEASIBLE_COST: u64 = u64::MAX / 4;

/// Dense `n × n` cost matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    n: usize,
    data: Vec<u64>,
}

impl CostMatrix {
    pub fn filled(n: usize, value: u64) -> Self {
        let mut data = vec![value; n * n];
        for u in 0..n {
            data[u * n + u] = 0;
        }
        CostMatrix { n, data }
    }

    /// Builds a matrix from rows; the diagonal is forced to zero.
    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let n = rows.len();
        let mut m = CostMatrix::filled(n, INFEASIBLE_COST);
        for (u, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {u} has wrong width");
            for (v, &c) in row.iter().enumerate() {
                if u != v {
                    m.set(u, v, c.min(INFEASIBLE_COST));
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u64 {
        self.data[u * self.n + v]
    }

    pub fn set(&mut self, u: VertexId, v: VertexId, c: u64) {
        self.data[u * self.n + v] = c;
    }

    pub fn is_finite(&self, u: VertexId, v: VertexId) -> bool {
        self.get(u, v) < INFEASIBLE_COST
    }

    /// Checks `cost[u][w] <= cost[u][v] + cost[v][w]` over all finite triples.
    pub fn satisfies_triangle_inequality(&self) -> bool {
        let n = self.n;
        (0..n).all(|u| {
            (0..n).all(|v| {
                (0..n).all(|w| {
                    !self.is_finite(u, v) || !self.is_finite(v, w) || self.get(u, w) <= self.get(u, v) + self.get(v, w)
                })
            })
        })
    }
}

/// Cost-only metric closure with shortest-path witnesses.
#[derive(Debug, Clone)]
pub struct MetricClosure {
    pub matrix: CostMatrix,
    // pred[s * n + v]: index of the last edge on the chosen s -> v path
    pred: Vec<Option<usize>>,
}

impl MetricClosure {
    pub fn cost(&self, u: VertexId, v: VertexId) -> u64 {
        self.matrix.get(u, v)
    }

    /// Edge indices of a shortest `u -> v` path in the source graph.
    pub fn path(&self, g: &DirectedGraph, u: VertexId, v: VertexId) -> Option<Vec<usize>> {
        if !self.matrix.is_finite(u, v) {
            return None;
        }
        let n = self.matrix.n();
        let mut out = Vec::new();
        let mut cur = v;
        while cur != u {
            let e = self.pred[u * n + cur]?;
            out.push(e);
            cur = g.edges()[e].from;
        }
        out.reverse();
        Some(out)
    }
}

/// All-pairs shortest paths by Dijkstra from every source.
pub fn build_metric_closure(g: &DirectedGraph) -> MetricClosure {
    build_filtered_closure(g, |_| true)
}

fn build_filtered_closure(g: &DirectedGraph, keep: impl Fn(&Edge) -> bool) -> MetricClosure {
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if keep(e) {
            adj[e.from].push(i);
        }
    }
    let mut matrix = CostMatrix::filled(n, INFEASIBLE_COST);
    let mut pred = vec![None; n * n];
    for s in 0..n {
        let mut dist = vec![INFEASIBLE_COST; n];
        dist[s] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &ei in &adj[u] {
                let e = &g.edges()[ei];
                let nd = d + e.cost;
                if nd < dist[e.to] {
                    dist[e.to] = nd;
                    pred[s * n + e.to] = Some(ei);
                    heap.push(Reverse((nd, e.to)));
                }
            }
        }
        for v in 0..n {
            matrix.set(s, v, dist[v]);
        }
    }
    MetricClosure { matrix, pred }
}

/// One non-dominated (cost, length) value of a `u -> v` path, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierEntry {
    pub cost: u64,
    pub length: u64,
    pub path: Vec<usize>,
}

/// Per-pair Pareto frontiers of path (cost, length) values.
#[derive(Debug, Clone)]
pub struct TwoCostClosure {
    n: usize,
    max_length: u64,
    frontier: Vec<Vec<FrontierEntry>>,
}

impl TwoCostClosure {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_length(&self) -> u64 {
        self.max_length
    }

    /// Entries sorted by ascending cost and strictly descending length.
    pub fn frontier(&self, u: VertexId, v: VertexId) -> &[FrontierEntry] {
        &self.frontier[u * self.n + v]
    }

    /// Cheapest cost with any length, or [`INFEASIBLE_COST`].
    pub fn min_cost(&self, u: VertexId, v: VertexId) -> u64 {
        if u == v {
            return 0;
        }
        self.frontier(u, v).first().map_or(INFEASIBLE_COST, |e| e.cost)
    }

    /// Cost-only view: the cheapest frontier entry per pair.
    pub fn cost_matrix(&self) -> CostMatrix {
        let mut m = CostMatrix::filled(self.n, INFEASIBLE_COST);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    m.set(u, v, self.min_cost(u, v));
                }
            }
        }
        m
    }
}

/// Pareto closure over paths of total length at most `max_length`.
///
/// Edges without a length count as length 0; edges longer than `max_length`
/// are removed before the search.
pub fn build_two_cost_closure(g: &DirectedGraph, max_length: u64) -> TwoCostClosure {
    let n = g.n();
    let width = max_length as usize + 1;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if e.len_or_zero() <= max_length {
            adj[e.from].push(i);
        }
    }
    let mut frontier = vec![Vec::new(); n * n];
    for s in 0..n {
        // best[v * width + len]: cheapest s -> v path with exactly this length
        let mut best = vec![INFEASIBLE_COST; n * width];
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; n * width];
        best[s * width] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, s, 0usize)));
        while let Some(Reverse((d, u, len))) = heap.pop() {
            if d > best[u * width + len] {
                continue;
            }
            for &ei in &adj[u] {
                let e = &g.edges()[ei];
                let nl = len + e.len_or_zero() as usize;
                if nl >= width {
                    continue;
                }
                let nd = d + e.cost;
                let slot = e.to * width + nl;
                if nd < best[slot] {
                    best[slot] = nd;
                    pred[slot] = Some((ei, len));
                    heap.push(Reverse((nd, e.to, nl)));
                }
            }
        }
        for v in 0..n {
            if v == s {
                continue;
            }
            let mut entries = Vec::new();
            let mut cheapest = INFEASIBLE_COST;
            for len in 0..width {
                let c = best[v * width + len];
                if c < cheapest {
                    cheapest = c;
                    let mut path = Vec::new();
                    let (mut cur, mut cl) = (v, len);
                    while let Some((ei, pl)) = pred[cur * width + cl] {
                        path.push(ei);
                        cur = g.edges()[ei].from;
                        cl = pl;
                    }
                    path.reverse();
                    entries.push(FrontierEntry { cost: c, length: len as u64, path });
                }
            }
            entries.reverse();
            frontier[s * n + v] = entries;
        }
    }
    TwoCostClosure { n, max_length, frontier }
}

/// Cost closures restricted to edges of priority at least `q`, for `q = 1..=p`.
#[derive(Debug, Clone)]
pub struct PriorityClosure {
    levels: Vec<MetricClosure>,
}

impl PriorityClosure {
    pub fn levels(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn n(&self) -> usize {
        self.levels[0].matrix.n()
    }

    /// Cheapest `u -> v` cost using only edges of priority `>= q`.
    #[inline]
    pub fn cost(&self, q: u32, u: VertexId, v: VertexId) -> u64 {
        self.levels[q as usize - 1].matrix.get(u, v)
    }

    pub fn level(&self, q: u32) -> &MetricClosure {
        &self.levels[q as usize - 1]
    }
}

pub fn build_priority_closure(g: &DirectedGraph, levels: u32) -> PriorityClosure {
    let levels = levels.max(1);
    PriorityClosure {
        levels: (1..=levels)
            .map(|q| build_filtered_closure(g, |e| e.priority_or_lowest() >= q))
            .collect(),
    }
}
