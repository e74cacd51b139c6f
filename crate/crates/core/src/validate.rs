//! Standalone feasibility checks that recompute everything from raw edges.
//!
//! Nothing here uses the derived quantities of [`Arborescence`]; paths are
//! re-walked from the `(child, in-edge)` list.

use crate::arborescence::Arborescence;
use crate::closure::{CostMatrix, PriorityClosure, TwoCostClosure};
use crate::graph::DirectedGraph;
use crate::set::VertexSet;
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthBudget {
    pub limit: u64,
    /// Accrued length at the tree root.
    pub offset: u64,
    pub charged: VertexSet,
}

/// What a tree must satisfy. Unset fields are not checked.
#[derive(Debug, Clone, Default)]
pub struct Requirements<'a> {
    pub root: VertexId,
    pub spans: VertexSet,
    pub budget: Option<u64>,
    /// Every edge costs at least the metric distance.
    pub metric: Option<&'a CostMatrix>,
    /// Every edge's (cost, length) is matched or beaten by a closure path.
    pub two_cost: Option<&'a TwoCostClosure>,
    /// Every edge of priority `q` costs at least the level-`q` distance.
    pub priority_levels: Option<&'a PriorityClosure>,
    /// Every edge is an edge of this graph.
    pub graph: Option<&'a DirectedGraph>,
    pub length_budget: Option<LengthBudget>,
    pub length_caps: Vec<(VertexId, u64)>,
    /// Effective path priority `min(entry, path minimum)` must reach the floor.
    pub priority_floors: Vec<(VertexId, u32)>,
    pub entry_priority: Option<u32>,
}

/// Quantities recomputed by the validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measured {
    pub vertices: VertexSet,
    pub cost: u64,
    pub lengths: Vec<Option<u64>>,
    pub priorities: Vec<Option<u32>>,
    pub charged_length: u64,
}

pub fn validate(t: &Arborescence, req: &Requirements) -> Result<Measured, Vec<String>> {
    let mut errs = Vec::new();
    let edges = t.edges();
    let root = t.root();
    if root != req.root {
        errs.push(format!("tree rooted at {root}, expected {}", req.root));
    }
    let mut parent: Vec<Option<usize>> = vec![None; 64];
    for (ix, &(c, e)) in edges.iter().enumerate() {
        if c == root {
            errs.push(format!("root {root} has an in-edge"));
        }
        if parent[c].is_some() {
            errs.push(format!("vertex {c} has two in-edges"));
        }
        parent[c] = Some(ix);
        if e.parent == c {
            errs.push(format!("self-loop at {c}"));
        }
    }
    let mut vertices = VertexSet::singleton(root);
    for &(c, _) in edges {
        vertices.insert(c);
    }
    let mut lengths: Vec<Option<u64>> = vec![None; 64];
    let mut priorities: Vec<Option<u32>> = vec![None; 64];
    lengths[root] = Some(0);
    priorities[root] = Some(u32::MAX);
    for v in vertices.iter() {
        // walk to the root, bounded by the edge count
        let (mut len, mut pr, mut cur, mut steps) = (0u64, u32::MAX, v, 0usize);
        let mut ok = true;
        while cur != root {
            let Some(ix) = parent[cur] else {
                errs.push(format!("vertex {cur} on the path of {v} has no in-edge"));
                ok = false;
                break;
            };
            let e = edges[ix].1;
            len += e.length;
            pr = pr.min(e.priority);
            cur = e.parent;
            steps += 1;
            if steps > edges.len() {
                errs.push(format!("cycle above vertex {v}"));
                ok = false;
                break;
            }
        }
        if ok {
            lengths[v] = Some(len);
            priorities[v] = Some(pr);
        }
    }
    let cost: u64 = edges.iter().map(|(_, e)| e.cost).sum();
    if let Some(b) = req.budget {
        if cost > b {
            errs.push(format!("cost {cost} exceeds budget {b}"));
        }
    }
    for w in req.spans.iter() {
        if !vertices.contains(w) {
            errs.push(format!("required vertex {w} missing"));
        }
    }
    for &(c, e) in edges {
        let u = e.parent;
        if let Some(m) = req.metric {
            if !m.is_finite(u, c) || e.cost < m.get(u, c) {
                errs.push(format!("edge {u}->{c} cost {} below metric distance", e.cost));
            }
        }
        if let Some(tc) = req.two_cost {
            if !tc.frontier(u, c).iter().any(|f| f.cost <= e.cost && f.length <= e.length) {
                errs.push(format!("edge {u}->{c} ({}, {}) not realisable", e.cost, e.length));
            }
        }
        if let Some(pc) = req.priority_levels {
            let q = e.priority;
            if q == 0 || q > pc.levels() || !pc.level(q).matrix.is_finite(u, c) || e.cost < pc.cost(q, u, c) {
                errs.push(format!("edge {u}->{c} priority {q} cost {} not realisable", e.cost));
            }
        }
        if let Some(g) = req.graph {
            let found = g.edges().iter().any(|x| {
                x.from == u
                    && x.to == c
                    && x.cost == e.cost
                    && x.len_or_zero() == e.length
                    && x.priority_or_lowest() == e.priority
            });
            if !found {
                errs.push(format!("edge {u}->{c} is not a graph edge"));
            }
        }
    }
    let mut charged_length = 0u64;
    if let Some(lb) = req.length_budget {
        for v in vertices.without(root).intersection(lb.charged).iter() {
            charged_length += lb.offset + lengths[v].unwrap_or(0);
        }
        if charged_length > lb.limit {
            errs.push(format!("charged length {charged_length} exceeds {}", lb.limit));
        }
    }
    for &(w, cap) in &req.length_caps {
        match lengths.get(w).copied().flatten() {
            Some(l) if l <= cap => {}
            Some(l) => errs.push(format!("vertex {w} at length {l} beyond cap {cap}")),
            None => errs.push(format!("capped vertex {w} missing")),
        }
    }
    let entry = req.entry_priority.unwrap_or(u32::MAX);
    for &(w, floor) in &req.priority_floors {
        match priorities.get(w).copied().flatten() {
            Some(p) if p.min(entry) >= floor => {}
            Some(p) => errs.push(format!("vertex {w} path priority {} below {floor}", p.min(entry))),
            None => errs.push(format!("vertex {w} missing for its priority floor")),
        }
    }
    if errs.is_empty() {
        Ok(Measured { vertices, cost, lengths, priorities, charged_length })
    } else {
        Err(errs)
    }
}
