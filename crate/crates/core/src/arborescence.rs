//! Rooted out-trees stored as in-edge maps, and the two ways of combining them.

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::VertexId;

/// The in-edge of a non-root tree vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeEdge {
    pub parent: VertexId,
    pub cost: u64,
    pub length: u64,
    pub priority: u32,
}

impl TreeEdge {
    pub fn new(parent: VertexId, cost: u64) -> Self {
        TreeEdge { parent, cost, length: 0, priority: 1 }
    }

    pub fn with_length(mut self, length: u64) -> Self {
        self.length = length;
        self
    }

    pub fn with_priority(mut self, priority: u32) -> Self {
        self.priority = priority;
        self
    }
}

/// An out-directed arborescence over vertex ids below 64.
///
/// Invariants: every non-root vertex has exactly one in-edge, the parent
/// relation is acyclic and every vertex is reachable from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arborescence {
    root: VertexId,
    vertices: VertexSet,
    // sorted by child id
    edges: Vec<(VertexId, TreeEdge)>,
}

impl Arborescence {
    /// The tree `{root}` with no edges.
    pub fn single(root: VertexId) -> Self {
        Arborescence { root, vertices: VertexSet::singleton(root), edges: Vec::new() }
    }

    /// The single-edge tree `root -> child`.
    pub fn edge(root: VertexId, child: VertexId, e: TreeEdge) -> Self {
        debug_assert!(root != child && e.parent == root);
        Arborescence { root, vertices: VertexSet::singleton(root).with(child), edges: vec![(child, e)] }
    }

    /// Builds a tree from `(child, in-edge)` pairs, checking every invariant.
    pub fn from_edges(root: VertexId, edges: impl IntoIterator<Item = (VertexId, TreeEdge)>) -> Result<Self> {
        let mut edges: Vec<(VertexId, TreeEdge)> = edges.into_iter().collect();
        edges.sort_by_key(|&(c, _)| c);
        if edges.windows(2).any(|w| w[0].0 == w[1].0) || edges.iter().any(|&(c, _)| c == root) {
            return Err(Error::Invalid("a vertex has more than one in-edge".into()));
        }
        let mut vertices = VertexSet::singleton(root);
        for &(c, _) in &edges {
            vertices.insert(c);
        }
        let t = Arborescence { root, vertices, edges };
        for &(_, e) in &t.edges {
            if !t.vertices.contains(e.parent) {
                return Err(Error::Invalid(format!("vertex {} is not reachable from the root", e.parent)));
            }
        }
        for &(c, _) in &t.edges {
            let mut cur = c;
            let mut steps = 0;
            while cur != root {
                cur = t.in_edge(cur).expect("parent present").parent;
                steps += 1;
                if steps > t.edges.len() {
                    return Err(Error::Invalid("parent relation has a cycle".into()));
                }
            }
        }
        Ok(t)
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len() + 1
    }

    pub fn non_root_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_single(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn edges(&self) -> &[(VertexId, TreeEdge)] {
        &self.edges
    }

    pub fn in_edge(&self, v: VertexId) -> Option<&TreeEdge> {
        self.edges.binary_search_by_key(&v, |&(c, _)| c).ok().map(|i| &self.edges[i].1)
    }

    pub fn cost(&self) -> u64 {
        self.edges.iter().map(|(_, e)| e.cost).sum()
    }

    pub fn children(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.edges.iter().filter(move |(_, e)| e.parent == v).map(|&(c, _)| c)
    }

    /// Sum of edge lengths on the root path of `v`; `None` if `v` is not in the tree.
    pub fn path_length(&self, v: VertexId) -> Option<u64> {
        self.fold_path(v, 0u64, |acc, e| acc + e.length)
    }

    /// Minimum edge priority on the root path of `v` (`u32::MAX` for the root).
    pub fn path_min_priority(&self, v: VertexId) -> Option<u32> {
        self.fold_path(v, u32::MAX, |acc, e| acc.min(e.priority))
    }

    fn fold_path<A>(&self, v: VertexId, init: A, f: impl Fn(A, &TreeEdge) -> A) -> Option<A> {
        if !self.contains(v) {
            return None;
        }
        let mut acc = init;
        let mut cur = v;
        while cur != self.root {
            let e = self.in_edge(cur)?;
            acc = f(acc, e);
            cur = e.parent;
        }
        Some(acc)
    }

    /// Root-path lengths of every tree vertex, indexed by vertex id.
    pub fn lengths(&self) -> [u64; 64] {
        self.labels(0u64, |acc, e| acc + e.length)
    }

    /// Root-path minimum priorities, indexed by vertex id.
    pub fn min_priorities(&self) -> [u32; 64] {
        self.labels(u32::MAX, |acc, e| acc.min(e.priority))
    }

    fn labels<A: Copy>(&self, init: A, f: impl Fn(A, &TreeEdge) -> A) -> [A; 64] {
        let mut out = [init; 64];
        let mut done = VertexSet::singleton(self.root);
        // parents before children: repeat passes; trees here are tiny
        while done != self.vertices {
            for &(c, e) in &self.edges {
                if !done.contains(c) && done.contains(e.parent) {
                    out[c] = f(out[e.parent], &e);
                    done.insert(c);
                }
            }
        }
        out
    }

    fn push_unchecked(&mut self, c: VertexId, e: TreeEdge) {
        let pos = self.edges.partition_point(|&(x, _)| x < c);
        self.edges.insert(pos, (c, e));
        self.vertices.insert(c);
    }
}

/// Union of two trees where `t2` hangs off a vertex of `t1`.
///
/// Vertices present in both keep `t1`'s in-edge; `t2`'s children of such a
/// vertex stay attached through it.
/// Cost [`merge_and_prune`] would produce, without building the tree.
pub fn merge_and_prune_cost(t1: &Arborescence, t2: &Arborescence) -> u64 {
    t1.cost() + t2.edges.iter().filter(|(c, _)| !t1.contains(*c)).map(|(_, e)| e.cost).sum::<u64>()
}

pub fn merge_and_prune(t1: &Arborescence, t2: &Arborescence) -> Result<Arborescence> {
    if !t1.contains(t2.root) {
        return Err(Error::DisconnectedMerge(t2.root));
    }
    let mut out = t1.clone();
    for &(c, e) in &t2.edges {
        if !t1.contains(c) {
            out.push_unchecked(c, e);
        }
    }
    Ok(out)
}

/// Union of two trees re-parented so every vertex gets the shortest root path
/// available among the edges of either tree. Root-path lengths never exceed
/// those in `t1` (or those via `t2` for vertices reached through it) and the
/// cost never exceeds `c(t1) + c(t2)`.
pub fn merge_by_length(t1: &Arborescence, t2: &Arborescence) -> Result<Arborescence> {
    relabel_union(t1, t2, 0u64, |d, e| d + e.length, |a, b| a < b)
}

/// Like [`merge_by_length`] but maximises each vertex's root-path minimum priority.
pub fn merge_by_priority(t1: &Arborescence, t2: &Arborescence) -> Result<Arborescence> {
    relabel_union(t1, t2, u32::MAX, |p, e| p.min(e.priority), |a, b| a > b)
}

fn relabel_union<L: Copy + Ord>(
    t1: &Arborescence,
    t2: &Arborescence,
    root_label: L,
    extend: impl Fn(L, &TreeEdge) -> L,
    better: impl Fn(L, L) -> bool,
) -> Result<Arborescence> {
    if !t1.contains(t2.root) {
        return Err(Error::DisconnectedMerge(t2.root));
    }
    let root = t1.root;
    let all = t1.vertices.union(t2.vertices);
    // (child, edge, edge comes from t2)
    let cands: Vec<(VertexId, TreeEdge, u32)> = t1
        .edges
        .iter()
        .map(|&(c, e)| (c, e, 0))
        .chain(t2.edges.iter().map(|&(c, e)| (c, e, 1)))
        .filter(|&(c, _, _)| c != root)
        .collect();
    // labels are (path label, number of t2 edges on the path); the second
    // component makes equal-label ties resolve to t1's own edges
    let lex = |a: (L, u32), b: (L, u32)| better(a.0, b.0) || (!better(b.0, a.0) && a.1 < b.1);
    let mut label: [Option<(L, u32)>; 64] = [None; 64];
    let mut chosen: [Option<TreeEdge>; 64] = [None; 64];
    let mut settled = VertexSet::EMPTY;
    label[root] = Some((root_label, 0));
    while settled != all {
        let mut pick: Option<VertexId> = None;
        for v in all.difference(settled).iter() {
            if let Some(l) = label[v] {
                if pick.is_none_or(|p| lex(l, label[p].unwrap())) {
                    pick = Some(v);
                }
            }
        }
        let Some(u) = pick else {
            return Err(Error::Invalid("merged union is not connected".into()));
        };
        settled.insert(u);
        let lu = label[u].unwrap();
        for &(c, e, from_t2) in &cands {
            if e.parent == u && !settled.contains(c) {
                let nl = (extend(lu.0, &e), lu.1 + from_t2);
                let replace = match label[c] {
                    None => true,
                    Some(old) => lex(nl, old) || (!lex(old, nl) && e.cost < chosen[c].unwrap().cost),
                };
                if replace {
                    label[c] = Some(nl);
                    chosen[c] = Some(e);
                }
            }
        }
    }
    let mut out = Arborescence::single(root);
    for v in all.iter() {
        if v != root {
            out.push_unchecked(v, chosen[v].expect("settled vertices have an in-edge"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(root: VertexId, edges: &[(VertexId, VertexId, u64)]) -> Arborescence {
        Arborescence::from_edges(root, edges.iter().map(|&(p, c, w)| (c, TreeEdge::new(p, w)))).unwrap()
    }

    #[test]
    fn rejects_cycles_and_double_in_edges() {
        assert!(Arborescence::from_edges(0, [(1, TreeEdge::new(2, 1)), (2, TreeEdge::new(1, 1))]).is_err());
        assert!(Arborescence::from_edges(0, [(1, TreeEdge::new(0, 1)), (1, TreeEdge::new(0, 2))]).is_err());
        assert!(Arborescence::from_edges(0, [(0, TreeEdge::new(1, 1))]).is_err());
    }

    #[test]
    fn derived_lengths_and_priorities() {
        let t = Arborescence::from_edges(
            0,
            [
                (1, TreeEdge::new(0, 2).with_length(3).with_priority(2)),
                (2, TreeEdge::new(1, 1).with_length(4).with_priority(1)),
            ],
        )
        .unwrap();
        assert_eq!(t.cost(), 3);
        assert_eq!(t.path_length(2), Some(7));
        assert_eq!(t.path_min_priority(2), Some(1));
        assert_eq!(t.path_min_priority(1), Some(2));
        assert_eq!(t.lengths()[2], 7);
        assert_eq!(t.path_length(5), None);
    }

    #[test]
    fn merge_with_single_vertex_is_identity() {
        let t1 = tree(0, &[(0, 1, 3), (1, 2, 4)]);
        let t2 = Arborescence::single(2);
        assert_eq!(merge_and_prune(&t1, &t2).unwrap(), t1);
    }

    #[test]
    fn merge_disjoint_adds_costs() {
        let t1 = tree(0, &[(0, 1, 3)]);
        let t2 = tree(1, &[(1, 2, 4), (1, 3, 5)]);
        let m = merge_and_prune(&t1, &t2).unwrap();
        assert_eq!(m.cost(), 12);
        assert_eq!(m.vertices(), [0, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn merge_overlap_drops_second_in_edge() {
        let t1 = tree(0, &[(0, 1, 3), (0, 2, 1)]);
        let t2 = tree(1, &[(1, 2, 4), (2, 3, 5)]);
        let m = merge_and_prune(&t1, &t2).unwrap();
        assert_eq!(m.cost(), 3 + 1 + 4 + 5 - 4);
        assert_eq!(m.in_edge(3).unwrap().parent, 2);
        assert_eq!(m.in_edge(2).unwrap().parent, 0);
    }

    #[test]
    fn merge_requires_shared_root() {
        let t1 = tree(0, &[(0, 1, 3)]);
        let t2 = tree(4, &[(4, 2, 4)]);
        assert_eq!(merge_and_prune(&t1, &t2), Err(Error::DisconnectedMerge(4)));
    }

    #[test]
    fn length_merge_prefers_short_paths() {
        let t1 = Arborescence::from_edges(
            0,
            [(1, TreeEdge::new(0, 1).with_length(1)), (2, TreeEdge::new(0, 1).with_length(10))],
        )
        .unwrap();
        let t2 = Arborescence::from_edges(
            1,
            [(2, TreeEdge::new(1, 1).with_length(1)), (3, TreeEdge::new(2, 1).with_length(1))],
        )
        .unwrap();
        let m = merge_by_length(&t1, &t2).unwrap();
        assert_eq!(m.path_length(3), Some(3));
        assert_eq!(m.in_edge(2).unwrap().parent, 1);
        assert!(m.cost() <= t1.cost() + t2.cost());
    }

    #[test]
    fn priority_merge_keeps_widest_paths() {
        let t1 = Arborescence::from_edges(
            0,
            [(1, TreeEdge::new(0, 1).with_priority(3)), (2, TreeEdge::new(0, 1).with_priority(1))],
        )
        .unwrap();
        let t2 = Arborescence::from_edges(1, [(2, TreeEdge::new(1, 1).with_priority(2))]).unwrap();
        let m = merge_by_priority(&t1, &t2).unwrap();
        assert_eq!(m.path_min_priority(2), Some(2));
    }
}
