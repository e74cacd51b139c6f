use crate::arborescence::Arborescence;
use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::VertexId;

/// A balanced split of a tree at vertex `vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub vertex: VertexId,
    /// Contains the tree root and `vertex`.
    pub side_a: VertexSet,
    /// Rooted at `vertex`.
    pub side_b: VertexSet,
}

/// Centroid split: pick the vertex minimising the largest component of
/// `T - v`, then pack the components into two groups, largest first, each
/// into the lighter group. The group holding the root becomes side A.
pub fn find_balanced_separator(t: &Arborescence) -> Result<Separation> {
    if t.len() < 2 {
        return Err(Error::TreeTooSmall);
    }
    let root = t.root();
    let verts: Vec<VertexId> = t.vertices().iter().collect();
    let subtree = subtree_sets(t);

    let mut best: Option<(usize, VertexId)> = None;
    for &v in &verts {
        let largest = components(t, &subtree, v).iter().map(|c| c.len()).max().unwrap_or(0);
        if best.is_none_or(|(b, _)| largest < b) {
            best = Some((largest, v));
        }
    }
    let v = best.expect("non-empty tree").1;

    let mut comps = components(t, &subtree, v);
    // stable: equal sizes keep the up-component (if any) first
    comps.sort_by(|a, b| b.len().cmp(&a.len()));
    let mut groups = [VertexSet::EMPTY; 2];
    for c in comps {
        let g = if groups[0].len() <= groups[1].len() { 0 } else { 1 };
        groups[g] = groups[g].union(c);
    }
    let (a, b) = if v != root && groups[1].contains(root) { (groups[1], groups[0]) } else { (groups[0], groups[1]) };
    Ok(Separation { vertex: v, side_a: a.with(v), side_b: b.with(v) })
}

fn subtree_sets(t: &Arborescence) -> [VertexSet; 64] {
    let mut sub = [VertexSet::EMPTY; 64];
    for v in t.vertices().iter() {
        sub[v].insert(v);
    }
    for &(c, _) in t.edges() {
        let mut cur = c;
        while let Some(e) = t.in_edge(cur) {
            sub[e.parent].insert(c);
            cur = e.parent;
        }
    }
    sub
}

/// Connected components of `T - v`: the child subtrees of `v`, then (if `v`
/// is not the root) everything outside `v`'s subtree.
fn components(t: &Arborescence, subtree: &[VertexSet; 64], v: VertexId) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if v != t.root() {
        out.push(t.vertices().difference(subtree[v]));
    }
    for c in t.children(v) {
        out.push(subtree[c]);
    }
    out
}
