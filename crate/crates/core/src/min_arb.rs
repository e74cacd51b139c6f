//! Minimum-cost spanning arborescence (Chu-Liu/Edmonds) on a vertex subset of
//! a cost matrix.

use crate::arborescence::{Arborescence, TreeEdge};
use crate::closure::CostMatrix;
use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::VertexId;

/// Minimum arborescence rooted at `root` spanning exactly `w` (which must
/// contain `root`). Ties between in-edges go to the smallest parent id.
pub fn min_arborescence(m: &CostMatrix, root: VertexId, w: VertexSet) -> Result<Arborescence> {
    let verts: Vec<VertexId> = w.with(root).iter().collect();
    let k = verts.len();
    let r = verts.iter().position(|&v| v == root).unwrap();
    let mut cost = vec![vec![None; k]; k];
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate() {
            if i != j && m.is_finite(u, v) {
                cost[i][j] = Some(m.get(u, v) as i64);
            }
        }
    }
    let parent = edmonds(&cost, r).map_err(|i| Error::Unreachable(verts[i]))?;
    Arborescence::from_edges(
        root,
        (0..k).filter(|&i| i != r).map(|i| {
            let p = parent[i];
            (verts[i], TreeEdge::new(verts[p], m.get(verts[p], verts[i])))
        }),
    )
}

/// Returns the parent of every non-root node, or the index of a node with no
/// finite in-edge. `None` marks a missing edge.
fn edmonds(cost: &[Vec<Option<i64>>], root: usize) -> std::result::Result<Vec<usize>, usize> {
    let k = cost.len();
    let mut parent = vec![usize::MAX; k];
    for v in 0..k {
        if v == root {
            continue;
        }
        let mut best: Option<i64> = None;
        for u in 0..k {
            if u == v {
                continue;
            }
            if let Some(c) = cost[u][v] {
                if best.is_none_or(|b| c < b) {
                    best = Some(c);
                    parent[v] = u;
                }
            }
        }
        if best.is_none() {
            return Err(v);
        }
    }
    let Some(cycle) = find_cycle(&parent, root) else {
        return Ok(parent);
    };

    // contract the cycle into node `c`, the last index of the reduced graph
    let in_cycle: Vec<bool> = (0..k).map(|v| cycle.contains(&v)).collect();
    let outside: Vec<usize> = (0..k).filter(|&v| !in_cycle[v]).collect();
    let mut index = vec![usize::MAX; k];
    for (i, &v) in outside.iter().enumerate() {
        index[v] = i;
    }
    let c = outside.len();
    let mut sub = vec![vec![None; c + 1]; c + 1];
    let mut enter = vec![usize::MAX; c + 1];
    let mut leave = vec![usize::MAX; c + 1];
    for &u in &outside {
        for &v in &outside {
            if u != v {
                sub[index[u]][index[v]] = cost[u][v];
            }
        }
        for &v in &cycle {
            if let Some(x) = cost[u][v] {
                let reduced = x - cost[parent[v]][v].unwrap();
                if sub[index[u]][c].is_none_or(|b| reduced < b) {
                    sub[index[u]][c] = Some(reduced);
                    enter[index[u]] = v;
                }
            }
            if let Some(x) = cost[v][u] {
                if sub[c][index[u]].is_none_or(|b| x < b) {
                    sub[c][index[u]] = Some(x);
                    leave[index[u]] = v;
                }
            }
        }
    }
    let sub_parent = edmonds(&sub, index[root]).map_err(|i| if i == c { cycle[0] } else { outside[i] })?;

    let mut out = parent.clone();
    for &v in &outside {
        if v == root {
            continue;
        }
        let p = sub_parent[index[v]];
        out[v] = if p == c { leave[index[v]] } else { outside[p] };
    }
    let pu = sub_parent[c];
    out[enter[pu]] = outside[pu];
    Ok(out)
}

fn find_cycle(parent: &[usize], root: usize) -> Option<Vec<usize>> {
    let k = parent.len();
    let mut color = vec![0u8; k]; // 0 unvisited, 1 on current walk, 2 done
    for s in 0..k {
        if color[s] != 0 || s == root {
            continue;
        }
        let mut walk = Vec::new();
        let mut v = s;
        while v != root && color[v] == 0 {
            color[v] = 1;
            walk.push(v);
            v = parent[v];
        }
        if v != root && color[v] == 1 {
            let start = walk.iter().position(|&x| x == v).unwrap();
            return Some(walk[start..].to_vec());
        }
        for x in walk {
            color[x] = 2;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::INFEASIBLE_COST;

    const X: u64 = INFEASIBLE_COST;

    #[test]
    fn two_vertex_tree() {
        let m = CostMatrix::from_rows(&[vec![0, 5], vec![X, 0]]);
        let t = min_arborescence(&m, 0, [0, 1].into_iter().collect()).unwrap();
        assert_eq!(t.cost(), 5);
    }

    #[test]
    fn prefers_chain_when_cheaper() {
        let m = CostMatrix::from_rows(&[vec![0, 1, 10], vec![50, 0, 2], vec![50, 50, 0]]);
        let t = min_arborescence(&m, 0, VertexSet::full(3)).unwrap();
        assert_eq!(t.cost(), 3);
    }

    #[test]
    fn contracts_cycles() {
        // cheapest in-edges form the cycle 1 <-> 2
        let m = CostMatrix::from_rows(&[vec![0, 10, 12], vec![X, 0, 1], vec![X, 1, 0]]);
        let t = min_arborescence(&m, 0, VertexSet::full(3)).unwrap();
        assert_eq!(t.cost(), 11);
    }

    #[test]
    fn unreachable_vertex_reported() {
        let m = CostMatrix::from_rows(&[vec![0, X], vec![X, 0]]);
        assert_eq!(min_arborescence(&m, 0, VertexSet::full(2)), Err(Error::Unreachable(1)));
    }
}
