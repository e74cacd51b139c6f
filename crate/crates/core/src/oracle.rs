//! Monotone submodular value oracles over vertex sets.

use std::fmt;

use crate::arborescence::Arborescence;
use crate::set::VertexSet;
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Linear,
    Coverage,
    MatroidRank,
    Gated,
}

/// Integer-valued monotone submodular set function with `f(∅) = 0`.
pub trait RewardOracle: Send + Sync {
    fn eval(&self, s: VertexSet) -> u64;

    fn kind(&self) -> OracleKind;

    /// Vertices the function may depend on.
    fn ground(&self) -> VertexSet;

    /// Some `U` with `f(S) <= U` for all `S`.
    fn upper_bound(&self) -> u64 {
        self.eval(self.ground())
    }

    /// `f(X ∪ S) - f(X)`.
    fn marginal(&self, x: VertexSet, s: VertexSet) -> u64 {
        self.eval(x.union(s)) - self.eval(x)
    }
}

pub fn marginal(f: &dyn RewardOracle, x: VertexSet, s: VertexSet) -> u64 {
    f.marginal(x, s)
}

/// Additive rewards `f(S) = Σ p_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRewards {
    weights: Vec<u64>,
}

impl LinearRewards {
    pub fn new(weights: Vec<u64>) -> Self {
        assert!(weights.len() <= 64);
        LinearRewards { weights }
    }

    /// Reward one on every vertex of `s`, zero elsewhere.
    pub fn unit(n: usize, s: VertexSet) -> Self {
        LinearRewards { weights: (0..n).map(|v| s.contains(v) as u64).collect() }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

impl RewardOracle for LinearRewards {
    fn eval(&self, s: VertexSet) -> u64 {
        s.iter().filter(|&v| v < self.weights.len()).map(|v| self.weights[v]).sum()
    }

    fn kind(&self) -> OracleKind {
        OracleKind::Linear
    }

    fn ground(&self) -> VertexSet {
        VertexSet::full(self.weights.len())
    }
}

/// Weighted coverage: vertex `v` covers the items in `covers[v]`; the value
/// of a set is the total weight of the items it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCoverage {
    covers: Vec<Vec<usize>>,
    item_weights: Vec<u64>,
}

impl WeightedCoverage {
    pub fn new(covers: Vec<Vec<usize>>, item_weights: Vec<u64>) -> Self {
        assert!(covers.iter().flatten().all(|&i| i < item_weights.len()));
        WeightedCoverage { covers, item_weights }
    }
}

impl RewardOracle for WeightedCoverage {
    fn eval(&self, s: VertexSet) -> u64 {
        let mut hit = vec![false; self.item_weights.len()];
        for v in s.iter().filter(|&v| v < self.covers.len()) {
            for &i in &self.covers[v] {
                hit[i] = true;
            }
        }
        hit.iter().zip(&self.item_weights).filter(|(h, _)| **h).map(|(_, w)| w).sum()
    }

    fn kind(&self) -> OracleKind {
        OracleKind::Coverage
    }

    fn ground(&self) -> VertexSet {
        VertexSet::full(self.covers.len())
    }
}

/// Matroids on vertex ground sets, given by their rank functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matroid {
    /// Every subset of `ground` of size at most `k` is independent.
    Uniform { ground: VertexSet, k: usize },
    /// At most `quota` elements from each part.
    Partition { parts: Vec<(VertexSet, usize)> },
    /// Element `v` is the edge `edges[v]` of an auxiliary graph; independent
    /// sets are forests. `None` marks a vertex outside the ground set.
    Graphic { nodes: usize, edges: Vec<Option<(usize, usize)>> },
}

impl Matroid {
    pub fn ground(&self) -> VertexSet {
        match self {
            Matroid::Uniform { ground, .. } => *ground,
            Matroid::Partition { parts } => parts.iter().fold(VertexSet::EMPTY, |a, (p, _)| a.union(*p)),
            Matroid::Graphic { edges, .. } => {
                edges.iter().enumerate().filter(|(_, e)| e.is_some()).map(|(v, _)| v).collect()
            }
        }
    }

    pub fn rank(&self, s: VertexSet) -> usize {
        match self {
            Matroid::Uniform { ground, k } => s.intersection(*ground).len().min(*k),
            Matroid::Partition { parts } => parts.iter().map(|(p, q)| s.intersection(*p).len().min(*q)).sum(),
            Matroid::Graphic { nodes, edges } => {
                let mut uf: Vec<usize> = (0..*nodes).collect();
                fn find(uf: &mut [usize], mut x: usize) -> usize {
                    while uf[x] != x {
                        uf[x] = uf[uf[x]];
                        x = uf[x];
                    }
                    x
                }
                let mut r = 0;
                for v in s.iter() {
                    if let Some(Some((a, b))) = edges.get(v) {
                        let (ra, rb) = (find(&mut uf, *a), find(&mut uf, *b));
                        if ra != rb {
                            uf[ra] = rb;
                            r += 1;
                        }
                    }
                }
                r
            }
        }
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }
}

/// Rank function of a matroid contracted by `c`: `S ↦ rank(S ∪ C) − rank(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedRank {
    matroid: Matroid,
    contracted: VertexSet,
    base_rank: usize,
}

impl RewardOracle for ContractedRank {
    fn eval(&self, s: VertexSet) -> u64 {
        (self.matroid.rank(s.union(self.contracted)) - self.base_rank) as u64
    }

    fn kind(&self) -> OracleKind {
        OracleKind::MatroidRank
    }

    fn ground(&self) -> VertexSet {
        self.matroid.ground()
    }

    fn upper_bound(&self) -> u64 {
        (self.matroid.full_rank() - self.base_rank) as u64
    }
}

pub fn contract(m: &Matroid, c: VertexSet) -> ContractedRank {
    ContractedRank { matroid: m.clone(), contracted: c, base_rank: m.rank(c) }
}

/// Plain rank oracle (`contract` by the empty set).
pub fn rank_oracle(m: &Matroid) -> ContractedRank {
    contract(m, VertexSet::EMPTY)
}

/// Which tree vertices may claim their reward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    /// `v` counts iff `offset + l_T(v) <= deadline[v]`.
    Deadline { deadlines: Vec<u64>, offset: u64 },
    /// `v` counts iff `min(entry, path min-priority) >= requirement[v]`.
    Priority { requirement: Vec<u32>, entry: u32 },
}

impl Gate {
    pub fn deadlines(deadlines: Vec<u64>) -> Self {
        Gate::Deadline { deadlines, offset: 0 }
    }

    pub fn priorities(requirement: Vec<u32>) -> Self {
        Gate::Priority { requirement, entry: u32::MAX }
    }

    /// Vertices of `t` passing the gate.
    pub fn claimed(&self, t: &Arborescence) -> VertexSet {
        match self {
            Gate::Deadline { deadlines, offset } => {
                let len = t.lengths();
                t.vertices().iter().filter(|&v| offset + len[v] <= deadlines.get(v).copied().unwrap_or(u64::MAX)).collect()
            }
            Gate::Priority { requirement, entry } => {
                let pr = t.min_priorities();
                t.vertices().iter().filter(|&v| (*entry).min(pr[v]) >= requirement.get(v).copied().unwrap_or(1)).collect()
            }
        }
    }

    pub fn admits(&self, v: VertexId, path_length: u64, path_priority: u32) -> bool {
        match self {
            Gate::Deadline { deadlines, offset } => offset + path_length <= deadlines.get(v).copied().unwrap_or(u64::MAX),
            Gate::Priority { requirement, entry } => (*entry).min(path_priority) >= requirement.get(v).copied().unwrap_or(1),
        }
    }
}

/// `f` evaluated on the gated vertex set of `t`.
pub fn gated_value(f: &dyn RewardOracle, t: &Arborescence, gate: &Gate) -> u64 {
    f.eval(gate.claimed(t))
}

impl fmt::Debug for dyn RewardOracle + '_ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RewardOracle({:?})", self.kind())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arborescence::TreeEdge;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn absorbed_marginal_is_zero() {
        let f = LinearRewards::new(vec![1, 2, 3, 4]);
        assert_eq!(f.marginal(set(&[1, 2, 3]), set(&[1, 3])), 0);
    }

    #[test]
    fn linear_marginal() {
        let f = LinearRewards::new(vec![0, 3, 7]);
        assert_eq!(f.marginal(set(&[1]), set(&[1, 2])), 7);
    }

    #[test]
    fn uniform_contraction_caps_rank() {
        let m = Matroid::Uniform { ground: VertexSet::full(4), k: 2 };
        let f = contract(&m, set(&[0]));
        assert_eq!(f.eval(set(&[1])), 1);
        assert_eq!(f.eval(set(&[1, 2])), 1);
        assert_eq!(f.upper_bound(), 1);
    }

    #[test]
    fn empty_contraction_is_rank() {
        let m = Matroid::Partition { parts: vec![(set(&[0, 1]), 1), (set(&[2, 3]), 2)] };
        let f = contract(&m, VertexSet::EMPTY);
        for s in VertexSet::full(4).subsets() {
            assert_eq!(f.eval(s) as usize, m.rank(s));
        }
    }

    #[test]
    fn graphic_rank_of_four_cycle() {
        let m = Matroid::Graphic { nodes: 4, edges: vec![Some((0, 1)), Some((1, 2)), Some((2, 3)), Some((3, 0))] };
        assert_eq!(m.rank(VertexSet::full(4)), 3);
        assert_eq!(m.rank(set(&[0, 2])), 2);
    }

    #[test]
    fn deadline_gate_boundaries() {
        let f = LinearRewards::new(vec![0, 5]);
        let t = Arborescence::from_edges(0, [(1, TreeEdge::new(0, 1).with_length(2))]).unwrap();
        assert_eq!(gated_value(&f, &t, &Gate::deadlines(vec![0, 1])), 0);
        assert_eq!(gated_value(&f, &t, &Gate::deadlines(vec![0, 2])), 5);
    }

    #[test]
    fn priority_gate() {
        let f = LinearRewards::new(vec![0, 5, 1]);
        let t = Arborescence::from_edges(
            0,
            [(1, TreeEdge::new(0, 1).with_priority(2)), (2, TreeEdge::new(1, 1).with_priority(1))],
        )
        .unwrap();
        assert_eq!(gated_value(&f, &t, &Gate::priorities(vec![1, 2, 2])), 5);
    }
}
