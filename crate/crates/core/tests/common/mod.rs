//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use arbor::arborescence::{Arborescence, TreeEdge};
use arbor::closure::CostMatrix;
use arbor::oracle::{LinearRewards, Matroid, RewardOracle, WeightedCoverage};
use arbor::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 0x51ed)
}

/// Random coverage function: eight items, each vertex covers up to three.
pub fn random_coverage(n: usize, seed: u64) -> WeightedCoverage {
    let mut r = rng(seed);
    let items = 8;
    let weights: Vec<u64> = (0..items).map(|_| r.gen_range(1..=9)).collect();
    let covers = (0..n)
        .map(|v| if v == 0 { Vec::new() } else { (0..r.gen_range(0..=3)).map(|_| r.gen_range(0..items)).collect() })
        .collect();
    WeightedCoverage::new(covers, weights)
}

pub fn random_linear(n: usize, seed: u64) -> LinearRewards {
    let mut r = rng(seed);
    LinearRewards::new((0..n).map(|v| if v == 0 { 0 } else { r.gen_range(0..=9) }).collect())
}

/// Uniform or partition matroid over the non-root vertices.
pub fn random_matroid(n: usize, seed: u64) -> Matroid {
    let mut r = rng(seed ^ 0xabc);
    let ground = VertexSet::full(n).without(0);
    if seed.is_multiple_of(2) {
        Matroid::Uniform { ground, k: r.gen_range(1..=3.min(n - 1)) }
    } else {
        let parts_n = r.gen_range(1..=3.min(n - 1));
        let mut parts = vec![VertexSet::EMPTY; parts_n];
        for v in ground.iter() {
            parts[r.gen_range(0..parts_n)].insert(v);
        }
        let parts = parts.into_iter().filter(|p| !p.is_empty()).map(|p| (p, r.gen_range(1..=2))).collect();
        Matroid::Partition { parts }
    }
}

/// Every arborescence rooted at 0 over closure edges whose cost fits the
/// budget, by brute force over parent functions. Only for tiny `n`.
pub fn naive_best(cost: &CostMatrix, f: &dyn RewardOracle, budget: u64) -> u64 {
    let n = cost.n();
    let mut best = 0;
    // parent[v] == v means v is absent
    let mut parent = vec![0usize; n];
    fn rec(v: usize, n: usize, parent: &mut Vec<usize>, cost: &CostMatrix, f: &dyn RewardOracle, budget: u64, best: &mut u64) {
        if v == n {
            let mut in_tree = VertexSet::singleton(0);
            let mut total = 0u64;
            for u in 1..n {
                if parent[u] == u {
                    continue;
                }
                // walk up; reject cycles and absent ancestors
                let (mut cur, mut steps) = (u, 0);
                while cur != 0 {
                    let p = parent[cur];
                    if p == cur || steps > n {
                        return;
                    }
                    cur = p;
                    steps += 1;
                }
                in_tree.insert(u);
                total += cost.get(parent[u], u);
            }
            if total <= budget {
                *best = (*best).max(f.eval(in_tree));
            }
            return;
        }
        for p in 0..n {
            if p != v && !cost.is_finite(p, v) {
                continue;
            }
            parent[v] = p;
            rec(v + 1, n, parent, cost, f, budget, best);
        }
    }
    rec(1, n, &mut parent, cost, f, budget, &mut best);
    best
}

/// A tree from `(parent, child)` pairs with unit costs.
pub fn tree(root: usize, edges: &[(usize, usize)]) -> Arborescence {
    Arborescence::from_edges(root, edges.iter().map(|&(p, c)| (c, TreeEdge::new(p, 1)))).unwrap()
}
