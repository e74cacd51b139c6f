//! Seeded random instance families.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closure::{build_metric_closure, build_priority_closure};
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::instance::{Instance, InstanceKind};
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    RandomMetric,
    Layered,
    StarTrap,
    TwoCost,
    Priority,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::RandomMetric => "random-metric",
            Family::Layered => "layered",
            Family::StarTrap => "star-trap",
            Family::TwoCost => "two-cost",
            Family::Priority => "priority",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "random-metric" => Family::RandomMetric,
            "layered" => Family::Layered,
            "star-trap" => Family::StarTrap,
            "two-cost" => Family::TwoCost,
            "priority" => Family::Priority,
            _ => return Err(Error::Invalid(format!("unknown family {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub seed: u64,
    pub cost: (u64, u64),
    pub length: (u64, u64),
    pub reward: (u64, u64),
    /// Priority levels for the priority family.
    pub levels: u32,
    /// Terminal count; 0 picks one at random in `1..=min(4, n-1)`.
    pub terminals: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { n: 6, seed: 0, cost: (1, 20), length: (0, 4), reward: (0, 9), levels: 2, terminals: 0 }
    }
}

pub fn generate(family: Family, p: &GenParams) -> Instance {
    assert!(p.n >= 2 && p.n <= crate::set::MAX_VERTICES, "n must be in 2..=64");
    assert!(p.cost.0 <= p.cost.1 && p.length.0 <= p.length.1 && p.reward.0 <= p.reward.1);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed ^ family_salt(family));
    let mut inst = match family {
        Family::RandomMetric => random_metric(p, &mut rng),
        Family::Layered => layered(p, &mut rng),
        Family::StarTrap => star_trap(p, &mut rng),
        Family::TwoCost => two_cost(p, &mut rng),
        Family::Priority => priority(p, &mut rng),
    };
    if inst.budget == 0 {
        inst.budget = random_budget(&inst, &mut rng);
    }
    inst
}

fn family_salt(f: Family) -> u64 {
    match f {
        Family::RandomMetric => 0x9e37_79b9_7f4a_7c15,
        Family::Layered => 0xbf58_476d_1ce4_e5b9,
        Family::StarTrap => 0x94d0_49bb_1331_11eb,
        Family::TwoCost => 0x2545_f491_4f6c_dd1d,
        Family::Priority => 0x5851_f42d_4c95_7f2d,
    }
}

fn rewards(inst: &mut Instance, p: &GenParams, rng: &mut ChaCha8Rng) {
    for v in (0..p.n).filter(|&v| v != inst.root) {
        inst.rewards.push((v, rng.gen_range(p.reward.0..=p.reward.1)));
    }
}

fn pick_terminals(inst: &Instance, p: &GenParams, rng: &mut ChaCha8Rng) -> Vec<VertexId> {
    let mut others: Vec<VertexId> = (0..p.n).filter(|&v| v != inst.root).collect();
    others.shuffle(rng);
    let k = if p.terminals == 0 { rng.gen_range(1..=others.len().min(4)) } else { p.terminals.min(others.len()) };
    let mut t = others[..k].to_vec();
    t.sort_unstable();
    t
}

/// Uniform in `[star/5, 3·star/5]` with `star` the closure cost of reaching
/// every vertex directly from the root.
fn random_budget(inst: &Instance, rng: &mut ChaCha8Rng) -> u64 {
    let c = build_metric_closure(&inst.graph());
    let star: u64 = (0..inst.n).filter(|&v| v != inst.root && c.matrix.is_finite(inst.root, v)).map(|v| c.cost(inst.root, v)).sum();
    let lo = (star / 5).max(1);
    let hi = (3 * star / 5).max(lo);
    rng.gen_range(lo..=hi)
}

fn random_metric(p: &GenParams, rng: &mut ChaCha8Rng) -> Instance {
    let mut inst = Instance::new(InstanceKind::Sto, p.n, 0);
    for u in 0..p.n {
        for v in 0..p.n {
            if u != v {
                inst.edges.push(Edge::new(u, v, rng.gen_range(p.cost.0..=p.cost.1)));
            }
        }
    }
    rewards(&mut inst, p, rng);
    let t = pick_terminals(&inst, p, rng);
    inst.terminals = t.into_iter().map(|v| (v, None)).collect();
    inst
}

/// Root, then layers of about equal width with edges only between
/// consecutive layers; terminals sit in the last layer.
fn layered(p: &GenParams, rng: &mut ChaCha8Rng) -> Instance {
    let mut inst = Instance::new(InstanceKind::Sto, p.n, 0);
    let rest = p.n - 1;
    let depth = if rest >= 4 { 3 } else { rest.min(2) };
    let mut layers: Vec<Vec<VertexId>> = vec![vec![0]];
    let mut next = 1;
    for l in 0..depth {
        let width = (rest - (next - 1)) / (depth - l);
        layers.push((next..next + width).collect());
        next += width;
    }
    for w in layers.windows(2) {
        for &u in &w[0] {
            for &v in &w[1] {
                inst.edges.push(Edge::new(u, v, rng.gen_range(p.cost.0..=p.cost.1)));
            }
        }
    }
    rewards(&mut inst, p, rng);
    let last = layers.last().expect("at least one layer");
    let k = if p.terminals == 0 { rng.gen_range(1..=last.len().min(4)) } else { p.terminals.min(last.len()) };
    inst.terminals = last[..k].iter().map(|&v| (v, None)).collect();
    inst
}

/// Cheap low-reward leaves next to the root and one expensive hub behind
/// which cheap high-reward leaves wait.
fn star_trap(p: &GenParams, rng: &mut ChaCha8Rng) -> Instance {
    let mut inst = Instance::new(InstanceKind::Sto, p.n, 0);
    let hub = 1;
    let decoys = (p.n - 2) / 2;
    let hi = p.cost.1;
    inst.edges.push(Edge::new(0, hub, hi.max(2)));
    inst.rewards.push((hub, 0));
    for v in 2..p.n {
        if v < 2 + decoys {
            inst.edges.push(Edge::new(0, v, rng.gen_range(p.cost.0..=p.cost.0 + 1)));
            inst.rewards.push((v, p.reward.0 + 1));
        } else {
            inst.edges.push(Edge::new(hub, v, p.cost.0));
            inst.edges.push(Edge::new(0, v, 2 * hi));
            inst.rewards.push((v, p.reward.1.max(2)));
        }
    }
    inst.terminals = ((2 + decoys)..p.n).take(4).map(|v| (v, None)).collect();
    inst
}

/// Complete digraph; each pair gets a cheap-long and sometimes a second
/// short-expensive parallel edge. Deadlines and a length budget up to 12.
fn two_cost(p: &GenParams, rng: &mut ChaCha8Rng) -> Instance {
    let mut inst = Instance::new(InstanceKind::Stolc, p.n, 0);
    for u in 0..p.n {
        for v in 0..p.n {
            if u == v {
                continue;
            }
            let c = rng.gen_range(p.cost.0..=p.cost.1);
            let l = rng.gen_range(p.length.0..=p.length.1);
            inst.edges.push(Edge::new(u, v, c).with_length(l));
            if rng.gen_bool(0.3) && l > p.length.0 {
                let c2 = rng.gen_range(c..=p.cost.1.max(c) + p.cost.1 / 2);
                let l2 = rng.gen_range(p.length.0..l);
                inst.edges.push(Edge::new(u, v, c2).with_length(l2));
            }
        }
    }
    rewards(&mut inst, p, rng);
    let t = pick_terminals(&inst, p, rng);
    inst.terminals = t.into_iter().map(|v| (v, None)).collect();
    inst.length_budget = Some(rng.gen_range(0..=12));
    for v in (0..p.n).filter(|&v| v != inst.root) {
        inst.deadlines.push((v, rng.gen_range(0..=2 * p.length.1.max(1))));
    }
    inst
}

/// Edges carry priorities in `1..=levels`; higher priority costs more on
/// average. Terminals get random requirements, each reachable at its level.
fn priority(p: &GenParams, rng: &mut ChaCha8Rng) -> Instance {
    let mut inst = Instance::new(InstanceKind::Prio, p.n, 0);
    let levels = p.levels.max(1);
    for u in 0..p.n {
        for v in 0..p.n {
            if u == v {
                continue;
            }
            let q = rng.gen_range(1..=levels);
            let c = rng.gen_range(p.cost.0..=p.cost.1) + (q as u64 - 1) * (p.cost.1 / 4);
            inst.edges.push(Edge::new(u, v, c).with_priority(q));
        }
    }
    rewards(&mut inst, p, rng);
    let t = pick_terminals(&inst, p, rng);
    inst.terminals = t.into_iter().map(|v| (v, Some(rng.gen_range(1..=levels)))).collect();
    // a top-priority root edge for any terminal its requirement cuts off
    let pc = build_priority_closure(&inst.graph(), levels);
    for &(t, q) in &inst.terminals.clone() {
        if !pc.level(q.unwrap_or(1)).matrix.is_finite(inst.root, t) {
            let c = p.cost.1 + (levels as u64 - 1) * (p.cost.1 / 4);
            inst.edges.push(Edge::new(inst.root, t, c).with_priority(levels));
        }
    }
    inst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_text() {
        for fam in [Family::RandomMetric, Family::Layered, Family::StarTrap, Family::TwoCost, Family::Priority] {
            let p = GenParams { n: 7, seed: 11, ..GenParams::default() };
            let a = generate(fam, &p).emit();
            assert_eq!(a, generate(fam, &p).emit());
            assert_eq!(Instance::parse(&a).unwrap().emit(), a, "{fam}");
        }
    }
}
