//! Non-dominated outcome sets of a recursion frame.

use std::sync::Arc;

use crate::arborescence::Arborescence;
use crate::set::VertexSet;

/// One candidate tree of a frame with the measures the recursion compares.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub tree: Arc<Arborescence>,
    /// Marginal reward over the frame's augmentation set.
    pub value: u64,
    pub cost: u64,
    /// Charged length sum, offset by the frame's accrued root length.
    pub charge: u64,
    /// Tree vertices whose reward is gated off.
    pub unclaimed: u32,
    /// Per responsibility vertex (ascending id), smaller is better.
    pub bounds: Vec<u64>,
    /// Vertices handed on to later calls as collected.
    pub chain: VertexSet,
}

impl Outcome {
    /// `self` is at least as good as `o` in every measure.
    pub fn covers(&self, o: &Outcome) -> bool {
        self.value >= o.value
            && self.cost <= o.cost
            && self.charge <= o.charge
            && self.unclaimed <= o.unclaimed
            && self.bounds.iter().zip(&o.bounds).all(|(a, b)| a <= b)
    }

    /// Selection order: higher value, then lower cost, charge, unclaimed count.
    fn rank_key(&self) -> (std::cmp::Reverse<u64>, u64, u64, u32) {
        (std::cmp::Reverse(self.value), self.cost, self.charge, self.unclaimed)
    }
}

/// Limits a selected outcome must respect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    pub budget: u64,
    pub length: u64,
    /// Caps aligned with [`Outcome::bounds`]; empty means uncapped.
    pub caps: Vec<u64>,
}

impl Limits {
    pub fn budget(budget: u64) -> Self {
        Limits { budget, length: u64::MAX, caps: Vec::new() }
    }

    pub fn admits(&self, o: &Outcome) -> bool {
        o.cost <= self.budget
            && o.charge <= self.length
            && (self.caps.is_empty() || o.bounds.iter().zip(&self.caps).all(|(b, c)| b <= c))
    }
}

/// Set of mutually non-covering outcomes. Among equal outcomes the first
/// inserted is kept.
///
/// In `plain` mode only value and cost are compared; entries are then kept
/// sorted by cost with strictly increasing value.
#[derive(Debug, Clone, Default)]
pub struct Frontier {
    plain: bool,
    items: Vec<Outcome>,
}

impl Frontier {
    pub fn new(plain: bool) -> Self {
        Frontier { plain, items: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Outcome] {
        &self.items
    }

    /// Whether an outcome with these measures would be rejected (plain mode).
    pub fn rejects_plain(&self, value: u64, cost: u64) -> bool {
        debug_assert!(self.plain);
        let pos = self.items.partition_point(|o| o.cost <= cost);
        pos > 0 && self.items[pos - 1].value >= value
    }

    pub fn insert(&mut self, o: Outcome) -> bool {
        if self.plain {
            if self.rejects_plain(o.value, o.cost) {
                return false;
            }
            let pos = self.items.partition_point(|x| x.cost < o.cost);
            let end = pos + self.items[pos..].iter().take_while(|x| x.value <= o.value).count();
            self.items.splice(pos..end, std::iter::once(o));
            return true;
        }
        if self.items.iter().any(|x| x.covers(&o)) {
            return false;
        }
        self.items.retain(|x| !o.covers(x));
        self.items.push(o);
        true
    }

    /// Best admitted outcome: highest value, then lowest cost, charge and
    /// unclaimed count, then earliest inserted.
    pub fn best(&self, lim: &Limits) -> Option<&Outcome> {
        if self.plain && lim.length == u64::MAX && lim.caps.is_empty() {
            return self.best_within(lim.budget);
        }
        let mut best: Option<&Outcome> = None;
        for o in self.items.iter().filter(|o| lim.admits(o)) {
            if best.is_none_or(|b| o.rank_key() < b.rank_key()) {
                best = Some(o);
            }
        }
        best
    }

    /// Plain-mode lookup of the best outcome with cost at most `budget`.
    pub fn best_within(&self, budget: u64) -> Option<&Outcome> {
        debug_assert!(self.plain);
        let pos = self.items.partition_point(|o| o.cost <= budget);
        pos.checked_sub(1).map(|i| &self.items[i])
    }

    /// Plain-mode index of [`Frontier::best_within`].
    pub fn index_within(&self, budget: u64) -> Option<usize> {
        self.items.partition_point(|o| o.cost <= budget).checked_sub(1)
    }
}
