use crate::VertexId;

/// One directed edge of the input multigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub cost: u64,
    pub length: Option<u64>,
    pub priority: Option<u32>,
}

impl Edge {
    pub fn new(from: VertexId, to: VertexId, cost: u64) -> Self {
        Edge { from, to, cost, length: None, priority: None }
    }

    pub fn with_length(mut self, length: u64) -> Self {
        self.length = Some(length);
        self
    }

    pub fn with_priority(mut self, priority: u32) -> Self {
        self.priority = Some(priority);
        self
    }

    pub fn len_or_zero(&self) -> u64 {
        self.length.unwrap_or(0)
    }

    pub fn priority_or_lowest(&self) -> u32 {
        self.priority.unwrap_or(1)
    }
}

/// Directed multigraph on vertices `0..n`. Self-loops are dropped on insertion.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl DirectedGraph {
    pub fn new(n: usize) -> Self {
        DirectedGraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = DirectedGraph::new(n);
        for e in edges {
            g.add_edge(e);
        }
        g
    }

    /// Adds `e` unless it is a self-loop. Panics on out-of-range endpoints.
    pub fn add_edge(&mut self, e: Edge) {
        assert!(e.from < self.n && e.to < self.n, "edge {e:?} out of range for n={}", self.n);
        if e.from != e.to {
            self.edges.push(e);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn max_priority(&self) -> u32 {
        self.edges.iter().map(Edge::priority_or_lowest).max().unwrap_or(1)
    }

    pub fn total_cost(&self) -> u64 {
        self.edges.iter().map(|e| e.cost).sum()
    }

    pub fn total_length(&self) -> u64 {
        self.edges.iter().map(Edge::len_or_zero).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_loops_dropped() {
        let g = DirectedGraph::from_edges(2, [Edge::new(0, 0, 1), Edge::new(0, 1, 2)]);
        assert_eq!(g.edges().len(), 1);
    }
}
