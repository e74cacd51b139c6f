//! Priority Steiner tree: each terminal needs a root path whose every edge
//! has at least its required priority.

use arbor::graph::{DirectedGraph, Edge};
use arbor::reductions::{priority_closure_of, solve_priority_steiner, DriverConfig};
use arbor::VertexSet;

fn main() -> arbor::Result<()> {
    let g = DirectedGraph::from_edges(
        5,
        [
            Edge::new(0, 1, 1).with_priority(1),
            Edge::new(0, 1, 4).with_priority(2),
            Edge::new(1, 2, 1).with_priority(2),
            Edge::new(1, 3, 1).with_priority(1),
            Edge::new(0, 4, 2).with_priority(2),
        ],
    );
    let pc = priority_closure_of(&g);
    let terminals: VertexSet = [2, 3, 4].into_iter().collect();
    for requirement in [vec![1, 1, 1, 1, 1], vec![1, 1, 2, 1, 2]] {
        let sol = solve_priority_steiner(&pc, 0, terminals, &requirement, &DriverConfig::default())?;
        let paths: Vec<(usize, u32)> = terminals.iter().map(|t| (t, sol.tree.path_min_priority(t).unwrap())).collect();
        println!("requirements {requirement:?}: cost {}, (terminal, path priority) {paths:?}", sol.cost);
    }
    Ok(())
}
