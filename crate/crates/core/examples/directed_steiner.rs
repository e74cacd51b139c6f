//! Directed Steiner tree by repeated orienteering with unit rewards on the
//! uncovered terminals.

use arbor::closure::build_metric_closure;
use arbor::exact::{brute_force_min_cover, CoverTarget, OracleBudget};
use arbor::graph::{DirectedGraph, Edge};
use arbor::reductions::{solve_directed_steiner, DriverConfig};
use arbor::VertexSet;

fn main() -> arbor::Result<()> {
    // a shared hub is cheaper than direct edges once both terminals are needed
    let g = DirectedGraph::from_edges(
        6,
        [
            Edge::new(0, 1, 10),
            Edge::new(1, 2, 1),
            Edge::new(1, 3, 1),
            Edge::new(0, 2, 12),
            Edge::new(0, 3, 12),
            Edge::new(0, 4, 3),
            Edge::new(4, 5, 3),
        ],
    );
    let mc = build_metric_closure(&g);
    let terminals: VertexSet = [2, 3, 5].into_iter().collect();

    let sol = solve_directed_steiner(&mc.matrix, 0, terminals, &DriverConfig::default())?;
    let opt = brute_force_min_cover(&CoverTarget::Steiner { cost: &mc.matrix, terminals }, 0, &OracleBudget::default())?
        .map(|(c, _)| c)
        .unwrap();
    println!("cost {} (optimum {opt}) at budget guess {} after {} rounds", sol.cost, sol.budget, sol.rounds);
    for (i, it) in sol.iterations.iter().enumerate() {
        println!("pass {i}: tree cost {} covers {:?}", it.tree.cost(), it.newly_covered.iter().collect::<Vec<_>>());
    }
    Ok(())
}
