//! Polymatroid Steiner tree: span a base of a matroid over the vertices.

use arbor::closure::build_metric_closure;
use arbor::exact::{brute_force_min_cover, CoverTarget, OracleBudget};
use arbor::graph::{DirectedGraph, Edge};
use arbor::oracle::Matroid;
use arbor::reductions::{solve_polymatroid, DriverConfig};
use arbor::VertexSet;

fn main() -> arbor::Result<()> {
    let g = DirectedGraph::from_edges(
        6,
        [Edge::new(0, 1, 2), Edge::new(1, 2, 2), Edge::new(2, 3, 2), Edge::new(0, 4, 1), Edge::new(4, 3, 1), Edge::new(0, 5, 4)],
    );
    let mc = build_metric_closure(&g);
    let ob = OracleBudget::default();

    // one vertex from {1, 2} and one from {3, 4, 5}
    let part: fn(&[usize]) -> VertexSet = |v| v.iter().copied().collect();
    let partition = Matroid::Partition { parts: vec![(part(&[1, 2]), 1), (part(&[3, 4, 5]), 1)] };
    // vertices 1..=4 label the edges of a 4-cycle; a base is any spanning path
    let cycle = Matroid::Graphic { nodes: 4, edges: vec![None, Some((0, 1)), Some((1, 2)), Some((2, 3)), Some((3, 0)), None] };

    for (name, m) in [("partition", partition), ("graphic 4-cycle", cycle)] {
        let sol = solve_polymatroid(&mc.matrix, 0, &m, &DriverConfig::default())?;
        let opt = brute_force_min_cover(&CoverTarget::Polymatroid { cost: &mc.matrix, matroid: &m }, 0, &ob)?.unwrap().0;
        let picked: Vec<usize> = sol.tree.vertices().iter().collect();
        println!("{name}: cost {} (optimum {opt}), vertices {picked:?}, rank {}/{}", sol.cost, m.rank(sol.tree.vertices()), m.full_rank());
    }
    Ok(())
}
