//! Single-sink buy-at-bulk: pay each edge's fixed cost once plus its length
//! for every terminal routed over it. Concave per-edge cost functions become
//! parallel (cost, length) edges first.

use arbor::reductions::{buy_at_bulk_objective, concave_to_two_cost, solve_buy_at_bulk, BuyAtBulkInstance, DriverConfig};
use arbor::VertexSet;

fn main() -> arbor::Result<()> {
    // g(x) = min(3x, x + 4): cheap to open, expensive per unit, or the reverse
    let pipe = vec![(0, 0), (1, 3), (2, 6), (4, 8), (8, 12)];
    println!("envelope of pipe samples: {:?}", concave_to_two_cost(&pipe)?);

    let terminals: VertexSet = [2, 3, 4].into_iter().collect();
    let inst = BuyAtBulkInstance::from_concave(
        5,
        0,
        terminals,
        &[
            (0, 1, pipe.clone()),
            (1, 2, vec![(0, 0), (1, 1)]),
            (1, 3, vec![(0, 0), (1, 1)]),
            (1, 4, vec![(0, 0), (1, 2)]),
            (0, 4, vec![(0, 0), (1, 4)]),
        ],
    )?;
    println!("{} parallel edges", inst.graph.edges().len());

    let sol = solve_buy_at_bulk(&inst, &DriverConfig::default())?;
    println!(
        "objective {} = cost {} + routed length {}, budget guess {}",
        sol.objective,
        sol.cost,
        buy_at_bulk_objective(&sol.tree, terminals) - sol.cost,
        sol.budget
    );
    for (v, e) in sol.tree.edges() {
        println!("  {} -> {v}: cost {} length {}", e.parent, e.cost, e.length);
    }
    Ok(())
}
