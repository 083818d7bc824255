//! Wedges around a star center and the good/bad split of 3-sets.
//!
//! cargo run --release --example wedges

use regulus::extremal::{classify_3sets, count_wedges};
use regulus::gadgets::{example_a, full_star, ExampleAVariant};
use regulus::regdetect::{find_regular, SolverBudget};
use regulus::Edge;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Star surgery: swap one star edge for a non-edge. No 4-regular subgraph.
    let (h, desc) = example_a(8, 4, ExampleAVariant::REqK)?;
    let free = find_regular(&h, 4, SolverBudget::unbounded())?.is_none();
    let w = count_wedges(&h, 0, 4)?;
    println!("added {{{}}}, 4-regular-free {free}", desc.added_edge.unwrap());
    println!("|H*| = {}, lambda = {}, lower bound holds {}", w.h_star(), w.lambda, w.meets_lower_bound(h.n()));

    let (star, _) = full_star(18, 5)?;
    let t = Edge::from_vertices([0, 1, 2, 3]);
    let h = star.edge_subgraph(&(0..star.num_edges()).filter(|&i| !t.is_subset(&star[i])).collect::<Vec<_>>())?;
    let c = classify_3sets(&h, 0)?;
    println!("threshold {}, good {}, bad {:?}", c.threshold, c.good.len(), c.bad);
    Ok(())
}
