//! Families of k/r-sets meeting every r-equipartition of [k].
//!
//! cargo run --example hitting_families

use regulus::extremal::min_hitting_family;
use regulus::patterns::{check_equipartition_hitting, equipartitions};
use regulus::util::binomial;
use regulus::Edge;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for parts in equipartitions(4, 2)? {
        let shown: Vec<String> = parts.iter().map(|p| format!("{{{p}}}")).collect();
        println!("{}", shown.join(" "));
    }
    let b: Vec<Edge> = [[0, 1], [0, 2], [0, 3]].into_iter().map(Edge::from_vertices).collect();
    println!("pairs through 0 hit every equipartition: {}", check_equipartition_hitting(4, 2, &b)?);

    println!(" k  r  min  C(k,k')/r  nodes");
    for (k, r) in [(4, 2), (6, 2), (6, 3), (8, 2), (8, 4)] {
        let rep = min_hitting_family(k, r)?;
        let bound = binomial(k, k / r) / r as u128;
        println!("{k:>2} {r:>2} {:>4} {bound:>10} {:>6}", rep.size, rep.nodes);
    }
    Ok(())
}
