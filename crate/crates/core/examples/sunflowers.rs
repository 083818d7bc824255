//! Sunflowers: the greedy recursion, the exhaustive fallback, and the product
//! family with none.
//!
//! cargo run --example sunflowers

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regulus::patterns::{find_sunflower, sunflower_free_family, SunflowerSearch};
use regulus::{Edge, Hypergraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (k, p) in [(2, 3), (3, 3), (2, 4)] {
        let h = sunflower_free_family(k, p)?;
        println!("product family k={k} p={p}: {} edges, {:?}", h.num_edges(), find_sunflower(&h, p)?);
    }

    // Above (p-1)^k k! edges the greedy recursion always succeeds.
    let (k, p, size) = (3, 3, 49);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < size {
        edges.insert(Edge::from_vertices(sample(&mut rng, 10, k)));
    }
    let h = Hypergraph::new(10, edges.iter().map(Edge::to_vec))?;
    if let SunflowerSearch::Greedy(s) = find_sunflower(&h, p)? {
        let petals: Vec<String> = s.petals.iter().map(|&i| format!("{{{}}}", h[i])).collect();
        println!("random {size} triples: petals {} core {{{}}}", petals.join(" "), s.core);
    }
    Ok(())
}
