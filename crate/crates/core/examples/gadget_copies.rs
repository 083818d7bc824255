//! Same-union pairs and embedded H(k,l) copies in dense hosts.
//!
//! cargo run --release --example gadget_copies

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regulus::patterns::{find_gadget_copy, find_same_union, gadget_copy_premise, verify_copy};
use regulus::Hypergraph;

fn dense_host(n: usize, k: usize, keep: usize, seed: u64) -> Hypergraph {
    let mut edges: Vec<_> = Hypergraph::complete(n, k).edges().to_vec();
    edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    edges.truncate(keep);
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = dense_host(9, 3, 49, 1);
    if let Some(q) = find_same_union(&h) {
        println!("{{{}}} + {{{}}} = {{{}}} + {{{}}}", h[q.a], h[q.b], h[q.c], h[q.d]);
    }

    for (n, k, l) in [(64, 3, 1), (20, 2, 1), (12, 3, 1)] {
        let p = gadget_copy_premise(n, k, l, false);
        println!("n={n} k={k} l={l}: need {:.0} of {} edges, attainable {}", p.threshold, p.available, p.attainable);
    }

    let host = dense_host(20, 2, 179, 3);
    let copy = find_gadget_copy(&host, 2, 1, false)?.expect("dense graphs contain a 4-cycle");
    println!("H(2,1) in a 179-edge graph: mapping {:?}, valid {}", copy.mapping, verify_copy(&host, &copy));

    let host = dense_host(10, 4, 150, 5);
    for prime in [false, true] {
        match find_gadget_copy(&host, 4, 1, prime)? {
            Some(c) => println!("prime={prime}: mapping {:?} split {:?}", c.mapping, c.split),
            None => println!("prime={prime}: none"),
        }
    }
    Ok(())
}
