//! Exact ex(n, k, r) for tiny parameters.
//!
//! cargo run --release --example extremal_search

use regulus::extremal::{extremal_search, SearchOptions};
use regulus::util::binomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let options = SearchOptions {
        isomorph_reject: true,
        ..Default::default()
    };
    println!(" n  k  r  star  ex  nodes");
    for (n, k, r) in [(4, 3, 2), (5, 3, 2), (6, 3, 2), (5, 4, 4), (6, 2, 2), (6, 3, 3)] {
        let rep = extremal_search(n, k, r, options)?;
        assert!(rep.complete && rep.witness_verified);
        println!(
            "{n:>2} {k:>2} {r:>2} {:>5} {:>3} {:>6}",
            binomial(n - 1, k - 1),
            rep.optimum,
            rep.nodes
        );
    }
    let rep = extremal_search(6, 3, 2, options)?;
    print!("witness for (6,3,2):\n{}", rep.witness.to_hg_string());
    Ok(())
}
