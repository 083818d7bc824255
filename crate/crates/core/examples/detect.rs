//! Detect a regular subgraph, write its certificate, and check it independently.
//!
//! cargo run --example detect

use regulus::regdetect::{brute_force_regular, find_regular, verify_certificate, Certificate, Detection, SolverBudget};
use regulus::Hypergraph;

const FANO: &str = "\
# lines of the Fano plane
7 7
0 1 2
0 3 4
0 5 6
1 3 5
1 4 6
2 3 6
2 4 5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = Hypergraph::parse(FANO)?;
    for r in 2..=4 {
        match find_regular(&h, r, SolverBudget::unbounded())? {
            Detection::Found(cert) => {
                println!("r={r}: FOUND {} edges covering {:?}", cert.len(), cert.covered);
                let text = cert.to_cert_string();
                print!("{text}");
                // The checker only recounts degrees.
                verify_certificate(&h, &Certificate::parse(&text)?)?;
            }
            Detection::NoneExists => println!("r={r}: NONE (search complete)"),
            Detection::BudgetExhausted { nodes } => println!("r={r}: gave up after {nodes} nodes"),
        }
        let oracle = brute_force_regular(&h, r)?;
        println!("  subset enumeration agrees: {}", oracle.is_some());
    }

    // A tight node budget on a larger instance.
    let dense = Hypergraph::complete(9, 4).edge_subgraph(&(0..60).collect::<Vec<_>>())?;
    println!("{:?}", find_regular(&dense, 2, SolverBudget::nodes(10))?);
    Ok(())
}
