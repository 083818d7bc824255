//! The two-star construction over a hypergraph with no `r'` edges on few
//! vertices, checked by the solver and by replaying the counting argument.
//!
//! cargo run --release --example two_star -- 9 4 3

use regulus::gadgets::{construction_64, construction_64_factors, replay_construction_64, verify_bes_free};
use regulus::regdetect::{find_regular, SolverBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let [n, k, r] = args[..] else {
        return Err("usage: two_star N K R".into());
    };
    let (d, kp, rp) = construction_64_factors(k, r)?;
    println!("k = {kp}*{d}, r = {rp}*{d}");
    for seed in 0..3 {
        let (h, _) = construction_64(n, k, r, seed)?;
        let replay = replay_construction_64(&h, k, r)?;
        println!(
            "seed {seed}: {} edges, inner {} edges, inner check {:?}, admissible m {:?}, refuted {}",
            h.num_edges(),
            replay.inner.num_edges(),
            verify_bes_free(&replay.inner, 2 * k - 2, rp),
            replay.admissible_star_free_counts,
            replay.refutes_all()
        );
        println!("  solver: {:?}", find_regular(&h, r, SolverBudget::unbounded())?);
    }
    Ok(())
}
