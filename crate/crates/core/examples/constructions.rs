//! The extremal constructions and their descriptors.
//!
//! cargo run --example constructions

use regulus::gadgets::{
    example_a, example_b, example_b_threshold, full_star, gadget_h, gadget_hprime, star_plus, star_plus_witness,
    ExampleAVariant,
};
use regulus::regdetect::{find_regular, verify_certificate, Certificate, SolverBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let unbounded = SolverBudget::unbounded();

    let (star, desc) = full_star(8, 3)?;
    print!("{}", desc.to_desc_string());
    for r in 2..=4 {
        println!("full star n=8 k=3 r={r}: {:?}", find_regular(&star, r, unbounded)?);
    }

    // One extra edge is enough once r divides k.
    let (plus, _) = star_plus(8, 3, 3)?;
    let witness = Certificate::from_edges(&plus, star_plus_witness(8, 3, 3)?, 3);
    println!("star plus witness {:?} -> {:?}", witness.edge_indices, verify_certificate(&plus, &witness));

    for (k, l) in [(3, 1), (4, 2)] {
        let (h, d) = gadget_h(k, l)?;
        println!("H({k},{l}): {} edges, parts {:?}, pairs {:?}", h.num_edges(), d.stationary_parts, d.dynamic_pairs);
    }
    let (hp, d) = gadget_hprime(4, 1)?;
    println!("H'(4,1): {} edges, parts {:?}", hp.num_edges(), d.stationary_parts);

    let (a, _) = example_a(6, 3, ExampleAVariant::REqK)?;
    println!("example A (r = k): r=3 {:?}", find_regular(&a, 3, unbounded)?);
    let (a1, _) = example_a(6, 3, ExampleAVariant::REqKPlus1)?;
    println!("example A (r = k+1): r=4 {:?}", find_regular(&a1, 4, unbounded)?);

    let (b, _) = example_b(7, 3, 2)?;
    let r = example_b_threshold(3, 2) as usize + 1;
    println!("example B: {} edges, r={r} {:?}", b.num_edges(), find_regular(&b, r, unbounded)?);
    Ok(())
}
