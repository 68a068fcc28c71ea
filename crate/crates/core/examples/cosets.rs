//! Dimension bookkeeping for the projective planes and their complexified
//! counterparts.

use lieforge::topol::{all_cosets, coset_dim};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in all_cosets() {
        println!(
            "{:<24} = {:<12} / {:<14} dim {:>3} - {:>2} = {}",
            e.space_name,
            e.big.name,
            e.small.name,
            e.big.dim(),
            e.small.dim(),
            coset_dim(&e)?
        );
    }
    Ok(())
}
