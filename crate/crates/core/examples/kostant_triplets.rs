//! Kostant multiplets of equal-rank pairs: the spin module of the tangent
//! space of G/H splits into χ signed H-modules.
//!
//! `cargo run --release --example kostant_triplets`

use lieforge::kostant::{euler_number, multiplets, EqualRankPair, DEFAULT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut pairs = Vec::new();
    for name in ["F4/B4", "A4/A3+t", "C3/C1xC2"] {
        pairs.push(EqualRankPair::preset(name)?);
    }
    pairs.push(EqualRankPair::unitary_in_orthogonal(4)?);
    for p in pairs {
        let m = multiplets(&p, DEFAULT_CAP)?;
        println!(
            "{}  dim G/H = {}  χ = {}",
            m.pair,
            p.coset_dim(),
            euler_number(&p)
        );
        let line: Vec<String> = m
            .entries
            .iter()
            .map(|e| format!("{}{}", if e.sign > 0 { '+' } else { '-' }, e.dimension))
            .collect();
        println!("  {}", line.join(" "));
        println!("  signed sum {}  unsigned sum {}", m.signed_sum(), m.unsigned_sum());
        for e in &m.entries {
            println!("    weight {:?} charges {:?} length {}", e.weight.labels, e.charges, e.length);
        }
    }
    Ok(())
}
