//! Odd-sphere structure, Betti numbers, capicua differences and torsion
//! primes of compact simple groups.
//!
//! `cargo run --example topology -- G2 A2 E8`

use lieforge::rootsys::GroupId;
use lieforge::topol::sphere_structure_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids = ["A1", "A2", "B2", "G2", "F4", "E6", "E7", "E8"].map(String::from).to_vec();
    }
    for s in ids {
        let id: GroupId = s.parse()?;
        let r = sphere_structure_report(id);
        println!("{id}: spheres {:?}", r.sphere_dims);
        println!("  P(t) = {}", r.factored);
        println!("  Betti {:?}", r.poincare);
        println!("  exponent differences {:?} palindrome {}", r.capicua_diffs, r.capicua_palindrome);
        println!("  torsion primes {:?} (reference data)", r.torsion_primes);
        for n in &r.fibration_notes {
            println!("  note: {}", n.remark);
        }
    }
    Ok(())
}
