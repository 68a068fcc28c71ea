//! Root-system data for simple types: positive roots, Weyl order, Coxeter
//! number and exponents, with `|W| = ∏ (m_i + 1)` checked against a
//! brute-force orbit count for small ranks.
//!
//! `cargo run --example root_systems -- E6 F4 B3`

use lieforge::rootsys::{build_root_system, weyl_orbit, GroupId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids = ["A2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"].map(String::from).to_vec();
    }
    for s in ids {
        let id: GroupId = s.parse()?;
        let rs = build_root_system(id)?;
        print!(
            "{id:<3} rank {}  dim {:>3}  |Φ+| {:>3}  h {:>2}  |W| {:>9}  exponents {:?}",
            rs.rank(),
            rs.dim(),
            rs.positive_roots.len(),
            rs.coxeter_number,
            rs.weyl_order,
            rs.exponents
        );
        if rs.rank() <= 4 {
            // ρ is regular, so its orbit is in bijection with W.
            let n = weyl_orbit(&rs, &rs.rho, 100_000)?.len();
            print!("  orbit {n}");
        }
        println!();
        println!("    highest root {:?}", rs.highest_root());
    }
    Ok(())
}
