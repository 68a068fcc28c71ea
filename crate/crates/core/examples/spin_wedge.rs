//! Antisymmetric square of the spinor module split into form degrees.
//! For Spin(9) this is 120 = 36 + 84; for the Spin(16) half-spinor,
//! 8128 = 120 + 8008.
//!
//! `cargo run --release --example spin_wedge -- 9 16`

use lieforge::builder::wedge::{spin_wedge_decomposition, wedge_module_dim};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ns: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    if ns.is_empty() {
        ns = vec![7, 8, 9, 10, 16];
    }
    for n in ns {
        let d = wedge_module_dim(n)?;
        let parts: Vec<String> = spin_wedge_decomposition(n)?
            .iter()
            .map(|(p, k)| format!("{k} (Λ^{p})"))
            .collect();
        println!("n = {n:>2}: Λ²({d}) = {} = {}", d * (d - 1) / 2, parts.join(" + "));
    }
    Ok(())
}
