//! Round trip through the `lie-structure v1` text format, then a corrupted
//! coefficient caught by the Jacobi sweep.
//!
//! `cargo run --release --example export_import -- G2`

use lieforge::builder::exceptional::build_exceptional;
use lieforge::builder::format::{export, import};
use lieforge::builder::matrices::so_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let built = build_exceptional(&name, 1)?;
    let text = export(&built.table);
    println!("{}", text.lines().next().unwrap_or_default());
    println!("{} constant lines", text.lines().count() - 1);
    let (back, report) = import(&text, 1)?;
    println!("re-imported {} (dim {}), violations {}", back.name, back.dim(), report.violations);
    assert_eq!(export(&back), text);

    let good = export(&so_table(5));
    let bad = good.replacen(" 1 1\n", " 2 1\n", 1);
    let (_, report) = import(&bad, 1)?;
    println!("corrupted so(5): {} violations, first {:?}", report.violations, report.first_violation);
    Ok(())
}
