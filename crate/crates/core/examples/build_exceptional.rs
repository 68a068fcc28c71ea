//! Builds the five exceptional algebras and prints their recipes and checks.
//!
//! `cargo run --release --example build_exceptional [G2 F4 ...]`

use std::time::Instant;

use lieforge::builder::exceptional::{build_exceptional, EXCEPTIONAL};
use lieforge::builder::killing::{cartan_subalgebra, is_compact_semisimple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() {
        EXCEPTIONAL.to_vec()
    } else {
        args.iter().map(String::as_str).collect()
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for name in names {
        let start = Instant::now();
        let b = build_exceptional(name, workers)?;
        let built = start.elapsed();
        let dims: Vec<String> = b.recipe.summands.iter().map(|(r, d)| format!("{r} {d}")).collect();
        println!("{name}: dim {} = {}", b.table.dim(), dims.join(" + "));
        for (c, v) in &b.coefficients {
            println!("  {c} = {v}");
        }
        println!(
            "  Jacobi: {} triples, {} violations ({:.2?})",
            b.report.triples_checked, b.report.violations, built
        );
        let cartan = cartan_subalgebra(&b.table)?;
        println!(
            "  compact: {}, Cartan rank {} (self-centralizing: {})",
            is_compact_semisimple(&b.table)?,
            cartan.rank,
            cartan.self_centralizing
        );
    }
    Ok(())
}
