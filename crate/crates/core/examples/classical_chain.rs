//! Inductive chains so(n) → so(n+1), su(n) → su(n+1), sp(n) → sp(n+1),
//! each step verified by a full Jacobi sweep.
//!
//! `cargo run --release --example classical_chain -- 10 6 4`

use lieforge::builder::classical::{so_chain, sp_chain, su_chain};
use lieforge::builder::Extension;

fn show(family: &str, steps: &[Extension]) {
    println!("{family}");
    for e in steps {
        let scales: Vec<String> = e.scales.iter().map(|x| x.to_string()).collect();
        println!(
            "  {:<8} dim {:>3}  triples {:>7}  violations {}  scales [{}]",
            e.table.name,
            e.table.dim(),
            e.report.triples_checked,
            e.report.violations,
            scales.join(", ")
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (so, su, sp) = match args.as_slice() {
        [a, b, c] => (*a, *b, *c),
        _ => (10, 6, 4),
    };
    show("orthogonal", &so_chain(so, 1)?);
    show("unitary", &su_chain(su, 1)?);
    show("symplectic", &sp_chain(sp, 1)?);
    Ok(())
}
