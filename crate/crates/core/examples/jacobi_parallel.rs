//! The Jacobi sweep is split across workers; the report does not depend on
//! how many.
//!
//! `cargo run --release --example jacobi_parallel -- E8 1 2 4 8`

use std::time::Instant;

use lieforge::builder::exceptional::build_exceptional;
use lieforge::builder::verify_jacobi_with;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "E8".into());
    let mut workers: Vec<usize> = args.map(|a| a.parse()).collect::<Result<_, _>>()?;
    if workers.is_empty() {
        workers = vec![1, 2, 4, 8];
    }
    let table = build_exceptional(&name, 1)?.table;
    let mut reports = Vec::new();
    for w in workers {
        let t0 = Instant::now();
        let r = verify_jacobi_with(&table, w)?;
        println!(
            "{name}: {w} worker(s)  {} triples  {} violations  {:.2?}",
            r.triples_checked,
            r.violations,
            t0.elapsed()
        );
        reports.push(r);
    }
    let same = reports.windows(2).all(|p| p[0] == p[1]);
    println!("identical reports: {same}");
    Ok(())
}
