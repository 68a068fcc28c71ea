//! The 2^n-dimensional spin module of Spin(2n) under U(n): one p-form for
//! each degree, graded by (-1)^p.
//!
//! `cargo run --example spin_split -- 4`

use lieforge::kostant::spin_split_under_u;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(4), |a| a.parse())?;
    let parts: Vec<String> = spin_split_under_u(n)
        .into_iter()
        .map(|(_, d, s)| format!("{d}{}", if s > 0 { '+' } else { '-' }))
        .collect();
    println!("{} = {}", 1u64 << n, parts.join(" + "));
    Ok(())
}
