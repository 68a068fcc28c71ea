//! so(n) plus its minimal spinor module closes into a Lie algebra only for
//! n = 8 (so(9), by triality), n = 9 (F4) and n = 16 (E8) in this range.
//!
//! `cargo run --release --example negative_search -- 16`

use lieforge::builder::exceptional::spinor_extension;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let top: usize = std::env::args().nth(1).map_or(Ok(16), |a| a.parse())?;
    for n in 3..=top {
        match spinor_extension(n, 1) {
            Ok(b) => println!(
                "so({n:>2}) + {:>3}: Lie algebra of dim {}",
                b.recipe.summands[1].1,
                b.table.dim()
            ),
            Err(e) => println!("so({n:>2}) + spin: {e}"),
        }
    }
    Ok(())
}
