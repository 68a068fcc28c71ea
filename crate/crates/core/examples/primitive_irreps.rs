//! Dimensions of the fundamental modules, one per Dynkin node in Bourbaki
//! order, from the Weyl dimension formula.
//!
//! `cargo run --release --example primitive_irreps -- E8`

use lieforge::rootsys::{fundamental_dims, GroupId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids = ["G2", "F4", "E6", "E7", "E8"].map(String::from).to_vec();
    }
    for s in ids {
        let id: GroupId = s.parse()?;
        println!("{id}: {:?}", fundamental_dims(id)?);
    }
    Ok(())
}
