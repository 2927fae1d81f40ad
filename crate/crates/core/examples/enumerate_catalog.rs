//! Build isomorphism-free catalogs and print their sizes.
//!
//! ```bash
//! cargo run --release --example enumerate_catalog
//! ```

use std::time::Instant;

use eqlab::enumeration::{enumerate_all, enumerate_regular, write_graph6};

fn main() -> eqlab::Result<()> {
    for order in 1..=8 {
        let start = Instant::now();
        let cat = enumerate_all(order)?;
        println!(
            "order {order}: {:>6} graphs ({:.2?})",
            cat.len(),
            start.elapsed()
        );
    }
    for (order, k) in [(8, 3), (10, 3), (10, 4), (10, 5), (12, 3)] {
        let start = Instant::now();
        let cat = enumerate_regular(order, k)?;
        println!(
            "{k}-regular on {order}: {:>5} graphs ({:.2?})",
            cat.len(),
            start.elapsed()
        );
    }
    let cubic = enumerate_regular(8, 3)?;
    println!("cubic graphs on 8 vertices:");
    for g in cubic.graphs() {
        println!("  {}", write_graph6(g));
    }
    Ok(())
}
