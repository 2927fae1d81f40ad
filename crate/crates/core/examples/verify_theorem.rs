//! Machine-check the characterization: on every graph of order 2, 4, 6 and 8
//! the brute-force oracle and the structural recognizer must agree.
//!
//! ```bash
//! cargo run --release --example verify_theorem
//! ```

use std::time::Instant;

use eqlab::enumeration::{enumerate_all, write_graph6};
use eqlab::oracles::is_degree_equipartite;
use eqlab::recognize;

fn main() -> eqlab::Result<()> {
    for order in [2, 4, 6, 8] {
        let start = Instant::now();
        let catalog = enumerate_all(order)?;
        let mut positives = Vec::new();
        let mut disagreements = 0;
        for g in catalog.graphs() {
            let oracle = is_degree_equipartite(g)?.holds;
            let structural = recognize(g);
            if oracle != structural.in_characterization {
                disagreements += 1;
                eprintln!("disagreement on {}", write_graph6(g));
            }
            if oracle {
                positives.push(
                    structural
                        .labels
                        .iter()
                        .next()
                        .map(ToString::to_string)
                        .unwrap_or_default(),
                );
            }
        }
        println!(
            "order {order}: {} graphs, {disagreements} disagreements, {:.2?}",
            catalog.len(),
            start.elapsed()
        );
        println!("  positives: {}", positives.join(" "));
    }
    Ok(())
}
