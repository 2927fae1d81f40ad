//! Decide every bisection property for a few graphs and show witnesses.
//!
//! ```bash
//! cargo run --example check_property
//! ```

use eqlab::oracles::{evaluate, violates};
use eqlab::{Graph, OracleConfig, Property};

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

fn main() -> eqlab::Result<()> {
    let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)])?;
    let graphs = [("C6", cycle(6)), ("C8", cycle(8)), ("P4", path)];
    let cfg = OracleConfig::default();
    for (name, g) in &graphs {
        println!("{name}");
        for p in Property::ALL {
            let v = evaluate(g, p, &cfg)?;
            match &v.witness {
                None => println!("  {p:<22} holds ({} half-sets)", v.subsets_examined),
                Some(w) => {
                    // a witness can always be re-checked on its own
                    assert!(violates(g, p, w)?);
                    println!(
                        "  {p:<22} fails, witness {w} (half-set #{})",
                        v.subsets_examined
                    );
                }
            }
        }
    }
    Ok(())
}
