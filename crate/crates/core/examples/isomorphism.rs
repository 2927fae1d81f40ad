//! Isomorphism, automorphisms carrying one vertex set onto another, and
//! canonical forms.
//!
//! ```bash
//! cargo run --example isomorphism
//! ```

use eqlab::enumeration::{canonical_form, canonical_graph, write_graph6};
use eqlab::graph::{find_isomorphism, has_automorphism_mapping};
use eqlab::{Graph, VertexSet};

fn main() -> eqlab::Result<()> {
    let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)))?;
    let crown = Graph::new(6, [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)])?;
    println!("C6 -> crown: {:?}", find_isomorphism(&c6, &crown));
    println!(
        "same canonical form: {}",
        canonical_form(&c6)? == canonical_form(&crown)?
    );
    println!("canonical C6: {}", write_graph6(&canonical_graph(&c6)?));

    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)])?;
    for (a, b) in [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 1], [1, 2])] {
        let a = VertexSet::new(4, a)?;
        let b = VertexSet::new(4, b)?;
        println!(
            "P4: automorphism {a} -> {b}: {}",
            has_automorphism_mapping(&p4, &a, &b)?
        );
    }
    Ok(())
}
