//! Recognize family members by structure and compare with the oracle.
//!
//! ```bash
//! cargo run --example classify_graph
//! ```

use eqlab::enumeration::parse_graph6;
use eqlab::families::{generate, recognize, FamilyKind, FamilyLabel};
use eqlab::oracles::is_degree_equipartite;

fn main() -> eqlab::Result<()> {
    let inputs = [
        ("C4", "Cl"),
        ("Petersen", "IheA@GUAo"),
        ("K8", "G~~~~{"),
        ("cube Q3", "GCZJd_"),
    ];
    for (name, g6) in inputs {
        let g = parse_graph6(g6)?;
        let c = recognize(&g);
        let labels: Vec<String> = c.labels.iter().map(ToString::to_string).collect();
        println!(
            "{name:<9} oracle={:<5} labels=[{}]",
            is_degree_equipartite(&g)?.holds,
            labels.join(", ")
        );
    }

    // K8 minus two disjoint 4-cycles only exists on 8 vertices
    let label = FamilyLabel::new(FamilyKind::K8MinusTwoC4, 4)?;
    let g = generate(label)?;
    println!(
        "{label}: {} edges, complement is {}",
        g.edge_count(),
        label.complement()
    );
    Ok(())
}
