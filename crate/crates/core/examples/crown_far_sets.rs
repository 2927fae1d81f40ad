//! Neighbourhoods and far sets in crown graphs `K_{n,n}` minus a perfect
//! matching. For `n >= 3` every vertex has exactly one far vertex, its
//! former matching partner.
//!
//! ```bash
//! cargo run --example crown_far_sets
//! ```

use eqlab::families::{generate, FamilyKind, FamilyLabel};

fn main() -> eqlab::Result<()> {
    for n in 2..=8 {
        let g = generate(FamilyLabel::new(FamilyKind::Crown, n)?)?;
        let k = g.regular_degree().expect("crowns are regular");
        let far: Vec<usize> = (0..g.order())
            .map(|v| g.far_set(v).map(|f| f.len()))
            .collect::<eqlab::Result<_>>()?;
        let distinct =
            (0..g.order()).all(|u| (u + 1..g.order()).all(|v| g.adjacency(u) != g.adjacency(v)));
        println!(
            "n={n} k={k} n-k={} |F(v)|={:?} distinct neighbourhoods={distinct}",
            n - k,
            far.iter()
                .copied()
                .collect::<std::collections::BTreeSet<_>>()
        );
        println!("  F(0) = {}", g.far_set(0)?);
    }
    Ok(())
}
