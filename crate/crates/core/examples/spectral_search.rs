//! Look for graphs whose halves are always isospectral but which are not
//! degree-equipartite.
//!
//! ```bash
//! cargo run --release --example spectral_search
//! ```

use eqlab::enumeration::{enumerate_all, enumerate_regular, search_property, GraphCatalog};
use eqlab::oracles::is_degree_equipartite;
use eqlab::spectral::characteristic_polynomial;
use eqlab::{OracleConfig, Property};

fn report(catalog: &GraphCatalog) -> eqlab::Result<()> {
    let hits = search_property(
        catalog,
        Property::SpectralEquipartite,
        &OracleConfig::parallel(),
    )?;
    let mut exceptions = 0;
    for (g, _) in &hits {
        if !is_degree_equipartite(g)?.holds {
            exceptions += 1;
            println!("  exception: {}", characteristic_polynomial(g));
        }
    }
    println!(
        "order {} ({}): {} graphs, {} spectral-equipartite, {exceptions} outside the families",
        catalog.order(),
        catalog.filter(),
        catalog.len(),
        hits.len()
    );
    Ok(())
}

fn main() -> eqlab::Result<()> {
    for order in [2, 4, 6, 8] {
        report(&enumerate_all(order)?)?;
    }
    for k in 2..=7 {
        report(&enumerate_regular(10, k)?)?;
    }
    Ok(())
}
