//! graph6 and edge-list conversion, including error offsets.
//!
//! ```bash
//! cargo run --example graph6_roundtrip
//! ```

use eqlab::cli::{parse_edge_list, write_edge_list};
use eqlab::enumeration::{parse_graph6, parse_graph6_lines, write_graph6};
use eqlab::Error;

fn main() -> eqlab::Result<()> {
    let petersen = parse_graph6(">>graph6<<IheA@GUAo\n")?;
    println!(
        "Petersen: order {}, {} edges",
        petersen.order(),
        petersen.edge_count()
    );
    print!("{}", write_edge_list(&petersen));

    let square = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n")?;
    println!("C4 as graph6: {}", write_graph6(&square));

    for bad in ["D?", "A`", "A_\nD??\nD?\n"] {
        match parse_graph6_lines(bad) {
            Err(Error::Parse { offset, message }) => println!("{bad:?}: byte {offset}: {message}"),
            other => println!("{bad:?}: {other:?}"),
        }
    }
    Ok(())
}
