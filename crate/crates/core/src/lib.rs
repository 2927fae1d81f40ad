//! Degree-equipartite graphs: brute-force deciders, a structural recognizer
//! for the ten families that characterise them, exhaustive small-graph
//! catalogs, and exact spectral comparison.
//!
//! A graph of order `2n` is *degree-equipartite* when every `n`-vertex set
//! `A` induces a subgraph with the same degree sequence as its complement.
//! Replacing "same degree sequence" by "isomorphic", "exchanged by an
//! automorphism", or "isospectral" gives the weakly equipartite, equipartite
//! and spectral-equipartite properties.
//!
//! ```
//! use eqlab::{families, oracles, Graph};
//!
//! let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
//! assert!(oracles::is_degree_equipartite(&c6).unwrap().holds);
//! assert!(families::recognize(&c6).in_characterization);
//! ```

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracles;
pub mod spectral;
pub mod subsets;

pub use error::{Error, Result};
pub use families::{generate, recognize, Classification, FamilyKind, FamilyLabel};
pub use graph::{are_isomorphic, DegreeSequence, Graph, VertexSet};
pub use oracles::{OracleConfig, Property, Verdict};
pub use spectral::CharPoly;
