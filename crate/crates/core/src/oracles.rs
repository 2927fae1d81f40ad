//! Brute-force deciders that follow the definitions literally.
//!
//! Each oracle walks every half-set `A ∋ 0` of a graph of order `2n` in
//! lexicographic order and compares `G[A]` with `G[V \ A]`. A negative
//! [`Verdict`] carries the lexicographically least violating `A`.
//!
//! Non-regular graphs are rejected early: a graph is regular iff every
//! bisection splits the edges evenly, and an uneven split already violates
//! every property here. The witness returned in that case is the least
//! edge-unbalanced half-set, which is a genuine violation of each definition.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, bit_indices, has_automorphism_mapping, Graph, VertexSet};
use crate::spectral::characteristic_polynomial;
use crate::subsets::{half_set_count, half_sets};

/// Largest order the oracles accept without [`OracleConfig::force`].
pub const DEFAULT_MAX_ORDER: usize = 28;

/// The bisection properties a graph of even order can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    DegreeEquipartite,
    WeaklyEquipartite,
    Equipartite,
    SpectralEquipartite,
    BalancedBisections,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::DegreeEquipartite,
        Property::WeaklyEquipartite,
        Property::Equipartite,
        Property::SpectralEquipartite,
        Property::BalancedBisections,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::DegreeEquipartite => "degree-equipartite",
            Property::WeaklyEquipartite => "weakly-equipartite",
            Property::Equipartite => "equipartite",
            Property::SpectralEquipartite => "spectral-equipartite",
            Property::BalancedBisections => "balanced-bisections",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
                Error::validation(format!(
                    "unknown property '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Outcome of an oracle run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// The least violating half-set; present iff `holds` is false.
    pub witness: Option<VertexSet>,
    /// Position of the witness in the lexicographic half-set sequence
    /// (1-based), or the length of the sequence when the property holds.
    /// Independent of how the scan was parallelised.
    pub subsets_examined: u64,
}

impl Verdict {
    fn holds(total: u64) -> Verdict {
        Verdict {
            holds: true,
            witness: None,
            subsets_examined: total,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Split the half-set sequence over the current rayon pool.
    pub parallel: bool,
    /// Ignore `max_order`.
    pub force: bool,
    pub max_order: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            parallel: false,
            force: false,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl OracleConfig {
    pub fn parallel() -> Self {
        OracleConfig {
            parallel: true,
            ..Default::default()
        }
    }
}

pub fn is_degree_equipartite(g: &Graph) -> Result<Verdict> {
    evaluate(g, Property::DegreeEquipartite, &OracleConfig::default())
}

pub fn is_weakly_equipartite(g: &Graph) -> Result<Verdict> {
    evaluate(g, Property::WeaklyEquipartite, &OracleConfig::default())
}

pub fn is_equipartite(g: &Graph) -> Result<Verdict> {
    evaluate(g, Property::Equipartite, &OracleConfig::default())
}

pub fn is_spectral_equipartite(g: &Graph) -> Result<Verdict> {
    evaluate(g, Property::SpectralEquipartite, &OracleConfig::default())
}

pub fn has_balanced_bisections(g: &Graph) -> Result<Verdict> {
    evaluate(g, Property::BalancedBisections, &OracleConfig::default())
}

/// Run the oracle for `property` on `g`.
pub fn evaluate(g: &Graph, property: Property, cfg: &OracleConfig) -> Result<Verdict> {
    check_preconditions(g, cfg)?;
    if property != Property::BalancedBisections && g.regular_degree().is_none() {
        let v = scan(g, cfg, |a| {
            half_violates(g, Property::BalancedBisections, a)
        });
        if !v.holds {
            return Ok(v);
        }
        // every graph with balanced bisections is regular, so this is unreachable
        // for a correct scan; fall through to the definition rather than guess
    }
    Ok(scan(g, cfg, |a| half_violates(g, property, a)))
}

/// Re-evaluate the defining comparison for one half-set `a` and its
/// complement. True iff `a` witnesses that `property` fails.
pub fn violates(g: &Graph, property: Property, a: &VertexSet) -> Result<bool> {
    if g.order() % 2 == 1 {
        return Err(Error::validation(format!("order {} is odd", g.order())));
    }
    if a.bits() & !g.vertex_mask() != 0 || a.len() * 2 != g.order() {
        return Err(Error::validation(format!(
            "{a} is not a half-set of a graph of order {}",
            g.order()
        )));
    }
    Ok(half_violates(g, property, a.bits()))
}

fn check_preconditions(g: &Graph, cfg: &OracleConfig) -> Result<()> {
    let order = g.order();
    if order % 2 == 1 {
        return Err(Error::validation(format!(
            "the bisection properties need even order, got {order}"
        )));
    }
    if order > cfg.max_order && !cfg.force {
        return Err(Error::capacity(format!(
            "order {order} exceeds the oracle ceiling of {}; use force, or the recognizer",
            cfg.max_order
        )));
    }
    Ok(())
}

fn scan<F>(g: &Graph, cfg: &OracleConfig, violates: F) -> Verdict
where
    F: Fn(u64) -> bool + Sync,
{
    let order = g.order();
    let total = half_set_count(order);
    let found = if cfg.parallel && total > 1 {
        let chunks = (rayon::current_num_threads() as u64 * 8).min(total);
        let chunk_len = total.div_ceil(chunks);
        (0..chunks).into_par_iter().find_map_first(|c| {
            let start = c * chunk_len;
            half_sets(order, start, chunk_len)
                .position(&violates)
                .map(|i| start + i as u64)
        })
    } else {
        half_sets(order, 0, total)
            .position(&violates)
            .map(|i| i as u64)
    };
    match found {
        None => Verdict::holds(total),
        Some(rank) => {
            let mask = half_sets(order, rank, 1).next().expect("rank within range");
            Verdict {
                holds: false,
                witness: Some(VertexSet::from_bits_unchecked(mask, order)),
                subsets_examined: rank + 1,
            }
        }
    }
}

/// Sorted-free degree sequence comparison via histograms.
fn same_induced_degrees(g: &Graph, a: u64, b: u64) -> bool {
    let mut hist = [0i32; 65];
    for v in bit_indices(a) {
        hist[(g.adjacency(v) & a).count_ones() as usize] += 1;
    }
    for v in bit_indices(b) {
        hist[(g.adjacency(v) & b).count_ones() as usize] -= 1;
    }
    hist.iter().all(|&h| h == 0)
}

fn half_violates(g: &Graph, property: Property, a: u64) -> bool {
    let b = !a & g.vertex_mask();
    match property {
        Property::BalancedBisections => g.edges_within(a) != g.edges_within(b),
        Property::DegreeEquipartite => !same_induced_degrees(g, a, b),
        Property::WeaklyEquipartite => {
            !same_induced_degrees(g, a, b)
                || !are_isomorphic(&g.induced_by_mask(a), &g.induced_by_mask(b))
        }
        Property::Equipartite => {
            let order = g.order();
            !same_induced_degrees(g, a, b)
                || !has_automorphism_mapping(
                    g,
                    &VertexSet::from_bits_unchecked(a, order),
                    &VertexSet::from_bits_unchecked(b, order),
                )
                .expect("half-sets have equal size")
        }
        Property::SpectralEquipartite => {
            g.edges_within(a) != g.edges_within(b)
                || characteristic_polynomial(&g.induced_by_mask(a))
                    != characteristic_polynomial(&g.induced_by_mask(b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn k_nn(n: usize) -> Graph {
        Graph::new(2 * n, (0..n).flat_map(|i| (n..2 * n).map(move |j| (i, j)))).unwrap()
    }

    fn two_c4() -> Graph {
        cycle(4).disjoint_union(&cycle(4)).unwrap()
    }

    /// Independent check: all C(2n, n) half-sets, sorted-vector degree
    /// sequences, least violating set containing vertex 0.
    fn brute_degree_witness(g: &Graph) -> Option<Vec<usize>> {
        let order = g.order();
        let full = (1u64 << order) - 1;
        let mut best: Option<Vec<usize>> = None;
        for a in 0..=full {
            if a.count_ones() as usize * 2 != order || a & 1 == 0 {
                continue;
            }
            let b = full & !a;
            let ds = |s: u64| {
                let mut d: Vec<u32> = (0..order)
                    .filter(|v| s >> v & 1 == 1)
                    .map(|v| (g.adjacency(v) & s).count_ones())
                    .collect();
                d.sort();
                d
            };
            if ds(a) != ds(b) {
                let m: Vec<usize> = (0..order).filter(|v| a >> v & 1 == 1).collect();
                if best.as_ref().is_none_or(|cur| m < *cur) {
                    best = Some(m);
                }
            }
        }
        best
    }

    #[test]
    fn c6_is_degree_equipartite() {
        let v = is_degree_equipartite(&cycle(6)).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, None);
        assert_eq!(v.subsets_examined, 10);
    }

    #[test]
    fn c8_witness() {
        let c8 = cycle(8);
        let v = is_degree_equipartite(&c8).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.to_vec(), vec![0, 1, 2, 5]);
        assert_eq!(brute_degree_witness(&c8), Some(vec![0, 1, 2, 5]));
        assert_eq!(
            c8.induced_subgraph(&w)
                .unwrap()
                .degree_sequence()
                .as_slice(),
            &[2, 1, 1, 0]
        );
        let b = w.complement();
        assert_eq!(
            c8.induced_subgraph(&b)
                .unwrap()
                .degree_sequence()
                .as_slice(),
            &[1, 1, 1, 1]
        );
        assert!(violates(&c8, Property::DegreeEquipartite, &w).unwrap());
        assert_eq!(v.subsets_examined, 3);
    }

    #[test]
    fn edgeless_graphs_hold() {
        for n in 1..=5 {
            assert!(
                is_degree_equipartite(&Graph::empty(2 * n).unwrap())
                    .unwrap()
                    .holds
            );
        }
        assert!(
            is_degree_equipartite(&Graph::empty(0).unwrap())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn weakly_equipartite_examples() {
        assert!(is_weakly_equipartite(&k_nn(3)).unwrap().holds);
        let k4 = Graph::complete(4).unwrap();
        assert!(
            is_weakly_equipartite(&k4.disjoint_union(&k4).unwrap())
                .unwrap()
                .holds
        );

        let k4_c4 = k4.disjoint_union(&cycle(4)).unwrap();
        let v = is_weakly_equipartite(&k4_c4).unwrap();
        assert!(!v.holds);
        // K4 ∪ C4 is not regular, so the witness is the least unbalanced split
        let w = v.witness.unwrap();
        assert!(violates(&k4_c4, Property::WeaklyEquipartite, &w).unwrap());
        let a = VertexSet::new(8, 0..4).unwrap();
        assert!(violates(&k4_c4, Property::WeaklyEquipartite, &a).unwrap());
    }

    #[test]
    fn equipartite_examples() {
        assert!(is_equipartite(&two_c4()).unwrap().holds);
        let three_k2 = Graph::new(6, [(0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_equipartite(&three_k2).unwrap().holds);
        let v = is_equipartite(&cycle(8)).unwrap();
        assert!(!v.holds);
        assert!(violates(&cycle(8), Property::DegreeEquipartite, &v.witness.unwrap()).unwrap());
    }

    #[test]
    fn spectral_examples() {
        assert!(is_spectral_equipartite(&k_nn(3)).unwrap().holds);
        assert!(is_spectral_equipartite(&two_c4()).unwrap().holds);
        let v = is_spectral_equipartite(&path(4)).unwrap();
        assert!(!v.holds);
        // {0,3} is the half containing vertex 0; its complement is {1,2}
        let w = v.witness.unwrap();
        assert_eq!(w.to_vec(), vec![0, 3]);
        assert_eq!(w.complement().to_vec(), vec![1, 2]);
    }

    #[test]
    fn balanced_bisection_examples() {
        let v = has_balanced_bisections(&path(4)).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.to_vec(), vec![0, 3]);
        let p4 = path(4);
        assert_eq!(p4.edges_within(w.bits()), 0);
        assert_eq!(p4.edges_within(w.complement().bits()), 1);

        assert!(
            has_balanced_bisections(&Graph::complete(8).unwrap())
                .unwrap()
                .holds
        );
        assert!(has_balanced_bisections(&cycle(8)).unwrap().holds);
    }

    #[test]
    fn odd_order_rejected() {
        let star_plus = Graph::new(5, [(0, 1), (0, 2), (0, 3)]).unwrap();
        for p in Property::ALL {
            assert!(matches!(
                evaluate(&star_plus, p, &OracleConfig::default()),
                Err(Error::Validation(_))
            ));
        }
    }

    #[test]
    fn ceiling() {
        let g = Graph::empty(30).unwrap();
        assert!(matches!(is_degree_equipartite(&g), Err(Error::Capacity(_))));
        let low = OracleConfig {
            max_order: 6,
            ..Default::default()
        };
        assert!(evaluate(&cycle(8), Property::DegreeEquipartite, &low).is_err());
        let forced = OracleConfig { force: true, ..low };
        assert!(
            !evaluate(&cycle(8), Property::DegreeEquipartite, &forced)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let graphs = [cycle(8), cycle(10), path(6), two_c4(), k_nn(4), cycle(12)];
        for g in &graphs {
            for p in Property::ALL {
                let seq = evaluate(g, p, &OracleConfig::default()).unwrap();
                let par = pool.install(|| evaluate(g, p, &OracleConfig::parallel()).unwrap());
                assert_eq!(seq, par, "{p} on {g:?}");
            }
        }
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("bogus".parse::<Property>().is_err());
    }
}
