//! The ten families of degree-equipartite graphs, their generators, and a
//! structural recognizer that decides membership without enumerating
//! bisections.
//!
//! Generated graphs follow one labelling convention: vertices `0..n` form the
//! left side (or first component), `n..2n` the right side, and matchings pair
//! `i` with `n + i`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, bit_indices, Graph, MAX_ORDER};

/// One of the ten families, without its size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    /// 2nK1
    #[serde(rename = "EMPTY_2NK1")]
    Empty,
    /// nK2
    #[serde(rename = "PERFECT_MATCHING_NK2")]
    PerfectMatching,
    /// 2C4
    #[serde(rename = "TWO_C4")]
    TwoC4,
    /// K_{n,n} minus a perfect matching
    #[serde(rename = "CROWN_KNN_MINUS_NK2")]
    Crown,
    /// two disjoint copies of K_n
    #[serde(rename = "TWO_KN")]
    TwoKn,
    /// K_{2n}
    #[serde(rename = "COMPLETE_K2N")]
    Complete,
    /// K_{2n} minus a perfect matching
    #[serde(rename = "COCKTAIL_K2N_MINUS_NK2")]
    Cocktail,
    /// complement of 2C4
    #[serde(rename = "K8_MINUS_2C4")]
    K8MinusTwoC4,
    /// two copies of K_n joined by a perfect matching
    #[serde(rename = "TWO_KN_PLUS_NK2")]
    TwoKnPlusMatching,
    /// K_{n,n}
    #[serde(rename = "COMPLETE_BIPARTITE_KNN")]
    CompleteBipartite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Empty,
        FamilyKind::PerfectMatching,
        FamilyKind::TwoC4,
        FamilyKind::Crown,
        FamilyKind::TwoKn,
        FamilyKind::Complete,
        FamilyKind::Cocktail,
        FamilyKind::K8MinusTwoC4,
        FamilyKind::TwoKnPlusMatching,
        FamilyKind::CompleteBipartite,
    ];

    /// Canonical string identifier.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Empty => "EMPTY_2NK1",
            FamilyKind::PerfectMatching => "PERFECT_MATCHING_NK2",
            FamilyKind::TwoC4 => "TWO_C4",
            FamilyKind::Crown => "CROWN_KNN_MINUS_NK2",
            FamilyKind::TwoKn => "TWO_KN",
            FamilyKind::Complete => "COMPLETE_K2N",
            FamilyKind::Cocktail => "COCKTAIL_K2N_MINUS_NK2",
            FamilyKind::K8MinusTwoC4 => "K8_MINUS_2C4",
            FamilyKind::TwoKnPlusMatching => "TWO_KN_PLUS_NK2",
            FamilyKind::CompleteBipartite => "COMPLETE_BIPARTITE_KNN",
        }
    }

    /// The family formed by the complements of this family's members.
    pub fn complement_pairing(self) -> FamilyKind {
        use FamilyKind::*;
        match self {
            Empty => Complete,
            Complete => Empty,
            PerfectMatching => Cocktail,
            Cocktail => PerfectMatching,
            TwoC4 => K8MinusTwoC4,
            K8MinusTwoC4 => TwoC4,
            Crown => TwoKnPlusMatching,
            TwoKnPlusMatching => Crown,
            TwoKn => CompleteBipartite,
            CompleteBipartite => TwoKn,
        }
    }

    /// Only defined at n = 4.
    pub fn is_order_eight_only(self) -> bool {
        matches!(self, FamilyKind::TwoC4 | FamilyKind::K8MinusTwoC4)
    }

    /// Vertex degree of every member with parameter `n`.
    pub fn degree(self, n: usize) -> usize {
        use FamilyKind::*;
        match self {
            Empty => 0,
            PerfectMatching => 1,
            TwoC4 => 2,
            Crown | TwoKn => n - 1,
            TwoKnPlusMatching | CompleteBipartite => n,
            Cocktail => 2 * n - 2,
            Complete => 2 * n - 1,
            K8MinusTwoC4 => 5,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::validation(format!("unknown family '{s}'")))
    }
}

/// A family together with its size parameter `n` (half the order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyLabel {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilyLabel {
    pub fn new(kind: FamilyKind, n: usize) -> Result<FamilyLabel> {
        if n == 0 {
            return Err(Error::validation(
                "family size parameter must be at least 1",
            ));
        }
        if kind.is_order_eight_only() && n != 4 {
            return Err(Error::validation(format!(
                "{kind} exists only for n = 4, got n = {n}"
            )));
        }
        if 2 * n > MAX_ORDER {
            return Err(Error::capacity(format!(
                "order {} exceeds {MAX_ORDER}",
                2 * n
            )));
        }
        Ok(FamilyLabel { kind, n })
    }

    pub fn complement(self) -> FamilyLabel {
        FamilyLabel {
            kind: self.kind.complement_pairing(),
            n: self.n,
        }
    }

    /// Every valid label with parameter `n`.
    pub fn all_for(n: usize) -> impl Iterator<Item = FamilyLabel> {
        FamilyKind::ALL
            .into_iter()
            .filter_map(move |kind| FamilyLabel::new(kind, n).ok())
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}

fn two_c4() -> Graph {
    Graph::new(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
        ],
    )
    .expect("fixed edge list")
}

/// Build the member of `label`'s family on `2n` vertices.
pub fn generate(label: FamilyLabel) -> Result<Graph> {
    let label = FamilyLabel::new(label.kind, label.n)?;
    let n = label.n;
    let order = 2 * n;
    let g = match label.kind {
        FamilyKind::Empty => Graph::empty(order)?,
        FamilyKind::PerfectMatching => Graph::new(order, (0..n).map(|i| (i, n + i)))?,
        FamilyKind::TwoC4 => two_c4(),
        FamilyKind::Crown => Graph::new(
            order,
            (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))),
        )?,
        FamilyKind::TwoKn => {
            let k = Graph::complete(n)?;
            k.disjoint_union(&k)?
        }
        FamilyKind::CompleteBipartite => {
            Graph::new(order, (0..n).flat_map(|i| (n..order).map(move |j| (i, j))))?
        }
        kind => generate(FamilyLabel {
            kind: kind.complement_pairing(),
            n,
        })?
        .complement(),
    };
    Ok(g)
}

/// The family labels a graph carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub labels: BTreeSet<FamilyLabel>,
    pub in_characterization: bool,
}

impl Classification {
    fn from_labels(labels: BTreeSet<FamilyLabel>) -> Classification {
        let in_characterization = !labels.is_empty();
        Classification {
            labels,
            in_characterization,
        }
    }

    fn none() -> Classification {
        Classification::from_labels(BTreeSet::new())
    }
}

/// Decide membership in the ten families by structure alone.
///
/// With `k` the common degree and `2n` the order: `k = 0, 1, 2n-2, 2n-1`
/// are settled directly; a disconnected graph with `1 < k <= n-1` must be two
/// copies of `K_n` or two 4-cycles; a connected one must be the crown; and
/// `n-1 < k < 2n-2` reduces to the complement. A positive structural answer
/// is confirmed against the generator, and every other family that happens
/// to coincide at this `n` is reported as well.
pub fn recognize(g: &Graph) -> Classification {
    let order = g.order();
    if order == 0 || order % 2 == 1 {
        return Classification::none();
    }
    let n = order / 2;
    let Some(k) = g.regular_degree() else {
        return Classification::none();
    };
    let Some(kind) = structural_kind(g, n, k) else {
        return Classification::none();
    };
    let primary = FamilyLabel { kind, n };
    let confirmed = generate(primary).is_ok_and(|h| are_isomorphic(g, &h));
    if !confirmed {
        return Classification::none();
    }
    let labels = FamilyLabel::all_for(n)
        .filter(|l| l.kind.degree(n) == k)
        .filter(|&l| l == primary || generate(l).is_ok_and(|h| are_isomorphic(g, &h)))
        .collect();
    Classification::from_labels(labels)
}

/// Case analysis on the degree `k` of a regular graph of order `2n`.
fn structural_kind(g: &Graph, n: usize, k: usize) -> Option<FamilyKind> {
    let order = 2 * n;
    if k == 0 {
        return Some(FamilyKind::Empty);
    }
    if k == 1 {
        return Some(FamilyKind::PerfectMatching);
    }
    if k == order - 1 {
        return Some(FamilyKind::Complete);
    }
    if k == order - 2 {
        return Some(FamilyKind::Cocktail);
    }
    if k < n {
        if g.is_connected() {
            return is_crown(g, n, k).then_some(FamilyKind::Crown);
        }
        return disconnected_kind(g, n, k);
    }
    // n - 1 < k < 2n - 2: the complement has degree 2n - 1 - k in (1, n - 1]
    let comp = g.complement();
    structural_kind(&comp, n, order - 1 - k).map(FamilyKind::complement_pairing)
}

/// Two components of order `n`, both complete or both 4-cycles.
fn disconnected_kind(g: &Graph, n: usize, k: usize) -> Option<FamilyKind> {
    let comps = g.connected_components();
    if comps.len() != 2 || comps.iter().any(|c| c.len() != n) {
        return None;
    }
    if k == n - 1 {
        // a (n-1)-regular graph on n vertices is K_n
        return Some(FamilyKind::TwoKn);
    }
    if n == 4 && k == 2 {
        // connected 2-regular on 4 vertices is C4
        return Some(FamilyKind::TwoC4);
    }
    None
}

/// `(n-1)`-regular, bipartite with both sides of size `n`.
fn is_crown(g: &Graph, n: usize, k: usize) -> bool {
    if k != n - 1 {
        return false;
    }
    match bipartition(g) {
        Some(left) => left.count_ones() as usize == n,
        None => false,
    }
}

/// Side containing vertex 0 of a proper 2-colouring of a connected graph.
fn bipartition(g: &Graph) -> Option<u64> {
    if g.order() == 0 {
        return Some(0);
    }
    let (mut even, mut odd) = (1u64, 0u64);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    let mut at_odd = false;
    while frontier != 0 {
        let next = bit_indices(frontier).fold(0u64, |acc, v| acc | g.adjacency(v)) & !seen;
        seen |= next;
        at_odd = !at_odd;
        if at_odd {
            odd |= next;
        } else {
            even |= next;
        }
        frontier = next;
    }
    if seen != g.vertex_mask() {
        return None;
    }
    let independent = |side: u64| bit_indices(side).all(|v| g.adjacency(v) & side == 0);
    (independent(even) && independent(odd)).then_some(even)
}
