//! Bit-vector graph representation and the combinatorial primitives the
//! oracles, recognizer and enumerator are built on.
//!
//! A [`Graph`] stores one `u64` neighbour mask per vertex, so the order is
//! capped at 64. Vertex subsets are [`VertexSet`]s over the same word.

mod iso;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use iso::{are_isomorphic, find_isomorphism, has_automorphism_mapping};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Mask with the lowest `order` bits set.
#[inline]
pub(crate) const fn order_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// Iterate the indices of the set bits of `bits`, ascending.
#[inline]
pub(crate) fn bit_indices(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// Gather the bits of `bits` selected by `mask` into the low end of the
/// result, preserving their relative order (a software `pext`).
#[inline]
pub(crate) fn compress_bits(bits: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in bit_indices(mask).enumerate() {
        out |= ((bits >> v) & 1) << i;
    }
    out
}

/// An undirected simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse.
    pub fn new<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::validation(format!("loop at vertex {u}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph> {
        if order > MAX_ORDER {
            return Err(Error::capacity(format!(
                "order {order} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    /// The complete graph on `order` vertices.
    pub fn complete(order: usize) -> Result<Graph> {
        Ok(Graph::empty(order)?.complement())
    }

    /// Build a graph from raw neighbour masks, validating symmetry, the
    /// absence of loops and that no bit lies outside the vertex range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let order = adj.len();
        if order > MAX_ORDER {
            return Err(Error::capacity(format!(
                "order {order} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        let mask = order_mask(order);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::validation(format!(
                    "vertex {v} has a neighbour outside 0..{order}"
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::validation(format!("loop at vertex {v}")));
            }
            for u in bit_indices(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::validation(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { order, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph {
            order: adj.len(),
            adj,
        }
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        order_mask(self.order)
    }

    /// Raw neighbour mask of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| {
            let above = row & !order_mask(u + 1);
            bit_indices(above).map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::validation(format!(
                "vertex {v} is outside 0..{}",
                self.order
            )));
        }
        Ok(())
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(self.adj[v], self.order))
    }

    /// Closed neighbourhood N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(
            self.adj[v] | 1 << v,
            self.order,
        ))
    }

    /// The far set of `v`: every vertex whose closed neighbourhood is
    /// disjoint from the closed neighbourhood of `v`.
    pub fn far_set(&self, v: usize) -> Result<VertexSet> {
        let closed_v = self.closed_neighborhood(v)?.bits();
        let far = (0..self.order)
            .filter(|&x| (self.adj[x] | 1 << x) & closed_v == 0)
            .fold(0u64, |acc, x| acc | 1 << x);
        Ok(VertexSet::from_bits_unchecked(far, self.order))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & mask & !(1 << v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Subgraph induced by `s`, relabelled by ascending original index.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if s.bits() & !self.vertex_mask() != 0 {
            return Err(Error::validation(format!(
                "vertex set {s} is not contained in 0..{}",
                self.order
            )));
        }
        Ok(self.induced_by_mask(s.bits()))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let adj = bit_indices(mask)
            .map(|v| compress_bits(self.adj[v] & mask, mask))
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Number of edges with both ends in `mask`.
    #[inline]
    pub(crate) fn edges_within(&self, mask: u64) -> usize {
        bit_indices(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees((0..self.order).map(|v| self.degree(v)).collect())
    }

    /// `Some(k)` when every vertex has degree `k`. The order-0 graph is
    /// 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, |r| r.count_ones());
        self.adj
            .iter()
            .all(|r| r.count_ones() == k)
            .then_some(k as usize)
    }

    /// Vertex set of the component containing `v`.
    fn component_of(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let next = bit_indices(frontier).fold(0u64, |acc, u| acc | self.adj[u]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components, largest first; equal sizes ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_mask();
        let mut comps = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.component_of(v);
            remaining &= !comp;
            comps.push(VertexSet::from_bits_unchecked(comp, self.order));
        }
        // discovery order is already by smallest vertex, so a stable sort suffices
        comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.component_of(0) == self.vertex_mask()
    }

    /// Relabel vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::validation(format!(
                "permutation has length {} but the graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.order || seen >> p & 1 == 1 {
                return Err(Error::validation("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.order];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = bit_indices(row).fold(0u64, |acc, u| acc | 1 << perm[u]);
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(Error::capacity(format!(
                "union order {order} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        let shift = self.order;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|r| r << shift))
            .collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A set of vertices of a graph of a given order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    owner_order: usize,
}

impl VertexSet {
    pub fn new<I>(owner_order: usize, vertices: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for v in vertices {
            if v >= owner_order || v >= MAX_ORDER {
                return Err(Error::validation(format!(
                    "vertex {v} is outside 0..{owner_order}"
                )));
            }
            bits |= 1 << v;
        }
        Ok(VertexSet { bits, owner_order })
    }

    pub fn from_bits(bits: u64, owner_order: usize) -> Result<VertexSet> {
        if owner_order > MAX_ORDER || bits & !order_mask(owner_order) != 0 {
            return Err(Error::validation(format!(
                "bits {bits:#x} exceed owner order {owner_order}"
            )));
        }
        Ok(VertexSet { bits, owner_order })
    }

    #[inline]
    pub(crate) fn from_bits_unchecked(bits: u64, owner_order: usize) -> VertexSet {
        debug_assert_eq!(bits & !order_mask(owner_order), 0);
        VertexSet { bits, owner_order }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn owner_order(&self) -> usize {
        self.owner_order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bit_indices(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The remaining vertices of the owning graph.
    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & order_mask(self.owner_order),
            owner_order: self.owner_order,
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{self}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Vertex degrees sorted non-increasingly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_degrees(mut degrees: Vec<usize>) -> DegreeSequence {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}
