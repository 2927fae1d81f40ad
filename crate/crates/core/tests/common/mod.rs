//! Independent brute-force oracles shared by the integration tests. None of
//! these call the library's search code; they only use `Graph` accessors.
#![allow(dead_code)]

use eqlab::Graph;
use proptest::prelude::*;

/// Upper-triangle bit string of `g` relabelled by `perm` (old -> new).
fn relabelled_key(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut key = 0u64;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(inv[i], inv[j]) {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum key over all `n!` relabellings. Practical for `n <= 7`.
pub fn naive_canonical_key(g: &Graph) -> u64 {
    permutations(g.order())
        .iter()
        .map(|p| relabelled_key(g, p))
        .min()
        .unwrap()
}

/// Isomorphism classes of all graphs on `n <= 5` vertices, by deduplicating
/// every labelled graph under the naive key.
pub fn naive_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut keys = std::collections::BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        keys.insert(naive_canonical_key(&Graph::new(n, edges).unwrap()));
    }
    keys.len()
}

/// Every `k`-subset of `0..n` as a bitmask, with no symmetry reduction.
pub fn all_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k)
}

fn sorted_degrees_within(g: &Graph, mask: u64) -> Vec<u32> {
    let mut d: Vec<u32> = (0..g.order())
        .filter(|v| mask >> v & 1 == 1)
        .map(|v| (g.adjacency(v) & mask).count_ones())
        .collect();
    d.sort_unstable();
    d
}

/// Degree-equipartite straight from the definition over every half-set.
pub fn naive_degree_equipartite(g: &Graph) -> bool {
    let n = g.order();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    all_subsets(n, n / 2)
        .all(|a| sorted_degrees_within(g, a) == sorted_degrees_within(g, full & !a))
}

/// Number of edges of `g` inside `mask`.
pub fn edges_within(g: &Graph, mask: u64) -> u32 {
    (0..g.order())
        .filter(|v| mask >> v & 1 == 1)
        .map(|v| (g.adjacency(v) & mask).count_ones())
        .sum::<u32>()
        / 2
}

/// Random graph on `order` vertices from an edge-inclusion bit string.
pub fn graph_from_bits(order: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut b = 0;
    for j in 1..order {
        for i in 0..j {
            if bits >> (b % 64) & 1 == 1 {
                edges.push((i, j));
            }
            b += 1;
        }
    }
    Graph::new(order, edges).unwrap()
}

pub fn arb_graph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (orders, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

pub fn arb_even_graph(max_half: usize) -> impl Strategy<Value = Graph> {
    (1..=max_half, any::<u64>()).prop_map(|(h, bits)| graph_from_bits(2 * h, bits))
}

/// A uniformly random permutation of `0..n`.
pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
