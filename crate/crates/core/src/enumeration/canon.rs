//! Canonical labelling by individualisation and refinement.
//!
//! The search tree branches on the vertices of the first non-singleton cell
//! of an equitable ordered partition; each leaf is a vertex ordering, scored
//! by its column-major upper-triangle adjacency string. The smallest score is
//! the canonical form. Subtrees are cut when their fixed prefix already
//! scores worse than the best leaf, or when an automorphism found earlier
//! maps them onto an explored sibling.

use crate::error::{Error, Result};
use crate::graph::{bit_indices, Graph};

/// Largest order with a canonical form (the string must fit in 128 bits).
pub const MAX_CANON_ORDER: usize = 16;

/// Isomorphism-class key: the order plus the minimal adjacency string,
/// packed most-significant-bit first so integer order is string order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Automorphisms discovered during the search (`gen[v]` is the image of `v`).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Canonical {
    /// The graph relabelled into canonical position order.
    pub fn graph(&self, g: &Graph) -> Graph {
        let mut position = vec![0; self.labeling.len()];
        for (i, &v) in self.labeling.iter().enumerate() {
            position[v] = i;
        }
        g.relabel(&position).expect("labeling is a permutation")
    }

    /// Vertex placed last by the canonical ordering.
    pub fn last_vertex(&self) -> Option<usize> {
        self.labeling.last().copied()
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::capacity(format!(
            "canonical forms are limited to order {MAX_CANON_ORDER}, got {}",
            g.order()
        )));
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.form)
}

/// Isomorphic copy of `g` in canonical vertex order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let c = canonical_labeling(g)?;
    Ok(c.graph(g))
}

pub fn canonical_labeling(g: &Graph) -> Result<Canonical> {
    check_order(g)?;
    let n = g.order();
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    if n > 0 {
        search.visit(vec![g.vertex_mask()], &mut Vec::new());
    }
    let (bits, labeling) = search.best.unwrap_or((0, Vec::new()));
    Ok(Canonical {
        form: CanonicalForm {
            order: n as u8,
            bits,
        },
        labeling,
        automorphisms: search.automorphisms,
    })
}

/// Adjacency string of the first `len` entries of `order`, column-major,
/// packed from bit 127 downwards.
fn encode(g: &Graph, order: &[usize]) -> u128 {
    let mut bits = 0u128;
    let mut idx = 0;
    for j in 1..order.len() {
        let row = g.adjacency(order[j]);
        for &u in &order[..j] {
            if row >> u & 1 == 1 {
                bits |= 1u128 << (127 - idx);
            }
            idx += 1;
        }
    }
    bits
}

fn prefix_mask(len: usize) -> u128 {
    let m = len * len.saturating_sub(1) / 2;
    if m == 0 {
        0
    } else {
        !0u128 << (128 - m)
    }
}

/// Split cells against each other until the partition is equitable. Cells
/// split by neighbour count into the splitter, lowest count first, which
/// keeps the result independent of vertex names.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 1);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups = [0u64; 65];
                for v in bit_indices(cell) {
                    groups[(g.adjacency(v) & splitter).count_ones() as usize] |= 1 << v;
                }
                let before = next.len();
                next.extend(groups.iter().copied().filter(|&m| m != 0));
                changed |= next.len() - before > 1;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<u64>, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let n = self.g.order();
        let singles = cells.iter().take_while(|c| c.count_ones() == 1).count();
        let prefix: Vec<usize> = cells[..singles]
            .iter()
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        if let Some((best_bits, _)) = &self.best {
            let mask = prefix_mask(singles);
            let ours = encode(self.g, &prefix);
            if ours & mask > best_bits & mask {
                return;
            }
        }
        if singles == n {
            self.leaf(prefix);
            return;
        }
        let target = cells[singles];
        let mut explored: Vec<usize> = Vec::new();
        for v in bit_indices(target) {
            if !explored.is_empty() {
                let orbit = self.orbit_ids(fixed);
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..singles]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[singles + 1..]);
            fixed.push(v);
            self.visit(child, fixed);
            fixed.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = encode(self.g, &order);
        match &self.best {
            Some((best_bits, _)) if bits > *best_bits => {}
            Some((best_bits, best_order)) if bits == *best_bits => {
                let mut gamma = vec![0; order.len()];
                for (i, &v) in order.iter().enumerate() {
                    gamma[v] = best_order[i];
                }
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
            }
            _ => self.best = Some((bits, order)),
        }
    }

    /// Orbit representative per vertex under the automorphisms found so far
    /// that fix every vertex in `fixed`.
    fn orbit_ids(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if fixed.iter().any(|&f| gamma[f] != f) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Reference: minimum over every permutation.
    fn brute_min(g: &Graph) -> u128 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u128::MAX;
        permute(&mut perm, 0, &mut |p| best = best.min(encode(g, p)));
        best
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn symmetric_graphs_are_cheap_and_correct() {
        for n in 0..=12 {
            let e = Graph::empty(n).unwrap();
            let c = canonical_labeling(&e).unwrap();
            assert_eq!(c.form.bits(), 0);
            assert_eq!(c.labeling.len(), n);
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k).unwrap().bits(), prefix_mask(n));
        }
    }

    #[test]
    fn relabelling_invariance() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 6), (6, 2)]).unwrap();
        let perm = [3, 6, 0, 5, 1, 2, 4];
        let h = g.relabel(&perm).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert_eq!(canonical_graph(&g).unwrap(), canonical_graph(&h).unwrap());
        assert!(are_isomorphic(&g, &canonical_graph(&g).unwrap()));
    }

    #[test]
    fn distinguishes_cubic_order_six() {
        let k33 = Graph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        let prism = Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(
            canonical_form(&k33).unwrap(),
            canonical_form(&prism).unwrap()
        );
    }

    #[test]
    fn automorphisms_are_automorphisms() {
        for g in [cycle(8), cycle(5).disjoint_union(&cycle(5)).unwrap()] {
            let c = canonical_labeling(&g).unwrap();
            assert!(!c.automorphisms.is_empty());
            for a in &c.automorphisms {
                assert_eq!(g.relabel(a).unwrap(), g);
            }
        }
    }

    #[test]
    fn leaf_minimum_is_bounded_by_brute_force() {
        // the canonical string is the string of some permutation
        for g in [
            cycle(5),
            cycle(6),
            Graph::new(5, [(0, 1), (0, 2), (0, 3)]).unwrap(),
        ] {
            let c = canonical_form(&g).unwrap().bits();
            assert!(c >= brute_min(&g));
        }
    }

    #[test]
    fn too_large() {
        assert!(canonical_form(&Graph::empty(17).unwrap()).is_err());
    }
}
