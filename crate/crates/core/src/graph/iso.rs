use std::collections::BTreeMap;

use super::{bit_indices, Graph, VertexSet};
use crate::error::{Error, Result};

/// True iff `g` and `h` are isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An isomorphism `g -> h` as a vertex map (`map[v]` is the image of `v`).
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let n = g.order();
    colored_isomorphism(g, &vec![0; n], h, &vec![0; n])
}

/// True iff some automorphism of `g` maps the set `a` onto the set `b`.
pub fn has_automorphism_mapping(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    let mask = g.vertex_mask();
    if a.bits() & !mask != 0 || b.bits() & !mask != 0 {
        return Err(Error::validation(format!(
            "vertex sets must lie within 0..{}",
            g.order()
        )));
    }
    if a.len() != b.len() {
        return Err(Error::validation(format!(
            "sets have different sizes ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    let colors_a: Vec<u32> = (0..g.order()).map(|v| a.contains(v) as u32).collect();
    let colors_b: Vec<u32> = (0..g.order()).map(|v| b.contains(v) as u32).collect();
    Ok(colored_isomorphism(g, &colors_a, g, &colors_b).is_some())
}

/// Colour-preserving isomorphism search: degree-partition refinement run
/// jointly on both graphs, then backtracking over same-coloured vertices.
pub(crate) fn colored_isomorphism(
    g: &Graph,
    g_colors: &[u32],
    h: &Graph,
    h_colors: &[u32],
) -> Option<Vec<usize>> {
    let n = g.order();
    if h.order() != n {
        return None;
    }
    let (cg, ch) = joint_refine(g, g_colors, h, h_colors);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let order = search_order(g, &cg);
    let mut map = vec![usize::MAX; n];
    let mut search = Backtrack {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
    };
    search.extend(0, &mut map, 0).then_some(map)
}

/// Refine two vertex colourings in lock-step so colour ids stay comparable
/// across graphs. Each round recolours a vertex by its current colour and
/// the multiset of its neighbours' colours.
fn joint_refine(g: &Graph, gc: &[u32], h: &Graph, hc: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut cg = gc.to_vec();
    let mut ch = hc.to_vec();
    let count = |a: &[u32], b: &[u32]| {
        let mut all: Vec<u32> = a.iter().chain(b).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut classes = count(&cg, &ch);
    loop {
        let signature = |graph: &Graph, colors: &[u32], v: usize| {
            let mut nb: Vec<u32> = bit_indices(graph.adjacency(v)).map(|u| colors[u]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sg: Vec<_> = (0..g.order()).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.order()).map(|v| signature(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            ids.entry(s.clone()).or_insert(0u32);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            break;
        }
        classes = ids.len();
    }
    (cg, ch)
}

/// Vertex order for backtracking: start in the rarest colour class and
/// greedily prefer vertices with many already-placed neighbours.
fn search_order(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.order();
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let links = (g.adjacency(v) & placed).count_ones();
                (std::cmp::Reverse(links), class_size[&colors[v]], v)
            })
            .expect("unplaced vertex remains");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

struct Backtrack<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [u32],
    ch: &'a [u32],
    order: &'a [usize],
}

impl Backtrack<'_> {
    fn extend(&mut self, depth: usize, map: &mut [usize], used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let placed = &self.order[..depth];
        for w in 0..self.h.order() {
            if used >> w & 1 == 1 || self.ch[w] != self.cg[v] {
                continue;
            }
            let consistent = placed
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            if self.extend(depth + 1, map, used | 1 << w) {
                return true;
            }
        }
        map[v] = usize::MAX;
        false
    }
}
