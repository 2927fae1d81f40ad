//! Isomorphism-free catalogs of small graphs, graph6 I/O, and property
//! search over catalogs.

mod canon;
mod graph6;
mod regular;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{evaluate, OracleConfig, Property, Verdict};

pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, Canonical, CanonicalForm, MAX_CANON_ORDER,
};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};

/// Largest order for [`enumerate_all`].
pub const MAX_ALL_ORDER: usize = 8;
/// Largest order for [`enumerate_regular`].
pub const MAX_REGULAR_ORDER: usize = 12;
/// Up to this order [`enumerate_all`] runs over every edge subset.
const BRUTE_FORCE_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogFilter {
    All,
    Regular(usize),
}

impl fmt::Display for CatalogFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogFilter::All => f.write_str("all"),
            CatalogFilter::Regular(k) => write!(f, "{k}-regular"),
        }
    }
}

/// One representative per isomorphism class, in canonical vertex order,
/// sorted by ascending canonical form.
#[derive(Clone, Debug)]
pub struct GraphCatalog {
    order: usize,
    filter: CatalogFilter,
    entries: Vec<(CanonicalForm, Graph)>,
}

impl GraphCatalog {
    fn from_map(order: usize, filter: CatalogFilter, map: BTreeMap<CanonicalForm, Graph>) -> Self {
        GraphCatalog {
            order,
            filter,
            entries: map.into_iter().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn filter(&self) -> CatalogFilter {
        self.filter
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> impl ExactSizeIterator<Item = &Graph> {
        self.entries.iter().map(|(_, g)| g)
    }

    pub fn forms(&self) -> impl ExactSizeIterator<Item = &CanonicalForm> {
        self.entries.iter().map(|(f, _)| f)
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.entries.into_iter().map(|(_, g)| g).collect()
    }
}

fn insert_canonical(map: &mut BTreeMap<CanonicalForm, Graph>, g: &Graph) -> Result<()> {
    let c = canonical_labeling(g)?;
    map.entry(c.form).or_insert_with(|| c.graph(g));
    Ok(())
}

/// Every graph on `order` vertices up to isomorphism.
pub fn enumerate_all(order: usize) -> Result<GraphCatalog> {
    if order > MAX_ALL_ORDER {
        return Err(Error::capacity(format!(
            "complete catalogs stop at order {MAX_ALL_ORDER}; read larger graphs from graph6 instead"
        )));
    }
    let map = if order <= BRUTE_FORCE_ORDER {
        all_by_edge_subsets(order)?
    } else {
        let parents = enumerate_all(order - 1)?;
        augment(&parents)?
    };
    Ok(GraphCatalog::from_map(order, CatalogFilter::All, map))
}

fn all_by_edge_subsets(order: usize) -> Result<BTreeMap<CanonicalForm, Graph>> {
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    let mut map = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut g = Graph::empty(order)?;
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
        }
        insert_canonical(&mut map, &g)?;
    }
    Ok(map)
}

/// Add one vertex to each parent in every possible way, keeping a child only
/// when the new vertex could be the one its canonical labelling puts last:
/// deleting it must leave the same graph, up to isomorphism, as deleting the
/// canonically last vertex.
fn augment(parents: &GraphCatalog) -> Result<BTreeMap<CanonicalForm, Graph>> {
    let p = parents.order();
    let new = p;
    let mut map = BTreeMap::new();
    for (parent_form, parent) in parents.forms().zip(parents.graphs()) {
        let mut adj = parent.adjacency_rows().to_vec();
        adj.push(0);
        for nbrs in 0u64..1 << p {
            let mut rows = adj.clone();
            rows[new] = nbrs;
            for u in crate::graph::bit_indices(nbrs) {
                rows[u] |= 1 << new;
            }
            let child = Graph::from_adjacency_unchecked(rows);
            let c = canonical_labeling(&child)?;
            let last = c.last_vertex().expect("child has a vertex");
            if last != new {
                let rest = child.vertex_mask() & !(1 << last);
                let without_last = canonical_form(&child.induced_by_mask(rest))?;
                if without_last != *parent_form {
                    continue;
                }
            }
            map.entry(c.form).or_insert_with(|| c.graph(&child));
        }
    }
    Ok(map)
}

/// Every `k`-regular graph on `order` vertices up to isomorphism.
pub fn enumerate_regular(order: usize, k: usize) -> Result<GraphCatalog> {
    if order > MAX_REGULAR_ORDER {
        return Err(Error::capacity(format!(
            "regular catalogs stop at order {MAX_REGULAR_ORDER}"
        )));
    }
    if k >= order.max(1) {
        return Err(Error::validation(format!(
            "degree {k} is not below the order {order}"
        )));
    }
    if k * order % 2 == 1 {
        return Err(Error::validation(format!(
            "no {k}-regular graph on {order} vertices: k * order is odd"
        )));
    }
    // generate the sparser side and complement
    let flip = order > 0 && 2 * k > order - 1;
    let gen_k = if flip { order - 1 - k } else { k };
    let mut map = BTreeMap::new();
    let mut failure = None;
    regular::for_each_regular(order, gen_k, &mut |g| {
        if failure.is_some() {
            return;
        }
        let g = if flip { g.complement() } else { g.clone() };
        if let Err(e) = insert_canonical(&mut map, &g) {
            failure = Some(e);
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(GraphCatalog::from_map(
        order,
        CatalogFilter::Regular(k),
        map,
    ))
}

/// Run the oracle for `property` on every catalog graph and return those
/// where it holds, in catalog order.
pub fn search_property(
    catalog: &GraphCatalog,
    property: Property,
    cfg: &OracleConfig,
) -> Result<Vec<(Graph, Verdict)>> {
    let graphs: Vec<&Graph> = catalog.graphs().collect();
    let run = |g: &&Graph| evaluate(g, property, cfg).map(|v| ((*g).clone(), v));
    let verdicts: Vec<(Graph, Verdict)> = if cfg.parallel {
        graphs.par_iter().map(run).collect::<Result<_>>()?
    } else {
        graphs.iter().map(run).collect::<Result<_>>()?
    };
    Ok(verdicts.into_iter().filter(|(_, v)| v.holds).collect())
}
