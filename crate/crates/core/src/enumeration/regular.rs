//! Labelled k-regular graph generation by row-wise edge completion.
//!
//! Vertices are completed in index order. When vertex `i` picks its
//! remaining neighbours among later vertices, later vertices whose partial
//! rows are identical are interchangeable, so only the lowest-indexed
//! members of each such class are ever chosen. Every isomorphism class is
//! still reached; duplicates are removed by the caller.

use crate::graph::Graph;

pub(crate) fn for_each_regular(n: usize, k: usize, f: &mut dyn FnMut(&Graph)) {
    let mut gen = Completion {
        n,
        k,
        adj: vec![0; n],
        deg: vec![0; n],
    };
    gen.complete_vertex(0, f);
}

struct Completion {
    n: usize,
    k: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
}

impl Completion {
    fn complete_vertex(&mut self, i: usize, f: &mut dyn FnMut(&Graph)) {
        if i == self.n {
            f(&Graph::from_adjacency_unchecked(self.adj.clone()));
            return;
        }
        // each unfinished vertex needs enough later partners
        let later = self.n - i - 1;
        if (i..self.n).any(|j| self.k - self.deg[j] > later) {
            return;
        }
        let need = self.k - self.deg[i];
        let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
        for j in i + 1..self.n {
            if self.deg[j] >= self.k {
                continue;
            }
            match classes.iter_mut().find(|(row, _)| *row == self.adj[j]) {
                Some((_, members)) => members.push(j),
                None => classes.push((self.adj[j], vec![j])),
            }
        }
        let members: Vec<Vec<usize>> = classes.into_iter().map(|(_, m)| m).collect();
        let available: usize = members.iter().map(Vec::len).sum();
        if available < need {
            return;
        }
        let mut chosen = Vec::with_capacity(need);
        self.choose(i, &members, 0, need, &mut chosen, f);
    }

    /// Take a prefix of each class in turn until `need` neighbours are chosen.
    fn choose(
        &mut self,
        i: usize,
        classes: &[Vec<usize>],
        c: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&Graph),
    ) {
        if need == 0 {
            for &j in chosen.iter() {
                self.adj[i] |= 1 << j;
                self.adj[j] |= 1 << i;
                self.deg[i] += 1;
                self.deg[j] += 1;
            }
            self.complete_vertex(i + 1, f);
            for &j in chosen.iter() {
                self.adj[i] &= !(1 << j);
                self.adj[j] &= !(1 << i);
                self.deg[i] -= 1;
                self.deg[j] -= 1;
            }
            return;
        }
        if c == classes.len() {
            return;
        }
        let rest: usize = classes[c + 1..].iter().map(Vec::len).sum();
        let lo = need.saturating_sub(rest);
        let hi = need.min(classes[c].len());
        for take in lo..=hi {
            chosen.extend_from_slice(&classes[c][..take]);
            self.choose(i, classes, c + 1, need - take, chosen, f);
            chosen.truncate(chosen.len() - take);
        }
    }
}
