//! Lexicographic enumeration of fixed-size subsets as bit masks.
//!
//! The oracles only look at half-sets `A` with `0 ∈ A`: `A` and its
//! complement play symmetric roles, so this halves the search. Such a set is
//! `{0} ∪ S` with `S` an `(n-1)`-subset of `{1, .., 2n-1}`, and lexicographic
//! order on the sorted members of `A` is lexicographic order on `S`.

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `k`-subsets of `{0, .., m-1}` in lexicographic order, yielded as masks.
#[derive(Clone, Debug)]
pub struct LexCombinations {
    m: usize,
    idx: Vec<usize>,
    remaining: u64,
}

impl LexCombinations {
    pub fn new(m: usize, k: usize) -> Self {
        Self::from_rank(m, k, 0, binomial(m, k))
    }

    /// Start at lexicographic position `rank` and yield at most `len` subsets.
    pub fn from_rank(m: usize, k: usize, rank: u64, len: u64) -> Self {
        let total = binomial(m, k);
        let remaining = if rank >= total {
            0
        } else {
            len.min(total - rank)
        };
        let idx = if remaining > 0 {
            unrank(m, k, rank)
        } else {
            Vec::new()
        };
        LexCombinations { m, idx, remaining }
    }

    fn advance(&mut self) {
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return;
            }
        }
    }
}

impl Iterator for LexCombinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |acc, &i| acc | 1 << i);
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(mask)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Sorted members of the `rank`-th `k`-subset of `{0, .., m-1}`.
pub fn unrank(m: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for i in 0..k {
        let mut c = next;
        loop {
            let below = binomial(m - 1 - c, k - 1 - i);
            if rank < below {
                break;
            }
            rank -= below;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

/// Number of half-sets containing vertex 0 in a graph of even order.
pub fn half_set_count(order: usize) -> u64 {
    if order == 0 {
        return 0;
    }
    let n = order / 2;
    binomial(order - 1, n - 1)
}

/// Half-sets containing vertex 0, lexicographic, from `rank` for `len` items.
pub fn half_sets(order: usize, rank: u64, len: u64) -> impl Iterator<Item = u64> {
    let (m, k) = if order == 0 {
        (0, 0)
    } else {
        (order - 1, order / 2 - 1)
    };
    let len = if order == 0 { 0 } else { len };
    LexCombinations::from_rank(m, k, rank, len).map(|s| s << 1 | 1)
}
