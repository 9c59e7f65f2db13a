//! Fixed-width bitsets stored as flat `u64` word slices.

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

pub(crate) fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

pub(crate) fn iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + bit)
        })
    })
}

/// Positive and negative neighborhoods of every vertex as bitsets.
pub(crate) struct SignedAdjacency {
    pub words: usize,
    pos: Vec<u64>,
    neg: Vec<u64>,
}

impl SignedAdjacency {
    pub fn new(g: &crate::sgraph::SignedGraph) -> SignedAdjacency {
        let n = g.order();
        let words = words_for(n);
        let mut pos = vec![0u64; n * words];
        let mut neg = vec![0u64; n * words];
        for v in 0..n {
            for &(w, s) in g.neighbors(v) {
                let row = if s.is_pos() { &mut pos } else { &mut neg };
                row[v * words + w / 64] |= 1 << (w % 64);
            }
        }
        SignedAdjacency { words, pos, neg }
    }

    pub fn row(&self, v: usize, s: crate::sgraph::Sign) -> &[u64] {
        let base = v * self.words;
        let table = if s.is_pos() { &self.pos } else { &self.neg };
        &table[base..base + self.words]
    }
}
