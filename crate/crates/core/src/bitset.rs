/// Fixed-width set of vertex ids backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    len: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = Self::new(len);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    fn trim(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// Universe size, not the number of members.
    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.len);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.len && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    /// Number of members of `other` not already in `self`.
    #[inline]
    pub fn gain(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (b & !a).count_ones() as usize)
            .sum()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// Members of the complement, in increasing order.
    pub fn missing(&self) -> Vec<usize> {
        (0..self.len).filter(|&v| !self.contains(v)).collect()
    }
}
