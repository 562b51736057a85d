//! Fixed-capacity bitset used for vertex sets of a working (sub)graph.

/// A set of vertex ids drawn from `0..capacity`, with bitset semantics.
///
/// Sized to the graph it belongs to; branch machinery relies on cheap
/// clones, unions and popcount intersections.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
    len: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
            len: 0,
        }
    }

    /// The full set `{0, ..., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = VertexSet::new(capacity);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        if capacity % 64 != 0 {
            if let Some(last) = s.words.last_mut() {
                *last = (1u64 << (capacity % 64)) - 1;
            }
        }
        s.len = capacity;
        s
    }

    pub fn from_iter(capacity: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        if *w & bit != 0 {
            *w &= !bit;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
        self.len = 0;
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut len = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
            len += a.count_ones() as usize;
        }
        self.len = len;
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut len = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
            len += a.count_ones() as usize;
        }
        self.len = len;
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut len = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
            len += a.count_ones() as usize;
        }
        self.len = len;
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_size(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.intersection_size(other) == 0
    }

    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for SetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}
