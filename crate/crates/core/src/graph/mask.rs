use smallvec::SmallVec;
use std::fmt;

/// Set of removed vertices. Boards up to 128 vertices stay inline.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexMask {
    words: SmallVec<[u64; 2]>,
}

impl VertexMask {
    pub fn new(vertex_count: usize) -> Self {
        VertexMask {
            words: smallvec::smallvec![0; vertex_count.div_ceil(64)],
        }
    }

    /// Mask with every listed vertex removed.
    pub fn from_removed(vertex_count: usize, removed: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::new(vertex_count);
        for v in removed {
            m.insert(v);
        }
        m
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v >> 6)
            .is_some_and(|w| (w >> (v & 63)) & 1 == 1)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        let i = v >> 6;
        if i >= self.words.len() {
            self.words.resize(i + 1, 0);
        }
        self.words[i] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v >> 6) {
            *w &= !(1 << (v & 63));
        }
    }

    /// Copy of `self` with `v` also removed.
    #[inline]
    pub fn with(&self, v: usize) -> Self {
        let mut m = self.clone();
        m.insert(v);
        m
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| i * 64 + b)
        })
    }
}

impl fmt::Debug for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
