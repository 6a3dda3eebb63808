//! Minimal fixed-capacity bitset used for adjacency rows and vertex sets.
//! All binary operations assume both operands were created with the same
//! capacity.

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(capacity: usize) -> Self {
        Bits {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut b = Bits::new(capacity);
        for i in iter {
            b.set(i);
        }
        b
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn test(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    /// Overwrites self with `other`, which must share its capacity.
    #[inline]
    pub fn copy_from(&mut self, other: &Bits) {
        self.words.copy_from_slice(&other.words);
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn andnot_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn and(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Whether every bit set in `other` is also set in `self`.
    pub fn covers(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(s, o)| o & !s == 0)
    }

    /// Clears bits `0..=i`.
    pub fn clear_upto(&mut self, i: usize) {
        let wi = i / 64;
        for w in &mut self.words[..wi] {
            *w = 0;
        }
        let r = i % 64;
        if r == 63 {
            self.words[wi] = 0;
        } else {
            self.words[wi] &= !((1u64 << (r + 1)) - 1);
        }
    }

    /// Iterates over set bits in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            // Each yielded value is nonzero; dropping its lowest bit walks
            // the word without ever underflowing on 0.
            std::iter::successors((w != 0).then_some(w), |&r| {
                let rest = r & (r - 1);
                (rest != 0).then_some(rest)
            })
            .map(move |r| wi * 64 + r.trailing_zeros() as usize)
        })
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}
