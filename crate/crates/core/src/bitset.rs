//! Fixed-length vertex sets backed by `u64` words.

const WORD_BITS: usize = 64;

/// A set over `0..len` stored as machine words.
///
/// Bits past `len` are kept zero, so `==` and hashing work word-wise and the
/// cover/overlap tests below are straight word loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// The full set `{0, .., len-1}`.
    pub fn full(len: usize) -> Self {
        let mut s = Bitset {
            len,
            words: vec![!0u64; len.div_ceil(WORD_BITS)],
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let extra = self.words.len() * WORD_BITS - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 >> extra;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Do the two sets share an element? Stops at the first common word.
    pub fn intersects(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .any(|(&a, &b)| a & b != 0)
    }

    /// Is the union of the two sets everything? Stops at the first gap.
    pub fn union_is_full(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        let Some(last) = self.words.len().checked_sub(1) else {
            return true;
        };
        for i in 0..last {
            if self.words[i] | other.words[i] != !0u64 {
                return false;
            }
        }
        let tail = !0u64 >> (self.words.len() * WORD_BITS - self.len);
        self.words[last] | other.words[last] == tail
    }

    /// Size of the symmetric difference.
    pub fn hamming(&self, other: &Bitset) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.len, other.len);
        Bitset {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| a & b)
                .collect(),
        }
    }

    pub fn or_assign(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, &b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            std::iter::successors(
                if w == 0 { None } else { Some(w) },
                |&rest| {
                    let rest = rest & (rest - 1);
                    if rest == 0 {
                        None
                    } else {
                        Some(rest)
                    }
                },
            )
            .map(move |rest| wi * WORD_BITS + rest.trailing_zeros() as usize)
        })
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}
