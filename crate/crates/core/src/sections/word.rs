use std::fmt;

/// A Grassmann monomial `xi_{i1} .. xi_{ir}` with `i1 < .. < ir`, stored as a
/// bitmask (bit `i-1` for generator `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(u8);

impl Word {
    pub const MAX_GENERATORS: u8 = 8;

    pub fn empty() -> Self {
        Word(0)
    }

    /// The single generator `xi_i` (1-based).
    pub fn generator(i: u8) -> Self {
        assert!((1..=Self::MAX_GENERATORS).contains(&i), "generator index {i} out of range");
        Word(1 << (i - 1))
    }

    /// All generators `xi_1 .. xi_m`.
    pub fn full(m: usize) -> Self {
        Word(((1u16 << m) - 1) as u8)
    }

    /// Normalize an ordered product of generators. Returns the sign of the
    /// sorting permutation, or `None` when an index repeats (`xi_i^2 = 0`).
    pub fn from_indices(indices: &[u8]) -> Option<(i8, Word)> {
        let mut acc = (1i8, Word::empty());
        for &i in indices {
            if !(1..=Self::MAX_GENERATORS).contains(&i) {
                return None;
            }
            let (s, w) = acc.1.mul(Word::generator(i))?;
            acc = (acc.0 * s, w);
        }
        Some(acc)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = u8> {
        (1..=Self::MAX_GENERATORS).filter(move |&i| self.contains(i))
    }

    pub fn is_odd(self) -> bool {
        self.len() % 2 == 1
    }

    /// `self * rhs` as sign and sorted word; `None` if they share a generator.
    pub fn mul(self, rhs: Word) -> Option<(i8, Word)> {
        if self.0 & rhs.0 != 0 {
            return None;
        }
        // Each generator of rhs moves left past the larger generators of self.
        let swaps: u32 = rhs.indices().map(|j| (self.0 >> j).count_ones()).sum();
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Word(self.0 | rhs.0)))
    }

    /// Left derivative `d/dxi_i` of the monomial: moves `xi_i` to the front
    /// and strips it.
    pub fn left_derivative(self, i: u8) -> Option<(i8, Word)> {
        if !self.contains(i) {
            return None;
        }
        let before = (self.0 & ((1u8 << (i - 1)) - 1)).count_ones();
        let sign = if before % 2 == 0 { 1 } else { -1 };
        Some((sign, Word(self.0 & !(1 << (i - 1)))))
    }

    /// The complement inside `{1..m}`.
    pub fn complement(self, m: usize) -> Word {
        Word(Word::full(m).0 & !self.0)
    }

    /// Every word over `m` generators, shortest first.
    pub fn all(m: usize) -> Vec<Word> {
        let mut words: Vec<Word> = (0..(1u16 << m)).map(|b| Word(b as u8)).collect();
        words.sort_by_key(|w| (w.len(), w.0));
        words
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "xi{i}")?;
        }
        Ok(())
    }
}
