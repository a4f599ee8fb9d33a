use std::cmp::Ordering;
use std::fmt;

/// Dimension of the underlying vector space.
pub const DIM: usize = 7;

/// A strictly increasing multi-index over `1..=7`, stored as a bit set
/// (bit `i` set means index `i + 1` is present).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u8);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);
    pub const FULL: MultiIndex = MultiIndex(0x7f);

    /// From 1-based indices; `None` unless strictly increasing and in range.
    pub fn new(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u8;
        let mut prev = 0;
        for &i in indices {
            if i <= prev || i > DIM {
                return None;
            }
            bits |= 1 << (i - 1);
            prev = i;
        }
        Some(MultiIndex(bits))
    }

    /// From 0-based positions in any order, together with the sign of the
    /// sorting permutation. Returns `None` on repeated positions.
    pub fn sort_positions(positions: &[usize]) -> Option<(Self, i32)> {
        let mut bits = 0u8;
        let mut sign = 1;
        for (n, &p) in positions.iter().enumerate() {
            debug_assert!(p < DIM);
            if bits & (1 << p) != 0 {
                return None;
            }
            bits |= 1 << p;
            for &q in &positions[..n] {
                if q > p {
                    sign = -sign;
                }
            }
        }
        Some((MultiIndex(bits), sign))
    }

    pub fn from_bits(bits: u8) -> Self {
        MultiIndex(bits & 0x7f)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 0-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        (0..DIM).filter(move |&p| self.0 & (1 << p) != 0)
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        self.positions().map(|p| p + 1).collect()
    }

    pub fn contains(self, position: usize) -> bool {
        self.0 & (1 << position) != 0
    }

    pub fn complement(self) -> Self {
        MultiIndex(!self.0 & 0x7f)
    }

    /// Sign of `e_self ∧ e_other` relative to the sorted monomial, or `None`
    /// if the two share an index.
    pub fn wedge_sign(self, other: MultiIndex) -> Option<i32> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        for p in self.positions() {
            // indices of `other` smaller than p
            inversions += (other.0 & ((1u8 << p) - 1)).count_ones();
        }
        Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
    }

    /// `e_position ⌟ e_self` as (sign, remaining index), if `position` is present.
    pub fn remove(self, position: usize) -> Option<(i32, MultiIndex)> {
        if !self.contains(position) {
            return None;
        }
        let before = (self.0 & ((1u8 << position) - 1)).count_ones();
        let sign = if before.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, MultiIndex(self.0 & !(1 << position))))
    }

    /// All multi-indices of a given degree in canonical (lexicographic) order.
    pub fn all_of_degree(k: usize) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = (0u8..128)
            .filter(|b| b.count_ones() as usize == k)
            .map(MultiIndex)
            .collect();
        out.sort();
        out
    }
}

impl Ord for MultiIndex {
    /// Degree first, then lexicographic on the increasing index tuples.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // the tuple holding the smallest differing index sorts first
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
