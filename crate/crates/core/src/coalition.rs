use std::fmt;

/// A set of node ids packed into a 64-bit mask. Bit `i` is node `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u64);

impl Coalition {
    /// Largest node count a coalition can address.
    pub const MAX_WIDTH: usize = 64;

    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u64) -> Self {
        Coalition(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_WIDTH, "coalition width {n} exceeds 64");
        if n == 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < Self::MAX_WIDTH);
        Coalition(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::MAX_WIDTH && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        self | Coalition::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        Coalition(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within `0..n`.
    pub fn complement(self, n: usize) -> Self {
        Coalition(!self.0 & Coalition::full(n).0)
    }

    /// Highest member plus one, i.e. the smallest width that holds this set.
    pub fn width(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn members(self) -> Members {
        Members(self.0)
    }

    /// Every coalition over `0..n`, in increasing bit order.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        assert!(n < Self::MAX_WIDTH);
        (0..1u64 << n).map(Coalition)
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Index of this coalition in a dense `2^n` table.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::ops::BitOr for Coalition {
    type Output = Coalition;
    fn bitor(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Coalition {
    type Output = Coalition;
    fn bitand(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 & rhs.0)
    }
}

impl std::ops::BitOrAssign for Coalition {
    fn bitor_assign(&mut self, rhs: Coalition) {
        self.0 |= rhs.0;
    }
}

impl FromIterator<usize> for Coalition {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(Coalition::EMPTY, |acc, i| acc.with(i))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `{0,3,5}` with zero-based ids.
/// Members are numbered from 1 to match the usual node numbering.
impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next?;
        self.next = if current == self.mask {
            None
        } else {
            Some((current.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Coalition(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_roundtrip() {
        let c: Coalition = [0, 3, 5].into_iter().collect();
        assert_eq!(c.members().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(c.len(), 3);
        assert_eq!(c.to_string(), "{1,4,6}");
        assert_eq!(c.width(), 6);
    }

    #[test]
    fn subsets_cover_every_submask_once() {
        let c: Coalition = [1, 2, 4].into_iter().collect();
        let subs: Vec<_> = c.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset_of(c)));
        let mut sorted = subs.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn complement_and_full() {
        let c: Coalition = [0, 2].into_iter().collect();
        assert_eq!(c.complement(4), [1, 3].into_iter().collect());
        assert_eq!(Coalition::full(0), Coalition::EMPTY);
        assert_eq!(Coalition::full(64).len(), 64);
        assert_eq!(c.without(2), Coalition::singleton(0));
    }
}
