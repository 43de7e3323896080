use std::fmt;

use serde::{Deserialize, Serialize};

/// A sorted, duplicate-free set of outcome indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OutcomeSet(Vec<usize>);

impl OutcomeSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self(members)
    }

    pub fn singleton(i: usize) -> Self {
        Self(vec![i])
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Members whose bit is set in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    /// Bitmask form; `None` if any member is 64 or larger.
    pub fn to_mask(&self) -> Option<u64> {
        self.0.iter().try_fold(0u64, |m, &i| (i < 64).then(|| m | 1 << i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lowest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn highest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x <= y {
                        out.push(x);
                        a.next();
                        if x == y {
                            b.next();
                        }
                    } else {
                        out.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => out.extend(a.by_ref()),
                (None, Some(_)) => out.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Self(out)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.iter().filter(|&i| other.contains(i)).collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.iter().filter(|&i| !other.contains(i)).collect())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.iter().all(|i| !other.contains(i))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|i| other.contains(i))
    }
}

impl fmt::Debug for OutcomeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl FromIterator<usize> for OutcomeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for OutcomeSet {
    fn from(a: [usize; N]) -> Self {
        Self::new(a.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_sorts_and_dedups() {
        let s = OutcomeSet::new(vec![5, 1, 3, 1]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(s.lowest(), Some(1));
        assert_eq!(s.to_mask(), Some(0b101010));
        assert_eq!(OutcomeSet::from_mask(0b101010), s);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_masks(a in any::<u16>(), b in any::<u16>()) {
            let (sa, sb) = (OutcomeSet::from_mask(a as u64), OutcomeSet::from_mask(b as u64));
            prop_assert_eq!(sa.union(&sb).to_mask(), Some((a | b) as u64));
            prop_assert_eq!(sa.intersection(&sb).to_mask(), Some((a & b) as u64));
            prop_assert_eq!(sa.difference(&sb).to_mask(), Some((a & !b) as u64));
            prop_assert_eq!(sa.is_disjoint(&sb), a & b == 0);
        }
    }
}
