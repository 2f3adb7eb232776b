//! Compact sets of root indices.
//!
//! Root systems handled here stay small (a few hundred roots at most), so a
//! fixed-width bit vector is ample and keeps set algebra allocation-free on
//! the hot paths.

/// A set of root indices into a fixed `RootSystem`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    universe: usize,
    words: Vec<u64>,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        RootSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Self::empty(universe);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> RootSet {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        // mask off bits beyond the universe
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = out.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        out
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Image of the set under a permutation of indices (`map[i]` = image of `i`).
    pub fn map(&self, map: &[usize]) -> RootSet {
        let mut out = RootSet::empty(self.universe);
        for i in self.iter() {
            out.insert(map[i]);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(64 * k + b)
                }
            })
        })
    }

    fn zip(&self, other: &RootSet, f: impl Fn(u64, u64) -> u64) -> RootSet {
        assert_eq!(self.universe, other.universe, "root set universe mismatch");
        RootSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl std::fmt::Debug for RootSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = RootSet::from_indices(70, [0, 3, 64, 69]);
        let b = RootSet::from_indices(70, [3, 5, 69]);
        assert_eq!(a.len(), 4);
        assert!(a.contains(64));
        assert!(!a.contains(5));
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3, 69]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0, 64]);
        assert_eq!(a.complement().len(), 66);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(RootSet::full(70).len(), 70);
        assert_eq!(RootSet::full(70).complement(), RootSet::empty(70));
    }
}
