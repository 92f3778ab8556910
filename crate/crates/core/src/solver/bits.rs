//! Fixed-width vertex bitsets for the search. Bit `v - 1` stands for label `v`.

use crate::facet::{FacetSet, Label};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Bits<W> {
    pub fn zero() -> Self {
        Bits([0; W])
    }

    pub fn from_facet(f: &FacetSet) -> Self {
        let mut b = Self::zero();
        for v in f.iter() {
            b.insert(v);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, v: Label) {
        let i = (v - 1) as usize;
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn and_not(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..W {
            out.0[w] &= !other.0[w];
        }
        out
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        (0..W).any(|w| self.0[w] & other.0[w] != 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for w in 0..W {
            self.0[w] |= other.0[w];
        }
    }

    #[inline]
    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    /// Labels in increasing order.
    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..W).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let t = word.trailing_zeros();
                word &= word - 1;
                Some((w * 64) as Label + t + 1)
            })
        })
    }

    pub fn to_facet(self) -> FacetSet {
        FacetSet::new(self.labels())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;

    #[test]
    fn round_trip_across_words() {
        let f = fs(&[1, 63, 64, 65, 128, 129, 200]);
        let b = Bits::<4>::from_facet(&f);
        assert_eq!(b.to_facet(), f);
        assert_eq!(b.count(), 7);
        let c = Bits::<4>::from_facet(&fs(&[1, 200]));
        assert_eq!(b.and_not(&c).to_facet(), fs(&[63, 64, 65, 128, 129]));
        assert!(b.intersects(&c));
    }
}
