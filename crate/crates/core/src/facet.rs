//! Vertex labels and sorted vertex sets.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A 1-based vertex label.
pub type Label = u32;

/// A finite set of vertex labels, stored as a strictly increasing sequence.
///
/// The derived ordering is lexicographic on the sorted labels, so
/// `{1,2,3} < {1,2,4} < {1,3}`; this is the order used by the text format.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FacetSet(SmallVec<[Label; 8]>);

impl FacetSet {
    pub fn empty() -> Self {
        FacetSet(SmallVec::new())
    }

    /// Builds a set from labels in any order; duplicates collapse.
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Self {
        let mut v: SmallVec<[Label; 8]> = labels.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FacetSet(v)
    }

    /// Builds a set from a strictly increasing sequence, or returns `None`.
    pub fn from_increasing(labels: &[Label]) -> Option<Self> {
        if labels.windows(2).all(|w| w[0] < w[1]) {
            Some(FacetSet(SmallVec::from_slice(labels)))
        } else {
            None
        }
    }

    /// The interval `[a, b]`; empty when `a > b`.
    pub fn interval(a: Label, b: Label) -> Self {
        if a > b {
            return Self::empty();
        }
        FacetSet((a..=b).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    pub fn min_label(&self) -> Option<Label> {
        self.0.first().copied()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: Label) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &FacetSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &FacetSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &FacetSet) -> FacetSet {
        let mut out = SmallVec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j == other.0.len() || (i < self.0.len() && self.0[i] <= other.0[j]);
            if take_left {
                if j < other.0.len() && self.0[i] == other.0[j] {
                    j += 1;
                }
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        FacetSet(out)
    }

    pub fn intersection(&self, other: &FacetSet) -> FacetSet {
        FacetSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &FacetSet) -> FacetSet {
        FacetSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn with(&self, v: Label) -> FacetSet {
        let mut out = self.clone();
        if let Err(pos) = out.0.binary_search(&v) {
            out.0.insert(pos, v);
        }
        out
    }

    pub fn without(&self, v: Label) -> FacetSet {
        FacetSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    /// Adds `offset` to every label; `None` if a label would drop below 1.
    pub fn shifted(&self, offset: i64) -> Option<FacetSet> {
        let mut out = SmallVec::with_capacity(self.len());
        for &v in &self.0 {
            let w = v as i64 + offset;
            if w < 1 || w > Label::MAX as i64 {
                return None;
            }
            out.push(w as Label);
        }
        Some(FacetSet(out))
    }

    /// All codimension-one subsets, in the order of the removed vertex.
    pub fn ridges(&self) -> impl Iterator<Item = FacetSet> + '_ {
        self.0.iter().map(move |&v| self.without(v))
    }

    /// All subsets, including the empty set and the set itself.
    pub fn subsets(&self) -> impl Iterator<Item = FacetSet> + '_ {
        let k = self.0.len();
        debug_assert!(k < 32);
        (0u32..(1u32 << k)).map(move |mask| {
            FacetSet(
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Debug for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Label> for FacetSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        FacetSet::new(iter)
    }
}

impl<const N: usize> From<[Label; N]> for FacetSet {
    fn from(labels: [Label; N]) -> Self {
        FacetSet::new(labels)
    }
}

/// Shorthand used throughout the tests: `fs(&[1, 2, 3])`.
pub fn fs(labels: &[Label]) -> FacetSet {
    FacetSet::new(labels.iter().copied())
}
