//! Pure simplicial complexes given by their facets.
//!
//! A [`PureComplex`] is a value: every operation returns a new complex and
//! never mutates its inputs. Labels are 1-based and are never renumbered, so
//! links, stars and restrictions keep the labels of the host complex.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{bad, Error, Result};
use crate::facet::{FacetSet, Label};

/// How strictly [`PureComplex::build`] validates its input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Every label in `[1, n]` must lie in some facet.
    Strict,
    /// Unused labels are tolerated (links, shifted balls, partial constructions).
    AllowGaps,
}

/// A pure complex on labels `[1, n]`: every facet has exactly `d` vertices.
#[derive(Clone)]
pub struct PureComplex {
    n: Label,
    d: usize,
    facets: Vec<FacetSet>,
}

impl PartialEq for PureComplex {
    /// Two complexes are equal when they have the same facets; the label
    /// bound `n` is bookkeeping and does not take part.
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.facets == other.facets
    }
}

impl Eq for PureComplex {}

impl fmt::Debug for PureComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureComplex(n={}, d={}, {:?})", self.n, self.d, self.facets)
    }
}

/// Face counts by dimension; index 0 holds `f_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` for `i >= -1`.
    pub fn get(&self, i: isize) -> u64 {
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl PureComplex {
    pub fn from_facets<I: IntoIterator<Item = FacetSet>>(n: Label, facets: I) -> Result<Self> {
        Self::build(n, facets, Validation::Strict)
    }

    pub fn with_gaps<I: IntoIterator<Item = FacetSet>>(n: Label, facets: I) -> Result<Self> {
        Self::build(n, facets, Validation::AllowGaps)
    }

    pub fn build<I: IntoIterator<Item = FacetSet>>(
        n: Label,
        facets: I,
        validation: Validation,
    ) -> Result<Self> {
        let mut facets: Vec<FacetSet> = facets.into_iter().collect();
        let Some(first) = facets.first() else {
            return Err(bad("a complex needs at least one facet; use PureComplex::empty"));
        };
        let d = first.len();
        for f in &facets {
            if f.len() != d {
                return Err(Error::NonUniform { expected: d, found: f.len() });
            }
            for v in f.iter() {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { label: v, n });
                }
            }
        }
        facets.sort_unstable();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFacet(w[0].clone()));
        }
        let c = PureComplex { n, d, facets };
        if validation == Validation::Strict {
            let used: HashSet<Label> = c.facets.iter().flat_map(|f| f.iter()).collect();
            if let Some(v) = (1..=n).find(|v| !used.contains(v)) {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(c)
    }

    /// Builds from facets that are already known to be uniform and distinct.
    pub(crate) fn from_parts(n: Label, d: usize, facets: BTreeSet<FacetSet>) -> Self {
        debug_assert!(facets.iter().all(|f| f.len() == d));
        PureComplex { n, d, facets: facets.into_iter().collect() }
    }

    /// The complex with no facets at all, e.g. the boundary of a closed pseudomanifold.
    pub fn empty(n: Label, d: usize) -> Self {
        PureComplex { n, d, facets: Vec::new() }
    }

    /// The simplex on `vertices` (all of its subsets).
    pub fn simplex(vertices: &FacetSet) -> Self {
        let n = vertices.max_label().unwrap_or(0);
        PureComplex { n, d: vertices.len(), facets: vec![vertices.clone()] }
    }

    /// The boundary of the simplex on `vertices`.
    pub fn simplex_boundary(vertices: &FacetSet) -> Self {
        let n = vertices.max_label().unwrap_or(0);
        let facets: BTreeSet<FacetSet> = vertices.ridges().collect();
        Self::from_parts(n, vertices.len().saturating_sub(1), facets)
    }

    /// Label bound: all labels lie in `[1, n]`.
    pub fn n(&self) -> Label {
        self.n
    }

    /// Facet cardinality (dimension + 1).
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> isize {
        self.d as isize - 1
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[FacetSet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Labels that lie in at least one facet, increasing.
    pub fn vertices(&self) -> Vec<Label> {
        let s: BTreeSet<Label> = self.facets.iter().flat_map(|f| f.iter()).collect();
        s.into_iter().collect()
    }

    pub fn vertex_set(&self) -> FacetSet {
        FacetSet::new(self.vertices())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    /// Returns a copy whose label bound is raised to `n`.
    pub fn with_label_bound(mut self, n: Label) -> Self {
        self.n = self.n.max(n);
        self
    }

    pub fn contains_facet(&self, f: &FacetSet) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    pub fn has_face(&self, f: &FacetSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }

    /// Every face, the empty face included.
    pub fn faces(&self) -> HashSet<FacetSet> {
        let mut out = HashSet::new();
        for f in &self.facets {
            for g in f.subsets() {
                out.insert(g);
            }
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.d + 1];
        for g in self.faces() {
            counts[g.len()] += 1;
        }
        FVector(counts)
    }

    pub fn star(&self, f: &FacetSet) -> Result<PureComplex> {
        let facets: Vec<FacetSet> = self.facets.iter().filter(|g| f.is_subset(g)).cloned().collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(f.clone()));
        }
        Ok(PureComplex { n: self.n, d: self.d, facets })
    }

    pub fn link(&self, f: &FacetSet) -> Result<PureComplex> {
        let facets: BTreeSet<FacetSet> = self
            .facets
            .iter()
            .filter(|g| f.is_subset(g))
            .map(|g| g.difference(f))
            .collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(f.clone()));
        }
        Ok(Self::from_parts(self.n, self.d - f.len(), facets))
    }

    pub fn join(&self, other: &PureComplex) -> Result<PureComplex> {
        let mine = self.vertex_set();
        if let Some(v) = other.vertex_set().iter().find(|&v| mine.contains(v)) {
            return Err(Error::OverlappingVertexSets(v));
        }
        let facets: BTreeSet<FacetSet> = self
            .facets
            .iter()
            .flat_map(|f| other.facets.iter().map(move |g| f.union(g)))
            .collect();
        Ok(Self::from_parts(self.n.max(other.n), self.d + other.d, facets))
    }

    /// All faces contained in `w`, sorted. The result need not be pure.
    pub fn restriction(&self, w: &FacetSet) -> Vec<FacetSet> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let g = f.intersection(w);
            if out.contains(&g) {
                continue;
            }
            for h in g.subsets() {
                out.insert(h);
            }
        }
        out.into_iter().collect()
    }

    /// Whether `sub` equals the restriction of `self` to the vertices of `sub`.
    pub fn is_induced_subcomplex(&self, sub: &PureComplex) -> bool {
        self.is_induced_on(sub, &sub.vertex_set())
    }

    /// Whether the face set of `sub` equals the restriction of `self` to `w`.
    pub fn is_induced_on(&self, sub: &PureComplex, w: &FacetSet) -> bool {
        let mut mine: Vec<FacetSet> = sub.faces().into_iter().collect();
        mine.sort_unstable();
        mine == self.restriction(w)
    }

    /// Number of facets containing each ridge.
    pub fn ridge_degrees(&self) -> HashMap<FacetSet, u32> {
        let mut deg = HashMap::with_capacity(self.facets.len() * self.d);
        for f in &self.facets {
            for r in f.ridges() {
                *deg.entry(r).or_insert(0) += 1;
            }
        }
        deg
    }

    /// The smallest ridge lying in three or more facets, if any.
    pub fn pseudomanifold_witness(&self) -> Option<FacetSet> {
        self.ridge_degrees().into_iter().filter(|(_, k)| *k > 2).map(|(r, _)| r).min()
    }

    pub fn is_pseudomanifold(&self) -> bool {
        self.ridge_degrees().values().all(|&k| k <= 2)
    }

    /// Every ridge in exactly two facets.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.ridge_degrees().values().all(|&k| k == 2)
    }

    /// The complex generated by ridges that lie in exactly one facet.
    pub fn boundary(&self) -> Result<PureComplex> {
        let deg = self.ridge_degrees();
        if let Some(r) = deg.iter().filter(|(_, k)| **k > 2).map(|(r, _)| r).min() {
            return Err(Error::NotAPseudomanifold(r.clone()));
        }
        let facets: BTreeSet<FacetSet> =
            deg.into_iter().filter(|(_, k)| *k == 1).map(|(r, _)| r).collect();
        Ok(Self::from_parts(self.n, self.d.saturating_sub(1), facets))
    }

    /// Reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum()
    }

    /// Checks that every face link (the empty face included) has the reduced
    /// Euler characteristic of a sphere of the matching dimension.
    pub fn is_eulerian(&self) -> bool {
        self.eulerian_witness().is_none()
    }

    /// A face whose link has the wrong reduced Euler characteristic.
    pub fn eulerian_witness(&self) -> Option<FacetSet> {
        if self.facets.is_empty() {
            return Some(FacetSet::empty());
        }
        // chi~(lk F) = sum over faces H >= F of (-1)^(|H|-|F|-1)
        let faces = self.faces();
        let mut chi: HashMap<FacetSet, i64> = HashMap::with_capacity(faces.len());
        for h in &faces {
            for f in h.subsets() {
                let sign = if (h.len() - f.len()) % 2 == 1 { 1 } else { -1 };
                *chi.entry(f).or_insert(0) += sign;
            }
        }
        let mut bad: Vec<FacetSet> = chi
            .into_iter()
            .filter(|(f, x)| {
                let expect = if (self.d - f.len()) % 2 == 1 { 1 } else { -1 };
                *x != expect
            })
            .map(|(f, _)| f)
            .collect();
        bad.sort_unstable();
        bad.into_iter().next()
    }

    /// `b` disjoint copies; copy `j` (0-based) has its labels shifted by `j * n`.
    pub fn disjoint_union(&self, b: u32) -> Result<PureComplex> {
        if b == 0 {
            return Err(bad("disjoint union needs at least one copy"));
        }
        let mut facets = BTreeSet::new();
        for j in 0..b {
            let off = (j * self.n) as i64;
            for f in &self.facets {
                facets.insert(f.shifted(off).expect("non-negative shift"));
            }
        }
        Ok(Self::from_parts(self.n * b, self.d, facets))
    }

    pub fn relabel_shift(&self, i: i64) -> Result<PureComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| f.shifted(i).ok_or(Error::LabelUnderflow(i)))
            .collect::<Result<BTreeSet<_>>>()?;
        let n = (self.n as i64 + i).max(0) as Label;
        Ok(Self::from_parts(n, self.d, facets))
    }

    /// Applies an arbitrary injective relabeling.
    pub fn relabel(&self, map: impl Fn(Label) -> Label) -> PureComplex {
        let facets: BTreeSet<FacetSet> =
            self.facets.iter().map(|f| FacetSet::new(f.iter().map(&map))).collect();
        let n = facets.iter().filter_map(FacetSet::max_label).max().unwrap_or(0).max(self.n);
        Self::from_parts(n, self.d, facets)
    }

    /// `self \ other`: the facets of `self` that are not facets of `other`.
    pub fn facet_difference(&self, other: &PureComplex) -> PureComplex {
        let facets: Vec<FacetSet> =
            self.facets.iter().filter(|f| !other.contains_facet(f)).cloned().collect();
        PureComplex { n: self.n, d: self.d, facets }
    }

    /// Union of facet sets; both complexes must have the same facet size.
    pub fn facet_union(&self, other: &PureComplex) -> Result<PureComplex> {
        if !self.facets.is_empty() && !other.facets.is_empty() && self.d != other.d {
            return Err(Error::NonUniform { expected: self.d, found: other.d });
        }
        let d = if self.facets.is_empty() { other.d } else { self.d };
        let facets: BTreeSet<FacetSet> = self.facets.iter().chain(&other.facets).cloned().collect();
        Ok(Self::from_parts(self.n.max(other.n), d, facets))
    }

    /// Whether every facet of `sub` is a facet of `self`.
    pub fn contains_facets_of(&self, sub: &PureComplex) -> bool {
        sub.d == self.d && sub.facets.iter().all(|f| self.contains_facet(f))
    }

    /// Re-validates this complex strictly (no unused labels in `[1, n]`).
    pub fn validate_strict(&self) -> Result<()> {
        Self::build(self.n, self.facets.iter().cloned(), Validation::Strict).map(|_| ())
    }
}
