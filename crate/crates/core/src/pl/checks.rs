//! Shellings, neighborliness and stackedness.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::facet::FacetSet;

/// Whether `order` is a shelling of `c`: each facet after the first meets the
/// union of the earlier ones in a nonempty union of its own ridges.
pub fn verify_shelling(c: &PureComplex, order: &[FacetSet]) -> Result<bool> {
    Ok(shelling_failure(c, order)?.is_none())
}

/// Position (0-based) of the first facet where the shelling condition fails.
pub fn shelling_failure(c: &PureComplex, order: &[FacetSet]) -> Result<Option<usize>> {
    let given: BTreeSet<&FacetSet> = order.iter().collect();
    if given.len() != order.len() {
        return Err(Error::NotAPermutation("a facet is repeated".into()));
    }
    if order.len() != c.num_facets() || order.iter().any(|f| !c.contains_facet(f)) {
        return Err(Error::NotAPermutation("order and facet list differ".into()));
    }
    for j in 1..order.len() {
        let f = &order[j];
        let earlier = &order[..j];
        let ridges: Vec<FacetSet> = f
            .ridges()
            .filter(|r| earlier.iter().any(|g| r.is_subset(g)))
            .collect();
        if ridges.is_empty() {
            return Ok(Some(j));
        }
        let pure = earlier.iter().all(|g| {
            let meet = f.intersection(g);
            ridges.iter().any(|r| meet.is_subset(r))
        });
        if !pure {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Whether every `m`-subset of the vertex set is a face.
pub fn is_neighborly(c: &PureComplex, m: usize) -> bool {
    neighborly_witness(c, m).is_none()
}

/// The lexicographically first `m`-subset of the vertices that is not a face.
pub fn neighborly_witness(c: &PureComplex, m: usize) -> Option<FacetSet> {
    if m > c.d() {
        return Some(FacetSet::empty());
    }
    let faces: HashSet<FacetSet> = c
        .facets()
        .iter()
        .flat_map(|f| f.subsets().filter(|s| s.len() == m).collect::<Vec<_>>())
        .collect();
    let verts = c.vertices();
    verts.into_iter().combinations(m).map(FacetSet::new).find(|s| !faces.contains(s))
}

/// Whether every face off the boundary has dimension at least `dim - m`.
pub fn is_stacked(c: &PureComplex, m: usize) -> Result<bool> {
    Ok(stacked_witness(c, m)?.is_none())
}

/// The smallest interior face of too low a dimension.
pub fn stacked_witness(c: &PureComplex, m: usize) -> Result<Option<FacetSet>> {
    let boundary = c.boundary().map_err(|e| Error::BoundaryUndefined(e.to_string()))?;
    let on_boundary = boundary.faces();
    let min_size = c.d().saturating_sub(m);
    Ok(c
        .faces()
        .into_iter()
        .filter(|f| f.len() < min_size && !on_boundary.contains(f))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b))))
}
