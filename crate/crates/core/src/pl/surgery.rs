//! Ball replacement, sewing a new vertex, and star-difference regions.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::facet::{FacetSet, Label};

/// How [`replace_ball`] makes sure the new ball does not collide with the
/// rest of the complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum ReplaceGuard {
    /// The old ball must be an induced subcomplex of the host.
    #[default]
    Induced,
    /// No interior face of the new ball may be a face of the untouched part.
    /// Needed when the old ball spans the whole vertex set, where it is never
    /// induced in a sphere.
    InteriorDisjoint,
}

fn guard_failed(msg: impl Into<String>) -> Error {
    Error::ReplacementGuardFailed(msg.into())
}

/// Replaces the facets of `old` by those of `new`.
pub fn replace_ball(
    c: &PureComplex,
    old: &PureComplex,
    new: &PureComplex,
    guard: ReplaceGuard,
) -> Result<PureComplex> {
    if old.d() != c.d() || new.d() != c.d() {
        return Err(guard_failed("balls and host have different dimensions"));
    }
    if let Some(f) = old.facets().iter().find(|f| !c.contains_facet(f)) {
        return Err(guard_failed(format!("{f} is not a facet of the host")));
    }
    let boundary_old = old.boundary().map_err(|e| guard_failed(format!("old ball: {e}")))?;
    let boundary_new = new.boundary().map_err(|e| guard_failed(format!("new ball: {e}")))?;
    if boundary_old.facets() != boundary_new.facets() {
        return Err(Error::BoundaryMismatch);
    }
    let v_old = old.vertex_set();
    let v_new = new.vertex_set();
    if v_new != v_old && v_new.intersection(&c.vertex_set()) != boundary_new.vertex_set() {
        return Err(guard_failed("new ball reuses interior labels of the host"));
    }
    let rest = c.facet_difference(old);
    match guard {
        ReplaceGuard::Induced => {
            if !c.is_induced_subcomplex(old) {
                return Err(guard_failed("old ball is not an induced subcomplex"));
            }
        }
        ReplaceGuard::InteriorDisjoint => {
            let rest_faces = rest.faces();
            let on_boundary = boundary_new.faces();
            if let Some(f) = new
                .faces()
                .into_iter()
                .filter(|f| !on_boundary.contains(f) && rest_faces.contains(f))
                .min()
            {
                return Err(guard_failed(format!("interior face {f} of the new ball is already used")));
            }
        }
    }
    let mut facets: BTreeSet<FacetSet> = rest.facets().iter().cloned().collect();
    for f in new.facets() {
        if !facets.insert(f.clone()) {
            return Err(guard_failed(format!("new facet {f} already in the host")));
        }
    }
    Ok(PureComplex::from_parts(c.n().max(new.n()), c.d(), facets))
}

/// Replaces the ball `k` inside `c` by the cone from a fresh vertex `v` over `∂k`.
pub fn sew_vertex(c: &PureComplex, k: &PureComplex, v: Label) -> Result<PureComplex> {
    if let Some(f) = k.facets().iter().find(|f| !c.contains_facet(f)) {
        return Err(Error::NotASubcomplex(format!("{f}")));
    }
    if v == 0 || c.vertex_set().contains(v) {
        return Err(Error::StaleLabel(v));
    }
    let boundary = k.boundary().map_err(|e| Error::BoundaryUndefined(e.to_string()))?;
    if boundary.is_empty() {
        return Err(Error::BoundaryUndefined("the region has empty boundary".into()));
    }
    let mut facets: BTreeSet<FacetSet> = c.facet_difference(k).facets().iter().cloned().collect();
    facets.extend(boundary.facets().iter().map(|r| r.with(v)));
    Ok(PureComplex::from_parts(c.n().max(v), c.d(), facets))
}

/// A strictly increasing chain of faces `F_1 ⊊ F_2 ⊊ ... ⊊ F_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlagSpec(Vec<FacetSet>);

impl FlagSpec {
    pub fn new(flags: Vec<FacetSet>) -> Result<Self> {
        if flags.is_empty() {
            return Err(Error::BadParams("a flag needs at least one face".into()));
        }
        if let Some(w) = flags.windows(2).find(|w| !(w[0].is_subset(&w[1]) && w[0].len() < w[1].len())) {
            return Err(Error::BadParams(format!("{} is not strictly inside {}", w[0], w[1])));
        }
        Ok(FlagSpec(flags))
    }

    /// The chain `{top}, {top-1, top}, ...` of the last `len` labels, for
    /// sizes `first..=last`.
    pub fn top_labels(top: Label, first: usize, last: usize) -> Result<Self> {
        Self::new(
            (first..=last)
                .map(|j| if j == 0 { FacetSet::empty() } else { FacetSet::interval(top + 1 - j as Label, top) })
                .collect(),
        )
    }

    pub fn faces(&self) -> &[FacetSet] {
        &self.0
    }
}

/// `st(F_1) \ (st(F_2) \ ( ... \ st(F_l)))`, stars taken in `c`, differences facet-wise.
pub fn flag_region(c: &PureComplex, flags: &FlagSpec) -> Result<PureComplex> {
    let mut region: Option<HashSet<FacetSet>> = None;
    for f in flags.faces().iter().rev() {
        let star = c.star(f)?;
        let star: HashSet<FacetSet> = star.facets().iter().cloned().collect();
        region = Some(match region {
            None => star,
            Some(inner) => star.difference(&inner).cloned().collect(),
        });
    }
    let facets: BTreeSet<FacetSet> = region.unwrap_or_default().into_iter().collect();
    Ok(PureComplex::from_parts(c.n(), c.d(), facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;

    #[test]
    fn single_flag_is_a_star() {
        let t = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        let r = flag_region(&t, &FlagSpec::new(vec![fs(&[1])]).unwrap()).unwrap();
        assert_eq!(r, t.star(&fs(&[1])).unwrap());
    }

    #[test]
    fn flags_must_increase() {
        assert!(FlagSpec::new(vec![fs(&[1, 2]), fs(&[1, 2])]).is_err());
        assert!(FlagSpec::new(vec![fs(&[1, 2]), fs(&[1, 3, 4])]).is_err());
        assert_eq!(FlagSpec::top_labels(8, 0, 2).unwrap().faces(), &[fs(&[]), fs(&[8]), fs(&[7, 8])]);
    }

    #[test]
    fn sewing_onto_a_facet_stacks() {
        let t = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        let k = PureComplex::simplex(&fs(&[1, 2, 3]));
        let s = sew_vertex(&t, &k, 5).unwrap();
        assert_eq!(s.num_facets(), 6);
        assert!(s.is_closed_pseudomanifold());
        assert!(matches!(sew_vertex(&t, &k, 4), Err(Error::StaleLabel(4))));
    }

    #[test]
    fn replacing_non_induced_ball_trips_guard() {
        // Two triangles of the tetrahedron boundary; the restriction to their
        // vertex set holds all four.
        let t = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        let old = PureComplex::from_facets(4, [fs(&[1, 2, 3]), fs(&[1, 3, 4])]).unwrap();
        let new = PureComplex::from_facets(4, [fs(&[1, 2, 4]), fs(&[2, 3, 4])]).unwrap();
        let err = replace_ball(&t, &old, &new, ReplaceGuard::Induced).unwrap_err();
        assert!(matches!(err, Error::ReplacementGuardFailed(_)));
    }
}
