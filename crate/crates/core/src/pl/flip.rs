//! Bistellar flips: swapping `A̅ * ∂B̅` for `∂A̅ * B̅`.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::facet::FacetSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlipSpec {
    pub a: FacetSet,
    pub b: FacetSet,
}

impl FlipSpec {
    pub fn new(a: FacetSet, b: FacetSet) -> Self {
        FlipSpec { a, b }
    }

    /// The reverse flip.
    pub fn inverse(&self) -> FlipSpec {
        FlipSpec { a: self.b.clone(), b: self.a.clone() }
    }

    /// Facets of `A̅ * ∂B̅`, the ones a flip removes.
    pub fn removed_facets(&self) -> Vec<FacetSet> {
        self.b.iter().map(|v| self.a.union(&self.b.without(v))).collect()
    }

    /// Facets of `∂A̅ * B̅`, the ones a flip adds.
    pub fn added_facets(&self) -> Vec<FacetSet> {
        self.a.iter().map(|v| self.a.without(v).union(&self.b)).collect()
    }

    fn check_shape(&self, c: &PureComplex) -> Result<()> {
        if self.a.is_empty() || self.b.is_empty() {
            return Err(Error::NotAFaceConfiguration("A and B must be nonempty".into()));
        }
        if !self.a.is_disjoint(&self.b) {
            return Err(Error::NotAFaceConfiguration(format!("{} and {} overlap", self.a, self.b)));
        }
        if self.a.len() + self.b.len() != c.d() + 1 {
            return Err(Error::NotAFaceConfiguration(format!(
                "|A| + |B| = {} but facets have {} vertices",
                self.a.len() + self.b.len(),
                c.d()
            )));
        }
        Ok(())
    }
}

/// Checks that `c` restricted to `A ∪ B` is exactly `A̅ * ∂B̅` (a subset of
/// `A ∪ B` is a face iff it misses some vertex of `B`), and that the star
/// of `A` is `A̅ * ∂B̅`.
pub fn check_flip(c: &PureComplex, spec: &FlipSpec) -> Result<()> {
    spec.check_shape(c)?;
    let ab = spec.a.union(&spec.b);
    let expected: BTreeSet<FacetSet> = ab.subsets().filter(|s| !spec.b.is_subset(s)).collect();
    let actual: BTreeSet<FacetSet> = c.restriction(&ab).into_iter().collect();
    if actual != expected {
        let witness = actual
            .symmetric_difference(&expected)
            .next()
            .map(|f| f.to_string())
            .unwrap_or_default();
        return Err(Error::FlipPreconditionFailed(format!(
            "restriction to {ab} differs from A*dB at {witness}"
        )));
    }
    let star: BTreeSet<FacetSet> =
        c.facets().iter().filter(|f| spec.a.is_subset(f)).cloned().collect();
    let want: BTreeSet<FacetSet> = spec.removed_facets().into_iter().collect();
    if star != want {
        return Err(Error::FlipPreconditionFailed(format!("star of {} is not A*dB", spec.a)));
    }
    Ok(())
}

/// Applies one validated flip.
pub fn bistellar_flip(c: &PureComplex, spec: &FlipSpec) -> Result<PureComplex> {
    bistellar_flips(c, std::slice::from_ref(spec))
}

/// Applies several flips at once. Each is validated against `c` itself, and
/// the stars being replaced must not share a facet.
pub fn bistellar_flips(c: &PureComplex, specs: &[FlipSpec]) -> Result<PureComplex> {
    let mut removed: HashSet<FacetSet> = HashSet::new();
    let mut added: BTreeSet<FacetSet> = BTreeSet::new();
    for spec in specs {
        check_flip(c, spec)?;
        for f in spec.removed_facets() {
            if !removed.insert(f.clone()) {
                return Err(Error::FlipPreconditionFailed(format!("stars share the facet {f}")));
            }
        }
        added.extend(spec.added_facets());
    }
    let mut facets: BTreeSet<FacetSet> =
        c.facets().iter().filter(|f| !removed.contains(*f)).cloned().collect();
    for f in added {
        if !facets.insert(f.clone()) {
            return Err(Error::FlipPreconditionFailed(format!("added facet {f} already present")));
        }
    }
    Ok(PureComplex::from_parts(c.n(), c.d(), facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;

    fn stacked() -> PureComplex {
        PureComplex::from_facets(
            5,
            [
                fs(&[1, 2, 3]),
                fs(&[1, 2, 4]),
                fs(&[1, 3, 4]),
                fs(&[2, 3, 5]),
                fs(&[2, 4, 5]),
                fs(&[3, 4, 5]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn removes_stacked_vertex() {
        let out = bistellar_flip(&stacked(), &FlipSpec::new(fs(&[1]), fs(&[2, 3, 4]))).unwrap();
        assert_eq!(out, PureComplex::simplex_boundary(&fs(&[2, 3, 4, 5])));
    }

    #[test]
    fn flip_then_inverse_restores() {
        let spec = FlipSpec::new(fs(&[1]), fs(&[2, 3, 4]));
        let c = stacked();
        let out = bistellar_flip(&c, &spec).unwrap();
        let back = bistellar_flip(&out, &spec.inverse()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn edge_of_tetrahedron_is_rejected() {
        let t = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        let err = bistellar_flip(&t, &FlipSpec::new(fs(&[1, 2]), fs(&[3, 4]))).unwrap_err();
        assert!(matches!(err, Error::FlipPreconditionFailed(_)));
    }

    #[test]
    fn bad_shapes() {
        let t = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        for (a, b) in [(fs(&[1]), fs(&[1, 2, 3])), (fs(&[1]), fs(&[2, 3])), (fs(&[]), fs(&[1, 2, 3, 4]))] {
            let err = bistellar_flip(&t, &FlipSpec::new(a, b)).unwrap_err();
            assert!(matches!(err, Error::NotAFaceConfiguration(_)));
        }
    }
}
