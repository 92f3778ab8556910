//! Pure simplicial complexes, the cyclic-polytope relatives built from
//! interval patterns, PL surgery on spheres, and exact transversal numbers.

pub mod complex;
pub mod error;
pub mod experiment;
pub mod facet;
pub mod generators;
pub mod io;
pub mod iso;
pub mod pl;
pub mod solver;

pub use complex::{FVector, PureComplex, Validation};
pub use error::{Error, Result};
pub use facet::{fs, FacetSet, Label};
pub use io::{parse_complex, serialize_complex, ComplexFile};
pub use iso::{are_isomorphic, is_isomorphism};
pub use solver::{
    bound_formulas, exact_transversal, greedy_transversal, independence_number, verify_transversal, BoundReport,
    SolveBudget, Transversal,
};
