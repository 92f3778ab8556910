//! The sibling spheres `D(n, d-1)` and their sewing balls `K(n, d-1)`.

use std::collections::BTreeSet;

use crate::complex::PureComplex;
use crate::error::{bad, Result};
use crate::facet::{FacetSet, Label};
use crate::generators::cyclic::ball_b_facets;
use crate::generators::families::{gamma_j, CompositionJ};

/// The composition whose ball bounds `D(n, dim)`: `(2,...,2,3)` when
/// `dim + 1` is even, `(2,...,2,4)` when it is odd.
pub fn d_composition(dim: usize) -> Result<CompositionJ> {
    if dim < 3 {
        return Err(bad(format!("D(n,{dim}) needs dimension >= 3")));
    }
    let d = dim + 1;
    if d % 2 == 0 {
        CompositionJ::twos_then((d - 2) / 2, 3)
    } else {
        CompositionJ::twos_then((d - 3) / 2, 4)
    }
}

/// `D(n, dim)` as the boundary of `Γ^J_n`.
pub fn sphere_d(n: Label, dim: usize) -> Result<PureComplex> {
    let j = d_composition(dim)?;
    if (n as usize) < dim + 2 {
        return Err(bad(format!("D({n},{dim}) needs n >= {}", dim + 2)));
    }
    let ball = gamma_j(n, &j)?;
    let sphere = ball.boundary()?;
    Ok(sphere.with_label_bound(n))
}

/// `D(n, dim)` enumerated from its facet templates, without any boundary
/// computation.
pub fn facets_of_d_direct(n: Label, dim: usize) -> Result<PureComplex> {
    if dim < 3 {
        return Err(bad(format!("D(n,{dim}) needs dimension >= 3")));
    }
    let (n_i, mut out) = (n as i64, BTreeSet::new());
    let add = |out: &mut BTreeSet<FacetSet>, taus: Vec<FacetSet>, tail: &[i64]| {
        let tail = FacetSet::new(tail.iter().map(|&v| v as Label));
        for t in taus {
            out.insert(t.union(&tail));
        }
    };
    if dim % 2 == 1 {
        let k = ((dim + 1) / 2) as i64;
        if n_i < 2 * k + 1 {
            return Err(bad(format!("D({n},{dim}) needs n >= {}", 2 * k + 1)));
        }
        for l in 1..=n_i - 2 {
            add(&mut out, ball_b_facets(1, l - 1, 2 * k - 3), &[l, l + 2]);
        }
        add(&mut out, ball_b_facets(1, n_i - 2, 2 * k - 3), &[n_i - 1, n_i]);
        for l in 2..=n_i - 2 {
            add(&mut out, ball_b_facets(2, l - 1, 2 * k - 5), &[1, l, l + 1, l + 2]);
        }
    } else {
        let k = (dim / 2) as i64;
        if n_i < 2 * k + 2 {
            return Err(bad(format!("D({n},{dim}) needs n >= {}", 2 * k + 2)));
        }
        for l in 1..=n_i - 3 {
            add(&mut out, ball_b_facets(1, l - 1, 2 * k - 3), &[l, l + 1, l + 3]);
            add(&mut out, ball_b_facets(1, l - 1, 2 * k - 3), &[l, l + 2, l + 3]);
        }
        add(&mut out, ball_b_facets(1, n_i - 3, 2 * k - 3), &[n_i - 2, n_i - 1, n_i]);
        for l in 2..=n_i - 3 {
            add(&mut out, ball_b_facets(2, l - 1, 2 * k - 5), &[1, l, l + 1, l + 2, l + 3]);
        }
    }
    Ok(PureComplex::from_parts(n, dim + 1, out))
}

/// The sewing ball `K(n, dim)`: the simplex on the top two (even `dim + 1`)
/// or top three (odd `dim + 1`) labels joined with an interval-pair ball.
pub fn ball_k(n: Label, dim: usize) -> Result<PureComplex> {
    if dim < 3 || (n as usize) < dim + 2 {
        return Err(bad(format!("K({n},{dim}) needs dimension >= 3 and n > {}", dim + 1)));
    }
    let d = dim + 1;
    let (top, rest) = if d % 2 == 0 { (2, d - 2) } else { (3, d - 3) };
    let apex = FacetSet::interval(n - top + 1, n);
    let base = ball_b_facets(1, (n - top) as i64, rest as i64 - 1);
    let facets: BTreeSet<FacetSet> = base.into_iter().map(|t| t.union(&apex)).collect();
    if facets.is_empty() {
        return Err(bad(format!("K({n},{dim}) has no facets")));
    }
    Ok(PureComplex::from_parts(n, d, facets))
}
