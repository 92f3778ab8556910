//! Spheres built by surgery on cyclic and sibling spheres, and the target
//! complexes those surgeries aim at.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::{PureComplex, Validation};
use crate::error::{bad, Result};
use crate::facet::{FacetSet, Label};
use crate::generators::canonical::CanonicalBall;
use crate::generators::cyclic::{ball_b, ball_b_facets, cyclic_boundary};
use crate::generators::siblings::sphere_d;
use crate::pl::{bistellar_flips, replace_ball, FlipSpec, ReplaceGuard};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RetriangulationVariant {
    /// `∂C(n,4)` with every `B([1,8],3) + 8m` replaced by `L8 + 8m`.
    Lambda,
    /// `∂C(n,6)` with every `B([1,11],5) + 11m` replaced by `L11 + 11m`.
    Pi,
    /// `∂C(n,4)` with every `B([1,7],3) + 7m` replaced by `L7 + 7m`.
    Lambda7,
}

impl RetriangulationVariant {
    pub fn ball(self) -> CanonicalBall {
        match self {
            RetriangulationVariant::Lambda => CanonicalBall::L8,
            RetriangulationVariant::Pi => CanonicalBall::L11,
            RetriangulationVariant::Lambda7 => CanonicalBall::L7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RetriangulationVariant::Lambda => "lambda",
            RetriangulationVariant::Pi => "pi",
            RetriangulationVariant::Lambda7 => "lambda7",
        }
    }
}

/// Replaces each shifted interval ball of the cyclic sphere by the matching
/// shifted canonical ball. A block covering every vertex cannot be induced,
/// so a single-block sphere is guarded by the interior-face test instead.
pub fn retriangulated_sphere(variant: RetriangulationVariant, n: Label) -> Result<PureComplex> {
    let ball = variant.ball();
    let p = ball.n();
    if n == 0 || n % p != 0 {
        return Err(bad(format!("{} needs n to be a positive multiple of {p}", variant.name())));
    }
    let dim = ball.dim();
    let mut c = cyclic_boundary(n, dim + 1)?;
    let old = ball_b(1, p, dim as i64)?;
    let new = ball.complex();
    let guard = if n == p { ReplaceGuard::InteriorDisjoint } else { ReplaceGuard::Induced };
    for m in 0..n / p {
        let shift = (m * p) as i64;
        c = replace_ball(&c, &old.relabel_shift(shift)?, &new.relabel_shift(shift)?, guard)?;
    }
    Ok(c.with_label_bound(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FlipTargetVariant {
    /// Blocks of `4k` labels, each gaining both its odd and its even diagonal.
    Even4k,
    /// Blocks of `4k - 1` labels, each gaining its odd diagonal.
    Odd4kMinus1,
}

/// The interval-pair ball on all blocks with each block's own facets
/// removed and its diagonal facets inserted.
pub fn flip_target_complex(n: u32, k: u32, variant: FlipTargetVariant) -> Result<PureComplex> {
    if k < 2 || n < 1 {
        return Err(bad("flip targets need k >= 2 and n >= 1"));
    }
    let p = match variant {
        FlipTargetVariant::Even4k => 4 * k,
        FlipTargetVariant::Odd4kMinus1 => 4 * k - 1,
    };
    let total = p * n;
    let d = 2 * k as i64 - 1;
    let block: BTreeSet<FacetSet> = ball_b_facets(1, p as i64, d).into_iter().collect();
    let mut facets = BTreeSet::new();
    for f in ball_b_facets(1, total as i64, d) {
        let lo = (f.min_label().expect("nonempty") - 1) / p;
        let inside_one_block = (f.max_label().expect("nonempty") - 1) / p == lo;
        if inside_one_block && block.contains(&f.shifted(-((lo * p) as i64)).expect("in range")) {
            continue;
        }
        facets.insert(f);
    }
    let odd: FacetSet = (0..2 * k).map(|j| 2 * j + 1).collect();
    let even: FacetSet = (1..=2 * k).map(|j| 2 * j).collect();
    for m in 0..n {
        let off = (m * p) as i64;
        facets.insert(odd.shifted(off).expect("positive"));
        if variant == FlipTargetVariant::Even4k {
            facets.insert(even.shifted(off).expect("positive"));
        }
    }
    PureComplex::build(total, facets, Validation::AllowGaps)
}

/// The flips taking `Γ_{n,k}` to `Γ_{n,k+1}`: for `k+2 <= i <= n-5`,
/// `A = {i-k, i+2, i+4}` and `B = {i-k-1, i+1, i+5}`.
pub fn gamma_nk_sites(n: Label, k: u32) -> Vec<FlipSpec> {
    let mut out = Vec::new();
    let mut i = k + 2;
    while i + 5 <= n {
        out.push(FlipSpec::new(
            FacetSet::from([i - k, i + 2, i + 4]),
            FacetSet::from([i - k - 1, i + 1, i + 5]),
        ));
        i += 1;
    }
    out
}

/// `Γ_{n,k}`: starting from `D(n,4)`, `k` rounds of simultaneous flips.
/// Every flip is validated against the current sphere before it is applied.
pub fn gamma_nk(n: Label, k: u32) -> Result<PureComplex> {
    gamma_nk_sequence(n, k).map(|mut v| v.pop().expect("at least Γ_{n,0}"))
}

/// `[Γ_{n,0}, Γ_{n,1}, ..., Γ_{n,k}]`.
pub fn gamma_nk_sequence(n: Label, k: u32) -> Result<Vec<PureComplex>> {
    if n < 6 || k + 6 > n {
        return Err(bad(format!("Γ_{{{n},{k}}} needs n >= 6 and 0 <= k <= n-6")));
    }
    let mut out = vec![sphere_d(n, 4)?];
    for step in 0..k {
        let sites = gamma_nk_sites(n, step);
        let next = bistellar_flips(out.last().expect("nonempty"), &sites)?;
        out.push(next);
    }
    Ok(out)
}
