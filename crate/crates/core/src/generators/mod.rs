//! Constructions of every complex family the toolkit knows about.

pub mod canonical;
pub mod cyclic;
pub mod families;
pub mod siblings;
pub mod spheres;

use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{bad, Result};
use crate::facet::Label;

pub use canonical::{canonical_ball, facet_checksum, CanonicalBall};
pub use cyclic::{ball_b, cyclic_boundary, is_gale_facet};
pub use families::{family_f, family_h, gamma_j, h_intervals, uncovered_labels, CompositionJ};
pub use siblings::{ball_k, d_composition, facets_of_d_direct, sphere_d};
pub use spheres::{
    flip_target_complex, gamma_nk, gamma_nk_sequence, gamma_nk_sites, retriangulated_sphere,
    FlipTargetVariant, RetriangulationVariant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic,
    BBall,
    FFamily,
    HFamily,
    GammaJ,
    DSphere,
    KBall,
    L7,
    L8,
    L11,
    Lambda,
    Pi,
    Lambda7,
    FlipTarget,
    GammaNk,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::Cyclic,
        Family::BBall,
        Family::FFamily,
        Family::HFamily,
        Family::GammaJ,
        Family::DSphere,
        Family::KBall,
        Family::L7,
        Family::L8,
        Family::L11,
        Family::Lambda,
        Family::Pi,
        Family::Lambda7,
        Family::FlipTarget,
        Family::GammaNk,
    ];

    /// Short tag used in file headers and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::BBall => "B",
            Family::FFamily => "F",
            Family::HFamily => "H",
            Family::GammaJ => "gammaJ",
            Family::DSphere => "D",
            Family::KBall => "K",
            Family::L7 => "L7",
            Family::L8 => "L8",
            Family::L11 => "L11",
            Family::Lambda => "lambda",
            Family::Pi => "pi",
            Family::Lambda7 => "lambda7",
            Family::FlipTarget => "flip-target",
            Family::GammaNk => "gamma-nk",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag().eq_ignore_ascii_case(tag))
    }

    /// Whether every output is a PL sphere by construction: it comes from a
    /// simplex boundary through validated flips, sewings or ball replacements.
    pub fn is_pl_sphere_by_construction(self) -> bool {
        matches!(
            self,
            Family::Cyclic | Family::DSphere | Family::Lambda | Family::Pi | Family::Lambda7 | Family::GammaNk
        )
    }
}

/// A family together with its parameters. Unused parameters stay `None`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Option<Family>,
    pub n: Option<Label>,
    pub d: Option<usize>,
    pub dim: Option<usize>,
    pub s: Option<u32>,
    pub a: Option<u32>,
    pub b: Option<Label>,
    pub k: Option<u32>,
    pub j: Option<CompositionJ>,
    pub variant: Option<String>,
}

fn need<T: Copy>(v: Option<T>, name: &str, fam: Family) -> Result<T> {
    v.ok_or_else(|| bad(format!("{} needs --{name}", fam.tag())))
}

impl ConstructionSpec {
    pub fn new(family: Family) -> Self {
        ConstructionSpec { family: Some(family), ..Default::default() }
    }

    pub fn family(&self) -> Result<Family> {
        self.family.ok_or_else(|| bad("no family given"))
    }

    /// Builds the complex. `B` uses `[a, b]` with `a` defaulting to 1 and `b`
    /// to `n`; `H` uses `--d` for the facet size `2k` unless `--k` is given.
    pub fn build(&self) -> Result<PureComplex> {
        let fam = self.family()?;
        match fam {
            Family::Cyclic => cyclic_boundary(need(self.n, "n", fam)?, need(self.d, "d", fam)?),
            Family::BBall => {
                let b = self.b.or(self.n).ok_or_else(|| bad("B needs --n or --b"))?;
                let a = self.a.unwrap_or(1);
                let dim = self.dim.or(self.d.map(|d| d.saturating_sub(1)));
                let dim = dim.ok_or_else(|| bad("B needs --dim"))?;
                ball_b(a, b, dim as i64)
            }
            Family::FFamily => family_f(need(self.n, "n", fam)?, need(self.d, "d", fam)?, need(self.s, "s", fam)?),
            Family::HFamily => {
                let k = match (self.k, self.d) {
                    (Some(k), _) => k as usize,
                    (None, Some(d)) if d % 2 == 0 => d / 2,
                    _ => return Err(bad("H needs --k, or an even --d")),
                };
                family_h(need(self.n, "n", fam)?, need(self.a, "a", fam)?, need(self.s, "s", fam)?, k)
            }
            Family::GammaJ => {
                let j = self.j.clone().ok_or_else(|| bad("gammaJ needs --J"))?;
                gamma_j(need(self.n, "n", fam)?, &j)
            }
            Family::DSphere => sphere_d(need(self.n, "n", fam)?, self.dimension(fam)?),
            Family::KBall => ball_k(need(self.n, "n", fam)?, self.dimension(fam)?),
            Family::L7 => Ok(CanonicalBall::L7.complex()),
            Family::L8 => Ok(CanonicalBall::L8.complex()),
            Family::L11 => Ok(CanonicalBall::L11.complex()),
            Family::Lambda => retriangulated_sphere(RetriangulationVariant::Lambda, need(self.n, "n", fam)?),
            Family::Pi => retriangulated_sphere(RetriangulationVariant::Pi, need(self.n, "n", fam)?),
            Family::Lambda7 => retriangulated_sphere(RetriangulationVariant::Lambda7, need(self.n, "n", fam)?),
            Family::FlipTarget => {
                let variant = match self.variant.as_deref() {
                    None | Some("even4k") => FlipTargetVariant::Even4k,
                    Some("odd4kminus1") => FlipTargetVariant::Odd4kMinus1,
                    Some(v) => return Err(bad(format!("unknown flip-target variant {v:?}"))),
                };
                flip_target_complex(need(self.n, "n", fam)?, need(self.k, "k", fam)?, variant)
            }
            Family::GammaNk => gamma_nk(need(self.n, "n", fam)?, need(self.k, "k", fam)?),
        }
    }

    fn dimension(&self, fam: Family) -> Result<usize> {
        self.dim
            .or(self.d.map(|d| d.saturating_sub(1)))
            .ok_or_else(|| bad(format!("{} needs --dim", fam.tag())))
    }

    /// A compact parameter summary such as `n=8 d=4`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(v) = self.n {
            parts.push(format!("n={v}"));
        }
        if let Some(v) = self.d {
            parts.push(format!("d={v}"));
        }
        if let Some(v) = self.dim {
            parts.push(format!("dim={v}"));
        }
        if let Some(v) = self.s {
            parts.push(format!("s={v}"));
        }
        if let Some(v) = self.a {
            parts.push(format!("a={v}"));
        }
        if let Some(v) = self.b {
            parts.push(format!("b={v}"));
        }
        if let Some(v) = self.k {
            parts.push(format!("k={v}"));
        }
        if let Some(j) = &self.j {
            let s: Vec<String> = j.parts().iter().map(|x| x.to_string()).collect();
            parts.push(format!("J={}", s.join(",")));
        }
        if let Some(v) = &self.variant {
            parts.push(format!("variant={v}"));
        }
        parts.join(" ")
    }
}
