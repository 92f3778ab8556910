//! Exact and greedy transversal numbers, independence numbers, and the
//! closed-form upper bounds.

mod bits;
mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{bad, Error, Result};
use crate::facet::{FacetSet, Label};
use bits::Bits;
use search::{run, Limits};

/// Resources granted to the exact search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveBudget {
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
    pub threads: usize,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget { node_limit: u64::MAX, time_limit: None, threads: 1 }
    }
}

impl SolveBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = nodes.max(1);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

/// A transversal with the bounds known for the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transversal {
    pub vertices: FacetSet,
    pub size: usize,
    pub optimal: bool,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// Search nodes visited (0 for heuristics).
    pub nodes: u64,
}

impl Transversal {
    /// Fails with `BudgetExhausted` unless the size is proven minimal.
    pub fn require_optimal(self) -> Result<Transversal> {
        if self.optimal {
            Ok(self)
        } else {
            Err(Error::BudgetExhausted { lower: self.lower_bound, upper: self.upper_bound })
        }
    }
}

/// Whether `t` meets every facet of `c`.
pub fn verify_transversal(c: &PureComplex, t: &FacetSet) -> bool {
    c.facets().iter().all(|f| !f.is_disjoint(t))
}

/// The facet whose vertices all avoid `t`, if any.
pub fn missed_facet<'a>(c: &'a PureComplex, t: &FacetSet) -> Option<&'a FacetSet> {
    c.facets().iter().find(|f| f.is_disjoint(t))
}

fn check_hittable(c: &PureComplex) -> Result<()> {
    if c.facets().iter().any(|f| f.is_empty()) {
        return Err(bad("the empty facet cannot be hit"));
    }
    Ok(())
}

/// Repeatedly takes the vertex lying in the most remaining facets (ties go
/// to the smallest label) and drops the facets it hits.
pub fn greedy_transversal(c: &PureComplex) -> Result<Transversal> {
    check_hittable(c)?;
    let n = c.n() as usize;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, f) in c.facets().iter().enumerate() {
        for v in f.iter() {
            incident[v as usize].push(i);
        }
    }
    let mut degree: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut alive = vec![true; c.num_facets()];
    let mut remaining = c.num_facets();
    let mut picked = Vec::new();
    while remaining > 0 {
        let v = (1..=n).max_by(|&a, &b| degree[a].cmp(&degree[b]).then(b.cmp(&a))).expect("n >= 1");
        picked.push(v as Label);
        for &i in &incident[v] {
            if alive[i] {
                alive[i] = false;
                remaining -= 1;
                for u in c.facets()[i].iter() {
                    degree[u as usize] -= 1;
                }
            }
        }
    }
    let vertices = FacetSet::new(picked);
    let size = vertices.len();
    let lower = packing_lower_bound(c);
    Ok(Transversal { vertices, size, optimal: lower == size, lower_bound: lower, upper_bound: size, nodes: 0 })
}

/// Size of a greedy family of pairwise disjoint facets (smallest facets
/// first, then lexicographic), a lower bound for any transversal.
pub fn packing_lower_bound(c: &PureComplex) -> usize {
    let mut used = FacetSet::empty();
    let mut count = 0;
    for f in c.facets() {
        if f.is_disjoint(&used) {
            used = used.union(f);
            count += 1;
        }
    }
    count
}

/// Minimum transversal by branch and bound. When the budget runs out the
/// result carries `optimal = false` with the best bounds found.
///
/// The returned certificate is the first minimum transversal in the
/// search's depth-first order, independent of the thread count.
pub fn exact_transversal(c: &PureComplex, budget: SolveBudget) -> Result<Transversal> {
    check_hittable(c)?;
    let n = c.n() as usize;
    match n {
        0..=64 => exact_w::<1>(c, budget),
        65..=128 => exact_w::<2>(c, budget),
        129..=256 => exact_w::<4>(c, budget),
        257..=512 => exact_w::<8>(c, budget),
        513..=1024 => exact_w::<16>(c, budget),
        _ => Err(bad(format!("exact search supports up to 1024 labels, got {n}"))),
    }
}

fn exact_w<const W: usize>(c: &PureComplex, budget: SolveBudget) -> Result<Transversal> {
    if c.is_empty() {
        return Ok(Transversal {
            vertices: FacetSet::empty(),
            size: 0,
            optimal: true,
            lower_bound: 0,
            upper_bound: 0,
            nodes: 0,
        });
    }
    let start = Instant::now();
    let limits = Limits { node_limit: budget.node_limit, deadline: budget.time_limit.map(|t| start + t) };
    let facets: Vec<Bits<W>> = c.facets().iter().map(Bits::from_facet).collect();
    let greedy = greedy_transversal(c)?;
    let threads = budget.threads.max(1);

    let outcome = in_pool(threads, || run(&facets, greedy.size, threads, &limits, false));
    let mut nodes = outcome.nodes;
    let lower = outcome.root_lower.max(greedy.lower_bound);
    let (size, set) = match outcome.best {
        Some((s, b)) => (s, b.to_facet()),
        None => (greedy.size, greedy.vertices.clone()),
    };
    if !outcome.complete {
        return Ok(Transversal {
            vertices: set,
            size,
            optimal: false,
            lower_bound: lower.min(size),
            upper_bound: size,
            nodes,
        });
    }
    // A single-threaded search that improved on the greedy set already
    // returns the first minimum in depth-first order. Otherwise look it up.
    let certificate = if threads == 1 && outcome.best.is_some() {
        set
    } else {
        let canonical = run(&facets, size + 1, 1, &Limits { node_limit: u64::MAX, deadline: None }, true);
        nodes += canonical.nodes;
        canonical.best.map(|(_, b)| b.to_facet()).expect("a minimum transversal exists")
    };
    debug_assert!(verify_transversal(c, &certificate));
    Ok(Transversal { size: certificate.len(), vertices: certificate, optimal: true, lower_bound: size, upper_bound: size, nodes })
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// `α = n - T`: the largest vertex set of `[n]` containing no facet.
pub fn independence_number(c: &PureComplex, budget: SolveBudget) -> Result<usize> {
    let t = exact_transversal(c, budget)?.require_optimal()?;
    Ok(c.n() as usize - t.size)
}

/// The two closed-form upper bounds on a transversal number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `n + 1 - n m^{-1/d} / e` for a pure complex with `m` facets of size `d`.
    pub pure: f64,
    /// `n - n / (2ℓ/n + 1)` when the edge count `ℓ` is known.
    pub turan: Option<f64>,
}

impl BoundReport {
    /// Six significant digits.
    pub fn fmt_sig(x: f64) -> String {
        if x == 0.0 || !x.is_finite() {
            return format!("{x}");
        }
        let digits = 6 - 1 - x.abs().log10().floor() as i32;
        format!("{:.*}", digits.max(0) as usize, x)
    }
}

pub fn bound_formulas(n: u64, m: u64, d: u64, edges: Option<u64>) -> Result<BoundReport> {
    if n == 0 || m == 0 || d == 0 {
        return Err(bad("bound formulas need positive n, m and d"));
    }
    let nf = n as f64;
    let pure = nf + 1.0 - nf * (m as f64).powf(-1.0 / d as f64) / std::f64::consts::E;
    let turan = edges.map(|l| nf - nf / (2.0 * l as f64 / nf + 1.0));
    Ok(BoundReport { pure, turan })
}

/// `⌈n + 1 - n m^{-1/d} / e⌉` for a complex, the integer form of the pure bound.
pub fn greedy_ceiling(c: &PureComplex) -> Result<u64> {
    let r = bound_formulas(c.n() as u64, c.num_facets() as u64, c.d() as u64, None)?;
    Ok(r.pure.ceil() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;

    fn path3() -> PureComplex {
        PureComplex::from_facets(4, [fs(&[1, 2]), fs(&[2, 3]), fs(&[3, 4])]).unwrap()
    }

    #[test]
    fn small_exact_values() {
        let t = exact_transversal(&path3(), SolveBudget::default()).unwrap();
        assert!(t.optimal);
        assert_eq!(t.size, 2);
        assert!(verify_transversal(&path3(), &t.vertices));
        assert_eq!(independence_number(&path3(), SolveBudget::default()).unwrap(), 2);
        let tetra = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        assert_eq!(exact_transversal(&tetra, SolveBudget::default()).unwrap().size, 2);
        let single = PureComplex::simplex(&fs(&[1, 2, 3, 4, 5]));
        assert_eq!(independence_number(&single, SolveBudget::default()).unwrap(), 4);
    }

    #[test]
    fn greedy_on_tetrahedron() {
        let tetra = PureComplex::simplex_boundary(&fs(&[1, 2, 3, 4]));
        let g = greedy_transversal(&tetra).unwrap();
        assert_eq!(g.vertices, fs(&[1, 2]));
    }

    #[test]
    fn empty_facet_is_rejected() {
        let c = PureComplex::simplex(&FacetSet::empty());
        assert!(exact_transversal(&c, SolveBudget::default()).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let c = crate::generators::family_f(24, 4, 2).unwrap();
        let t = exact_transversal(&c, SolveBudget::default().with_node_limit(3)).unwrap();
        assert!(!t.optimal);
        assert!(t.lower_bound <= t.size && t.size == t.upper_bound);
        assert!(verify_transversal(&c, &t.vertices));
        assert!(matches!(t.require_optimal(), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn bound_examples() {
        let r = bound_formulas(100, 1000, 3, None).unwrap();
        assert_eq!(BoundReport::fmt_sig(r.pure), "97.3212");
        let r = bound_formulas(10, 1, 10, Some(45)).unwrap();
        assert_eq!(BoundReport::fmt_sig(r.pure), "7.32121");
        assert_eq!(r.turan, Some(9.0));
        assert!(bound_formulas(0, 1, 1, None).is_err());
    }
}
