//! Brute-force oracles shared by the integration tests. They work on plain
//! `u64` masks and never call the solver.

#![allow(dead_code)]

use rand::Rng;
use transversal_core::{FacetSet, Label, PureComplex};

pub fn mask(f: &FacetSet) -> u64 {
    f.iter().fold(0u64, |m, v| m | 1 << (v - 1))
}

pub fn masks(c: &PureComplex) -> Vec<u64> {
    c.facets().iter().map(mask).collect()
}

pub fn hits_all(facets: &[u64], t: u64) -> bool {
    facets.iter().all(|&f| f & t != 0)
}

/// Next larger integer with the same popcount.
fn gosper(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Smallest transversal size, scanning subsets by size. Requires `n <= 24`.
pub fn brute_transversal(c: &PureComplex) -> usize {
    let n = c.n() as u32;
    assert!(n <= 24, "brute force is for small n");
    let facets = masks(c);
    if facets.is_empty() {
        return 0;
    }
    for size in 1..=n {
        let mut t: u64 = (1u64 << size) - 1;
        while t < 1u64 << n {
            if hits_all(&facets, t) {
                return size as usize;
            }
            t = gosper(t);
        }
    }
    unreachable!("the full vertex set hits every nonempty facet")
}

/// Largest vertex set containing no facet, over all subsets. Requires `n <= 20`.
pub fn brute_independence(c: &PureComplex) -> usize {
    let n = c.n() as u32;
    assert!(n <= 20);
    let facets = masks(c);
    (0u64..1 << n)
        .filter(|&s| facets.iter().all(|&f| f & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A random pure complex on `[n]` with facets of size `d`; labels missing
/// from every facet are allowed.
pub fn random_complex<R: Rng>(rng: &mut R, n: Label, d: usize, m: usize) -> PureComplex {
    let mut facets = std::collections::BTreeSet::new();
    let mut tries = 0;
    while facets.len() < m && tries < 50 * m {
        tries += 1;
        let mut labels: Vec<Label> = Vec::with_capacity(d);
        while labels.len() < d {
            let v = rng.gen_range(1..=n);
            if !labels.contains(&v) {
                labels.push(v);
            }
        }
        facets.insert(FacetSet::new(labels));
    }
    PureComplex::with_gaps(n, facets).expect("uniform random facets")
}

pub fn labels(it: impl IntoIterator<Item = Label>) -> FacetSet {
    FacetSet::new(it)
}
