//! The interval-gap families `F^{n,d}_s`, `H^n_{a,s}` and the interval balls `Γ^J_n`.

use std::collections::BTreeSet;

use crate::complex::{PureComplex, Validation};
use crate::error::{bad, Result};
use crate::facet::{FacetSet, Label};

/// `F^{n,d}_s`: sets whose consecutive pairs `(i_1,i_2), (i_3,i_4), ...` all
/// have the same gap `ℓ <= s`; for odd `d` the trailing label sits at most
/// `s` after `i_{2k}`.
///
/// Labels of `[n]` that lie in no facet are allowed; see [`uncovered_labels`].
pub fn family_f(n: Label, d: usize, s: u32) -> Result<PureComplex> {
    if d < 2 || s < 1 || (n as usize) < d {
        return Err(bad(format!("F^{{{n},{d}}}_{s} needs d >= 2, s >= 1 and n >= d")));
    }
    let k = d / 2;
    let odd = d % 2 == 1;
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(d);
    for gap in 1..=s {
        f_pairs(1, n, k, gap, s, odd, &mut cur, &mut out);
    }
    if out.is_empty() {
        return Err(bad(format!("F^{{{n},{d}}}_{s} has no facets")));
    }
    PureComplex::build(n, out, Validation::AllowGaps)
}

#[allow(clippy::too_many_arguments)]
fn f_pairs(
    lo: Label,
    n: Label,
    k: usize,
    gap: u32,
    s: u32,
    odd: bool,
    cur: &mut Vec<Label>,
    out: &mut BTreeSet<FacetSet>,
) {
    if k == 0 {
        if !odd {
            out.insert(FacetSet::new(cur.iter().copied()));
            return;
        }
        let last = *cur.last().expect("k >= 1");
        for t in (last + 1)..=(last + s).min(n) {
            cur.push(t);
            out.insert(FacetSet::new(cur.iter().copied()));
            cur.pop();
        }
        return;
    }
    let mut i = lo;
    while i + gap <= n {
        cur.push(i);
        cur.push(i + gap);
        f_pairs(i + gap + 1, n, k - 1, gap, s, odd, cur, out);
        cur.pop();
        cur.pop();
        i += 1;
    }
}

/// Labels of `[1, n]` that lie in no facet of `c`.
pub fn uncovered_labels(c: &PureComplex) -> Vec<Label> {
    let used = c.vertex_set();
    (1..=c.n()).filter(|&v| !used.contains(v)).collect()
}

/// Splits `[n]` into `a` intervals whose sizes differ by at most one, the
/// larger ones first. Returned as inclusive `(start, end)` pairs.
pub fn h_intervals(n: Label, a: u32) -> Result<Vec<(Label, Label)>> {
    if a == 0 || a > n {
        return Err(bad(format!("cannot split [{n}] into {a} intervals")));
    }
    let (q, r) = (n / a, n % a);
    let mut out = Vec::with_capacity(a as usize);
    let mut start = 1;
    for j in 0..a {
        let size = q + u32::from(j < r);
        out.push((start, start + size - 1));
        start += size;
    }
    Ok(out)
}

/// `H^n_{a,s}` with `k` pairs: each pair `{i, i+ℓ}` sits inside its own
/// interval of the partition, intervals used in increasing order, one common
/// gap `1 <= ℓ <= s`.
pub fn family_h(n: Label, a: u32, s: u32, k: usize) -> Result<PureComplex> {
    if k < 2 || s < 1 || (a as usize) < k {
        return Err(bad(format!("H^{n}_{{{a},{s}}} needs k >= 2, s >= 1 and a >= k")));
    }
    let parts = h_intervals(n, a)?;
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(2 * k);
    for gap in 1..=s {
        h_pairs(&parts, 0, k, gap, &mut cur, &mut out);
    }
    if out.is_empty() {
        return Err(bad(format!("H^{n}_{{{a},{s}}} has no facets")));
    }
    PureComplex::build(n, out, Validation::AllowGaps)
}

fn h_pairs(
    parts: &[(Label, Label)],
    from: usize,
    k: usize,
    gap: u32,
    cur: &mut Vec<Label>,
    out: &mut BTreeSet<FacetSet>,
) {
    if k == 0 {
        out.insert(FacetSet::new(cur.iter().copied()));
        return;
    }
    for b in from..parts.len() {
        if parts.len() - b < k {
            break;
        }
        let (lo, hi) = parts[b];
        let mut i = lo;
        while i + gap <= hi {
            cur.push(i);
            cur.push(i + gap);
            h_pairs(parts, b + 1, k - 1, gap, cur, out);
            cur.pop();
            cur.pop();
            i += 1;
        }
    }
}

/// A composition `J = (j_1, ..., j_m)` with every part at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct CompositionJ(Vec<u32>);

impl CompositionJ {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&j| j < 2) {
            return Err(bad(format!("composition {parts:?} needs at least one part, all >= 2")));
        }
        Ok(CompositionJ(parts))
    }

    /// Parses `2,2,3` (commas or whitespace).
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad(format!("bad composition entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// `(2, ..., 2, last)` with `twos` leading twos.
    pub fn twos_then(twos: usize, last: u32) -> Result<Self> {
        let mut parts = vec![2; twos];
        parts.push(last);
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `d + 1`, the facet cardinality of `Γ^J_n`.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&j| j as usize).sum()
    }
}

/// `Γ^J_n`: unions of intervals of sizes `j_1, ..., j_m`, each strictly left
/// of the next.
pub fn gamma_j(n: Label, j: &CompositionJ) -> Result<PureComplex> {
    let total = j.total();
    if (n as usize) < total {
        return Err(bad(format!("Γ^J_{n} with |J| = {total} needs n > d = {}", total - 1)));
    }
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(total);
    intervals_walk(1, n, j.parts(), &mut cur, &mut out);
    Ok(PureComplex::from_parts(n, total, out))
}

fn intervals_walk(lo: Label, n: Label, rest: &[u32], cur: &mut Vec<Label>, out: &mut BTreeSet<FacetSet>) {
    let Some((&size, tail)) = rest.split_first() else {
        out.insert(FacetSet::new(cur.iter().copied()));
        return;
    };
    let need: u32 = rest.iter().sum();
    let mut start = lo;
    while start + need - 1 <= n {
        cur.extend(start..start + size);
        intervals_walk(start + size, n, tail, cur, out);
        cur.truncate(cur.len() - size as usize);
        start += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;
    use crate::generators::cyclic::ball_b;
    use itertools::Itertools;

    #[test]
    fn f_small_examples() {
        let f = family_f(6, 2, 1).unwrap();
        assert_eq!(f.facets(), (1..=5).map(|i| fs(&[i, i + 1])).collect::<Vec<_>>().as_slice());
        let f = family_f(6, 3, 1).unwrap();
        assert_eq!(f.facets(), (1..=4).map(|i| fs(&[i, i + 1, i + 2])).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn f_even_count_formula() {
        for n in 8..=20u32 {
            for s in 1..=3u32 {
                let expect: usize = (1..=s).map(|t| binom(n - 2 * t, 2)).sum();
                assert_eq!(family_f(n, 4, s).unwrap().num_facets(), expect, "n={n} s={s}");
            }
        }
    }

    fn binom(a: u32, b: u32) -> usize {
        if b > a {
            return 0;
        }
        (0..b).fold(1usize, |acc, i| acc * (a - i) as usize / (i + 1) as usize)
    }

    #[test]
    fn h_partition_larger_first() {
        assert_eq!(h_intervals(12, 3).unwrap(), vec![(1, 4), (5, 8), (9, 12)]);
        assert_eq!(h_intervals(11, 3).unwrap(), vec![(1, 4), (5, 8), (9, 11)]);
        assert_eq!(h_intervals(10, 4).unwrap(), vec![(1, 3), (4, 6), (7, 8), (9, 10)]);
    }

    #[test]
    fn h_example() {
        let h = family_h(12, 3, 2, 2).unwrap();
        assert!(h.contains_facet(&fs(&[1, 2, 5, 6])));
        assert!(!h.contains_facet(&fs(&[3, 5, 9, 11])));
        assert!(h.is_pseudomanifold());
    }

    #[test]
    fn gamma_j_examples() {
        let twos = CompositionJ::new(vec![2, 2]).unwrap();
        let g = gamma_j(6, &twos).unwrap();
        assert_eq!(g, ball_b(1, 6, 3).unwrap());
        assert_eq!(g.num_facets(), 6);

        let g = gamma_j(7, &CompositionJ::new(vec![5]).unwrap()).unwrap();
        assert_eq!(g.facets(), &[fs(&[1, 2, 3, 4, 5]), fs(&[2, 3, 4, 5, 6]), fs(&[3, 4, 5, 6, 7])]);

        let g = gamma_j(6, &CompositionJ::new(vec![2, 3]).unwrap()).unwrap();
        assert_eq!(
            g.facets(),
            &[fs(&[1, 2, 3, 4, 5]), fs(&[1, 2, 4, 5, 6]), fs(&[2, 3, 4, 5, 6])]
        );
    }

    #[test]
    fn composition_parsing() {
        assert_eq!(CompositionJ::parse("2,2, 3").unwrap().parts(), &[2, 2, 3]);
        assert!(CompositionJ::parse("2,1").is_err());
        assert!(CompositionJ::parse("").is_err());
    }

    // Direct decomposition test: can the sorted set be cut into consecutive
    // runs of the given sizes, each run an interval, runs left to right?
    fn is_gamma_facet(t: &[Label], parts: &[u32]) -> bool {
        let mut pos = 0;
        for &p in parts {
            let run = &t[pos..pos + p as usize];
            if run.windows(2).any(|w| w[1] != w[0] + 1) {
                return false;
            }
            pos += p as usize;
        }
        true
    }

    #[test]
    fn gamma_j_matches_subset_filter() {
        for parts in [vec![2, 2], vec![2, 3], vec![3, 2], vec![2, 2, 2], vec![4], vec![2, 4]] {
            let j = CompositionJ::new(parts.clone()).unwrap();
            for n in (j.total() as Label)..=11 {
                let expect: Vec<FacetSet> = (1..=n)
                    .combinations(j.total())
                    .filter(|t| is_gamma_facet(t, &parts))
                    .map(FacetSet::new)
                    .collect();
                assert_eq!(gamma_j(n, &j).unwrap().facets(), expect.as_slice());
            }
        }
    }
}
