//! Cyclic polytope boundaries and the interval-pair balls `B([a,b], d)`.

use std::collections::BTreeSet;

use crate::complex::PureComplex;
use crate::error::{bad, Result};
use crate::facet::{FacetSet, Label};

/// Gale's evenness test: any two labels of `[n]` outside `set` are separated
/// by an even number of elements of `set`.
pub fn is_gale_facet(set: &FacetSet, n: Label) -> bool {
    let mut between = 0usize;
    let mut seen_gap = false;
    for v in 1..=n {
        if set.contains(v) {
            between += 1;
        } else {
            if seen_gap && between % 2 == 1 {
                return false;
            }
            seen_gap = true;
            between = 0;
        }
    }
    true
}

/// Facets of the boundary of the cyclic `d`-polytope with `n` vertices.
///
/// The enumeration walks `[n]` left to right and only closes a run of chosen
/// labels when it is allowed to: runs that neither start at 1 nor end at `n`
/// must have even length.
pub fn cyclic_boundary(n: Label, d: usize) -> Result<PureComplex> {
    if d < 2 || (n as usize) < d + 1 {
        return Err(bad(format!("cyclic polytope C({n},{d}) needs d >= 2 and n >= d+1")));
    }
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(d);
    gale_walk(1, n, d, false, 0, &mut cur, &mut out);
    Ok(PureComplex::from_parts(n, d, out))
}

fn gale_walk(
    p: Label,
    n: Label,
    d: usize,
    run_from_one: bool,
    run_len: usize,
    cur: &mut Vec<Label>,
    out: &mut BTreeSet<FacetSet>,
) {
    if cur.len() == d {
        // Remaining labels are all skipped; the open run ends here.
        if p <= n && run_len % 2 == 1 && !run_from_one {
            return;
        }
        out.insert(FacetSet::new(cur.iter().copied()));
        return;
    }
    if p > n {
        return;
    }
    if (n - p + 1) as usize + cur.len() < d {
        return;
    }
    // take p
    cur.push(p);
    let from_one = if run_len == 0 { p == 1 } else { run_from_one };
    gale_walk(p + 1, n, d, from_one, run_len + 1, cur, out);
    cur.pop();
    // skip p: closes the current run, which must be even unless it started at 1
    if run_len == 0 || run_from_one || run_len % 2 == 0 {
        gale_walk(p + 1, n, d, false, 0, cur, out);
    }
}

/// Facets of `B([a,b], d)` as raw sets. Tolerates degenerate intervals:
/// `d = -1` always yields the single empty facet, and an interval too short
/// for the requested dimension yields no facets.
pub(crate) fn ball_b_facets(a: i64, b: i64, d: i64) -> Vec<FacetSet> {
    if d < 0 {
        return vec![FacetSet::empty()];
    }
    if d % 2 == 0 {
        return ball_b_facets(a, b - 1, d - 1)
            .into_iter()
            .map(|f| f.with(b as Label))
            .collect();
    }
    let k = ((d + 1) / 2) as usize;
    let mut out = Vec::new();
    let mut cur: Vec<Label> = Vec::with_capacity(2 * k);
    pairs_walk(a.max(1), b, k, &mut cur, &mut out);
    out
}

// Chooses i_1 < ... < i_k with i_j + 1 < i_{j+1}, i_1 >= lo, i_k <= b - 1.
fn pairs_walk(lo: i64, b: i64, k: usize, cur: &mut Vec<Label>, out: &mut Vec<FacetSet>) {
    if k == 0 {
        out.push(FacetSet::new(cur.iter().copied()));
        return;
    }
    // the remaining k pairs need 2k labels inside [i, b]
    let mut i = lo;
    while i + 2 * k as i64 - 1 <= b {
        cur.push(i as Label);
        cur.push(i as Label + 1);
        pairs_walk(i + 2, b, k - 1, cur, out);
        cur.pop();
        cur.pop();
        i += 1;
    }
}

/// The ball `B([a,b], d)`; `d = -1` gives the complex whose only facet is empty.
pub fn ball_b(a: Label, b: Label, d: i64) -> Result<PureComplex> {
    if d < -1 || a < 1 || (b as i64 - a as i64) < d || (d >= 0 && a >= b && d > 0) {
        return Err(bad(format!("B([{a},{b}],{d}) needs a >= 1, d >= -1 and b - a >= d")));
    }
    let facets: BTreeSet<FacetSet> = ball_b_facets(a as i64, b as i64, d).into_iter().collect();
    Ok(PureComplex::from_parts(b, (d + 1) as usize, facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;
    use itertools::Itertools;

    // Pairwise form of the evenness condition, checked over all subsets.
    fn gale_oracle(n: Label, d: usize) -> Vec<FacetSet> {
        (1..=n)
            .combinations(d)
            .filter(|t| {
                let outside: Vec<Label> = (1..=n).filter(|v| !t.contains(v)).collect();
                outside.iter().tuple_combinations().all(|(&x, &y)| {
                    t.iter().filter(|&&v| x < v && v < y).count() % 2 == 0
                })
            })
            .map(|t| FacetSet::new(t))
            .collect()
    }

    #[test]
    fn walk_matches_pairwise_oracle() {
        for d in 2..=6 {
            for n in (d as Label + 1)..=13 {
                let c = cyclic_boundary(n, d).unwrap();
                assert_eq!(c.facets(), gale_oracle(n, d).as_slice(), "C({n},{d})");
                assert!(c.facets().iter().all(|f| is_gale_facet(f, n)));
            }
        }
    }

    #[test]
    fn small_cyclic_examples() {
        assert_eq!(cyclic_boundary(5, 4).unwrap(), PureComplex::simplex_boundary(&FacetSet::interval(1, 5)));
        let c73 = cyclic_boundary(7, 3).unwrap();
        let mut expect: BTreeSet<FacetSet> = (2..=6).map(|i| fs(&[1, i, i + 1])).collect();
        expect.extend((1..=5).map(|i| fs(&[i, i + 1, 7])));
        assert_eq!(c73.facets(), expect.into_iter().collect::<Vec<_>>().as_slice());
        assert_eq!(c73.num_facets(), 10);
        assert_eq!(cyclic_boundary(6, 4).unwrap().num_facets(), 9);
        assert!(cyclic_boundary(4, 4).is_err());
    }

    #[test]
    fn ball_b_examples() {
        assert_eq!(
            ball_b(1, 5, 3).unwrap().facets(),
            &[fs(&[1, 2, 3, 4]), fs(&[1, 2, 4, 5]), fs(&[2, 3, 4, 5])]
        );
        assert_eq!(ball_b(1, 7, 0).unwrap().facets(), &[fs(&[7])]);
        assert_eq!(
            ball_b(1, 6, 4).unwrap().facets(),
            &[fs(&[1, 2, 3, 4, 6]), fs(&[1, 2, 4, 5, 6]), fs(&[2, 3, 4, 5, 6])]
        );
        let empty = ball_b(3, 5, -1).unwrap();
        assert_eq!(empty.facets(), &[FacetSet::empty()]);
        assert!(ball_b(1, 3, 3).is_err());
    }

    #[test]
    fn ball_b_counts() {
        // B([1,8],3) has C(6,2) facets
        assert_eq!(ball_b(1, 8, 3).unwrap().num_facets(), 15);
        assert_eq!(ball_b(1, 16, 3).unwrap().num_facets(), 91);
    }
}
