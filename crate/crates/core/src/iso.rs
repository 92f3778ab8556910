//! Combinatorial isomorphism of pure complexes.
//!
//! Vertices of both complexes are colored jointly by iterated refinement
//! (facet degree first, then the multiset of colors of the facets through a
//! vertex) and the surviving color classes seed a backtracking search.

use std::collections::{BTreeMap, HashSet};

use crate::complex::PureComplex;
use crate::facet::Label;

struct Compact {
    labels: Vec<Label>,
    facets: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    adjacent: Vec<Vec<bool>>,
}

impl Compact {
    fn new(c: &PureComplex) -> Self {
        let labels = c.vertices();
        let index: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let nv = labels.len();
        let facets: Vec<Vec<usize>> =
            c.facets().iter().map(|f| f.iter().map(|v| index[&v]).collect()).collect();
        let mut incident = vec![Vec::new(); nv];
        let mut adjacent = vec![vec![false; nv]; nv];
        for (fi, f) in facets.iter().enumerate() {
            for &u in f {
                incident[u].push(fi);
                for &w in f {
                    adjacent[u][w] = true;
                }
            }
        }
        Compact { labels, facets, incident, adjacent }
    }
}

fn refine(a: &Compact, b: &Compact) -> (Vec<u32>, Vec<u32>) {
    let mut ca: Vec<u32> = a.incident.iter().map(|i| i.len() as u32).collect();
    let mut cb: Vec<u32> = b.incident.iter().map(|i| i.len() as u32).collect();
    let mut classes = 0;
    loop {
        let sig = |g: &Compact, col: &[u32], v: usize| {
            let mut per_facet: Vec<Vec<u32>> = g.incident[v]
                .iter()
                .map(|&fi| {
                    let mut cs: Vec<u32> =
                        g.facets[fi].iter().filter(|&&u| u != v).map(|&u| col[u]).collect();
                    cs.sort_unstable();
                    cs
                })
                .collect();
            per_facet.sort_unstable();
            (col[v], per_facet)
        };
        let sa: Vec<_> = (0..a.labels.len()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.labels.len()).map(|v| sig(b, &cb, v)).collect();
        let ids: BTreeMap<_, u32> = sa
            .iter()
            .chain(sb.iter())
            .cloned()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i as u32))
            .collect();
        ca = sa.iter().map(|s| ids[s]).collect();
        cb = sb.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (ca, cb);
        }
        classes = ids.len();
    }
}

fn histogram(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

struct Search<'a> {
    a: &'a Compact,
    b: &'a Compact,
    ca: Vec<u32>,
    cb: Vec<u32>,
    b_facets: HashSet<Vec<usize>>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        for u in 0..self.a.labels.len() {
            if let Some(x) = self.map[u] {
                if self.a.adjacent[v][u] != self.b.adjacent[w][x] {
                    return false;
                }
            }
        }
        for &fi in &self.a.incident[v] {
            let f = &self.a.facets[fi];
            let mut image = Vec::with_capacity(f.len());
            for &u in f {
                match if u == v { Some(w) } else { self.map[u] } {
                    Some(x) => image.push(x),
                    None => break,
                }
            }
            if image.len() == f.len() {
                image.sort_unstable();
                if !self.b_facets.contains(&image) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.b.labels.len() {
            if self.used[w] || self.cb[w] != self.ca[v] || !self.consistent(v, w) {
                continue;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        false
    }
}

/// Returns a vertex bijection carrying the facets of `c1` onto those of
/// `c2`, or `None` when the complexes are not isomorphic.
pub fn are_isomorphic(c1: &PureComplex, c2: &PureComplex) -> Option<BTreeMap<Label, Label>> {
    if c1.d() != c2.d() || c1.num_facets() != c2.num_facets() || c1.num_vertices() != c2.num_vertices()
    {
        return None;
    }
    let (a, b) = (Compact::new(c1), Compact::new(c2));
    let (ca, cb) = refine(&a, &b);
    let hist = histogram(&ca);
    if hist != histogram(&cb) {
        return None;
    }

    // Smallest class first, then prefer vertices touching already-ordered ones.
    let nv = a.labels.len();
    let mut order = Vec::with_capacity(nv);
    let mut placed = vec![false; nv];
    while order.len() < nv {
        let next = (0..nv)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let touching = order.iter().filter(|&&u| a.adjacent[v][u]).count();
                (usize::MAX - touching, hist[&ca[v]], v)
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }

    let b_facets = b
        .facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();
    let mut search = Search {
        a: &a,
        b: &b,
        ca,
        cb,
        b_facets,
        order,
        map: vec![None; nv],
        used: vec![false; nv],
    };
    if !search.run(0) {
        return None;
    }
    Some(
        search
            .map
            .iter()
            .enumerate()
            .map(|(v, w)| (a.labels[v], b.labels[w.expect("complete map")]))
            .collect(),
    )
}

/// Whether `map` carries the facet set of `c1` exactly onto that of `c2`.
pub fn is_isomorphism(c1: &PureComplex, c2: &PureComplex, map: &BTreeMap<Label, Label>) -> bool {
    let image = c1.relabel(|v| map[&v]);
    image == *c2
}
