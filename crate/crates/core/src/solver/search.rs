//! Branch and bound for minimum transversals over fixed-width bitsets.
//!
//! A node holds the vertices already put into the transversal (`inc`) and
//! the vertices ruled out (`exc`). Facets whose only remaining candidate is
//! a single vertex force that vertex in. Otherwise the search branches on an
//! uncovered facet with the fewest candidates: the `i`-th child takes its
//! `i`-th candidate and rules out the earlier ones, so the children are
//! disjoint and their order is fixed by labels.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::bits::Bits;

pub(crate) struct Limits {
    pub node_limit: u64,
    pub deadline: Option<Instant>,
}

pub(crate) struct Outcome<const W: usize> {
    /// Best transversal found and its size.
    pub best: Option<(usize, Bits<W>)>,
    /// Lower bound established at the root.
    pub root_lower: usize,
    pub complete: bool,
    pub nodes: u64,
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    /// Stop as soon as any solution within the bound is found.
    first_hit: bool,
}

struct Search<'a, const W: usize> {
    facets: &'a [Bits<W>],
    limits: &'a Limits,
    shared: &'a Shared,
}

#[derive(Clone, Copy)]
struct Node<const W: usize> {
    inc: Bits<W>,
    exc: Bits<W>,
    size: usize,
}

enum Step<const W: usize> {
    Pruned,
    Solved(Node<W>),
    /// Propagated node, the candidates to branch on, and a lower bound on
    /// the size of any transversal below this node.
    Branch(Node<W>, Bits<W>, usize),
}

impl<const W: usize> Search<'_, W> {
    fn stopped(&self) -> bool {
        self.shared.stop.load(Ordering::Relaxed)
    }

    fn tick(&self) -> bool {
        let n = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_time = n % 1024 == 0 && self.limits.deadline.is_some_and(|d| Instant::now() >= d);
        if n > self.limits.node_limit || over_time {
            self.shared.exhausted.store(true, Ordering::Relaxed);
            self.shared.stop.store(true, Ordering::Relaxed);
        }
        self.stopped()
    }

    /// Filters `parent` down to uncovered facets, runs unit propagation and
    /// bounding. `unc` receives the uncovered facet indices.
    fn expand(&self, mut node: Node<W>, parent: &[u32], unc: &mut Vec<u32>, scratch: &mut Vec<(u32, u32)>) -> Step<W> {
        unc.clear();
        unc.extend(parent.iter().copied().filter(|&i| !self.facets[i as usize].intersects(&node.inc)));
        loop {
            let mut forced = false;
            let mut keep = 0;
            for r in 0..unc.len() {
                let i = unc[r];
                let f = &self.facets[i as usize];
                if f.intersects(&node.inc) {
                    continue;
                }
                let cand = f.and_not(&node.exc);
                match cand.count() {
                    0 => return Step::Pruned,
                    1 => {
                        node.inc.union_with(&cand);
                        node.size += 1;
                        forced = true;
                    }
                    _ => {
                        unc[keep] = i;
                        keep += 1;
                    }
                }
            }
            unc.truncate(keep);
            if !forced {
                break;
            }
        }
        if node.size >= self.shared.best.load(Ordering::Relaxed) {
            return Step::Pruned;
        }
        if unc.is_empty() {
            return Step::Solved(node);
        }
        // Candidates sorted by count; a greedy disjoint packing bounds the
        // number of further vertices from below.
        scratch.clear();
        scratch.extend(unc.iter().map(|&i| (self.facets[i as usize].and_not(&node.exc).count(), i)));
        scratch.sort_unstable();
        let mut used = Bits::<W>::zero();
        let mut packed = 0;
        for &(_, i) in scratch.iter() {
            let cand = self.facets[i as usize].and_not(&node.exc);
            if !cand.intersects(&used) {
                used.union_with(&cand);
                packed += 1;
            }
        }
        if node.size + packed >= self.shared.best.load(Ordering::Relaxed) {
            return Step::Pruned;
        }
        // Fewest candidates first; on ties the smallest facet index.
        let (_, pick) = scratch[0];
        let branch = self.facets[pick as usize].and_not(&node.exc);
        Step::Branch(node, branch, node.size + packed)
    }

    fn children(node: Node<W>, branch: Bits<W>) -> impl Iterator<Item = Node<W>> {
        let mut ruled_out = node.exc;
        branch.labels().collect::<Vec<_>>().into_iter().map(move |v| {
            let mut child = node;
            child.inc.insert(v);
            child.size += 1;
            child.exc = ruled_out;
            ruled_out.insert(v);
            child
        })
    }

    fn record(&self, node: Node<W>, best: &mut Option<(usize, Bits<W>)>) {
        let prev = self.shared.best.fetch_min(node.size, Ordering::Relaxed);
        if node.size < prev && best.map_or(true, |(s, _)| node.size < s) {
            *best = Some((node.size, node.inc));
        }
        if self.shared.first_hit {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&self, node: Node<W>, parent: &[u32], depth: usize, bufs: &mut Buffers, best: &mut Option<(usize, Bits<W>)>) {
        if self.tick() {
            return;
        }
        if bufs.unc.len() <= depth {
            bufs.unc.resize_with(depth + 1, Vec::new);
        }
        let mut unc = std::mem::take(&mut bufs.unc[depth]);
        match self.expand(node, parent, &mut unc, &mut bufs.scratch) {
            Step::Pruned => {}
            Step::Solved(n) => self.record(n, best),
            Step::Branch(n, branch, _) => {
                for child in Self::children(n, branch) {
                    if child.size >= self.shared.best.load(Ordering::Relaxed) {
                        break;
                    }
                    self.dfs(child, &unc, depth + 1, bufs, best);
                    if self.stopped() {
                        break;
                    }
                }
            }
        }
        bufs.unc[depth] = unc;
    }
}

#[derive(Default)]
struct Buffers {
    unc: Vec<Vec<u32>>,
    scratch: Vec<(u32, u32)>,
}

/// Runs the search for a transversal strictly smaller than `bound`.
/// With `first_hit`, stops at the first one found in depth-first order.
pub(crate) fn run<const W: usize>(
    facets: &[Bits<W>],
    bound: usize,
    threads: usize,
    limits: &Limits,
    first_hit: bool,
) -> Outcome<W> {
    let shared = Shared {
        best: AtomicUsize::new(bound),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        first_hit,
    };
    let search = Search { facets, limits, shared: &shared };
    let all: Vec<u32> = (0..facets.len() as u32).collect();
    let root = Node { inc: Bits::zero(), exc: Bits::zero(), size: 0 };

    let mut unc = Vec::new();
    let mut scratch = Vec::new();
    let root_lower = match search.expand(root, &all, &mut unc, &mut scratch) {
        Step::Pruned => bound,
        Step::Solved(n) => n.size,
        Step::Branch(_, _, lower) => lower,
    };

    let mut best = None;
    if threads <= 1 || first_hit {
        let mut bufs = Buffers::default();
        search.dfs(root, &all, 0, &mut bufs, &mut best);
    } else {
        // Expand breadth-first in depth-first order until there is enough
        // independent work, then hand subtrees to the pool.
        let mut frontier: Vec<(Node<W>, Vec<u32>)> = vec![(root, all.clone())];
        let target = threads * 8;
        let mut rounds = 0;
        while frontier.len() < target && rounds < 6 {
            rounds += 1;
            let mut next = Vec::new();
            for (node, parent) in frontier {
                if search.tick() {
                    break;
                }
                let mut unc = Vec::new();
                match search.expand(node, &parent, &mut unc, &mut scratch) {
                    Step::Pruned => {}
                    Step::Solved(n) => search.record(n, &mut best),
                    Step::Branch(n, branch, _) => {
                        for child in Search::children(n, branch) {
                            if child.size >= shared.best.load(Ordering::Relaxed) {
                                break;
                            }
                            next.push((child, unc.clone()));
                        }
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        let found: Vec<Option<(usize, Bits<W>)>> = frontier
            .par_iter()
            .map(|(node, parent)| {
                let mut local = None;
                if node.size < shared.best.load(Ordering::Relaxed) && !search.stopped() {
                    let mut bufs = Buffers::default();
                    search.dfs(*node, parent, 1, &mut bufs, &mut local);
                }
                local
            })
            .collect();
        for f in found.into_iter().flatten() {
            if best.map_or(true, |(s, _)| f.0 < s) {
                best = Some(f);
            }
        }
    }
    Outcome {
        best,
        root_lower: root_lower.min(bound),
        complete: !shared.exhausted.load(Ordering::Relaxed),
        nodes: shared.nodes.load(Ordering::Relaxed),
    }
}
