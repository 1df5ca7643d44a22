//! Homogeneous sets (modules) via pair closures.

use crate::graph::{Graph, VertexSet};

/// Vertices outside `s` adjacent to some, but not all, of `s`.
pub fn mixed_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    (g.vertices() - s)
        .iter()
        .filter(|&x| {
            let seen = g.neighbors(x) & s;
            !seen.is_empty() && seen != s
        })
        .collect()
}

/// `1 < |s| < n` and no outside vertex is mixed on `s`.
pub fn is_homogeneous(g: &Graph, s: VertexSet) -> bool {
    s.is_subset(g.vertices()) && s.len() > 1 && s.len() < g.n() && mixed_vertices(g, s).is_empty()
}

/// Smallest set containing `seed` on which no outside vertex is mixed.
pub fn closure(g: &Graph, seed: VertexSet) -> VertexSet {
    let mut s = seed;
    loop {
        let m = mixed_vertices(g, s);
        if m.is_empty() {
            return s;
        }
        s |= m;
    }
}

/// A smallest homogeneous set, ties broken lexicographically, or `None` when
/// the graph is prime.
///
/// Every homogeneous set `X` contains the closure of any pair inside it, so
/// sweeping all pairs finds one whenever one exists.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for u in 0..n {
        for v in u + 1..n {
            let s = closure(g, VertexSet::singleton(u).with(v));
            if s.len() == n {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => (s.len(), s.iter().cmp(b.iter())) < (b.len(), std::cmp::Ordering::Equal),
            };
            if better {
                best = Some(s);
                if s.len() == 2 && u == 0 {
                    // cannot beat a pair starting at vertex 0
                    return best;
                }
            }
        }
    }
    best
}
