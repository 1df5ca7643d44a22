//! Simple undirected graphs over `0..n` with one `u64` adjacency row per vertex.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64` packed into one word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements of `0..n` not in `self`.
    #[inline]
    pub fn complement_in(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the ascending element sequences lexicographically.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

macro_rules! set_op {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows; the rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 || row >> v & 1 == 1 {
                return Err(Error::InvalidArgument(format!("bad adjacency row for vertex {v}")));
            }
            for u in VertexSet(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(Graph { adj: rows, ..g })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v).bits();
        }
        Ok(g)
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0-1-..-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// The Petersen graph: outer cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen is well formed")
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !(2u64 << u).wrapping_sub(1)).iter().map(move |v| (u, v))
        })
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood without range checking; panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_within(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s.0).count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
        }
    }

    /// `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.neighbors(v))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.neighbors(v).with(v))
    }

    /// `M(v) = V \ N[v]`.
    pub fn non_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.vertices() - self.neighbors(v).with(v))
    }

    /// Subgraph induced by `s`, renumbered in ascending order of the original
    /// indices. The returned map sends new index `i` to its original vertex.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let rows = map
            .iter()
            .map(|&v| compress(self.adj[v] & s.0, s.0))
            .collect();
        Ok((Graph { n: map.len(), adj: rows }, map))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Connected components of `G[s]`, ordered by their smallest vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut left = s;
        let mut out = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.neighbors(v);
                }
                frontier = (next & s) - comp;
                comp |= frontier;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True for `n <= 1` and for graphs with exactly one component.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.is_connected_within(self.vertices())
    }

    pub(crate) fn is_connected_within(&self, s: VertexSet) -> bool {
        let Some(start) = s.min() else { return false };
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.neighbors(v);
            }
            frontier = (next & s) - comp;
            comp |= frontier;
        }
        comp == s
    }

    /// Line graph together with the edge each of its vertices stands for.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges: Vec<_> = self.edges().collect();
        let mut l = Graph::empty(edges.len())?;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    l.add_edge(i, j);
                }
            }
        }
        Ok((l, edges))
    }

    /// Breadth-first spanning forest edges, rooted at the smallest vertex of
    /// each component.
    pub fn bfs_tree(&self) -> Vec<(usize, usize)> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) - seen {
                    seen.insert(v);
                    out.push((u.min(v), u.max(v)));
                    queue.push_back(v);
                }
            }
        }
        out
    }

    /// Depth-first spanning forest edges; neighbours are visited in ascending order.
    pub fn dfs_tree(&self) -> Vec<(usize, usize)> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                match (self.neighbors(u) - seen).min() {
                    Some(v) => {
                        seen.insert(v);
                        out.push((u.min(v), u.max(v)));
                        stack.push(v);
                    }
                    None => {
                        stack.pop();
                    }
                }
            }
        }
        out
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits.
#[inline]
fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let b = m.trailing_zeros();
        if row >> b & 1 == 1 {
            out |= 1 << i;
        }
        i += 1;
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
