//! Exact brute-force computations used as ground truth: cliques, colourings,
//! odd holes and antiholes, and perfection.
//!
//! All searches run on bitmask rows of the host graph and most of them accept a
//! vertex subset, so callers can query `G[X]` without materialising it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap for exact colouring.
pub const CHROMATIC_CAP: usize = 16;
/// Default cap for the induced-path odd hole search.
pub const ODD_HOLE_CAP: usize = 16;
/// Cap for the subset-enumeration odd hole oracle.
pub const ODD_HOLE_SUBSET_CAP: usize = 10;
/// Cap for [`SubsetTable`].
pub const SUBSET_TABLE_CAP: usize = 20;

/// Nonnegative integer vertex weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightFn(Vec<u64>);

impl WeightFn {
    pub fn new(g: &Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for a graph on {} vertices",
                weights.len(),
                g.n()
            )));
        }
        Ok(WeightFn(weights))
    }

    pub fn uniform(n: usize) -> Self {
        WeightFn(vec![1; n])
    }

    #[inline]
    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// `{v : w(v) > 0}`.
    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &w)| w > 0).map(|(v, _)| v).collect()
    }

    pub fn weight_of(&self, s: VertexSet) -> u64 {
        s.iter().map(|v| self.0[v]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

// ---------------------------------------------------------------------------
// cliques

/// Greedy sequential colouring of `cand`; returns vertices grouped by colour
/// class together with the (1-based) class of each.
fn color_sort(g: &Graph, cand: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut class = Vec::with_capacity(cand.len());
    let mut uncolored = cand;
    let mut k = 0;
    while !uncolored.is_empty() {
        k += 1;
        let mut q = uncolored;
        while let Some(v) = q.min() {
            q -= g.neighbors(v).with(v);
            uncolored.remove(v);
            order.push(v);
            class.push(k);
        }
    }
    (order, class)
}

fn expand(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
    let (order, class) = color_sort(g, cand);
    let mut cand = cand;
    for idx in (0..order.len()).rev() {
        if size + class[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = cand & g.neighbors(v);
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            expand(g, next, size + 1, best);
        }
        cand.remove(v);
    }
}

/// Whether `G[cand]` has a clique on `k` vertices.
fn has_clique(g: &Graph, cand: VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    let (order, class) = color_sort(g, cand);
    if class.last().copied().unwrap_or(0) < k {
        return false;
    }
    let mut cand = cand;
    for idx in (0..order.len()).rev() {
        if class[idx] < k {
            return false;
        }
        let v = order[idx];
        if has_clique(g, cand & g.neighbors(v), k - 1) {
            return true;
        }
        cand.remove(v);
    }
    false
}

/// `ω(G[s])`.
pub fn clique_number_in(g: &Graph, s: VertexSet) -> usize {
    let mut best = 0;
    if !s.is_empty() {
        expand(g, s, 0, &mut best);
    }
    best
}

/// `ω(G)`.
pub fn clique_number(g: &Graph) -> usize {
    clique_number_in(g, g.vertices())
}

/// Lexicographically smallest maximum clique of `G[s]`.
pub fn max_clique_in(g: &Graph, s: VertexSet) -> VertexSet {
    let k = clique_number_in(g, s);
    let mut chosen = VertexSet::EMPTY;
    let mut cand = s;
    for step in 0..k {
        let need = k - step - 1;
        let v = cand
            .iter()
            .find(|&v| has_clique(g, above(cand, v) & g.neighbors(v), need))
            .expect("a clique of size ω exists");
        chosen.insert(v);
        cand = above(cand, v) & g.neighbors(v);
    }
    chosen
}

pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_in(g, g.vertices())
}

#[inline]
fn above(s: VertexSet, v: usize) -> VertexSet {
    s & VertexSet::from_bits(!(2u64 << v).wrapping_sub(1))
}

fn weighted_bound(w: &WeightFn, order: &[usize], class: &[usize], upto: usize) -> u64 {
    // sum over colour classes 1..=class[upto] of the heaviest member seen so far
    let mut total = 0;
    let mut i = 0;
    while i <= upto {
        let c = class[i];
        let mut m = 0;
        while i <= upto && class[i] == c {
            m = m.max(w.get(order[i]));
            i += 1;
        }
        total += m;
    }
    total
}

fn wexpand(g: &Graph, w: &WeightFn, cand: VertexSet, acc: u64, best: &mut u64) {
    let (order, class) = color_sort(g, cand);
    let mut cand = cand;
    for idx in (0..order.len()).rev() {
        if acc + weighted_bound(w, &order, &class, idx) <= *best {
            return;
        }
        let v = order[idx];
        let total = acc + w.get(v);
        *best = (*best).max(total);
        let next = cand & g.neighbors(v);
        if !next.is_empty() {
            wexpand(g, w, next, total, best);
        }
        cand.remove(v);
    }
}

fn max_weight_in(g: &Graph, w: &WeightFn, s: VertexSet) -> u64 {
    let mut best = 0;
    let s = s & w.support();
    if !s.is_empty() {
        wexpand(g, w, s, 0, &mut best);
    }
    best
}

/// Maximum weight of a clique of `G[s]` with a lexicographically smallest witness
/// drawn from positive-weight vertices. The empty clique counts, so the weight
/// is 0 when `s` carries no weight.
pub fn max_weight_clique_in(g: &Graph, w: &WeightFn, s: VertexSet) -> (u64, VertexSet) {
    let target = max_weight_in(g, w, s);
    let mut chosen = VertexSet::EMPTY;
    let mut acc = 0;
    let mut cand = s & w.support();
    while acc < target {
        let v = cand
            .iter()
            .find(|&v| {
                acc + w.get(v) + max_weight_in(g, w, above(cand, v) & g.neighbors(v)) == target
            })
            .expect("an optimal clique exists");
        chosen.insert(v);
        acc += w.get(v);
        cand = above(cand, v) & g.neighbors(v);
    }
    (target, chosen)
}

pub fn max_weight_clique(g: &Graph, w: &WeightFn) -> (u64, VertexSet) {
    max_weight_clique_in(g, w, g.vertices())
}

/// `α(G) = ω(complement(G))`.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

// ---------------------------------------------------------------------------
// colouring

/// A proper vertex colouring with colours `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.palette)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Number of distinct colours actually used.
    pub fn used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(exact_coloring(g)?.palette)
}

pub fn exact_coloring(g: &Graph) -> Result<Coloring> {
    exact_coloring_with_cap(g, CHROMATIC_CAP)
}

/// Minimum colouring by DSATUR branch and bound, seeded with a maximum clique.
pub fn exact_coloring_with_cap(g: &Graph, cap: usize) -> Result<Coloring> {
    let n = g.n();
    if n > cap {
        return Err(Error::capacity("exact colouring", n, cap));
    }
    if n == 0 {
        return Ok(Coloring { colors: vec![], palette: 0 });
    }
    let clique = max_clique(g);
    let lower = clique.len();
    let initial = dsatur_greedy(g, clique);
    let mut state = ColorSearch {
        g,
        lower,
        colors: vec![None; n],
        best: initial.clone(),
        best_palette: initial.palette,
    };
    if state.best_palette > lower {
        for (c, v) in clique.iter().enumerate() {
            state.colors[v] = Some(c);
        }
        state.dfs(n - lower, lower);
    }
    Ok(state.best)
}

fn neighbor_colors(g: &Graph, colors: &[Option<usize>], v: usize) -> u64 {
    g.neighbors(v)
        .iter()
        .filter_map(|u| colors[u])
        .fold(0u64, |m, c| m | 1 << c)
}

/// Picks the uncoloured vertex with highest saturation, then most uncoloured
/// neighbours, then smallest index.
fn pick_vertex(g: &Graph, colors: &[Option<usize>]) -> Option<(usize, u64)> {
    let uncolored: VertexSet = (0..g.n()).filter(|&v| colors[v].is_none()).collect();
    uncolored
        .iter()
        .map(|v| {
            let sat = neighbor_colors(g, colors, v);
            let key = (sat.count_ones(), (g.neighbors(v) & uncolored).len());
            (key, std::cmp::Reverse(v), sat)
        })
        .max()
        .map(|(_, std::cmp::Reverse(v), sat)| (v, sat))
}

fn dsatur_greedy(g: &Graph, seed: VertexSet) -> Coloring {
    let mut colors = vec![None; g.n()];
    for (c, v) in seed.iter().enumerate() {
        colors[v] = Some(c);
    }
    let mut palette = seed.len();
    while let Some((v, sat)) = pick_vertex(g, &colors) {
        let c = (!sat).trailing_zeros() as usize;
        colors[v] = Some(c);
        palette = palette.max(c + 1);
    }
    Coloring {
        colors: colors.into_iter().map(|c| c.expect("all coloured")).collect(),
        palette,
    }
}

struct ColorSearch<'a> {
    g: &'a Graph,
    lower: usize,
    colors: Vec<Option<usize>>,
    best: Coloring,
    best_palette: usize,
}

impl ColorSearch<'_> {
    fn dfs(&mut self, remaining: usize, used: usize) {
        if self.best_palette == self.lower {
            return;
        }
        if remaining == 0 {
            if used < self.best_palette {
                self.best_palette = used;
                self.best = Coloring {
                    colors: self.colors.iter().map(|c| c.expect("complete")).collect(),
                    palette: used,
                };
            }
            return;
        }
        let (v, sat) = pick_vertex(self.g, &self.colors).expect("vertex left");
        for c in 0..used {
            if sat >> c & 1 == 0 {
                self.colors[v] = Some(c);
                self.dfs(remaining - 1, used);
                self.colors[v] = None;
                if self.best_palette == self.lower {
                    return;
                }
            }
        }
        if used + 1 < self.best_palette {
            self.colors[v] = Some(used);
            self.dfs(remaining - 1, used + 1);
            self.colors[v] = None;
        }
    }
}

// ---------------------------------------------------------------------------
// odd holes and antiholes

/// Odd hole of `G[s]` by depth-first induced-path extension.
pub fn find_odd_hole_in(g: &Graph, s: VertexSet) -> Result<Option<VertexSet>> {
    find_odd_hole_in_with_cap(g, s, ODD_HOLE_CAP)
}

pub fn find_odd_hole_in_with_cap(g: &Graph, s: VertexSet, cap: usize) -> Result<Option<VertexSet>> {
    if s.len() > cap {
        return Err(Error::capacity("odd hole search", s.len(), cap));
    }
    for start in s {
        // the smallest vertex of the hole is the start
        let allowed = above(s, start);
        for p1 in g.neighbors(start) & allowed {
            let path = VertexSet::singleton(start).with(p1);
            let forbid = path;
            if let Some(h) = extend_path(g, allowed, start, p1, path, 2, forbid) {
                return Ok(Some(h));
            }
        }
    }
    Ok(None)
}

/// Extends the induced path ending at `last`. `forbid` holds the path and the
/// closed neighbourhoods of all interior vertices except `last`.
fn extend_path(
    g: &Graph,
    allowed: VertexSet,
    start: usize,
    last: usize,
    path: VertexSet,
    len: usize,
    forbid: VertexSet,
) -> Option<VertexSet> {
    let start_nb = g.neighbors(start);
    let cands = (g.neighbors(last) & allowed) - forbid;
    let next_forbid = forbid | g.neighbors(last).with(last);
    for x in cands {
        if start_nb.contains(x) {
            let cycle_len = len + 1;
            if cycle_len >= 5 && cycle_len % 2 == 1 {
                return Some(path.with(x));
            }
            continue;
        }
        if !can_return(g, allowed - next_forbid, x, start_nb) {
            continue;
        }
        if let Some(h) = extend_path(g, allowed, start, x, path.with(x), len + 1, next_forbid) {
            return Some(h);
        }
    }
    None
}

/// Whether `x` can reach a neighbour of the start through `free`.
fn can_return(g: &Graph, free: VertexSet, x: usize, start_nb: VertexSet) -> bool {
    let mut seen = VertexSet::singleton(x);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= g.neighbors(v);
        }
        if !(next & start_nb & (free | seen)).is_empty() {
            return true;
        }
        frontier = (next & free) - seen;
        seen |= frontier;
    }
    false
}

pub fn find_odd_hole(g: &Graph) -> Result<Option<VertexSet>> {
    find_odd_hole_in(g, g.vertices())
}

/// Odd antihole of `G[s]`: an odd hole of the complement.
pub fn find_odd_antihole_in(g: &Graph, s: VertexSet) -> Result<Option<VertexSet>> {
    find_odd_hole_in(&g.complement(), s)
}

pub fn find_odd_antihole(g: &Graph) -> Result<Option<VertexSet>> {
    find_odd_antihole_in(g, g.vertices())
}

/// Whether `G[s]` is a cycle of odd length at least 5.
pub fn is_odd_hole_set(g: &Graph, s: VertexSet) -> bool {
    let k = s.len();
    k >= 5 && k % 2 == 1 && s.iter().all(|v| g.degree_within(v, s) == 2) && g.is_connected_within(s)
}

/// Whether `G[s]` is the complement of a cycle of odd length at least 5.
pub fn is_odd_antihole_set(g: &Graph, s: VertexSet) -> bool {
    let k = s.len();
    k >= 5
        && k % 2 == 1
        && s.iter().all(|v| g.degree_within(v, s) == k - 3)
        && g.complement().is_connected_within(s)
}

/// Slow cross-check: scans every odd subset of size at least 5 in increasing
/// bitmask order and returns the first that induces a cycle.
pub fn find_odd_hole_by_subsets(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > ODD_HOLE_SUBSET_CAP {
        return Err(Error::capacity("subset odd hole oracle", n, ODD_HOLE_SUBSET_CAP));
    }
    Ok((0u64..1 << n)
        .map(VertexSet::from_bits)
        .find(|&s| is_odd_hole_set(g, s)))
}

/// Perfection of `G[s]` by the odd hole / odd antihole criterion.
pub fn is_perfect_in(g: &Graph, s: VertexSet) -> Result<bool> {
    if s.len() < 5 {
        return Ok(true);
    }
    Ok(find_odd_hole_in(g, s)?.is_none() && find_odd_antihole_in(g, s)?.is_none())
}

pub fn is_perfect(g: &Graph) -> Result<bool> {
    is_perfect_in(g, g.vertices())
}

// ---------------------------------------------------------------------------
// whole-lattice tables

/// `ω` and perfection for every vertex subset of a small graph, filled by
/// dynamic programming over subsets in increasing bitmask order.
pub struct SubsetTable {
    n: usize,
    omega: Vec<u8>,
    perfect: Vec<bool>,
}

impl SubsetTable {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_cap(g, SUBSET_TABLE_CAP)
    }

    pub fn with_cap(g: &Graph, cap: usize) -> Result<Self> {
        let n = g.n();
        if n > cap.min(SUBSET_TABLE_CAP) {
            return Err(Error::capacity("subset table", n, cap.min(SUBSET_TABLE_CAP)));
        }
        let size = 1usize << n;
        let mut omega = vec![0u8; size];
        let mut perfect = vec![true; size];
        let co = g.complement();
        for bits in 1..size as u64 {
            let s = VertexSet::from_bits(bits);
            let v = s.min().expect("nonempty");
            let rest = s.without(v);
            let with_v = 1 + omega[(rest & g.neighbors(v)).bits() as usize];
            omega[bits as usize] = omega[rest.bits() as usize].max(with_v);
            if s.len() >= 5 {
                let hereditary = s.iter().all(|u| perfect[s.without(u).bits() as usize]);
                perfect[bits as usize] = hereditary
                    && !is_odd_hole_set(g, s)
                    && !is_odd_hole_set(&co, s);
            }
        }
        Ok(SubsetTable { n, omega, perfect })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn omega(&self, s: VertexSet) -> usize {
        self.omega[s.bits() as usize] as usize
    }

    #[inline]
    pub fn is_perfect(&self, s: VertexSet) -> bool {
        self.perfect[s.bits() as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    fn paw() -> Graph {
        // triangle 0,1,2 with pendant 3 on 2
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    fn brute_cliques(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
        (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|&s| {
            s.iter().all(|u| s.iter().all(|v| u == v || g.has_edge(u, v)))
        })
    }

    fn brute_chromatic(g: &Graph) -> usize {
        // smallest k admitting a proper k-colouring, by exhaustive assignment
        let n = g.n();
        (0..=n)
            .find(|&k| {
                if k == 0 {
                    return n == 0;
                }
                let mut colors = vec![0usize; n];
                loop {
                    if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                        return true;
                    }
                    let mut i = 0;
                    loop {
                        if i == n {
                            return false;
                        }
                        colors[i] += 1;
                        if colors[i] < k {
                            break;
                        }
                        colors[i] = 0;
                        i += 1;
                    }
                }
            })
            .unwrap()
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(clique_number(&paw()), 3);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(max_clique(&paw()), [0, 1, 2].into_iter().collect());
        assert_eq!(max_clique(&Graph::cycle(5).unwrap()), [0, 1].into_iter().collect());
    }

    #[test]
    fn weighted_clique_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(max_weight_clique(&k2, &WeightFn::uniform(2)).0, 2);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(max_weight_clique(&c5, &WeightFn::uniform(5)).0, 2);
        // pendant 3 weighs 5, triangle vertices 1 each: best is {2, 3}
        let w = WeightFn::new(&paw(), vec![1, 1, 1, 5]).unwrap();
        let brute = brute_cliques(&paw()).map(|s| w.weight_of(s)).max().unwrap();
        assert_eq!(brute, 6);
        assert_eq!(max_weight_clique(&paw(), &w), (6, [2, 3].into_iter().collect()));
        let zero = WeightFn::new(&paw(), vec![0; 4]).unwrap();
        assert_eq!(max_weight_clique(&paw(), &zero), (0, VertexSet::EMPTY));
        assert!(WeightFn::new(&paw(), vec![1]).is_err());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&Graph::complete_bipartite(1, 3).unwrap()), 3);
        let fork = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(independence_number(&fork), 3);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()).unwrap(), 4);
        let pet = Graph::petersen();
        assert_eq!(brute_chromatic(&pet), 3);
        let c = exact_coloring(&pet).unwrap();
        assert_eq!(c.palette, 3);
        assert!(c.is_proper(&pet));
        assert_eq!(c.used(), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert!(matches!(
            chromatic_number(&Graph::empty(17).unwrap()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn hole_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(find_odd_hole(&c5).unwrap(), Some(c5.vertices()));
        assert_eq!(find_odd_hole(&Graph::cycle(6).unwrap()).unwrap(), None);
        let bip = Graph::complete_bipartite(3, 4).unwrap();
        assert_eq!(find_odd_hole(&bip).unwrap(), None);
        assert_eq!(find_odd_hole(&Graph::cycle(7).unwrap()).unwrap().map(|s| s.len()), Some(7));
        let co_c7 = Graph::cycle(7).unwrap().complement();
        assert_eq!(find_odd_hole(&co_c7).unwrap(), None);
        assert!(find_odd_antihole(&co_c7).unwrap().is_some());
        assert!(find_odd_hole(&Graph::empty(17).unwrap()).is_err());
        // C7 with chord 0-3 splits into C4 and C5
        let chorded = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)]).unwrap();
        assert_eq!(find_odd_hole(&chorded).unwrap(), Some([0, 3, 4, 5, 6].into_iter().collect()));
    }

    #[test]
    fn perfection_examples() {
        assert!(!is_perfect(&Graph::cycle(5).unwrap()).unwrap());
        assert!(is_perfect(&Graph::path(6).unwrap()).unwrap());
        assert!(!is_perfect(&Graph::cycle(7).unwrap().complement()).unwrap());
        assert!(is_perfect(&Graph::empty(0).unwrap()).unwrap());
        assert!(!is_perfect(&Graph::petersen()).unwrap());
    }

    #[test]
    fn subset_table_matches_searches_on_petersen() {
        let pet = Graph::petersen();
        let t = SubsetTable::new(&pet).unwrap();
        for bits in (0u64..1 << 10).step_by(7) {
            let s = VertexSet::from_bits(bits);
            assert_eq!(t.omega(s), clique_number_in(&pet, s));
            assert_eq!(t.is_perfect(s), is_perfect_in(&pet, s).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn clique_search_matches_enumeration(g in arb_graph(9)) {
            let brute = brute_cliques(&g).map(|s| s.len()).max().unwrap();
            prop_assert_eq!(clique_number(&g), brute);
            let lex = brute_cliques(&g).filter(|s| s.len() == brute).min_by(|a, b| a.lex_cmp(*b)).unwrap();
            prop_assert_eq!(max_clique(&g), lex);
            prop_assert_eq!(max_weight_clique(&g, &WeightFn::uniform(g.n())).0 as usize, brute);
        }

        #[test]
        fn weighted_matches_enumeration(g in arb_graph(8), ws in proptest::collection::vec(0u64..6, 8)) {
            let w = WeightFn::new(&g, ws[..g.n()].to_vec()).unwrap();
            let brute = brute_cliques(&g).map(|s| w.weight_of(s)).max().unwrap();
            let (best, witness) = max_weight_clique(&g, &w);
            prop_assert_eq!(best, brute);
            prop_assert_eq!(w.weight_of(witness), best);
            prop_assert!(brute_cliques(&g).any(|s| s == witness));
        }

        #[test]
        fn coloring_is_optimal(g in arb_graph(7)) {
            let c = exact_coloring(&g).unwrap();
            prop_assert!(c.is_proper(&g));
            prop_assert_eq!(c.palette, brute_chromatic(&g));
            prop_assert!(clique_number(&g) <= c.palette);
        }

        #[test]
        fn hole_search_matches_subsets(g in arb_graph(10)) {
            let fast = find_odd_hole(&g).unwrap();
            let slow = find_odd_hole_by_subsets(&g).unwrap();
            prop_assert_eq!(fast.is_some(), slow.is_some());
            if let Some(h) = fast {
                prop_assert!(is_odd_hole_set(&g, h));
            }
        }

        #[test]
        fn perfection_is_self_complementary(g in arb_graph(11)) {
            prop_assert_eq!(is_perfect(&g).unwrap(), is_perfect(&g.complement()).unwrap());
        }

        #[test]
        fn alpha_is_omega_of_complement(g in arb_graph(12)) {
            prop_assert_eq!(independence_number(&g), clique_number(&g.complement()));
        }
    }
}
