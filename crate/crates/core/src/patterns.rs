//! Named small graphs, induced-subgraph search, and recognition of
//! (fork, F)-free classes together with their known χ-binding functions.

use std::ops::ControlFlow;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::clique_number;

pub const FORK: &str = "fork";
pub const CLAW: &str = "claw";

/// A catalog entry: stable name plus graph.
#[derive(Clone, Debug)]
pub struct Pattern {
    pub name: &'static str,
    pub graph: Graph,
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("catalog graphs are well formed")
}

fn union(a: Graph, b: Graph) -> Graph {
    a.disjoint_union(&b).expect("catalog graphs are small")
}

fn build_catalog() -> Vec<Pattern> {
    let k = |n| Graph::complete(n).unwrap();
    let p = |n| Graph::path(n).unwrap();
    let c = |n| Graph::cycle(n).unwrap();
    let e = |n| Graph::empty(n).unwrap();

    // Vertex numbering follows v1..v5 of the usual itemised definitions, shifted to 0.
    let fork = g(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
    let dart = g(5, &[(0, 1), (0, 2), (0, 3), (4, 0), (4, 2), (4, 3)]);
    let banner = g(5, &[(0, 1), (0, 2), (0, 3), (4, 1), (4, 2)]);
    let bull = g(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]);
    let paw = g(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    let diamond = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
    let k5_minus_e = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]);
    let p3_k1 = union(p(3), e(1));

    let mut out = vec![
        Pattern { name: "K1", graph: k(1) },
        Pattern { name: "K2", graph: k(2) },
        Pattern { name: "K3", graph: k(3) },
        Pattern { name: "K4", graph: k(4) },
        Pattern { name: "K5", graph: k(5) },
        Pattern { name: "P3", graph: p(3) },
        Pattern { name: "P4", graph: p(4) },
        Pattern { name: "P5", graph: p(5) },
        Pattern { name: "P6", graph: p(6) },
        Pattern { name: "C4", graph: c(4) },
        Pattern { name: "C5", graph: c(5) },
        Pattern { name: "C6", graph: c(6) },
        Pattern { name: "C7", graph: c(7) },
        Pattern { name: CLAW, graph: Graph::complete_bipartite(1, 3).unwrap() },
        Pattern { name: "antifork", graph: fork.complement() },
        Pattern { name: FORK, graph: fork },
        Pattern { name: "dart", graph: dart },
        Pattern { name: "banner", graph: banner },
        Pattern { name: "bull", graph: bull },
        Pattern { name: "co-dart", graph: union(paw.clone(), e(1)) },
        Pattern { name: "co-cricket", graph: union(diamond.clone(), e(1)) },
        Pattern { name: "paw", graph: paw },
        Pattern { name: "diamond", graph: diamond },
        Pattern { name: "K2,3", graph: Graph::complete_bipartite(2, 3).unwrap() },
        Pattern { name: "2K2", graph: union(k(2), k(2)) },
        Pattern { name: "3K1", graph: e(3) },
        Pattern { name: "4K1", graph: e(4) },
        Pattern { name: "co-P3", graph: p(3).complement() },
        Pattern { name: "P3+K1", graph: p3_k1.clone() },
        Pattern { name: "K2+2K1", graph: union(k(2), e(2)) },
        Pattern { name: "K3+K1", graph: union(k(3), e(1)) },
        Pattern { name: "co-P5", graph: p(5).complement() },
        Pattern { name: "K5-e", graph: k5_minus_e },
        Pattern { name: "co-(P3+2K1)", graph: union(p3_k1, e(1)).complement() },
    ];
    out.sort_by_key(|p| p.name);
    out
}

/// All catalog entries, sorted by name.
pub fn catalog() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Looks up a pattern by its stable name (`K1,3` is accepted for `claw`).
pub fn pattern(name: &str) -> Result<&'static Graph> {
    let key = if name == "K1,3" { CLAW } else { name };
    catalog()
        .binary_search_by_key(&key, |p| p.name)
        .map(|i| &catalog()[i].graph)
        .map_err(|_| Error::UnknownPattern(name.to_string()))
}

/// An induced copy of a named pattern: `map[i]` is the host vertex playing
/// pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: String,
    pub map: Vec<usize>,
}

impl PatternWitness {
    /// Re-checks that the map is an injective, adjacency- and
    /// non-adjacency-preserving embedding.
    pub fn validate(&self, host: &Graph) -> Result<bool> {
        let pat = pattern(&self.pattern)?;
        Ok(is_induced_embedding(host, pat, &self.map))
    }

    pub fn vertices(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

pub fn is_induced_embedding(host: &Graph, pat: &Graph, map: &[usize]) -> bool {
    if map.len() != pat.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..pat.n()).all(|i| (0..i).all(|j| pat.has_edge(i, j) == host.has_edge(map[i], map[j])))
}

struct Matcher<'a> {
    host: &'a Graph,
    pat: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn new<'a>(host: &'a Graph, pat: &'a Graph) -> Matcher<'a> {
        let mut order: Vec<usize> = (0..pat.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pat.degree(v)), v));
        Matcher { host, pat, order, map: vec![usize::MAX; pat.n()] }
    }

    fn search<F>(&mut self, depth: usize, used: VertexSet, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let p = self.order[depth];
        let need = self.pat.degree(p);
        let mut cand = self.host.vertices() - used;
        for &q in &self.order[..depth] {
            let h = self.host.neighbors(self.map[q]);
            if self.pat.has_edge(p, q) {
                cand &= h;
            } else {
                cand -= h;
            }
        }
        for v in cand {
            if self.host.degree(v) < need {
                continue;
            }
            self.map[p] = v;
            self.search(depth + 1, used.with(v), visit)?;
        }
        self.map[p] = usize::MAX;
        ControlFlow::Continue(())
    }
}

/// First induced embedding of `pat` into `host`, or `None`.
///
/// Pattern vertices are placed in descending-degree order and host candidates
/// are tried in ascending order, so the witness is the least one under that
/// order.
pub fn find_induced(host: &Graph, pat: &Graph) -> Option<Vec<usize>> {
    if pat.n() > host.n() {
        return None;
    }
    let mut found = None;
    let mut m = Matcher::new(host, pat);
    let _ = m.search(0, VertexSet::EMPTY, &mut |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Every induced embedding of `pat` into `host` (one per injective map).
pub fn induced_embeddings(host: &Graph, pat: &Graph) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    if pat.n() <= host.n() {
        let mut m = Matcher::new(host, pat);
        let _ = m.search(0, VertexSet::EMPTY, &mut |map| {
            all.push(map.to_vec());
            ControlFlow::Continue(())
        });
    }
    all
}

/// First occurrence of a named pattern.
pub fn find_pattern(host: &Graph, name: &str) -> Result<Option<PatternWitness>> {
    let pat = pattern(name)?;
    Ok(find_induced(host, pat).map(|map| PatternWitness {
        pattern: name.to_string(),
        map,
    }))
}

/// First occurrence of any of `names`, scanned in the given order.
pub fn find_any(host: &Graph, names: &[&str]) -> Result<Option<PatternWitness>> {
    for name in names {
        pattern(name)?;
    }
    for name in names {
        if let Some(w) = find_pattern(host, name)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Whether `host` contains none of `names` as an induced subgraph.
pub fn is_free(host: &Graph, names: &[&str]) -> Result<bool> {
    Ok(find_any(host, names)?.is_none())
}

/// A vertex with three pairwise nonadjacent neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawCenter {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// Smallest claw centre with its lexicographically smallest leaf triad.
pub fn claw_center(g: &Graph) -> Option<ClawCenter> {
    (0..g.n()).find_map(|v| triad_in(g, g.neighbors(v)).map(|leaves| ClawCenter { center: v, leaves }))
}

/// Every claw centre of `g`.
pub fn claw_centers(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| triad_in(g, g.neighbors(v)).is_some()).collect()
}

fn triad_in(g: &Graph, s: VertexSet) -> Option<[usize; 3]> {
    for a in s {
        let sa = s - g.neighbors(a).with(a);
        for b in sa.iter().filter(|&b| b > a) {
            if let Some(c) = (sa - g.neighbors(b)).iter().find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// bounds

/// Symbolic χ-binding function `f(ω)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum BoundShape {
    Constant { value: u64 },
    /// `slope * ω + offset`
    Linear { slope: u64, offset: u64 },
    /// `C(ω + 1, 2)`
    Binomial,
    /// `ω²`
    Square,
}

impl BoundShape {
    pub fn evaluate(self, omega: u64) -> u64 {
        match self {
            BoundShape::Constant { value } => value,
            BoundShape::Linear { slope, offset } => slope * omega + offset,
            BoundShape::Binomial => omega * (omega + 1) / 2,
            BoundShape::Square => omega * omega,
        }
    }
}

/// One (fork, F) class of the recognition menu.
#[derive(Clone, Copy, Debug)]
pub struct ClassSpec {
    pub forbidden: &'static str,
    /// Explicit χ-binding function, when one is known.
    pub bound: Option<BoundShape>,
    /// One of the six classes with a perfect-division structure theorem.
    pub structural: bool,
}

const fn class(forbidden: &'static str, bound: Option<BoundShape>, structural: bool) -> ClassSpec {
    ClassSpec { forbidden, bound, structural }
}

use BoundShape::*;

/// The recognition menu.
pub const CLASSES: &[ClassSpec] = &[
    class("K3", Some(Constant { value: 3 }), false),
    class("P3", Some(Linear { slope: 1, offset: 0 }), false),
    class("co-P3", Some(Linear { slope: 1, offset: 0 }), false),
    class("P4", None, false),
    class("C4", None, false),
    class("K4", None, false),
    class("diamond", None, false),
    class("K3+K1", None, false),
    class("paw", None, false),
    class("2K2", Some(Binomial), false),
    class(CLAW, Some(Square), false),
    class("P3+K1", Some(Binomial), false),
    class("K2+2K1", None, false),
    class("4K1", None, false),
    class("K5-e", Some(Linear { slope: 1, offset: 1 }), false),
    class("co-(P3+2K1)", Some(Linear { slope: 1, offset: 1 }), false),
    class("antifork", Some(Linear { slope: 2, offset: 0 }), false),
    class("P6", Some(Binomial), true),
    class("dart", Some(Square), true),
    class("co-dart", Some(Binomial), true),
    class("banner", Some(Square), true),
    class("co-cricket", Some(Square), true),
    class("bull", Some(Binomial), true),
];

/// The six classes carrying a structure theorem, in menu order.
pub fn structural_classes() -> impl Iterator<Item = &'static ClassSpec> {
    CLASSES.iter().filter(|c| c.structural)
}

pub fn class_spec(forbidden: &str) -> Option<&'static ClassSpec> {
    CLASSES.iter().find(|c| c.forbidden == forbidden)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub forbidden: String,
    pub member: bool,
    /// Induced copy of F when the graph is fork-free but not F-free.
    pub witness: Option<PatternWitness>,
    pub bound: Option<BoundShape>,
    pub bound_value: Option<u64>,
    pub structural: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightestBound {
    pub forbidden: String,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub n: usize,
    pub omega: usize,
    pub fork_free: bool,
    pub fork_witness: Option<PatternWitness>,
    pub classes: Vec<ClassEntry>,
    pub tightest: Option<TightestBound>,
}

impl ClassReport {
    pub fn entry(&self, forbidden: &str) -> Option<&ClassEntry> {
        self.classes.iter().find(|c| c.forbidden == forbidden)
    }

    pub fn is_member(&self, forbidden: &str) -> bool {
        self.entry(forbidden).is_some_and(|c| c.member)
    }
}

/// Recognises every (fork, F) class of the menu and evaluates the applicable bounds.
pub fn classify(g: &Graph) -> ClassReport {
    let omega = clique_number(g);
    let fork_witness = find_pattern(g, FORK).expect("fork is in the catalog");
    let fork_free = fork_witness.is_none();
    let classes: Vec<ClassEntry> = CLASSES
        .iter()
        .map(|spec| {
            let witness = if fork_free {
                find_pattern(g, spec.forbidden).expect("menu patterns are in the catalog")
            } else {
                None
            };
            let member = fork_free && witness.is_none();
            ClassEntry {
                forbidden: spec.forbidden.to_string(),
                member,
                witness,
                bound: spec.bound,
                bound_value: spec.bound.filter(|_| member).map(|b| b.evaluate(omega as u64)),
                structural: spec.structural,
            }
        })
        .collect();
    let tightest = classes
        .iter()
        .filter_map(|c| c.bound_value.map(|v| (v, &c.forbidden)))
        .min()
        .map(|(value, f)| TightestBound { forbidden: f.clone(), value });
    ClassReport {
        n: g.n(),
        omega,
        fork_free,
        fork_witness,
        classes,
        tightest,
    }
}
