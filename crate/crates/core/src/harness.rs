//! Corpus generation and the structural-claim verification registry.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::canon::canonical_form;
use crate::decomposition::find_homogeneous_set;
use crate::divisibility::{color_by_division, divisibility_exact, line_graph_division};
use crate::error::{Error, Result};
use crate::formats::{emit_graph6, parse_graph6};
use crate::graph::Graph;
use crate::oracles::{chromatic_number, find_odd_hole_in, is_perfect_in};
use crate::patterns::{claw_center, classify, find_any, find_pattern, FORK};

/// Largest order accepted by [`enumerate_nonisomorphic`].
pub const ENUMERATION_CAP: usize = 8;
/// Name and version of the G(n, p) bit stream. Changing the sampling scheme
/// requires a new name.
pub const GNP_GENERATOR: &str = "chacha8-v1";
/// Largest edge count for which the line graph is tested exhaustively.
pub const LINE_GRAPH_EXACT_EDGES: usize = 9;

/// Every simple graph on `n` vertices up to isomorphism, each relabelled to
/// its canonical form. Built by extending each representative on `n - 1`
/// vertices with one vertex in all `2^(n-1)` ways.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::capacity("non-isomorphic enumeration", n, ENUMERATION_CAP));
    }
    let mut level = vec![Graph::empty(0)?];
    for k in 1..=n {
        let children: Vec<Vec<(Vec<u8>, Graph)>> = level
            .par_iter()
            .map(|parent| {
                (0u64..1 << (k - 1))
                    .map(|mask| {
                        let child = extend(parent, mask);
                        let form = canonical_form(&child).expect("within the canonical cap");
                        let g = parse_graph6(form.as_bytes()).expect("canonical forms are graph6");
                        (form.as_bytes().to_vec(), g)
                    })
                    .collect()
            })
            .collect();
        let mut seen = HashSet::new();
        level = children
            .into_iter()
            .flatten()
            .filter_map(|(form, g)| seen.insert(form).then_some(g))
            .collect();
    }
    Ok(level)
}

fn extend(parent: &Graph, mask: u64) -> Graph {
    let k = parent.n();
    let mut rows: Vec<u64> = parent.rows().to_vec();
    for (u, row) in rows.iter_mut().enumerate() {
        if mask >> u & 1 == 1 {
            *row |= 1 << k;
        }
    }
    rows.push(mask);
    Graph::from_rows(rows).expect("extension keeps rows symmetric")
}

/// All graphs on `1..=n` vertices up to isomorphism, smallest orders first.
pub fn enumerate_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_nonisomorphic(k)?);
    }
    Ok(out)
}

/// An edge probability `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidArgument(format!("probability {num}/{den} not in [0, 1]")));
        }
        Ok(Probability { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `a/b` or a decimal such as `0.25`.
impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse probability `{s}`"));
        if let Some((a, b)) = s.split_once('/') {
            return Probability::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int.checked_mul(den).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
        Probability::new(num, den)
    }
}

/// G(n, p) sample. Pairs are visited in graph6 column order; each consumes one
/// `u64` from ChaCha8 seeded with `seed` and becomes an edge iff
/// `x / 2^64 < p`.
pub fn random_gnp(n: usize, p: Probability, seed: u64) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limit = (p.num as u128) << 64;
    for j in 1..n {
        for i in 0..j {
            if (rng.next_u64() as u128) * (p.den as u128) < limit {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

// ---------------------------------------------------------------------------
// checks

/// Result of one check on one graph.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    /// Hypothesis does not apply.
    Vacuous,
    Holds,
    Fails(Value),
}

/// One structural claim, verified graph by graph.
#[derive(Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub hypothesis: &'static str,
    pub assertion: &'static str,
    eval: fn(&Graph) -> Result<Outcome>,
}

impl fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).finish_non_exhaustive()
    }
}

impl TheoremCheck {
    pub fn evaluate(&self, g: &Graph) -> Result<Outcome> {
        (self.eval)(g)
    }
}

static CHECKS: &[TheoremCheck] = &[
    TheoremCheck {
        id: "T1",
        hypothesis: "(fork, P6)-free and not perfectly divisible",
        assertion: "has a homogeneous set",
        eval: t1,
    },
    TheoremCheck {
        id: "T1-contra",
        hypothesis: "(fork, P6)-free with no homogeneous set",
        assertion: "perfectly divisible",
        eval: t1_contra,
    },
    TheoremCheck {
        id: "T2",
        hypothesis: "(fork, P6)-free or (P3+K1)-free",
        assertion: "perfectly divisible",
        eval: t2,
    },
    TheoremCheck {
        id: "T3",
        hypothesis: "connected, (fork, dart)-free, contains a claw",
        assertion: "G[M(v)] perfect for every claw center v",
        eval: t3,
    },
    TheoremCheck {
        id: "T4",
        hypothesis: "connected and (fork, co-dart)-free",
        assertion: "has a homogeneous set, or G[M(v)] perfect for every v",
        eval: t4,
    },
    TheoremCheck {
        id: "T5",
        hypothesis: "banner-free with no homogeneous set",
        assertion: "K2,3-free",
        eval: t5,
    },
    TheoremCheck {
        id: "T6",
        hypothesis: "(fork, banner)-free and contains a claw",
        assertion: "has a homogeneous set, or G[M(v)] perfect for some v",
        eval: t6,
    },
    TheoremCheck {
        id: "T7",
        hypothesis: "(fork, co-cricket)-free",
        assertion: "claw-free, or has a homogeneous set, or G[M(u)] perfect for every u",
        eval: t7,
    },
    TheoremCheck {
        id: "T8",
        hypothesis: "(fork, bull)-free with no homogeneous set",
        assertion: "every G[M(v)] has no odd hole and no induced co-P5",
        eval: t8,
    },
    TheoremCheck {
        id: "T9",
        hypothesis: "connected with at least one edge",
        assertion: "spanning-tree division of L(G) validates; L(G) perfectly divisible when |E| <= 9",
        eval: t9,
    },
    TheoremCheck {
        id: "T10",
        hypothesis: "fork-free",
        assertion: "perfectly divisible",
        eval: t10,
    },
    TheoremCheck {
        id: "chi-audit",
        hypothesis: "member of a (fork, F) class with a known binding function",
        assertion: "chi within every applicable bound; division colouring within C(w+1, 2) unless it fell back",
        eval: chi_audit,
    },
];

pub fn checks() -> &'static [TheoremCheck] {
    CHECKS
}

/// Looks up a check by id; `all` is not a check (see [`resolve_checks`]).
pub fn check(id: &str) -> Result<&'static TheoremCheck> {
    CHECKS
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{id}`")))
}

/// Expands `all` to the whole registry.
pub fn resolve_checks(id: &str) -> Result<Vec<&'static TheoremCheck>> {
    if id.eq_ignore_ascii_case("all") {
        Ok(CHECKS.iter().collect())
    } else {
        check(id).map(|c| vec![c])
    }
}

fn free(g: &Graph, names: &[&str]) -> Result<bool> {
    Ok(find_any(g, names)?.is_none())
}

fn perfect_non_neighborhood(g: &Graph, v: usize) -> Result<bool> {
    is_perfect_in(g, g.non_neighborhood(v)?)
}

fn verdict(ok: bool, detail: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(detail())
    }
}

fn t1(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK, "P6"])? {
        return Ok(Outcome::Vacuous);
    }
    let exact = divisibility_exact(g)?;
    if exact.divisible {
        return Ok(Outcome::Vacuous);
    }
    Ok(verdict(find_homogeneous_set(g).is_some(), || json!({ "obstruction": exact.obstruction })))
}

fn t1_contra(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK, "P6"])? || find_homogeneous_set(g).is_some() {
        return Ok(Outcome::Vacuous);
    }
    let exact = divisibility_exact(g)?;
    Ok(verdict(exact.divisible, || json!({ "obstruction": exact.obstruction })))
}

fn t2(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK, "P6"])? && !free(g, &["P3+K1"])? {
        return Ok(Outcome::Vacuous);
    }
    let exact = divisibility_exact(g)?;
    Ok(verdict(exact.divisible, || json!({ "obstruction": exact.obstruction })))
}

fn t3(g: &Graph) -> Result<Outcome> {
    if !g.is_connected() || !free(g, &[FORK, "dart"])? || claw_center(g).is_none() {
        return Ok(Outcome::Vacuous);
    }
    for v in crate::patterns::claw_centers(g) {
        if !perfect_non_neighborhood(g, v)? {
            return Ok(Outcome::Fails(json!({ "claw_center": v, "non_neighborhood": g.non_neighborhood(v)? })));
        }
    }
    Ok(Outcome::Holds)
}

fn first_imperfect_non_neighborhood(g: &Graph) -> Result<Option<usize>> {
    for v in 0..g.n() {
        if !perfect_non_neighborhood(g, v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn t4(g: &Graph) -> Result<Outcome> {
    if !g.is_connected() || !free(g, &[FORK, "co-dart"])? {
        return Ok(Outcome::Vacuous);
    }
    if find_homogeneous_set(g).is_some() {
        return Ok(Outcome::Holds);
    }
    let bad = first_imperfect_non_neighborhood(g)?;
    Ok(verdict(bad.is_none(), || json!({ "vertex": bad })))
}

fn t5(g: &Graph) -> Result<Outcome> {
    if !free(g, &["banner"])? || find_homogeneous_set(g).is_some() {
        return Ok(Outcome::Vacuous);
    }
    let hit = find_pattern(g, "K2,3")?;
    Ok(verdict(hit.is_none(), || json!({ "k23": hit })))
}

fn t6(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK, "banner"])? || claw_center(g).is_none() {
        return Ok(Outcome::Vacuous);
    }
    if find_homogeneous_set(g).is_some() {
        return Ok(Outcome::Holds);
    }
    for v in 0..g.n() {
        if perfect_non_neighborhood(g, v)? {
            return Ok(Outcome::Holds);
        }
    }
    Ok(Outcome::Fails(json!({ "reason": "no vertex with a perfect non-neighborhood" })))
}

fn t7(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK, "co-cricket"])? {
        return Ok(Outcome::Vacuous);
    }
    if claw_center(g).is_none() || find_homogeneous_set(g).is_some() {
        return Ok(Outcome::Holds);
    }
    let bad = first_imperfect_non_neighborhood(g)?;
    Ok(verdict(bad.is_none(), || json!({ "vertex": bad })))
}

fn t8(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK, "bull"])? || find_homogeneous_set(g).is_some() {
        return Ok(Outcome::Vacuous);
    }
    for v in 0..g.n() {
        let m = g.non_neighborhood(v)?;
        if let Some(hole) = find_odd_hole_in(g, m)? {
            return Ok(Outcome::Fails(json!({ "vertex": v, "odd_hole": hole })));
        }
        let (h, map) = g.induced(m)?;
        if let Some(w) = find_pattern(&h, "co-P5")? {
            let lifted: Vec<usize> = w.map.iter().map(|&i| map[i]).collect();
            return Ok(Outcome::Fails(json!({ "vertex": v, "co_p5": lifted })));
        }
    }
    Ok(Outcome::Holds)
}

fn t9(g: &Graph) -> Result<Outcome> {
    if g.edge_count() == 0 || !g.is_connected() {
        return Ok(Outcome::Vacuous);
    }
    let d = match line_graph_division(g) {
        Ok(d) => d,
        Err(e @ Error::Invariant { .. }) => return Ok(Outcome::Fails(json!({ "error": e.to_string() }))),
        Err(e) => return Err(e),
    };
    let (l, _) = g.line_graph()?;
    if !d.division.validate(&l)? {
        return Ok(Outcome::Fails(json!({ "division": d.division })));
    }
    if g.edge_count() <= LINE_GRAPH_EXACT_EDGES {
        let exact = divisibility_exact(&l)?;
        if !exact.divisible {
            return Ok(Outcome::Fails(json!({ "line_graph_obstruction": exact.obstruction })));
        }
    }
    Ok(Outcome::Holds)
}

fn t10(g: &Graph) -> Result<Outcome> {
    if !free(g, &[FORK])? {
        return Ok(Outcome::Vacuous);
    }
    let exact = divisibility_exact(g)?;
    Ok(verdict(exact.divisible, || json!({ "obstruction": exact.obstruction })))
}

fn chi_audit(g: &Graph) -> Result<Outcome> {
    let report = classify(g);
    let bounded: Vec<_> = report.classes.iter().filter(|c| c.bound_value.is_some()).collect();
    if bounded.is_empty() {
        return Ok(Outcome::Vacuous);
    }
    let chi = chromatic_number(g)? as u64;
    let mut violations: Vec<Value> = bounded
        .iter()
        .filter(|c| chi > c.bound_value.unwrap())
        .map(|c| json!({ "class": c.forbidden, "chi": chi, "bound": c.bound_value }))
        .collect();
    let coloring = color_by_division(g)?;
    if coloring.fallback.is_none() && !coloring.within_bound() {
        violations.push(json!({ "division_palette": coloring.palette, "bound": coloring.bound_value }));
    }
    Ok(verdict(violations.is_empty(), || json!({ "omega": report.omega, "violations": violations })))
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub check: String,
    pub hypothesis: String,
    pub assertion: String,
    pub corpus: String,
    pub scanned: usize,
    pub matching: usize,
    pub skipped: Vec<Skipped>,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

/// A named list of graphs.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub description: String,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    /// Every graph on `1..=n` vertices up to isomorphism.
    pub fn all_up_to(n: usize) -> Result<Self> {
        Ok(Corpus {
            description: format!("all non-isomorphic graphs on 1..={n} vertices"),
            graphs: enumerate_up_to(n)?,
        })
    }

    pub fn new(description: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Corpus { description: description.into(), graphs }
    }
}

/// Runs `check` over the corpus in parallel. Capacity errors skip the graph;
/// any other error counts as a counterexample. Both lists are sorted by graph6.
pub fn run_check(check: &TheoremCheck, corpus: &Corpus) -> TheoremReport {
    let start = Instant::now();
    let outcomes: Vec<(String, Result<Outcome>)> = corpus
        .graphs
        .par_iter()
        .map(|g| (emit_graph6(g).unwrap_or_default(), check.evaluate(g)))
        .collect();
    let mut report = TheoremReport {
        check: check.id.to_string(),
        hypothesis: check.hypothesis.to_string(),
        assertion: check.assertion.to_string(),
        corpus: corpus.description.clone(),
        scanned: outcomes.len(),
        matching: 0,
        skipped: Vec::new(),
        counterexamples: Vec::new(),
        passed: true,
        wall_time_ms: None,
    };
    for (graph6, outcome) in outcomes {
        match outcome {
            Ok(Outcome::Vacuous) => {}
            Ok(Outcome::Holds) => report.matching += 1,
            Ok(Outcome::Fails(detail)) => {
                report.matching += 1;
                report.counterexamples.push(Counterexample { graph6, detail });
            }
            Err(e) if e.is_capacity() => report.skipped.push(Skipped { graph6, reason: e.to_string() }),
            Err(e) => report.counterexamples.push(Counterexample {
                graph6,
                detail: json!({ "error": e.to_string() }),
            }),
        }
    }
    report.counterexamples.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.skipped.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.passed = report.counterexamples.is_empty();
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    report
}

/// The `chi-audit` entry of the registry.
pub fn chi_bound_audit(corpus: &Corpus) -> TheoremReport {
    run_check(check("chi-audit").expect("registered"), corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    /// Canonical string by trying all n! relabellings; independent of the
    /// refinement-based canonical form.
    fn brute_canonical(g: &Graph) -> Vec<bool> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<bool>> = None;
        loop {
            let bits: Vec<bool> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .map(|(i, j)| g.has_edge(perm[i], perm[j]))
                .collect();
            if best.as_ref().is_none_or(|b| bits > *b) {
                best = Some(bits);
            }
            if !next_permutation(&mut perm) {
                return best.unwrap_or_default();
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn automorphisms(g: &Graph) -> u64 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            if g.edges().all(|(u, v)| g.has_edge(perm[u], perm[v])) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                return count;
            }
        }
    }

    #[test]
    fn counts_match_labelled_enumeration() {
        // n <= 5: group every labelled graph by its brute-force canonical string
        for n in 1..=5 {
            let pairs = n * (n - 1) / 2;
            let classes: HashSet<Vec<bool>> = (0u64..1 << pairs)
                .map(|mask| {
                    let edges: Vec<(usize, usize)> = (1..n)
                        .flat_map(|j| (0..j).map(move |i| (i, j)))
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, e)| e)
                        .collect();
                    brute_canonical(&Graph::from_edges(n, &edges).unwrap())
                })
                .collect();
            assert_eq!(enumerate_nonisomorphic(n).unwrap().len(), classes.len());
        }
    }

    #[test]
    fn counts_and_orbit_identity() {
        let expected = [1usize, 1, 2, 4, 11, 34, 156, 1044];
        let factorial = |n: usize| (1..=n as u64).product::<u64>();
        for (n, &count) in expected.iter().enumerate() {
            let reps = enumerate_nonisomorphic(n).unwrap();
            assert_eq!(reps.len(), count, "n = {n}");
            let forms: HashSet<Vec<bool>> = reps.iter().map(brute_canonical).collect();
            assert_eq!(forms.len(), reps.len(), "duplicate class at n = {n}");
            let labelled: u64 = reps.iter().map(|g| factorial(n) / automorphisms(g)).sum();
            assert_eq!(labelled, 1 << (n * n.saturating_sub(1) / 2), "n = {n}");
        }
        assert!(enumerate_nonisomorphic(9).is_err());
    }

    #[test]
    fn gnp_is_seeded_and_versioned() {
        let half = Probability::new(1, 2).unwrap();
        let a = random_gnp(10, half, 42).unwrap();
        assert_eq!(a, random_gnp(10, half, 42).unwrap());
        assert_eq!(emit_graph6(&a).unwrap(), GNP_GOLDEN);
        assert_eq!(random_gnp(8, Probability::new(0, 1).unwrap(), 1).unwrap().edge_count(), 0);
        assert_eq!(random_gnp(8, Probability::new(1, 1).unwrap(), 1).unwrap(), Graph::complete(8).unwrap());
        assert_eq!(GNP_GENERATOR, "chacha8-v1");
    }

    /// Recorded from the first build; (n, p, seed) = (10, 1/2, 42).
    const GNP_GOLDEN: &str = "IJcD|o[o_";

    #[test]
    fn probability_parsing() {
        assert_eq!("1/2".parse::<Probability>().unwrap(), Probability::new(1, 2).unwrap());
        assert_eq!("0.25".parse::<Probability>().unwrap(), Probability::new(25, 100).unwrap());
        assert_eq!("1".parse::<Probability>().unwrap(), Probability::new(1, 1).unwrap());
        assert!("1.5".parse::<Probability>().is_err());
        assert!("3/2".parse::<Probability>().is_err());
        assert!("x".parse::<Probability>().is_err());
        assert!("1/0".parse::<Probability>().is_err());
    }

    #[test]
    fn enumerated_graphs_are_pairwise_non_isomorphic() {
        let reps = enumerate_nonisomorphic(4).unwrap();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!are_isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn registry() {
        assert_eq!(resolve_checks("all").unwrap().len(), 12);
        assert_eq!(check("t3").unwrap().id, "T3");
        assert!(check("T11").is_err());
        let ids: HashSet<_> = checks().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), checks().len());
    }

    #[test]
    fn small_corpus_checks_pass() {
        let corpus = Corpus::all_up_to(6).unwrap();
        for id in ["T3", "T5", "T10"] {
            let r = run_check(check(id).unwrap(), &corpus);
            assert!(r.passed, "{id}: {:?}", r.counterexamples);
            assert!(r.matching > 0, "{id} is vacuous");
            assert_eq!(r.scanned, 1 + 2 + 4 + 11 + 34 + 156);
        }
    }

    #[test]
    fn check_outcomes_on_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(check("T10").unwrap().evaluate(&c5).unwrap(), Outcome::Holds);
        assert_eq!(check("chi-audit").unwrap().evaluate(&c5).unwrap(), Outcome::Holds);
        let fork = crate::patterns::pattern(FORK).unwrap();
        assert_eq!(check("T10").unwrap().evaluate(fork).unwrap(), Outcome::Vacuous);
        // a disconnected claw-plus-C5 breaks the non-neighbourhood claim, which
        // is why the connectivity hypothesis is there
        let claw = crate::patterns::pattern("claw").unwrap();
        let g = claw.disjoint_union(&c5).unwrap();
        assert_eq!(t3(&g).unwrap(), Outcome::Vacuous);
    }
}
