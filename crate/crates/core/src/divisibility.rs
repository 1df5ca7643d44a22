//! Perfect divisions and the colourings built from them.
//!
//! A division of `G` splits `V(G)` into `A` and `B` with `G[A]` perfect and
//! `ω(G[B]) < ω(G)`. Repeating on `B` peels off perfect layers whose clique
//! numbers strictly decrease, which colours `G` with at most `C(ω + 1, 2)`
//! colours.

use serde::{Deserialize, Serialize};

use crate::decomposition::find_homogeneous_set;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{
    clique_number, clique_number_in, exact_coloring, is_perfect, is_perfect_in,
    max_weight_clique_in, SubsetTable, WeightFn,
};
use crate::patterns::BoundShape;

/// Largest order for the exhaustive fallback of [`perfect_division`].
pub const EXHAUSTIVE_DIVISION_CAP: usize = 12;
/// Default cap for [`is_perfectly_divisible_exact`].
pub const EXACT_DIVISIBILITY_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Strategy {
    /// The whole graph is perfect.
    PerfectWhole,
    /// `A = {v} ∪ M(v)`, `B = N(v)`, with `G[M(v)]` perfect.
    NonNeighborhood { vertex: usize },
    /// Contraction of a homogeneous set and recombination of the two
    /// sub-divisions. `module` is reported in the input graph's indexing.
    HomogeneousRecursion { module: VertexSet },
    /// Scan of all vertex subsets.
    Exhaustive,
    /// Edges of a spanning tree versus the rest, on a line graph.
    SpanningTree,
}

/// Oracle values backing a division. For weighted divisions the clique values
/// are maximum clique weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionCertificate {
    pub a_perfect: bool,
    pub omega_b: u64,
    pub omega: u64,
}

impl DivisionCertificate {
    pub fn holds(&self) -> bool {
        self.a_perfect && (self.omega == 0 || self.omega_b < self.omega)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Division {
    pub a: VertexSet,
    pub b: VertexSet,
    pub strategy: Strategy,
    pub certificate: DivisionCertificate,
}

impl Division {
    /// Recomputes the certificate for `g` with the oracles and checks it.
    pub fn validate(&self, g: &Graph) -> Result<bool> {
        if (self.a & self.b) != VertexSet::EMPTY || (self.a | self.b) != g.vertices() {
            return Ok(false);
        }
        Ok(certify(g, self.a, self.b)?.holds())
    }

    /// Like [`Division::validate`], with weighted clique numbers.
    pub fn validate_weighted(&self, g: &Graph, w: &WeightFn) -> Result<bool> {
        if (self.a & self.b) != VertexSet::EMPTY || (self.a | self.b) != g.vertices() {
            return Ok(false);
        }
        Ok(certify_weighted(g, w, self.a, self.b)?.holds())
    }
}

fn certify(g: &Graph, a: VertexSet, b: VertexSet) -> Result<DivisionCertificate> {
    Ok(DivisionCertificate {
        a_perfect: is_perfect_in(g, a)?,
        omega_b: clique_number_in(g, b) as u64,
        omega: clique_number(g) as u64,
    })
}

fn certify_weighted(g: &Graph, w: &WeightFn, s: VertexSet, t: VertexSet) -> Result<DivisionCertificate> {
    Ok(DivisionCertificate {
        a_perfect: is_perfect_in(g, s)?,
        omega_b: max_weight_clique_in(g, w, t).0,
        omega: max_weight_clique_in(g, w, g.vertices()).0,
    })
}

fn checked(g: &Graph, a: VertexSet, b: VertexSet, strategy: Strategy) -> Result<Division> {
    let certificate = certify(g, a, b)?;
    let division = Division { a, b, strategy, certificate };
    if !certificate.holds() {
        return Err(invariant("division failed its postcondition", g, &division));
    }
    Ok(division)
}

fn invariant(message: &str, g: &Graph, payload: &impl Serialize) -> Error {
    let graph6 = crate::formats::emit_graph6(g).unwrap_or_default();
    Error::Invariant {
        message: message.to_string(),
        certificate: serde_json::json!({ "graph6": graph6, "detail": payload }).to_string(),
    }
}

/// First vertex `v` of `s` (ascending) with `G[M(v) ∩ s]` perfect.
fn vertex_with_perfect_non_neighborhood(g: &Graph, s: VertexSet) -> Result<Option<usize>> {
    for v in s {
        let m = s - g.neighbors(v).with(v);
        if is_perfect_in(g, m)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// A perfect division of `g`, trying in order: the whole graph, the first
/// vertex with a perfect non-neighbourhood, the weighted homogeneous-set
/// recursion with unit weights, and (for `n <= 12`) an exhaustive scan.
///
/// `Ok(None)` means the exhaustive scan proved that no division exists. When
/// the first three strategies fail on a larger graph a capacity error is
/// returned instead.
pub fn perfect_division(g: &Graph) -> Result<Option<Division>> {
    let n = g.n();
    let all = g.vertices();
    if is_perfect(g)? {
        return checked(g, all, VertexSet::EMPTY, Strategy::PerfectWhole).map(Some);
    }
    if let Some(v) = vertex_with_perfect_non_neighborhood(g, all)? {
        let a = (all - g.neighbors(v)).with(v);
        return checked(g, a, g.neighbors(v), Strategy::NonNeighborhood { vertex: v }).map(Some);
    }
    if let Some(d) = divide_weighted(g, &WeightFn::uniform(n))? {
        return checked(g, d.a, d.b, d.strategy).map(Some);
    }
    if n > EXHAUSTIVE_DIVISION_CAP {
        return Err(Error::capacity("exhaustive division", n, EXHAUSTIVE_DIVISION_CAP));
    }
    match exhaustive_division(g)? {
        Some((a, b)) => checked(g, a, b, Strategy::Exhaustive).map(Some),
        None => Ok(None),
    }
}

/// Scans candidate perfect sides by decreasing size, ties in increasing bitmask order.
pub fn exhaustive_division(g: &Graph) -> Result<Option<(VertexSet, VertexSet)>> {
    let table = SubsetTable::with_cap(g, EXHAUSTIVE_DIVISION_CAP)?;
    let all = g.vertices();
    let omega = table.omega(all);
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); g.n() + 1];
    for bits in 0..1u64 << g.n() {
        let s = VertexSet::from_bits(bits);
        by_size[s.len()].push(s);
    }
    for bucket in by_size.iter().rev() {
        for &a in bucket {
            let b = all - a;
            if table.is_perfect(a) && (omega == 0 || table.omega(b) < omega) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// A weighted division `(S, T)` of `g`: `G[S]` perfect and the maximum weight
/// of a clique in `G[T]` strictly below that of `G`.
///
/// Works on the support `U` of `w`. If some `v ∈ U` has a perfect
/// non-neighbourhood in `G[U]` the split is immediate; otherwise a homogeneous
/// set `X` of `G[U]` is contracted to its smallest vertex, weighted by the
/// maximum clique weight of `G[X]`, and the divisions of the quotient and of
/// `G[X]` are recombined. Returns `Ok(None)` when neither applies somewhere in
/// the recursion.
pub fn divide_weighted(g: &Graph, w: &WeightFn) -> Result<Option<Division>> {
    divide_weighted_impl(g, w, false)
}

fn divide_weighted_impl(g: &Graph, w: &WeightFn, skip_vertex_rule: bool) -> Result<Option<Division>> {
    if w.as_slice().len() != g.n() {
        return Err(Error::InvalidArgument("weight vector length mismatch".into()));
    }
    if w.is_zero() {
        return Err(Error::InvalidArgument(
            "all weights are zero; no split can lower the maximum clique weight".into(),
        ));
    }
    let Some((s, strategy)) = weighted_split(g, w, w.support(), skip_vertex_rule)? else {
        return Ok(None);
    };
    let t = g.vertices() - s;
    let certificate = certify_weighted(g, w, s, t)?;
    let division = Division { a: s, b: t, strategy, certificate };
    if !certificate.holds() {
        return Err(invariant("weighted division failed its postcondition", g, &division));
    }
    Ok(Some(division))
}

/// Returns the perfect side `S ⊆ u` of a weighted division of `G[u]`; the
/// other side is everything else, including zero-weight vertices.
fn weighted_split(
    g: &Graph,
    w: &WeightFn,
    u: VertexSet,
    skip_vertex_rule: bool,
) -> Result<Option<(VertexSet, Strategy)>> {
    if !skip_vertex_rule {
        if let Some(v) = vertex_with_perfect_non_neighborhood(g, u)? {
            let s = (u - g.neighbors(v)).with(v);
            return Ok(Some((s, Strategy::NonNeighborhood { vertex: v })));
        }
    }
    let (h, map) = g.induced(u)?;
    let Some(module_h) = find_homogeneous_set(&h) else {
        return Ok(None);
    };
    let lift = |s: VertexSet| -> VertexSet { s.iter().map(|i| map[i]).collect() };
    let module = lift(module_h);
    let x = module.min().expect("modules are nonempty");
    let module_weight = max_weight_clique_in(g, w, module).0;

    // Quotient: keep x as the representative of the module.
    let quotient = (u - module).with(x);
    let mut qw: Vec<u64> = w.as_slice().to_vec();
    qw[x] = module_weight;
    for v in module.without(x) {
        qw[v] = 0;
    }
    let qw = WeightFn::new(g, qw)?;
    let Some((s_q, _)) = weighted_split(g, &qw, quotient, false)? else {
        return Ok(None);
    };
    let s = if s_q.contains(x) {
        let Some((s_x, _)) = weighted_split(g, w, module, false)? else {
            return Ok(None);
        };
        s_q.without(x) | s_x
    } else {
        s_q
    };

    let t = u - s;
    let sub = WeightFn::new(g, w.as_slice().iter().enumerate().map(|(v, &x)| if u.contains(v) { x } else { 0 }).collect())?;
    let cert = DivisionCertificate {
        a_perfect: is_perfect_in(g, s)?,
        omega_b: max_weight_clique_in(g, &sub, t).0,
        omega: max_weight_clique_in(g, &sub, u).0,
    };
    if !cert.holds() {
        let detail = serde_json::json!({
            "support": u, "module": module, "perfect_side": s, "certificate": cert,
        });
        return Err(invariant("homogeneous-set recombination failed", g, &detail));
    }
    Ok(Some((s, Strategy::HomogeneousRecursion { module })))
}

/// Outcome of the exhaustive divisibility test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityVerdict {
    pub divisible: bool,
    /// A smallest vertex set inducing a subgraph with no division.
    pub obstruction: Option<VertexSet>,
}

pub fn is_perfectly_divisible_exact(g: &Graph) -> Result<bool> {
    Ok(divisibility_exact(g)?.divisible)
}

pub fn divisibility_exact(g: &Graph) -> Result<DivisibilityVerdict> {
    divisibility_exact_with_cap(g, EXACT_DIVISIBILITY_CAP)
}

/// Checks every induced subgraph for a division, smallest subgraphs first.
pub fn divisibility_exact_with_cap(g: &Graph, cap: usize) -> Result<DivisibilityVerdict> {
    let n = g.n();
    if n > cap {
        return Err(Error::capacity("exact perfect divisibility", n, cap));
    }
    let table = SubsetTable::with_cap(g, cap)?;
    let mut order: Vec<u64> = (1..1u64 << n).collect();
    order.sort_by_key(|b| (b.count_ones(), *b));
    for bits in order {
        if !has_division(&table, bits) {
            return Ok(DivisibilityVerdict {
                divisible: false,
                obstruction: Some(VertexSet::from_bits(bits)),
            });
        }
    }
    Ok(DivisibilityVerdict { divisible: true, obstruction: None })
}

fn has_division(table: &SubsetTable, s: u64) -> bool {
    let whole = VertexSet::from_bits(s);
    if table.is_perfect(whole) {
        return true;
    }
    let omega = table.omega(whole);
    // B ranges over nonempty proper submasks of s
    let mut b = (s - 1) & s;
    while b != 0 {
        let bs = VertexSet::from_bits(b);
        if table.omega(bs) < omega && table.is_perfect(VertexSet::from_bits(s & !b)) {
            return true;
        }
        b = (b - 1) & s;
    }
    false
}

/// One perfect layer of a division colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    /// Vertices still uncoloured when the layer was cut.
    pub remaining: VertexSet,
    pub omega: usize,
    pub perfect_part: VertexSet,
    pub strategy: Strategy,
    pub colors_used: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub palette: usize,
    pub omega: usize,
    pub bound: BoundShape,
    pub bound_value: u64,
    pub layers: Vec<Layer>,
    /// Set when some residual graph had no division and was coloured exactly
    /// instead; the bound is then not guaranteed by construction.
    pub fallback: Option<VertexSet>,
}

impl ColoringCertificate {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn within_bound(&self) -> bool {
        self.palette as u64 <= self.bound_value
    }
}

/// Colours `g` layer by layer: each perfect side gets `ω` fresh colours from
/// an exact colouring, then the process repeats on the other side.
pub fn color_by_division(g: &Graph) -> Result<ColoringCertificate> {
    let omega = clique_number(g);
    let mut colors = vec![usize::MAX; g.n()];
    let mut next_color = 0;
    let mut layers = Vec::new();
    let mut fallback = None;
    let mut rest = g.vertices();
    while !rest.is_empty() {
        let (h, map) = g.induced(rest)?;
        let lift = |s: VertexSet| -> VertexSet { s.iter().map(|i| map[i]).collect() };
        match perfect_division(&h)? {
            Some(div) => {
                let (ha, amap) = h.induced(div.a)?;
                let coloring = exact_coloring(&ha)?;
                let layer_omega = clique_number(&ha);
                if coloring.palette != layer_omega {
                    return Err(invariant("perfect layer needs more than ω colours", &ha, &coloring));
                }
                for (i, &c) in coloring.colors.iter().enumerate() {
                    colors[map[amap[i]]] = next_color + c;
                }
                next_color += coloring.palette;
                layers.push(Layer {
                    remaining: rest,
                    omega: clique_number(&h),
                    perfect_part: lift(div.a),
                    strategy: div.strategy,
                    colors_used: coloring.palette,
                });
                rest = lift(div.b);
            }
            None => {
                let coloring = exact_coloring(&h)?;
                for (i, &c) in coloring.colors.iter().enumerate() {
                    colors[map[i]] = next_color + c;
                }
                next_color += coloring.palette;
                fallback = Some(rest);
                rest = VertexSet::EMPTY;
            }
        }
    }
    let cert = ColoringCertificate {
        colors,
        palette: next_color,
        omega,
        bound: BoundShape::Binomial,
        bound_value: BoundShape::Binomial.evaluate(omega as u64),
        layers,
        fallback,
    };
    if !cert.is_proper(g) {
        return Err(invariant("division colouring is not proper", g, &cert));
    }
    Ok(cert)
}

/// A division of a line graph together with the line graph itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineGraphDivision {
    /// Edge of the base graph represented by each line-graph vertex.
    pub edges: Vec<(usize, usize)>,
    pub tree_edges: Vec<(usize, usize)>,
    pub division: Division,
}

/// Splits `L(g)` into the edges of a depth-first spanning tree (a perfect side,
/// being the line graph of a tree) and the remaining edges.
///
/// A depth-first tree is used because its co-tree edges never form a triangle
/// through vertices of degree 3; with a breadth-first star in `K4` the three
/// leftover edges form a triangle and the clique number does not drop.
pub fn line_graph_division(g: &Graph) -> Result<LineGraphDivision> {
    if g.edge_count() == 0 || !g.is_connected() {
        return Err(Error::InvalidArgument(
            "line graph division needs a connected graph with at least one edge".into(),
        ));
    }
    let tree = g.dfs_tree();
    match line_graph_division_using(g, &tree)? {
        Some(d) => Ok(d),
        None => {
            let (l, _) = g.line_graph()?;
            Err(invariant("spanning-tree cut did not lower ω of the line graph", &l, &tree))
        }
    }
}

/// The spanning-tree split for a caller-supplied tree; `Ok(None)` when the
/// certificate does not hold for that tree.
pub fn line_graph_division_using(
    g: &Graph,
    tree: &[(usize, usize)],
) -> Result<Option<LineGraphDivision>> {
    let (l, edges) = g.line_graph()?;
    let a: VertexSet = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| tree.contains(e))
        .map(|(i, _)| i)
        .collect();
    if a.len() != tree.len() {
        return Err(Error::InvalidArgument("tree edge missing from the graph".into()));
    }
    let b = l.vertices() - a;
    let certificate = certify(&l, a, b)?;
    if !certificate.holds() {
        return Ok(None);
    }
    Ok(Some(LineGraphDivision {
        edges,
        tree_edges: tree.to_vec(),
        division: Division { a, b, strategy: Strategy::SpanningTree, certificate },
    }))
}
