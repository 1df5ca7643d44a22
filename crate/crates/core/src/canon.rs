//! Canonical labelling for small graphs.
//!
//! Vertices are first split into cells by iterated degree refinement, which is
//! invariant under relabelling. The canonical ordering is then the one, among
//! all orderings that list the cells in refinement order, whose column-order
//! upper-triangle adjacency string is lexicographically smallest. The result is
//! returned as graph6 bytes of the relabelled graph.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::formats::emit_graph6;
use crate::graph::{Graph, VertexSet};

/// Default cap on the order accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Byte string identifying an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative in graph6.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_cap(g, CANONICAL_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    let order = canonical_order_with_cap(g, cap)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let relabelled = g.permute(&perm)?;
    Ok(CanonicalForm(emit_graph6(&relabelled)?.into_bytes()))
}

/// The canonical vertex order: position `i` holds the original vertex placed at `i`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    canonical_order_with_cap(g, CANONICAL_CAP)
}

fn canonical_order_with_cap(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if n > cap {
        return Err(Error::capacity("canonical form", n, cap));
    }
    let cells = refine(g);
    let mut search = Search {
        g,
        cells: &cells,
        order: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
        best_columns: Vec::new(),
        best_order: Vec::new(),
    };
    search.run(VertexSet::EMPTY, 0);
    Ok(search.best_order)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Ordered cells of the stable degree refinement.
fn refine(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = distinct(&color);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> = signatures
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        color = signatures.iter().map(|s| rank[s]).collect();
        let count = distinct(&color);
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = vec![VertexSet::EMPTY; classes];
    let mut ranks: Vec<usize> = color.clone();
    ranks.sort_unstable();
    ranks.dedup();
    for (v, c) in color.iter().enumerate() {
        let idx = ranks.binary_search(c).expect("color present");
        cells[idx].insert(v);
    }
    cells
}

fn distinct(values: &[usize]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    cells: &'a [VertexSet],
    order: Vec<usize>,
    /// Column `j` packs the adjacency of position `j` to positions `0..j`,
    /// most significant bit first.
    columns: Vec<u64>,
    best_columns: Vec<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, used: VertexSet, cell: usize) {
        let pos = self.order.len();
        if pos == self.g.n() {
            // equal-or-better prefixes are the only ones that reach here
            if self.best_order.is_empty() || self.columns < self.best_columns {
                self.best_columns = self.columns.clone();
                self.best_order = self.order.clone();
            }
            return;
        }
        let mut cell = cell;
        while (self.cells[cell] - used).is_empty() {
            cell += 1;
        }
        let candidates = self.cells[cell] - used;
        let mut options: Vec<(u64, usize)> = candidates
            .iter()
            .map(|v| {
                let mut col = 0u64;
                for &u in &self.order {
                    col = col << 1 | self.g.has_edge(u, v) as u64;
                }
                (col, v)
            })
            .collect();
        options.sort_unstable();
        let min_col = options[0].0;
        for (col, v) in options {
            if col != min_col {
                break;
            }
            if !self.best_order.is_empty() {
                // compare the prefix including this column against the best so far
                let better_or_equal = {
                    let prefix = &self.columns[..pos];
                    let best = &self.best_columns[..pos];
                    match prefix.cmp(best) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Greater => false,
                        std::cmp::Ordering::Equal => col <= self.best_columns[pos],
                    }
                };
                if !better_or_equal {
                    continue;
                }
            }
            self.order.push(v);
            self.columns.push(col);
            self.run(used.with(v), cell);
            self.order.pop();
            self.columns.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    /// Minimum over all n! orderings of the column-order bit string.
    fn brute_min_string(g: &Graph) -> Vec<bool> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<bool>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let mut s = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    s.push(g.has_edge(p[i], p[j]));
                }
            }
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        });
        best.unwrap_or_default()
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n() && brute_min_string(a) == brute_min_string(b)
    }

    #[test]
    fn self_complementary_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&c5.complement()).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(brute_isomorphic(&p4, &p4.complement()));
        assert!(are_isomorphic(&p4, &p4.complement()).unwrap());
        let k3k1 = Graph::complete(3).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(!are_isomorphic(&k3k1, &paw).unwrap());
    }

    #[test]
    fn capacity() {
        assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
        assert!(canonical_form_with_cap(&Graph::empty(11).unwrap(), 12).is_ok());
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap().as_graph6(), "?");
    }

    #[test]
    fn refinement_does_not_separate_regular_graphs() {
        assert_eq!(refine(&Graph::petersen()).len(), 1);
        assert_eq!(refine(&Graph::path(5).unwrap()).len(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn invariant_under_permutation(g in arb_graph(9), seed in any::<u64>()) {
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.permute(&perm).unwrap();
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }

        #[test]
        fn agrees_with_brute_force(a in arb_graph(6), b in arb_graph(6)) {
            let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
            prop_assert_eq!(same, brute_isomorphic(&a, &b));
        }
    }
}
