//! Text formats: header-less graph6, DIMACS edge format, and plain edge lists.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the single-byte graph6 size field.
pub const GRAPH6_MAX_N: usize = 62;

/// Encodes `g` as header-less graph6 (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::capacity("graph6 encoding", n, GRAPH6_MAX_N));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one header-less graph6 record. Surrounding whitespace is not accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let err = |offset: usize, message: String| Error::Graph6 { offset, message };
    let Some(&first) = line.first() else {
        return Err(err(0, "empty input".into()));
    };
    if first == b'>' {
        return Err(err(0, "graph6 headers are not supported".into()));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first} outside 63..=126")));
    }
    if first == 126 {
        return Err(err(0, format!("multi-byte sizes (n > {GRAPH6_MAX_N}) are not supported")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &line[1..];
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(1 + pos, format!("byte {} outside 63..=126", body[pos])));
    }
    if body.len() < nbytes {
        return Err(err(line.len(), format!("expected {nbytes} data bytes, got {}", body.len())));
    }
    if body.len() > nbytes {
        return Err(err(1 + nbytes, "trailing bytes after adjacency data".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[nbytes - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(nbytes, "non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// Parses every non-blank line of `text` as graph6.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim().as_bytes()).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// DIMACS edge format: `c` comments, one `p edge n m` header, `e u v` lines with
/// 1-based endpoints. Duplicate edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let perr = |message: String| Error::Parse { line, message };
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(perr("duplicate problem line".into()));
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(perr(format!("malformed header `{raw}`")));
                }
                let nv: usize = toks[2].parse().map_err(|_| perr(format!("bad vertex count `{}`", toks[2])))?;
                toks[3].parse::<usize>().map_err(|_| perr(format!("bad edge count `{}`", toks[3])))?;
                n = Some(nv);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| perr("edge line before problem line".into()))?;
                if toks.len() != 3 {
                    return Err(perr(format!("malformed edge line `{raw}`")));
                }
                let u = parse_index(toks[1], line)?;
                let v = parse_index(toks[2], line)?;
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(perr(format!("vertex out of range 1..={nv}")));
                }
                if u == v {
                    return Err(perr(format!("self-loop at vertex {u}")));
                }
                edges.insert((u.min(v) - 1, u.max(v) - 1));
            }
            Some(other) => return Err(perr(format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing `p edge n m` line".into(),
    })?;
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>())
}

/// Edge list: one `u v` pair per line, 0-based. A line holding a single integer
/// fixes the vertex count; otherwise it is `max index + 1`. `#` starts a comment.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = BTreeSet::new();
    let mut max_index: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.len() {
            0 => continue,
            1 => {
                if declared.is_some() {
                    return Err(Error::Parse { line, message: "duplicate vertex count".into() });
                }
                declared = Some(parse_index(toks[0], line)?);
            }
            2 => {
                let u = parse_index(toks[0], line)?;
                let v = parse_index(toks[1], line)?;
                if u == v {
                    return Err(Error::Parse { line, message: format!("self-loop at vertex {u}") });
                }
                max_index = Some(max_index.unwrap_or(0).max(u).max(v));
                edges.insert((u.min(v), u.max(v)));
            }
            _ => {
                return Err(Error::Parse { line, message: format!("expected `u v`, got `{raw}`") });
            }
        }
    }
    let inferred = max_index.map_or(0, |m| m + 1);
    let n = match declared {
        Some(d) if d < inferred => {
            return Err(Error::Parse {
                line: 0,
                message: format!("vertex {} out of range for declared n = {d}", inferred - 1),
            })
        }
        Some(d) => d,
        None => inferred,
    };
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>())
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex index, got `{tok}`"),
    })
}
