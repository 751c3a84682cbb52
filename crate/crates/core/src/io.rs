//! graph6 and edge-list text formats.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(Error::parse(0, format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => from_graph6(bytes),
        Format::EdgeList => from_edge_list(bytes),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

/// Encodes `g` in graph6: a size header, then the upper triangle column by
/// column, six bits per byte offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}

pub fn from_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes;
    while let Some((&last, rest)) = data.split_last() {
        if last.is_ascii_whitespace() {
            data = rest;
        } else {
            break;
        }
    }
    let mut offset = 0;
    if data.starts_with(b">>graph6<<") {
        offset = 10;
    }
    let sextet = |pos: usize| -> Result<u64> {
        match data.get(pos) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(&b) => Err(Error::parse(pos, format!("byte {b:#04x} is outside the graph6 range"))),
            None => Err(Error::parse(pos, "unexpected end of graph6 data")),
        }
    };
    let n;
    if sextet(offset)? < 63 {
        n = sextet(offset)? as usize;
        offset += 1;
    } else if data.get(offset + 1) != Some(&126) {
        n = (sextet(offset + 1)? << 12 | sextet(offset + 2)? << 6 | sextet(offset + 3)?) as usize;
        offset += 4;
    } else {
        let mut v = 0u64;
        for k in 0..6 {
            v = v << 6 | sextet(offset + 2 + k)?;
        }
        n = v as usize;
        offset += 8;
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    let body_len = data.len() - offset.min(data.len());
    if body_len != bytes_needed {
        return Err(Error::parse(
            offset + body_len.min(bytes_needed),
            format!("expected {bytes_needed} body bytes for {n} vertices, found {body_len}"),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let pos = offset + bit / 6;
            if sextet(pos)? >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bits_needed % 6 != 0 {
        let pad = 6 - bits_needed % 6;
        if sextet(offset + bytes_needed - 1)? & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(offset + bytes_needed - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Whitespace-separated `u v` pairs, 0-based. A first line holding a single
/// number gives the vertex count; otherwise it is one more than the largest
/// endpoint.
pub fn from_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::parse(e.valid_up_to(), "edge list is not UTF-8"))?;
    let mut tokens: Vec<(usize, usize)> = Vec::new();
    let mut declared = None;
    let mut line_start = 0;
    for (line_no, line) in text.split_inclusive('\n').enumerate() {
        let mut line_tokens = Vec::new();
        let mut col = 0;
        for piece in line.split(|c: char| c.is_ascii_whitespace()) {
            if !piece.is_empty() {
                let at = line_start + col;
                let v = piece
                    .parse::<usize>()
                    .map_err(|_| Error::parse(at, format!("`{piece}` is not a vertex index")))?;
                line_tokens.push((at, v));
            }
            col += piece.len() + 1;
        }
        if line_no == 0 && line_tokens.len() == 1 {
            declared = Some(line_tokens[0].1);
        } else {
            tokens.extend(line_tokens);
        }
        line_start += line.len();
    }
    if !tokens.len().is_multiple_of(2) {
        let (at, _) = tokens[tokens.len() - 1];
        return Err(Error::parse(at, "dangling vertex without a partner"));
    }
    let edges: Vec<(usize, usize)> = tokens.chunks(2).map(|p| (p[0].1, p[1].1)).collect();
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, edges)
}

/// First line `n`, then one `u v` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_string() {
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6(b"DQc\n").unwrap(), g);
    }

    #[test]
    fn large_header() {
        let g = Graph::new(100, (1..100).map(|i| (i - 1, i))).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(from_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(from_graph6(b"D"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6(b"DQ\x01"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(from_graph6(b"DQd"), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6(b""), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn edge_lists() {
        let g = from_edge_list(b"0 1\n1 2").unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        let g = from_edge_list(b"5\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert!(matches!(from_edge_list(b"0 0"), Err(Error::Validation(_))));
        assert!(matches!(from_edge_list(b"0 1\n2"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(from_edge_list(b"0 x"), Err(Error::Parse { offset: 2, .. })));
        assert_eq!(from_edge_list(to_edge_list(&g).as_bytes()).unwrap(), g);
    }
}
