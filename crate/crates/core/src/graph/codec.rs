//! graph6 and plain edge-list text formats.

use super::{Graph, GraphError, VertexSet};

const GRAPH6_HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_ORDER: u64 = (1 << 36) - 1;

fn push_sextets(out: &mut String, value: usize, count: usize) {
    for i in (0..count).rev() {
        out.push((((value >> (6 * i)) & 63) as u8 + 63) as char);
    }
}

/// Standard graph6: size prefix, then the upper triangle in column order
/// `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian into 6-bit chunks.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_GRAPH6_ORDER, "graph6 supports at most 2^36-1 vertices");
    let mut out = String::new();
    if n <= 62 {
        push_sextets(&mut out, n, 1);
    } else if n <= 258_047 {
        out.push('~');
        push_sextets(&mut out, n, 3);
    } else {
        out.push_str("~~");
        push_sextets(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

fn sextet(b: u8) -> Result<usize, GraphError> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as usize)
    } else {
        Err(malformed(format!("byte {b:#04x} outside the graph6 range")))
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    let read = |range: std::ops::Range<usize>| -> Result<usize, GraphError> {
        let chunk = bytes.get(range).ok_or_else(|| malformed("truncated size field"))?;
        chunk.iter().try_fold(0usize, |acc, &b| Ok((acc << 6) | sextet(b)?))
    };
    let (n, body_start) = if bytes[0] != b'~' {
        (read(0..1)?, 1)
    } else if bytes.get(1) != Some(&b'~') {
        (read(1..4)?, 4)
    } else {
        (read(2..8)?, 8)
    };
    let body = &bytes[body_start..];
    let nbits = n
        .checked_mul(n.saturating_sub(1))
        .ok_or_else(|| malformed(format!("order {n} is too large")))?
        / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(malformed(format!(
            "truncated bit section: {} of {expected} bytes",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(malformed("trailing bytes after the bit section"));
    }
    let mut rows = vec![VertexSet::empty(n); n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= nbits {
                break 'outer;
            }
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    for &b in body {
        sextet(b)?;
    }
    Ok(Graph::from_rows(rows))
}

/// `"n m"` then `m` lines `"u v"` with `u < v`, ascending.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| GraphError::MalformedEdgeList("empty input".into()))?;
    let (n, m) = parse_pair(header)
        .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad header {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let e = parse_pair(line)
            .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line {line:?}")))?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(GraphError::MalformedEdgeList(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

/// Reads either a single edge-list graph or a graph6 file with one graph per line.
///
/// The two are told apart by the first non-empty line: an edge list starts with
/// two decimal integers, which never occur in graph6 text.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>, GraphError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(line) if parse_pair(line).is_some() => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(decode_graph6)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(encode_graph6(&complete(2)), "A_");
        assert_eq!(encode_graph6(&complete(3)), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn matches_reference_strings() {
        // Five vertices with edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn long_size_prefix_round_trips() {
        let g = path(70);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_rejects_malformed_input() {
        assert!(matches!(decode_graph6(""), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("B"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("B "), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("Bww"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("~?"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(decode_graph6("~~~~~~~~"), Err(GraphError::MalformedGraph6(_))));
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(decode_graph6(">>graph6<<Bw").unwrap(), complete(3));
    }

    #[test]
    fn edge_list_round_trip_and_detection() {
        let g = cycle(5);
        let text = write_edge_list(&g);
        assert!(text.starts_with("5 5\n0 1\n0 4\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(read_graphs(&text).unwrap(), vec![g.clone()]);
        let g6 = format!("{}\n{}\n", encode_graph6(&g), encode_graph6(&path(3)));
        assert_eq!(read_graphs(&g6).unwrap(), vec![g, path(3)]);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
    }
}
