//! Text formats: graph6 and a plain edge list.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("graph6: byte out of range in {line:?}")));
    }
    let (n, rest) = match bytes {
        [] => return Err(parse_err("graph6: empty line")),
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(parse_err("graph6: truncated size field"));
            }
            let n = tail[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(parse_err("graph6: truncated size field"));
            }
            let n = tail[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &tail[3..])
        }
        [b, tail @ ..] => ((b - 63) as usize, tail),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if rest.len() != needed {
        return Err(parse_err(format!(
            "graph6: expected {needed} adjacency bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, edges)
}

/// Encodes a graph as a single graph6 line (no header, no newline).
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
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are ignored.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| parse_err("edge list: missing header"))?;
    let nums = |line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(format!("edge list: bad integer {t:?}")))
            })
            .collect()
    };
    let (n, m) = match nums(header)?.as_slice() {
        [n, m] => (*n, *m),
        _ => return Err(parse_err(format!("edge list: bad header {header:?}"))),
    };
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        match nums(line)?.as_slice() {
            [u, v] => pairs.push((*u, *v)),
            _ => return Err(parse_err(format!("edge list: bad edge line {line:?}"))),
        }
    }
    if pairs.len() != m {
        return Err(parse_err(format!(
            "edge list: header announces {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::from_edge_list(n, pairs)
}

pub fn to_edge_list_text(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // Reference encodings from the nauty documentation and tools.
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_size_field_round_trips() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn edge_list_text() {
        let text = "# triangle\n3 3\n0 1\n1 2\n\n# closing edge\n2 0\n";
        let g = from_edge_list_text(text).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(from_edge_list_text(&to_edge_list_text(&g)).unwrap(), g);
        assert!(from_edge_list_text("3 2\n0 1\n").is_err());
        assert!(from_edge_list_text("2 1\n0 0\n").is_err());
        assert!(from_edge_list_text("1 0\n").unwrap().n() == 1);
    }
}
