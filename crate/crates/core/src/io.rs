//! graph6 and edge-list text formats.
//!
//! graph6 follows McKay's format: a size prefix `N(n)` followed by the upper
//! triangle of the adjacency matrix in column order (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed six bits per byte with an offset of 63. Vertex order
//! is preserved; nothing is canonicalised.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u32> {
    match bytes.get(at) {
        None => Err(parse_err(at, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
        Some(&b) => Err(parse_err(at, format!("byte 0x{b:02x} outside graph6 range 63..=126"))),
    }
}

/// Decodes a single graph6 token (surrounding whitespace and an optional
/// `>>graph6<<` header are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed_start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = trimmed_start;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    let (n, mut pos) = match bytes[0] {
        126 if bytes.get(1) == Some(&126) => {
            let mut n: u64 = 0;
            for i in 2..8 {
                n = (n << 6) | u64::from(sextet(bytes, i).map_err(|e| shift(e, base))?);
            }
            (n as usize, 8)
        }
        126 => {
            let mut n: u64 = 0;
            for i in 1..4 {
                n = (n << 6) | u64::from(sextet(bytes, i).map_err(|e| shift(e, base))?);
            }
            (n as usize, 4)
        }
        _ => (sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1),
    };
    let mut b = GraphBuilder::new(n).map_err(|_| parse_err(base, format!("order {n} exceeds cap")))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() < pos + need {
        return Err(parse_err(
            base + bytes.len(),
            format!("truncated adjacency: expected {need} data bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() > pos + need {
        return Err(parse_err(base + pos + need, "trailing bytes after adjacency data"));
    }
    let mut k = 0usize;
    let mut cur = 0u32;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                cur = sextet(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
            }
            if cur >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) && cur & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_err(base + pos - 1, "nonzero padding bits"));
    }
    Ok(b.build())
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + base,
            message,
        },
        other => other,
    }
}

/// Decodes one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(parse_graph6(line).map_err(|e| shift(e, offset))?);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Encodes `g` in graph6 without header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | u8::from(g.adjacent(i, j));
            k += 1;
            if k.is_multiple_of(6) {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        cur <<= 6 - k % 6;
        out.push(cur + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a line `n m`, then `m` lines `u v` with
/// 0-based ids. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0usize, |off, line| {
            let start = *off;
            *off += line.len();
            Some((start, line))
        })
        .map(|(start, line)| (start, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let ints = |start: usize, line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = it.next().ok_or_else(|| parse_err(start, "expected two integers"))?;
            tok.parse::<usize>()
                .map_err(|_| parse_err(start, format!("invalid integer {tok:?}")))
        };
        let a = next()?;
        let b = next()?;
        if it.next().is_some() {
            return Err(parse_err(start, "expected exactly two integers"));
        }
        Ok((a, b))
    };

    let (start, header) = lines.next().ok_or_else(|| parse_err(0, "empty edge list"))?;
    let (n, m) = ints(start, header)?;
    let mut b = GraphBuilder::new(n).map_err(|e| parse_err(start, e.to_string()))?;
    let mut seen = 0;
    for (start, line) in lines {
        let (u, v) = ints(start, line)?;
        b.add_edge(u, v).map_err(|e| parse_err(start, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(text.len(), format!("header promises {m} edges, found {seen}")));
    }
    Ok(b.build())
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Reads either format: text whose first meaningful line holds two integers
/// is an edge list, anything else is graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let looks_like_edge_list = {
        let toks: Vec<&str> = first.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    };
    if looks_like_edge_list {
        parse_edge_list(text)
    } else {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != 1 {
            return Err(parse_err(0, format!("expected one graph6 line, found {}", lines.len())));
        }
        parse_graph6(lines[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);

        let star = parse_graph6("D?{").unwrap();
        assert_eq!(star.order(), 5);
        assert_eq!(star.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&star), "D?{");
    }

    #[test]
    fn single_vertex_and_empty() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::cycle(100).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap().edge_count(), 4);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(
            parse_graph6("DQ"),
            Err(Error::Parse {
                offset: 2,
                message: "truncated adjacency: expected 2 data bytes, found 1".into()
            })
        );
        assert!(matches!(parse_graph6("D\u{7f}c"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("DQcc"), Err(Error::Parse { offset: 3, .. })));
        // 'd' = 100 - 63 = 37 = 0b100101: last two bits are padding.
        assert!(matches!(parse_graph6("DQd"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn multi_line() {
        let gs = parse_graph6_lines("DQc\n\n@\nD?{\n").unwrap();
        assert_eq!(gs.len(), 3);
        let err = parse_graph6_lines("DQc\nDQ\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 6, .. }), "{err:?}");
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = Graph::cycle(5).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph_text(&text).unwrap(), g);
        assert_eq!(parse_graph_text("DQc\n").unwrap().order(), 5);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("# comment\n3 1\n0 2 # edge\n").is_ok());
    }
}
