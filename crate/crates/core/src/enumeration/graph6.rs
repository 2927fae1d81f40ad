//! graph6 encoding.
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ..`), packed six bits per
//! byte, most significant first, each byte offset by 63. `N(n)` is one byte
//! `n + 63` for `n <= 62`, `~` plus three 6-bit groups for `n <= 258047`, and
//! `~~` plus six groups beyond that.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decode one graph6 line. A leading `>>graph6<<` header and a single
/// trailing newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (start, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let body = body
        .strip_suffix('\n')
        .map(|b| b.strip_suffix('\r').unwrap_or(b))
        .unwrap_or(body);
    parse_bytes(body.as_bytes(), start)
}

fn parse_bytes(bytes: &[u8], base: usize) -> Result<Graph> {
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte {b:#04x} is outside the graph6 range 63..=126"),
            ));
        }
    }
    let group = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| (b - BIAS) as u64)
            .ok_or_else(|| Error::parse(base + i, "truncated vertex count"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::parse(base, "empty graph6 string")),
        Some(&b) if b < 126 => ((b - BIAS) as u64, 1),
        Some(_) if bytes.get(1) != Some(&126) => {
            let n = (1..4).try_fold(0u64, |acc, i| Ok::<_, Error>(acc << 6 | group(i)?))?;
            (n, 4)
        }
        Some(_) => {
            let n = (2..8).try_fold(0u64, |acc, i| Ok::<_, Error>(acc << 6 | group(i)?))?;
            (n, 8)
        }
    };
    if n > MAX_ORDER as u64 {
        return Err(Error::capacity(format!(
            "graph6 order {n} exceeds the maximum of {MAX_ORDER}"
        )));
    }
    let n = n as usize;
    let need = payload_len(n);
    let have = bytes.len() - pos;
    if have < need {
        return Err(Error::parse(
            base + bytes.len(),
            format!("expected {need} adjacency bytes for order {n}, found {have}"),
        ));
    }
    if have > need {
        return Err(Error::parse(
            base + pos + need,
            format!("trailing data after {need} adjacency bytes"),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        pos += k / 6;
        let pad = (bytes[pos] - BIAS) & ((1 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(Error::parse(base + pos, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Encode `g` as a graph6 line (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        let row = g.adjacency(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decode every non-empty line of `text`. Error offsets are relative to the
/// start of `text`.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            let g = parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?;
            graphs.push(g);
        }
        offset += line.len();
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_isolated_vertices() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g, Graph::empty(5).unwrap());
        assert_eq!(write_graph6(&g), "D??");
    }

    #[test]
    fn k2() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
    }

    #[test]
    fn known_strings() {
        // edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()), "C~");
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(write_graph6(&c4), "Cl");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn petersen() {
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(write_graph6(&g), "IheA@GUAo");
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(
            parse_graph6(">>graph6<<A_\n").unwrap(),
            Graph::complete(2).unwrap()
        );
        assert_eq!(parse_graph6("A_\r\n").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn large_order_form() {
        let g = Graph::new(64, [(0, 63), (10, 20)]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = Graph::complete(63).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn errors_carry_offsets() {
        let err = |s: &str| match parse_graph6(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("D?"), 2);
        assert_eq!(err("D???"), 3);
        assert_eq!(err("D? ?"), 2);
        assert_eq!(err("A`"), 1);
        assert_eq!(err(">>graph6<<D?"), 12);
        assert_eq!(err("~?"), 2);
        assert_eq!(err("A_ "), 2);
        // order 65 in the four-byte form is a capacity error, not a parse error
        assert!(matches!(parse_graph6("~?@@"), Err(Error::Capacity(_))));
    }

    #[test]
    fn multi_line_offsets() {
        let gs = parse_graph6_lines("A_\n\nD??\n").unwrap();
        assert_eq!(gs.len(), 2);
        match parse_graph6_lines("A_\nD?\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
    }
}
