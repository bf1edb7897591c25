//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (offset 63).

use super::{bit, Graph, MAX_VERTICES};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(err(
            offset,
            format!("character {:?} out of range 63..126", b as char),
        ));
    }
    Ok(u64::from(b - 63))
}

/// Decodes the size header, returning `(n, header_len)`.
fn parse_size(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let Some(&first) = bytes.first() else {
        return Err(err(base, "missing length header"));
    };
    if first != b'~' {
        return Ok((sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1));
    }
    let (start, len) = if bytes.get(1) == Some(&b'~') {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + len {
        return Err(err(base + bytes.len(), "truncated length header"));
    }
    let mut n = 0u64;
    for i in start..start + len {
        n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
    }
    Ok((n as usize, start + len))
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, msg } => Error::Graph6 {
            offset: offset + base,
            msg,
        },
        other => other,
    }
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    let (n, hdr) = parse_size(bytes, base)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[hdr..];
    if data.len() != expected {
        return Err(err(
            base + hdr + data.len().min(expected),
            format!(
                "body has {} bytes, expected {expected} for n = {n}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..nbits {
        let byte = k / 6;
        let value = sextet(data, byte).map_err(|e| shift(e, base + hdr))?;
        if value & (1 << (5 - k % 6)) != 0 {
            g.adj[i] |= bit(j);
            g.adj[j] |= bit(i);
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data.len() - 1;
        let value = sextet(data, last).map_err(|e| shift(e, base + hdr))?;
        let pad = 6 - nbits % 6;
        if value & ((1 << pad) - 1) != 0 {
            return Err(err(base + hdr + last, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` under its own vertex order (no canonical relabelling).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn empty_five() {
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(emit_graph6(&Graph::empty(5).unwrap()).unwrap(), "D??");
    }

    #[test]
    fn c5_by_hand() {
        // h = 41 = 101001, c = 36 = 100100: bits for 01,02,12,03,13,23,04,14,24,34
        let g = parse_graph6("Dhc").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3), (0, 4), (3, 4)]);
        assert_eq!(g, generate(&Family::Cycle(5)).unwrap());
    }

    #[test]
    fn k2_and_roundtrip_duw() {
        let k2 = generate(&Family::Complete(2)).unwrap();
        assert_eq!(emit_graph6(&k2).unwrap(), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        let g = parse_graph6("DUW").unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DUW");
    }

    #[test]
    fn zero_and_one_vertex() {
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn long_form_header() {
        let g = generate(&Family::Cycle(63)).unwrap();
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        assert!(matches!(parse_graph6("~?C~"), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn optional_header_and_newline() {
        assert_eq!(
            parse_graph6(">>graph6<<Dhc\n").unwrap(),
            parse_graph6("Dhc").unwrap()
        );
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // body too short
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6 { .. })));
        // out-of-range character in the body
        assert_eq!(
            parse_graph6("D? ").unwrap_err(),
            Error::Graph6 {
                offset: 2,
                msg: "character ' ' out of range 63..126".into()
            }
        );
        // n = 2 has one data bit; `@` = 000001 sets a padding bit
        assert!(matches!(
            parse_graph6("A@"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { .. })));
    }
}
