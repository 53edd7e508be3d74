use crate::model::AbstractGraph;

use super::CorpusError;

fn err(msg: impl Into<String>) -> CorpusError {
    CorpusError::Graph6(msg.into())
}

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

/// Canonical graph6 text (no header, no trailing newline).
pub fn write_graph6(g: &AbstractGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(63 + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(63 + (acc << (6 - bits)));
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn sextet(b: u8) -> Result<usize, CorpusError> {
    if !(63..=126).contains(&b) {
        return Err(err(format!("byte {b} outside 63..=126")));
    }
    Ok(usize::from(b - 63))
}

/// Parses one graph6 line; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<AbstractGraph, CorpusError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    let (n, rest) = if bytes[0] != 126 {
        (sextet(bytes[0])?, &bytes[1..])
    } else if bytes.get(1) != Some(&126) {
        if bytes.len() < 4 {
            return Err(err("truncated size header"));
        }
        let mut n = 0;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated size header"));
        }
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[8..])
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = total_bits.div_ceil(6);
    if rest.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k == total_bits {
                break 'outer;
            }
            let byte = sextet(rest[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for &b in rest {
        sextet(b)?;
    }
    Ok(AbstractGraph::from_edges(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_encodes_as_bw() {
        assert_eq!(write_graph6(&AbstractGraph::complete(3)), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), AbstractGraph::complete(3));
    }

    #[test]
    fn known_encodings() {
        // Cross-checked against networkx's encoder.
        assert_eq!(write_graph6(&AbstractGraph::empty(0)), "?");
        assert_eq!(write_graph6(&AbstractGraph::complete(4)), "C~");
        assert_eq!(write_graph6(&AbstractGraph::cycle(4)), "Cl");
    }

    #[test]
    fn large_header_round_trip() {
        let g = AbstractGraph::path(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn truncated_is_error() {
        let s = write_graph6(&AbstractGraph::complete(6));
        assert!(parse_graph6(&s[..s.len() - 1]).is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), AbstractGraph::complete(3));
    }
}
