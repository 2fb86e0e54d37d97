//! graph6 encoding, plus a plain edge-list reader.
//!
//! The bit stream is the upper triangle of the adjacency matrix in column
//! order, `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte with
//! an offset of 63. Orders up to 62 use a one-byte header; 63 and above use
//! the `~` long form.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. Trailing whitespace is ignored, and an optional
/// `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end();
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(parse_err(base, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                base + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
    }

    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(parse_err(
                base + body.len(),
                "truncated 8-byte order header",
            ));
        }
        let n = body[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    } else {
        if body.len() < 4 {
            return Err(parse_err(
                base + body.len(),
                "truncated 4-byte order header",
            ));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(
            base,
            format!("order {n} exceeds the supported maximum of {MAX_VERTICES}"),
        ));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            base + body.len().min(expected),
            format!(
                "length mismatch: order {n} needs {expected} bytes, found {}",
                body.len()
            ),
        ));
    }

    let data = &body[header_len..];
    let mut builder = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                builder.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(
                base + header_len + data.len() - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(builder.build())
}

/// Encodes `g` as graph6 without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // MAX_VERTICES keeps us inside the 18-bit form.
        out.push(126);
        for shift in [12, 6, 0] {
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads the plain edge-list format: a header line `n m`, then `m` lines
/// `u v` with 0-based endpoints. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let err = |line: usize, reason: &str| Error::EdgeList {
        line,
        reason: reason.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let nums = parse_pair(header).ok_or_else(|| err(hline, "header must be `n m`"))?;
    let (n, m) = nums;
    let mut builder = GraphBuilder::new(n).map_err(|e| err(hline, &e.to_string()))?;
    let mut seen = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(text).ok_or_else(|| err(line, "expected `u v`"))?;
        builder
            .add_edge(u, v)
            .map_err(|e| err(line, &e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(err(
            hline,
            &format!("header declares {m} edges but {seen} were given"),
        ));
    }
    Ok(builder.build())
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}
