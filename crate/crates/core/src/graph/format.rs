//! Text formats: the DIMACS-style graph file, graph6 strings, and the
//! comma-separated vertex and pair lists used on the command line.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the graph file format.
///
/// ```text
/// c optional comment
/// p <n> <m>
/// e <u> <v>
/// ```
///
/// Ids are 1-based. Exactly one `p` line must precede all edges, and the
/// number of `e` lines must equal `m`; repeated edges collapse. A format
/// word after `p` (as in `p edge 4 3`) is tolerated.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate 'p' header"));
                }
                let rest: Vec<&str> = tokens.collect();
                let nums = match rest.as_slice() {
                    [n, m] => [n, m],
                    [word, n, m] if word.parse::<usize>().is_err() => [n, m],
                    _ => return Err(Error::parse(line_no, "expected 'p <n> <m>'")),
                };
                let n = parse_count(nums[0], line_no, "vertex count")?;
                if n > MAX_VERTICES {
                    return Err(Error::parse(line_no, format!("{n} vertices is too many")));
                }
                let m = parse_count(nums[1], line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line_no, "edge before 'p' header"));
                };
                let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(Error::parse(line_no, "expected 'e <u> <v>'"));
                };
                let u = parse_vertex(u, n, line_no)?;
                let v = parse_vertex(v, n, line_no)?;
                if u == v {
                    return Err(Error::parse(line_no, format!("loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line type '{other}'"),
                ));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last_line, "missing 'p' header"));
    };
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// Headers above this are rejected instead of allocated.
pub const MAX_VERTICES: usize = 1 << 20;

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} '{tok}'")))
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid vertex id '{tok}'")))?;
    if v == 0 || v > n {
        return Err(Error::parse(
            line,
            format!("vertex id {v} out of range 1..={n}"),
        ));
    }
    Ok(v - 1)
}

/// Serializes a graph; edges sorted by (min endpoint, max endpoint).
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Decodes a graph6 string (header-free form).
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(0, "graph6: byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse(0, "graph6: empty string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(0, "graph6: truncated size field"));
            }
            (six_bit_number(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(0, "graph6: truncated size field"));
            }
            (six_bit_number(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((*first - 63) as usize, rest),
    };
    // Large inputs would only allocate; real uses here are tiny pattern graphs.
    if n > 4096 {
        return Err(Error::parse(0, format!("graph6: {n} vertices is too many")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            0,
            format!("graph6: expected {expected} data bytes, got {}", body.len()),
        ));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    // Padding bits must be zero.
    if (pairs..expected * 6).any(bit) {
        return Err(Error::parse(0, "graph6: non-zero padding"));
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

fn six_bit_number(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Encodes a graph as graph6.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
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
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses `u:v[,u:v…]` with 1-based ids into 0-based pairs.
pub fn parse_pair_list(s: &str, n: usize) -> Result<Vec<(usize, usize)>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, item)| {
            let (u, v) = item
                .split_once(':')
                .ok_or_else(|| Error::parse(i + 1, format!("pair '{item}' is not 'u:v'")))?;
            Ok((
                parse_vertex(u.trim(), n, i + 1)?,
                parse_vertex(v.trim(), n, i + 1)?,
            ))
        })
        .collect()
}

/// Parses `v[,v…]` with 1-based ids into 0-based ids.
pub fn parse_vertex_list(s: &str, n: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, tok)| parse_vertex(tok.trim(), n, i + 1))
        .collect()
}
