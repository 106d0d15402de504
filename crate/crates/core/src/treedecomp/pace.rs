//! PACE 2017 `.td` files.
//!
//! ```text
//! c comment
//! s td <bags> <width+1> <n>
//! b <id> <v> <v> ...
//! <id> <id>
//! ```
//!
//! Bag and vertex ids are 1-based.

use std::fmt::Write as _;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Writes `td` for a graph with `n` vertices.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for &v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Parses a `.td` file, returning the decomposition and the declared vertex
/// count. Checks the header counts, bag ids, vertex ranges and that the
/// number of tree edges is one less than the number of bags.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        let num = |tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| Error::parse(line_no, format!("invalid number '{tok}'")))
        };
        match tokens[0] {
            "s" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate 's' line"));
                }
                if tokens.len() != 5 || tokens[1] != "td" {
                    return Err(Error::parse(
                        line_no,
                        "expected 's td <bags> <width+1> <n>'",
                    ));
                }
                let (nb, size, n) = (num(tokens[2])?, num(tokens[3])?, num(tokens[4])?);
                if nb > 1_000_000 {
                    return Err(Error::parse(line_no, "too many bags"));
                }
                bags = vec![None; nb];
                header = Some((nb, size, n));
            }
            "b" => {
                let Some((nb, size, n)) = header else {
                    return Err(Error::parse(line_no, "bag before 's' line"));
                };
                if tokens.len() < 2 {
                    return Err(Error::parse(line_no, "bag line without id"));
                }
                let id = num(tokens[1])?;
                if id == 0 || id > nb {
                    return Err(Error::parse(line_no, format!("bag id {id} out of range")));
                }
                if bags[id - 1].is_some() {
                    return Err(Error::parse(line_no, format!("bag {id} listed twice")));
                }
                let mut members = Vec::with_capacity(tokens.len() - 2);
                for tok in &tokens[2..] {
                    let v = num(tok)?;
                    if v == 0 || v > n {
                        return Err(Error::parse(line_no, format!("vertex {v} out of range")));
                    }
                    members.push(v - 1);
                }
                let bag: VertexSet = members.into();
                if bag.len() > size {
                    return Err(Error::parse(line_no, "bag larger than declared width + 1"));
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let Some((nb, _, _)) = header else {
                    return Err(Error::parse(line_no, "edge before 's' line"));
                };
                if tokens.len() != 2 {
                    return Err(Error::parse(line_no, "expected '<bag> <bag>'"));
                }
                let (a, b) = (num(tokens[0])?, num(tokens[1])?);
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(Error::parse(line_no, "tree edge references unknown bag"));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let Some((nb, size, n)) = header else {
        return Err(Error::parse(last, "missing 's td' line"));
    };
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(last, format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    if nb > 0 && edges.len() != nb - 1 {
        return Err(Error::parse(
            last,
            format!("{} tree edges for {nb} bags", edges.len()),
        ));
    }
    let td = TreeDecomposition { bags, edges };
    if nb > 0 && td.width() + 1 != size {
        return Err(Error::parse(last, "declared width does not match bags"));
    }
    Ok((td, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;
    use crate::treedecomp::{decompose, validate_decomposition};

    #[test]
    fn round_trip() {
        let q3 = fixtures::q3();
        let td = decompose(&q3.graph);
        let text = write_td(&td, q3.graph.n());
        assert!(text.starts_with(&format!("s td {} {} 8\n", td.bags.len(), td.width() + 1)));
        let (back, n) = parse_td(&text).unwrap();
        assert_eq!(n, 8);
        assert_eq!(back, td);
        assert!(validate_decomposition(&q3.graph, &back));
    }

    #[test]
    fn rejects_bad_files() {
        for text in [
            "b 1 1\n",
            "s td 1 2 2\nb 2 1 2\n",
            "s td 1 1 2\nb 1 1 2\n",
            "s td 2 2 2\nb 1 1 2\nb 2 2\n",
            "s td 2 2 2\nb 1 1 2\nb 2 2\n1 3\n",
            "s td 1 2 2\nb 1 1 3\n",
            "s td 1 2 2\nb 1 1 2\nb 1 1 2\n",
            "",
        ] {
            assert!(parse_td(text).is_err(), "{text:?} should fail");
        }
    }

    #[test]
    fn parses_pace_example() {
        let text = "c example\ns td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n";
        let (td, n) = parse_td(text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(td.width(), 1);
        assert_eq!(td.edges, vec![(0, 1), (1, 2)]);
    }
}
