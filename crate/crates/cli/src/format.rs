//! The `mgraph` text format.
//!
//! ```text
//! # optional comments
//! mgraph 4
//! e 1 2
//! e 2 3 2
//! e 3 4 1
//! ```
//!
//! Vertices are 1-indexed. The multiplicity defaults to 1, and repeated lines
//! for the same pair add up. [`write_graph`] emits the canonical text: the
//! header, then one line per adjacent pair in lexicographic order with the
//! multiplicity always written.

use std::fmt::Write as _;

use pointpart::{Multigraph, MAX_VERTICES};

use crate::error::CliError;

fn parse_number(token: &str, what: &str, line: usize) -> Result<u64, CliError> {
    token
        .parse::<u64>()
        .map_err(|_| CliError::parse(line, format!("{what} must be a non-negative integer, got {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<Multigraph, CliError> {
    let mut graph: Option<Multigraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match (tokens[0], graph.as_mut()) {
            ("mgraph", None) => {
                if tokens.len() != 2 {
                    return Err(CliError::parse(line, "header must be `mgraph <n>`"));
                }
                let n = parse_number(tokens[1], "vertex count", line)?;
                if n > MAX_VERTICES as u64 {
                    return Err(CliError::parse(line, format!("at most {MAX_VERTICES} vertices are supported")));
                }
                graph = Some(Multigraph::new(n as usize)?);
            }
            ("mgraph", Some(_)) => return Err(CliError::parse(line, "duplicate header")),
            ("e", None) => return Err(CliError::parse(line, "edge line before the `mgraph` header")),
            ("e", Some(g)) => {
                if !(3..=4).contains(&tokens.len()) {
                    return Err(CliError::parse(line, "edge line must be `e <u> <v> [mult]`"));
                }
                let n = g.order() as u64;
                let u = parse_number(tokens[1], "vertex", line)?;
                let v = parse_number(tokens[2], "vertex", line)?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(CliError::parse(line, format!("vertex {w} is outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(CliError::parse(line, format!("loop at vertex {u}")));
                }
                let m = match tokens.get(3) {
                    Some(tok) => parse_number(tok, "multiplicity", line)?,
                    None => 1,
                };
                if m == 0 {
                    return Err(CliError::parse(line, "multiplicity must be at least 1"));
                }
                let (u, v) = (u as usize - 1, v as usize - 1);
                let total = g.mult(u, v) as u64 + m;
                let total = u32::try_from(total).map_err(|_| CliError::parse(line, "multiplicity overflow"))?;
                g.set_mult(u, v, total)?;
            }
            (other, _) => return Err(CliError::parse(line, format!("unknown line type {other:?}"))),
        }
    }
    graph.ok_or_else(|| CliError::parse(0, "missing `mgraph <n>` header"))
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("mgraph {}\n", g.order());
    for (u, v, m) in g.pairs() {
        writeln!(out, "e {} {} {m}", u + 1, v + 1).unwrap();
    }
    out
}
