//! Plain-text voltage graph files.
//!
//! ```text
//! # theta graph
//! vertices 2
//! edge 1 2 0
//! edge 1 2 1
//! loop 2 3
//! ```
//!
//! `vertices r` must be the first non-comment line and appear once.
//! Vertices are numbered from 1. Edges need distinct endpoints; loops are
//! written with `loop`.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{VoltageEdge, VoltageGraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

fn vertex(tok: Option<&str>, line: usize, r: usize) -> Result<usize> {
    let v: usize = field(tok, line, "vertex index")?;
    if v == 0 || v > r {
        return Err(parse_err(line, format!("vertex index {v} out of range 1..={r}")));
    }
    Ok(v - 1)
}

pub fn parse_str(text: &str) -> Result<VoltageGraph> {
    let mut r: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(keyword) = toks.next() else { continue };
        match (keyword, r) {
            ("vertices", None) => {
                let n: usize = field(toks.next(), line, "vertex count")?;
                if n == 0 {
                    return Err(parse_err(line, "vertex count must be positive"));
                }
                r = Some(n);
            }
            ("vertices", Some(_)) => return Err(parse_err(line, "duplicate 'vertices' line")),
            (_, None) => {
                return Err(parse_err(line, "first line must be 'vertices r'"));
            }
            ("edge", Some(n)) => {
                let from = vertex(toks.next(), line, n)?;
                let to = vertex(toks.next(), line, n)?;
                let voltage = field(toks.next(), line, "voltage")?;
                if from == to {
                    return Err(parse_err(line, "edge endpoints coincide; use 'loop'"));
                }
                edges.push(VoltageEdge { from, to, voltage });
            }
            ("loop", Some(n)) => {
                let at = vertex(toks.next(), line, n)?;
                let voltage = field(toks.next(), line, "voltage")?;
                edges.push(VoltageEdge {
                    from: at,
                    to: at,
                    voltage,
                });
            }
            (other, Some(_)) => {
                return Err(parse_err(line, format!("unknown keyword '{other}'")));
            }
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token '{extra}'")));
        }
    }
    let r = r.ok_or_else(|| parse_err(last_line.max(1), "missing 'vertices' line"))?;
    Ok(VoltageGraph::new(r, edges))
}

pub fn parse_file(path: impl AsRef<Path>) -> Result<VoltageGraph> {
    parse_str(&std::fs::read_to_string(path)?)
}

/// Text form accepted by [`parse_str`].
pub fn to_text(g: &VoltageGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.edges() {
        if e.is_loop() {
            let _ = writeln!(out, "loop {} {}", e.from + 1, e.voltage);
        } else {
            let _ = writeln!(out, "edge {} {} {}", e.from + 1, e.to + 1, e.voltage);
        }
    }
    out
}
