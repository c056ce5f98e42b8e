//! Text formats for instances and solutions.
//!
//! Instance file:
//! ```text
//! # optional comments
//! EVD 2 1        <- kind r k
//! 3 2            <- n m
//! 0 1
//! 1 2
//! ```
//! Solution file: one element per line, `V v` for a deleted vertex,
//! `E- u v` for a deleted edge, `E+ u v` for an added edge.

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_graph_lines};
use crate::graph::serialize_graph;
use crate::problem::{Edit, Instance, Kind, Solution};
use std::fmt::Write;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing 'kind r k' header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let [kind, r, k] = toks[..] else {
        return Err(parse_err(line, format!("expected 'kind r k', got '{header}'")));
    };
    let kind: Kind = kind.parse().map_err(|e: Error| parse_err(line, e.to_string()))?;
    let num = |tok: &str, what: &str| {
        tok.parse::<usize>()
            .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
    };
    let (r, k) = (num(r, "r")?, num(k, "k")?);
    let graph = parse_graph_lines(&mut lines)?;
    Instance::new(kind, r, k, graph).map_err(|e| parse_err(line, e.to_string()))
}

/// Canonical instance text; each comment becomes a `# ` line on top.
pub fn serialize_instance(inst: &Instance, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "{} {} {}", inst.kind, inst.r, inst.k).unwrap();
    out.push_str(&serialize_graph(&inst.graph));
    out
}

/// Parses a solution; an empty file is the empty solution for `kind`.
pub fn parse_solution(text: &str, kind: Kind) -> Result<Solution> {
    let mut vertices = Vec::new();
    let mut edits = Vec::new();
    for (line, content) in content_lines(text) {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let num = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line, format!("invalid vertex '{tok}'")))
        };
        match toks[..] {
            ["V", v] => vertices.push(num(v)?),
            ["E-", u, v] => edits.push(Edit::delete(num(u)?, num(v)?)),
            ["E+", u, v] => edits.push(Edit::add(num(u)?, num(v)?)),
            _ => {
                return Err(parse_err(
                    line,
                    format!("expected 'V v', 'E- u v' or 'E+ u v', got '{content}'"),
                ))
            }
        }
        if !vertices.is_empty() && !edits.is_empty() {
            return Err(parse_err(line, "vertex and edge lines cannot be mixed"));
        }
    }
    Ok(match (vertices.is_empty(), edits.is_empty()) {
        (false, _) => Solution::vertices(vertices),
        (_, false) => Solution::edits(edits),
        _ => Solution::empty_for(kind),
    })
}

pub fn serialize_solution(sol: &Solution) -> String {
    let mut out = String::new();
    match sol {
        Solution::Vertices(vs) => {
            for v in vs {
                writeln!(out, "V {v}").unwrap();
            }
        }
        Solution::Edits(es) => {
            for e in es {
                let sign = match e.op {
                    crate::problem::EditOp::Delete => '-',
                    crate::problem::EditOp::Add => '+',
                };
                writeln!(out, "E{sign} {} {}", e.u, e.v).unwrap();
            }
        }
    }
    out
}
