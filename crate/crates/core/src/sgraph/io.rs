//! `.sg` text format and DOT export.
//!
//! ```text
//! # optional comments, "# name: <label>" sets the graph name
//! sg 3
//! 0 1 +
//! 1 2 -
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `sg <n>`")]
    Header { line: usize },
    #[error("missing `sg <n>` header")]
    MissingHeader,
    #[error("line {line}: malformed edge line, expected `<u> <v> <+|->`")]
    EdgeLine { line: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

const NAME_PREFIX: &str = "# name:";

pub fn read_sg(text: &str) -> Result<SignedGraph, ParseError> {
    let mut graph: Option<SignedGraph> = None;
    let mut name = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(NAME_PREFIX) {
            name = Some(rest.trim().to_string());
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                let n = match fields.as_slice() {
                    ["sg", n] => n.parse::<usize>().map_err(|_| ParseError::Header { line: line_no })?,
                    _ => return Err(ParseError::Header { line: line_no }),
                };
                graph = Some(SignedGraph::empty(n));
            }
            Some(g) => {
                let (u, v, s) = match fields.as_slice() {
                    [u, v, c] => {
                        let u = u.parse::<usize>().map_err(|_| ParseError::EdgeLine { line: line_no })?;
                        let v = v.parse::<usize>().map_err(|_| ParseError::EdgeLine { line: line_no })?;
                        let s = match *c {
                            "+" => Sign::Pos,
                            "-" => Sign::Neg,
                            _ => return Err(ParseError::EdgeLine { line: line_no }),
                        };
                        (u, v, s)
                    }
                    _ => return Err(ParseError::EdgeLine { line: line_no }),
                };
                g.insert_edge(u, v, s).map_err(|source| ParseError::Graph { line: line_no, source })?;
            }
        }
    }
    let mut g = graph.ok_or(ParseError::MissingHeader)?;
    g.name = name;
    Ok(g)
}

pub fn write_sg(g: &SignedGraph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "{} {}", NAME_PREFIX, name);
    }
    let _ = writeln!(out, "sg {}", g.order());
    for (u, v, s) in g.edges() {
        let _ = writeln!(out, "{} {} {}", u, v, s);
    }
    out
}

/// DOT rendering: positive edges solid, negative edges dashed.
pub fn export_dot(g: &SignedGraph) -> String {
    export_dot_labeled(g, None)
}

pub fn export_dot_labeled(g: &SignedGraph, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    match g.name() {
        Some(name) => {
            let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
        }
        None => out.push_str("graph {\n"),
    }
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(out, "  {} [label=\"{}\"];", v, label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {};", v);
            }
        }
    }
    for (u, v, s) in g.edges() {
        let style = match s {
            Sign::Pos => "solid",
            Sign::Neg => "dashed",
        };
        let _ = writeln!(out, "  {} -- {} [style={}];", u, v, style);
    }
    out.push_str("}\n");
    out
}
