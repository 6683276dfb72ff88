//! Text graph formats. All vertex labels in files are 1-indexed.
//!
//! Edge list:
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines)
//! ```
//!
//! Adjacency matrix: a line with `n`, then `n` rows of `n` whitespace
//! separated `0`/`1` entries. The diagonal is ignored; the off-diagonal part
//! must be symmetric.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use kpack_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Structure(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Edges,
    Adj,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "edges" => Ok(Format::Edges),
            "adj" => Ok(Format::Adj),
            other => Err(format!("unknown format `{}` (expected edges or adj)", other)),
        }
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| at(line, format!("`{}` is not a non-negative integer", tok))))
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::Structure("empty input".into()))?;
    let (n, m) = match numbers(hline, header)?[..] {
        [n, m] => (n, m),
        _ => return Err(at(hline, "header must be `n m`")),
    };
    if n == 0 {
        return Err(at(hline, "graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let (u, v) = match numbers(line, body)?[..] {
            [u, v] => (u, v),
            _ => return Err(at(line, "edge line must be `u v`")),
        };
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(at(line, format!("vertex {} out of range 1..{}", w, n)));
            }
        }
        if u == v {
            return Err(at(line, format!("self-loop on vertex {}", u)));
        }
        if edges.len() == m {
            return Err(at(line, format!("more than the {} edges declared in the header", m)));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(ParseError::Structure(format!(
            "header declares {} edges, found {}",
            m,
            edges.len()
        )));
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn parse_adjacency_matrix(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| ParseError::Structure("empty input".into()))?;
    let n = match numbers(hline, header)?[..] {
        [n] if n > 0 => n,
        _ => return Err(at(hline, "header must be a single positive `n`")),
    };
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
    for (line, body) in lines {
        let row = numbers(line, body)?;
        if row.len() != n {
            return Err(at(line, format!("row has {} entries, expected {}", row.len(), n)));
        }
        if let Some(bad) = row.iter().find(|&&x| x > 1) {
            return Err(at(line, format!("entry {} is not 0 or 1", bad)));
        }
        if rows.len() == n {
            return Err(at(line, format!("more than {} rows", n)));
        }
        rows.push((line, row));
    }
    if rows.len() != n {
        return Err(ParseError::Structure(format!("expected {} rows, found {}", n, rows.len())));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rows[i].1[j] != rows[j].1[i] {
                return Err(at(
                    rows[i].0,
                    format!("matrix is not symmetric at ({}, {})", i + 1, j + 1),
                ));
            }
            if rows[i].1[j] == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Edges => parse_edge_list(text),
        Format::Adj => parse_adjacency_matrix(text),
    }
}

pub fn read_graph(path: &Path, format: Format) -> Result<Graph, ParseError> {
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text, format)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn write_adjacency_matrix(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for u in 0..g.n() {
        let row: Vec<&str> = (0..g.n()).map(|v| if g.has_edge(u, v) { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
