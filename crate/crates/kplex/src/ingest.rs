//! Edge-list parsing, file loading, and basic graph statistics.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use thiserror::Error;

use crate::graph::{degeneracy_order, Graph};

/// Errors raised while reading an edge list.
#[derive(Debug, Error)]
pub enum IngestError {
    #[error(transparent)]
    Io(#[from] io::Error),
    /// A non-comment line did not start with two integer tokens.
    /// `line` is 1-based and counts every physical line of the input.
    #[error("line {line}: expected two integer endpoints, got {content:?}")]
    Parse { line: u64, content: String },
}

/// Parses whitespace-separated edge lines into `(u, v)` label pairs.
///
/// Blank lines and lines whose first non-whitespace character is `#` or `%`
/// are skipped. Each remaining line must begin with two integer tokens;
/// anything after them (weights, timestamps) is ignored. Trailing `\r` from
/// CRLF input is tolerated.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Vec<(u64, u64)>, IngestError> {
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let parsed = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => match (a.parse::<u64>(), b.parse::<u64>()) {
                (Ok(u), Ok(v)) => Some((u, v)),
                _ => None,
            },
            _ => None,
        };
        match parsed {
            Some(pair) => edges.push(pair),
            None => {
                return Err(IngestError::Parse {
                    line: idx as u64 + 1,
                    content: trimmed.to_string(),
                })
            }
        }
    }
    Ok(edges)
}

/// Reads an edge-list file and builds the graph.
pub fn load(path: &Path) -> Result<Graph, IngestError> {
    let file = File::open(path)?;
    let edges = parse_edge_list(BufReader::new(file))?;
    Ok(Graph::from_edges(edges))
}

/// Headline numbers for a loaded graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub vertices: u64,
    pub edges: u64,
    pub max_degree: u32,
    pub degeneracy: u32,
}

/// Computes vertex and edge counts, maximum degree, and degeneracy.
pub fn stats(g: &Graph) -> GraphStats {
    GraphStats {
        vertices: g.vertex_count() as u64,
        edges: g.edge_count(),
        max_degree: g.max_degree() as u32,
        degeneracy: degeneracy_order(g).degeneracy(),
    }
}
