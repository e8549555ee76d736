//! Text formats: edge lists, coloring files, and graph6 streams.
//!
//! Edge list: first line `n m`, then `m` lines `u v` (0-indexed vertices).
//! Coloring: first line `k=<int>`, then one line per edge `u v c`
//! (0-indexed vertices, 1-indexed colors).

use rainbow_core::coloring::ColoringError;
use rainbow_core::graph::GraphError;
use rainbow_core::graph6::{self, Graph6Error};
use rainbow_core::{EdgeColoring, Graph};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

/// Parse errors carrying one-based line numbers.
#[derive(Debug)]
pub enum FormatError {
    Io(std::io::Error),
    /// Line-level syntax problem.
    Syntax {
        line: usize,
        message: String,
    },
    Graph6 {
        line: usize,
        error: Graph6Error,
    },
    Graph {
        line: usize,
        error: GraphError,
    },
    Coloring(ColoringError),
    Empty,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Io(e) => write!(f, "io: {e}"),
            FormatError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            FormatError::Graph6 { line, error } => write!(f, "line {line}: {error}"),
            FormatError::Graph { line, error } => write!(f, "line {line}: {error}"),
            FormatError::Coloring(e) => write!(f, "coloring: {e}"),
            FormatError::Empty => write!(f, "no graph in input"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<std::io::Error> for FormatError {
    fn from(e: std::io::Error) -> Self {
        FormatError::Io(e)
    }
}

impl From<ColoringError> for FormatError {
    fn from(e: ColoringError) -> Self {
        FormatError::Coloring(e)
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::Syntax {
        line,
        message: format!("expected {what}, got {token:?}"),
    })
}

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let mut it = header.split_whitespace();
    let n = parse_usize(it.next().unwrap_or(""), line, "vertex count")?;
    let m = parse_usize(it.next().unwrap_or(""), line, "edge count")?;
    if it.next().is_some() {
        return Err(FormatError::Syntax {
            line,
            message: "expected exactly \"n m\" on the first line".into(),
        });
    }
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, row) = lines.next().ok_or(FormatError::Syntax {
            line: 0,
            message: format!("expected {m} edge lines"),
        })?;
        let mut it = row.split_whitespace();
        let u = parse_usize(it.next().unwrap_or(""), line, "vertex")?;
        let v = parse_usize(it.next().unwrap_or(""), line, "vertex")?;
        if it.next().is_some() {
            return Err(FormatError::Syntax {
                line,
                message: "expected exactly \"u v\"".into(),
            });
        }
        pairs.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::Syntax {
            line,
            message: "unexpected extra line after the declared edges".into(),
        });
    }
    Graph::from_edge_list(n, &pairs).map_err(|error| FormatError::Graph { line: 1, error })
}

/// Renders the edge-list format (trailing newline included).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the coloring format.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let k = header
        .strip_prefix("k=")
        .ok_or_else(|| FormatError::Syntax {
            line,
            message: "expected \"k=<int>\" on the first line".into(),
        })
        .and_then(|rest| parse_usize(rest.trim(), line, "color count"))?;
    let mut pairs = Vec::new();
    for (line, row) in lines {
        let mut it = row.split_whitespace();
        let u = parse_usize(it.next().unwrap_or(""), line, "vertex")?;
        let v = parse_usize(it.next().unwrap_or(""), line, "vertex")?;
        let c = parse_usize(it.next().unwrap_or(""), line, "color")?;
        if it.next().is_some() {
            return Err(FormatError::Syntax {
                line,
                message: "expected exactly \"u v c\"".into(),
            });
        }
        pairs.push(((u, v), c));
    }
    Ok(EdgeColoring::new(k, pairs)?)
}

/// Renders the coloring format (trailing newline included).
pub fn write_coloring(col: &EdgeColoring) -> String {
    let mut out = format!("k={}\n", col.k());
    for ((u, v), c) in col.iter() {
        out.push_str(&format!("{u} {v} {c}\n"));
    }
    out
}

/// Reads a single graph from text: an edge list if the first non-empty line
/// is two integers, otherwise one graph6 line.
///
/// graph6 bytes sit in 63..=126, so a digit-leading line is never graph6.
pub fn parse_graph_auto(text: &str) -> Result<Graph, FormatError> {
    let mut nonempty = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = nonempty.next().ok_or(FormatError::Empty)?;
    let looks_like_edge_list = {
        let mut it = first.split_whitespace();
        let two = (it.next(), it.next());
        matches!(
            two,
            (Some(a), Some(b)) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok()
        )
    };
    if looks_like_edge_list {
        parse_edge_list(text)
    } else {
        if let Some((extra, _)) = nonempty.next() {
            return Err(FormatError::Syntax {
                line: extra,
                message: "expected exactly one graph6 line".into(),
            });
        }
        graph6::decode(first).map_err(|error| FormatError::Graph6 { line, error })
    }
}

/// Reads a single graph from a file, sniffing the format.
pub fn read_graph_file(path: &Path) -> Result<Graph, FormatError> {
    let text = std::fs::read_to_string(path)?;
    parse_graph_auto(&text)
}

/// Reads a coloring file.
pub fn read_coloring_file(path: &Path) -> Result<EdgeColoring, FormatError> {
    let text = std::fs::read_to_string(path)?;
    parse_coloring(&text)
}

/// Enumerates connected classes of order `q.n` from a graph6 file: decodes
/// every line, keeps graphs inside the edge window, and collapses them to
/// one canonical representative per isomorphism class, sorted by
/// `(edge count, label)` like the internal generator.
pub fn enumerate_connected_from_file(
    path: &Path,
    q: &rainbow_core::enumerate::EnumerationQuery,
) -> Result<Vec<Graph>, FormatError> {
    q.validate().map_err(|e| FormatError::Syntax {
        line: 0,
        message: e.to_string(),
    })?;
    let mut by_label = std::collections::BTreeMap::new();
    for (line_no, item) in read_graph6_stream(path)?.enumerate() {
        let g = item?;
        if g.n() != q.n {
            return Err(FormatError::Syntax {
                line: line_no + 1,
                message: format!("order {} in a stream declared as order {}", g.n(), q.n),
            });
        }
        if !(q.m_min..=q.m_max).contains(&g.edge_count()) {
            continue;
        }
        if !g.is_connected() {
            return Err(FormatError::Syntax {
                line: line_no + 1,
                message: "disconnected graph in stream".into(),
            });
        }
        let rep = rainbow_core::enumerate::canonical_representative(&g).map_err(|e| {
            FormatError::Syntax {
                line: line_no + 1,
                message: e.to_string(),
            }
        })?;
        let key = (rep.edge_count(), rainbow_core::graph6::encode(&rep));
        by_label.entry(key).or_insert(rep);
    }
    Ok(by_label.into_values().collect())
}

/// Streams graphs from a graph6 file, one per line, tagging errors with
/// their line number. Blank lines are skipped.
pub fn read_graph6_stream(
    path: &Path,
) -> Result<impl Iterator<Item = Result<Graph, FormatError>>, FormatError> {
    let file = File::open(path)?;
    let reader = BufReader::new(file);
    Ok(reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(FormatError::Io(e))),
            Ok(text) => {
                let trimmed = text.trim();
                if trimmed.is_empty() {
                    None
                } else {
                    Some(
                        graph6::decode(trimmed).map_err(|error| FormatError::Graph6 {
                            line: line_no,
                            error,
                        }),
                    )
                }
            }
        }
    }))
}
