//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` (0-based).

use std::fmt::Write;

use thiserror::Error;

use super::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn pair(line_no: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let syntax = |reason: String| EdgeListError::Syntax { line: line_no, reason };
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let tok = it.next().ok_or_else(|| syntax(format!("missing {what}")))?;
        tok.parse().map_err(|_| syntax(format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(syntax(format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(EdgeListError::Syntax {
        line: 1,
        reason: "missing header `n m`".into(),
    })?;
    let (n, m) = pair(hline, header)?;
    let mut b = GraphBuilder::new(n);
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        b.try_add_edge(u, v).map_err(|source| EdgeListError::Graph { line, source })?;
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCount { declared: m, found });
    }
    Ok(b.build())
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
