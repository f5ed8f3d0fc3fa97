//! Graph sources: a family spec, an inline graph6 string, or a file/stdin.

use std::fs;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};
use balanced_coloring::graph::{decode_graph6, parse_edge_list};
use balanced_coloring::{Coloring, FamilySpec, Graph, Mode};
use clap::Args;

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Family spec such as `K4`, `gp 10 2` or `circulant 12 1,6`; a trailing
    /// `cnb`/`nb` sets the mode.
    #[arg(value_name = "SPEC")]
    pub spec: Vec<String>,
    /// Read a graph (graph6 or edge list, detected) from FILE, or `-` for stdin.
    #[arg(long, value_name = "FILE")]
    pub input: Option<String>,
    /// Inline graph6 string.
    #[arg(long, value_name = "STRING")]
    pub graph6: Option<String>,
}

/// A resolved graph plus anything peeled off the positional tokens.
pub struct Resolved {
    pub graph: Graph,
    pub label: String,
    pub family: Option<FamilySpec>,
    pub mode: Option<Mode>,
    pub coloring: Option<Coloring>,
}

fn is_rb(tok: &str) -> bool {
    !tok.is_empty() && tok.bytes().all(|b| b == b'R' || b == b'B')
}

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Edge list when the first meaningful line starts with a digit, graph6 otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .context("input is empty")?;
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(decode_graph6(first.as_bytes())?)
    }
}

impl SourceArgs {
    /// `allow_coloring` lets an all-`R`/`B` positional token stand for `--coloring`.
    pub fn resolve(&self, allow_coloring: bool) -> Result<Resolved> {
        let mut tokens = self.spec.clone();
        let mut mode = None;
        let mut coloring = None;
        while let Some(last) = tokens.last() {
            if let Ok(m) = last.parse::<Mode>() {
                if mode.is_some() {
                    bail!("mode given twice");
                }
                mode = Some(m);
            } else if allow_coloring && is_rb(last) && coloring.is_none() {
                coloring = Some(last.parse::<Coloring>()?);
            } else {
                break;
            }
            tokens.pop();
        }
        let sources = [!tokens.is_empty(), self.input.is_some(), self.graph6.is_some()];
        match sources.iter().filter(|&&s| s).count() {
            0 => bail!("no graph given: pass a family spec, --input FILE or --graph6 STRING"),
            1 => {}
            _ => bail!("exactly one graph source is allowed"),
        }
        let (graph, label, family) = if let Some(g6) = &self.graph6 {
            (decode_graph6(g6.trim().as_bytes())?, g6.trim().to_string(), None)
        } else if let Some(path) = &self.input {
            (parse_graph_text(&read_text(path)?)?, path.clone(), None)
        } else {
            let fam = FamilySpec::parse_tokens(&tokens)?;
            (fam.build()?, fam.to_string(), Some(fam))
        };
        Ok(Resolved {
            graph,
            label,
            family,
            mode,
            coloring,
        })
    }
}
