//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Blank lines and lines starting with `#` are skipped.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let bad = |message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        let a = it.next().ok_or_else(|| bad("expected two integers"))?;
        let b = it.next().ok_or_else(|| bad("expected two integers"))?;
        if it.next().is_some() {
            return Err(bad("trailing tokens"));
        }
        Ok((
            a.parse().map_err(|_| bad("not a non-negative integer"))?,
            b.parse().map_err(|_| bad("not a non-negative integer"))?,
        ))
    };
    let (line, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = pair(line, head)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
