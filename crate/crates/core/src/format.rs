//! Text formats for instances and solutions.
//!
//! Instances: `p edge <n> <m>` followed by `m` lines `e <u> <v>`, or
//! `p arc <n> <m>` followed by `m` lines `a <u> <v>`. Vertices are 1-based.
//! Lines starting with `#` are comments; blank lines are skipped.
//!
//! Solutions: one `e <u> <v>` or `a <u> <v>` line per deleted edge/arc.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{Digraph, EdgeSet, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Undirected(Graph),
    Directed(Digraph),
}

impl Instance {
    pub fn n(&self) -> usize {
        match self {
            Instance::Undirected(g) => g.n(),
            Instance::Directed(d) => d.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            Instance::Undirected(g) => g.m(),
            Instance::Directed(d) => d.m(),
        }
    }
}

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what} `{tok}`")))
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v = parse_num(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(ParseError::new(
            line,
            format!("vertex {v} out of range 1..={n}"),
        ));
    }
    Ok(v - 1)
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut recs = records(text);
    let (hline, header) = recs
        .next()
        .ok_or_else(|| ParseError::new(0, "missing `p` header"))?;
    let (directed, n, m) = match header.as_slice() {
        ["p", kind @ ("edge" | "arc"), n, m] => (
            *kind == "arc",
            parse_num(n, hline, "vertex count")?,
            parse_num(m, hline, "edge count")?,
        ),
        _ => return Err(ParseError::new(hline, "malformed header")),
    };
    let tag = if directed { "a" } else { "e" };

    let mut pairs = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    let mut last_line = hline;
    for (line, toks) in recs {
        last_line = line;
        let (u, v) = match toks.as_slice() {
            [t, u, v] if *t == tag => (parse_vertex(u, n, line)?, parse_vertex(v, n, line)?),
            [t, ..] if *t == "p" => return Err(ParseError::new(line, "duplicate header")),
            _ => {
                return Err(ParseError::new(
                    line,
                    format!("expected `{tag} <u> <v>` record"),
                ))
            }
        };
        if u == v {
            return Err(ParseError::new(line, "self-loop"));
        }
        let key = if directed {
            (u, v)
        } else {
            (u.min(v), u.max(v))
        };
        if !seen.insert(key) {
            let what = if directed {
                "duplicate arc"
            } else {
                "duplicate edge"
            };
            return Err(ParseError::new(line, what));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(ParseError::new(
            last_line,
            format!("header declares {m} records but {} were found", pairs.len()),
        ));
    }

    let invalid = |e: crate::Error| ParseError::new(0, e.to_string());
    Ok(if directed {
        Instance::Directed(Digraph::from_arcs(n, &pairs).map_err(invalid)?)
    } else {
        Instance::Undirected(Graph::from_edges(n, &pairs).map_err(invalid)?)
    })
}

pub fn serialize_instance(instance: &Instance) -> String {
    let (kind, tag, n, pairs) = match instance {
        Instance::Undirected(g) => ("edge", 'e', g.n(), g.edges()),
        Instance::Directed(d) => ("arc", 'a', d.n(), d.arcs()),
    };
    let mut out = format!("p {kind} {n} {}\n", pairs.len());
    for &(u, v) in pairs {
        let _ = writeln!(out, "{tag} {} {}", u + 1, v + 1);
    }
    out
}

/// Parses a solution file into 0-based endpoint pairs. `directed` selects
/// whether `a` or `e` records are expected.
pub fn parse_solution(text: &str, directed: bool) -> Result<Vec<(usize, usize)>, ParseError> {
    let tag = if directed { "a" } else { "e" };
    records(text)
        .map(|(line, toks)| match toks.as_slice() {
            [t, u, v] if *t == tag => {
                let u = parse_num(u, line, "vertex")?;
                let v = parse_num(v, line, "vertex")?;
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, "vertices are 1-based"));
                }
                Ok((u - 1, v - 1))
            }
            _ => Err(ParseError::new(
                line,
                format!("expected `{tag} <u> <v>` record"),
            )),
        })
        .collect()
}

/// One `e u v` / `a u v` line per member of `set`, in id order.
pub fn serialize_solution(instance: &Instance, set: &EdgeSet) -> String {
    let mut out = String::new();
    for id in set.iter() {
        let (tag, (u, v)) = match instance {
            Instance::Undirected(g) => ('e', g.edge(id)),
            Instance::Directed(d) => ('a', d.arc(id)),
        };
        let _ = writeln!(out, "{tag} {} {}", u + 1, v + 1);
    }
    out
}

/// Maps solution endpoint pairs onto edge ids of `instance`. Returns `None`
/// if a pair is not an edge/arc of the instance or is listed twice.
pub fn resolve_solution(instance: &Instance, pairs: &[(usize, usize)]) -> Option<EdgeSet> {
    let mut set = EdgeSet::new(instance.m());
    for &(u, v) in pairs {
        let id = match instance {
            Instance::Undirected(g) => g.find_edge(u, v)?,
            Instance::Directed(d) => d.find_arc(u, v)?,
        };
        if set.contains(id) {
            return None;
        }
        set.insert(id);
    }
    Some(set)
}
