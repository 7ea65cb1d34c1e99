//! Parsing of command-line operands: graph names, rationals, colorings.

use std::path::Path;

use gallai::counting::Coloring;
use gallai::graph::{graph6_decode, make_named, Graph, NamedGraph};
use gallai::templates::Template;
use gallai::{Error, Result};
use num_rational::Rational64;

fn number(s: &str) -> Option<usize> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

/// `K<n>`, `K<a>,<b>`, `C<n>`, `B<q>`, `@<edge-list file>` or graph6.
pub fn parse_graph(spec: &str) -> Result<Graph> {
    if let Some(path) = spec.strip_prefix('@') {
        return Graph::parse_edge_list(&std::fs::read_to_string(path)?);
    }
    let named = if let Some(rest) = spec.strip_prefix('K') {
        match rest.split_once(',') {
            Some((a, b)) => number(a)
                .zip(number(b))
                .map(|(a, b)| NamedGraph::CompleteBipartite(a, b)),
            None => number(rest).map(NamedGraph::Complete),
        }
    } else if let Some(rest) = spec.strip_prefix('C') {
        number(rest).map(NamedGraph::Cycle)
    } else if let Some(rest) = spec.strip_prefix('B') {
        number(rest).map(NamedGraph::Book)
    } else {
        None
    };
    match named {
        Some(kind) => make_named(&kind),
        None => graph6_decode(spec),
    }
}

/// `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidParameter(format!("expected a rational `p/q`, got `{s}`"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<i64>().map_err(|_| bad())?,
            q.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational64::new(p, q))
}

/// Colors of `g`'s edges in lexicographic edge order, comma separated.
pub fn parse_coloring(g: &Graph, r: usize, s: &str) -> Result<Coloring> {
    let colors = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| Error::InvalidInput(format!("`{t}` is not a color")))
        })
        .collect::<Result<Vec<u8>>>()?;
    Coloring::new(g, r, colors)
}

pub fn read_template(path: &Path) -> Result<Template> {
    Template::parse_text(&std::fs::read_to_string(path)?)
}
