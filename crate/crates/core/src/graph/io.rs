//! Text formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `u < v`, 0-based,
//! in lexicographic order.
//!
//! Weighted complete graph: first line `k`, then one line `i j p/q` per pair
//! `i < j` in pair order.

use std::fmt::Write as _;

use super::{Graph, GraphBuilder, WeightedCompleteGraph};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(format!("line {line}: missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(format!("line {line}: bad {what}")))
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse("empty edge list"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(toks.next(), hl, "vertex count")?;
    let m = parse_usize(toks.next(), hl, "edge count")?;
    let mut b = GraphBuilder::new(n);
    let mut seen = 0;
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        let u = parse_usize(toks.next(), ln, "endpoint")?;
        let v = parse_usize(toks.next(), ln, "endpoint")?;
        if u >= v {
            return Err(Error::parse(format!(
                "line {ln}: expected u < v, got {u} {v}"
            )));
        }
        if v >= n {
            return Err(Error::parse(format!("line {ln}: vertex {v} out of range")));
        }
        if b.has_edge(u, v) {
            return Err(Error::parse(format!("line {ln}: duplicate edge {u} {v}")));
        }
        b.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(format!(
            "header announces {m} edges, found {seen}"
        )));
    }
    Ok(b.build())
}

pub fn write_weighted(w: &WeightedCompleteGraph) -> String {
    let mut out = format!("{}\n", w.k());
    for (i, j, x) in w.pairs() {
        let _ = writeln!(out, "{i} {j} {}", format_rational(&x));
    }
    out
}

pub fn read_weighted(text: &str) -> Result<WeightedCompleteGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse("empty weighted graph"))?;
    let k = parse_usize(header.split_whitespace().next(), hl, "vertex count")?;
    let mut weights = vec![None; k * k.saturating_sub(1) / 2];
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        let i = parse_usize(toks.next(), ln, "vertex")?;
        let j = parse_usize(toks.next(), ln, "vertex")?;
        let w = toks
            .next()
            .ok_or_else(|| Error::parse(format!("line {ln}: missing weight")))?;
        if i >= j || j >= k {
            return Err(Error::parse(format!("line {ln}: bad pair {i} {j}")));
        }
        let slot = &mut weights[super::weighted::pair_index(k, i, j)];
        if slot.is_some() {
            return Err(Error::parse(format!("line {ln}: duplicate pair {i} {j}")));
        }
        *slot = Some(parse_rational(w)?);
    }
    let weights = weights
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::parse("weighted graph is missing pairs"))?;
    WeightedCompleteGraph::from_weights(k, weights)
}
