//! Subgraph (not necessarily induced) embedding by backtracking over
//! bit-set candidate sets.

use std::collections::HashSet;

use crate::graph::Graph;

/// Order pattern vertices so each one (after the first of its component)
/// has an already placed neighbor; higher degree first.
pub(crate) fn search_order(pattern: &Graph) -> Vec<usize> {
    let p = pattern.n();
    let mut placed = vec![false; p];
    let mut order = Vec::with_capacity(p);
    while order.len() < p {
        let start = (0..p)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[start] = true;
        order.push(start);
        loop {
            let next = (0..p)
                .filter(|&v| !placed[v])
                .filter(|&v| order.iter().any(|&u| pattern.has_edge(u, v)))
                .max_by_key(|&v| {
                    let back = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                    (back, pattern.degree(v), std::cmp::Reverse(v))
                });
            match next {
                Some(v) => {
                    placed[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
    }
    order
}

struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it in the pattern.
    back: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<u64>,
    words: usize,
    /// Optional per-pattern-vertex allowed host sets (class restrictions).
    allowed: Option<&'a [Vec<u64>]>,
    injective: bool,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, injective: bool) -> Self {
        let order = search_order(pattern);
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| pattern.has_edge(order[j], v)).collect())
            .collect();
        let words = host.n().div_ceil(64);
        Embedder {
            host,
            pattern,
            order,
            back,
            map: vec![usize::MAX; pattern.n()],
            used: vec![0; words],
            words,
            allowed: None,
            injective,
        }
    }

    fn candidates(&self, pos: usize) -> Vec<u64> {
        let mut cand: Vec<u64> = vec![!0u64; self.words];
        let n = self.host.n();
        if !n.is_multiple_of(64) && self.words > 0 {
            cand[self.words - 1] = (1u64 << (n % 64)) - 1;
        }
        for &j in &self.back[pos] {
            let img = self.map[self.order[j]];
            for (c, r) in cand.iter_mut().zip(self.host.row(img)) {
                *c &= r;
            }
        }
        if self.injective {
            for (c, u) in cand.iter_mut().zip(&self.used) {
                *c &= !u;
            }
        }
        if let Some(allowed) = self.allowed {
            for (c, a) in cand.iter_mut().zip(&allowed[self.order[pos]]) {
                *c &= a;
            }
        }
        cand
    }

    /// Visits every embedding; the visitor returns `false` to stop.
    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if pos == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[pos];
        let need = self.pattern.degree(v);
        let cand = self.candidates(pos);
        for (wi, &w) in cand.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                let x = wi * 64 + b;
                if self.injective && self.host.degree(x) < need {
                    continue;
                }
                self.map[v] = x;
                self.used[wi] |= 1 << b;
                let go_on = self.run(pos + 1, visit);
                self.used[wi] &= !(1 << b);
                if !go_on {
                    self.map[v] = usize::MAX;
                    return false;
                }
            }
        }
        self.map[v] = usize::MAX;
        true
    }
}

/// An injective edge-preserving map `V(pattern) → V(host)`, if one exists.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut found = None;
    Embedder::new(host, pattern, true).run(0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Like [`find_embedding`] but pattern vertex `v` must land in `classes[phi[v]]`.
pub fn find_embedding_in_classes(
    host: &Graph,
    pattern: &Graph,
    classes: &[Vec<u64>],
    phi: &[usize],
) -> Option<Vec<usize>> {
    let allowed: Vec<Vec<u64>> = phi.iter().map(|&c| classes[c].clone()).collect();
    let mut e = Embedder::new(host, pattern, true);
    e.allowed = Some(&allowed);
    let mut found = None;
    e.run(0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// A (not necessarily injective) edge-preserving map, if one exists.
pub fn find_homomorphism(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    if pattern.edge_count() > 0 && target.edge_count() == 0 {
        return None;
    }
    if pattern.n() > 0 && target.n() == 0 {
        return None;
    }
    let mut found = None;
    Embedder::new(target, pattern, false).run(0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Visits every injective embedding of `pattern` into `host`.
pub fn for_each_embedding(host: &Graph, pattern: &Graph, mut visit: impl FnMut(&[usize]) -> bool) {
    if pattern.n() > host.n() {
        return;
    }
    Embedder::new(host, pattern, true).run(0, &mut visit);
}

/// Distinct edge sets of copies of `pattern` in `host` (host has at most 16
/// vertices), as masks over `edge_index`. Stops early once `limit` distinct
/// copies are collected and returns `None` in that case.
pub(crate) fn copy_masks(
    host: &Graph,
    pattern: &Graph,
    edge_index: &dyn Fn(usize, usize) -> Option<usize>,
    limit: usize,
) -> Option<HashSet<u128>> {
    let pedges = pattern.edges();
    let mut out = HashSet::new();
    let mut overflow = false;
    for_each_embedding(host, pattern, |map| {
        let mut mask = 0u128;
        for &(a, b) in &pedges {
            let idx = edge_index(map[a], map[b]).expect("embedded edge is a host edge");
            mask |= 1u128 << idx;
        }
        out.insert(mask);
        if out.len() > limit {
            overflow = true;
            return false;
        }
        true
    });
    if overflow {
        None
    } else {
        Some(out)
    }
}
