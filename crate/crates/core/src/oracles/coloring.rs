//! Proper colorings by backtracking, kept separate from the homomorphism
//! search so each can check the other.

use crate::graph::Graph;

/// Whether `g` has a proper coloring with `r` colors.
pub fn is_colorable(g: &Graph, r: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if r == 0 {
        return false;
    }
    // greedy in degree order first; it settles most easy cases
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];
    if greedy(g, &order, &mut color) <= r {
        return true;
    }
    color.fill(usize::MAX);
    extend(g, &order, 0, r, 0, &mut color)
}

fn greedy(g: &Graph, order: &[usize], color: &mut [usize]) -> usize {
    let mut used = 0;
    for &v in order {
        let c = (0..)
            .find(|&c| !g.neighbors(v).any(|u| color[u] == c))
            .unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn extend(
    g: &Graph,
    order: &[usize],
    pos: usize,
    r: usize,
    used: usize,
    color: &mut [usize],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // a fresh color is interchangeable with any other fresh one
    for c in 0..r.min(used + 1) {
        if g.neighbors(v).any(|u| color[u] == c) {
            continue;
        }
        color[v] = c;
        if extend(g, order, pos + 1, r, used.max(c + 1), color) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

pub fn chromatic_number(g: &Graph) -> usize {
    (0..=g.n()).find(|&r| is_colorable(g, r)).unwrap()
}

/// Whether some edge's removal lowers the chromatic number.
pub fn is_edge_critical(h: &Graph) -> bool {
    let chi = chromatic_number(h);
    h.edges()
        .into_iter()
        .any(|e| is_colorable(&h.without_edges(&[e]), chi - 1))
}
