use crate::graph::Graph;

/// Edges of the complete balanced `r`-partite graph on `n` vertices.
pub fn turan_count(n: usize, r: usize) -> usize {
    assert!(r >= 1, "r must be positive");
    let (q, extra) = (n / r, n % r);
    // `extra` parts of size q+1, the rest of size q
    let inside = extra * (q + 1) * q / 2 + (r - extra) * q * q.saturating_sub(1) / 2;
    n * n.saturating_sub(1) / 2 - inside
}

/// `δ(G) > (3r−4)n/(3r−1)`: above this minimum degree a `K_{r+1}`-free
/// graph is `r`-colourable.
pub fn above_colourability_threshold(g: &Graph, r: usize) -> bool {
    let n = g.n();
    (3 * r - 1) * g.min_degree() > (3 * r).saturating_sub(4) * n
}
