use crate::error::{Error, Result};

use super::graph::SimpleGraph;

/// `n - t + 2` copies of K_{t-1} glued along a common K_{t-2}.
///
/// Vertices `0..t-2` form the shared clique; every other vertex is joined to
/// all of them. The result has `(t-2)n - C(t-1, 2)` edges and no K_t-minor.
pub fn kostochka_family(t: usize, n: usize) -> Result<SimpleGraph> {
    if t < 3 || n < t {
        return Err(Error::pre(format!(
            "kostochka family needs n >= t >= 3, got t={t}, n={n}"
        )));
    }
    let core = t - 2;
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in 0..core.min(u) {
            g.add_edge(v, u)?;
        }
    }
    Ok(g)
}

/// `floor(n/k)` disjoint copies of `h` (with `k = |V(h)|`) plus isolated
/// vertices up to `n` vertices in total.
pub fn replicate_family(h: &SimpleGraph, n: usize) -> Result<SimpleGraph> {
    let k = h.vertex_count();
    if k == 0 || n < k {
        return Err(Error::pre(format!(
            "replicate family needs 0 < |V(H)| <= n, got |V(H)|={k}, n={n}"
        )));
    }
    let mut g = SimpleGraph::new(0);
    for _ in 0..n / k {
        g = g.disjoint_union(h);
    }
    Ok(g.disjoint_union(&SimpleGraph::new(n % k)))
}
