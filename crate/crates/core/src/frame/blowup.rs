use crate::algebra::GroupTable;
use crate::error::{Error, Result};
use crate::extremal::SimpleGraph;
use crate::matroid::MatroidHandle;

use super::biased::{BiasedGraph, Gain};
use super::rank::{frame_matroid, frame_rank_idx};

/// The blow-up G^Γ: an unbalanced loop at every vertex and, for every edge
/// `uv` with `u < v`, `|Γ|` parallel edges `u -> v` carrying every gain.
///
/// Edge ids: loops `0..n` by vertex, then the links edge by edge (in
/// lexicographic order) with gains in increasing index order. Loops carry the
/// least non-identity element, or the unbalanced marker for the trivial group.
pub fn blow_up(g: &SimpleGraph, group: &GroupTable) -> Result<BiasedGraph> {
    let n = g.vertex_count();
    let loop_gain = group
        .first_nonidentity()
        .map_or(Gain::Unbalanced, Gain::Element);
    let mut edges: Vec<(usize, usize, usize, Gain)> = (0..n).map(|v| (v, v, v, loop_gain)).collect();
    for (u, v) in g.edges() {
        for x in group.elements() {
            edges.push((edges.len(), u, v, Gain::Element(x)));
        }
    }
    BiasedGraph::with_gains(0..n, group.clone(), edges)
}

/// The biased graph K_n^Γ whose frame matroid is the Dowling geometry.
pub fn dowling_graph(n: usize, group: &GroupTable) -> Result<BiasedGraph> {
    if n == 0 {
        return Err(Error::pre("Dowling geometry needs n >= 1"));
    }
    blow_up(&SimpleGraph::complete(n), group)
}

/// The Dowling geometry DG(n, Γ) = FM(K_n^Γ).
pub fn dowling(n: usize, group: &GroupTable) -> Result<MatroidHandle> {
    Ok(frame_matroid(&dowling_graph(n, group)?))
}

/// A graph whose cycle matroid equals FM(Ω), found by the balanced or
/// loop-deletion tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphicForm {
    /// Vertex count and one `(u, v)` pair per edge of Ω, in edge-id order.
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    NotGraphicByThisTest,
}

/// Recognise FM(Ω) as graphic when Ω is balanced, or when deleting all
/// unbalanced loops drops the rank (each such loop then becomes an edge to a
/// new vertex). Vertices are relabelled `0..k` in increasing order; the new
/// vertex, if any, is `k`.
pub fn frame_graphic_form(g: &BiasedGraph) -> Result<GraphicForm> {
    let graph = g.graph();
    if !graph.is_connected() {
        return Err(Error::pre("graphic form needs a connected biased graph"));
    }
    let verts: Vec<usize> = graph.vertices().iter().copied().collect();
    let relabel = |v: usize| verts.binary_search(&v).unwrap();
    let plain: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|e| (relabel(e.tail), relabel(e.head)))
        .collect();
    if g.is_balanced() {
        return Ok(GraphicForm::Graphic {
            vertices: verts.len(),
            edges: plain,
        });
    }
    let m = g.edge_count();
    let all = crate::ElemSet::full(m);
    let unbalanced_loops: crate::ElemSet = (0..m)
        .filter(|&i| {
            graph.edges()[i].is_loop() && !g.cycle_balanced_idx(&crate::ElemSet::from_iter([i]))
        })
        .collect();
    let rest = all.difference(&unbalanced_loops);
    if frame_rank_idx(g, &rest) < frame_rank_idx(g, &all) {
        let w = verts.len();
        let edges = plain
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if unbalanced_loops.contains(i) { (u, w) } else { (u, v) })
            .collect();
        return Ok(GraphicForm::Graphic {
            vertices: w + 1,
            edges,
        });
    }
    Ok(GraphicForm::NotGraphicByThisTest)
}
