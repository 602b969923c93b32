use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::matroid::{MatroidHandle, RankOracle};

use super::biased::BiasedGraph;

/// Rank in FM(Ω) of the edge set with the given ids.
pub fn frame_rank(g: &BiasedGraph, ids: &[usize]) -> Result<usize> {
    let set = g.indices(ids)?;
    Ok(frame_rank_idx(g, &set))
}

/// Sum over components `K` of `|V(K)| - 1` if `K` is balanced, else `|V(K)|`.
pub(crate) fn frame_rank_idx(g: &BiasedGraph, set: &ElemSet) -> usize {
    g.graph()
        .components(set)
        .iter()
        .map(|(verts, edges)| verts.len() - usize::from(g.is_balanced_idx(edges)))
        .sum()
}

/// Rank oracle for FM(Ω) whose element ids are the edge ids.
struct FrameMatroid {
    graph: BiasedGraph,
    len: usize,
}

impl RankOracle for FrameMatroid {
    fn len(&self) -> usize {
        self.len
    }

    fn rank(&self, set: &ElemSet) -> usize {
        let idx: ElemSet = set
            .iter()
            .filter_map(|id| self.graph.graph().index_of(id))
            .collect();
        frame_rank_idx(&self.graph, &idx)
    }

    fn describe(&self) -> String {
        format!(
            "FM of a biased graph on {} vertices, {} edges",
            self.graph.graph().vertices().len(),
            self.graph.edge_count()
        )
    }
}

/// The frame matroid FM(Ω); element ids are edge ids.
pub fn frame_matroid(g: &BiasedGraph) -> MatroidHandle {
    let ids = g.edge_ids();
    let len = ids.last().map_or(0, |&m| m + 1);
    let h = MatroidHandle::new(FrameMatroid {
        graph: g.clone(),
        len,
    });
    let present: ElemSet = ids.iter().collect();
    h.delete(&ElemSet::full(len).difference(&present))
        .expect("absent ids lie in the backend ground set")
}

/// Circuits of FM(Ω): balanced cycles, and thetas and handcuffs containing
/// no balanced cycle. Each circuit is a sorted list of edge ids.
pub fn frame_circuits(g: &BiasedGraph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let m = g.edge_count();
    Caps::check("edges for circuit enumeration", m as u64, caps.circuits)?;
    let graph = g.graph();
    let cycles = graph.cycles_within(&ElemSet::full(m));
    let balanced: Vec<&ElemSet> = cycles.iter().filter(|c| g.cycle_balanced_idx(c)).collect();
    let mut out: Vec<Vec<usize>> = balanced.iter().map(|c| g.ids(c)).collect();
    for mask in 1u64..1 << m {
        let s = ElemSet::from_mask(mask);
        if graph.is_bicycle(&s) && !balanced.iter().any(|c| c.is_subset(&s)) {
            out.push(g.ids(&s));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
