use crate::elemset::ElemSet;
use crate::error::{Error, Result};

use super::handle::{MatroidHandle, RankOracle};

/// The uniform matroid U_{r,n}.
#[derive(Debug, Clone)]
pub struct Uniform {
    rank: usize,
    size: usize,
}

impl RankOracle for Uniform {
    fn len(&self) -> usize {
        self.size
    }

    fn rank(&self, set: &ElemSet) -> usize {
        set.len().min(self.rank)
    }

    fn describe(&self) -> String {
        format!("U({},{})", self.rank, self.size)
    }
}

pub fn uniform(rank: usize, size: usize) -> Result<MatroidHandle> {
    if rank > size {
        return Err(Error::pre(format!("U({rank},{size}) needs rank <= size")));
    }
    Ok(MatroidHandle::new(Uniform { rank, size }))
}

/// The free matroid on `n` elements.
pub fn free(n: usize) -> MatroidHandle {
    MatroidHandle::new(Uniform { rank: n, size: n })
}

/// Cycle matroid of a multigraph; edges are vertex pairs, loops allowed.
#[derive(Debug, Clone)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::pre(format!(
                "edge ({u},{v}) uses a vertex outside 0..{vertices}"
            )));
        }
        Ok(GraphicMatroid { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn into_handle(self) -> MatroidHandle {
        MatroidHandle::new(self)
    }
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl RankOracle for GraphicMatroid {
    fn len(&self) -> usize {
        self.edges.len()
    }

    fn rank(&self, set: &ElemSet) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        let mut r = 0;
        for e in set.iter() {
            let (u, v) = self.edges[e];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                r += 1;
            }
        }
        r
    }

    fn describe(&self) -> String {
        format!("M(G) on {} vertices, {} edges", self.vertices, self.edges.len())
    }
}

/// Edges of K_t on vertices `0..t` in lexicographic order.
pub fn complete_graph_edges(t: usize) -> Vec<(usize, usize)> {
    (0..t)
        .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
        .collect()
}

/// M(K_t) with edges in lexicographic order.
pub fn complete_graphic(t: usize) -> MatroidHandle {
    GraphicMatroid {
        vertices: t,
        edges: complete_graph_edges(t),
    }
    .into_handle()
}

struct DirectSum {
    left: MatroidHandle,
    right: MatroidHandle,
}

impl RankOracle for DirectSum {
    fn len(&self) -> usize {
        self.left.backend_len() + self.right.backend_len()
    }

    fn rank(&self, set: &ElemSet) -> usize {
        let split = self.left.backend_len();
        let (mut a, mut b) = (ElemSet::new(), ElemSet::new());
        for e in set.iter() {
            if e < split {
                a.insert(e);
            } else {
                b.insert(e - split);
            }
        }
        self.left.rk(&a) + self.right.rk(&b)
    }

    fn describe(&self) -> String {
        format!("{} (+) {}", self.left.describe(), self.right.describe())
    }
}

/// Direct sum; elements of `m` come first, then those of `n`, both relabelled
/// consecutively in increasing id order.
pub fn direct_sum(m: &MatroidHandle, n: &MatroidHandle) -> MatroidHandle {
    MatroidHandle::new(DirectSum {
        left: m.compact().0,
        right: n.compact().0,
    })
}
