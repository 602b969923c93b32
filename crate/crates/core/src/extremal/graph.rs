use std::collections::{BTreeSet, HashSet};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::matroid::{GraphicMatroid, MatroidHandle};

/// A simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut g = SimpleGraph::new(10);
        for i in 0..5 {
            for (u, v) in [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)] {
                g.add_edge(u, v).expect("vertices are in range");
            }
        }
        g
    }

    /// Add the edge `{u, v}`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::pre(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::pre(format!("edge ({u},{v}) outside 0..{}", self.n)));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The cycle matroid, with edge ids in lexicographic edge order.
    pub fn cycle_matroid(&self) -> MatroidHandle {
        GraphicMatroid::new(self.n, self.edges().collect())
            .expect("edges lie inside the vertex range")
            .into_handle()
    }

    /// Disjoint union with `other`, whose vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n + other.n);
        g.edges = self.edges.clone();
        for (u, v) in other.edges() {
            g.edges.insert((u + self.n, v + self.n));
        }
        g
    }
}

/// Branch sets of a K_t-minor, each a sorted list of original vertices.
pub type BranchSets = Vec<Vec<usize>>;

/// Check that `branches` certify a K_t-minor of `g`: disjoint, nonempty,
/// each inducing a connected subgraph, and every pair joined by an edge.
pub fn verify_branch_sets(g: &SimpleGraph, branches: &BranchSets) -> bool {
    let mut seen = HashSet::new();
    for b in branches {
        if b.is_empty() || !b.iter().all(|&v| v < g.n && seen.insert(v)) {
            return false;
        }
        let mut reach = vec![b[0]];
        let mut i = 0;
        while i < reach.len() {
            let u = reach[i];
            for &v in b {
                if !reach.contains(&v) && g.has_edge(u, v) {
                    reach.push(v);
                }
            }
            i += 1;
        }
        if reach.len() != b.len() {
            return false;
        }
    }
    for i in 0..branches.len() {
        for j in i + 1..branches.len() {
            let joined = branches[i]
                .iter()
                .any(|&u| branches[j].iter().any(|&v| g.has_edge(u, v)));
            if !joined {
                return false;
            }
        }
    }
    true
}

/// Search state: adjacency of the current minor, the edges known to join
/// different branch sets (`frozen`), and the original vertices merged into
/// each current vertex.
#[derive(Clone)]
struct State {
    adj: Vec<u32>,
    frozen: Vec<u32>,
    active: u32,
    members: Vec<u32>,
}

impl State {
    fn verts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&v| self.active >> v & 1 == 1)
    }

    fn remove(&mut self, v: usize) {
        self.active &= !(1 << v);
        for a in self.adj.iter_mut().chain(self.frozen.iter_mut()) {
            *a &= !(1 << v);
        }
        self.adj[v] = 0;
        self.frozen[v] = 0;
    }

    /// Merge `v` into `u` along the edge `uv`.
    fn contract(&self, u: usize, v: usize) -> State {
        let mut s = self.clone();
        let merged = (self.adj[u] | self.adj[v]) & !(1 << u) & !(1 << v);
        let frozen = (self.frozen[u] | self.frozen[v]) & merged;
        s.remove(v);
        s.active |= 1 << u;
        for w in 0..32 {
            if merged >> w & 1 == 1 {
                s.adj[w] |= 1 << u;
                if frozen >> w & 1 == 1 {
                    s.frozen[w] |= 1 << u;
                } else {
                    s.frozen[w] &= !(1 << u);
                }
            }
        }
        s.adj[u] = merged;
        s.frozen[u] = frozen;
        s.members[u] |= self.members[v];
        s
    }
}

struct Search {
    t: usize,
    need_edges: usize,
    seen: HashSet<(u32, Vec<u32>, Vec<u32>)>,
}

/// Decide whether `g` has a K_t-minor.
///
/// The search works on branch-set models: a vertex of degree below `t-1` is
/// either deleted or merged into a neighbour, and otherwise some edge is
/// either contracted or frozen as joining two distinct branch sets. States
/// are memoised. Returns branch sets of a K_t-minor when one exists.
pub fn graph_clique_minor(g: &SimpleGraph, t: usize) -> Result<Option<BranchSets>> {
    graph_clique_minor_with_caps(g, t, Caps::global())
}

pub fn graph_clique_minor_with_caps(
    g: &SimpleGraph,
    t: usize,
    caps: &Caps,
) -> Result<Option<BranchSets>> {
    let n = g.vertex_count();
    Caps::check("graph vertices", n as u64, caps.graph.min(32))?;
    if t == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut adj = vec![0u32; 32];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let state = State {
        adj,
        frozen: vec![0; 32],
        active: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
        members: (0..32).map(|v| 1 << v).collect(),
    };
    let mut s = Search {
        t,
        need_edges: t * (t - 1) / 2,
        seen: HashSet::new(),
    };
    Ok(s.run(state).map(|sets| {
        sets.into_iter()
            .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
            .collect()
    }))
}

impl Search {
    fn run(&mut self, mut st: State) -> Option<Vec<u32>> {
        // Isolated vertices never help, and for t >= 3 neither do vertices of
        // degree 1: contracting their edge just deletes them.
        let min_deg = self.t.min(3) as u32 - 1;
        loop {
            let weak = st.verts().find(|&v| st.adj[v].count_ones() < min_deg);
            match weak {
                Some(v) => st.remove(v),
                None => break,
            }
        }
        let verts: Vec<usize> = st.verts().collect();
        if verts.len() < self.t {
            return None;
        }
        if self.t == 1 {
            return Some(vec![st.members[verts[0]]]);
        }
        let edges: usize = verts.iter().map(|&v| st.adj[v].count_ones() as usize).sum::<usize>() / 2;
        if edges < self.need_edges {
            return None;
        }
        if let Some(clique) = find_clique(&st.adj, st.active, self.t) {
            return Some(clique.into_iter().map(|v| st.members[v]).collect());
        }
        let key = (
            st.active,
            verts.iter().map(|&v| st.adj[v]).collect(),
            verts.iter().map(|&v| st.frozen[v]).collect(),
        );
        if !self.seen.insert(key) {
            return None;
        }

        let u = *verts.iter().min_by_key(|&&v| st.adj[v].count_ones()).unwrap();
        if (st.adj[u].count_ones() as usize) < self.t - 1 {
            // u cannot be a branch set on its own.
            let open = st.adj[u] & !st.frozen[u];
            for w in (0..32).filter(|&w| open >> w & 1 == 1) {
                if let Some(r) = self.run(st.contract(u, w)) {
                    return Some(r);
                }
            }
            let mut without = st;
            without.remove(u);
            return self.run(without);
        }

        let (a, b) = verts
            .iter()
            .find_map(|&a| {
                let open = st.adj[a] & !st.frozen[a];
                (open != 0).then(|| (a, open.trailing_zeros() as usize))
            })?;
        if let Some(r) = self.run(st.contract(a, b)) {
            return Some(r);
        }
        st.frozen[a] |= 1 << b;
        st.frozen[b] |= 1 << a;
        self.run(st)
    }
}

fn find_clique(adj: &[u32], active: u32, t: usize) -> Option<Vec<usize>> {
    fn grow(adj: &[u32], cand: u32, cur: &mut Vec<usize>, t: usize) -> bool {
        if cur.len() == t {
            return true;
        }
        if (cand.count_ones() as usize) < t - cur.len() {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cur.push(v);
            if grow(adj, rest & adj[v], cur, t) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    grow(adj, active, &mut cur, t).then_some(cur)
}
