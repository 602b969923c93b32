use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use crate::algebra::{Ge, GroupTable};
use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// An edge with an orientation; a loop when `tail == head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameEdge {
    pub id: usize,
    pub tail: usize,
    pub head: usize,
}

impl FrameEdge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn other_end(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

/// A multigraph whose edges are kept in increasing id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: BTreeSet<usize>,
    edges: Vec<FrameEdge>,
}

impl Multigraph {
    pub fn new(vertices: impl IntoIterator<Item = usize>, mut edges: Vec<FrameEdge>) -> Result<Self> {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::pre(format!("duplicate edge id {}", w[0].id)));
            }
        }
        for e in &edges {
            if !vertices.contains(&e.tail) || !vertices.contains(&e.head) {
                return Err(Error::pre(format!("edge {} has an end outside the vertex set", e.id)));
            }
        }
        Ok(Multigraph { vertices, edges })
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &[FrameEdge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn index_of(&self, id: usize) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    /// Connected components of the subgraph formed by the indexed edges, as
    /// (vertices, edge indices), ordered by least vertex.
    pub(crate) fn components(&self, set: &ElemSet) -> Vec<(BTreeSet<usize>, ElemSet)> {
        let mut parent: HashMap<usize, usize> = HashMap::new();
        fn find(p: &mut HashMap<usize, usize>, x: usize) -> usize {
            let mut r = x;
            while p[&r] != r {
                r = p[&r];
            }
            let mut y = x;
            while p[&y] != r {
                let next = p[&y];
                p.insert(y, r);
                y = next;
            }
            r
        }
        for i in set.iter() {
            let e = self.edges[i];
            parent.entry(e.tail).or_insert(e.tail);
            parent.entry(e.head).or_insert(e.head);
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if a != b {
                parent.insert(a.max(b), a.min(b));
            }
        }
        let mut comps: BTreeMap<usize, (BTreeSet<usize>, ElemSet)> = BTreeMap::new();
        let verts: Vec<usize> = parent.keys().copied().collect();
        for v in verts {
            let r = find(&mut parent, v);
            comps.entry(r).or_default().0.insert(v);
        }
        for i in set.iter() {
            let r = find(&mut parent, self.edges[i].tail);
            comps.get_mut(&r).unwrap().1.insert(i);
        }
        let mut out: Vec<_> = comps.into_values().collect();
        out.sort_by_key(|(v, _)| *v.iter().next().unwrap());
        out
    }

    pub fn is_connected(&self) -> bool {
        let all = ElemSet::full(self.edges.len());
        let comps = self.components(&all);
        let covered: usize = comps.iter().map(|(v, _)| v.len()).sum();
        match comps.len() {
            0 => self.vertices.len() <= 1,
            1 => covered == self.vertices.len(),
            _ => false,
        }
    }

    /// Whether the indexed edges form a cycle: connected with every vertex of
    /// degree two, a loop counting twice.
    pub(crate) fn is_cycle(&self, set: &ElemSet) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut deg: HashMap<usize, usize> = HashMap::new();
        for i in set.iter() {
            let e = self.edges[i];
            *deg.entry(e.tail).or_default() += 1;
            *deg.entry(e.head).or_default() += 1;
        }
        deg.values().all(|&d| d == 2) && self.components(set).len() == 1
    }

    /// Whether the indexed edges form a theta or handcuff: connected, one more
    /// edge than vertices, and no vertex of degree below two.
    pub(crate) fn is_bicycle(&self, set: &ElemSet) -> bool {
        let mut deg: HashMap<usize, usize> = HashMap::new();
        for i in set.iter() {
            let e = self.edges[i];
            *deg.entry(e.tail).or_default() += 1;
            *deg.entry(e.head).or_default() += 1;
        }
        set.len() == deg.len() + 1
            && deg.values().all(|&d| d >= 2)
            && self.components(set).len() == 1
    }

    /// All cycles within the indexed edge set, as edge-index sets.
    pub(crate) fn cycles_within(&self, within: &ElemSet) -> Vec<ElemSet> {
        let mut found: HashSet<ElemSet> = HashSet::new();
        let mut adj: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for i in within.iter() {
            let e = self.edges[i];
            if e.is_loop() {
                found.insert(ElemSet::from_iter([i]));
                continue;
            }
            adj.entry(e.tail).or_default().push((i, e.head));
            adj.entry(e.head).or_default().push((i, e.tail));
        }
        let starts: Vec<usize> = adj.keys().copied().collect();
        for &s in &starts {
            let mut path_edges = Vec::new();
            let mut on_path = BTreeSet::from([s]);
            self.cycle_dfs(s, s, &adj, &mut path_edges, &mut on_path, &mut found);
        }
        let mut out: Vec<ElemSet> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Extend a simple path from `start` (all other path vertices exceed
    /// `start`) and record every way of closing it back to `start`.
    fn cycle_dfs(
        &self,
        start: usize,
        at: usize,
        adj: &BTreeMap<usize, Vec<(usize, usize)>>,
        path: &mut Vec<usize>,
        on_path: &mut BTreeSet<usize>,
        found: &mut HashSet<ElemSet>,
    ) {
        for &(ei, w) in &adj[&at] {
            if path.contains(&ei) {
                continue;
            }
            if w == start && !path.is_empty() {
                let mut c: ElemSet = path.iter().collect();
                c.insert(ei);
                found.insert(c);
            } else if w > start && !on_path.contains(&w) {
                path.push(ei);
                on_path.insert(w);
                self.cycle_dfs(start, w, adj, path, on_path, found);
                on_path.remove(&w);
                path.pop();
            }
        }
    }
}

/// The gain of an edge: a group element, or the marker for an unbalanced loop
/// (used where the group cannot supply one, e.g. the trivial group).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gain {
    Element(Ge),
    Unbalanced,
}

/// How the balanced cycles are specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// Gains indexed like the edge list.
    Gains { group: GroupTable, gains: Vec<Gain> },
    /// Balanced cycles as sorted edge-id lists.
    Explicit { balanced: BTreeSet<Vec<usize>> },
}

/// A biased graph: a multigraph with a theta-closed family of balanced cycles.
#[derive(Debug, Clone)]
pub struct BiasedGraph {
    graph: Multigraph,
    balance: Balance,
    unbalanced_cycles: OnceLock<Vec<ElemSet>>,
}

impl PartialEq for BiasedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.balance == other.balance
    }
}

/// One step of a biased-graph minor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    DeleteEdge(usize),
    ContractEdge(usize),
    DeleteVertex(usize),
}

impl BiasedGraph {
    /// A gain graph; `edges` are `(id, tail, head, gain)`.
    pub fn with_gains(
        vertices: impl IntoIterator<Item = usize>,
        group: GroupTable,
        edges: Vec<(usize, usize, usize, Gain)>,
    ) -> Result<Self> {
        let mut edges = edges;
        edges.sort_by_key(|e| e.0);
        for &(id, tail, head, g) in &edges {
            match g {
                Gain::Element(x) if x >= group.order() => {
                    return Err(Error::InvalidGroup(format!(
                        "gain {x} on edge {id} is not an element of a group of order {}",
                        group.order()
                    )))
                }
                Gain::Unbalanced if tail != head => {
                    return Err(Error::pre(format!(
                        "edge {id}: only loops may carry the unbalanced marker"
                    )))
                }
                _ => {}
            }
        }
        let graph = Multigraph::new(
            vertices,
            edges
                .iter()
                .map(|&(id, tail, head, _)| FrameEdge { id, tail, head })
                .collect(),
        )?;
        let gains = edges.iter().map(|e| e.3).collect();
        Ok(BiasedGraph::from_parts(graph, Balance::Gains { group, gains }))
    }

    /// A biased graph with an explicit list of balanced cycles (edge ids).
    ///
    /// Each listed set must be a cycle; the theta property is checked when
    /// the graph has at most `caps.circuits` edges.
    pub fn with_explicit(
        vertices: impl IntoIterator<Item = usize>,
        edges: Vec<(usize, usize, usize)>,
        balanced: Vec<Vec<usize>>,
        caps: &Caps,
    ) -> Result<Self> {
        let graph = Multigraph::new(
            vertices,
            edges
                .into_iter()
                .map(|(id, tail, head)| FrameEdge { id, tail, head })
                .collect(),
        )?;
        let mut set = BTreeSet::new();
        for mut c in balanced {
            c.sort_unstable();
            c.dedup();
            let idx = ids_to_indices(&graph, &c)?;
            if !graph.is_cycle(&idx) {
                return Err(Error::NotACycle(format!("{c:?}")));
            }
            set.insert(c);
        }
        let g = BiasedGraph::from_parts(graph, Balance::Explicit { balanced: set });
        if g.graph.edges.len() as u64 <= caps.circuits {
            if let Some(theta) = g.theta_violation(caps)? {
                return Err(Error::pre(format!(
                    "theta {theta:?} contains exactly two balanced cycles"
                )));
            }
        }
        Ok(g)
    }

    fn from_parts(graph: Multigraph, balance: Balance) -> Self {
        BiasedGraph {
            graph,
            balance,
            unbalanced_cycles: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn balance(&self) -> &Balance {
        &self.balance
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn edge_ids(&self) -> Vec<usize> {
        self.graph.edge_ids()
    }

    pub fn group(&self) -> Option<&GroupTable> {
        match &self.balance {
            Balance::Gains { group, .. } => Some(group),
            Balance::Explicit { .. } => None,
        }
    }

    pub fn gain_of(&self, id: usize) -> Option<Gain> {
        match &self.balance {
            Balance::Gains { gains, .. } => self.graph.index_of(id).map(|i| gains[i]),
            Balance::Explicit { .. } => None,
        }
    }

    pub(crate) fn indices(&self, ids: &[usize]) -> Result<ElemSet> {
        ids_to_indices(&self.graph, ids)
    }

    pub(crate) fn ids(&self, set: &ElemSet) -> Vec<usize> {
        set.iter().map(|i| self.graph.edges[i].id).collect()
    }

    /// Balance of a cycle given by edge ids.
    pub fn cycle_is_balanced(&self, ids: &[usize]) -> Result<bool> {
        let set = self.indices(ids)?;
        if set.len() != ids.len() || !self.graph.is_cycle(&set) {
            return Err(Error::NotACycle(format!("{ids:?}")));
        }
        Ok(self.cycle_balanced_idx(&set))
    }

    /// Balance of an index-set already known to be a cycle, by walking it.
    pub(crate) fn cycle_balanced_idx(&self, set: &ElemSet) -> bool {
        match &self.balance {
            Balance::Explicit { balanced } => balanced.contains(&self.ids(set)),
            Balance::Gains { group, gains } => {
                let edges = &self.graph.edges;
                let first = set.first().unwrap();
                if edges[first].is_loop() {
                    return gains[first] == Gain::Element(group.identity());
                }
                let start = edges[first].tail;
                let mut at = start;
                let mut product = group.identity();
                let mut used = ElemSet::new();
                let mut next = Some(first);
                while let Some(i) = next {
                    used.insert(i);
                    let e = edges[i];
                    let Gain::Element(g) = gains[i] else {
                        return false;
                    };
                    if e.tail == at {
                        product = group.op(product, g);
                        at = e.head;
                    } else {
                        product = group.op(product, group.inv(g));
                        at = e.tail;
                    }
                    next = set
                        .iter()
                        .find(|&j| !used.contains(j) && (edges[j].tail == at || edges[j].head == at));
                }
                at == start && product == group.identity()
            }
        }
    }

    /// Whether every cycle inside the indexed edge set is balanced.
    pub(crate) fn is_balanced_idx(&self, set: &ElemSet) -> bool {
        match &self.balance {
            Balance::Gains { group, gains } => {
                self.graph.components(set).iter().all(|(verts, edges)| {
                    potentials_consistent(&self.graph, group, gains, verts, edges)
                })
            }
            Balance::Explicit { .. } => self
                .unbalanced_cycles()
                .iter()
                .all(|c| !c.is_subset(set)),
        }
    }

    fn unbalanced_cycles(&self) -> &Vec<ElemSet> {
        self.unbalanced_cycles.get_or_init(|| {
            self.graph
                .cycles_within(&ElemSet::full(self.edge_count()))
                .into_iter()
                .filter(|c| !self.cycle_balanced_idx(c))
                .collect()
        })
    }

    pub fn is_balanced(&self) -> bool {
        self.is_balanced_idx(&ElemSet::full(self.edge_count()))
    }

    /// The first theta (as sorted edge ids) containing exactly two balanced
    /// cycles, if any.
    pub fn theta_violation(&self, caps: &Caps) -> Result<Option<Vec<usize>>> {
        let m = self.edge_count();
        Caps::check("edges for theta check", m as u64, caps.circuits)?;
        let cycles = self.graph.cycles_within(&ElemSet::full(m));
        for mask in 1u64..1 << m {
            let s = ElemSet::from_mask(mask);
            if !self.graph.is_bicycle(&s) {
                continue;
            }
            let inside: Vec<&ElemSet> = cycles.iter().filter(|c| c.is_subset(&s)).collect();
            if inside.len() != 3 {
                continue;
            }
            let bal = inside.iter().filter(|c| self.cycle_balanced_idx(c)).count();
            if bal == 2 {
                return Ok(Some(self.ids(&s)));
            }
        }
        Ok(None)
    }

    /// Apply one minor operation.
    pub fn minor(&self, op: MinorOp) -> Result<BiasedGraph> {
        match op {
            MinorOp::DeleteEdge(id) => {
                let i = self.index_or_err(id)?;
                Ok(self.without_edges(&ElemSet::from_iter([i])))
            }
            MinorOp::DeleteVertex(v) => {
                if !self.graph.vertices.contains(&v) {
                    return Err(Error::pre(format!("unknown vertex {v}")));
                }
                let incident: ElemSet = self
                    .graph
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.tail == v || e.head == v)
                    .map(|(i, _)| i)
                    .collect();
                let mut g = self.without_edges(&incident);
                g.graph.vertices.remove(&v);
                Ok(g)
            }
            MinorOp::ContractEdge(id) => {
                let i = self.index_or_err(id)?;
                let e = self.graph.edges[i];
                let single = ElemSet::from_iter([i]);
                if e.is_loop() {
                    if self.cycle_balanced_idx(&single) {
                        Ok(self.without_edges(&single))
                    } else {
                        Ok(self.contract_unbalanced_loop(i))
                    }
                } else {
                    self.contract_link(i)
                }
            }
        }
    }

    pub fn delete_edge(&self, id: usize) -> Result<BiasedGraph> {
        self.minor(MinorOp::DeleteEdge(id))
    }

    pub fn contract_edge(&self, id: usize) -> Result<BiasedGraph> {
        self.minor(MinorOp::ContractEdge(id))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<BiasedGraph> {
        self.minor(MinorOp::DeleteVertex(v))
    }

    fn index_or_err(&self, id: usize) -> Result<usize> {
        self.graph.index_of(id).ok_or(Error::UnknownElement(id))
    }

    fn without_edges(&self, drop: &ElemSet) -> BiasedGraph {
        let keep: Vec<usize> = (0..self.edge_count()).filter(|i| !drop.contains(*i)).collect();
        let graph = Multigraph {
            vertices: self.graph.vertices.clone(),
            edges: keep.iter().map(|&i| self.graph.edges[i]).collect(),
        };
        let dropped: BTreeSet<usize> = self.ids(drop).into_iter().collect();
        let balance = match &self.balance {
            Balance::Gains { group, gains } => Balance::Gains {
                group: group.clone(),
                gains: keep.iter().map(|&i| gains[i]).collect(),
            },
            Balance::Explicit { balanced } => Balance::Explicit {
                balanced: balanced
                    .iter()
                    .filter(|c| c.iter().all(|x| !dropped.contains(x)))
                    .cloned()
                    .collect(),
            },
        };
        BiasedGraph::from_parts(graph, balance)
    }

    /// Contract an unbalanced loop at `v`: other unbalanced loops at `v`
    /// become balanced loops, and links `v -> w` become unbalanced loops at `w`.
    fn contract_unbalanced_loop(&self, i: usize) -> BiasedGraph {
        let v = self.graph.edges[i].tail;
        let mut edges = Vec::new();
        let mut fates = Vec::new();
        let mut balanced_loops = Vec::new();
        for (j, e) in self.graph.edges.iter().enumerate() {
            if j == i {
                continue;
            }
            if e.is_loop() && e.tail == v {
                balanced_loops.push(e.id);
                edges.push(*e);
                fates.push((j, Fate::BalancedLoop));
            } else if e.tail == v || e.head == v {
                let w = e.other_end(v);
                edges.push(FrameEdge { id: e.id, tail: w, head: w });
                fates.push((j, Fate::UnbalancedLoop));
            } else {
                edges.push(*e);
                fates.push((j, Fate::Unchanged));
            }
        }
        let graph = Multigraph {
            vertices: self.graph.vertices.clone(),
            edges,
        };
        let balance = match &self.balance {
            Balance::Gains { group, gains } => Balance::Gains {
                group: group.clone(),
                gains: fates
                    .iter()
                    .map(|&(j, fate)| match fate {
                        Fate::BalancedLoop => Gain::Element(group.identity()),
                        Fate::UnbalancedLoop => Gain::Unbalanced,
                        Fate::Unchanged => gains[j],
                    })
                    .collect(),
            },
            Balance::Explicit { balanced } => {
                let at_v: BTreeSet<usize> = self
                    .graph
                    .edges
                    .iter()
                    .filter(|e| e.tail == v || e.head == v)
                    .map(|e| e.id)
                    .collect();
                let mut b: BTreeSet<Vec<usize>> = balanced
                    .iter()
                    .filter(|c| c.iter().all(|x| !at_v.contains(x)))
                    .cloned()
                    .collect();
                b.extend(balanced_loops.iter().map(|&id| vec![id]));
                Balance::Explicit { balanced: b }
            }
        };
        BiasedGraph::from_parts(graph, balance)
    }

    /// Contract a link: switch so its gain is the identity, then identify its
    /// ends (the smaller vertex id survives).
    fn contract_link(&self, i: usize) -> Result<BiasedGraph> {
        let e = self.graph.edges[i];
        let keep_v = e.tail.min(e.head);
        let gone = e.tail.max(e.head);
        let rename = |x: usize| if x == gone { keep_v } else { x };
        let mut vertices = self.graph.vertices.clone();
        vertices.remove(&gone);
        let edges: Vec<FrameEdge> = self
            .graph
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| FrameEdge {
                id: f.id,
                tail: rename(f.tail),
                head: rename(f.head),
            })
            .collect();
        let graph = Multigraph { vertices, edges };
        let balance = match &self.balance {
            Balance::Gains { group, gains } => {
                let Gain::Element(g) = gains[i] else {
                    unreachable!("links always carry a group element")
                };
                // Switching at the head of e by g^-1 turns e's gain into the identity.
                let eta = |x: usize| if x == e.head { group.inv(g) } else { group.identity() };
                let new_gains = self
                    .graph
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(j, f)| match gains[j] {
                        Gain::Unbalanced => Gain::Unbalanced,
                        Gain::Element(h) => Gain::Element(group.op(
                            group.op(group.inv(eta(f.tail)), h),
                            eta(f.head),
                        )),
                    })
                    .collect();
                Balance::Gains {
                    group: group.clone(),
                    gains: new_gains,
                }
            }
            Balance::Explicit { balanced } => {
                let eid = e.id;
                let mut b = BTreeSet::new();
                let cycles = graph.cycles_within(&ElemSet::full(graph.edges.len()));
                for c in cycles {
                    let ids: Vec<usize> = c.iter().map(|j| graph.edges[j].id).collect();
                    let mut with_e = ids.clone();
                    with_e.push(eid);
                    with_e.sort_unstable();
                    if balanced.contains(&ids) || balanced.contains(&with_e) {
                        b.insert(ids);
                    }
                }
                Balance::Explicit { balanced: b }
            }
        };
        Ok(BiasedGraph::from_parts(graph, balance))
    }
}

#[derive(Debug, Clone, Copy)]
enum Fate {
    Unchanged,
    BalancedLoop,
    UnbalancedLoop,
}

fn ids_to_indices(graph: &Multigraph, ids: &[usize]) -> Result<ElemSet> {
    ids.iter()
        .map(|&id| graph.index_of(id).ok_or(Error::UnknownElement(id)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

/// Whether the gains on one connected component admit consistent vertex
/// potentials `phi(head) = phi(tail) * gain`.
fn potentials_consistent(
    graph: &Multigraph,
    group: &GroupTable,
    gains: &[Gain],
    verts: &BTreeSet<usize>,
    edges: &ElemSet,
) -> bool {
    let mut phi: HashMap<usize, Ge> = HashMap::new();
    let root = *verts.iter().next().unwrap();
    phi.insert(root, group.identity());
    let mut queue = vec![root];
    let mut incident: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in edges.iter() {
        let e = graph.edges[i];
        incident.entry(e.tail).or_default().push(i);
        if !e.is_loop() {
            incident.entry(e.head).or_default().push(i);
        }
    }
    while let Some(v) = queue.pop() {
        for &i in incident.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            let e = graph.edges[i];
            let Gain::Element(g) = gains[i] else {
                return false;
            };
            let (from, to, step) = if e.tail == v {
                (v, e.head, g)
            } else {
                (v, e.tail, group.inv(g))
            };
            let want = group.op(phi[&from], step);
            match phi.get(&to) {
                Some(&have) if have != want => return false,
                Some(_) => {}
                None => {
                    phi.insert(to, want);
                    queue.push(to);
                }
            }
        }
    }
    true
}
