use std::collections::BTreeSet;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{complete_graph_edges, complete_graphic, MatroidHandle};

use super::tower::{bit, is_tower, members, Subset, Tower};

/// The digraph G(T) on `1..=n`: `(i, j)` is an arc when `i < j` and
/// `{e_i, e_ij, e_j}` is a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerDigraph {
    pub n: usize,
    pub arcs: BTreeSet<(usize, usize)>,
}

impl TowerDigraph {
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.contains(&(i, j))
    }

    /// In-neighbours of `k` inside `x`.
    pub fn in_neighbours(&self, k: usize, x: Subset) -> Vec<usize> {
        members(x).into_iter().filter(|&i| self.has_arc(i, k)).collect()
    }

    /// Connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.arcs {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    /// Every member of `x` except the least has exactly one in-neighbour in
    /// `x`.
    pub fn is_tree(&self, x: Subset) -> bool {
        let ms = members(x);
        ms.iter().skip(1).all(|&k| self.in_neighbours(k, x).len() == 1)
    }

    /// The induced subgraph on `x` is the directed path through its members
    /// in increasing order.
    pub fn is_path(&self, x: Subset) -> bool {
        let ms = members(x);
        ms.iter().enumerate().all(|(a, &i)| {
            ms[a + 1..]
                .iter()
                .enumerate()
                .all(|(d, &j)| self.has_arc(i, j) == (d == 0))
        })
    }

    /// `π(k)`: the least in-neighbour of `k`.
    pub fn pi(&self, k: usize) -> Option<usize> {
        (1..k).find(|&i| self.has_arc(i, k))
    }
}

fn triangle(m: &MatroidHandle, a: usize, b: usize, c: usize) -> bool {
    m.is_circuit_ids(&[a, b, c])
}

fn require_tower(m: &MatroidHandle, t: &Tower) -> Result<()> {
    match is_tower(m, t)? {
        None => Ok(()),
        Some(v) => Err(Error::pre(format!("not a tower: {v}"))),
    }
}

pub fn tower_digraph(m: &MatroidHandle, t: &Tower) -> Result<TowerDigraph> {
    require_tower(m, t)?;
    Ok(digraph_unchecked(m, t))
}

pub(crate) fn digraph_unchecked(m: &MatroidHandle, t: &Tower) -> TowerDigraph {
    let n = t.order();
    let mut arcs = BTreeSet::new();
    for j in 2..=n {
        for i in 1..j {
            if triangle(m, t.joint(i), t.get(bit(i) | bit(j)), t.joint(j)) {
                arcs.insert((i, j));
            }
        }
    }
    TowerDigraph { n, arcs }
}

/// For a tree `S + k` with `max(S) < k`: the triangle `{e_S, e_Sk, e_k}`
/// and the circuit `J_Sk + e_Sk`, each checked to be a circuit.
pub fn tower_tree_circuits(
    m: &MatroidHandle,
    t: &Tower,
    s: Subset,
    k: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    require_tower(m, t)?;
    if s == 0 || k > t.order() || members(s).last().is_some_and(|&x| x >= k) {
        return Err(Error::pre("need a nonempty S with max(S) < k <= n"));
    }
    let sk = s | bit(k);
    let g = digraph_unchecked(m, t);
    if !g.is_tree(sk) {
        return Err(Error::pre(format!("{:?} is not a tree of the tower", members(sk))));
    }
    let first: ElemSet = [t.get(s), t.get(sk), t.joint(k)].into_iter().collect();
    let second = t.joints_of(sk).with(t.get(sk));
    for c in [&first, &second] {
        if !m.is_circuit(c) {
            return Err(Error::CheckFailed(format!("{c} is not a circuit")));
        }
    }
    Ok((first.to_vec(), second.to_vec()))
}

/// For `X` inducing a path in G(T): the restriction on
/// `{e_{X(A)} : A an interval of [|X|]}`, as pairs `(edge of K_{|X|+1},
/// element)` where edge `(a, b)` of K on `0..=|X|` is the interval
/// `[a+1, b]`. The rank function is compared on all subsets.
pub fn path_to_clique(m: &MatroidHandle, t: &Tower, x: Subset) -> Result<Vec<(usize, usize)>> {
    path_to_clique_with_caps(m, t, x, Caps::global())
}

pub fn path_to_clique_with_caps(
    m: &MatroidHandle,
    t: &Tower,
    x: Subset,
    caps: &Caps,
) -> Result<Vec<(usize, usize)>> {
    require_tower(m, t)?;
    let ms = members(x);
    if ms.is_empty() || ms.last().is_some_and(|&v| v > t.order()) {
        return Err(Error::pre("X must be a nonempty subset of [n]"));
    }
    if !digraph_unchecked(m, t).is_path(x) {
        return Err(Error::pre(format!("{ms:?} does not induce a path")));
    }
    let k = ms.len();
    let mapping: Vec<(usize, usize)> = complete_graph_edges(k + 1)
        .into_iter()
        .enumerate()
        .map(|(id, (a, b))| {
            let sub: Subset = ms[a..b].iter().map(|&i| bit(i)).fold(0, |acc, v| acc | v);
            (id, t.get(sub))
        })
        .collect();
    let target = complete_graphic(k + 1);
    Caps::check("clique restriction size", mapping.len() as u64, caps.iso)?;
    let images: ElemSet = mapping.iter().map(|&(_, e)| e).collect();
    if images.len() != mapping.len() {
        return Err(Error::CheckFailed("path entries are not distinct".into()));
    }
    let n = mapping.len();
    for mask in 0u64..1 << n {
        let (mut a, mut b) = (ElemSet::new(), ElemSet::new());
        for (i, &(te, he)) in mapping.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.insert(te);
                b.insert(he);
            }
        }
        if target.rk(&a) != m.rk(&b) {
            return Err(Error::CheckFailed(format!("restriction differs from M(K_{}) on {b}", k + 1)));
        }
    }
    Ok(mapping)
}
