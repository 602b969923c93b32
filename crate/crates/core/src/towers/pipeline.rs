use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{complete_graph_edges, complete_graphic, epsilon, simplify, MatroidHandle};
use crate::search::{has_clique_minor_with_caps, is_b_clique, longest_line_minor_with_caps, MinorWitness};

use super::digraph::{digraph_unchecked, path_to_clique_with_caps};
use super::enumerate::by_triples;
use super::tower::{bit, contract_point, is_tower, Subset, Tower};

/// `M(K_{s+1})` on vertices `0..=s` with a tower in which `e_A` is the edge
/// for the interval `[min A, b]`, `b` the end of the run of consecutive
/// integers in `A` starting at `min A`; interval `[a, b]` is the edge
/// `(a - 1, b)`. Checked with [`is_tower`].
pub fn canonical_clique_tower(s: usize) -> Result<(MatroidHandle, Tower)> {
    if !(1..=5).contains(&s) {
        return Err(Error::pre(format!("canonical clique tower needs 1 <= s <= 5, got {s}")));
    }
    let edges = complete_graph_edges(s + 1);
    let edge_id = |a: usize, b: usize| edges.iter().position(|&e| e == (a, b)).unwrap();
    let tower = Tower::from_fn(s, |x: Subset| {
        let lo = x.trailing_zeros() as usize + 1;
        let run = (x >> (lo - 1)).trailing_ones() as usize;
        edge_id(lo - 1, lo - 1 + run)
    })?;
    let m = complete_graphic(s + 1);
    if let Some(v) = is_tower(&m, &tower)? {
        return Err(Error::CheckFailed(format!("canonical clique tower: {v}")));
    }
    Ok((m, tower))
}

/// How [`find_tower`] reached its tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerRoute {
    /// Greedy descent to a minimal minor keeping the density inequality.
    Density,
    /// Enumeration in `si(M)` (used when the density route gives nothing).
    Direct,
}

/// A tower of the minor `M / contract \ delete`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundTower {
    pub contract: ElemSet,
    pub delete: ElemSet,
    pub tower: Tower,
    pub route: TowerRoute,
}

impl FoundTower {
    pub fn minor(&self, m: &MatroidHandle) -> Result<MatroidHandle> {
        m.minor(&self.contract, &self.delete)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSearch {
    /// The line bound used: `M` has no `U_{2,ell+2}`-minor.
    pub ell: u64,
    /// `ε(M) > ell^C(t+1,2) r(M)`.
    pub hypothesis: bool,
    pub found: Option<FoundTower>,
}

fn choose2(k: usize) -> u32 {
    (k * k.saturating_sub(1) / 2) as u32
}

/// `w_k(s) > c * w_{k-1}(s)` on a simple matroid.
fn density_holds(s: &MatroidHandle, k: usize, c: u128) -> bool {
    let w = |j: usize| -> u128 {
        match j {
            0 => s.rank() as u128,
            1 => epsilon(s) as u128,
            _ => by_triples(s, j).len() as u128,
        }
    };
    let lhs = w(k);
    lhs > 0 && c.checked_mul(w(k - 1)).is_some_and(|rhs| lhs > rhs)
}

/// Look for a t-tower in a minor of `M` by the density route: while
/// `w_k > c_k w_{k-1}` with `c_k = ell^(C(t+1,2) - C(k,2))`, descend to a
/// minimal minor (contract the least point that keeps the inequality, else
/// delete the least such point), then move to order `k+1`. `ell` defaults
/// to one less than the longest line minor.
pub fn find_tower(m: &MatroidHandle, t: usize, ell: Option<u64>) -> Result<TowerSearch> {
    find_tower_with_caps(m, t, ell, Caps::global())
}

pub fn find_tower_with_caps(m: &MatroidHandle, t: usize, ell: Option<u64>, caps: &Caps) -> Result<TowerSearch> {
    if t == 0 || t > 3 {
        return Err(Error::pre(format!("find_tower supports 1 <= t <= 3, got {t}")));
    }
    Caps::check("tower order", t as u64, caps.tower)?;
    let ell = match ell {
        Some(l) => l,
        None => (longest_line_minor_with_caps(m, caps)? as u64).saturating_sub(1),
    };
    let coeff = |k: usize| (ell as u128).checked_pow(choose2(t + 1) - choose2(k));
    let s = simplify(m);
    let relative = |h: &MatroidHandle, tower: Tower, route| FoundTower {
        contract: h.contracted().difference(m.contracted()),
        delete: h.deleted().difference(m.deleted()),
        tower,
        route,
    };
    let hypothesis = coeff(1).is_some_and(|c| density_holds(&s, 1, c));
    if hypothesis {
        let mut cur = s.clone();
        for k in 1..=t {
            if k > 1 && !coeff(k).is_some_and(|c| density_holds(&cur, k, c)) {
                break;
            }
            if k == t {
                if let Some(tower) = by_triples(&cur, t).into_iter().next() {
                    return Ok(TowerSearch {
                        ell,
                        hypothesis,
                        found: Some(relative(&cur, tower, TowerRoute::Density)),
                    });
                }
                break;
            }
            let c = coeff(k).unwrap();
            cur = descend(cur, k, c);
        }
    }
    let found = by_triples(&s, t)
        .into_iter()
        .next()
        .map(|tower| relative(&s, tower, TowerRoute::Direct));
    Ok(TowerSearch {
        ell,
        hypothesis,
        found,
    })
}

/// Greedy descent to a minor minimal for `w_k > c w_{k-1}`.
fn descend(mut cur: MatroidHandle, k: usize, c: u128) -> MatroidHandle {
    'outer: loop {
        let points = cur.elements();
        for &x in &points {
            let cand = simplify(&contract_point(&cur, x));
            if density_holds(&cand, k, c) {
                cur = cand;
                continue 'outer;
            }
        }
        for &x in &points {
            let cand = cur.delete_ids(&[x]).expect("point of the current minor");
            if density_holds(&cand, k, c) {
                cur = cand;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Outcome of turning a tower into a clique minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerClique {
    /// A path of G(T) with at least `t - 1` vertices gave an
    /// `M(K_t)`-restriction.
    Path { path: Vec<usize>, witness: MinorWitness },
    /// `J_L` is a clique frame in `M / J_C` and minor search found `M(K_t)`.
    BClique { joints: ElemSet, witness: MinorWitness },
    /// Neither route applied; minor search in `M | E(T)` found `M(K_t)`.
    Restriction { witness: MinorWitness },
    Inconclusive(String),
}

impl TowerClique {
    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            TowerClique::Path { witness, .. }
            | TowerClique::BClique { witness, .. }
            | TowerClique::Restriction { witness } => Some(witness),
            TowerClique::Inconclusive(_) => None,
        }
    }
}

/// From a tower, an `M(K_t)`-minor: through a long path `P_k = k, π(k),
/// π(π(k)), ..` of G(T) when one has `t - 1` vertices, otherwise through the
/// clique framed by `J_L` in `M / J_C` (`C = π([n])`, `L = [n] - C`). When
/// neither gives the minor, minor search runs on `M | E(T)`.
pub fn clique_from_tower(m: &MatroidHandle, t: &Tower, cliques: usize) -> Result<TowerClique> {
    clique_from_tower_with_caps(m, t, cliques, Caps::global())
}

pub fn clique_from_tower_with_caps(
    m: &MatroidHandle,
    t: &Tower,
    cliques: usize,
    caps: &Caps,
) -> Result<TowerClique> {
    let out = by_structure(m, t, cliques, caps)?;
    let TowerClique::Inconclusive(why) = out else {
        return Ok(out);
    };
    let restricted = m.restrict(&t.elements())?;
    match has_clique_minor_with_caps(&restricted, cliques, caps) {
        Ok(Some(w)) => Ok(TowerClique::Restriction {
            witness: lift(m, &ElemSet::new(), w),
        }),
        Ok(None) => Ok(TowerClique::Inconclusive(format!("{why}; M | E(T) has no M(K_{cliques})-minor"))),
        Err(e) if e.is_cap() => Ok(TowerClique::Inconclusive(format!("{why}; search cap: {e}"))),
        Err(e) => Err(e),
    }
}

/// A witness found in a minor of `m` obtained by contracting `extra`.
fn lift(m: &MatroidHandle, extra: &ElemSet, w: MinorWitness) -> MinorWitness {
    let contract = extra.union(&w.contract);
    let keep: ElemSet = w.mapping.iter().map(|&(_, e)| e).collect();
    MinorWitness {
        delete: m.ground().difference(&contract).difference(&keep),
        contract,
        mapping: w.mapping,
    }
}

fn by_structure(m: &MatroidHandle, t: &Tower, cliques: usize, caps: &Caps) -> Result<TowerClique> {
    if let Some(v) = is_tower(m, t)? {
        return Err(Error::pre(format!("not a tower: {v}")));
    }
    if cliques == 0 {
        return Err(Error::pre("clique order must be at least 1"));
    }
    let n = t.order();
    let g = digraph_unchecked(m, t);
    let pi: Vec<Option<usize>> = (0..=n).map(|k| if k < 2 { None } else { g.pi(k) }).collect();
    let chain = |k: usize| {
        let mut p = vec![k];
        while let Some(j) = pi[*p.last().unwrap()] {
            p.push(j);
        }
        p.reverse();
        p
    };
    let best = (1..=n).map(chain).max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a))).unwrap();
    if best.len() + 1 >= cliques {
        let path: Vec<usize> = best[..cliques - 1].to_vec();
        let x: Subset = path.iter().map(|&i| bit(i)).fold(0, |a, b| a | b);
        let mapping = if path.is_empty() {
            Vec::new()
        } else {
            path_to_clique_with_caps(m, t, x, caps)?
        };
        let keep: ElemSet = mapping.iter().map(|&(_, e)| e).collect();
        let witness = MinorWitness {
            contract: ElemSet::new(),
            delete: m.ground().difference(&keep),
            mapping,
        };
        return Ok(TowerClique::Path { path, witness });
    }
    let c_set: Subset = (2..=n).filter_map(|k| pi[k]).map(bit).fold(0, |a, b| a | b);
    let l_set: Subset = t.full() & !c_set;
    let jc = t.joints_of(c_set);
    let jl = t.joints_of(l_set);
    let nminor = m.contract(&jc)?;
    let bs = jl.to_vec();
    let framed: ElemSet = nminor
        .elements()
        .into_iter()
        .filter(|&e| {
            jl.contains(e)
                || bs.iter().any(|&b| nminor.rk_ids(&[b, e]) == 1 && nminor.is_nonloop(e))
                || bs
                    .iter()
                    .enumerate()
                    .any(|(i, &a)| bs[i + 1..].iter().any(|&b| nminor.rk_ids(&[a, b, e]) == 2))
        })
        .collect();
    let r = nminor.restrict(&framed)?;
    if !is_b_clique(&r, &jl)? {
        return Ok(TowerClique::Inconclusive(format!(
            "J_L = {jl} does not frame a clique in M / J_C (longest path has {} vertices)",
            best.len()
        )));
    }
    match has_clique_minor_with_caps(&r, cliques, caps) {
        Ok(Some(w)) => Ok(TowerClique::BClique {
            witness: lift(m, &jc, w),
            joints: jl,
        }),
        Ok(None) => Ok(TowerClique::Inconclusive(format!(
            "J_L = {jl} frames a clique in M / J_C without an M(K_{cliques})-minor"
        ))),
        Err(e) if e.is_cap() => Ok(TowerClique::Inconclusive(format!("search cap: {e}"))),
        Err(e) => Err(e),
    }
}
