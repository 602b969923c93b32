use rayon::prelude::*;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{complete_graph_edges, flats_up_to, MatroidHandle};

use super::points::{Budget, Points};
use super::witness::MinorWitness;

/// The contraction `M / C` for an independent `C` spanning `flat`, with the
/// rest of the flat (now loops) still present.
fn contract_flat(m: &MatroidHandle, flat: &ElemSet) -> (ElemSet, MatroidHandle) {
    let c: ElemSet = m.greedy_basis(flat).into_iter().collect();
    let minor = m.contract(&c).expect("flat lies in the ground set");
    (c, minor)
}

fn witness(m: &MatroidHandle, contract: ElemSet, image: &[usize]) -> MinorWitness {
    let keep: ElemSet = image.iter().collect();
    MinorWitness {
        delete: m.ground().difference(&contract).difference(&keep),
        contract,
        mapping: image.iter().copied().enumerate().collect(),
    }
}

/// Run `f` over the flats of rank at most `max_rank` in order and return the
/// first hit in that order; errors abort the search.
fn first_over_flats<T: Send>(
    m: &MatroidHandle,
    max_rank: usize,
    f: impl Fn(&ElemSet) -> Result<Option<T>> + Sync,
) -> Result<Option<T>> {
    let flats = flats_up_to(m, max_rank);
    let hit = flats.par_iter().find_map_first(|flat| match f(flat) {
        Ok(None) => None,
        Ok(Some(t)) => Some(Ok(t)),
        Err(e) => Some(Err(e)),
    });
    hit.transpose()
}

/// A `U_{2,k}`-minor: `k` points on a line of `si(M / C)` for some
/// independent `C`. The witness maps element `i` of `U_{2,k}` to a host
/// element.
pub fn has_line_minor(m: &MatroidHandle, k: usize) -> Result<Option<MinorWitness>> {
    has_line_minor_with_caps(m, k, Caps::global())
}

pub fn has_line_minor_with_caps(m: &MatroidHandle, k: usize, caps: &Caps) -> Result<Option<MinorWitness>> {
    if k < 2 {
        return Err(Error::pre("line minors need k >= 2"));
    }
    let r = m.rank();
    if r < 2 {
        return Ok(None);
    }
    let budget = Budget::new(caps);
    first_over_flats(m, r - 2, |flat| {
        let (c, minor) = contract_flat(m, flat);
        let pts = Points::new(&minor, &budget)?;
        if pts.len() < k {
            return Ok(None);
        }
        if k == 2 {
            return Ok(Some(witness(m, c, &[pts.ids[0], pts.ids[1]])));
        }
        Ok(pts.lines.iter().find(|l| l.len() >= k).map(|l| {
            let image: Vec<usize> = l[..k].iter().map(|&i| pts.ids[i]).collect();
            witness(m, c, &image)
        }))
    })
}

/// The largest `k` such that `M` has a `U_{2,k}`-minor (0 below rank 2).
pub fn longest_line_minor(m: &MatroidHandle) -> Result<usize> {
    longest_line_minor_with_caps(m, Caps::global())
}

pub fn longest_line_minor_with_caps(m: &MatroidHandle, caps: &Caps) -> Result<usize> {
    let r = m.rank();
    if r < 2 {
        return Ok(0);
    }
    let budget = Budget::new(caps);
    let flats = flats_up_to(m, r - 2);
    let best = flats
        .par_iter()
        .map(|flat| {
            let (_, minor) = contract_flat(m, flat);
            let pts = Points::new(&minor, &budget)?;
            Ok(pts.lines.iter().map(Vec::len).max().unwrap_or(pts.len().min(2)))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(best.into_iter().max().unwrap_or(0))
}

/// An `M(K_t)`-minor. The witness maps the edges of K_t, numbered in
/// lexicographic order, to host elements.
///
/// For each flat F (by rank, then lexicographically) the search looks in
/// `si(M / F)` for a star basis `b_1..b_{t-1}` and, for each pair, a third
/// point `e_ij` on the line `b_i b_j`, such that every `e_ij, e_ik, e_jk`
/// is a triangle. Such a configuration is always an `M(K_t)`-restriction.
pub fn has_clique_minor(m: &MatroidHandle, t: usize) -> Result<Option<MinorWitness>> {
    has_clique_minor_with_caps(m, t, Caps::global())
}

pub fn has_clique_minor_with_caps(m: &MatroidHandle, t: usize, caps: &Caps) -> Result<Option<MinorWitness>> {
    if t == 0 {
        return Err(Error::pre("clique minors need t >= 1"));
    }
    let r = m.rank();
    if t == 1 {
        return Ok(Some(witness(m, ElemSet::new(), &[])));
    }
    if r < t - 1 {
        return Ok(None);
    }
    let budget = Budget::new(caps);
    first_over_flats(m, r - (t - 1), |flat| {
        let (c, minor) = contract_flat(m, flat);
        let pts = Points::new(&minor, &budget)?;
        if pts.len() < t * (t - 1) / 2 {
            return Ok(None);
        }
        let alive = pts.triangle_core(t - 2);
        if alive.iter().filter(|&&a| a).count() < t * (t - 1) / 2 {
            return Ok(None);
        }
        let found = StarSearch::new(&pts, &alive, t, &budget).run()?;
        Ok(found.map(|image| {
            let ids: Vec<usize> = image.iter().map(|&i| pts.ids[i]).collect();
            witness(m, c, &ids)
        }))
    })
}

/// Backtracking search for a star basis plus triangle-closing points.
struct StarSearch<'a> {
    pts: &'a Points,
    alive: &'a [bool],
    t: usize,
    budget: &'a Budget,
    star: Vec<usize>,
    /// `pair[j][i]` for `i < j` (indices into `star`).
    pair: Vec<Vec<usize>>,
    used: Vec<bool>,
}

impl<'a> StarSearch<'a> {
    fn new(pts: &'a Points, alive: &'a [bool], t: usize, budget: &'a Budget) -> Self {
        StarSearch {
            pts,
            alive,
            t,
            budget,
            star: Vec::new(),
            pair: vec![Vec::new()],
            used: vec![false; pts.len()],
        }
    }

    /// Point indices in K_t edge order: `(0,i)` is `b_i`, `(i,j)` is `e_ij`.
    fn run(mut self) -> Result<Option<Vec<usize>>> {
        if !self.choose_star(0)? {
            return Ok(None);
        }
        let mut image = Vec::new();
        for (a, b) in complete_graph_edges(self.t) {
            image.push(if a == 0 { self.star[b - 1] } else { self.pair[b - 1][a - 1] });
        }
        Ok(Some(image))
    }

    /// Points on the line `xy` other than `x`, `y` that are alive.
    fn thirds(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.pts
            .line(x, y)
            .iter()
            .copied()
            .filter(move |&z| z != x && z != y && self.alive[z])
    }

    fn choose_star(&mut self, from: usize) -> Result<bool> {
        if self.star.len() == self.t - 1 {
            return self.fill_pairs(1, 0);
        }
        let p = self.pts.len();
        let remaining = self.t - 1 - self.star.len();
        for x in from..p {
            if p - x < remaining {
                break;
            }
            if !self.alive[x] || self.star.iter().any(|&b| self.thirds(b, x).next().is_none()) {
                continue;
            }
            self.budget.tick(1)?;
            let mut cand = self.star.clone();
            cand.push(x);
            if self.pts.rank(&cand) != cand.len() {
                continue;
            }
            self.star.push(x);
            self.used[x] = true;
            if self.choose_star(x + 1)? {
                return Ok(true);
            }
            self.used[x] = false;
            self.star.pop();
        }
        Ok(false)
    }

    /// Assign `e_ij` for star indices `i < j`, in order of `j` then `i`.
    fn fill_pairs(&mut self, j: usize, i: usize) -> Result<bool> {
        let k = self.t - 1;
        if j == k {
            return Ok(true);
        }
        if i == j {
            return self.fill_pairs(j + 1, 0);
        }
        if i == 0 {
            self.pair.truncate(j);
            self.pair.push(Vec::new());
        }
        let (bi, bj) = (self.star[i], self.star[j]);
        let cands: Vec<usize> = self.thirds(bi, bj).filter(|&z| !self.used[z]).collect();
        for z in cands {
            self.budget.tick(i as u64 + 1)?;
            // Triangle {e_hi, e_hj, e_ij} for every h < i.
            let ok = (0..i).all(|h| {
                let (a, b) = (self.pair[i][h], self.pair[j][h]);
                self.pts.rank(&[a, b, z]) == 2
            });
            if !ok {
                continue;
            }
            self.pair[j].push(z);
            self.used[z] = true;
            if self.fill_pairs(j, i + 1)? {
                return Ok(true);
            }
            self.used[z] = false;
            self.pair[j].pop();
        }
        Ok(false)
    }
}
