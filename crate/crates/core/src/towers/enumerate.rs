use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::error::Result;
use crate::matroid::{simplification, simplify, MatroidHandle};

use super::tower::{bit, check, contract_point, Tower};

fn check_order(n: usize, caps: &Caps) -> Result<()> {
    Caps::check("tower order", n as u64, caps.tower)
}

/// One representative of each equivalence class of n-towers: the n-towers
/// of `si(M)`, where `si(M)` keeps the least element of each parallel class.
/// Sorted.
pub fn enumerate_towers(m: &MatroidHandle, n: usize) -> Result<Vec<Tower>> {
    enumerate_towers_with_caps(m, n, Caps::global())
}

pub fn enumerate_towers_with_caps(m: &MatroidHandle, n: usize, caps: &Caps) -> Result<Vec<Tower>> {
    check_order(n, caps)?;
    let s = simplify(m);
    Ok(by_triples(&s, n))
}

/// `w_n(M)`, with `w_0(M) = r(M)`.
pub fn count_w(m: &MatroidHandle, n: usize) -> Result<usize> {
    count_w_with_caps(m, n, Caps::global())
}

pub fn count_w_with_caps(m: &MatroidHandle, n: usize, caps: &Caps) -> Result<usize> {
    if n == 0 {
        return Ok(m.rank());
    }
    Ok(enumerate_towers_with_caps(m, n, caps)?.len())
}

/// The (n-1)-towers of the simple matroid `s` that remain towers of `s / x`,
/// grouped into classes of towers equivalent in `s / x`. Classes are ordered
/// by their least member; members are sorted.
pub(crate) fn classes_at(s: &MatroidHandle, towers: &[Tower], x: usize) -> Vec<Vec<Tower>> {
    let sx = contract_point(s, x);
    let class = simplification(&sx).class_of();
    let mut groups: BTreeMap<Vec<usize>, Vec<Tower>> = BTreeMap::new();
    for t in towers {
        if check(&sx, t).is_some() {
            continue;
        }
        let key = t.entries().map(|(_, e)| class[&e]).collect();
        groups.entry(key).or_default().push(t.clone());
    }
    let mut out: Vec<Vec<Tower>> = groups.into_values().collect();
    for c in &mut out {
        c.sort();
    }
    out.sort();
    out
}

/// n-towers of a simple matroid, from triples `(x, T0, T1)` of a point and two
/// distinct (n-1)-towers equivalent in `s / x`.
pub(crate) fn by_triples(s: &MatroidHandle, n: usize) -> Vec<Tower> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return s
            .elements()
            .into_iter()
            .filter(|&e| s.is_nonloop(e))
            .map(|e| Tower::new(1, vec![e]).unwrap())
            .collect();
    }
    let prev = by_triples(s, n - 1);
    let per_x: Vec<Vec<Tower>> = s
        .elements()
        .par_iter()
        .map(|&x| {
            let mut out = Vec::new();
            for class in classes_at(s, &prev, x) {
                for t0 in &class {
                    for t1 in &class {
                        if t0 != t1 {
                            out.push(Tower::assemble(x, t0, t1));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut all: Vec<Tower> = per_x.into_iter().flatten().collect();
    all.sort();
    all
}

/// n-towers of `si(M)` straight from the definition: extend each direct
/// (n-1)-tower by a point `x` and entries `e_{Xn}` on the line through `e_X`
/// and `x`, keeping those passing the full recursive check. Independent of
/// the triple construction; used to cross-check it.
pub fn enumerate_towers_direct(m: &MatroidHandle, n: usize) -> Result<Vec<Tower>> {
    check_order(n, Caps::global())?;
    let s = simplify(m);
    Ok(direct(&s, n))
}

fn direct(s: &MatroidHandle, n: usize) -> Vec<Tower> {
    if n <= 1 {
        return by_triples(s, n);
    }
    let prev = direct(s, n - 1);
    let points = s.elements();
    let mut out: Vec<Tower> = points
        .par_iter()
        .flat_map_iter(|&x| {
            let mut found = Vec::new();
            for t0 in &prev {
                let options: Vec<Vec<usize>> = t0
                    .entries()
                    .map(|(_, e)| {
                        points
                            .iter()
                            .copied()
                            .filter(|&y| y != x && s.rk_ids(&[e, x, y]) <= 2)
                            .collect()
                    })
                    .collect();
                extend(s, x, t0, &options, &mut Vec::new(), &mut found);
            }
            found
        })
        .collect();
    out.sort();
    out
}

fn extend(
    s: &MatroidHandle,
    x: usize,
    t0: &Tower,
    options: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    found: &mut Vec<Tower>,
) {
    if chosen.len() == options.len() {
        let upper = Tower::new(t0.order(), chosen.clone()).unwrap();
        let t = Tower::assemble(x, t0, &upper);
        debug_assert_eq!(t.get(bit(t.order())), x);
        if check(s, &t).is_none() {
            found.push(t);
        }
        return;
    }
    for &y in &options[chosen.len()] {
        chosen.push(y);
        extend(s, x, t0, options, chosen, found);
        chosen.pop();
    }
}

/// Counts around one order `i` of a simple matroid `M_0 = si(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub i: usize,
    pub w_i: usize,
    /// `Σ_x (w_i(M_0) - w_i(M_0 / x))`.
    pub delta_i: i64,
    /// `Σ_x Σ_C |C| (|C| - 1)`: the number of (i+1)-towers built from triples.
    pub triple_count: usize,
    pub per_point: Vec<PointCensus>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCensus {
    pub x: usize,
    /// `w_i(M_0 / x)`.
    pub w_i_contracted: usize,
    /// i-towers `T` of `M_0` with `x` in `cl(E(T))`.
    pub a_size: usize,
    /// Sizes of the classes of i-towers of `M_0` equivalent in `M_0 / x`.
    pub class_sizes: Vec<usize>,
}

/// Census of `si(M)` at order `i >= 1`.
pub fn tower_census(m: &MatroidHandle, i: usize) -> Result<Census> {
    tower_census_with_caps(m, i, Caps::global())
}

pub fn tower_census_with_caps(m: &MatroidHandle, i: usize, caps: &Caps) -> Result<Census> {
    check_order(i + 1, caps)?;
    let s = simplify(m);
    let towers = if i == 0 { Vec::new() } else { by_triples(&s, i) };
    let w_i = if i == 0 { s.rank() } else { towers.len() };
    let per_point: Vec<PointCensus> = s
        .elements()
        .par_iter()
        .map(|&x| {
            let sx = contract_point(&s, x);
            let w_i_contracted = if i == 0 { sx.rank() } else { by_triples(&simplify(&sx), i).len() };
            let classes = if i == 0 { Vec::new() } else { classes_at(&s, &towers, x) };
            let class_sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
            let a_size = towers
                .iter()
                .filter(|t| {
                    let e = t.elements();
                    s.rk(&e.with(x)) == s.rk(&e)
                })
                .count();
            PointCensus {
                x,
                w_i_contracted,
                a_size,
                class_sizes,
            }
        })
        .collect();
    let delta_i = per_point
        .iter()
        .map(|p| w_i as i64 - p.w_i_contracted as i64)
        .sum();
    let triple_count = if i == 0 {
        s.elements().iter().filter(|&&e| s.is_nonloop(e)).count()
    } else {
        per_point
            .iter()
            .flat_map(|p| p.class_sizes.iter().map(|&c| c * (c - 1)))
            .sum()
    };
    Ok(Census {
        i,
        w_i,
        delta_i,
        triple_count,
        per_point,
    })
}
