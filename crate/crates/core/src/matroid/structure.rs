use std::collections::HashMap;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::Result;

use super::handle::MatroidHandle;

/// Loops and parallel classes of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplification {
    pub loops: Vec<usize>,
    /// Parallel classes, each sorted, ordered by least element.
    pub classes: Vec<Vec<usize>>,
}

impl Simplification {
    /// Least element of each parallel class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Class index of every nonloop.
    pub fn class_of(&self) -> HashMap<usize, usize> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&e| (e, i)))
            .collect()
    }
}

pub fn simplification(m: &MatroidHandle) -> Simplification {
    let mut loops = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for e in m.ground().iter() {
        if m.is_loop(e) {
            loops.push(e);
            continue;
        }
        match classes.iter_mut().find(|c| m.rk_ids(&[c[0], e]) == 1) {
            Some(c) => c.push(e),
            None => classes.push(vec![e]),
        }
    }
    Simplification { loops, classes }
}

/// The simplification, realised as the restriction to class representatives.
pub fn simplify(m: &MatroidHandle) -> MatroidHandle {
    let reps: ElemSet = simplification(m).representatives().into_iter().collect();
    m.restrict(&reps).expect("representatives lie in the ground set")
}

/// Number of points (rank-1 flats).
pub fn epsilon(m: &MatroidHandle) -> usize {
    simplification(m).classes.len()
}

pub fn is_simple(m: &MatroidHandle) -> bool {
    let s = simplification(m);
    s.loops.is_empty() && s.classes.iter().all(|c| c.len() == 1)
}

/// All circuits with at most `max_size` elements, each sorted, ordered by
/// size and then lexicographically.
///
/// Circuits are found by growing independent sets in increasing id order and
/// testing minimality of each dependent extension.
pub fn circuits_up_to(m: &MatroidHandle, max_size: usize) -> Vec<Vec<usize>> {
    let ids = m.elements();
    let mut found = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    grow(m, &ids, 0, &mut stack, max_size, &mut found);
    found.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

fn grow(
    m: &MatroidHandle,
    ids: &[usize],
    from: usize,
    cur: &mut Vec<usize>,
    max_size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() >= max_size {
        return;
    }
    for i in from..ids.len() {
        cur.push(ids[i]);
        let set: ElemSet = cur.iter().collect();
        if m.rk(&set) == cur.len() {
            grow(m, ids, i + 1, cur, max_size, out);
        } else if m.is_circuit(&set) {
            out.push(cur.clone());
        }
        cur.pop();
    }
}

/// All circuits, guarded by the circuit cap on the ground set size.
pub fn circuits(m: &MatroidHandle, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    Caps::check("ground set for circuit enumeration", m.size() as u64, caps.circuits.max(caps.iso))?;
    Ok(circuits_up_to(m, m.rank() + 1))
}

/// All flats of the given rank, ordered lexicographically.
pub fn flats_of_rank(m: &MatroidHandle, k: usize) -> Vec<ElemSet> {
    flats_up_to(m, k).into_iter().filter(|f| m.rk(f) == k).collect()
}

/// All flats of rank at most `k`, ordered by rank and then lexicographically.
pub fn flats_up_to(m: &MatroidHandle, k: usize) -> Vec<ElemSet> {
    let mut level = vec![m.cl(&ElemSet::new())];
    let mut out = level.clone();
    for _ in 0..k.min(m.rank()) {
        let mut next = std::collections::BTreeSet::new();
        for f in &level {
            let mut covered = f.clone();
            for e in m.ground().iter() {
                if !covered.contains(e) {
                    let g = m.cl(&f.with(e));
                    covered.union_with(&g);
                    next.insert(g);
                }
            }
        }
        level = next.into_iter().collect();
        out.extend(level.iter().cloned());
    }
    out
}
