use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{flats_up_to, MatroidHandle};

use super::points::Budget;
use super::witness::MinorWitness;

/// A restriction of `m` isomorphic to `n`: pairs `(n element, m element)`
/// covering all of `n`, first in lexicographic order of images.
pub fn find_restriction(m: &MatroidHandle, n: &MatroidHandle) -> Result<Option<Vec<(usize, usize)>>> {
    find_restriction_with_caps(m, n, Caps::global())
}

pub fn find_restriction_with_caps(
    m: &MatroidHandle,
    n: &MatroidHandle,
    caps: &Caps,
) -> Result<Option<Vec<(usize, usize)>>> {
    let budget = Budget::new(caps);
    restriction(m, n, caps, &budget)
}

fn restriction(
    m: &MatroidHandle,
    n: &MatroidHandle,
    caps: &Caps,
    budget: &Budget,
) -> Result<Option<Vec<(usize, usize)>>> {
    if n.size() > m.size() || n.rank() > m.rank() {
        return Ok(None);
    }
    let table = n.rank_table(caps)?;
    let targets = n.elements();
    let hosts = m.elements();
    let mut s = Extend {
        m,
        table: &table,
        hosts: &hosts,
        budget,
        image: Vec::new(),
    };
    Ok(s.go()?.then(|| targets.iter().copied().zip(s.image.iter().copied()).collect()))
}

struct Extend<'a> {
    m: &'a MatroidHandle,
    table: &'a [u8],
    hosts: &'a [usize],
    budget: &'a Budget,
    image: Vec<usize>,
}

impl Extend<'_> {
    fn go(&mut self) -> Result<bool> {
        let k = self.image.len();
        if 1usize << k == self.table.len() {
            return Ok(true);
        }
        let bit = 1usize << k;
        for &h in self.hosts {
            if self.image.contains(&h) {
                continue;
            }
            self.budget.tick(bit as u64)?;
            // Every subset containing the new element must keep its rank.
            let ok = (0..bit).all(|low| {
                let s: ElemSet = (0..k)
                    .filter(|i| low >> i & 1 == 1)
                    .map(|i| self.image[i])
                    .chain([h])
                    .collect();
                self.m.rk(&s) == self.table[low | bit] as usize
            });
            if !ok {
                continue;
            }
            self.image.push(h);
            if self.go()? {
                return Ok(true);
            }
            self.image.pop();
        }
        Ok(false)
    }
}

/// A minor of `m` isomorphic to `n`, as a contraction of an independent set
/// followed by a restriction.
pub fn find_minor(m: &MatroidHandle, n: &MatroidHandle) -> Result<Option<MinorWitness>> {
    find_minor_with_caps(m, n, Caps::global())
}

pub fn find_minor_with_caps(m: &MatroidHandle, n: &MatroidHandle, caps: &Caps) -> Result<Option<MinorWitness>> {
    let (r, rn) = (m.rank(), n.rank());
    if rn > r || n.size() > m.size() {
        return Ok(None);
    }
    let budget = Budget::new(caps);
    for flat in flats_up_to(m, r - rn) {
        let c: ElemSet = m.greedy_basis(&flat).into_iter().collect();
        let minor = m.contract(&c)?;
        if let Some(map) = restriction(&minor, n, caps, &budget)? {
            let keep: ElemSet = map.iter().map(|&(_, h)| h).collect();
            return Ok(Some(MinorWitness {
                delete: m.ground().difference(&c).difference(&keep),
                contract: c,
                mapping: map,
            }));
        }
    }
    Ok(None)
}

/// `B` is a basis, every element is spanned by at most two elements of `B`,
/// and every pair from `B` lies in a triangle.
pub fn is_b_clique(m: &MatroidHandle, b: &ElemSet) -> Result<bool> {
    if !b.is_subset(m.ground()) {
        return Err(Error::UnknownElement(b.difference(m.ground()).first().unwrap()));
    }
    let r = m.rank();
    if b.len() != r || m.rk(b) != r {
        return Ok(false);
    }
    let bs = b.to_vec();
    let framed = m.elements().into_iter().all(|e| {
        b.contains(e)
            || m.is_loop(e)
            || bs.iter().any(|&x| m.rk_ids(&[x, e]) == 1)
            || bs
                .iter()
                .enumerate()
                .any(|(i, &x)| bs[i + 1..].iter().any(|&y| m.rk_ids(&[x, y, e]) == 2))
    });
    if !framed {
        return Ok(false);
    }
    let triangles = bs.iter().enumerate().all(|(i, &x)| {
        bs[i + 1..]
            .iter()
            .all(|&y| m.elements().into_iter().any(|e| e != x && e != y && m.is_circuit_ids(&[x, y, e])))
    });
    Ok(triangles)
}
