use crate::caps::Caps;
use crate::error::Result;

use super::handle::MatroidHandle;

/// Per-element invariant: loop flag plus the number of circuits of each size
/// through the element.
fn signatures(table: &[u8], n: usize) -> Vec<Vec<u32>> {
    let mut sig = vec![vec![0u32; n + 2]; n];
    for mask in 1usize..1 << n {
        let k = mask.count_ones() as usize;
        if table[mask] as usize + 1 != k {
            continue;
        }
        let minimal = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| table[mask & !(1 << i)] as usize == k - 1);
        if minimal {
            for (i, s) in sig.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    s[k] += 1;
                }
            }
        }
    }
    for (i, s) in sig.iter_mut().enumerate() {
        s[0] = table[1 << i] as u32;
    }
    sig
}

/// An isomorphism from `m` to `n`, if one exists.
///
/// The result lists pairs `(element of m, element of n)` in increasing order
/// of the `m` element.
pub fn isomorphism(m: &MatroidHandle, n: &MatroidHandle, caps: &Caps) -> Result<Option<Vec<(usize, usize)>>> {
    if m.size() != n.size() || m.rank() != n.rank() {
        return Ok(None);
    }
    let size = m.size();
    let tm = m.rank_table(caps)?;
    let tn = n.rank_table(caps)?;
    let sm = signatures(&tm, size);
    let sn = signatures(&tn, size);
    let mut sorted_m = sm.clone();
    let mut sorted_n = sn.clone();
    sorted_m.sort();
    sorted_n.sort();
    if sorted_m != sorted_n {
        return Ok(None);
    }

    // Map the elements with the rarest signatures first.
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&i| (sn.iter().filter(|s| **s == sm[i]).count(), i));

    let mut image = vec![usize::MAX; size];
    let mut used = vec![false; size];
    // Every subset of the already-mapped elements, as (mask in m, image mask in n).
    let mut subsets: Vec<(usize, usize)> = vec![(0, 0)];
    if extend(0, &order, &sm, &sn, &tm, &tn, &mut image, &mut used, &mut subsets) {
        let ids_m = m.elements();
        let ids_n = n.elements();
        Ok(Some(
            (0..size).map(|i| (ids_m[i], ids_n[image[i]])).collect(),
        ))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    sm: &[Vec<u32>],
    sn: &[Vec<u32>],
    tm: &[u8],
    tn: &[u8],
    image: &mut [usize],
    used: &mut [bool],
    subsets: &mut Vec<(usize, usize)>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let i = order[depth];
    for j in 0..order.len() {
        if used[j] || sm[i] != sn[j] {
            continue;
        }
        let ok = subsets
            .iter()
            .all(|&(a, b)| tm[a | 1 << i] == tn[b | 1 << j]);
        if !ok {
            continue;
        }
        let before = subsets.len();
        for k in 0..before {
            let (a, b) = subsets[k];
            subsets.push((a | 1 << i, b | 1 << j));
        }
        image[i] = j;
        used[j] = true;
        if extend(depth + 1, order, sm, sn, tm, tn, image, used, subsets) {
            return true;
        }
        used[j] = false;
        subsets.truncate(before);
    }
    false
}

pub fn is_isomorphic(m: &MatroidHandle, n: &MatroidHandle, caps: &Caps) -> Result<bool> {
    Ok(isomorphism(m, n, caps)?.is_some())
}
