use std::sync::Arc;

use crate::algebra::{Fe, Field};
use crate::caps::Caps;
use crate::error::{Error, Result};

use super::matrix::{all_vectors, check_columns, normalize, LinearMatroid};

fn count_pg(n: usize, q: u64) -> u64 {
    if n == 0 {
        0
    } else {
        (q.saturating_pow(n as u32) - 1) / (q - 1)
    }
}

/// PG(n-1, q): one column per point, the canonical representative having
/// first nonzero coordinate 1, in lexicographic order.
pub fn projective_geometry(n: usize, q: u64) -> Result<LinearMatroid> {
    projective_geometry_with_caps(n, q, Caps::global())
}

pub fn projective_geometry_with_caps(n: usize, q: u64, caps: &Caps) -> Result<LinearMatroid> {
    let f = Field::with_caps(q, caps)?;
    check_columns(count_pg(n, q), caps)?;
    let cols = canonical_points(&f, n);
    LinearMatroid::new(f, n, cols)
}

fn canonical_points(f: &Field, n: usize) -> Vec<Vec<Fe>> {
    all_vectors(f.order(), n)
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// AG(n-1, q): columns `(1, v)` for every `v` in GF(q)^(n-1), lexicographic.
pub fn affine_geometry(n: usize, q: u64) -> Result<LinearMatroid> {
    affine_geometry_with_caps(n, q, Caps::global())
}

pub fn affine_geometry_with_caps(n: usize, q: u64, caps: &Caps) -> Result<LinearMatroid> {
    if n == 0 {
        return Err(Error::pre("affine geometry needs rank at least 1"));
    }
    let f = Field::with_caps(q, caps)?;
    check_columns(q.saturating_pow(n as u32 - 1), caps)?;
    let cols = all_vectors(f.order(), n - 1)
        .map(|v| {
            let mut c = vec![1];
            c.extend(v);
            c
        })
        .collect();
    LinearMatroid::new(f, n, cols)
}

/// The rank-`n` crown with a rank-`t` projective core over GF(q).
///
/// The points of PG(n-1, q) whose support meets the last `n - t` coordinates
/// in at most one position: the core PG(t-1, q) first, then for each
/// coordinate `j >= t` the `q^t` points `(w, 1_j)` in lexicographic order of `w`,
/// scaled to canonical form.
pub fn crown(n: usize, q: u64, t: usize) -> Result<LinearMatroid> {
    crown_with_caps(n, q, t, Caps::global())
}

pub fn crown_with_caps(n: usize, q: u64, t: usize, caps: &Caps) -> Result<LinearMatroid> {
    if t > n {
        return Err(Error::pre(format!("crown needs t <= n, got t={t}, n={n}")));
    }
    let f = Field::with_caps(q, caps)?;
    let size = (n - t) as u64 * q.saturating_pow(t as u32) + count_pg(t, q);
    check_columns(size, caps)?;
    let mut cols: Vec<Vec<Fe>> = canonical_points(&f, t)
        .into_iter()
        .map(|mut v| {
            v.resize(n, 0);
            v
        })
        .collect();
    for j in t..n {
        for w in all_vectors(f.order(), t) {
            let mut v = w;
            v.resize(n, 0);
            v[j] = 1;
            normalize(&f, &mut v);
            cols.push(v);
        }
    }
    LinearMatroid::new(f, n, cols)
}

/// M(K_t) represented over GF(q) by the columns `e_i - e_j`, `i < j`, in
/// lexicographic order.
pub fn graphic_clique_rep(t: usize, q: u64) -> Result<LinearMatroid> {
    let f = Field::with_caps(q, Caps::global())?;
    let minus_one = f.neg(1);
    let mut cols = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let mut c = vec![0; t];
            c[i] = 1;
            c[j] = minus_one;
            cols.push(c);
        }
    }
    LinearMatroid::new(f, t, cols)
}

/// Parallel connection of `m` and `n` along `p` in `m` and `r` in `n`.
///
/// Elements of `m` keep their ids; the elements of `n` other than `r` follow
/// in increasing order. The basepoint is `p`.
pub fn parallel_connection(
    m: &LinearMatroid,
    p: usize,
    n: &LinearMatroid,
    r: usize,
) -> Result<LinearMatroid> {
    if m.field() != n.field() {
        return Err(Error::pre("parallel connection needs a common field"));
    }
    let a = m.reduced(Some(p))?;
    let b = n.reduced(Some(r))?;
    let (ra, rb) = (a.rows(), b.rows());
    let rows = ra + rb - 1;
    let mut cols = Vec::with_capacity(a.columns().len() + b.columns().len() - 1);
    for c in a.columns() {
        let mut v = c.clone();
        v.resize(rows, 0);
        cols.push(v);
    }
    for (i, c) in b.columns().iter().enumerate() {
        if i == r {
            continue;
        }
        let mut v = vec![0; rows];
        v[0] = c[0];
        v[ra..].copy_from_slice(&c[1..]);
        cols.push(v);
    }
    LinearMatroid::new(Arc::clone(m.field()), rows, cols)
}

/// The rank-`n` example with no U_{2,q+2}-minor and no M(K_{q+1})-minor that
/// has `(n-1)(q^(q-1)-1)/(q-1) + 1` elements.
///
/// For `q = 2` this is the free matroid of rank `n`; otherwise it is the
/// parallel connection of `(n-1)/(q-1)` copies of AG(q-1, q) at a common point.
pub fn coupled_example(n: usize, q: u64) -> Result<LinearMatroid> {
    if !crate::algebra::is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    let step = (q - 1) as usize;
    if n < 2 || (n - 1) % step != 0 {
        return Err(Error::pre(format!(
            "coupled example needs n > 1 and n = 1 mod {step}, got n={n}"
        )));
    }
    let f = Field::new(q)?;
    if q == 2 {
        let cols = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                c
            })
            .collect();
        return LinearMatroid::new(f, n, cols);
    }
    let piece = affine_geometry(q as usize, q)?;
    let mut acc = piece.clone();
    for _ in 1..(n - 1) / step {
        acc = parallel_connection(&acc, 0, &piece, 0)?;
    }
    Ok(acc)
}
