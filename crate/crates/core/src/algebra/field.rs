use std::fmt;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A field element, stored as a dense index in `0..q`.
///
/// The index of `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` is `sum c_i p^i`, so
/// `0` is zero, `1` is one, and for prime `q` the index is the residue.
pub type Fe = u16;

/// The finite field GF(q) with precomputed operation tables.
#[derive(Clone)]
pub struct Field {
    q: u32,
    p: u32,
    degree: u32,
    /// Coefficients of the defining monic polynomial, low to high with the
    /// leading 1; empty for prime fields.
    modulus: Vec<u32>,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for Field {}

/// Factor `q = p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

/// Largest prime power not exceeding `n`, for `n >= 2`.
pub fn largest_prime_power_le(n: u64) -> Option<u64> {
    (2..=n).rev().find(|&m| is_prime_power(m))
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo a monic `b`, coefficients low-to-high, over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut div = digits(low, p, d as u32);
            div.push(1);
            if poly_rem(poly, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Construct GF(q) under the global caps.
    pub fn new(q: u64) -> Result<Arc<Field>> {
        Field::with_caps(q, Caps::global())
    }

    pub fn with_caps(q: u64, caps: &Caps) -> Result<Arc<Field>> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Caps::check("field order", q, caps.field)?;
        let (q, p) = (q as u32, p as u32);

        // Lexicographically least monic irreducible: lower coefficients read as a
        // base-p integer with a_0 least significant.
        let modulus = if k == 1 {
            Vec::new()
        } else {
            (0..p.pow(k))
                .map(|low| {
                    let mut poly = digits(low, p, k);
                    poly.push(1);
                    poly
                })
                .find(|poly| poly[0] != 0 && irreducible(poly, p))
                .expect("an irreducible polynomial exists in every degree")
        };

        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let dig: Vec<Vec<u32>> = (0..q).map(|a| digits(a, p, k)).collect();
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u32> = (0..k as usize)
                    .map(|i| (dig[a][i] + dig[b][i]) % p)
                    .collect();
                add[a * qs + b] = undigits(&s, p) as Fe;
                let prod = if k == 1 {
                    (a as u32 * b as u32) % p
                } else {
                    let mut raw = vec![0u32; 2 * k as usize - 1];
                    for i in 0..k as usize {
                        for j in 0..k as usize {
                            raw[i + j] = (raw[i + j] + dig[a][i] * dig[b][j]) % p;
                        }
                    }
                    let mut r = poly_rem(&raw, &modulus, p);
                    r.resize(k as usize, 0);
                    undigits(&r, p)
                };
                mul[a * qs + b] = prod as Fe;
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Fe)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as Fe
                }
            })
            .collect();
        Ok(Arc::new(Field {
            q,
            p,
            degree: k,
            modulus,
            add,
            mul,
            neg,
            inv,
        }))
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients of the defining polynomial, low to high, leading 1 included.
    pub fn modulus(&self) -> Vec<u32> {
        if self.degree == 1 {
            vec![0, 1]
        } else {
            self.modulus.clone()
        }
    }

    pub fn check(&self, a: u32) -> Result<Fe> {
        if a < self.q {
            Ok(a as Fe)
        } else {
            Err(Error::InvalidFieldElement(a))
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q as Fe
    }
}
