use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::largest_prime_power_le;
use crate::error::{Error, Result};

/// Thomason's constant as usually quoted.
pub const ALPHA: f64 = 0.319;

/// The constant `C = 8 * 22^2` in the absolute threshold.
pub const ABSOLUTE_C: u64 = 8 * 22 * 22;

/// The root in `(0, 1)` of `1 - x + 2x ln x = 0`, found by bisection.
pub fn thomason_lambda() -> f64 {
    let f = |x: f64| 1.0 - x + 2.0 * x * x.ln();
    let (mut lo, mut hi) = (1e-12, 0.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `(1 - lambda) / (2 sqrt(ln(1/lambda)))`, which evaluates to 0.3190...
pub fn thomason_alpha() -> f64 {
    let l = thomason_lambda();
    (1.0 - l) / (2.0 * (1.0 / l).ln().sqrt())
}

/// Known bounds on `d(t)`, the least average-degree coefficient forcing a
/// K_t-minor.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityBounds {
    pub t: u64,
    pub lower: BigRational,
    pub upper: f64,
}

pub fn density_bounds(t: u64) -> DensityBounds {
    let tf = t as f64;
    DensityBounds {
        t,
        lower: BigRational::from_integer(BigInt::from(t) - 2),
        upper: if t < 2 { 0.0 } else { 22.0 * tf * tf.ln().sqrt() },
    }
}

/// The value of `d_l(t)` used by a threshold.
#[derive(Debug, Clone, PartialEq)]
pub enum DEll {
    /// `(t - 1)/4`, exact, for `l <= 2`.
    Exact(BigRational),
    /// The upper endpoint `22 t sqrt(ln t)` of the `d(t)` interval, for `l >= 3`.
    UpperEndpoint(f64),
}

impl DEll {
    pub fn approx(&self) -> f64 {
        match self {
            DEll::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            DEll::UpperEndpoint(x) => *x,
        }
    }
}

pub fn d_ell(ell: u64, t: u64) -> DEll {
    if ell <= 2 {
        DEll::Exact(BigRational::new(BigInt::from(t) - 1, BigInt::from(4)))
    } else {
        DEll::UpperEndpoint(density_bounds(t).upper)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    General,
    Binary,
    Absolute,
}

/// A density threshold `base^exponent`, kept in logarithmic form.
#[derive(Debug, Clone, PartialEq)]
pub struct Threshold {
    pub base: u64,
    /// The exponent when it is an exact rational.
    pub exponent_exact: Option<BigRational>,
    /// The exponent as a float (always present).
    pub exponent: f64,
    /// The `d_l(t)` value substituted, when the variant uses one.
    pub d_used: Option<DEll>,
}

impl Threshold {
    /// Natural logarithm of the threshold.
    pub fn ln_value(&self) -> f64 {
        self.exponent * (self.base as f64).ln()
    }

    /// The threshold as an integer, when the exponent is an exact integer of
    /// at most `max_exponent`.
    pub fn as_integer(&self, max_exponent: u64) -> Option<BigUint> {
        let e = self.exponent_exact.as_ref()?;
        if !e.is_integer() {
            return None;
        }
        let e = e.to_integer().to_u64()?;
        (e <= max_exponent).then(|| BigUint::from(self.base).pow(e as u32))
    }
}

/// The coefficient of `r(M)` beyond which a clique minor is forced.
///
/// `General` is `l^(8 (l-1)^2 t^2 d_l(t)^2)`, `Binary` is `2^(t^4/2)`, and
/// `Absolute` is `l^(C (l-1)^2 t^4 ln t)`.
pub fn density_threshold(ell: u64, t: u64, variant: Variant) -> Result<Threshold> {
    if ell < 1 || t < 1 {
        return Err(Error::pre("density threshold needs l >= 1 and t >= 1"));
    }
    let big = |x: u64| BigRational::from_integer(BigInt::from(x));
    Ok(match variant {
        Variant::Binary => {
            let e = big(t).pow(4) / big(2);
            Threshold {
                base: 2,
                exponent: e.to_f64().unwrap_or(f64::INFINITY),
                exponent_exact: Some(e),
                d_used: None,
            }
        }
        Variant::General => {
            let d = d_ell(ell, t);
            let lead = big(8) * big(ell - 1).pow(2) * big(t).pow(2);
            match &d {
                DEll::Exact(r) => {
                    let e = lead * r.pow(2);
                    Threshold {
                        base: ell,
                        exponent: e.to_f64().unwrap_or(f64::INFINITY),
                        exponent_exact: Some(e),
                        d_used: Some(d),
                    }
                }
                DEll::UpperEndpoint(x) => Threshold {
                    base: ell,
                    exponent: lead.to_f64().unwrap_or(f64::INFINITY) * x * x,
                    exponent_exact: None,
                    d_used: Some(d),
                },
            }
        }
        Variant::Absolute => {
            let lead = ABSOLUTE_C as f64 * ((ell - 1) as f64).powi(2) * (t as f64).powi(4);
            let ln_t = (t as f64).ln();
            Threshold {
                base: ell,
                exponent: lead * ln_t,
                exponent_exact: (t == 1 || ell == 1).then(BigRational::zero),
                d_used: None,
            }
        }
    })
}

/// `q^s n + (q^s - 1)/(q - 1) - s q^s` with `s = t - 3` and `q` the largest
/// prime power at most `l`.
pub fn crown_lower_bound(ell: u64, t: u64, n: u64) -> Result<i128> {
    if t < 4 {
        return Err(Error::pre(format!("crown lower bound needs t >= 4, got {t}")));
    }
    let q = largest_prime_power_le(ell)
        .ok_or_else(|| Error::pre(format!("no prime power at most {ell}")))? as i128;
    let s = (t - 3) as u32;
    let overflow = || Error::pre("crown lower bound overflows 128 bits");
    let qs = q.checked_pow(s).ok_or_else(overflow)?;
    let a = qs.checked_mul(n as i128).ok_or_else(overflow)?;
    let b = (qs - 1) / (q - 1);
    let c = qs.checked_mul(s as i128).ok_or_else(overflow)?;
    Ok(a + b - c)
}

/// Exponents of the binary threshold and of the general one at `l = 2` with
/// `d_2(t)` replaced by `d`.
pub fn binary_exponents(t: u64, d: &BigRational) -> (BigRational, BigRational) {
    let big = |x: u64| BigRational::from_integer(BigInt::from(x));
    let binary = big(t).pow(4) / big(2);
    let general = big(8) * big(t).pow(2) * d.pow(2);
    (binary, general)
}

/// Kung's bound `(l^r - 1)/(l - 1)` on the number of points of a rank-`r`
/// matroid with no `U_{2,l+2}`-minor (`r` when `l = 1`). `None` on overflow.
pub fn kung_bound(ell: u64, r: u32) -> Option<u128> {
    match ell {
        0 => None,
        1 => Some(r as u128),
        _ => Some(((ell as u128).checked_pow(r)? - 1) / (ell as u128 - 1)),
    }
}
