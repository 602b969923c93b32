use std::fmt;
use std::str::FromStr;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::MatroidHandle;

/// Subsets of `[n]` are bitmasks: index `i` (1-based) is bit `i - 1`.
pub type Subset = u32;

pub fn bit(i: usize) -> Subset {
    1 << (i - 1)
}

/// Members of a subset, 1-based and increasing.
pub fn members(x: Subset) -> Vec<usize> {
    (0..32).filter(|b| x >> b & 1 == 1).map(|b| b + 1).collect()
}

/// A family `(e_X : X a nonempty subset of [n])` of element ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tower {
    n: usize,
    /// `entries[X - 1]` is `e_X`.
    entries: Vec<usize>,
}

impl Tower {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Tower> {
        if n == 0 || n > 16 {
            return Err(Error::pre(format!("tower order {n} outside 1..=16")));
        }
        if entries.len() != (1 << n) - 1 {
            return Err(Error::pre(format!(
                "a {n}-tower needs {} entries, got {}",
                (1usize << n) - 1,
                entries.len()
            )));
        }
        Ok(Tower { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> usize) -> Result<Tower> {
        Tower::new(n, (1..1u32 << n).map(f).collect())
    }

    /// The tower `(e_X, e_{Xn}, e_n)` from a point `x` and two
    /// (n-1)-towers.
    pub fn assemble(x: usize, lower: &Tower, upper: &Tower) -> Tower {
        let m = lower.n;
        assert_eq!(m, upper.n);
        let top = bit(m + 1);
        let entries = (1..1u32 << (m + 1))
            .map(|mask| {
                if mask == top {
                    x
                } else if mask & top == 0 {
                    lower.get(mask)
                } else {
                    upper.get(mask & !top)
                }
            })
            .collect();
        Tower { n: m + 1, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Subset) -> usize {
        self.entries[x as usize - 1]
    }

    /// `(X, e_X)` for every nonempty `X`, in increasing mask order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.entries.iter().enumerate().map(|(i, &e)| (i as Subset + 1, e))
    }

    pub fn joint(&self, i: usize) -> usize {
        self.get(bit(i))
    }

    /// `J_X = {e_i : i in X}`.
    pub fn joints_of(&self, x: Subset) -> ElemSet {
        members(x).into_iter().map(|i| self.joint(i)).collect()
    }

    pub fn joints(&self) -> ElemSet {
        self.joints_of(self.full())
    }

    pub fn full(&self) -> Subset {
        ((1u64 << self.n) - 1) as Subset
    }

    /// `E(T)`.
    pub fn elements(&self) -> ElemSet {
        self.entries.iter().collect()
    }

    /// `(e_X : X in S(n-1))`.
    pub fn lower(&self) -> Tower {
        Tower {
            n: self.n - 1,
            entries: self.entries[..(1 << (self.n - 1)) - 1].to_vec(),
        }
    }

    /// `(e_{X+n} : X in S(n-1))`.
    pub fn upper(&self) -> Tower {
        let top = bit(self.n);
        Tower {
            n: self.n - 1,
            entries: (1..top).map(|x| self.get(x | top)).collect(),
        }
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tower n={}", self.n)?;
        for (x, e) in self.entries() {
            writeln!(f, "{x} {e}")?;
        }
        Ok(())
    }
}

impl FromStr for Tower {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tower> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "empty tower file"))?;
        let n: usize = header
            .strip_prefix("tower n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::parse(ln, "expected `tower n=<n>`"))?;
        if n == 0 || n > 16 {
            return Err(Error::parse(ln, format!("tower order {n} outside 1..=16")));
        }
        let mut entries = vec![None; (1 << n) - 1];
        for (ln, line) in lines {
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::parse(ln, "expected `<subset-bitmask> <element-id>`"));
            };
            let x: usize = a.parse().map_err(|_| Error::parse(ln, format!("bad subset {a:?}")))?;
            let e: usize = b.parse().map_err(|_| Error::parse(ln, format!("bad element {b:?}")))?;
            if x == 0 || x > entries.len() {
                return Err(Error::parse(ln, format!("subset {x} outside 1..{}", entries.len())));
            }
            if entries[x - 1].replace(e).is_some() {
                return Err(Error::parse(ln, format!("subset {x} given twice")));
            }
        }
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| Error::parse(0, format!("subset {} missing", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Tower::new(n, entries)
    }
}

/// The first condition of the tower definition that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `n = 1` and `e_1` is a loop (or already gone) in the current minor.
    Loop { element: usize },
    /// Condition (1): `e_X` and `e_{Xn}` are not parallel in `M / e_n`.
    NotParallelAfterContraction { n: usize, subset: Subset },
    /// Condition (2): every `e_X` is parallel or equal to `e_{Xn}` in `M`.
    NoSeparatingPair { n: usize },
    /// Condition (3): the lower family (or, with `upper`, the family
    /// `e_{X+n}`) fails in `M` or in `M / e_n`.
    Lower {
        n: usize,
        upper: bool,
        in_contraction: bool,
        inner: Box<Violation>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { element } => write!(f, "element {element} is a loop"),
            Violation::NotParallelAfterContraction { n, subset } => write!(
                f,
                "condition (1) at order {n}: e_X and e_X+{n} not parallel after contracting e_{n}, X={subset:#b}"
            ),
            Violation::NoSeparatingPair { n } => {
                write!(f, "condition (2) at order {n}: every e_X is parallel to e_X+{n}")
            }
            Violation::Lower {
                n,
                upper,
                in_contraction,
                inner,
            } => write!(
                f,
                "condition (3) at order {n}, {} family in {}: {inner}",
                if *upper { "upper" } else { "lower" },
                if *in_contraction { "M / e_n" } else { "M" }
            ),
        }
    }
}

/// Equal, or parallel nonloops; both must be in the ground set.
pub(crate) fn approx(m: &MatroidHandle, a: usize, b: usize) -> bool {
    m.ground().contains(a) && m.ground().contains(b) && (a == b || m.rk_ids(&[a, b]) == 1 && m.is_nonloop(a) && m.is_nonloop(b))
}

/// `M / e`, where contracting an element that is no longer present does
/// nothing (it behaves as a loop).
pub(crate) fn contract_point(m: &MatroidHandle, e: usize) -> MatroidHandle {
    if m.ground().contains(e) {
        m.contract_ids(&[e]).expect("element is present")
    } else {
        m.clone()
    }
}

/// Check the tower definition recursively, in both `M` and `M / e_n`.
pub fn is_tower(m: &MatroidHandle, t: &Tower) -> Result<Option<Violation>> {
    if let Some(e) = t.elements().difference(m.ground()).first() {
        return Err(Error::UnknownElement(e));
    }
    Ok(check(m, t))
}

pub(crate) fn check(m: &MatroidHandle, t: &Tower) -> Option<Violation> {
    let n = t.order();
    if n == 1 {
        let e = t.joint(1);
        return (!m.is_nonloop(e)).then_some(Violation::Loop { element: e });
    }
    let top = bit(n);
    let en = t.get(top);
    let mc = contract_point(m, en);
    for x in 1..top {
        if !approx(&mc, t.get(x), t.get(x | top)) {
            return Some(Violation::NotParallelAfterContraction { n, subset: x });
        }
    }
    if (1..top).all(|x| approx(m, t.get(x), t.get(x | top))) {
        return Some(Violation::NoSeparatingPair { n });
    }
    for (upper, half) in [(false, t.lower()), (true, t.upper())] {
        for (in_contraction, minor) in [(false, m), (true, &mc)] {
            if let Some(v) = check(minor, &half) {
                return Some(Violation::Lower {
                    n,
                    upper,
                    in_contraction,
                    inner: Box::new(v),
                });
            }
        }
    }
    None
}

/// `T ≈_M T'`: every pair of entries is equal or parallel.
pub fn towers_equivalent(m: &MatroidHandle, a: &Tower, b: &Tower) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::pre(format!(
            "towers of orders {} and {} cannot be compared",
            a.order(),
            b.order()
        )));
    }
    Ok(a.entries().zip(b.entries()).all(|((_, x), (_, y))| approx(m, x, y)))
}
