use crate::caps::Caps;
use crate::error::{Error, Result};

/// Index of a group element.
pub type Ge = usize;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    op: Vec<Ge>,
    identity: Ge,
    inv: Vec<Ge>,
    name: String,
}

impl GroupTable {
    /// The cyclic group Z_k with element `i` standing for `i mod k`.
    pub fn cyclic(k: usize) -> Result<GroupTable> {
        GroupTable::cyclic_with_caps(k, Caps::global())
    }

    pub fn cyclic_with_caps(k: usize, caps: &Caps) -> Result<GroupTable> {
        if k == 0 {
            return Err(Error::InvalidGroup("group order must be positive".into()));
        }
        Caps::check("group order", k as u64, caps.group)?;
        let op = (0..k * k).map(|i| (i / k + i % k) % k).collect();
        let inv = (0..k).map(|a| (k - a) % k).collect();
        Ok(GroupTable {
            order: k,
            op,
            identity: 0,
            inv,
            name: format!("cyclic{k}"),
        })
    }

    pub fn trivial() -> GroupTable {
        GroupTable::cyclic_with_caps(1, &Caps::default()).expect("order 1 is within caps")
    }

    /// Validate an explicit table `rows[a][b] = a * b`.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<GroupTable> {
        GroupTable::from_table_with_caps(rows, Caps::global())
    }

    pub fn from_table_with_caps(rows: &[Vec<usize>], caps: &Caps) -> Result<GroupTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        Caps::check("group order", n as u64, caps.group)?;
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} in row {a} out of range")));
            }
        }
        let op: Vec<Ge> = rows.iter().flatten().copied().collect();
        let at = |a: usize, b: usize| op[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order: n,
            op,
            identity,
            inv,
            name: format!("table{n}"),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Ge {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn op(&self, a: Ge, b: Ge) -> Ge {
        self.op[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Ge) -> Ge {
        self.inv[a]
    }

    pub fn elements(&self) -> std::ops::Range<Ge> {
        0..self.order
    }

    /// Least element index different from the identity.
    pub fn first_nonidentity(&self) -> Option<Ge> {
        self.elements().find(|&g| g != self.identity)
    }

    /// Rows of the multiplication table.
    pub fn rows(&self) -> Vec<Vec<Ge>> {
        self.op.chunks(self.order).map(<[Ge]>::to_vec).collect()
    }

    pub fn is_cyclic_named(&self) -> bool {
        self.name.starts_with("cyclic")
    }
}
