use std::fmt;
use std::str::FromStr;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::MatroidHandle;

/// How a target matroid sits in a host as a minor: contract, delete, then
/// relabel by `mapping` (target element, host element).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub contract: ElemSet,
    pub delete: ElemSet,
    pub mapping: Vec<(usize, usize)>,
}

impl MinorWitness {
    pub fn apply(&self, m: &MatroidHandle) -> Result<MatroidHandle> {
        m.minor(&self.contract, &self.delete)
    }

    /// Replay the witness and compare rank functions on every subset of the
    /// target.
    pub fn verify(&self, m: &MatroidHandle, target: &MatroidHandle, caps: &Caps) -> Result<bool> {
        let minor = self.apply(m)?;
        let images: ElemSet = self.mapping.iter().map(|&(_, h)| h).collect();
        let sources: ElemSet = self.mapping.iter().map(|&(t, _)| t).collect();
        if images != *minor.ground()
            || sources != *target.ground()
            || images.len() != self.mapping.len()
        {
            return Ok(false);
        }
        Caps::check("witness target size", target.size() as u64, caps.iso.max(12))?;
        let n = self.mapping.len();
        for mask in 0u64..1 << n {
            let (mut s, mut h) = (ElemSet::new(), ElemSet::new());
            for (i, &(a, b)) in self.mapping.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s.insert(a);
                    h.insert(b);
                }
            }
            if target.rk(&s) != minor.rk(&h) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "contract={} delete={} map=[", self.contract, self.delete)?;
        for (i, (a, b)) in self.mapping.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "]")
    }
}

fn parse_ids(s: &str) -> Result<ElemSet> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(1, format!("expected [ids], got {s:?}")))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Error::parse(1, format!("{t:?}: {e}"))))
        .collect()
}

impl FromStr for MinorWitness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let field = |key: &str| -> Result<&str> {
            let start = s
                .find(key)
                .ok_or_else(|| Error::parse(1, format!("missing {key}")))?
                + key.len();
            let rest = &s[start..];
            Ok(rest.split_whitespace().next().unwrap_or(""))
        };
        let contract = parse_ids(field("contract=")?)?;
        let delete = parse_ids(field("delete=")?)?;
        let map = field("map=")?;
        let inner = map
            .strip_prefix('[')
            .and_then(|m| m.strip_suffix(']'))
            .ok_or_else(|| Error::parse(1, "map must be [(a,b),...]"))?;
        let mut mapping = Vec::new();
        for pair in inner.split(')').map(|p| p.trim_start_matches(',').trim()) {
            if pair.is_empty() {
                continue;
            }
            let body = pair
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(1, format!("bad pair {pair:?}")))?;
            let (a, b) = body
                .split_once(',')
                .ok_or_else(|| Error::parse(1, format!("bad pair {pair:?}")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::parse(1, format!("{x:?}: {e}")))
            };
            mapping.push((num(a)?, num(b)?));
        }
        Ok(MinorWitness {
            contract,
            delete,
            mapping,
        })
    }
}
