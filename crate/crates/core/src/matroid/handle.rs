use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::linear::LinearMatroid;

/// A rank function on the ground set `{0, .., len-1}`.
pub trait RankOracle: Send + Sync {
    fn len(&self) -> usize;

    /// Rank of a subset of `{0, .., len-1}`.
    fn rank(&self, set: &ElemSet) -> usize;

    fn describe(&self) -> String;

    fn as_linear(&self) -> Option<&LinearMatroid> {
        None
    }
}

struct Backend {
    oracle: Arc<dyn RankOracle>,
    memo: Option<DashMap<u64, u32>>,
    memo_cap: usize,
}

impl Backend {
    fn rank(&self, set: &ElemSet) -> usize {
        if let (Some(memo), Some(mask)) = (&self.memo, set.as_mask()) {
            if let Some(r) = memo.get(&mask) {
                return *r as usize;
            }
            let r = self.oracle.rank(set);
            if memo.len() < self.memo_cap {
                memo.insert(mask, r as u32);
            }
            r
        } else {
            self.oracle.rank(set)
        }
    }
}

/// A minor `B / C \ D` of a backend matroid `B`.
///
/// Element ids are those of the backend; the ground set is what remains after
/// removing the contracted and deleted sets. Handles are cheap to clone and
/// share the backend (and its rank memo).
#[derive(Clone)]
pub struct MatroidHandle {
    backend: Arc<Backend>,
    ground: ElemSet,
    contracted: ElemSet,
    deleted: ElemSet,
    base_rank: usize,
}

impl fmt::Debug for MatroidHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} / {} \\ {} (size {}, rank {})",
            self.backend.oracle.describe(),
            self.contracted,
            self.deleted,
            self.size(),
            self.rank()
        )
    }
}

impl MatroidHandle {
    pub fn new<O: RankOracle + 'static>(oracle: O) -> Self {
        MatroidHandle::from_arc(Arc::new(oracle))
    }

    pub fn from_arc(oracle: Arc<dyn RankOracle>) -> Self {
        let n = oracle.len();
        let memo_cap = Caps::global().memo_entries as usize;
        let memo = (n <= 64).then(DashMap::new);
        MatroidHandle {
            backend: Arc::new(Backend {
                oracle,
                memo,
                memo_cap,
            }),
            ground: ElemSet::full(n),
            contracted: ElemSet::new(),
            deleted: ElemSet::new(),
            base_rank: 0,
        }
    }

    pub fn backend_len(&self) -> usize {
        self.backend.oracle.len()
    }

    pub fn describe(&self) -> String {
        self.backend.oracle.describe()
    }

    /// The linear backend, if this is a linear matroid with nothing removed.
    pub fn as_linear(&self) -> Option<&LinearMatroid> {
        self.backend.oracle.as_linear()
    }

    pub fn is_full(&self) -> bool {
        self.contracted.is_empty() && self.deleted.is_empty()
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &ElemSet {
        &self.ground
    }

    pub fn elements(&self) -> Vec<usize> {
        self.ground.to_vec()
    }

    pub fn contracted(&self) -> &ElemSet {
        &self.contracted
    }

    pub fn deleted(&self) -> &ElemSet {
        &self.deleted
    }

    /// Rank of a subset of the ground set, without validation.
    #[inline]
    pub(crate) fn rk(&self, set: &ElemSet) -> usize {
        if self.contracted.is_empty() {
            self.backend.rank(set)
        } else {
            self.backend.rank(&set.union(&self.contracted)) - self.base_rank
        }
    }

    pub(crate) fn rk_ids(&self, ids: &[usize]) -> usize {
        self.rk(&ids.iter().collect())
    }

    fn validate(&self, set: &ElemSet) -> Result<()> {
        match set.difference(&self.ground).first() {
            Some(e) => Err(Error::UnknownElement(e)),
            None => Ok(()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rk(&self.ground)
    }

    pub fn rank_of(&self, set: &ElemSet) -> Result<usize> {
        self.validate(set)?;
        Ok(self.rk(set))
    }

    pub fn rank_ids(&self, ids: &[usize]) -> Result<usize> {
        self.rank_of(&ids.iter().collect())
    }

    pub fn is_independent(&self, set: &ElemSet) -> Result<bool> {
        Ok(self.rank_of(set)? == set.len())
    }

    pub fn closure_of(&self, set: &ElemSet) -> Result<ElemSet> {
        self.validate(set)?;
        Ok(self.cl(set))
    }

    pub(crate) fn cl(&self, set: &ElemSet) -> ElemSet {
        let r = self.rk(set);
        let mut out = set.clone();
        for e in self.ground.iter() {
            if !set.contains(e) && self.rk(&set.with(e)) == r {
                out.insert(e);
            }
        }
        out
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.ground.contains(e) && self.rk(&ElemSet::from_iter([e])) == 0
    }

    pub fn is_nonloop(&self, e: usize) -> bool {
        self.ground.contains(e) && self.rk(&ElemSet::from_iter([e])) == 1
    }

    /// `a` and `b` are nonloops of the ground set spanning a rank-1 set.
    pub fn parallel(&self, a: usize, b: usize) -> bool {
        self.is_nonloop(a) && self.is_nonloop(b) && (a == b || self.rk_ids(&[a, b]) == 1)
    }

    pub fn is_circuit(&self, set: &ElemSet) -> bool {
        let k = set.len();
        k > 0
            && set.is_subset(&self.ground)
            && self.rk(set) + 1 == k
            && set.iter().all(|x| self.rk(&set.without(x)) + 1 == k)
    }

    pub fn is_circuit_ids(&self, ids: &[usize]) -> bool {
        let set: ElemSet = ids.iter().collect();
        set.len() == ids.len() && self.is_circuit(&set)
    }

    /// A basis of `set`, built greedily in increasing id order.
    pub fn greedy_basis(&self, set: &ElemSet) -> Vec<usize> {
        let mut basis = ElemSet::new();
        for e in set.iter() {
            let cand = basis.with(e);
            if self.rk(&cand) == cand.len() {
                basis = cand;
            }
        }
        basis.to_vec()
    }

    /// The minor `self / contract \ delete`.
    pub fn minor(&self, contract: &ElemSet, delete: &ElemSet) -> Result<MatroidHandle> {
        self.validate(contract)?;
        self.validate(delete)?;
        if let Some(e) = contract.intersection(delete).first() {
            return Err(Error::Overlap(e));
        }
        let contracted = self.contracted.union(contract);
        let base_rank = self.backend.rank(&contracted);
        Ok(MatroidHandle {
            backend: Arc::clone(&self.backend),
            ground: self.ground.difference(contract).difference(delete),
            contracted,
            deleted: self.deleted.union(delete),
            base_rank,
        })
    }

    pub fn contract(&self, set: &ElemSet) -> Result<MatroidHandle> {
        self.minor(set, &ElemSet::new())
    }

    pub fn contract_ids(&self, ids: &[usize]) -> Result<MatroidHandle> {
        self.contract(&ids.iter().collect())
    }

    pub fn delete(&self, set: &ElemSet) -> Result<MatroidHandle> {
        self.minor(&ElemSet::new(), set)
    }

    pub fn delete_ids(&self, ids: &[usize]) -> Result<MatroidHandle> {
        self.delete(&ids.iter().collect())
    }

    /// The restriction to `set`.
    pub fn restrict(&self, set: &ElemSet) -> Result<MatroidHandle> {
        self.validate(set)?;
        self.delete(&self.ground.difference(set))
    }

    pub fn restrict_ids(&self, ids: &[usize]) -> Result<MatroidHandle> {
        self.restrict(&ids.iter().collect())
    }

    /// An equivalent matroid on `{0, .., size-1}`; `map[i]` is the old id of `i`.
    pub fn compact(&self) -> (MatroidHandle, Vec<usize>) {
        let map = self.elements();
        let view = View {
            parent: self.clone(),
            map: map.clone(),
        };
        (MatroidHandle::new(view), map)
    }

    /// Ranks of all subsets of the ground set, indexed by the bitmask over
    /// the ground set listed in increasing id order.
    pub fn rank_table(&self, caps: &Caps) -> Result<Vec<u8>> {
        let n = self.size();
        Caps::check("ground set for rank table", n as u64, caps.iso)?;
        let ids = self.elements();
        Ok((0..1u64 << n)
            .map(|mask| {
                let s: ElemSet = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
                self.rk(&s) as u8
            })
            .collect())
    }
}

/// A relabelled view of a handle onto `{0, .., n-1}`.
struct View {
    parent: MatroidHandle,
    map: Vec<usize>,
}

impl RankOracle for View {
    fn len(&self) -> usize {
        self.map.len()
    }

    fn rank(&self, set: &ElemSet) -> usize {
        self.parent.rk(&set.iter().map(|i| self.map[i]).collect())
    }

    fn describe(&self) -> String {
        format!("view of {}", self.parent.describe())
    }
}
