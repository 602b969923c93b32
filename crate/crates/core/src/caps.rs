//! Resource caps for exhaustive procedures.
//!
//! Every exponential routine checks its input size against a cap and returns
//! [`Error::CapExceeded`] instead of running away. Defaults can be overridden
//! through the `MXK_CAPS` environment variable, e.g. `MXK_CAPS=field=2048,iso=18`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest field order accepted by the field constructor.
    pub field: u64,
    /// Largest explicit group order.
    pub group: u64,
    /// Largest number of columns produced by a geometry constructor.
    pub columns: u64,
    /// Largest ground set for isomorphism tests and full rank-table checks.
    pub iso: u64,
    /// Largest edge count for exhaustive circuit and balance enumeration.
    pub circuits: u64,
    /// Largest vertex count for graph clique-minor search.
    pub graph: u64,
    /// Largest tower order handled by enumeration.
    pub tower: u64,
    /// Largest number of rank queries a single search may issue.
    pub search: u64,
    /// Largest ground set for which a rank memo keyed by bitmask is kept.
    pub memo_entries: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            field: 1024,
            group: 64,
            columns: 2048,
            iso: 16,
            circuits: 14,
            graph: 12,
            tower: 4,
            search: 200_000_000,
            memo_entries: 4_000_000,
        }
    }
}

static GLOBAL: OnceLock<Caps> = OnceLock::new();

impl Caps {
    /// Caps read once from `MXK_CAPS`, falling back to defaults.
    pub fn global() -> &'static Caps {
        GLOBAL.get_or_init(|| match std::env::var("MXK_CAPS") {
            Ok(spec) => Caps::default().with_overrides(&spec).unwrap_or_default(),
            Err(_) => Caps::default(),
        })
    }

    /// Caps large enough that nothing in the test corpus hits them.
    pub fn generous() -> Caps {
        Caps {
            field: 1 << 16,
            group: 1024,
            columns: 1 << 22,
            iso: 20,
            circuits: 16,
            graph: 16,
            tower: 6,
            search: u64::MAX,
            memo_entries: 16_000_000,
        }
    }

    /// Apply overrides of the form `name=value,name=value`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Caps> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(0, format!("bad cap override `{part}`")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, format!("bad cap value `{v}`")))?;
            let slot = match k.trim() {
                "field" => &mut self.field,
                "group" => &mut self.group,
                "columns" => &mut self.columns,
                "iso" => &mut self.iso,
                "circuits" => &mut self.circuits,
                "graph" => &mut self.graph,
                "tower" => &mut self.tower,
                "search" => &mut self.search,
                "memo" => &mut self.memo_entries,
                other => return Err(Error::parse(0, format!("unknown cap `{other}`"))),
            };
            *slot = v;
        }
        Ok(self)
    }

    pub(crate) fn check(what: &'static str, value: u64, cap: u64) -> Result<()> {
        if value > cap {
            Err(Error::CapExceeded { what, value, cap })
        } else {
            Ok(())
        }
    }
}
