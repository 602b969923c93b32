use std::sync::atomic::{AtomicU64, Ordering};

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{simplification, MatroidHandle};

/// Shared count of rank queries against the search cap.
pub(crate) struct Budget {
    used: AtomicU64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(caps: &Caps) -> Self {
        Budget {
            used: AtomicU64::new(0),
            limit: caps.search,
        }
    }

    pub(crate) fn tick(&self, n: u64) -> Result<()> {
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if used > self.limit {
            return Err(Error::CapExceeded {
                what: "rank queries in search",
                value: used,
                cap: self.limit,
            });
        }
        Ok(())
    }
}

const NONE: u32 = u32::MAX;

/// The points of a matroid (one representative per parallel class) and the
/// lines they span.
pub(crate) struct Points {
    pub(crate) m: MatroidHandle,
    /// Representative element ids.
    pub(crate) ids: Vec<usize>,
    /// `line_of[i][j]` indexes the line through points `i` and `j`.
    line_of: Vec<Vec<u32>>,
    /// Point indices on each line, increasing.
    pub(crate) lines: Vec<Vec<usize>>,
}

impl Points {
    pub(crate) fn new(m: &MatroidHandle, budget: &Budget) -> Result<Points> {
        let ids = simplification(m).representatives();
        let p = ids.len();
        budget.tick((p * p) as u64)?;
        let mut line_of = vec![vec![NONE; p]; p];
        let mut lines: Vec<Vec<usize>> = Vec::new();
        for i in 0..p {
            for j in i + 1..p {
                if line_of[i][j] != NONE {
                    continue;
                }
                let mut line = vec![i, j];
                for k in j + 1..p {
                    if line_of[i][k] == NONE && m.rk_ids(&[ids[i], ids[j], ids[k]]) == 2 {
                        line.push(k);
                    }
                }
                budget.tick((p - j) as u64)?;
                let idx = lines.len() as u32;
                for (a, &x) in line.iter().enumerate() {
                    for &y in &line[a + 1..] {
                        line_of[x][y] = idx;
                        line_of[y][x] = idx;
                    }
                }
                lines.push(line);
            }
        }
        Ok(Points {
            m: m.clone(),
            ids,
            line_of,
            lines,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.ids.len()
    }

    pub(crate) fn line(&self, i: usize, j: usize) -> &[usize] {
        &self.lines[self.line_of[i][j] as usize]
    }

    pub(crate) fn rank(&self, pts: &[usize]) -> usize {
        let s: ElemSet = pts.iter().map(|&i| self.ids[i]).collect();
        self.m.rk(&s)
    }

    /// Remove points lying on fewer than `need` triangles among the alive
    /// points, until stable. Returns the alive mask.
    pub(crate) fn triangle_core(&self, need: usize) -> Vec<bool> {
        let p = self.len();
        let mut alive = vec![true; p];
        let mut count: Vec<usize> = self.lines.iter().map(Vec::len).collect();
        let choose2 = |n: usize| if n < 2 { 0 } else { n * (n - 1) / 2 };
        let mut on: Vec<Vec<usize>> = vec![Vec::new(); p];
        for (li, l) in self.lines.iter().enumerate() {
            for &x in l {
                on[x].push(li);
            }
        }
        loop {
            let victim = (0..p).find(|&x| {
                alive[x] && on[x].iter().map(|&l| choose2(count[l] - 1)).sum::<usize>() < need
            });
            let Some(x) = victim else { break };
            alive[x] = false;
            for &l in &on[x] {
                count[l] -= 1;
            }
        }
        alive
    }
}
