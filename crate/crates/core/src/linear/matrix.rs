use std::sync::Arc;

use crate::algebra::{Fe, Field};
use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{MatroidHandle, RankOracle};

/// A matroid represented by the columns of a matrix over GF(q).
#[derive(Debug, Clone)]
pub struct LinearMatroid {
    field: Arc<Field>,
    rows: usize,
    cols: Vec<Vec<Fe>>,
}

/// Row-echelon accumulator used to test independence of column vectors.
pub(crate) struct Echelon<'f> {
    field: &'f Field,
    basis: Vec<(usize, Vec<Fe>)>,
}

impl<'f> Echelon<'f> {
    pub(crate) fn new(field: &'f Field) -> Self {
        Echelon {
            field,
            basis: Vec::new(),
        }
    }

    /// Reduce `v` against the basis; keep it if it is independent.
    pub(crate) fn push(&mut self, v: &[Fe]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        for (p, b) in &self.basis {
            let c = w[*p];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(b.iter()) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                let s = f.inv(w[p]).expect("pivot is nonzero");
                for x in w.iter_mut() {
                    *x = f.mul(*x, s);
                }
                self.basis.push((p, w));
                true
            }
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }
}

impl LinearMatroid {
    pub fn new(field: Arc<Field>, rows: usize, cols: Vec<Vec<Fe>>) -> Result<Self> {
        for (i, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::pre(format!(
                    "column {i} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            if let Some(&bad) = c.iter().find(|&&x| x as u32 >= field.order()) {
                return Err(Error::InvalidFieldElement(bad as u32));
            }
        }
        Ok(LinearMatroid { field, rows, cols })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[Vec<Fe>] {
        &self.cols
    }

    pub fn into_handle(self) -> MatroidHandle {
        MatroidHandle::new(self)
    }

    pub fn matrix_rank(&self) -> usize {
        self.rank(&ElemSet::full(self.cols.len()))
    }

    /// Row-reduce to a matrix with `rank` rows and the same column matroid.
    ///
    /// If `pivot` is given and is a nonloop, the result has that column equal
    /// to the first unit vector.
    pub fn reduced(&self, pivot: Option<usize>) -> Result<LinearMatroid> {
        let f = &*self.field;
        let mut order: Vec<usize> = (0..self.cols.len()).collect();
        if let Some(p) = pivot {
            if p >= self.cols.len() {
                return Err(Error::UnknownElement(p));
            }
            if self.cols[p].iter().all(|&x| x == 0) {
                return Err(Error::pre(format!("element {p} is a loop")));
            }
            order.retain(|&i| i != p);
            order.insert(0, p);
        }
        // Choose a column basis, then express every column in it.
        let mut ech = Echelon::new(f);
        let mut basis = Vec::new();
        for &i in &order {
            if ech.push(&self.cols[i]) {
                basis.push(i);
            }
        }
        let r = basis.len();
        let mut cols = Vec::with_capacity(self.cols.len());
        for c in &self.cols {
            cols.push(solve(f, &basis.iter().map(|&b| &self.cols[b][..]).collect::<Vec<_>>(), c, self.rows));
        }
        LinearMatroid::new(Arc::clone(&self.field), r, cols)
    }
}

/// Coordinates of `target` in the independent columns `basis`.
fn solve(f: &Field, basis: &[&[Fe]], target: &[Fe], rows: usize) -> Vec<Fe> {
    let r = basis.len();
    // Augmented matrix rows x (r + 1).
    let mut a: Vec<Vec<Fe>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Fe> = basis.iter().map(|c| c[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..r {
        let Some(pr) = (pivot_row..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(pivot_row, pr);
        let s = f.inv(a[pivot_row][col]).unwrap();
        for x in a[pivot_row].iter_mut() {
            *x = f.mul(*x, s);
        }
        for i in 0..rows {
            if i != pivot_row && a[i][col] != 0 {
                let c = a[i][col];
                for j in 0..=r {
                    let v = f.mul(c, a[pivot_row][j]);
                    a[i][j] = f.sub(a[i][j], v);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    let mut x = vec![0; r];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = a[row][r];
    }
    x
}

impl RankOracle for LinearMatroid {
    fn len(&self) -> usize {
        self.cols.len()
    }

    fn rank(&self, set: &ElemSet) -> usize {
        let mut ech = Echelon::new(&self.field);
        for e in set.iter() {
            ech.push(&self.cols[e]);
            if ech.rank() == self.rows {
                break;
            }
        }
        ech.rank()
    }

    fn describe(&self) -> String {
        format!(
            "GF({})-matrix {}x{}",
            self.field.order(),
            self.rows,
            self.cols.len()
        )
    }

    fn as_linear(&self) -> Option<&LinearMatroid> {
        Some(self)
    }
}

/// Scale a nonzero vector so its first nonzero entry is 1.
pub(crate) fn normalize(f: &Field, v: &mut [Fe]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let s = f.inv(lead).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, s);
        }
    }
}

/// Vectors of GF(q)^n in lexicographic order (first coordinate most significant).
pub(crate) fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = Vec<Fe>> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0; n];
        for i in (0..n).rev() {
            v[i] = (idx % q as u64) as Fe;
            idx /= q as u64;
        }
        v
    })
}

pub(crate) fn check_columns(count: u64, caps: &Caps) -> Result<()> {
    Caps::check("number of columns", count, caps.columns)
}
