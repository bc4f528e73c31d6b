use super::matrix::{invariant_factors, IntMatrix};
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

/// Column-sparse integer matrix with machine-word entries, as produced by boundary maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix {
            rows,
            columns: Vec::new(),
        }
    }

    /// Appends a column; duplicate rows are summed and zeros dropped.
    pub fn push_column(&mut self, mut entries: Vec<(usize, i64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut col: Vec<(usize, i64)> = Vec::with_capacity(entries.len());
        for (r, v) in entries {
            debug_assert!(r < self.rows);
            match col.last_mut() {
                Some(last) if last.0 == r => last.1 += v,
                _ => col.push((r, v)),
            }
            if col.last().is_some_and(|e| e.1 == 0) {
                col.pop();
            }
        }
        self.columns.push(col);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                cols[i].push((j, v));
            }
        }
        SparseMatrix {
            rows: self.cols(),
            columns: cols,
        }
    }

    /// `self * other`, or `None` on overflow.
    pub fn mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.cols(), other.rows, "dimension mismatch in product");
        let mut out = SparseMatrix::new(self.rows);
        for col in &other.columns {
            let mut acc: Vec<(usize, i64)> = Vec::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    acc.push((i, a.checked_mul(b)?));
                }
            }
            out.push_column(acc);
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Invariant factors via unit-pivot elimination, finishing the leftover block
/// densely. Falls back to a dense reduction of the whole matrix on overflow.
pub fn sparse_invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    match eliminate(m) {
        Some(f) => f,
        None => invariant_factors(&m.to_dense()),
    }
}

fn entry(row: &[(usize, i64)], c: usize) -> i64 {
    row.binary_search_by_key(&c, |e| e.0)
        .map_or(0, |k| row[k].1)
}

/// `a - q * b` on sorted sparse rows.
fn axpy(a: &[(usize, i64)], q: i64, b: &[(usize, i64)]) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1)
        } else {
            let t = q.checked_mul(b[j].1)?;
            j += 1;
            if ca == cb {
                i += 1;
                (ca, a[i - 1].1.checked_sub(t)?)
            } else {
                (cb, t.checked_neg()?)
            }
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    Some(out)
}

fn eliminate(m: &SparseMatrix) -> Option<Vec<BigInt>> {
    let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); m.rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            rows[i].push((j, v));
            col_rows[j].insert(i);
        }
    }
    let mut units = 0usize;
    loop {
        let mut progress = false;
        for c in 0..m.cols() {
            let pivot = col_rows[c]
                .iter()
                .copied()
                .filter(|&r| entry(&rows[r], c).abs() == 1)
                .min_by_key(|&r| (rows[r].len(), r));
            let Some(r) = pivot else { continue };
            let p = entry(&rows[r], c);
            let prow = core::mem::take(&mut rows[r]);
            let others: Vec<usize> = col_rows[c].iter().copied().filter(|&x| x != r).collect();
            for r2 in others {
                let q = entry(&rows[r2], c).checked_mul(p)?;
                let new = axpy(&rows[r2], q, &prow)?;
                for &(col, _) in &prow {
                    if entry(&new, col) != 0 {
                        col_rows[col].insert(r2);
                    } else {
                        col_rows[col].remove(&r2);
                    }
                }
                rows[r2] = new;
            }
            for &(col, _) in &prow {
                col_rows[col].remove(&r);
            }
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| !rows[r].is_empty()).collect();
    let mut factors = vec![BigInt::one(); units];
    if !live_rows.is_empty() {
        let live_cols: Vec<usize> = (0..m.cols()).filter(|&c| !col_rows[c].is_empty()).collect();
        let mut dense = IntMatrix::zeros(live_rows.len(), live_cols.len());
        for (i, &r) in live_rows.iter().enumerate() {
            for &(c, v) in &rows[r] {
                let j = live_cols.binary_search(&c).expect("live column");
                dense[(i, j)] = BigInt::from(v);
            }
        }
        factors.extend(invariant_factors(&dense));
    }
    Some(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows.len());
        for j in 0..rows.first().map_or(0, |r| r.len()) {
            m.push_column(rows.iter().enumerate().map(|(i, r)| (i, r[j])).collect());
        }
        m
    }

    #[test]
    fn agrees_with_dense_reduction() {
        let cases: [&[&[i64]]; 4] = [
            &[&[2, 4], &[6, 8]],
            &[&[1, 1, 0], &[0, 2, 2], &[3, 0, 3]],
            &[&[-1, 1, 0], &[1, 0, -1], &[0, -1, 1]],
            &[&[0, 0], &[0, 0]],
        ];
        for rows in cases {
            let m = from_rows(rows);
            assert_eq!(
                sparse_invariant_factors(&m),
                invariant_factors(&m.to_dense()),
                "{rows:?}"
            );
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 2;
        let m = from_rows(&[&[1, big], &[big, 1]]);
        let f = sparse_invariant_factors(&m);
        assert_eq!(f, invariant_factors(&m.to_dense()));
        assert_eq!(f.len(), 2);
    }
}
