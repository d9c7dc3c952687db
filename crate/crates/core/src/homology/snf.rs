//! Smith normal form over the integers with arbitrary precision.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Invariant factors `d₁ | d₂ | … | d_r` (all positive) of an integer
/// matrix. The rank is `factors.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }
}

/// Smith normal form of a dense matrix given row by row.
pub fn smith_normal_form(rows: &[Vec<BigInt>]) -> SmithForm {
    let ncols = rows.first().map_or(0, Vec::len);
    let columns = (0..ncols)
        .map(|j| {
            rows.iter()
                .enumerate()
                .filter(|(_, r)| !r[j].is_zero())
                .map(|(i, r)| (i as u32, r[j].clone()))
                .collect()
        })
        .collect();
    smith_normal_form_sparse(rows.len(), columns)
}

/// Smith normal form of a sparse matrix given as columns of
/// `(row, value)` entries.
///
/// Unit entries are eliminated first: a ±1 pivot lets its row be cleared by
/// column operations, after which its row and column can be dropped with
/// factor 1. Whatever remains is reduced densely.
pub fn smith_normal_form_sparse(nrows: usize, columns: Vec<Vec<(u32, BigInt)>>) -> SmithForm {
    let mut cols: Vec<BTreeMap<u32, BigInt>> = columns
        .into_iter()
        .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect();
    let mut row_index: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for &r in c.keys() {
            row_index[r as usize].insert(j as u32);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0usize;
    loop {
        let mut progress = false;
        for c in 0..cols.len() {
            if !alive[c] {
                continue;
            }
            let Some(pivot_row) = cols[c]
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .min_by_key(|(&r, _)| row_index[r as usize].len())
                .map(|(&r, _)| r)
            else {
                continue;
            };
            let pivot_val = cols[c][&pivot_row].clone();
            let others: Vec<u32> = row_index[pivot_row as usize].iter().copied().filter(|&k| k as usize != c).collect();
            let pivot_col = cols[c].clone();
            for k in others {
                let k = k as usize;
                // col_k -= (a_rk / a_rc) · col_c, and a_rc = ±1
                let factor = &cols[k][&pivot_row] * &pivot_val;
                for (&r, v) in &pivot_col {
                    let entry = cols[k].entry(r).or_insert_with(BigInt::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        cols[k].remove(&r);
                        row_index[r as usize].remove(&(k as u32));
                    } else {
                        row_index[r as usize].insert(k as u32);
                    }
                }
            }
            for &r in pivot_col.keys() {
                row_index[r as usize].remove(&(c as u32));
            }
            cols[c].clear();
            alive[c] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let live_cols: Vec<usize> = (0..cols.len()).filter(|&c| alive[c] && !cols[c].is_empty()).collect();
    let live_rows: Vec<u32> = (0..nrows as u32).filter(|&r| !row_index[r as usize].is_empty()).collect();
    let mut dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|r| {
            live_cols
                .iter()
                .map(|&c| cols[c].get(r).cloned().unwrap_or_else(BigInt::zero))
                .collect()
        })
        .collect();
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_snf(&mut dense));
    SmithForm { factors }
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    for row in a.iter_mut() {
        row.swap(x, y);
    }
}

/// In-place dense reduction; returns the positive diagonal.
fn dense_snf(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_abs_entry(a, t) else { break };
        a.swap(t, pi);
        swap_cols(a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared in row or column t
                let mut best = (t, t);
                for i in t..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..n {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                swap_cols(a, t, best.1);
                continue;
            }
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad_row {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}
