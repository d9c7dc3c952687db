//! Independent oracles: brute-force subset enumeration and dense ranks.
//! Nothing here touches the library's complex or homology code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use indcx::Graph;
use num_bigint::BigInt;
use num_traits::Zero;

/// Independent sets of `g` grouped by size, each a sorted index list.
/// Sizes run from 0 (the empty set) up to the independence number.
pub fn independent_sets(g: &Graph) -> Vec<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    assert!(n <= 22, "oracle is exponential");
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    'subsets: for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        for (a, &i) in set.iter().enumerate() {
            if g.is_looped(i) {
                continue 'subsets;
            }
            for &j in &set[a + 1..] {
                if g.adjacent(i, j) {
                    continue 'subsets;
                }
            }
        }
        by_size[set.len()].push(set);
    }
    while by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    by_size
}

/// Dense signed boundary from faces of size `s` to faces of size `s − 1`.
fn boundary(faces: &[Vec<Vec<usize>>], s: usize) -> Vec<Vec<i64>> {
    let rows = &faces[s - 1];
    let index: BTreeMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = vec![vec![0i64; faces[s].len()]; rows.len()];
    for (c, f) in faces[s].iter().enumerate() {
        for k in 0..f.len() {
            let mut sub = f.clone();
            sub.remove(k);
            m[index[&sub]][c] = if k % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

pub fn rank_gf2(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<bool>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(2) == 1).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                for (x, &y) in rows[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Field {
    Gf2,
    Rationals,
}

/// Nonzero reduced Betti numbers of `Ind(g)` over `field`.
pub fn reduced_betti(g: &Graph, field: Field) -> BTreeMap<i64, u64> {
    let faces = independent_sets(g);
    let top = faces.len() - 1;
    let rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let m = boundary(&faces, s);
        match field {
            Field::Gf2 => rank_gf2(&m),
            Field::Rationals => rank_rational(&m),
        }
    };
    let ranks: Vec<usize> = (0..=top + 1).map(rank).collect();
    let mut out = BTreeMap::new();
    for s in 0..=top {
        let b = faces[s].len() - ranks[s] - ranks[s + 1];
        if b > 0 {
            out.insert(s as i64 - 1, b as u64);
        }
    }
    out
}

/// `Σ (−1)^{|σ|−1}` over all independent sets, including the empty one.
pub fn reduced_euler(g: &Graph) -> i64 {
    independent_sets(g)
        .iter()
        .enumerate()
        .map(|(s, fs)| if s % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}
