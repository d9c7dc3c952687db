//! Reduced simplicial homology.
//!
//! The chain complex is augmented: the empty face spans degree −1 and
//! `∂₀` sends every vertex to it. So `{∅}` has `β̃₋₁ = 1` and a point has no
//! homology at all.

mod gf2;
mod snf;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use gf2::rank_mod2;
pub use snf::{smith_normal_form, smith_normal_form_sparse, SmithForm};

use crate::complex::{faces_in_window, Face, FaceSource, Limits, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homotopy::HomotopyType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Mod2,
    Integer,
}

/// Boundary map `∂_d` from `d`-faces to `(d−1)`-faces.
///
/// Rows follow the canonical order of the `(d−1)`-faces, columns that of the
/// `d`-faces. Entry signs are `(−1)^p` where `p` is the position of the
/// omitted vertex in the sorted face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.columns.len()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                out[i as usize][j] = s as i64;
            }
        }
        out
    }

    pub fn rank_mod2(&self) -> usize {
        let cols = self.columns.iter().map(|c| c.iter().map(|&(r, _)| r).collect()).collect();
        rank_mod2(self.rows, cols)
    }

    pub fn smith_form(&self) -> SmithForm {
        let cols = self
            .columns
            .iter()
            .map(|c| c.iter().map(|&(r, s)| (r, BigInt::from(s))).collect())
            .collect();
        smith_normal_form_sparse(self.rows, cols)
    }
}

fn layer<S: FaceSource + ?Sized>(src: &S, size: usize) -> Result<&[Face]> {
    src.faces_of_size(size).ok_or(Error::DimensionUnavailable(size as isize - 1))
}

/// `∂_d` for `d ≥ 0`; `∂₀` is the augmentation onto the empty face.
pub fn boundary_matrix<S: FaceSource + ?Sized>(src: &S, d: usize) -> Result<BoundaryMatrix> {
    let rows = layer(src, d)?;
    let cols = layer(src, d + 1)?;
    let columns = cols
        .par_iter()
        .map(|f| {
            let mut entries: Vec<(u32, i8)> = (0..f.len())
                .map(|p| {
                    let mut g = f.clone();
                    g.remove(p);
                    let row = rows
                        .binary_search(&g)
                        .expect("every facet of a face is a face");
                    (row as u32, if p % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            entries.sort_unstable();
            entries
        })
        .collect();
    Ok(BoundaryMatrix { rows: rows.len(), columns })
}

/// Reduced Betti numbers, with torsion for integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    /// Every asserted dimension, zeros included.
    pub betti: BTreeMap<i64, u64>,
    /// Invariant factors above one of `∂_{d+1}`, keyed by `d`, as decimal
    /// strings. Always empty for mod-2 coefficients.
    pub torsion: BTreeMap<i64, Vec<String>>,
    pub coefficients: Coefficients,
    /// `Some((lo, hi))` when only dimensions `lo..=hi` are asserted.
    pub window: Option<(i64, i64)>,
}

impl BettiTable {
    pub fn get(&self, d: i64) -> Option<u64> {
        self.betti.get(&d).copied()
    }

    /// Asserted dimensions with nonzero Betti number.
    pub fn nonzero(&self) -> BTreeMap<i64, u64> {
        self.betti.iter().filter(|(_, &b)| b > 0).map(|(&d, &b)| (d, b)).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.values().all(Vec::is_empty)
    }

    /// `Σ (−1)^d β̃_d` over the asserted dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Whether the Betti numbers implied by `t` agree with this table on
    /// every asserted dimension. For a full-range table, any sphere of `t`
    /// outside the computed range is a mismatch too.
    pub fn agrees_with(&self, t: &HomotopyType) -> bool {
        let expected = t.betti();
        let in_range = |d: i64| self.window.is_none_or(|(lo, hi)| (lo..=hi).contains(&d));
        let asserted_ok = self.betti.iter().all(|(d, &b)| expected.get(d).copied().unwrap_or(0) == b);
        let extra_ok = expected.keys().filter(|&&d| in_range(d)).all(|d| self.betti.contains_key(d));
        asserted_ok && extra_ok
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    /// `dim,betti,torsion` rows; torsion factors are joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,betti,torsion\n");
        for (d, b) in &self.betti {
            let tors = self.torsion.get(d).map(|t| t.join(";")).unwrap_or_default();
            writeln!(out, "{d},{b},{tors}").unwrap();
        }
        out
    }
}

/// Betti numbers `β̃_d` for `d ∈ [lo, hi]` from whatever faces `src` holds;
/// needs face sizes `lo..=hi + 2`, where size 0 is the empty face.
pub fn betti_range<S: FaceSource + Sync + ?Sized>(
    src: &S,
    lo: i64,
    hi: i64,
    coefficients: Coefficients,
) -> Result<(BTreeMap<i64, u64>, BTreeMap<i64, Vec<String>>)> {
    if lo < -1 || lo > hi {
        return Err(Error::InvalidParameter(format!("bad dimension range [{lo}, {hi}]")));
    }
    // boundary maps ∂_d with d = lo .. hi+1; ∂_{-1} is zero
    let ds: Vec<i64> = (lo.max(0)..=hi + 1).collect();
    let forms: Vec<(i64, usize, Vec<BigInt>)> = ds
        .par_iter()
        .map(|&d| {
            let b = boundary_matrix(src, d as usize)?;
            Ok(match coefficients {
                Coefficients::Mod2 => (d, b.rank_mod2(), Vec::new()),
                Coefficients::Integer => {
                    let s = b.smith_form();
                    (d, s.rank(), s.torsion())
                }
            })
        })
        .collect::<Result<_>>()?;
    let rank = |d: i64| forms.iter().find(|f| f.0 == d).map_or(0, |f| f.1);
    let mut betti = BTreeMap::new();
    let mut torsion = BTreeMap::new();
    for d in lo..=hi {
        let f = layer(src, (d + 1) as usize)?.len();
        let b = f - rank(d) - rank(d + 1);
        betti.insert(d, b as u64);
        if coefficients == Coefficients::Integer {
            let t = forms.iter().find(|f| f.0 == d + 1).map(|f| f.2.iter().map(BigInt::to_string).collect());
            torsion.insert(d, t.unwrap_or_default());
        }
    }
    Ok((betti, torsion))
}

/// All reduced Betti numbers of a fully enumerated complex.
pub fn betti_reduced(k: &SimplicialComplex, coefficients: Coefficients) -> Result<BettiTable> {
    if let Some(d) = k.skeleton() {
        return Err(Error::DimensionUnavailable(d as isize + 1));
    }
    let top = k.dimension() as i64;
    let (betti, torsion) = betti_range(k, -1, top, coefficients)?;
    Ok(BettiTable { betti, torsion, coefficients, window: None })
}

/// Reduced Betti numbers of `Ind(G)` in dimensions `lo..=hi` only,
/// enumerating just the faces of dimensions `lo − 1` to `hi + 1`.
pub fn betti_window(
    g: &Graph,
    lo: usize,
    hi: usize,
    coefficients: Coefficients,
    limits: &Limits,
) -> Result<BettiTable> {
    let w = faces_in_window(g, lo, hi, limits)?;
    let (betti, torsion) = betti_range(&w, lo as i64, hi as i64, coefficients)?;
    Ok(BettiTable { betti, torsion, coefficients, window: Some((lo as i64, hi as i64)) })
}

/// `Ind(G)` in full, then its reduced Betti numbers.
pub fn betti_of_graph(g: &Graph, coefficients: Coefficients, limits: &Limits) -> Result<BettiTable> {
    let k = crate::complex::independence_complex(g, None, limits)?;
    betti_reduced(&k, coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::independence_complex;
    use crate::graph::{categorical_product, complete, cycle, generalized_mycielskian};
    use crate::label::Label;

    fn ind(g: &Graph) -> SimplicialComplex {
        independence_complex(g, None, &Limits::default()).unwrap()
    }

    fn betti(g: &Graph) -> BTreeMap<i64, u64> {
        betti_reduced(&ind(g), Coefficients::Mod2).unwrap().nonzero()
    }

    #[test]
    fn hollow_triangle_boundary() {
        let l = |i: i64| Label::Int(i);
        let k = SimplicialComplex::from_facets(
            vec![l(1), l(2), l(3)],
            &[vec![l(1), l(2)], vec![l(2), l(3)], vec![l(1), l(3)]],
        )
        .unwrap();
        let d1 = boundary_matrix(&k, 1).unwrap();
        assert_eq!((d1.rows, d1.cols()), (3, 3));
        for col in &d1.columns {
            let mut signs: Vec<i8> = col.iter().map(|e| e.1).collect();
            signs.sort();
            assert_eq!(signs, vec![-1, 1]);
        }
        let t = betti_reduced(&k, Coefficients::Integer).unwrap();
        assert_eq!(t.nonzero(), BTreeMap::from([(1, 1)]));
        assert!(t.is_torsion_free());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = ind(&cycle(7).unwrap());
        for d in 1..=k.dimension() as usize {
            let a = boundary_matrix(&k, d - 1).unwrap().to_dense();
            let b = boundary_matrix(&k, d).unwrap().to_dense();
            for i in 0..a.len() {
                for j in 0..b[0].len() {
                    let s: i64 = (0..b.len()).map(|m| a[i][m] * b[m][j]).sum();
                    assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn cycle_five() {
        let k = ind(&cycle(5).unwrap());
        assert_eq!(boundary_matrix(&k, 1).unwrap().rank_mod2(), 4);
        assert_eq!(betti(&cycle(5).unwrap()), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn known_complexes() {
        assert_eq!(betti(&complete(4).unwrap()), BTreeMap::from([(0, 3)]));
        assert_eq!(betti(&Graph::empty()), BTreeMap::from([(-1, 1)]));
        let k33 = categorical_product(&complete(3).unwrap(), &complete(3).unwrap());
        let t = betti_reduced(&ind(&k33), Coefficients::Integer).unwrap();
        assert_eq!(t.nonzero(), BTreeMap::from([(1, 4)]));
        assert!(t.is_torsion_free());
        let m4 = generalized_mycielskian(&complete(3).unwrap(), 4).unwrap();
        assert_eq!(betti(&m4), BTreeMap::from([(2, 6)]));
    }

    #[test]
    fn windows_match_full_range() {
        let g = cycle(9).unwrap();
        let full = betti_reduced(&ind(&g), Coefficients::Mod2).unwrap();
        for lo in 0..4usize {
            for hi in lo..4 {
                let w = betti_window(&g, lo, hi, Coefficients::Mod2, &Limits::default()).unwrap();
                for d in lo..=hi {
                    assert_eq!(w.get(d as i64), Some(full.get(d as i64).unwrap_or(0)));
                }
            }
        }
    }

    #[test]
    fn skeleton_is_rejected() {
        let k = independence_complex(&cycle(6).unwrap(), Some(1), &Limits::default()).unwrap();
        assert!(matches!(betti_reduced(&k, Coefficients::Mod2), Err(Error::DimensionUnavailable(_))));
    }

    #[test]
    fn table_agreement_and_serialization() {
        let t = betti_reduced(&ind(&cycle(6).unwrap()), Coefficients::Mod2).unwrap();
        assert!(t.agrees_with(&HomotopyType::spheres(2, 1)));
        assert!(!t.agrees_with(&HomotopyType::sphere(1)));
        assert_eq!(t.euler_characteristic(), ind(&cycle(6).unwrap()).euler_characteristic_reduced());
        let back: BettiTable = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(t.to_csv().starts_with("dim,betti,torsion\n-1,0,\n0,0,\n1,2,\n"));
    }
}
