//! Simplicial complexes and independence complexes of graphs.
//!
//! Faces are sorted vectors of vertex indices into the complex's vertex
//! universe (which, for `Ind(G)`, is the canonical vertex order of `G`).
//! They are stored per size, each list in lexicographic order, and the empty
//! face is always present. Face `f` has dimension `f.len() - 1`, so the
//! empty face sits in dimension −1.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::Label;

pub type Face = Vec<u32>;

/// Environment variable that overrides the default face ceiling.
pub const FACE_LIMIT_ENV: &str = "INDCX_MAX_FACES";

/// Ceiling on the number of faces any enumeration may produce. Exceeding it
/// is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_faces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_faces: 50_000_000 }
    }
}

impl Limits {
    pub fn new(max_faces: usize) -> Limits {
        Limits { max_faces }
    }

    /// Default limits, overridden by `INDCX_MAX_FACES` when it parses.
    pub fn from_env() -> Limits {
        std::env::var(FACE_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::new)
            .unwrap_or_default()
    }
}

/// Anything that can hand out the faces of a given size for boundary maps.
pub trait FaceSource {
    fn vertex_labels(&self) -> &[Label];

    /// Faces with exactly `size` vertices in lexicographic order, or `None`
    /// when that size was not enumerated.
    fn faces_of_size(&self, size: usize) -> Option<&[Face]>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Label>,
    faces: Vec<Vec<Face>>,
    /// `Some(d)` when only the `d`-skeleton was enumerated.
    skeleton: Option<usize>,
}

impl FaceSource for SimplicialComplex {
    fn vertex_labels(&self) -> &[Label] {
        &self.vertices
    }

    fn faces_of_size(&self, size: usize) -> Option<&[Face]> {
        match self.faces.get(size) {
            Some(f) => Some(f),
            None if self.skeleton.is_none_or(|d| size <= d + 1) => Some(&[]),
            None => None,
        }
    }
}

struct Enumerator<'a> {
    non_neighbors: Vec<FixedBitSet>,
    min_size: usize,
    max_size: usize,
    limit: usize,
    count: usize,
    out: &'a mut Vec<Vec<Face>>,
}

impl Enumerator<'_> {
    fn run(&mut self, candidates: &FixedBitSet, current: &mut Vec<u32>) -> Result<()> {
        if current.len() >= self.min_size {
            self.count += 1;
            if self.count > self.limit {
                return Err(Error::ResourceLimit { limit: self.limit });
            }
            let slot = current.len() - self.min_size;
            if self.out.len() <= slot {
                self.out.resize_with(slot + 1, Vec::new);
            }
            self.out[slot].push(current.clone());
        }
        if current.len() == self.max_size {
            return Ok(());
        }
        for v in candidates.ones() {
            let mut next = candidates.clone();
            next.intersect_with(&self.non_neighbors[v]);
            next.set_range(..v + 1, false);
            current.push(v as u32);
            self.run(&next, current)?;
            current.pop();
        }
        Ok(())
    }
}

/// Per vertex, the other vertices it may share a face with: not adjacent
/// and not looped.
fn non_neighbor_sets(g: &Graph) -> (FixedBitSet, Vec<FixedBitSet>) {
    let n = g.vertex_count();
    let mut usable = FixedBitSet::with_capacity(n);
    usable.insert_range(..);
    usable.difference_with(g.loops());
    let sets = (0..n)
        .map(|v| {
            let mut s = usable.clone();
            s.difference_with(g.neighbors(v));
            s.set(v, false);
            s
        })
        .collect();
    (usable, sets)
}

fn enumerate_independent(
    g: &Graph,
    min_size: usize,
    max_size: usize,
    limits: &Limits,
) -> Result<Vec<Vec<Face>>> {
    let (usable, non_neighbors) = non_neighbor_sets(g);
    let mut out = Vec::new();
    let mut e = Enumerator { non_neighbors, min_size, max_size, limit: limits.max_faces, count: 0, out: &mut out };
    e.run(&usable, &mut Vec::new())?;
    if max_size != usize::MAX {
        let want = max_size.saturating_sub(min_size) + 1;
        if out.len() < want {
            out.resize_with(want, Vec::new);
        }
    }
    Ok(out)
}

/// `Ind(G)`: every independent set of `G` (no edge inside, no looped
/// vertex), optionally only up to dimension `max_dim`.
pub fn independence_complex(g: &Graph, max_dim: Option<usize>, limits: &Limits) -> Result<SimplicialComplex> {
    let max_size = max_dim.map_or(usize::MAX, |d| d + 1);
    let mut faces = enumerate_independent(g, 0, max_size, limits)?;
    while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    Ok(SimplicialComplex { vertices: g.labels().to_vec(), faces, skeleton: max_dim })
}

/// The maximal independent sets of `G`, found as maximal cliques of the
/// complement by Bron–Kerbosch with pivoting (pivot maximises
/// `|P ∩ N(u)|`, ties to the lowest index). Sorted lexicographically.
pub fn independence_facets(g: &Graph) -> Vec<Vec<Label>> {
    let (usable, non_neighbors) = non_neighbor_sets(g);
    let mut out = Vec::new();
    let n = g.vertex_count();
    bron_kerbosch(&non_neighbors, &mut Vec::new(), usable, FixedBitSet::with_capacity(n), &mut out);
    out.sort();
    out.into_iter()
        .map(|f| f.into_iter().map(|i| g.label(i as usize).clone()).collect())
        .collect()
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    clique: &mut Vec<u32>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Face>,
) {
    if p.is_clear() && x.is_clear() {
        let mut f = clique.clone();
        f.sort_unstable();
        out.push(f);
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection(&adj[u]).count(), std::cmp::Reverse(u)))
        .expect("p or x is non-empty");
    let mut branch = p.clone();
    branch.difference_with(&adj[pivot]);
    for v in branch.ones() {
        let mut p2 = p.clone();
        p2.intersect_with(&adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&adj[v]);
        clique.push(v as u32);
        bron_kerbosch(adj, clique, p2, x2, out);
        clique.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Faces of `Ind(G)` with between `d_lo` and `d_hi + 2` vertices, i.e. every
/// dimension from `d_lo − 1` to `d_hi + 1`. That is exactly what the
/// boundary maps `∂_{d_lo} … ∂_{d_hi+1}` need, so reduced Betti numbers in
/// `[d_lo, d_hi]` can be computed without the rest of the complex.
pub fn faces_in_window(g: &Graph, d_lo: usize, d_hi: usize, limits: &Limits) -> Result<FaceWindow> {
    if d_lo > d_hi {
        return Err(Error::InvalidParameter(format!("empty window [{d_lo}, {d_hi}]")));
    }
    let faces = enumerate_independent(g, d_lo, d_hi + 2, limits)?;
    Ok(FaceWindow { vertices: g.labels().to_vec(), min_size: d_lo, faces })
}

/// A band of consecutive face sizes of some complex.
#[derive(Clone, Debug)]
pub struct FaceWindow {
    vertices: Vec<Label>,
    min_size: usize,
    faces: Vec<Vec<Face>>,
}

impl FaceWindow {
    pub fn min_size(&self) -> usize {
        self.min_size
    }

    pub fn max_size(&self) -> usize {
        self.min_size + self.faces.len() - 1
    }

    /// `(dimension, count)` for every enumerated size.
    pub fn counts(&self) -> Vec<(isize, usize)> {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, f)| ((self.min_size + k) as isize - 1, f.len()))
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

impl FaceSource for FaceWindow {
    fn vertex_labels(&self) -> &[Label] {
        &self.vertices
    }

    fn faces_of_size(&self, size: usize) -> Option<&[Face]> {
        size.checked_sub(self.min_size)
            .and_then(|k| self.faces.get(k))
            .map(Vec::as_slice)
    }
}

fn subsets_of(face: &[u32], out: &mut [BTreeSet<Face>]) {
    let k = face.len();
    for mask in 0u64..(1u64 << k) {
        let sub: Face = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| face[b]).collect();
        out[sub.len()].insert(sub);
    }
}

impl SimplicialComplex {
    /// The complex generated by `facets` over the given vertex universe.
    pub fn from_facets(vertices: Vec<Label>, facets: &[Vec<Label>]) -> Result<SimplicialComplex> {
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();
        let top = facets.iter().map(Vec::len).max().unwrap_or(0);
        if top > 24 {
            return Err(Error::InvalidParameter(format!("facet with {top} vertices is too large to expand")));
        }
        let mut by_size: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); top + 1];
        by_size[0].insert(Vec::new());
        for facet in facets {
            let mut f: Face = facet
                .iter()
                .map(|l| {
                    vertices
                        .binary_search(l)
                        .map(|i| i as u32)
                        .map_err(|_| Error::UnknownVertex(l.clone()))
                })
                .collect::<Result<_>>()?;
            f.sort_unstable();
            f.dedup();
            subsets_of(&f, &mut by_size);
        }
        let mut faces: Vec<Vec<Face>> = by_size.into_iter().map(|s| s.into_iter().collect()).collect();
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        Ok(SimplicialComplex { vertices, faces, skeleton: None })
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Vec<Label>) -> Result<SimplicialComplex> {
        let all = vec![vertices.clone()];
        SimplicialComplex::from_facets(vertices, &all)
    }

    fn from_sets(vertices: Vec<Label>, sets: Vec<BTreeSet<Face>>) -> SimplicialComplex {
        let mut faces: Vec<Vec<Face>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        if faces.is_empty() {
            faces.push(vec![Vec::new()]);
        }
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        SimplicialComplex { vertices, faces, skeleton: None }
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    /// `Some(d)` if only the `d`-skeleton was enumerated.
    pub fn skeleton(&self) -> Option<usize> {
        self.skeleton
    }

    pub fn is_complete(&self) -> bool {
        self.skeleton.is_none()
    }

    /// Dimension of the largest face; −1 for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Face counts by size: entry `k` counts faces of dimension `k − 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        &self.faces
    }

    pub fn faces_of_dim(&self, d: isize) -> &[Face] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.faces.get(k))
            .map_or(&[], Vec::as_slice)
    }

    /// Faces in size order, lexicographic within each size.
    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn face_index(&self, face: &[u32]) -> Option<usize> {
        self.faces.get(face.len())?.binary_search_by(|f| f.as_slice().cmp(face)).ok()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        self.face_index(face).is_some()
    }

    pub fn labels_of(&self, face: &[u32]) -> Vec<Label> {
        face.iter().map(|&i| self.vertices[i as usize].clone()).collect()
    }

    /// Index form of a face given by labels; errors if a label is unknown.
    pub fn face_from_labels(&self, labels: &[Label]) -> Result<Face> {
        let mut f: Face = labels
            .iter()
            .map(|l| {
                self.vertices
                    .binary_search(l)
                    .map(|i| i as u32)
                    .map_err(|_| Error::UnknownVertex(l.clone()))
            })
            .collect::<Result<_>>()?;
        f.sort_unstable();
        f.dedup();
        Ok(f)
    }

    pub fn contains_labels(&self, labels: &[Label]) -> bool {
        self.face_from_labels(labels).is_ok_and(|f| self.contains_face(&f))
    }

    fn require_face(&self, labels: &[Label]) -> Result<Face> {
        let f = self.face_from_labels(labels)?;
        if self.contains_face(&f) {
            Ok(f)
        } else {
            Err(Error::NotAFace(format!("{labels:?}")))
        }
    }

    fn collect<F: Fn(&[u32]) -> bool>(&self, keep: F) -> SimplicialComplex {
        let sets = self
            .faces
            .iter()
            .map(|fs| fs.iter().filter(|f| keep(f)).cloned().collect())
            .collect();
        SimplicialComplex::from_sets(self.vertices.clone(), sets)
    }

    /// `lk_K(v) = {σ ∈ K : v ∉ σ, σ ∪ {v} ∈ K}`.
    pub fn link(&self, v: &Label) -> Result<SimplicialComplex> {
        let vi = self.require_face(std::slice::from_ref(v))?[0];
        let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); self.faces.len()];
        for f in self.faces() {
            if let Ok(pos) = f.binary_search(&vi) {
                let mut g = f.clone();
                g.remove(pos);
                sets[g.len()].insert(g);
            }
        }
        Ok(SimplicialComplex::from_sets(self.vertices.clone(), sets))
    }

    /// `st_K(σ) = {τ ∈ K : σ ∪ τ ∈ K}`.
    pub fn star(&self, sigma: &[Label]) -> Result<SimplicialComplex> {
        let s = self.require_face(sigma)?;
        Ok(self.collect(|f| self.contains_face(&union(f, &s))))
    }

    /// `SC_K(σ)`: the union of the vertex stars `st_K({u})`, `u ∈ σ`.
    pub fn star_cluster(&self, sigma: &[Label]) -> Result<SimplicialComplex> {
        let s = self.require_face(sigma)?;
        if s.is_empty() {
            return Err(Error::InvalidParameter("star cluster of the empty face".into()));
        }
        Ok(self.collect(|f| s.iter().any(|&u| self.contains_face(&union(f, &[u])))))
    }

    /// `{σ ∈ K : v ∉ σ}`.
    pub fn delete_vertex(&self, v: &Label) -> Result<SimplicialComplex> {
        let vi = self.require_face(std::slice::from_ref(v))?[0];
        Ok(self.collect(|f| f.binary_search(&vi).is_err()))
    }

    fn same_universe(&self, other: &SimplicialComplex) -> Result<()> {
        if self.vertices == other.vertices {
            Ok(())
        } else {
            Err(Error::InvalidParameter("complexes have different vertex universes".into()))
        }
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.same_universe(other)?;
        Ok(self.collect(|f| other.contains_face(f)))
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.same_universe(other)?;
        let len = self.faces.len().max(other.faces.len());
        let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); len];
        for f in self.faces().chain(other.faces()) {
            sets[f.len()].insert(f.clone());
        }
        Ok(SimplicialComplex::from_sets(self.vertices.clone(), sets))
    }

    /// `Σ (−1)^dim σ` over all stored faces, the empty face counting −1.
    pub fn euler_characteristic_reduced(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, f)| if k % 2 == 1 { f.len() as i64 } else { -(f.len() as i64) })
            .sum()
    }

    /// Maximal faces in size order.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for (k, layer) in self.faces.iter().enumerate() {
            let mut covered = vec![false; layer.len()];
            if let Some(above) = self.faces.get(k + 1) {
                for f in above {
                    for skip in 0..f.len() {
                        let mut g = f.clone();
                        g.remove(skip);
                        if let Ok(i) = layer.binary_search(&g) {
                            covered[i] = true;
                        }
                    }
                }
            }
            out.extend(layer.iter().zip(covered).filter(|(_, c)| !c).map(|(f, _)| f.clone()));
        }
        out
    }

    /// A vertex lying in every facet, if one exists. Such a complex is a
    /// cone, hence collapsible. Returns the smallest such vertex.
    pub fn is_cone(&self) -> Option<Label> {
        let facets = self.facets();
        let mut common: Option<BTreeSet<u32>> = None;
        for f in &facets {
            let s: BTreeSet<u32> = f.iter().copied().collect();
            common = Some(match common {
                None => s,
                Some(c) => c.intersection(&s).copied().collect(),
            });
        }
        common?.into_iter().next().map(|i| self.vertices[i as usize].clone())
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            vertices: self.vertices.clone(),
            facets: self.facets().iter().map(|f| self.labels_of(f)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<SimplicialComplex> {
        let file: ComplexFile = serde_json::from_str(text)?;
        SimplicialComplex::from_facets(file.vertices, &file.facets)
    }

    /// `dim,faces` rows, starting with the empty face at dimension −1.
    pub fn f_vector_csv(&self) -> String {
        let mut out = String::from("dim,faces\n");
        for (k, f) in self.faces.iter().enumerate() {
            writeln!(out, "{},{}", k as isize - 1, f.len()).unwrap();
        }
        out
    }
}

fn union(a: &[u32], b: &[u32]) -> Face {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Serialized complex: vertex universe plus facets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<Label>,
    pub facets: Vec<Vec<Label>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{categorical_product, complete, cycle, looped_path, path};

    fn l(i: i64) -> Label {
        Label::Int(i)
    }

    fn ind(g: &Graph) -> SimplicialComplex {
        independence_complex(g, None, &Limits::default()).unwrap()
    }

    #[test]
    fn small_independence_complexes() {
        let k3 = ind(&complete(3).unwrap());
        assert_eq!(k3.f_vector(), vec![1, 3]);
        assert_eq!(k3.faces().cloned().collect::<Vec<_>>(), vec![vec![], vec![0], vec![1], vec![2]]);
        assert_eq!(ind(&cycle(5).unwrap()).f_vector(), vec![1, 5, 5]);
        let k2 = complete(2).unwrap();
        let k23 = categorical_product(&k2, &complete(3).unwrap());
        assert_eq!(ind(&k23).f_vector(), vec![1, 6, 9, 2]);
    }

    #[test]
    fn looped_vertices_never_appear() {
        let c = ind(&looped_path(2));
        // vertex 0 is looped: faces are ∅, {1}, {2}
        assert_eq!(c.f_vector(), vec![1, 2]);
        assert!(!c.contains_labels(&[l(0)]));
    }

    #[test]
    fn skeleton_and_guard() {
        let g = cycle(6).unwrap();
        let sk = independence_complex(&g, Some(0), &Limits::default()).unwrap();
        assert_eq!(sk.f_vector(), vec![1, 6]);
        assert_eq!(sk.skeleton(), Some(0));
        assert!(sk.faces_of_size(3).is_none());
        let err = independence_complex(&g, None, &Limits::new(5)).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn facets_of_products_and_cliques() {
        let k4 = complete(4).unwrap();
        assert_eq!(independence_facets(&k4), (1..=4).map(|i| vec![l(i)]).collect::<Vec<_>>());
        let k2 = complete(2).unwrap();
        let k23 = categorical_product(&k2, &complete(3).unwrap());
        let facets = independence_facets(&k23);
        let rows: Vec<_> = facets.iter().filter(|f| f.len() == 3).collect();
        let cols: Vec<_> = facets.iter().filter(|f| f.len() == 2).collect();
        assert_eq!((rows.len(), cols.len(), facets.len()), (2, 3, 5));
        for r in rows {
            let first = r[0].components().unwrap()[0].clone();
            assert!(r.iter().all(|v| v.components().unwrap()[0] == first));
        }
        let c5 = independence_facets(&cycle(5).unwrap());
        assert_eq!(c5.len(), 5);
        assert!(c5.contains(&vec![l(1), l(3)]));
        assert_eq!(independence_facets(&looped_path(0)), vec![Vec::<Label>::new()]);
    }

    #[test]
    fn facets_agree_with_complex() {
        let g = path(6).unwrap();
        let c = ind(&g);
        let from_complex: Vec<Vec<Label>> = {
            let mut v: Vec<_> = c.facets().iter().map(|f| c.labels_of(f)).collect();
            v.sort();
            v
        };
        assert_eq!(from_complex, independence_facets(&g));
    }

    #[test]
    fn links_stars_clusters() {
        let c4 = ind(&cycle(4).unwrap());
        let sc = c4.star_cluster(&[l(1), l(3)]).unwrap();
        assert_eq!(sc.f_vector(), vec![1, 2, 1]);
        assert!(sc.contains_labels(&[l(1), l(3)]));
        assert!(matches!(c4.star_cluster(&[l(1), l(2)]), Err(Error::NotAFace(_))));

        let full = SimplicialComplex::simplex(vec![l(1), l(2), l(3)]).unwrap();
        let lk = full.link(&l(1)).unwrap();
        assert_eq!(lk.f_vector(), vec![1, 2, 1]);
        assert!(lk.contains_labels(&[l(2), l(3)]));

        let st = c4.star(&[l(2)]).unwrap();
        assert_eq!(st.f_vector(), vec![1, 2, 1]);
        assert!(st.contains_labels(&[l(2), l(4)]));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(ind(&complete(3).unwrap()).euler_characteristic_reduced(), 2);
        assert_eq!(ind(&cycle(5).unwrap()).euler_characteristic_reduced(), -1);
        let k23 = categorical_product(&complete(2).unwrap(), &complete(3).unwrap());
        assert_eq!(ind(&k23).euler_characteristic_reduced(), -2);
        let void = ind(&Graph::empty());
        assert_eq!(void.f_vector(), vec![1]);
        assert_eq!(void.euler_characteristic_reduced(), -1);
        assert_eq!(void.dimension(), -1);
    }

    #[test]
    fn cones() {
        let full = SimplicialComplex::simplex(vec![l(1), l(2), l(3)]).unwrap();
        assert!(full.is_cone().is_some());
        let g = Graph::new([l(1), l(2), l(3)], [(l(1), l(2))], []).unwrap();
        assert_eq!(ind(&g).is_cone(), Some(l(3)));
        assert_eq!(ind(&cycle(5).unwrap()).is_cone(), None);
        assert_eq!(ind(&Graph::empty()).is_cone(), None);
    }

    #[test]
    fn windows() {
        let g = cycle(6).unwrap();
        let w = faces_in_window(&g, 0, 0, &Limits::default()).unwrap();
        assert_eq!(w.counts(), vec![(-1, 1), (0, 6), (1, 9)]);
        assert!(w.faces_of_size(3).is_none());
        assert!(faces_in_window(&g, 2, 1, &Limits::default()).is_err());
    }

    #[test]
    fn json_and_csv() {
        let c = ind(&cycle(5).unwrap());
        let back = SimplicialComplex::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.f_vector_csv(), "dim,faces\n-1,1\n0,5\n1,5\n");
    }

    #[test]
    fn set_operations() {
        let c = ind(&path(4).unwrap());
        let a = c.star(&[l(1)]).unwrap();
        let b = c.star(&[l(4)]).unwrap();
        let u = a.union(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(u.face_count() + i.face_count(), a.face_count() + b.face_count());
        let y = c.delete_vertex(&l(1)).unwrap();
        assert!(!y.contains_labels(&[l(1)]));
    }
}
