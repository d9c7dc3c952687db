//! Element matchings on face posets and their acyclicity.
//!
//! For an ordered vertex list `x₁, x₂, …` the element matching starts from
//! the pool of all faces (the empty face included) and, for each `xᵢ` in
//! turn, pairs every pooled `σ ∌ xᵢ` with `σ ∪ {xᵢ}` whenever the latter is
//! still pooled. Faces left in the pool at the end are critical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homotopy::HomotopyType;
use crate::label::Label;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub lower: Face,
    pub upper: Face,
    /// The vertex index with `upper = lower ∪ {element}`.
    pub element: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    vertices: Vec<Label>,
    order: Vec<Label>,
    pairs: Vec<MatchedPair>,
    critical: Vec<Face>,
}

/// Outcome of the acyclicity check. A witness is a closed alternating path
/// `σ₀ ≺ τ₀ ≻ σ₁ ≺ τ₁ ≻ … ≻ σ₀` where each `σᵢ ≺ τᵢ` is a matched pair and
/// each `τᵢ ≻ σᵢ₊₁` an unmatched cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Acyclicity {
    pub acyclic: bool,
    pub witness: Option<Vec<Vec<Label>>>,
}

fn require_complete(k: &SimplicialComplex) -> Result<()> {
    match k.skeleton() {
        None => Ok(()),
        Some(d) => Err(Error::InvalidParameter(format!(
            "matchings need the full face poset, not a {d}-skeleton"
        ))),
    }
}

/// Global numbering of faces: size offset plus position within the size.
struct FaceIndex<'a> {
    k: &'a SimplicialComplex,
    offsets: Vec<usize>,
}

impl<'a> FaceIndex<'a> {
    fn new(k: &'a SimplicialComplex) -> Self {
        let mut offsets = Vec::with_capacity(k.faces_by_size().len() + 1);
        let mut acc = 0;
        for layer in k.faces_by_size() {
            offsets.push(acc);
            acc += layer.len();
        }
        offsets.push(acc);
        FaceIndex { k, offsets }
    }

    fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn id(&self, face: &[u32]) -> Option<usize> {
        self.k.face_index(face).map(|i| self.offsets[face.len()] + i)
    }

    fn face(&self, id: usize) -> &'a Face {
        let size = self.offsets.partition_point(|&o| o <= id) - 1;
        &self.k.faces_by_size()[size][id - self.offsets[size]]
    }
}

/// The element matching for the vertex sequence `order`.
pub fn element_matching(k: &SimplicialComplex, order: &[Label]) -> Result<Matching> {
    require_complete(k)?;
    let mut xs = Vec::with_capacity(order.len());
    for x in order {
        let i = k
            .vertices()
            .binary_search(x)
            .map_err(|_| Error::UnknownVertex(x.clone()))?;
        if xs.contains(&(i as u32)) {
            return Err(Error::InvalidParameter(format!("vertex {x} repeated in the matching order")));
        }
        xs.push(i as u32);
    }
    let layers = k.faces_by_size();
    let mut pooled: Vec<Vec<bool>> = layers.iter().map(|l| vec![true; l.len()]).collect();
    let mut pairs = Vec::new();
    for &x in &xs {
        for size in 0..layers.len().saturating_sub(1) {
            for (i, sigma) in layers[size].iter().enumerate() {
                if !pooled[size][i] || sigma.binary_search(&x).is_ok() {
                    continue;
                }
                let mut tau = sigma.clone();
                let pos = tau.partition_point(|&v| v < x);
                tau.insert(pos, x);
                if let Some(j) = k.face_index(&tau) {
                    if pooled[size + 1][j] {
                        pooled[size][i] = false;
                        pooled[size + 1][j] = false;
                        pairs.push(MatchedPair { lower: sigma.clone(), upper: tau, element: x });
                    }
                }
            }
        }
    }
    let critical = layers
        .iter()
        .zip(&pooled)
        .flat_map(|(layer, flags)| layer.iter().zip(flags).filter(|(_, &p)| p).map(|(f, _)| f.clone()))
        .collect();
    Ok(Matching { vertices: k.vertices().to_vec(), order: order.to_vec(), pairs, critical })
}

/// The order `(1,1) < (1,2) < … < (1,n) < (2,1) < (3,1) < … < (m,1)` on the
/// vertices of `K_m × K_n`.
pub fn product_order(m: usize, n: usize) -> Vec<Label> {
    let first_row = (1..=n).map(|j| Label::pair(1, j));
    let first_col = (2..=m).map(|i| Label::pair(i, 1));
    first_row.chain(first_col).collect()
}

impl Matching {
    /// A matching from explicit `(lower, upper)` label pairs, validated
    /// against `k`. The order is left empty.
    pub fn from_pairs(k: &SimplicialComplex, pairs: &[(Vec<Label>, Vec<Label>)]) -> Result<Matching> {
        require_complete(k)?;
        let index = FaceIndex::new(k);
        let mut used = vec![false; index.total()];
        let mut out = Vec::with_capacity(pairs.len());
        for (lo, up) in pairs {
            let lower = k.face_from_labels(lo)?;
            let upper = k.face_from_labels(up)?;
            let bad = |why: &str| Error::InvalidMatching(format!("{lo:?} / {up:?}: {why}"));
            let (Some(a), Some(b)) = (index.id(&lower), index.id(&upper)) else {
                return Err(bad("not a face"));
            };
            if upper.len() != lower.len() + 1 || !lower.iter().all(|v| upper.binary_search(v).is_ok()) {
                return Err(bad("not a cover relation"));
            }
            if std::mem::replace(&mut used[a], true) || std::mem::replace(&mut used[b], true) {
                return Err(bad("face already matched"));
            }
            let element = *upper.iter().find(|v| lower.binary_search(v).is_err()).unwrap();
            out.push(MatchedPair { lower, upper, element });
        }
        let critical = (0..index.total()).filter(|&i| !used[i]).map(|i| index.face(i).clone()).collect();
        Ok(Matching { vertices: k.vertices().to_vec(), order: Vec::new(), pairs: out, critical })
    }

    /// The empty matching: every face is critical.
    pub fn empty(k: &SimplicialComplex) -> Matching {
        Matching {
            vertices: k.vertices().to_vec(),
            order: Vec::new(),
            pairs: Vec::new(),
            critical: k.faces().cloned().collect(),
        }
    }

    pub fn order(&self) -> &[Label] {
        &self.order
    }

    pub fn pairs(&self) -> &[MatchedPair] {
        &self.pairs
    }

    /// Critical faces in size order, lexicographic within a size.
    pub fn critical(&self) -> &[Face] {
        &self.critical
    }

    pub fn critical_labels(&self) -> Vec<Vec<Label>> {
        self.critical.iter().map(|f| self.labels(f)).collect()
    }

    fn labels(&self, f: &[u32]) -> Vec<Label> {
        f.iter().map(|&i| self.vertices[i as usize].clone()).collect()
    }

    pub fn empty_face_matched(&self) -> bool {
        self.critical.first().is_none_or(|f| !f.is_empty())
    }

    /// Number of critical cells per dimension (−1 for an unmatched ∅).
    pub fn critical_counts(&self) -> BTreeMap<isize, usize> {
        let mut out = BTreeMap::new();
        for f in &self.critical {
            *out.entry(f.len() as isize - 1).or_insert(0) += 1;
        }
        out
    }

    /// `Σ (−1)^dim` over critical cells; equals the reduced Euler
    /// characteristic because every pair cancels.
    pub fn critical_euler(&self) -> i64 {
        self.critical
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Structural audit against `k`: every pair is a cover of faces of `k`,
    /// no face is used twice, and pairs plus critical cells cover every face.
    pub fn validate(&self, k: &SimplicialComplex) -> Result<()> {
        if self.vertices != k.vertices() {
            return Err(Error::InvalidMatching("vertex universe differs from the complex".into()));
        }
        let index = FaceIndex::new(k);
        let mut used = vec![false; index.total()];
        let mut mark = |f: &[u32]| -> Result<()> {
            let id = index
                .id(f)
                .ok_or_else(|| Error::InvalidMatching(format!("{:?} is not a face", self.labels(f))))?;
            if std::mem::replace(&mut used[id], true) {
                return Err(Error::InvalidMatching(format!("{:?} used twice", self.labels(f))));
            }
            Ok(())
        };
        for p in &self.pairs {
            let mut joined = p.lower.clone();
            let pos = joined.partition_point(|&v| v < p.element);
            joined.insert(pos, p.element);
            if p.lower.binary_search(&p.element).is_ok() || joined != p.upper {
                return Err(Error::InvalidMatching(format!(
                    "{:?} / {:?} is not a cover by {}",
                    self.labels(&p.lower),
                    self.labels(&p.upper),
                    self.vertices[p.element as usize]
                )));
            }
            mark(&p.lower)?;
            mark(&p.upper)?;
        }
        for c in &self.critical {
            mark(c)?;
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::InvalidMatching(format!("face {:?} is neither matched nor critical", self.labels(index.face(i)))));
        }
        Ok(())
    }

    /// Looks for a directed cycle in the Hasse diagram with matched covers
    /// pointing up and all other covers pointing down.
    pub fn verify_acyclic(&self, k: &SimplicialComplex) -> Result<Acyclicity> {
        self.validate(k)?;
        let index = FaceIndex::new(k);
        let total = index.total();
        let mut up: Vec<Option<usize>> = vec![None; total];
        let mut down_partner: Vec<Option<usize>> = vec![None; total];
        for p in &self.pairs {
            let (a, b) = (index.id(&p.lower).unwrap(), index.id(&p.upper).unwrap());
            up[a] = Some(b);
            down_partner[b] = Some(a);
        }
        // successors: a face σ goes up to its partner if matched upward;
        // a face τ goes down to every facet except its own matched partner.
        let successors = |id: usize| -> Vec<usize> {
            let mut out = Vec::new();
            if let Some(t) = up[id] {
                out.push(t);
            }
            let f = index.face(id);
            for skip in 0..f.len() {
                let mut g = f.clone();
                g.remove(skip);
                let gid = index.id(&g).expect("complex is closed under subsets");
                if down_partner[id] != Some(gid) {
                    out.push(gid);
                }
            }
            out
        };
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; total];
        let mut parent = vec![usize::MAX; total];
        for start in 0..total {
            if color[start] != WHITE {
                continue;
            }
            let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, successors(start))];
            color[start] = GREY;
            while let Some((node, next)) = stack.last_mut() {
                let node = *node;
                match next.pop() {
                    Some(s) if color[s] == WHITE => {
                        color[s] = GREY;
                        parent[s] = node;
                        let succ = successors(s);
                        stack.push((s, succ));
                    }
                    Some(s) if color[s] == GREY => {
                        let mut cycle = vec![node];
                        let mut cur = node;
                        while cur != s {
                            cur = parent[cur];
                            cycle.push(cur);
                        }
                        cycle.reverse();
                        // rotate so the sequence starts at a matched lower face
                        let len = cycle.len();
                        if let Some(pos) = (0..len).position(|p| up[cycle[p]] == Some(cycle[(p + 1) % len])) {
                            cycle.rotate_left(pos);
                        }
                        cycle.push(cycle[0]);
                        let witness = cycle.iter().map(|&c| self.labels(index.face(c))).collect();
                        return Ok(Acyclicity { acyclic: false, witness: Some(witness) });
                    }
                    Some(_) => {}
                    None => {
                        color[node] = BLACK;
                        stack.pop();
                    }
                }
            }
        }
        Ok(Acyclicity { acyclic: true, witness: None })
    }

    /// The wedge of spheres read off from the critical cells, when ∅ is
    /// matched and every critical cell has the same dimension. `None` when
    /// the critical cells do not decide the type. Errors if the matching is
    /// not acyclic.
    pub fn wedge_conclusion(&self, k: &SimplicialComplex) -> Result<Option<HomotopyType>> {
        if !self.verify_acyclic(k)?.acyclic {
            return Err(Error::CyclicMatching);
        }
        if !self.empty_face_matched() {
            return Ok(None);
        }
        let counts = self.critical_counts();
        Ok(match counts.len() {
            0 => Some(HomotopyType::Contractible),
            1 => {
                let (&d, &c) = counts.iter().next().unwrap();
                Some(HomotopyType::spheres(c as u64, d as i64))
            }
            _ => None,
        })
    }

    pub fn to_file(&self) -> MatchingFile {
        MatchingFile {
            order: self.order.clone(),
            pairs: self
                .pairs
                .iter()
                .map(|p| PairRecord {
                    lower: self.labels(&p.lower),
                    upper: self.labels(&p.upper),
                    element: self.vertices[p.element as usize].clone(),
                })
                .collect(),
            critical: self.critical_labels(),
            critical_counts: self.critical_counts().into_iter().map(|(d, c)| (d.to_string(), c)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("matching serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub lower: Vec<Label>,
    pub upper: Vec<Label>,
    pub element: Label,
}

/// JSON dump of a matching.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchingFile {
    pub order: Vec<Label>,
    pub pairs: Vec<PairRecord>,
    pub critical: Vec<Vec<Label>>,
    pub critical_counts: BTreeMap<String, usize>,
}
