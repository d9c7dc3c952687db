//! Finite graphs with optional loops.
//!
//! A [`Graph`] is immutable once built. Vertices are kept sorted by their
//! [`Label`], so vertex indices are canonical and every downstream
//! enumeration is deterministic. Self-adjacency lives only in the loop set;
//! the edge set never contains a pair `(v, v)`.

mod families;
mod io;

pub use families::*;
pub use io::GraphFile;

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use petgraph::graph::UnGraph;

use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    adj: Vec<FixedBitSet>,
    loops: FixedBitSet,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj && self.loops == other.loops
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from labels, edges and loops.
    ///
    /// Repeated edges collapse; a repeated vertex, a pair `(v, v)` or an
    /// endpoint that is not listed is an error.
    pub fn new<V, E, L>(vertices: V, edges: E, loops: L) -> Result<Graph>
    where
        V: IntoIterator<Item = Label>,
        E: IntoIterator<Item = (Label, Label)>,
        L: IntoIterator<Item = Label>,
    {
        let mut labels: Vec<Label> = vertices.into_iter().collect();
        labels.sort();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0].clone()));
            }
        }
        let index: HashMap<Label, usize> =
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfPair(u));
            }
            let a = *index.get(&u).ok_or(Error::UnknownVertex(u))?;
            let b = *index.get(&v).ok_or(Error::UnknownVertex(v))?;
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let mut loop_set = FixedBitSet::with_capacity(n);
        for l in loops {
            let a = *index.get(&l).ok_or(Error::UnknownVertex(l))?;
            loop_set.insert(a);
        }
        Ok(Graph { labels, index, adj, loops: loop_set })
    }

    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Graph { labels: Vec::new(), index: HashMap::new(), adj: Vec::new(), loops: FixedBitSet::new() }
    }

    /// Edgeless graph on the given labels.
    pub fn edgeless<V: IntoIterator<Item = Label>>(vertices: V) -> Result<Graph> {
        Graph::new(vertices, [], [])
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        self.loops.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels in canonical order; position is the vertex index.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &Label) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownVertex(label.clone()))
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.index.contains_key(label)
    }

    /// Open neighbourhood of vertex `i`, excluding `i` itself even when looped.
    pub fn neighbors(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    pub fn is_looped(&self, i: usize) -> bool {
        self.loops.contains(i)
    }

    pub fn loops(&self) -> &FixedBitSet {
        &self.loops
    }

    /// No neighbours and no loop.
    pub fn is_isolated(&self, i: usize) -> bool {
        self.adj[i].is_clear() && !self.loops.contains(i)
    }

    /// Adjacency by index; a looped vertex is adjacent to itself.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        if i == j {
            self.loops.contains(i)
        } else {
            self.adj[i].contains(j)
        }
    }

    pub fn has_edge(&self, u: &Label, v: &Label) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => a != b && self.adj[a].contains(b),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, a)| a.ones().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn edge_labels(&self) -> Vec<(Label, Label)> {
        self.edges()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    pub fn loop_labels(&self) -> Vec<Label> {
        self.loops.ones().map(|i| self.labels[i].clone()).collect()
    }

    /// `N(v)`. A looped vertex belongs to its own open neighbourhood.
    pub fn neighborhood(&self, v: &Label) -> Result<BTreeSet<Label>> {
        let i = self.require(v)?;
        let mut out: BTreeSet<Label> = self.adj[i].ones().map(|j| self.labels[j].clone()).collect();
        if self.loops.contains(i) {
            out.insert(v.clone());
        }
        Ok(out)
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: &Label) -> Result<BTreeSet<Label>> {
        let mut out = self.neighborhood(v)?;
        out.insert(v.clone());
        Ok(out)
    }

    /// `N[A]`, the union of the closed neighbourhoods of `A`.
    pub fn closed_neighborhood_set(&self, set: &[Label]) -> Result<BTreeSet<Label>> {
        let mut out = BTreeSet::new();
        for v in set {
            out.extend(self.closed_neighborhood(v)?);
        }
        Ok(out)
    }

    /// Subgraph induced by the vertices whose bits are set.
    pub fn induced_by_mask(&self, keep: &FixedBitSet) -> Graph {
        let kept: Vec<usize> = keep.ones().filter(|&i| i < self.vertex_count()).collect();
        let mut remap = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let n = kept.len();
        let labels: Vec<Label> = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut loops = FixedBitSet::with_capacity(n);
        for (new, &old) in kept.iter().enumerate() {
            for j in self.adj[old].ones() {
                if remap[j] != usize::MAX {
                    adj[new].insert(remap[j]);
                }
            }
            if self.loops.contains(old) {
                loops.insert(new);
            }
        }
        Graph { labels, index, adj, loops }
    }

    pub fn induced_subgraph(&self, vertices: &[Label]) -> Result<Graph> {
        let mut keep = FixedBitSet::with_capacity(self.vertex_count());
        for v in vertices {
            keep.insert(self.require(v)?);
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// `G − A`.
    pub fn delete_vertices(&self, vertices: &[Label]) -> Result<Graph> {
        let mut keep = FixedBitSet::with_capacity(self.vertex_count());
        keep.insert_range(..);
        for v in vertices {
            keep.set(self.require(v)?, false);
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// Disjoint union; vertices of `self` become `(0, v)` and those of
    /// `other` become `(1, v)`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let tag = |side: i64, l: &Label| Label::pair(side, l.clone());
        let vertices = self
            .labels
            .iter()
            .map(|l| tag(0, l))
            .chain(other.labels.iter().map(|l| tag(1, l)));
        let edges = self
            .edge_labels()
            .into_iter()
            .map(|(a, b)| (tag(0, &a), tag(0, &b)))
            .chain(other.edge_labels().into_iter().map(|(a, b)| (tag(1, &a), tag(1, &b))));
        let loops = self
            .loop_labels()
            .iter()
            .map(|l| tag(0, l))
            .chain(other.loop_labels().iter().map(|l| tag(1, l)))
            .collect::<Vec<_>>();
        Graph::new(vertices, edges, loops).expect("tagged labels are distinct")
    }

    /// Adds the edge `(u, v)`. Self-pairs are rejected; use [`Graph::with_loop`].
    pub fn add_edge(&self, u: &Label, v: &Label) -> Result<Graph> {
        if u == v {
            return Err(Error::SelfPair(u.clone()));
        }
        let a = self.require(u)?;
        let b = self.require(v)?;
        let mut g = self.clone();
        g.adj[a].insert(b);
        g.adj[b].insert(a);
        Ok(g)
    }

    pub fn remove_edge(&self, u: &Label, v: &Label) -> Result<Graph> {
        let a = self.require(u)?;
        let b = self.require(v)?;
        if a == b || !self.adj[a].contains(b) {
            return Err(Error::MissingEdge(u.clone(), v.clone()));
        }
        let mut g = self.clone();
        g.adj[a].set(b, false);
        g.adj[b].set(a, false);
        Ok(g)
    }

    /// Marks `v` as looped.
    pub fn with_loop(&self, v: &Label) -> Result<Graph> {
        let a = self.require(v)?;
        let mut g = self.clone();
        g.loops.insert(a);
        Ok(g)
    }

    /// Whether the subgraph induced by `set` is complete.
    pub(crate) fn is_clique(&self, set: &FixedBitSet) -> bool {
        let members: Vec<usize> = set.ones().collect();
        members.iter().enumerate().all(|(k, &i)| members[k + 1..].iter().all(|&j| self.adj[i].contains(j)))
    }

    /// Simplicial: not looped, at least one neighbour, and the neighbourhood
    /// induces a complete graph.
    pub fn is_simplicial(&self, i: usize) -> bool {
        !self.loops.contains(i) && !self.adj[i].is_clear() && self.is_clique(&self.adj[i])
    }

    fn to_petgraph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::<(), ()>::with_capacity(self.vertex_count(), self.edge_count());
        let nodes: Vec<_> = (0..self.vertex_count()).map(|_| g.add_node(())).collect();
        for (i, j) in self.edges() {
            g.add_edge(nodes[i], nodes[j], ());
        }
        for i in self.loops.ones() {
            g.add_edge(nodes[i], nodes[i], ());
        }
        g
    }

    /// Isomorphism test that ignores labels (loops must correspond too).
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.loop_count() == other.loop_count()
            && petgraph::algo::is_isomorphic(&self.to_petgraph(), &other.to_petgraph())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(i: i64) -> Label {
        Label::Int(i)
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::new([l(1), l(1)], [], []), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Graph::new([l(1)], [(l(1), l(1))], []), Err(Error::SelfPair(_))));
        assert!(matches!(Graph::new([l(1)], [(l(1), l(2))], []), Err(Error::UnknownVertex(_))));
        assert!(matches!(Graph::new([l(1)], [], [l(3)]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn vertex_order_is_canonical() {
        let g = Graph::new([l(3), l(1), l(2)], [(l(3), l(1))], []).unwrap();
        assert_eq!(g.labels(), &[l(1), l(2), l(3)]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.neighborhood(&l(1)).unwrap(), [l(2), l(5)].into());
        let lp = looped_path(2);
        assert_eq!(lp.neighborhood(&l(0)).unwrap(), [l(0), l(1)].into());
        let k4 = complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood_set(&[l(1), l(2)]).unwrap().len(), 4);
        assert!(matches!(k4.neighborhood(&l(9)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn surgery() {
        let k4 = complete(4).unwrap();
        assert!(k4.delete_vertices(&[l(4)]).unwrap().is_isomorphic(&complete(3).unwrap()));
        let p = cycle(5).unwrap().induced_subgraph(&[l(1), l(2), l(3)]).unwrap();
        assert_eq!(p, path(3).unwrap());
        let k2 = complete(2).unwrap();
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.vertex_count(), 4);
        assert!(u.contains(&Label::pair(1, 2)));
        assert!(u.is_isomorphic(&categorical_product(&k2, &k2)));
        assert!(matches!(k2.add_edge(&l(1), &l(1)), Err(Error::SelfPair(_))));
        let g = path(3).unwrap().add_edge(&l(1), &l(3)).unwrap();
        assert_eq!(g, cycle(3).unwrap());
        assert!(g.with_loop(&l(2)).unwrap().is_looped(1));
    }

    #[test]
    fn simplicial_vertices() {
        let p = path(3).unwrap();
        assert!(p.is_simplicial(0));
        assert!(!p.is_simplicial(1));
        let e = Graph::edgeless([l(1)]).unwrap();
        assert!(!e.is_simplicial(0));
    }
}
