//! Graph reductions that preserve the homotopy type of `Ind(G)`, and a
//! driver that chains them.

use serde::{Deserialize, Serialize};

use super::HomotopyType;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::Label;

/// One rule application. `depth` counts enclosing simplicial splits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub depth: usize,
    #[serde(flatten)]
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum Rule {
    /// Looped vertices lie in no face.
    DropLooped { vertices: Vec<Label> },
    /// `N(kept) ⊆ N(removed)`.
    Fold { kept: Label, removed: Label },
    /// No vertices: `Ind = {∅} = S^-1`.
    EmptyGraph,
    /// An isolated vertex makes `Ind(G)` a cone.
    IsolatedVertex { vertex: Label },
    /// `Ind(G) ≃ ⋁ Σ Ind(G − N[w])` over the neighbours `w` of a
    /// simplicial vertex.
    SimplicialSplit { vertex: Label, neighbors: Vec<Label> },
    /// `G − N[{a,b}]` has an isolated vertex, so `Ind(G)` collapses onto
    /// `Ind(G + ab)`.
    EdgeAddition { a: Label, b: Label },
    /// No rule applies to a graph on this many vertices.
    Stuck { vertices: usize },
    BudgetExhausted { budget: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Type(HomotopyType),
    Stuck(Graph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub outcome: Outcome,
    pub trace: Vec<TraceStep>,
}

impl Reduction {
    pub fn homotopy(&self) -> Option<&HomotopyType> {
        match &self.outcome {
            Outcome::Type(t) => Some(t),
            Outcome::Stuck(_) => None,
        }
    }

    pub fn trace_json(&self) -> String {
        serde_json::to_string(&self.trace).expect("trace serializes")
    }
}

pub const DEFAULT_BUDGET: usize = 10_000;

fn drop_looped(g: &Graph) -> (Graph, Option<Rule>) {
    if g.loop_count() == 0 {
        return (g.clone(), None);
    }
    let looped = g.loop_labels();
    let h = g.delete_vertices(&looped).expect("loop labels are vertices");
    (h, Some(Rule::DropLooped { vertices: looped }))
}

/// The first pair `(u, u′)`, in label order, with `N(u) ⊆ N(u′)`.
fn dominated_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| u != v && g.neighbors(u).is_subset(g.neighbors(v)))
}

/// Deletes looped vertices, then repeatedly deletes `u′` for the first pair
/// `(u, u′)` in label order with `N(u) ⊆ N(u′)`, until no such pair is left.
pub fn fold_reduce(g: &Graph) -> (Graph, Vec<Rule>) {
    let (mut g, first) = drop_looped(g);
    let mut trace: Vec<Rule> = first.into_iter().collect();
    while let Some((u, v)) = dominated_pair(&g) {
        let (kept, removed) = (g.label(u).clone(), g.label(v).clone());
        g = g.delete_vertices(std::slice::from_ref(&removed)).expect("vertex exists");
        trace.push(Rule::Fold { kept, removed });
    }
    (g, trace)
}

/// For a simplicial vertex `v`, the graphs `G − N[w]` for each neighbour
/// `w` of `v`, paired with `w`. `Ind(G)` is the wedge of the suspensions of
/// their independence complexes.
pub fn simplicial_split(g: &Graph, v: &Label) -> Result<Vec<(Label, Graph)>> {
    let i = g.require(v)?;
    if !g.is_simplicial(i) {
        return Err(Error::NotSimplicial(v.clone()));
    }
    g.neighbors(i)
        .ones()
        .map(|w| {
            let w = g.label(w).clone();
            let closed: Vec<Label> = g.closed_neighborhood(&w)?.into_iter().collect();
            Ok((w, g.delete_vertices(&closed)?))
        })
        .collect()
}

/// Adds the edge `ab` when `G − N[{a,b}]` has an isolated vertex, which
/// makes its independence complex a cone, so that `Ind(G)` collapses onto
/// `Ind(G + ab)`. `None` when the test fails.
pub fn edge_add_if_cone(g: &Graph, a: &Label, b: &Label) -> Result<Option<Graph>> {
    let (i, j) = (g.require(a)?, g.require(b)?);
    if i == j {
        return Err(Error::SelfPair(a.clone()));
    }
    if g.adjacent(i, j) {
        return Err(Error::AlreadyAdjacent(a.clone(), b.clone()));
    }
    if g.is_looped(i) || g.is_looped(j) {
        return Err(Error::InvalidParameter(format!("{{{a}, {b}}} is not independent: looped vertex")));
    }
    let closed: Vec<Label> = g.closed_neighborhood_set(&[a.clone(), b.clone()])?.into_iter().collect();
    let rest = g.delete_vertices(&closed)?;
    let cone = (0..rest.vertex_count()).any(|k| rest.is_isolated(k));
    if cone {
        Ok(Some(g.add_edge(a, b)?))
    } else {
        Ok(None)
    }
}

/// `{σ ∈ K : v ∉ σ}` when `lk_K(v)` is a cone, hence contractible; `None`
/// otherwise.
pub fn link_delete_if_cone(k: &SimplicialComplex, v: &Label) -> Result<Option<SimplicialComplex>> {
    let link = k.link(v)?;
    if link.is_cone().is_some() {
        Ok(Some(k.delete_vertex(v)?))
    } else {
        Ok(None)
    }
}

/// The first non-adjacent pair in label order that passes
/// [`edge_add_if_cone`], with the enlarged graph.
fn first_cone_edge(g: &Graph) -> Option<(Label, Label, Graph)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.adjacent(i, j))
        .find_map(|(i, j)| {
            let (a, b) = (g.label(i).clone(), g.label(j).clone());
            edge_add_if_cone(g, &a, &b).ok().flatten().map(|h| (a, b, h))
        })
}

struct Driver {
    budget: usize,
    used: usize,
    trace: Vec<TraceStep>,
}

impl Driver {
    fn record(&mut self, depth: usize, rule: Rule) -> bool {
        self.trace.push(TraceStep { depth, rule });
        self.used += 1;
        self.used <= self.budget
    }

    fn exhausted(&mut self, depth: usize, g: Graph) -> Outcome {
        self.trace.push(TraceStep { depth, rule: Rule::BudgetExhausted { budget: self.budget } });
        Outcome::Stuck(g)
    }

    fn run(&mut self, g: &Graph, depth: usize) -> Outcome {
        let (mut g, looped) = drop_looped(g);
        if let Some(rule) = looped {
            if !self.record(depth, rule) {
                return self.exhausted(depth, g);
            }
        }
        loop {
            if g.vertex_count() == 0 {
                self.record(depth, Rule::EmptyGraph);
                return Outcome::Type(HomotopyType::empty());
            }
            if let Some(i) = (0..g.vertex_count()).find(|&i| g.is_isolated(i)) {
                self.record(depth, Rule::IsolatedVertex { vertex: g.label(i).clone() });
                return Outcome::Type(HomotopyType::point());
            }
            if let Some((u, v)) = dominated_pair(&g) {
                let (kept, removed) = (g.label(u).clone(), g.label(v).clone());
                g = g.delete_vertices(std::slice::from_ref(&removed)).expect("vertex exists");
                if !self.record(depth, Rule::Fold { kept, removed }) {
                    return self.exhausted(depth, g);
                }
                continue;
            }
            if let Some(v) = (0..g.vertex_count()).find(|&i| g.is_simplicial(i)) {
                return self.split(g, v, depth);
            }
            if let Some((a, b, h)) = first_cone_edge(&g) {
                g = h;
                if !self.record(depth, Rule::EdgeAddition { a, b }) {
                    return self.exhausted(depth, g);
                }
                continue;
            }
            self.trace.push(TraceStep { depth, rule: Rule::Stuck { vertices: g.vertex_count() } });
            return Outcome::Stuck(g);
        }
    }

    fn split(&mut self, g: Graph, v: usize, depth: usize) -> Outcome {
        let vertex = g.label(v).clone();
        let branches = simplicial_split(&g, &vertex).expect("vertex is simplicial");
        let neighbors = branches.iter().map(|(w, _)| w.clone()).collect();
        if !self.record(depth, Rule::SimplicialSplit { vertex, neighbors }) {
            return self.exhausted(depth, g);
        }
        let mut acc = HomotopyType::point();
        for (_, sub) in branches {
            match self.run(&sub, depth + 1) {
                Outcome::Type(t) => {
                    acc = acc.wedge(&t.suspend()).expect("suspensions are never S^-1");
                }
                stuck => return stuck,
            }
        }
        Outcome::Type(acc)
    }
}

/// Chains the rules: drop looped vertices; an empty graph gives `S^-1`; an
/// isolated vertex gives a point; fold dominated vertices; split at the
/// first simplicial vertex in label order and recurse; failing all of that,
/// add the first edge certified by [`edge_add_if_cone`] and start over. Returns `Stuck` with
/// the residual graph when nothing applies or `budget` rule applications
/// have been spent.
pub fn reduce(g: &Graph, budget: usize) -> Reduction {
    let mut d = Driver { budget, used: 0, trace: Vec::new() };
    let outcome = d.run(g, 0);
    Reduction { outcome, trace: d.trace }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{independence_complex, Limits};
    use crate::family::Family;
    use crate::graph::{categorical_product, complete, cycle, gadget_i, looped_path, path};

    fn l(i: i64) -> Label {
        Label::Int(i)
    }

    fn reduced(g: &Graph) -> Option<HomotopyType> {
        reduce(g, DEFAULT_BUDGET).homotopy().cloned()
    }

    #[test]
    fn fold_on_looped_level_product() {
        let g = categorical_product(&complete(3).unwrap(), &looped_path(1));
        let (h, trace) = fold_reduce(&g);
        assert!(matches!(trace[0], Rule::Fold { .. }));
        assert_eq!(h.edge_count(), 0);
        assert!(h.vertex_count() >= 1);
    }

    #[test]
    fn fold_leaves_cliques_alone() {
        for n in 2..6 {
            let k = complete(n).unwrap();
            let (h, trace) = fold_reduce(&k);
            assert_eq!(h, k);
            assert!(trace.is_empty());
        }
    }

    #[test]
    fn simplicial_split_examples() {
        let k2 = complete(2).unwrap();
        let parts = simplicial_split(&k2, &l(1)).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(parts[0].1.is_empty());

        let g = gadget_i(4, 1, 2).unwrap();
        let parts = simplicial_split(&g, &Label::pair(1, 1)).unwrap();
        assert_eq!(parts.len(), 3);
        for (_, sub) in &parts {
            assert!(sub.is_isomorphic(&k2));
        }
        assert!(matches!(simplicial_split(&cycle(5).unwrap(), &l(1)), Err(Error::NotSimplicial(_))));
        let iso = Graph::edgeless([l(1)]).unwrap();
        assert!(simplicial_split(&iso, &l(1)).is_err());
    }

    #[test]
    fn edge_addition() {
        let g = gadget_i(3, 1, 3).unwrap();
        let (a, b) = (Label::pair(1, 1), Label::pair(2, 1));
        let h = edge_add_if_cone(&g, &a, &b).unwrap().expect("(1,3) is isolated");
        assert!(h.has_edge(&a, &b));

        let c6 = cycle(6).unwrap();
        assert!(edge_add_if_cone(&c6, &l(1), &l(3)).unwrap().is_some());
        // C5 − N[{1,3}] is empty, whose complex {∅} is no cone
        assert_eq!(edge_add_if_cone(&cycle(5).unwrap(), &l(1), &l(3)).unwrap(), None);
        assert!(matches!(edge_add_if_cone(&c6, &l(1), &l(2)), Err(Error::AlreadyAdjacent(..))));
    }

    #[test]
    fn link_deletion() {
        let cone = Graph::new([l(1), l(2), l(3)], [(l(1), l(2))], []).unwrap();
        let k = independence_complex(&cone, None, &Limits::default()).unwrap();
        let y = link_delete_if_cone(&k, &l(1)).unwrap().expect("link of 1 is the vertex 3");
        assert!(!y.contains_labels(&[l(1)]));
        let c6 = independence_complex(&cycle(6).unwrap(), None, &Limits::default()).unwrap();
        let c6_plus = SimplicialComplex::from_facets(
            c6.vertices().to_vec(),
            &c6.facets().iter().map(|f| c6.labels_of(f)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(c6_plus, c6);
        // link of 1 in Ind(C6) is Ind(P3) on {3,4,5}: {3,5} and {4}, no cone
        assert_eq!(link_delete_if_cone(&c6, &l(1)).unwrap(), None);
    }

    #[test]
    fn driver_examples() {
        for n in 2..=4 {
            for k in 0..=1 {
                let g = Family::KnLr { n, r: 3 * k + 1 }.graph().unwrap();
                assert_eq!(reduced(&g), Some(HomotopyType::point()), "K_{n} x L_{}", 3 * k + 1);
            }
            assert_eq!(reduced(&complete(n).unwrap()), Some(HomotopyType::spheres(n as u64 - 1, 0)));
        }
        assert_eq!(reduced(&path(7).unwrap()), Some(HomotopyType::point()));
        assert_eq!(reduced(&path(6).unwrap()), Some(HomotopyType::sphere(1)));
        assert_eq!(reduced(&Graph::empty()), Some(HomotopyType::empty()));
        assert_eq!(reduced(&gadget_i(3, 1, 3).unwrap()), Some(HomotopyType::point()));
    }

    #[test]
    fn cycles() {
        let r = reduce(&cycle(6).unwrap(), DEFAULT_BUDGET);
        assert!(matches!(r.trace[0].rule, Rule::EdgeAddition { .. }));
        assert_eq!(r.homotopy(), Some(&HomotopyType::spheres(2, 1)));
        // C5 has no dominated pair, no simplicial vertex and no certified edge
        let r = reduce(&cycle(5).unwrap(), DEFAULT_BUDGET);
        assert!(matches!(r.outcome, Outcome::Stuck(ref g) if g.vertex_count() == 5));
        assert!(matches!(r.trace.last().unwrap().rule, Rule::Stuck { vertices: 5 }));
    }

    #[test]
    fn looped_vertices_are_dropped_first() {
        let g = looped_path(3);
        let r = reduce(&g, DEFAULT_BUDGET);
        assert!(matches!(r.trace[0].rule, Rule::DropLooped { ref vertices } if vertices == &[l(0)]));
        assert_eq!(r.homotopy(), Some(&HomotopyType::sphere(0)));
    }

    #[test]
    fn budget_is_enforced() {
        let r = reduce(&path(30).unwrap(), 2);
        assert!(matches!(r.outcome, Outcome::Stuck(_)));
        assert!(matches!(r.trace.last().unwrap().rule, Rule::BudgetExhausted { budget: 2 }));
    }

    #[test]
    fn trace_json_shape() {
        let r = reduce(&complete(2).unwrap(), DEFAULT_BUDGET);
        let v: serde_json::Value = serde_json::from_str(&r.trace_json()).unwrap();
        assert_eq!(v[0]["lemma"], "simplicial_split");
        assert_eq!(v[0]["vertex"], 1);
        assert_eq!(v[1]["lemma"], "empty_graph");
        assert_eq!(v[1]["depth"], 1);
    }
}
