use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::label::Label;

fn ints(range: impl Iterator<Item = i64>) -> Vec<Label> {
    range.map(Label::Int).collect()
}

fn edge(a: i64, b: i64) -> (Label, Label) {
    (Label::Int(a), Label::Int(b))
}

/// `K_n` on labels `1..=n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let n = n as i64;
    let edges = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| edge(a, b)));
    Graph::new(ints(1..=n), edges, [])
}

/// Path on labels `1..=n` with edges `(i, i+1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let n = n as i64;
    Graph::new(ints(1..=n), (1..n).map(|i| edge(i, i + 1)), [])
}

/// `C_n` on labels `1..=n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let n = n as i64;
    let edges = (1..n).map(|i| edge(i, i + 1)).chain([edge(1, n)]);
    Graph::new(ints(1..=n), edges, [])
}

/// `L_r`: the path `0 - 1 - ... - r` with a loop at `0`.
pub fn looped_path(r: usize) -> Graph {
    let r = r as i64;
    Graph::new(ints(0..=r), (0..r).map(|i| edge(i, i + 1)), [Label::Int(0)])
        .expect("looped path is well formed")
}

/// Categorical (tensor) product. Vertex `(g, h)` is adjacent to `(g', h')`
/// iff `g ~ g'` and `h ~ h'`, where a looped vertex counts as adjacent to
/// itself; `(g, h)` is looped iff both coordinates are.
pub fn categorical_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let pair = |a: usize, b: usize| Label::pair(g.label(a).clone(), h.label(b).clone());
    let vertices: Vec<Label> = (0..ng).flat_map(|a| (0..nh).map(move |b| (a, b))).map(|(a, b)| pair(a, b)).collect();
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for a in 0..ng {
        for a2 in a..ng {
            if !g.adjacent(a, a2) {
                continue;
            }
            for b in 0..nh {
                for b2 in 0..nh {
                    if !h.adjacent(b, b2) {
                        continue;
                    }
                    if a == a2 {
                        if b == b2 {
                            loops.push(pair(a, b));
                        } else if b < b2 {
                            edges.push((pair(a, b), pair(a, b2)));
                        }
                    } else {
                        edges.push((pair(a, b), pair(a2, b2)));
                    }
                }
            }
        }
    }
    Graph::new(vertices, edges, loops).expect("product labels are distinct")
}

/// Label of the Mycielskian apex.
pub fn apex_label() -> Label {
    Label::name("w")
}

/// `M_r(G)`: the product `G × L_r` with every vertex at level `r`
/// identified into the apex `w`. Would-be loops at the apex are discarded,
/// so the apex is adjacent to `(v, r-1)` exactly when `v` has a neighbour.
pub fn generalized_mycielskian(g: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::InvalidParameter("Mycielskian needs r >= 1".into()));
    }
    let product = categorical_product(g, &looped_path(r));
    let top = Label::Int(r as i64);
    let apex = apex_label();
    let quotient = |l: &Label| -> Label {
        match l.components() {
            Some([_, level]) if *level == top => apex.clone(),
            _ => l.clone(),
        }
    };
    let mut vertices: Vec<Label> = product.labels().iter().map(quotient).collect();
    vertices.sort();
    vertices.dedup();
    let edges: Vec<(Label, Label)> = product
        .edge_labels()
        .into_iter()
        .map(|(a, b)| (quotient(&a), quotient(&b)))
        .filter(|(a, b)| a != b)
        .collect();
    let loops: Vec<Label> = product
        .loop_labels()
        .iter()
        .map(quotient)
        .filter(|l| *l != apex)
        .collect();
    Graph::new(vertices, edges, loops)
}

/// `I^n_{i,j}`: levels `0..j` of the Mycielskian tower over `K_n` together
/// with the single vertex `(i, j)`. For `j = 0` this is the lone vertex `(i, 0)`.
pub fn gadget_i(n: usize, i: usize, j: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("gadget needs n >= 3".into()));
    }
    if i == 0 || i > n {
        return Err(Error::InvalidParameter(format!("gadget index i = {i} outside 1..={n}")));
    }
    let tower = categorical_product(&complete(n)?, &looped_path(j + 1));
    let mut keep: Vec<Label> = (1..=n as i64)
        .flat_map(|v| (0..j as i64).map(move |lvl| Label::pair(v, lvl)))
        .collect();
    keep.push(Label::pair(i as i64, j as i64));
    tower.induced_subgraph(&keep)
}

/// Result of a ladder replacement: the new graph and its four fresh
/// vertices `[a, b, c, d]`.
#[derive(Clone, Debug)]
pub struct LadderReplacement {
    pub graph: Graph,
    pub new_vertices: [Label; 4],
}

/// Four names `a, b, c, d` (suffixed with the smallest counter that avoids
/// collisions) not yet used in `g`.
pub fn fresh_ladder_labels(g: &Graph) -> [Label; 4] {
    for k in 0usize.. {
        let suffix = if k == 0 { String::new() } else { k.to_string() };
        let names = ["a", "b", "c", "d"].map(|s| Label::name(format!("{s}{suffix}")));
        if names.iter().all(|l| !g.contains(l)) {
            return names;
        }
    }
    unreachable!()
}

fn require_distinct(labels: &[&Label]) -> Result<()> {
    for (k, a) in labels.iter().enumerate() {
        if labels[k + 1..].contains(a) {
            return Err(Error::InvalidParameter(format!("ladder vertices must be distinct, `{a}` repeats")));
        }
    }
    Ok(())
}

fn require_edge(g: &Graph, u: &Label, v: &Label) -> Result<()> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::MissingEdge(u.clone(), v.clone()))
    }
}

fn ladder(g: &Graph, v1: &Label, v2: &Label, v3: &Label, v4: &Label) -> Result<LadderReplacement> {
    let [a, b, c, d] = fresh_ladder_labels(g);
    let removed = [(v1, v4), (v2, v3)];
    let mut edges: Vec<(Label, Label)> = g
        .edge_labels()
        .into_iter()
        .filter(|(x, y)| !removed.iter().any(|(p, q)| (x == *p && y == *q) || (x == *q && y == *p)))
        .collect();
    edges.extend([
        (v1.clone(), a.clone()),
        (a.clone(), b.clone()),
        (b.clone(), v3.clone()),
        (v2.clone(), c.clone()),
        (c.clone(), d.clone()),
        (d.clone(), v4.clone()),
        (a.clone(), c.clone()),
        (b.clone(), d.clone()),
    ]);
    let vertices = g.labels().iter().cloned().chain([a.clone(), b.clone(), c.clone(), d.clone()]);
    let graph = Graph::new(vertices, edges, g.loop_labels())?;
    Ok(LadderReplacement { graph, new_vertices: [a, b, c, d] })
}

/// Replaces the crossing edges `(v1, v4)` and `(v2, v3)` by a 2-ladder.
/// The edge `(v1, v2)` must be present as well.
pub fn ladder_replace_crossing(
    g: &Graph,
    v1: &Label,
    v2: &Label,
    v3: &Label,
    v4: &Label,
) -> Result<LadderReplacement> {
    require_distinct(&[v1, v2, v3, v4])?;
    for v in [v1, v2, v3, v4] {
        g.require(v)?;
    }
    require_edge(g, v1, v4)?;
    require_edge(g, v2, v3)?;
    require_edge(g, v1, v2)?;
    ladder(g, v1, v2, v3, v4)
}

/// Replaces the triangle edges `(v1, v3)` and `(v2, v3)` by a 2-ladder
/// ending in `v3` on both sides.
pub fn ladder_replace_triangle(g: &Graph, v1: &Label, v2: &Label, v3: &Label) -> Result<LadderReplacement> {
    require_distinct(&[v1, v2, v3])?;
    for v in [v1, v2, v3] {
        g.require(v)?;
    }
    require_edge(g, v1, v2)?;
    require_edge(g, v1, v3)?;
    require_edge(g, v2, v3)?;
    ladder(g, v1, v2, v3, v3)
}

/// `C_n^i`: the cycle `C_n` with the two edges at vertex 1 replaced by `i`
/// rungs `x_k – y_k`, rails `x_k – x_{k+1}`, `y_k – y_{k+1}`, and ends
/// `(1, x_i)`, `(1, y_i)`, `(2, x_1)`, `(n, y_1)`.
pub fn cycle_ladder(n: usize, i: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle ladder needs n >= 3".into()));
    }
    if i == 0 {
        return cycle(n);
    }
    let x = |k: usize| Label::name(format!("x{k}"));
    let y = |k: usize| Label::name(format!("y{k}"));
    let nn = n as i64;
    let mut edges: Vec<(Label, Label)> = (2..nn).map(|v| edge(v, v + 1)).collect();
    edges.extend((1..=i).map(|k| (x(k), y(k))));
    edges.extend((1..i).flat_map(|k| [(x(k), x(k + 1)), (y(k), y(k + 1))]));
    edges.extend([
        (Label::Int(1), x(i)),
        (Label::Int(1), y(i)),
        (Label::Int(2), x(1)),
        (Label::Int(nn), y(1)),
    ]);
    let vertices = ints(1..=nn).into_iter().chain((1..=i).flat_map(|k| [x(k), y(k)]));
    Graph::new(vertices, edges, [])
}

/// Random labelled graph on `1..=n`, each edge present with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let n = n as i64;
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(p) {
                edges.push(edge(a, b));
            }
        }
    }
    Graph::new(ints(1..=n), edges, []).expect("random graph is well formed")
}
