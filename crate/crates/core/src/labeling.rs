//! Total labelings, vertex labelings with their edge sums, and the two
//! building blocks used by the constructions: extension of a vertex labeling
//! with consecutive edge sums to a super edge-magic total labeling, and the
//! edge-antimagic vertex labeling of a path forest.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub type Label = u32;

fn edge_key(x: &str, y: &str) -> (String, String) {
    if x <= y {
        (x.to_string(), y.to_string())
    } else {
        (y.to_string(), x.to_string())
    }
}

/// Labels for every vertex and every edge of a graph, keyed by identifier.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TotalLabeling {
    vertex_labels: BTreeMap<String, Label>,
    edge_labels: BTreeMap<(String, String), Label>,
}

impl TotalLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a labeling from per-index vectors over `g`.
    pub fn from_indexed(g: &Graph, vertex: &[Label], edge: &[Label]) -> Self {
        let mut out = TotalLabeling::new();
        for (i, &l) in vertex.iter().enumerate() {
            out.set_vertex(g.name(i), l);
        }
        for (e, &l) in edge.iter().enumerate() {
            let (x, y) = g.edge_names(e);
            out.set_edge(x, y, l);
        }
        out
    }

    pub fn set_vertex(&mut self, name: &str, label: Label) -> Option<Label> {
        self.vertex_labels.insert(name.to_string(), label)
    }

    /// Sets the label of edge `{x, y}`; endpoint order does not matter.
    pub fn set_edge(&mut self, x: &str, y: &str, label: Label) -> Option<Label> {
        self.edge_labels.insert(edge_key(x, y), label)
    }

    pub fn vertex(&self, name: &str) -> Option<Label> {
        self.vertex_labels.get(name).copied()
    }

    pub fn edge(&self, x: &str, y: &str) -> Option<Label> {
        self.edge_labels.get(&edge_key(x, y)).copied()
    }

    /// Vertex labels sorted by identifier.
    pub fn vertex_labels(&self) -> impl Iterator<Item = (&str, Label)> {
        self.vertex_labels.iter().map(|(k, &l)| (k.as_str(), l))
    }

    /// Edge labels sorted by canonical edge `(x, y)` with `x < y`.
    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str, Label)> {
        self.edge_labels.iter().map(|((x, y), &l)| (x.as_str(), y.as_str(), l))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    /// Resolves the labeling against `g` into per-index vectors, failing if it
    /// labels something `g` does not have or misses an element of `g`.
    pub fn indexed(&self, g: &Graph) -> Result<(Vec<Label>, Vec<Label>)> {
        if self.vertex_labels.len() != g.order() || self.edge_labels.len() != g.size() {
            return Err(Error::DomainMismatch(format!(
                "labeling has {} vertices and {} edges, graph has {} and {}",
                self.vertex_labels.len(),
                self.edge_labels.len(),
                g.order(),
                g.size()
            )));
        }
        let vertex = g
            .vertex_names()
            .iter()
            .map(|n| self.vertex(n).ok_or_else(|| Error::DomainMismatch(format!("vertex {n} is unlabeled"))))
            .collect::<Result<Vec<_>>>()?;
        let edge = (0..g.size())
            .map(|e| {
                let (x, y) = g.edge_names(e);
                self.edge(x, y).ok_or_else(|| Error::DomainMismatch(format!("edge {x} {y} is unlabeled")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((vertex, edge))
    }
}

/// A bijection from the vertices onto `1..=v` together with the sorted
/// multiset of edge endpoint sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialVertexLabeling {
    vertex_labels: BTreeMap<String, Label>,
    edge_sums: Vec<u64>,
}

impl PartialVertexLabeling {
    /// Checks that `labels` (indexed like `g`'s vertices) is a bijection onto
    /// `1..=v` and records the edge sums.
    pub fn new(g: &Graph, labels: &[Label]) -> Result<Self> {
        let v = g.order();
        if labels.len() != v {
            return Err(Error::DomainMismatch(format!("{} labels for {v} vertices", labels.len())));
        }
        let mut seen = vec![false; v + 1];
        for &l in labels {
            let slot = l as usize;
            if slot == 0 || slot > v || seen[slot] {
                return Err(Error::DomainMismatch(format!("vertex labels are not a bijection onto 1..={v}")));
            }
            seen[slot] = true;
        }
        let mut edge_sums: Vec<u64> =
            g.edges().iter().map(|&(x, y)| u64::from(labels[x]) + u64::from(labels[y])).collect();
        edge_sums.sort_unstable();
        let vertex_labels = labels.iter().enumerate().map(|(i, &l)| (g.name(i).to_string(), l)).collect();
        Ok(PartialVertexLabeling { vertex_labels, edge_sums })
    }

    pub fn vertex(&self, name: &str) -> Option<Label> {
        self.vertex_labels.get(name).copied()
    }

    pub fn vertex_labels(&self) -> impl Iterator<Item = (&str, Label)> {
        self.vertex_labels.iter().map(|(k, &l)| (k.as_str(), l))
    }

    /// Edge sums, ascending.
    pub fn edge_sums(&self) -> &[u64] {
        &self.edge_sums
    }

    fn label_of(&self, g: &Graph, v: VertexId) -> Result<u64> {
        self.vertex(g.name(v))
            .map(u64::from)
            .ok_or_else(|| Error::DomainMismatch(format!("vertex {} is unlabeled", g.name(v))))
    }
}

/// A super edge-magic total labeling and its constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMagicExtension {
    pub labeling: TotalLabeling,
    pub constant: u64,
}

/// Extends a vertex labeling whose edge sums are `e` consecutive integers:
/// edge `xy` gets `c - λ(x) - λ(y)` with `c = v + e + min(S)`, so the edge
/// labels are exactly `v+1..=v+e` and every edge triple sums to `c`.
pub fn sem_extend(partial: &PartialVertexLabeling, g: &Graph) -> Result<EdgeMagicExtension> {
    if partial.vertex_labels.len() != g.order() {
        return Err(Error::DomainMismatch("vertex labeling does not match the graph".into()));
    }
    let sums = partial.edge_sums();
    let Some(&min) = sums.first() else {
        return Err(Error::InvalidArgument("graph has no edges".into()));
    };
    if sums.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::NotConsecutive(sums.to_vec()));
    }
    let constant = (g.order() + g.size()) as u64 + min;

    let mut labeling = TotalLabeling::new();
    for (name, l) in partial.vertex_labels() {
        labeling.set_vertex(name, l);
    }
    for &(x, y) in g.edges() {
        let sum = partial.label_of(g, x)? + partial.label_of(g, y)?;
        let label = Label::try_from(constant - sum).map_err(|_| Error::Overflow)?;
        labeling.set_edge(g.name(x), g.name(y), label);
    }
    Ok(EdgeMagicExtension { labeling, constant })
}

/// The `(m + 2, 2)`-edge-antimagic vertex labeling of `m` disjoint paths on
/// `n` vertices: vertex `i` of path `j` gets `m(i - 1) + j`, so the edge sums
/// are `m + 2, m + 4, ..., m + 2m(n - 1)`.
pub fn eav_path_forest(m: u32, n: u32) -> Result<PartialVertexLabeling> {
    if m < 2 {
        return Err(Error::ParameterOutOfRange { param: "m", value: m.into(), allowed: "m >= 2" });
    }
    if n < 2 {
        return Err(Error::ParameterOutOfRange { param: "n", value: n.into(), allowed: "n >= 2" });
    }
    let g = Graph::path_forest(m, n);
    let mut labels = vec![0; g.order()];
    for j in 1..=m {
        for i in 1..=n {
            let id = g.vertex_id(&format!("v[{i}][{j}]")).expect("path forest vertex");
            labels[id] = m * (i - 1) + j;
        }
    }
    PartialVertexLabeling::new(&g, &labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3")]).unwrap()
    }

    #[test]
    fn extends_path_132() {
        let g = path3();
        let p = PartialVertexLabeling::new(&g, &[1, 3, 2]).unwrap();
        assert_eq!(p.edge_sums(), &[4, 5]);
        let ext = sem_extend(&p, &g).unwrap();
        assert_eq!(ext.constant, 9);
        assert_eq!(ext.labeling.edge("x1", "x2"), Some(5));
        assert_eq!(ext.labeling.edge("x3", "x2"), Some(4));
    }

    #[test]
    fn extends_single_edge() {
        let g = Graph::from_edges(["x", "y"], [("x", "y")]).unwrap();
        let p = PartialVertexLabeling::new(&g, &[1, 2]).unwrap();
        let ext = sem_extend(&p, &g).unwrap();
        assert_eq!(ext.constant, 6);
        assert_eq!(ext.labeling.edge("x", "y"), Some(3));
    }

    #[test]
    fn rejects_gap_in_sums() {
        let g = path3();
        let p = PartialVertexLabeling::new(&g, &[1, 2, 3]).unwrap();
        assert_eq!(sem_extend(&p, &g), Err(Error::NotConsecutive(vec![3, 5])));
    }

    #[test]
    fn partial_must_be_bijective() {
        let g = path3();
        assert!(PartialVertexLabeling::new(&g, &[1, 1, 3]).is_err());
        assert!(PartialVertexLabeling::new(&g, &[1, 2, 4]).is_err());
    }

    #[test]
    fn eav_small() {
        let p = eav_path_forest(2, 2).unwrap();
        assert_eq!(p.edge_sums(), &[4, 6]);
        assert_eq!(p.vertex("v[1][1]"), Some(1));
        assert_eq!(p.vertex("v[2][1]"), Some(3));
        assert_eq!(p.vertex("v[1][2]"), Some(2));
        assert_eq!(p.vertex("v[2][2]"), Some(4));
        assert_eq!(eav_path_forest(2, 3).unwrap().edge_sums(), &[4, 6, 8, 10]);
        assert!(matches!(eav_path_forest(1, 2), Err(Error::ParameterOutOfRange { param: "m", .. })));
    }

    #[test]
    fn indexed_detects_mismatch() {
        let g = path3();
        let mut lab = TotalLabeling::new();
        lab.set_vertex("x1", 1);
        assert!(matches!(lab.indexed(&g), Err(Error::DomainMismatch(_))));
    }
}
