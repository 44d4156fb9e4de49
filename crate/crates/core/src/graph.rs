//! Simple undirected graphs with string vertex identifiers, and the
//! generators for every family.
//!
//! Vertex identifiers follow the sub/superscript notation of the
//! constructions: `c[j]` is the hub of copy `j`, `v[i][j]` is the `i`-th path
//! or rim vertex of copy `j`, `u`, `w`, `a`, `b` are used the same way, and
//! `p[i][j][k]` is vertex `(i, j)` of antiprism copy `k`.
//!
//! Vertices are stored sorted by identifier, so vertex indices order the same
//! way as identifiers and every edge `(a, b)` is kept with `a < b`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::family::FamilySpec;

/// Index of a vertex inside one [`Graph`].
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from vertex identifiers and identifier pairs.
    ///
    /// Endpoints that are not listed in `vertices` are added. Self-loops and
    /// repeated edges are rejected.
    pub fn from_edges<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut names = BTreeSet::new();
        names.extend(vertices.into_iter().map(Into::into));
        let pairs: Vec<(String, String)> = edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        for (a, b) in &pairs {
            names.insert(a.clone());
            names.insert(b.clone());
        }
        let names: Vec<String> = names.into_iter().collect();
        let index: HashMap<String, VertexId> = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b) in &pairs {
            let (x, y) = (index[a], index[b]);
            if x == y {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            edges.push((x.min(y), x.max(y)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(Error::InvalidGraph(format!("repeated edge {} {}", names[a], names[b])));
        }

        let mut adjacency = vec![Vec::new(); names.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        Ok(Graph { names, index, edges, adjacency })
    }

    /// The complete graph on `n` vertices named `x[1] .. x[n]`.
    pub fn complete(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("x[{i}]")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
        Graph::from_edges(names.clone(), edges).expect("complete graph is simple")
    }

    /// `m` disjoint paths on `n` vertices each; vertex `i` of path `j` is `v[i][j]`.
    pub fn path_forest(m: u32, n: u32) -> Self {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for j in 1..=m {
            for i in 1..=n {
                vertices.push(v(i, j));
                if i < n {
                    edges.push((v(i, j), v(i + 1, j)));
                }
            }
        }
        Graph::from_edges(vertices, edges).expect("path forest is simple")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    /// Edges in canonical form, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    /// Position of the edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edge_names(&self, edge: usize) -> (&str, &str) {
        let (a, b) = self.edges[edge];
        (&self.names[a], &self.names[b])
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }
}

pub(crate) fn c(j: u32) -> String {
    format!("c[{j}]")
}

pub(crate) fn v(i: u32, j: u32) -> String {
    format!("v[{i}][{j}]")
}

pub(crate) fn u(i: u32, j: u32) -> String {
    format!("u[{i}][{j}]")
}

pub(crate) fn w(i: u32, j: u32) -> String {
    format!("w[{i}][{j}]")
}

pub(crate) fn a(i: u32, t: u32) -> String {
    format!("a[{i}][{t}]")
}

pub(crate) fn b(i: u32, t: u32) -> String {
    format!("b[{i}][{t}]")
}

/// Antiprism vertex `(i, j)` of copy `k`; `i` wraps modulo `m`.
pub(crate) fn p(i: u32, j: u32, k: u32, m: u32) -> String {
    format!("p[{}][{j}][{k}]", (i - 1) % m + 1)
}

/// Number of path vertices in copy `j` of a fan union (`b` in the
/// construction): `n` for the first `s` copies, `n - 1` for the rest.
pub(crate) fn union_path_len(s: u32, n: u32, j: u32) -> u32 {
    if j <= s {
        n
    } else {
        n - 1
    }
}

#[derive(Default)]
struct Builder {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Builder {
    fn vertex(&mut self, name: String) {
        self.vertices.push(name);
    }

    fn edge(&mut self, x: String, y: String) {
        self.edges.push((x, y));
    }

    fn finish(self) -> Graph {
        Graph::from_edges(self.vertices, self.edges).expect("family generators produce simple graphs")
    }
}

/// Builds the family graph, rejecting parameters outside the ranges where the
/// constructive labelings apply.
pub fn build_graph(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(generate(spec))
}

/// Builds the family graph for any structurally meaningful parameters
/// (single copies included).
pub fn build_graph_structural(spec: &FamilySpec) -> Result<Graph> {
    spec.validate_structure()?;
    Ok(generate(spec))
}

fn generate(spec: &FamilySpec) -> Graph {
    let mut g = Builder::default();
    match *spec {
        FamilySpec::Fans { m, n } => {
            for j in 1..=m {
                fan(&mut g, j, n);
            }
        }
        FamilySpec::FanUnion { s, k, n } => {
            for j in 1..=s + k {
                fan(&mut g, j, union_path_len(s, n, j));
            }
        }
        FamilySpec::Ladders { m, n } => {
            for j in 1..=m {
                ladder(&mut g, n, |i| u(i, j), |i| v(i, j));
            }
        }
        FamilySpec::LadderUnion { s, k, n } => {
            for j in 1..=s {
                ladder(&mut g, n, |i| u(i, j), |i| v(i, j));
            }
            for t in 1..=k {
                ladder(&mut g, n - 1, |i| a(i, t), |i| b(i, t));
            }
        }
        FamilySpec::TriangularLadders { m, n } => {
            for j in 1..=m {
                ladder(&mut g, n, |i| u(i, j), |i| v(i, j));
                for i in 1..n {
                    g.edge(u(i + 1, j), v(i, j));
                }
            }
        }
        FamilySpec::Wheels { m, n } => {
            for j in 1..=m {
                fan(&mut g, j, n);
                g.edge(v(n, j), v(1, j));
            }
        }
        FamilySpec::Books { m, n } => {
            for j in 1..=m {
                g.edge(u(1, j), u(2, j));
                for i in 1..=n {
                    g.edge(u(1, j), w(i, j));
                    g.edge(u(2, j), v(i, j));
                    g.edge(v(i, j), w(i, j));
                }
            }
        }
        FamilySpec::Antiprism { l, m, n } => {
            for k in 1..=l {
                for i in 1..=m {
                    for j in 1..=n {
                        g.vertex(p(i, j, k, m));
                        g.edge(p(i, j, k, m), p(i + 1, j, k, m));
                        if j < n {
                            g.edge(p(i, j, k, m), p(i, j + 1, k, m));
                            g.edge(p(i, j + 1, k, m), p(i + 1, j, k, m));
                        }
                    }
                }
            }
        }
    }
    g.finish()
}

fn fan(g: &mut Builder, j: u32, path_len: u32) {
    g.vertex(c(j));
    for i in 1..=path_len {
        g.edge(c(j), v(i, j));
        if i < path_len {
            g.edge(v(i, j), v(i + 1, j));
        }
    }
}

fn ladder(g: &mut Builder, n: u32, top: impl Fn(u32) -> String, bottom: impl Fn(u32) -> String) {
    for i in 1..=n {
        g.edge(top(i), bottom(i));
        if i < n {
            g.edge(top(i), top(i + 1));
            g.edge(bottom(i), bottom(i + 1));
        }
    }
}
