//! Cycles: the designated covering families and exhaustive enumeration of
//! all 3- and 4-cycles.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{self, build_graph, union_path_len, Graph, VertexId};

/// A cycle given by its vertices in traversal order.
///
/// Always stored in canonical form: it starts at its least vertex and the
/// second vertex is the lesser of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Canonicalizes a closed walk of distinct vertices. Adjacency is not
    /// checked here.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {len}")));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != len {
            return Err(Error::InvalidArgument("cycle repeats a vertex".into()));
        }
        let start = (0..len).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        if vertices[len - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertex pairs, closing pair included, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| {
            let (x, y) = (self.vertices[i], self.vertices[(i + 1) % len]);
            (x.min(y), x.max(y))
        })
    }

    /// Indices into `g.edges()` of the cycle's edges.
    pub fn edge_indices(&self, g: &Graph) -> Result<Vec<usize>> {
        self.edges().map(|(x, y)| g.edge_index(x, y).ok_or_else(|| Error::ForeignCycle(self.display(g)))).collect()
    }

    pub fn names<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.name(v)).collect()
    }

    /// `(x y z)` using vertex identifiers.
    pub fn display(&self, g: &Graph) -> String {
        let mut out = String::from("(");
        for (i, &v) in self.vertices.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", g.name(v));
        }
        out.push(')');
        out
    }
}

fn named_cycle(g: &Graph, names: &[String]) -> Result<Cycle> {
    let ids = names
        .iter()
        .map(|n| g.vertex_id(n).ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {n}"))))
        .collect::<Result<Vec<_>>>()?;
    Cycle::new(ids)
}

/// The designated cycles of a family: the cycles over which the
/// construction's weights are all equal.
pub fn covering_cycles(spec: &FamilySpec) -> Result<Vec<Cycle>> {
    let g = build_graph(spec)?;
    covering_cycles_in(spec, &g)
}

/// Like [`covering_cycles`], resolving vertices against an already built
/// graph of the same spec.
pub fn covering_cycles_in(spec: &FamilySpec, g: &Graph) -> Result<Vec<Cycle>> {
    use graph::{a, b, c, p, u, v, w};

    let mut named: Vec<Vec<String>> = Vec::new();
    match *spec {
        FamilySpec::Fans { m, n } => {
            for j in 1..=m {
                for i in 1..n {
                    named.push(vec![c(j), v(i, j), v(i + 1, j)]);
                }
            }
        }
        FamilySpec::FanUnion { s, k, n } => {
            for j in 1..=s + k {
                for i in 1..union_path_len(s, n, j) {
                    named.push(vec![c(j), v(i, j), v(i + 1, j)]);
                }
            }
        }
        FamilySpec::Ladders { m, n } => {
            for j in 1..=m {
                for i in 1..n {
                    named.push(vec![u(i, j), u(i + 1, j), v(i + 1, j), v(i, j)]);
                }
            }
        }
        FamilySpec::LadderUnion { s, k, n } => {
            for j in 1..=s {
                for i in 1..n {
                    named.push(vec![u(i, j), u(i + 1, j), v(i + 1, j), v(i, j)]);
                }
            }
            for t in 1..=k {
                for i in 1..n - 1 {
                    named.push(vec![a(i, t), a(i + 1, t), b(i + 1, t), b(i, t)]);
                }
            }
        }
        FamilySpec::TriangularLadders { m, n } => {
            for j in 1..=m {
                for i in 1..n {
                    named.push(vec![u(i, j), v(i, j), u(i + 1, j)]);
                    named.push(vec![u(i + 1, j), v(i, j), v(i + 1, j)]);
                }
            }
        }
        FamilySpec::Wheels { m, n } => {
            for j in 1..=m {
                for i in 1..=n {
                    named.push(vec![c(j), v(i, j), v(i % n + 1, j)]);
                }
            }
        }
        FamilySpec::Books { m, n } => {
            for j in 1..=m {
                for i in 1..=n {
                    named.push(vec![u(1, j), u(2, j), v(i, j), w(i, j)]);
                }
            }
        }
        FamilySpec::Antiprism { l, m, n } => {
            for k in 1..=l {
                for i in 1..=m {
                    for j in 1..n {
                        named.push(vec![p(i, j, k, m), p(i + 1, j, k, m), p(i, j + 1, k, m)]);
                        named.push(vec![p(i, j + 1, k, m), p(i + 1, j + 1, k, m), p(i + 1, j, k, m)]);
                    }
                }
            }
        }
    }

    let cycles: BTreeSet<Cycle> = named.iter().map(|n| named_cycle(g, n)).collect::<Result<_>>()?;
    Ok(cycles.into_iter().collect())
}

/// Options for [`enumerate_cycles_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Count 4-cycles whose vertices also span a chord. On by default.
    pub include_chorded: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { include_chorded: true }
    }
}

/// All cycles of the given length (3 or 4), canonical and sorted.
pub fn enumerate_cycles(g: &Graph, length: usize) -> Result<Vec<Cycle>> {
    enumerate_cycles_with(g, length, EnumerateOptions::default())
}

pub fn enumerate_cycles_with(g: &Graph, length: usize, opts: EnumerateOptions) -> Result<Vec<Cycle>> {
    let mut out = match length {
        3 => triangles(g),
        4 => quadrilaterals(g, opts.include_chorded),
        other => return Err(Error::UnsupportedLength(other)),
    };
    out.sort_unstable();
    Ok(out)
}

fn sorted_intersection<'a>(x: &'a [VertexId], y: &'a [VertexId]) -> impl Iterator<Item = VertexId> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let hit = x[i];
                    i += 1;
                    j += 1;
                    return Some(hit);
                }
            }
        }
        None
    })
}

fn triangles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for &(x, y) in g.edges() {
        for z in sorted_intersection(g.neighbors(x), g.neighbors(y)) {
            if z > y {
                out.push(Cycle { vertices: vec![x, y, z] });
            }
        }
    }
    out
}

// Each 4-cycle is produced once: from its least vertex `x` and the vertex
// `y` opposite to it, with the two common neighbours `p < q` both above `x`.
fn quadrilaterals(g: &Graph, include_chorded: bool) -> Vec<Cycle> {
    let mut out = Vec::new();
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            if !include_chorded && g.has_edge(x, y) {
                continue;
            }
            let common: Vec<VertexId> =
                sorted_intersection(g.neighbors(x), g.neighbors(y)).filter(|&z| z > x).collect();
            for (i, &p) in common.iter().enumerate() {
                for &q in &common[i + 1..] {
                    if !include_chorded && g.has_edge(p, q) {
                        continue;
                    }
                    out.push(Cycle { vertices: vec![x, p, y, q] });
                }
            }
        }
    }
    out
}

/// Outcome of [`check_covering`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pub covered: bool,
    /// Indices into `g.edges()` that no cycle uses.
    pub uncovered: Vec<usize>,
}

/// Whether the union of the cycles' edges is the whole edge set.
pub fn check_covering(g: &Graph, cycles: &[Cycle]) -> Result<Covering> {
    let mut hit = vec![false; g.size()];
    for cycle in cycles {
        for e in cycle.edge_indices(g)? {
            hit[e] = true;
        }
    }
    let uncovered: Vec<usize> = (0..g.size()).filter(|&e| !hit[e]).collect();
    Ok(Covering { covered: uncovered.is_empty(), uncovered })
}
