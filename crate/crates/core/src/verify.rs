//! Independent verification of `C_k`-supermagic labelings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cycles::{check_covering, enumerate_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{Label, TotalLabeling};

/// Which cycles must carry equal weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// The designated cycles passed in by the caller.
    Covering,
    /// Every cycle of the requested length in the graph.
    Strict,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Covering => "covering",
            Mode::Strict => "strict",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "covering" => Ok(Mode::Covering),
            "strict" => Ok(Mode::Strict),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}` (covering|strict)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWeight {
    pub cycle: Vec<String>,
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub cycle_length: usize,
    pub bijective: bool,
    /// Labels in `1..=v+e` used more than once, ascending.
    pub duplicate_labels: Vec<Label>,
    /// Labels in `1..=v+e` never used, ascending.
    pub missing_labels: Vec<Label>,
    #[serde(rename = "super")]
    pub super_: bool,
    pub covering_ok: bool,
    /// Uncovered edges as `x y`.
    pub uncovered: Vec<String>,
    pub weights: Vec<CycleWeight>,
    pub magic_constant: Option<u64>,
    /// The lexicographically least cycle whose weight differs from the most
    /// common one.
    pub first_violation: Option<String>,
    pub designated_only_claim: Option<String>,
    pub valid: bool,
}

/// Verifies that `lab` is a `C_length`-supermagic labeling of `g`.
///
/// In covering mode the weights are taken over `designated`, which is
/// required. Strict mode enumerates every cycle of the given length; if
/// `designated` is also supplied and strictly fewer cycles than that, the
/// report carries a `designated_only_claim` note.
pub fn verify(
    g: &Graph,
    lab: &TotalLabeling,
    length: usize,
    mode: Mode,
    designated: Option<&[Cycle]>,
) -> Result<VerificationReport> {
    if length != 3 && length != 4 {
        return Err(Error::UnsupportedLength(length));
    }
    let (vertex, edge) = lab.indexed(g)?;
    verify_indexed(g, &vertex, &edge, length, mode, designated)
}

/// [`verify`] on labels already resolved to `g`'s vertex and edge indices.
pub fn verify_indexed(
    g: &Graph,
    vertex: &[Label],
    edge: &[Label],
    length: usize,
    mode: Mode,
    designated: Option<&[Cycle]>,
) -> Result<VerificationReport> {
    if vertex.len() != g.order() || edge.len() != g.size() {
        return Err(Error::DomainMismatch("label vectors do not match the graph".into()));
    }
    let total = g.order() + g.size();

    let mut count = vec![0usize; total + 1];
    let mut out_of_range = false;
    for &l in vertex.iter().chain(edge) {
        match count.get_mut(l as usize) {
            Some(slot) if l > 0 => *slot += 1,
            _ => out_of_range = true,
        }
    }
    let duplicate_labels: Vec<Label> = (1..=total).filter(|&l| count[l] > 1).map(|l| l as Label).collect();
    let missing_labels: Vec<Label> = (1..=total).filter(|&l| count[l] == 0).map(|l| l as Label).collect();
    let bijective = !out_of_range && duplicate_labels.is_empty() && missing_labels.is_empty();

    let mut sorted_vertex = vertex.to_vec();
    sorted_vertex.sort_unstable();
    let super_ = sorted_vertex.iter().enumerate().all(|(i, &l)| l as usize == i + 1);

    let cycles: Vec<Cycle> = match mode {
        Mode::Covering => {
            let designated =
                designated.ok_or_else(|| Error::InvalidArgument("covering mode needs the designated cycles".into()))?;
            if let Some(bad) = designated.iter().find(|c| c.len() != length) {
                return Err(Error::InvalidArgument(format!(
                    "designated cycle {} has length {}, expected {length}",
                    bad.display(g),
                    bad.len()
                )));
            }
            let mut cycles = designated.to_vec();
            cycles.sort_unstable();
            cycles.dedup();
            cycles
        }
        Mode::Strict => enumerate_cycles(g, length)?,
    };

    let covering = check_covering(g, &cycles)?;
    let uncovered = covering
        .uncovered
        .iter()
        .map(|&e| {
            let (x, y) = g.edge_names(e);
            format!("{x} {y}")
        })
        .collect();

    let mut weights = Vec::with_capacity(cycles.len());
    let mut raw = Vec::with_capacity(cycles.len());
    for cycle in &cycles {
        let mut w: u64 = 0;
        for &x in cycle.vertices() {
            w = w.checked_add(u64::from(vertex[x])).ok_or(Error::Overflow)?;
        }
        for e in cycle.edge_indices(g)? {
            w = w.checked_add(u64::from(edge[e])).ok_or(Error::Overflow)?;
        }
        raw.push(w);
        weights.push(CycleWeight { cycle: cycle.names(g).into_iter().map(str::to_string).collect(), weight: w });
    }

    let magic_constant = match raw.first() {
        Some(&w0) if raw.iter().all(|&w| w == w0) => Some(w0),
        _ => None,
    };
    let first_violation = if magic_constant.is_none() && !raw.is_empty() {
        let modal = modal_weight(&raw);
        cycles
            .iter()
            .zip(&raw)
            .find(|(_, &w)| w != modal)
            .map(|(c, &w)| format!("cycle {} has weight {w}, most common weight is {modal}", c.display(g)))
    } else {
        None
    };

    let designated_only_claim = match (mode, designated) {
        (Mode::Strict, Some(d)) if cycles.len() > d.len() => Some(format!(
            "the graph has {} cycles of length {length} but the construction designates {}; \
             its equal-weight claim covers the designated cycles only",
            cycles.len(),
            d.len()
        )),
        _ => None,
    };

    let valid = bijective && super_ && covering.covered && magic_constant.is_some();
    Ok(VerificationReport {
        mode,
        cycle_length: length,
        bijective,
        duplicate_labels,
        missing_labels,
        super_,
        covering_ok: covering.covered,
        uncovered,
        weights,
        magic_constant,
        first_violation,
        designated_only_claim,
        valid,
    })
}

/// Most frequent weight, the smaller one on ties.
fn modal_weight(weights: &[u64]) -> u64 {
    let mut freq: BTreeMap<u64, usize> = BTreeMap::new();
    for &w in weights {
        *freq.entry(w).or_default() += 1;
    }
    let best = freq.values().copied().max().unwrap_or(0);
    freq.into_iter().find(|&(_, n)| n == best).map(|(w, _)| w).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::covering_cycles_in;
    use crate::family::FamilySpec;
    use crate::graph::build_graph;
    use crate::labelers::{label_ladders, label_wheels};

    fn k3_labeling(edges: [Label; 3]) -> (Graph, TotalLabeling) {
        let g = Graph::complete(3);
        let mut lab = TotalLabeling::new();
        for (i, name) in g.vertex_names().iter().enumerate() {
            lab.set_vertex(name, i as Label + 1);
        }
        for (e, &l) in edges.iter().enumerate() {
            let (x, y) = g.edge_names(e);
            lab.set_edge(x, y, l);
        }
        (g, lab)
    }

    #[test]
    fn triangle_is_always_magic() {
        for edges in [[4, 5, 6], [6, 5, 4], [5, 4, 6]] {
            let (g, lab) = k3_labeling(edges);
            let r = verify(&g, &lab, 3, Mode::Strict, None).unwrap();
            assert!(r.valid);
            assert_eq!(r.magic_constant, Some(21));
        }
    }

    #[test]
    fn ladders_valid_and_swap_breaks_two_squares() {
        let spec = FamilySpec::Ladders { m: 2, n: 2 };
        let g = build_graph(&spec).unwrap();
        let cycles = covering_cycles_in(&spec, &g).unwrap();
        let lab = label_ladders(2, 2).unwrap();
        let r = verify(&g, &lab, 4, Mode::Covering, Some(&cycles)).unwrap();
        assert!(r.valid);
        assert_eq!(r.magic_constant, Some(68));

        let mut swapped = lab.clone();
        swapped.set_vertex("u[1][1]", 2);
        swapped.set_vertex("u[1][2]", 1);
        let r = verify(&g, &swapped, 4, Mode::Covering, Some(&cycles)).unwrap();
        assert!(!r.valid && r.bijective);
        let ws: Vec<u64> = r.weights.iter().map(|w| w.weight).collect();
        assert_eq!(ws, vec![69, 67]);
        assert_eq!(
            r.first_violation.as_deref(),
            Some("cycle (u[1][1] u[2][1] v[2][1] v[1][1]) has weight 69, most common weight is 67")
        );
    }

    #[test]
    fn covering_mode_requires_cycles() {
        let (g, lab) = k3_labeling([4, 5, 6]);
        assert!(verify(&g, &lab, 3, Mode::Covering, None).is_err());
        assert!(matches!(verify(&g, &lab, 5, Mode::Strict, None), Err(Error::UnsupportedLength(5))));
    }

    #[test]
    fn domain_mismatch() {
        let (g, mut lab) = k3_labeling([4, 5, 6]);
        lab.set_vertex("ghost", 7);
        assert!(matches!(verify(&g, &lab, 3, Mode::Strict, None), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn duplicate_and_missing_labels() {
        let (g, lab) = k3_labeling([4, 4, 6]);
        let r = verify(&g, &lab, 3, Mode::Strict, None).unwrap();
        assert!(!r.bijective && !r.valid);
        assert_eq!(r.duplicate_labels, vec![4]);
        assert_eq!(r.missing_labels, vec![5]);
    }

    #[test]
    fn w3_rim_triangle_breaks_strict_mode() {
        let spec = FamilySpec::Wheels { m: 2, n: 3 };
        let g = build_graph(&spec).unwrap();
        let cycles = covering_cycles_in(&spec, &g).unwrap();
        let lab = label_wheels(2, 3).unwrap();
        assert!(verify(&g, &lab, 3, Mode::Covering, Some(&cycles)).unwrap().valid);
        let r = verify(&g, &lab, 3, Mode::Strict, Some(&cycles)).unwrap();
        assert!(!r.valid);
        assert!(r.designated_only_claim.is_some());
        // rim of copy 1: vertices 3, 5, 7 and edges 20, 16, 18
        let rim = r
            .weights
            .iter()
            .find(|w| w.cycle.iter().all(|x| x.starts_with('v')) && w.cycle[0].ends_with("[1]"))
            .unwrap();
        assert_eq!(rim.weight, 3 + 5 + 7 + 20 + 16 + 18);
    }
}
