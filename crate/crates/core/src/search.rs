//! Exhaustive backtracking search for `C_k`-supermagic labelings of small
//! graphs.
//!
//! Elements are indexed vertices first (`0..v`), then edges (`v..v+e`). The
//! branching order is fixed before the search: descending number of cycles
//! through the element, ties broken by a seeded shuffle. Labels are tried in
//! ascending order. After every assignment each unfinished cycle must still
//! be completable to the magic constant using the smallest and largest unused
//! labels of the right domain; before the constant is known, the completion
//! intervals of all cycles must overlap.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constants::predicted_constant;
use crate::cycles::{check_covering, covering_cycles_in, enumerate_cycles, Cycle};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{build_graph, Graph};
use crate::labeling::{Label, TotalLabeling};
use crate::verify::{verify, verify_indexed, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub cycle_length: usize,
    /// Stop after this many labelings.
    pub limit: usize,
    /// Stop after this many label assignments.
    pub node_budget: u64,
    pub target_constant: Option<u64>,
    pub seed: u64,
    /// Let vertices and edges share the domain `1..=v+e` (plain `C_k`-magic).
    pub relax_super: bool,
    /// Keep only one labeling of each pair related by the duality
    /// `λ(x) -> v+1-λ(x)` on vertices, `λ(xy) -> 2v+e+1-λ(xy)` on edges.
    /// Ignored when `target_constant` is set.
    pub break_symmetry: bool,
    /// Labels fixed before the search starts; may be partial.
    pub pinned: TotalLabeling,
}

impl SearchConfig {
    pub fn new(cycle_length: usize) -> Self {
        SearchConfig {
            cycle_length,
            limit: usize::MAX,
            node_budget: u64::MAX,
            target_constant: None,
            seed: 0,
            relax_super: false,
            break_symmetry: false,
            pinned: TotalLabeling::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub labelings: Vec<TotalLabeling>,
    pub constants_seen: BTreeSet<u64>,
    /// True iff the whole search space was explored.
    pub exhausted: bool,
    pub nodes_used: u64,
}

/// Finds labelings of `g` under `cfg`. Every returned labeling has been
/// re-verified in strict mode.
pub fn find_labelings(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.limit == 0 || cfg.node_budget == 0 {
        return Err(Error::InvalidArgument("limit and node budget must be at least 1".into()));
    }
    let cycles = enumerate_cycles(g, cfg.cycle_length)?;
    let covering = check_covering(g, &cycles)?;
    if let Some(&e) = covering.uncovered.first() {
        let (x, y) = g.edge_names(e);
        return Err(Error::NoCovering(format!("{x} {y}")));
    }
    if g.size() == 0 {
        return Err(Error::NoCovering("(graph has no edges)".into()));
    }

    let mut s = Search::new(g, &cycles, cfg)?;
    s.run(0);
    let exhausted = !s.stopped;
    Ok(SearchOutcome { labelings: s.found, constants_seen: s.constants, exhausted, nodes_used: s.nodes })
}

/// Whether `labeler` produces, for `spec`, a labeling that passes
/// covering-mode verification with the closed-form constant.
pub fn fit_check<F>(spec: &FamilySpec, labeler: F) -> Result<bool>
where
    F: FnOnce(&FamilySpec) -> Result<TotalLabeling>,
{
    let g = build_graph(spec)?;
    let cycles = covering_cycles_in(spec, &g)?;
    let lab = labeler(spec)?;
    let report = match verify(&g, &lab, spec.cycle_length(), Mode::Covering, Some(&cycles)) {
        Ok(r) => r,
        Err(Error::DomainMismatch(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let expected = match predicted_constant(spec) {
        Ok(c) => c,
        Err(Error::Indivisible { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(report.valid && report.magic_constant == Some(expected))
}

struct Search<'a> {
    g: &'a Graph,
    cfg: &'a SearchConfig,
    v: usize,
    total: usize,
    /// Cycles through each element.
    elem_cycles: Vec<Vec<usize>>,
    order: Vec<usize>,
    labels: Vec<Label>,
    used: Vec<bool>,
    sum: Vec<u64>,
    free_vertices: Vec<usize>,
    free_edges: Vec<usize>,
    constant: Option<u64>,
    /// Element whose label is restricted by symmetry breaking.
    sym_elem: Option<usize>,
    nodes: u64,
    stopped: bool,
    found: Vec<TotalLabeling>,
    constants: BTreeSet<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, cycles: &[Cycle], cfg: &'a SearchConfig) -> Result<Self> {
        let v = g.order();
        let total = v + g.size();
        let mut cycle_elems = Vec::with_capacity(cycles.len());
        let mut elem_cycles = vec![Vec::new(); total];
        for (ci, cycle) in cycles.iter().enumerate() {
            let mut elems: Vec<usize> = cycle.vertices().to_vec();
            elems.extend(cycle.edge_indices(g)?.into_iter().map(|e| v + e));
            for &x in &elems {
                elem_cycles[x].push(ci);
            }
            cycle_elems.push(elems);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let keys: Vec<u64> = (0..total).map(|_| rng.gen()).collect();
        let mut order: Vec<usize> = (0..total).collect();
        order.sort_by(|&a, &b| {
            elem_cycles[b].len().cmp(&elem_cycles[a].len()).then(keys[a].cmp(&keys[b])).then(a.cmp(&b))
        });

        let mut s = Search {
            g,
            cfg,
            v,
            total,
            free_vertices: cycle_elems.iter().map(|c| c.iter().filter(|&&x| x < v).count()).collect(),
            free_edges: cycle_elems.iter().map(|c| c.iter().filter(|&&x| x >= v).count()).collect(),
            sum: vec![0; cycle_elems.len()],
            elem_cycles,
            order,
            labels: vec![0; total],
            used: vec![false; total + 1],
            constant: cfg.target_constant,
            sym_elem: None,
            nodes: 0,
            stopped: false,
            found: Vec::new(),
            constants: BTreeSet::new(),
        };
        s.apply_pins()?;
        if cfg.break_symmetry && cfg.target_constant.is_none() && !cfg.relax_super && s.pinned_count() == 0 {
            s.sym_elem = s.order.first().copied();
        }
        Ok(s)
    }

    fn pinned_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l != 0).count()
    }

    fn apply_pins(&mut self) -> Result<()> {
        let g = self.g;
        let mut pins = Vec::new();
        for (name, l) in self.cfg.pinned.vertex_labels() {
            let x =
                g.vertex_id(name).ok_or_else(|| Error::DomainMismatch(format!("pinned vertex {name} not in graph")))?;
            pins.push((x, l));
        }
        for (a, b, l) in self.cfg.pinned.edge_labels() {
            let e = g
                .vertex_id(a)
                .zip(g.vertex_id(b))
                .and_then(|(x, y)| g.edge_index(x, y))
                .ok_or_else(|| Error::DomainMismatch(format!("pinned edge {a} {b} not in graph")))?;
            pins.push((self.v + e, l));
        }
        for (x, l) in pins {
            let (lo, hi) = self.domain(x);
            if l < lo || l > hi || self.used[l as usize] {
                return Err(Error::InvalidArgument(format!("pinned label {l} outside its domain or repeated")));
            }
            if !self.assign(x, l) {
                return Err(Error::InvalidArgument("pinned labels admit no completion".into()));
            }
        }
        self.order.retain(|&x| self.labels[x] == 0);
        Ok(())
    }

    fn domain(&self, x: usize) -> (Label, Label) {
        let (v, total) = (self.v as Label, self.total as Label);
        if self.cfg.relax_super {
            (1, total)
        } else if x < self.v {
            (1, v)
        } else {
            (v + 1, total)
        }
    }

    fn run(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.emit();
            return;
        }
        let x = self.order[depth];
        let (lo, mut hi) = self.domain(x);
        if self.sym_elem == Some(x) {
            hi = lo + (hi - lo) / 2;
        }
        for l in lo..=hi {
            if self.used[l as usize] {
                continue;
            }
            if self.nodes >= self.cfg.node_budget {
                self.stopped = true;
                return;
            }
            self.nodes += 1;
            let saved = self.constant;
            if self.assign(x, l) {
                self.run(depth + 1);
            }
            self.unassign(x, l);
            self.constant = saved;
            if self.stopped {
                return;
            }
        }
    }

    /// Labels `x` and reports whether the partial labeling is still feasible.
    /// The caller undoes the assignment with [`Self::unassign`] either way.
    fn assign(&mut self, x: usize, l: Label) -> bool {
        self.labels[x] = l;
        self.used[l as usize] = true;
        let mut ok = true;
        for i in 0..self.elem_cycles[x].len() {
            let ci = self.elem_cycles[x][i];
            self.sum[ci] += u64::from(l);
            if x < self.v {
                self.free_vertices[ci] -= 1;
            } else {
                self.free_edges[ci] -= 1;
            }
            if self.free_vertices[ci] + self.free_edges[ci] == 0 {
                match self.constant {
                    Some(c) if c != self.sum[ci] => ok = false,
                    Some(_) => {}
                    None => self.constant = Some(self.sum[ci]),
                }
            }
        }
        ok && self.feasible()
    }

    fn unassign(&mut self, x: usize, l: Label) {
        self.labels[x] = 0;
        self.used[l as usize] = false;
        for &ci in &self.elem_cycles[x] {
            self.sum[ci] -= u64::from(l);
            if x < self.v {
                self.free_vertices[ci] += 1;
            } else {
                self.free_edges[ci] += 1;
            }
        }
    }

    /// Prefix sums of the unused labels in `lo..=hi`, ascending and descending.
    fn pool(&self, lo: usize, hi: usize) -> (Vec<u64>, Vec<u64>) {
        let free: Vec<u64> = (lo..=hi).filter(|&l| !self.used[l]).map(|l| l as u64).collect();
        let mut low = vec![0];
        let mut high = vec![0];
        for (i, &l) in free.iter().enumerate() {
            low.push(low[i] + l);
            high.push(high[i] + free[free.len() - 1 - i]);
        }
        (low, high)
    }

    fn feasible(&self) -> bool {
        if self.cfg.relax_super {
            let (low, high) = self.pool(1, self.total);
            self.bounds_ok(&low, &high, None)
        } else {
            let (vl, vh) = self.pool(1, self.v);
            let (el, eh) = self.pool(self.v + 1, self.total);
            self.bounds_ok(&vl, &vh, Some((&el, &eh)))
        }
    }

    /// With `edges = None` vertices and edges draw from one pool.
    fn bounds_ok(&self, vl: &[u64], vh: &[u64], edges: Option<(&[u64], &[u64])>) -> bool {
        let mut lo_all = 0u64;
        let mut hi_all = u64::MAX;
        for ci in 0..self.sum.len() {
            let (fv, fe) = (self.free_vertices[ci], self.free_edges[ci]);
            if fv + fe == 0 {
                continue;
            }
            let (min, max) = match edges {
                Some((el, eh)) => {
                    if fv >= vl.len() || fe >= el.len() {
                        return false;
                    }
                    (vl[fv] + el[fe], vh[fv] + eh[fe])
                }
                None => {
                    if fv + fe >= vl.len() {
                        return false;
                    }
                    (vl[fv + fe], vh[fv + fe])
                }
            };
            let (lo, hi) = (self.sum[ci] + min, self.sum[ci] + max);
            match self.constant {
                Some(c) if c < lo || c > hi => return false,
                Some(_) => {}
                None => {
                    lo_all = lo_all.max(lo);
                    hi_all = hi_all.min(hi);
                    if lo_all > hi_all {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn emit(&mut self) {
        let (vertex, edge) = self.labels.split_at(self.v);
        let report = verify_indexed(self.g, vertex, edge, self.cfg.cycle_length, Mode::Strict, None)
            .expect("search state matches its own graph");
        let sound = if self.cfg.relax_super {
            report.bijective && report.covering_ok && report.magic_constant.is_some()
        } else {
            report.valid
        };
        assert!(sound, "search emitted a labeling that fails verification");
        let c = report.magic_constant.expect("valid labeling has a constant");
        self.constants.insert(c);
        self.found.push(TotalLabeling::from_indexed(self.g, vertex, edge));
        if self.found.len() >= self.cfg.limit {
            self.stopped = true;
        }
    }
}
