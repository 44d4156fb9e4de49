use std::fmt::Write as _;
use std::io::Write;

use supermagic_core::{build_graph, build_graph_structural, construct, FamilySpec, Graph, TotalLabeling};

use super::{emit, parse_spec, regression, usage, CmdResult};
use crate::{ExportArgs, Status};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT for `g`: vertices in identifier order, then edges as `u -- v` with
/// `u < v`, sorted.
pub fn to_dot(name: &str, g: &Graph, labels: Option<&TotalLabeling>) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for x in g.vertex_names() {
        match labels.and_then(|l| l.vertex(x)) {
            Some(l) => writeln!(out, "  {} [label=\"{l}\"];", quote(x)),
            None => writeln!(out, "  {};", quote(x)),
        }
        .expect("writing to a String");
    }
    let mut edges: Vec<(&str, &str)> = (0..g.size())
        .map(|e| {
            let (x, y) = g.edge_names(e);
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    edges.sort_unstable();
    for (x, y) in edges {
        match labels.and_then(|l| l.edge(x, y)) {
            Some(l) => writeln!(out, "  {} -- {} [label=\"{l}\"];", quote(x), quote(y)),
            None => writeln!(out, "  {} -- {};", quote(x), quote(y)),
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

fn graph_name(spec: &FamilySpec) -> String {
    let mut name = spec.family().name().replace('-', "_");
    for (p, v) in spec.params() {
        let _ = write!(name, "_{p}{v}");
    }
    name
}

pub fn export(args: &ExportArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let spec = parse_spec(&args.family, &args.params.given())?;
    let (g, labeling) = if args.labels {
        let g = build_graph(&spec).map_err(usage)?;
        let built = construct(&spec).map_err(|e| regression(format!("{spec}: {e}")))?;
        (g, Some(built.labeling))
    } else {
        (build_graph_structural(&spec).map_err(usage)?, None)
    };
    emit(args.out.as_deref(), &to_dot(&graph_name(&spec), &g, labeling.as_ref()), out)?;
    Ok(Status::Valid)
}
