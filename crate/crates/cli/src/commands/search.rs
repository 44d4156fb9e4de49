use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use supermagic_core::{build_graph_structural, find_labelings, verify as verify_labeling, Graph, Mode, SearchConfig};

use super::{parse_spec, usage, CmdResult, Failure};
use crate::certificate::CUSTOM_FAMILY;
use crate::{Certificate, SearchArgs, Status, NODE_BUDGET_ENV};

fn read_edge_list(path: &Path) -> CmdResult<Graph> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, y] = fields[..] else {
            return Err(usage(format!("{}:{}: expected `u v`", path.display(), no + 1)));
        };
        edges.push((x.to_string(), y.to_string()));
    }
    Graph::from_edges(Vec::<String>::new(), edges).map_err(usage)
}

fn budget(args: &SearchArgs) -> CmdResult<u64> {
    if let Some(b) = args.budget {
        return Ok(b);
    }
    match std::env::var(NODE_BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|e| usage(format!("{NODE_BUDGET_ENV}={v}: {e}"))),
        Err(_) => Ok(u64::MAX),
    }
}

pub fn search(args: &SearchArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let (g, family, params, default_len) = if args.k3 {
        (Graph::complete(3), CUSTOM_FAMILY.to_string(), BTreeMap::new(), Some(3))
    } else if let Some(name) = &args.family {
        let spec = parse_spec(name, &args.params.given())?;
        let g = build_graph_structural(&spec).map_err(usage)?;
        let params = spec.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        (g, spec.family().name().to_string(), params, Some(spec.cycle_length()))
    } else if let Some(path) = &args.edge_list {
        (read_edge_list(path)?, CUSTOM_FAMILY.to_string(), BTreeMap::new(), None)
    } else {
        return Err(usage("one of --k3, --family or --edge-list is required"));
    };
    let length = args.cycle.or(default_len).ok_or_else(|| usage("--cycle is required for an edge list"))?;

    let cfg = SearchConfig {
        limit: args.limit.unwrap_or(usize::MAX),
        node_budget: budget(args)?,
        target_constant: args.target,
        seed: args.seed,
        relax_super: args.relax_super,
        break_symmetry: args.break_symmetry,
        ..SearchConfig::new(length)
    };
    let outcome = find_labelings(&g, &cfg).map_err(usage)?;

    let constants: Vec<String> = outcome.constants_seen.iter().map(u64::to_string).collect();
    let _ = writeln!(out, "solutions: {}", outcome.labelings.len());
    let _ = writeln!(
        out,
        "constants_seen: {}",
        if constants.is_empty() { "none".to_string() } else { constants.join(", ") }
    );
    let _ = writeln!(out, "exhausted: {}", outcome.exhausted);
    let _ = writeln!(out, "nodes: {}", outcome.nodes_used);

    if let Some(dir) = &args.out {
        let io = |e: std::io::Error| Failure {
            status: Status::Usage,
            message: format!("cannot write to {}: {e}", dir.display()),
        };
        fs::create_dir_all(dir).map_err(io)?;
        for (i, lab) in outcome.labelings.iter().enumerate() {
            let mut cert = Certificate::new(&family, params.clone(), length, Mode::Strict, lab);
            let report = verify_labeling(&g, lab, length, Mode::Strict, None).map_err(usage)?;
            cert.magic_constant = report.magic_constant;
            cert.valid = report.valid;
            fs::write(dir.join(format!("solution-{:04}.json", i + 1)), cert.to_json()).map_err(io)?;
        }
    }
    Ok(Status::Valid)
}
