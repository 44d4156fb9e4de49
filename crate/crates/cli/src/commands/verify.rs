use std::fs;
use std::io::Write;

use supermagic_core::{
    build_graph_structural, covering_cycles_in, enumerate_cycles, verify as verify_labeling, Cycle, Graph,
    VerificationReport,
};

use super::{parse_spec, usage, CmdResult};
use crate::certificate::CUSTOM_FAMILY;
use crate::{Certificate, Status, VerifyArgs};

/// The graph a certificate refers to and its designated cycles. Custom
/// graphs are read off the labels and designate every cycle.
pub fn rebuild(cert: &Certificate) -> CmdResult<(Graph, Vec<Cycle>)> {
    if cert.family == CUSTOM_FAMILY {
        let g = cert.implied_graph().map_err(usage)?;
        let cycles = enumerate_cycles(&g, cert.cycle_length).map_err(usage)?;
        return Ok((g, cycles));
    }
    let params: Vec<(&str, u32)> = cert.params.iter().map(|(k, &v)| (k.as_str(), v)).collect();
    let spec = parse_spec(&cert.family, &params)?;
    if spec.cycle_length() != cert.cycle_length {
        return Err(usage(format!(
            "{spec} is labeled over C{}, certificate says C{}",
            spec.cycle_length(),
            cert.cycle_length
        )));
    }
    let g = build_graph_structural(&spec).map_err(usage)?;
    let cycles = covering_cycles_in(&spec, &g).map_err(usage)?;
    Ok((g, cycles))
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let path = args.certificate.display();
    let text = fs::read_to_string(&args.certificate).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    let cert = Certificate::parse(&text).map_err(|e| usage(format!("{path}: {e}")))?;
    let (g, cycles) = rebuild(&cert)?;
    let report =
        verify_labeling(&g, &cert.labeling(), cert.cycle_length, args.mode.into(), Some(&cycles)).map_err(usage)?;
    // a certificate that states a different constant is not confirmed
    let claim_holds = match (cert.magic_constant, report.magic_constant) {
        (Some(claimed), Some(found)) => claimed == found,
        _ => true,
    };

    if args.json {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        let _ = writeln!(out, "{json}");
    } else {
        print_report(out, &report, cycles.len());
        if !claim_holds {
            let _ = writeln!(out, "certificate claims c = {}", cert.magic_constant.unwrap_or_default());
        }
    }
    Ok(if report.valid && claim_holds { Status::Valid } else { Status::Invalid })
}

fn print_report(out: &mut dyn Write, r: &VerificationReport, designated: usize) {
    let _ = writeln!(out, "mode: {}", r.mode);
    let _ = writeln!(out, "cycles: {} of length {} ({designated} designated)", r.weights.len(), r.cycle_length);
    let _ = writeln!(out, "bijective: {}", r.bijective);
    if !r.duplicate_labels.is_empty() {
        let _ = writeln!(out, "duplicate_labels: {:?}", r.duplicate_labels);
    }
    if !r.missing_labels.is_empty() {
        let _ = writeln!(out, "missing_labels: {:?}", r.missing_labels);
    }
    let _ = writeln!(out, "super: {}", r.super_);
    let _ = writeln!(out, "covering: {}", r.covering_ok);
    if !r.uncovered.is_empty() {
        let _ = writeln!(out, "uncovered: {}", r.uncovered.join(", "));
    }
    match r.magic_constant {
        Some(c) => {
            let _ = writeln!(out, "c = {c}");
        }
        None => {
            let _ = writeln!(out, "c = none");
        }
    }
    if let Some(v) = &r.first_violation {
        let _ = writeln!(out, "first_violation: {v}");
    }
    if let Some(note) = &r.designated_only_claim {
        let _ = writeln!(out, "designated_only_claim: {note}");
    }
    let _ = writeln!(out, "valid: {}", r.valid);
}
