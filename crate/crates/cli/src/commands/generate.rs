use std::io::Write;

use supermagic_core::{
    build_graph, closed_form_constant, construct, covering_cycles_in, verify as verify_labeling, FamilySpec, Mode,
    VerificationReport,
};

use super::{emit, parse_spec, regression, usage, CmdResult};
use crate::{Certificate, GenerateArgs, Status};

/// Builds, labels and verifies `spec` in covering mode. Errors here mean the
/// construction itself is broken.
pub fn certify(spec: &FamilySpec) -> CmdResult<(Certificate, VerificationReport)> {
    let g = build_graph(spec).map_err(usage)?;
    let cycles = covering_cycles_in(spec, &g).map_err(regression)?;
    let built = construct(spec).map_err(|e| regression(format!("{spec}: {e}")))?;
    let report = verify_labeling(&g, &built.labeling, spec.cycle_length(), Mode::Covering, Some(&cycles))
        .map_err(|e| regression(format!("{spec}: {e}")))?;
    let mut cert = Certificate::for_spec(spec, Mode::Covering, &built.labeling);
    cert.magic_constant = report.magic_constant;
    cert.valid = report.valid;
    cert.typo_corrections = built.corrections.iter().map(|k| k.to_string()).collect();
    Ok((cert, report))
}

pub fn generate(args: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let spec = parse_spec(&args.family, &args.params.given())?;
    spec.validate().map_err(usage)?;
    let (cert, report) = certify(&spec)?;
    emit(args.out.as_deref(), &cert.to_json(), out)?;

    // the certificate owns stdout when no path is given
    let log: &mut dyn Write = if args.out.is_some() { out } else { err };
    if !report.valid {
        let _ = writeln!(log, "{spec}: construction failed verification");
        if let Some(v) = &report.first_violation {
            let _ = writeln!(log, "first_violation: {v}");
        }
        if !report.uncovered.is_empty() {
            let _ = writeln!(log, "uncovered edges: {}", report.uncovered.join(", "));
        }
        return Ok(Status::Regression);
    }
    let c = report.magic_constant.expect("valid reports carry a constant");
    let _ = writeln!(log, "c = {c}");
    if let Ok(printed) = closed_form_constant(&spec) {
        if printed.integer() != Some(c as i64) {
            let _ = writeln!(log, "warning: closed form gives {printed}, construction attains {c}");
        }
    }
    Ok(Status::Valid)
}
