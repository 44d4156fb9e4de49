use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use supermagic_core::{closed_form_constant, Family, FamilySpec, Ratio};

use super::{certify, usage, CmdResult};
use crate::ranges::parse_range;
use crate::{Status, SweepArgs, TableFormat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub params: BTreeMap<String, u32>,
    pub v: u64,
    pub e: u64,
    /// Closed-form constant, `a/b` when it is not an integer.
    pub c_predicted: String,
    /// Constant of the constructive labeling, if it verified.
    pub c_verified: Option<u64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn row(spec: &FamilySpec) -> CmdResult<SweepRow> {
    let predicted: Ratio = closed_form_constant(spec).map_err(usage)?;
    let c_verified = match certify(spec) {
        Ok((cert, _)) if cert.valid => cert.magic_constant,
        _ => None,
    };
    Ok(SweepRow {
        params: spec.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        v: spec.order(),
        e: spec.size(),
        c_predicted: predicted.to_string(),
        c_verified,
        matches: c_verified.is_some_and(|c| predicted.integer() == Some(c as i64)),
    })
}

/// Cartesian product of the ranges in parameter order, last parameter
/// varying fastest.
fn grid(family: Family, ranges: &[Vec<u32>]) -> CmdResult<Vec<FamilySpec>> {
    let mut points: Vec<Vec<u32>> = vec![Vec::new()];
    for r in ranges {
        points = points
            .into_iter()
            .flat_map(|p| {
                r.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let names = family.param_names();
    points
        .into_iter()
        .map(|p| {
            let spec = FamilySpec::from_params(family, names.iter().copied().zip(p)).map_err(usage)?;
            spec.validate().map_err(|e| usage(format!("{spec}: {e}")))?;
            Ok(spec)
        })
        .collect()
}

pub fn sweep_rows(family: Family, ranges: &[Vec<u32>]) -> CmdResult<Vec<SweepRow>> {
    grid(family, ranges)?.iter().map(row).collect()
}

pub fn sweep(args: &SweepArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let family: Family = args.family.parse().map_err(usage)?;
    let given = [("l", &args.l), ("m", &args.m), ("n", &args.n), ("s", &args.s), ("k", &args.k)];
    if let Some((name, _)) = given.iter().find(|(name, v)| v.is_some() && !family.param_names().contains(name)) {
        return Err(usage(format!("{family} has no parameter `{name}`")));
    }
    let ranges = family
        .param_names()
        .iter()
        .map(|name| {
            let (_, text) = given.iter().find(|(n, _)| n == name).expect("known parameter");
            let text = text.as_deref().ok_or_else(|| usage(format!("missing --{name}")))?;
            parse_range(text).map_err(usage)
        })
        .collect::<CmdResult<Vec<_>>>()?;
    let rows = sweep_rows(family, &ranges)?;

    match args.format {
        TableFormat::Json => {
            let json = serde_json::to_string_pretty(&rows).expect("rows serialize");
            let _ = writeln!(out, "{json}");
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<&str> = family.param_names().to_vec();
            header.extend(["v", "e", "c_predicted", "c_verified", "match"]);
            let csv_err = |e: csv::Error| usage(format!("csv: {e}"));
            w.write_record(&header).map_err(csv_err)?;
            for r in &rows {
                let mut rec: Vec<String> = family.param_names().iter().map(|p| r.params[*p].to_string()).collect();
                rec.extend([
                    r.v.to_string(),
                    r.e.to_string(),
                    r.c_predicted.clone(),
                    r.c_verified.map(|c| c.to_string()).unwrap_or_default(),
                    r.matches.to_string(),
                ]);
                w.write_record(&rec).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| usage(format!("csv: {e}")))?;
            let _ = out.write_all(&bytes);
        }
    }
    Ok(if rows.iter().all(|r| r.matches) { Status::Valid } else { Status::Invalid })
}
