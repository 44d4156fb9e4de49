//! Certificates: a labeling plus enough context to re-verify it from the file
//! alone.
//!
//! The on-disk form is JSON with keys in sorted order, one vertex label or
//! one `[u, v, label]` edge triple per line, so golden files diff cleanly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;
use supermagic_core::{FamilySpec, Graph, Label, Mode, TotalLabeling};

/// Family name used for graphs that are not one of the generated families;
/// the graph is then read off the labeled elements.
pub const CUSTOM_FAMILY: &str = "custom";

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub cycle_length: usize,
    /// `(u, v, label)` with `u < v`, sorted.
    pub edge_labels: Vec<(String, String, Label)>,
    pub family: String,
    pub magic_constant: Option<u64>,
    pub mode: String,
    pub params: BTreeMap<String, u32>,
    pub typo_corrections: Vec<String>,
    pub valid: bool,
    pub version: String,
    pub vertex_labels: BTreeMap<String, Label>,
}

impl Certificate {
    pub fn new(
        family: &str,
        params: BTreeMap<String, u32>,
        cycle_length: usize,
        mode: Mode,
        labeling: &TotalLabeling,
    ) -> Self {
        Certificate {
            cycle_length,
            edge_labels: labeling.edge_labels().map(|(x, y, l)| (x.to_string(), y.to_string(), l)).collect(),
            family: family.to_string(),
            magic_constant: None,
            mode: mode.as_str().to_string(),
            params,
            typo_corrections: Vec::new(),
            valid: false,
            version: env!("CARGO_PKG_VERSION").to_string(),
            vertex_labels: labeling.vertex_labels().map(|(x, l)| (x.to_string(), l)).collect(),
        }
    }

    pub fn for_spec(spec: &FamilySpec, mode: Mode, labeling: &TotalLabeling) -> Self {
        let params = spec.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        Certificate::new(spec.family().name(), params, spec.cycle_length(), mode, labeling)
    }

    pub fn labeling(&self) -> TotalLabeling {
        let mut lab = TotalLabeling::new();
        for (x, &l) in &self.vertex_labels {
            lab.set_vertex(x, l);
        }
        for (x, y, l) in &self.edge_labels {
            lab.set_edge(x, y, *l);
        }
        lab
    }

    /// The graph spanned by the labeled vertices and edges.
    pub fn implied_graph(&self) -> supermagic_core::Result<Graph> {
        Graph::from_edges(
            self.vertex_labels.keys().cloned(),
            self.edge_labels.iter().map(|(x, y, _)| (x.clone(), y.clone())),
        )
    }

    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        let mut cert: Certificate = serde_json::from_str(text)?;
        cert.normalize();
        Ok(cert)
    }

    fn normalize(&mut self) {
        for (x, y, _) in &mut self.edge_labels {
            if *x > *y {
                std::mem::swap(x, y);
            }
        }
        self.edge_labels.sort();
    }

    pub fn to_json(&self) -> String {
        let mut cert = self.clone();
        cert.normalize();
        let q = |s: &str| serde_json::to_string(s).expect("strings always serialize");
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"cycle_length\": {},", cert.cycle_length);
        out.push_str("  \"edge_labels\": [");
        for (i, (x, y, l)) in cert.edge_labels.iter().enumerate() {
            let sep = if i + 1 < cert.edge_labels.len() { "," } else { "" };
            let _ = write!(out, "\n    [{}, {}, {l}]{sep}", q(x), q(y));
        }
        out.push_str(if cert.edge_labels.is_empty() { "],\n" } else { "\n  ],\n" });
        let _ = writeln!(out, "  \"family\": {},", q(&cert.family));
        match cert.magic_constant {
            Some(c) => {
                let _ = writeln!(out, "  \"magic_constant\": {c},");
            }
            None => out.push_str("  \"magic_constant\": null,\n"),
        }
        let _ = writeln!(out, "  \"mode\": {},", q(&cert.mode));
        let params: Vec<String> = cert.params.iter().map(|(k, v)| format!("{}: {v}", q(k))).collect();
        let _ = writeln!(out, "  \"params\": {{{}}},", params.join(", "));
        let typos: Vec<String> = cert.typo_corrections.iter().map(|t| q(t)).collect();
        let _ = writeln!(out, "  \"typo_corrections\": [{}],", typos.join(", "));
        let _ = writeln!(out, "  \"valid\": {},", cert.valid);
        let _ = writeln!(out, "  \"version\": {},", q(&cert.version));
        out.push_str("  \"vertex_labels\": {");
        for (i, (x, l)) in cert.vertex_labels.iter().enumerate() {
            let sep = if i + 1 < cert.vertex_labels.len() { "," } else { "" };
            let _ = write!(out, "\n    {}: {l}{sep}", q(x));
        }
        out.push_str(if cert.vertex_labels.is_empty() { "}\n" } else { "\n  }\n" });
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use supermagic_core::label_fans;

    fn sample() -> Certificate {
        let lab = label_fans(2, 3).unwrap();
        let mut cert = Certificate::for_spec(&FamilySpec::Fans { m: 2, n: 3 }, Mode::Covering, &lab);
        cert.magic_constant = Some(57);
        cert.valid = true;
        cert.typo_corrections = vec!["fans-even-vertex".into()];
        cert
    }

    #[test]
    fn round_trip() {
        let cert = sample();
        let text = cert.to_json();
        assert_eq!(Certificate::parse(&text).unwrap(), cert);
        assert_eq!(Certificate::parse(&text).unwrap().to_json(), text);
    }

    #[test]
    fn layout_is_line_oriented() {
        let text = sample().to_json();
        assert!(text.contains("\n    [\"c[1]\", \"v[1][1]\", 18],\n"));
        assert!(text.contains("\n    \"c[1]\": 8,\n"));
        assert!(text.contains("\"params\": {\"m\": 2, \"n\": 3},"));
        let keys: Vec<&str> =
            text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn empty_and_null_fields() {
        let cert = Certificate::new(CUSTOM_FAMILY, BTreeMap::new(), 3, Mode::Strict, &TotalLabeling::new());
        let text = cert.to_json();
        assert!(text.contains("\"magic_constant\": null"));
        assert_eq!(Certificate::parse(&text).unwrap(), cert);
    }

    #[test]
    fn rejects_unknown_keys() {
        let text = sample().to_json().replacen("{\n", "{\n  \"extra\": 1,\n", 1);
        assert!(Certificate::parse(&text).is_err());
    }

    #[test]
    fn edge_endpoints_are_normalized() {
        let text = sample().to_json().replace("[\"c[1]\", \"v[1][1]\", 18]", "[\"v[1][1]\", \"c[1]\", 18]");
        assert_eq!(Certificate::parse(&text).unwrap(), sample());
    }
}
