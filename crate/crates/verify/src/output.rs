//! JSON-lines and table renderings.

use std::io::{self, Write};

use serde_json::{json, Value};

use roman_core::classifier::ClassReport;
use roman_core::{RomanFunction, VertexSet};

use crate::suite::Report;

/// One JSON object per result, then `{"summary": ...}`.
pub fn write_json<W: Write>(report: &Report, mut out: W) -> io::Result<()> {
    for r in &report.results {
        serde_json::to_writer(&mut out, r)?;
        writeln!(out)?;
    }
    serde_json::to_writer(&mut out, &json!({ "summary": report.summary }))?;
    writeln!(out)
}

/// One row per check with its first failure, then a totals line.
pub fn write_table<W: Write>(report: &Report, mut out: W) -> io::Result<()> {
    writeln!(out, "{:<16} {:>8} {:>8}  first failure", "check", "passed", "failed")?;
    for tally in &report.summary.checks {
        let id = tally.check;
        let first = report.failures(id).next().map(|r| {
            format!("{} {}", r.instance, r.witness.as_deref().unwrap_or_default())
        });
        writeln!(out, "{:<16} {:>8} {:>8}  {}", id, tally.passed, tally.failed, first.unwrap_or_default())?;
    }
    writeln!(out, "{:<16} {:>8} {:>8}", "total", report.summary.passed, report.summary.failed)
}

pub fn set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

pub fn function_json(f: &RomanFunction) -> Value {
    json!({ "v0": f.zeros().to_vec(), "v1": f.ones().to_vec(), "v2": f.twos().to_vec(), "weight": f.weight() })
}

/// Class memberships are only claimed from order 3 up; below that they are
/// written as `null` and only the raw invariants are reported.
pub fn class_report_json(graph6: &str, r: &ClassReport) -> Value {
    let claim = |b: bool| if r.order >= 3 { json!(b) } else { Value::Null };
    json!({
        "graph6": graph6,
        "order": r.order,
        "size": r.size,
        "gamma": r.gamma,
        "gamma_r": r.gamma_r,
        "differential": r.differential,
        "is_roman": r.is_roman,
        "in_r_uvr": claim(r.in_r_uvr),
        "in_r_cvr": claim(r.in_r_cvr),
        "in_d_uvr": claim(r.in_d_uvr),
        "in_d_cvr": claim(r.in_d_cvr),
        "is_urd": r.is_urd,
        "bondage": r.bondage,
        "per_vertex_effect": r.per_vertex_effect.iter().map(|e| e.as_str()).collect::<Vec<_>>(),
    })
}
