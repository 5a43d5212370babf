//! Report encodings: JSON for machines, aligned text for people.

use std::fmt::Write;

use serde::Serialize;
use zerocycle_core::{Counts, CriterionReport};

#[derive(Serialize)]
struct CountsDoc {
    n1: usize,
    n2: usize,
    n3: usize,
    m1: usize,
    m2: usize,
}

impl From<&Counts> for CountsDoc {
    fn from(k: &Counts) -> Self {
        Self {
            n1: k.n1,
            n2: k.n2,
            n3: k.n3,
            m1: k.m1,
            m2: k.m2,
        }
    }
}

#[derive(Serialize)]
struct TraceDoc<'a> {
    tag: &'a str,
    quantity: &'a str,
    value: &'a str,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    counts: CountsDoc,
    inequality_lhs: i64,
    inequality_rhs: i64,
    inequality_holds: bool,
    generation_holds: bool,
    sk1_coker_units_rank: Option<usize>,
    structure_h1_kernel: usize,
    verdict: &'a str,
    paper_trace: Vec<TraceDoc<'a>>,
}

fn report_doc(report: &CriterionReport) -> ReportDoc<'_> {
    ReportDoc {
        counts: CountsDoc::from(&report.counts),
        inequality_lhs: report.inequality_lhs,
        inequality_rhs: report.inequality_rhs,
        inequality_holds: report.inequality_holds,
        generation_holds: report.generation_holds,
        sk1_coker_units_rank: report.sk1_coker_units_rank,
        structure_h1_kernel: report.structure_h1_kernel,
        verdict: report.verdict.as_str(),
        paper_trace: report
            .trace
            .iter()
            .map(|t| TraceDoc {
                tag: t.tag,
                quantity: &t.quantity,
                value: &t.value,
            })
            .collect(),
    }
}

/// JSON array of reports, keys in field order.
pub fn reports_to_json(reports: &[CriterionReport]) -> String {
    let docs: Vec<ReportDoc<'_>> = reports.iter().map(report_doc).collect();
    serde_json::to_string_pretty(&docs).expect("reports always serialize")
}

pub fn report_to_json(report: &CriterionReport) -> String {
    serde_json::to_string_pretty(&report_doc(report)).expect("reports always serialize")
}

pub fn counts_to_json(counts: &Counts) -> String {
    serde_json::to_string(&CountsDoc::from(counts)).expect("counts always serialize")
}

pub fn counts_line(k: &Counts) -> String {
    format!(
        "n1={} n2={} n3={} m1={} m2={}",
        k.n1, k.n2, k.n3, k.m1, k.m2
    )
}

pub fn report_to_text(name: &str, report: &CriterionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "configuration: {name}");
    let _ = writeln!(out, "{}", counts_line(&report.counts));
    let _ = writeln!(
        out,
        "inequality: m1-m2 = {} >= n1-n2+n3 = {}: {}",
        report.inequality_lhs, report.inequality_rhs, report.inequality_holds
    );
    let _ = writeln!(out, "generation: {}", report.generation_holds);
    let _ = writeln!(
        out,
        "sk1 cokernel units rank: {}",
        report
            .sk1_coker_units_rank
            .map_or_else(|| "undefined".to_string(), |r| r.to_string())
    );
    let _ = writeln!(
        out,
        "structure sheaf h1 kernel: {}",
        report.structure_h1_kernel
    );
    let _ = writeln!(out, "verdict: {}", report.verdict);
    let _ = writeln!(out, "trace:");
    let width = report.trace.iter().map(|t| t.tag.len()).max().unwrap_or(0);
    for t in &report.trace {
        let _ = writeln!(out, "  [{:width$}] {} = {}", t.tag, t.quantity, t.value);
    }
    out
}
