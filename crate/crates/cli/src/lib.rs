//! Command-line front end: reads a moment table, measure, associated
//! sequence or continued fraction, runs one pipeline stage and emits a
//! JSON report.

pub mod args;
pub mod input;
mod run;

pub use run::{exit_code, run};

/// Canonical report text: sorted keys, two-space indent, trailing newline.
pub fn render(report: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
