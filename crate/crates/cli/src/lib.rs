//! Command line front end for structa.
//!
//! Documents are JSON objects with a `kind` key; see [`doc`] for the format
//! and `structa formats` for the schema of every kind.

pub mod check;
pub mod derive;
pub mod doc;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod suites;

use structa_core::LawReport;

pub use error::CliError;

/// Bound on [`doc::StructureDoc::size`] unless `--max-size` says otherwise.
pub const DEFAULT_MAX_SIZE: usize = 64;

pub fn parse_bounded(text: &str, max_size: usize) -> Result<doc::StructureDoc, CliError> {
    let doc = doc::parse_shape(text)?;
    if doc.size() > max_size {
        return Err(CliError::TooLarge {
            size: doc.size(),
            bound: max_size,
        });
    }
    model::validate(&doc)?;
    Ok(doc)
}

pub fn check_text(text: &str, max_size: usize) -> Result<LawReport, CliError> {
    check::run_check(&parse_bounded(text, max_size)?)
}

/// 0 when every law holds, 1 when one fails, 2 when the input was rejected.
pub fn exit_code(outcome: &Result<LawReport, CliError>) -> i32 {
    match outcome {
        Ok(r) if r.passed() => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

pub fn render_report(report: &LawReport, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        format!("{report}\n")
    }
}
