//! Definition files, corpus verification and reports.

pub mod app;
pub mod pretty;
pub mod report;
pub mod syntax;

pub use app::{load_corpus, load_file, run, shipped_corpus};
pub use pretty::print_definition;
pub use report::{render, to_json, Format, ReportConfig};
pub use syntax::{parse_definition, ErrorKind, ParseError};
