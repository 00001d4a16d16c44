//! Command-line front end: expression and presentation parsing, suite
//! dispatch and JSON reports.

pub mod parse;
pub mod presentation;
pub mod suite;

pub use parse::{parse_element, parse_expression, parse_hq, parse_ratfunc, parse_scalar, Context, ParseError, Value};
pub use presentation::{parse_presentation, PresentationError};
pub use suite::{render_text, run_suite, ReportDocument, SuiteError, SuiteName, SuiteRequest, SCHEMA_VERSION};
