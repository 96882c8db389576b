//! Command-line front end for `pointpart`: the `mgraph` file format, JSON
//! reports, and the verification suites.

mod app;
pub mod error;
pub mod format;
pub mod json;
pub mod suites;

pub use app::{run, BUDGET_ENV};
pub use error::{exit, CliError};
pub use format::{parse_graph, write_graph};
