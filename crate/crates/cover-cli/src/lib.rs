//! Library half of the `cover` command-line tool: the built-in group
//! catalog, JSON file formats, the verification report, and the
//! `verify-paper` check suite.

pub mod catalog;
pub mod checks;
pub mod formats;
pub mod report;
