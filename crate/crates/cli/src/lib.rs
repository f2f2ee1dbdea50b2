//! File formats, report rendering and the cross-validation harness behind
//! the `acmpts` command-line tool.

pub mod format;
pub mod harness;
pub mod render;
