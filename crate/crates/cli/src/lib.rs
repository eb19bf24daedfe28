//! Library half of the `bepart` command-line tool.

pub mod render;
pub mod report;
pub mod suites;
