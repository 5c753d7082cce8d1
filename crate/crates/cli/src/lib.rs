//! Library side of the `dtring` command: corpus parsing, the structural-set
//! cache and the JSON reports.

pub mod cache;
pub mod commands;
pub mod parse;

/// The corpus used when `verify` is given no `--corpus`.
pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.corpus");
