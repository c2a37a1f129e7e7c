//! File formats, reports, sweeps, SVG portraits and the command line built on
//! `saddlelink-core`.

pub mod cli;
pub mod fixtures;
pub mod report;
pub mod spec_file;
pub mod svg;
pub mod sweep;
