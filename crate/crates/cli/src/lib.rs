//! Std companion to `seshadri-core`: text and JSON reports, a parallel
//! oracle front end, the reproduction suite and the command-line parser.

pub mod cli;
pub mod parallel;
pub mod report;
pub mod suite;
