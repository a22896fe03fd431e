//! Standard-library front end for `semilinear-ast`: threaded labeling, the
//! `AST1` partition artifact, report rendering and the command
//! implementations behind the `semilinear-ast` binary.

pub mod args;
pub mod artifact;
pub mod commands;
pub mod error;
pub mod output;
pub mod parallel;
