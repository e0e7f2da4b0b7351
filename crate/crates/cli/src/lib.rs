//! The `macpieri` command line: argument parsing, result documents and the
//! on-disk result cache.

pub mod args;
pub mod cache;
pub mod doc;
pub mod run;

pub use args::Cli;
pub use doc::ResultDocument;
pub use run::{run, Failure};
