//! Library surface of the `orebit` CLI: job documents, the scalar literal
//! parser, the law suite, and report types. The binary in `main.rs` is a
//! thin wrapper over [`job::JobSpec::prepare`] and [`run::run_job`].

pub mod error;
pub mod job;
pub mod laws;
pub mod parse;
pub mod report;
pub mod run;
