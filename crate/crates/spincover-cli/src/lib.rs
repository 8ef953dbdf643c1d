//! Library half of the `spincover` binary: the JSON document model and the
//! subcommand implementations, exposed so integration tests can drive the
//! exact production code paths in-process.

pub mod commands;
pub mod document;
