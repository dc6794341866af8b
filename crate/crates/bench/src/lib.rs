//! Problem files, benchmark systems, strategy comparison and reports for
//! the `satgb` command.

pub mod corpus;
pub mod parse;
pub mod report;
pub mod runner;
