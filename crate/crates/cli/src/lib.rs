//! Command-line tools, file formats and the claim registry built on
//! `repcontain-core`.

pub mod charexpr;
pub mod claims;
pub mod cli;
pub mod descriptor;
pub mod error;
pub mod facts;
pub mod json;
pub mod satake_io;
pub mod tables;
