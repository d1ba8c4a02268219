//! IO, file formats, benchmark harness and the `sbf` command line on top of
//! [`sbf_core`].

pub mod bench;
pub mod cli;
mod error;
pub mod format;
pub mod svg;
pub mod table;
pub mod verify;

pub use crate::error::ToolError;

pub type Result<T> = std::result::Result<T, ToolError>;
