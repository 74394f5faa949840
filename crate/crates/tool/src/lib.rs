//! File formats, reports and command pipelines on top of `jacobi-core`.

pub mod commands;
pub mod error;
pub mod report;
pub mod structure;

pub use error::ToolError;
pub use report::{Format, Record, Report, Status};
pub use structure::StructureFile;
