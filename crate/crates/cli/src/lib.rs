//! The `homcat` command-line workbench: JSON structure files, report
//! files and command dispatch over `homcat-core`.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::run;
pub use error::CliError;
pub use format::{parse_structure, serialize_structure, Structure, StructureFile};
pub use report::ReportFile;
