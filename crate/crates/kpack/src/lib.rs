//! File formats, report rendering and claim verification for the `kpack`
//! command-line tool.

pub mod formats;
pub mod report;
pub mod verify;
