//! Command-line front end: diagram files, reports and the `sdcalc` command.

pub mod app;
pub mod file;
pub mod report;

pub use app::run;
pub use file::{emit, parse, DiagramFile, Format, ParseError};
