//! Matrix file I/O, report formatting and canned experiments behind the
//! `szcz` binary.

pub mod config;
pub mod format;
pub mod params;
pub mod report;
