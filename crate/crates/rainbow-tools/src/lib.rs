//! File formats, report rendering, and parallel drivers around
//! [`rainbow_core`].

pub mod formats;
pub mod report;
pub mod runner;
