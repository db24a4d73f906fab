//! File formats, DOT export and the acceptance harness around `cobox-core`.

pub mod dot;
pub mod harness;
pub mod io;
pub mod json;
