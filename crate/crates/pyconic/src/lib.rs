//! File formats and command-line front end for `pyconic-core`.
//!
//! - [`number`]: 17-significant-digit decimal formatting used by every output.
//! - [`sweep_csv`]: sweep rows as CSV.
//! - [`json`]: arcs, lengths, verification reports, centre reports, scenes.
//! - [`svg`]: scene rendering.
//! - [`cli`]: the `pyconic` command.

pub mod cli;
pub mod json;
pub mod number;
pub mod svg;
pub mod sweep_csv;
