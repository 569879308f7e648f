//! Harness side of the toolbox: file formats, random ensembles,
//! criterion-vs-oracle auditing, and report serialization for the `gsep`
//! command line.

pub mod audit;
pub mod ensemble;
pub mod inputs;
pub mod jsongraph;
pub mod report;

pub use gsep_core;
