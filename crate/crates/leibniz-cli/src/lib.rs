//! Library side of the `leibniz` binary: the JSON algebra document format
//! and the structured report layer.  Splitting these out keeps them testable
//! and reusable from integration tests.

pub mod format;
pub mod report;
