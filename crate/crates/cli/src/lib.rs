//! Library surface of the scenario-file front end: parsing, request
//! execution, report rendering, and the built-in worked-example checks.
//! The `requivar` binary is a thin wrapper over these modules.

pub mod checks;
pub mod commands;
pub mod error;
pub mod report;
pub mod schema;
