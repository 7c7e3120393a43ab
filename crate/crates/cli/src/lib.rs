//! Command-line front end: instance files, command dispatch and reports.

pub mod commands;
pub mod error;
pub mod instance;
pub mod report;

pub use commands::{run_check, run_enumerate, run_witness, Check, Mode, Options, Target};
pub use error::{CliError, Result};
pub use instance::{parse_instance, parse_instance_with_cap, Instance};
pub use report::{Outcome, Report};
