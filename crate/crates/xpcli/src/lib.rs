//! Scenario-driven experiment runner for the UCA beam defocus library.
//!
//! A scenario is a TOML file naming an experiment, the array and precoder
//! settings, one swept variable and the seeds to average over. [`run`]
//! turns it into a [`Table`] of `x, method, mean, std` rows.

mod builtins;
mod error;
mod run;
mod scenario;
mod table;

pub use builtins::{builtin, builtin_names, builtin_source, list_scenarios, load_scenario};
pub use error::XpError;
pub use run::{mean_std, prepare, run, RunOptions};
pub use scenario::{
    Diagnostic, Experiment, OutputConfig, PrecodingConfig, Scenario, SweepConfig, SweepVariable, SystemConfig,
    TrialsConfig,
};
pub use table::{Row, Table};
