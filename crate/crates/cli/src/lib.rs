//! Experiment harness behind the `vsarray` CLI: scenario configuration,
//! Monte-Carlo RMSE sweeps with CRB reference curves, spectrum exports,
//! ambiguity certification reports and search-complexity tables.

pub mod complexity;
pub mod config;
pub mod experiments;
pub mod output;
