//! Command-line front end, file formats and the threaded suite runner for
//! `commute-spectra-core`.

pub mod dot;
pub mod error;
pub mod json;
pub mod parse;
pub mod runner;

use commute_spectra_core::Limits;

pub use error::CliError;
pub use parse::{parse_group_spec, ParseError};

pub const MAX_ORDER_ENV: &str = "COMMUTE_SPECTRA_MAX_ORDER";

/// Default limits with the group-order cap optionally overridden.
pub fn limits_from(max_order: Option<&str>) -> Result<Limits, CliError> {
    let limits = Limits::default();
    match max_order {
        None => Ok(limits),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(|n| limits.with_max_group_order(n))
            .ok_or_else(|| CliError::Usage(format!("{MAX_ORDER_ENV} must be a positive integer, got {v:?}"))),
    }
}

pub fn limits_from_env() -> Result<Limits, CliError> {
    limits_from(std::env::var(MAX_ORDER_ENV).ok().as_deref())
}
