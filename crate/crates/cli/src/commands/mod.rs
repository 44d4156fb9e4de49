mod export;
mod generate;
mod search;
mod sweep;
mod verify;

pub use export::{export, to_dot};
pub use generate::{certify, generate};
pub use search::search;
pub use sweep::{sweep, sweep_rows, SweepRow};
pub use verify::{rebuild, verify};

use std::fs;
use std::io::Write;
use std::path::Path;

use supermagic_core::{Family, FamilySpec};

use crate::Status;

/// A command that stopped early, with the status to exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

pub type CmdResult<T = Status> = Result<T, Failure>;

pub(crate) fn usage(message: impl ToString) -> Failure {
    Failure { status: Status::Usage, message: message.to_string() }
}

pub(crate) fn regression(message: impl ToString) -> Failure {
    Failure { status: Status::Regression, message: message.to_string() }
}

pub(crate) fn parse_spec(family: &str, params: &[(&str, u32)]) -> CmdResult<FamilySpec> {
    let family: Family = family.parse().map_err(usage)?;
    FamilySpec::from_params(family, params.iter().copied()).map_err(usage)
}

/// Writes to `path`, or to `out` when there is no path.
pub(crate) fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CmdResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| usage(format!("cannot write output: {e}"))),
    }
}
