//! JSON problem documents, command dispatch and report rendering for the
//! `analyze` binary.

pub mod commands;
pub mod report;
pub mod schema;

pub use commands::{run_command, Command, Context, GroupRef};
pub use report::Report;
pub use schema::{parse_spec, Problem, ProblemSpec};

use crate::error::Error;

/// Process exit code for an error: 2 for failed internal cross-checks,
/// 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

/// Runs each command against `ctx`, stopping at the first error.
pub fn run_all(ctx: &Context, cmds: &[Command]) -> Result<Vec<Report>, Error> {
    cmds.iter().map(|c| run_command(ctx, c)).collect()
}
