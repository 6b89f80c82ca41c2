//! Session files and commands for the `doublekit` command line.
//!
//! A session declares rings, modules, homs, germs, complexes and maps by name and may end in
//! `run` statements; [`run_session`] executes them and collects the transcript.

pub mod command;
pub mod error;
pub mod session;
mod statement;

pub use command::{exec_command, Command, Output, VerifyArgs};
pub use error::{CliError, CliResult};
pub use session::{parse_session, Decl, Session, Value};

/// Result of running every `run` statement of a session.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    pub stdout: String,
    pub stderr: String,
    /// False if any command failed or any property suite reported failures.
    pub ok: bool,
}

/// Echoes each command as `> command` followed by its output. A failing command is reported
/// on stderr and the remaining commands still run.
pub fn run_session(session: &Session) -> Transcript {
    let mut t = Transcript {
        ok: true,
        ..Transcript::default()
    };
    for cmd in session.commands() {
        t.stdout.push_str(&format!("> {cmd}\n"));
        match exec_command(session, cmd) {
            Ok(out) => {
                t.stdout.push_str(&out.text);
                t.stdout.push('\n');
                for n in out.notes {
                    t.stderr.push_str(&n);
                    t.stderr.push('\n');
                }
                t.ok &= out.ok;
            }
            Err(e) => {
                t.stderr.push_str(&format!("error: {cmd}: {e}\n"));
                t.ok = false;
            }
        }
    }
    t
}
