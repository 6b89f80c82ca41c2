use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use doublekit_cli::command::{DEFAULT_REPLAY_DIR, DEFAULT_TRIALS};
use doublekit_cli::{exec_command, run_session, CliError, Command, Session};

/// Doubles of modules, homomorphisms and chain complexes over polynomial rings.
#[derive(Parser)]
#[command(name = "doublekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every `run` statement of a session file.
    Run { file: PathBuf },
    /// Print a session file in canonical form, with includes inlined.
    Print { file: PathBuf },
    /// Print the double of a module, hom, complex, germ or map.
    Double {
        name: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Test whether an element lies in a module.
    Member {
        module: String,
        element: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Test two modules for equality.
    Eq {
        a: String,
        b: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Print the kernel of a matrix hom.
    Kernel {
        hom: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Print the image of a matrix hom.
    Image {
        hom: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Length of N/M for M inside N, or INFINITE.
    Colength {
        m: String,
        n: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Generic rank of a module.
    Rank {
        module: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Exactness of a complex at every degree.
    Exact {
        complex: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Test whether mu is a homotopy between two chain maps.
    Homotopy {
        alpha: String,
        beta: String,
        mu: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Double a hom relative to a germ.
    RelativeDouble {
        germ: String,
        hom: String,
        #[arg(long, short)]
        session: PathBuf,
    },
    /// Run a property suite on random instances.
    Verify {
        id: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Where replay files of failing trials are written.
        #[arg(long, default_value = DEFAULT_REPLAY_DIR)]
        replay_dir: String,
    },
}

fn one_shot(session: Option<&Path>, text: String) -> Result<bool, CliError> {
    let s = match session {
        Some(p) => Session::load(p)?,
        None => Session::new(),
    };
    let cmd = Command::parse(&s, &text).map_err(|(offset, msg)| CliError::Parse {
        origin: "<command line>".into(),
        line: 1,
        col: text[..offset.min(text.len())].chars().count() + 1,
        msg,
    })?;
    let out = exec_command(&s, &cmd)?;
    println!("{}", out.text);
    for n in out.notes {
        eprintln!("{n}");
    }
    Ok(out.ok)
}

fn real_main(cli: Cli) -> Result<bool, CliError> {
    let (session, text) = match cli.command {
        Cmd::Run { file } => {
            let s = Session::load(&file)?;
            let t = run_session(&s);
            print!("{}", t.stdout);
            std::io::stdout().flush().ok();
            eprint!("{}", t.stderr);
            return Ok(t.ok);
        }
        Cmd::Print { file } => {
            print!("{}", Session::load(&file)?);
            return Ok(true);
        }
        Cmd::Double { name, session } => (Some(session), format!("double {name}")),
        Cmd::Member {
            module,
            element,
            session,
        } => (Some(session), format!("member {module} {element}")),
        Cmd::Eq { a, b, session } => (Some(session), format!("eq {a} {b}")),
        Cmd::Kernel { hom, session } => (Some(session), format!("kernel {hom}")),
        Cmd::Image { hom, session } => (Some(session), format!("image {hom}")),
        Cmd::Colength { m, n, session } => (Some(session), format!("colength {m} {n}")),
        Cmd::Rank { module, session } => (Some(session), format!("rank {module}")),
        Cmd::Exact { complex, session } => (Some(session), format!("exact {complex}")),
        Cmd::Homotopy {
            alpha,
            beta,
            mu,
            session,
        } => (Some(session), format!("homotopy {alpha} {beta} {mu}")),
        Cmd::RelativeDouble { germ, hom, session } => {
            (Some(session), format!("relative-double {germ} {hom}"))
        }
        Cmd::Verify {
            id,
            trials,
            seed,
            format: Format::Text,
            replay_dir,
        } => (
            None,
            format!("verify {id} --trials {trials} --seed {seed} --replay-dir {replay_dir}"),
        ),
    };
    one_shot(session.as_deref(), text)
}

fn main() -> ExitCode {
    match real_main(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
