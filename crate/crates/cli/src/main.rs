use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "stringcone",
    version,
    about = "Lusztig moves, GP paths and string cones of adapted reduced words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Write to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Gp,
    Moves,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Param {
    Lusztig,
    String,
}

#[derive(Args, Debug, Clone)]
pub struct Instance {
    /// Arrows such as "2>1,2>3"; a lone "1" is the quiver of type A1.
    #[arg(long)]
    quiver: String,

    /// Comma separated letters, or "auto" for the canonical adapted word.
    #[arg(long, default_value = "auto")]
    word: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The reflection ordering of the word.
    Roots(Instance),
    /// The Auslander-Reiten quiver.
    Ar(Instance),
    /// The grid of the hammock of one type (type A).
    Hammock {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        type_index: usize,
    },
    /// Lusztig moves, one per antichain.
    Moves(Instance),
    /// Gleizer-Postnikov paths (type A).
    Gp {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        type_index: Option<usize>,
    },
    /// String cone inequalities.
    Inequalities {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Source::Moves)]
        source: Source,
    },
    /// String parameters inside a box.
    Strings {
        #[command(flatten)]
        instance: Instance,
        #[arg(long = "box")]
        bound: i64,
    },
    /// The crystal graph near the zero vector.
    Crystal {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Param::Lusztig)]
        param: Param,
    },
    /// Exact checks; exit status 1 when one fails.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// The wiring diagram (type A).
    Wiring(Instance),
}

#[derive(Subcommand, Debug)]
enum Check {
    /// Lusztig moves equal the GP vectors.
    Theorem {
        #[command(flatten)]
        instance: Instance,
        /// Compare type by type.
        #[arg(long)]
        typed: bool,
    },
    /// Closure, membership test and cone agree inside a box.
    Cone {
        #[command(flatten)]
        instance: Instance,
        #[arg(long = "box", default_value_t = 2)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Source::Gp)]
        source: Source,
    },
    /// The moves cut out the string cone inside a box (needs condition (L)).
    Conjecture {
        #[command(flatten)]
        instance: Instance,
        #[arg(long = "box", default_value_t = 2)]
        bound: i64,
    },
    /// Every check on every orientation of A_n, n up to the maximal rank.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long = "box", default_value_t = 2)]
        bound: i64,
    },
}

/// A finished command: its text and whether every check in it passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

/// Failures that are the caller's fault exit with 2, the rest with 1.
pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<stringcone::Error> for Failure {
    fn from(e: stringcone::Error) -> Self {
        use stringcone::Error as E;
        match e {
            E::Internal(_) | E::AmbiguousMaximum { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Roots(i) => commands::roots(i, f),
        Command::Ar(i) => commands::ar(i, f),
        Command::Hammock {
            instance,
            type_index,
        } => commands::hammock(instance, *type_index, f),
        Command::Moves(i) => commands::moves(i, f),
        Command::Gp {
            instance,
            type_index,
        } => commands::gp(instance, *type_index, f),
        Command::Inequalities { instance, source } => commands::inequalities(instance, *source, f),
        Command::Strings { instance, bound } => commands::strings(instance, *bound, f),
        Command::Crystal {
            instance,
            depth,
            param,
        } => commands::crystal(instance, *depth, *param, f),
        Command::Wiring(i) => commands::wiring(i, f),
        Command::Verify { check } => match check {
            Check::Theorem { instance, typed } => commands::verify_theorem(instance, *typed, f),
            Check::Cone {
                instance,
                bound,
                source,
            } => commands::verify_cone(instance, *bound, *source, f),
            Check::Conjecture { instance, bound } => {
                commands::verify_conjecture(instance, *bound, f)
            }
            Check::Suite { max_rank, bound } => commands::verify_suite(*max_rank, *bound, f),
        },
    }
}

/// Temp file in the target directory, then rename over the target.
fn write_atomically(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => write_atomically(path, &output.text),
        None => std::io::stdout().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if output.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
