//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed input and bad
//! flags, 2 when a well-formed pair breaks an axiom (or a census row fails).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::engine::{convert, FamilyTag};
use crate::error::Error;
use crate::pairfile;
use crate::relations::{catalan, check_axioms, pair_to_tree, Axiom};

#[derive(Debug, Parser)]
#[command(name = "catalan-pairs", version, about = "Encode, decode and convert Catalan structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a pair file against the four axioms.
    Verify {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        stdin: bool,
    },
    /// Print the pair file of a structure.
    Encode {
        #[arg(long)]
        family: FamilyTag,
        #[arg(allow_hyphen_values = true)]
        value: Option<String>,
        #[arg(long, conflicts_with = "value")]
        stdin: bool,
    },
    /// Map a structure of one family to the corresponding one of another.
    Convert {
        #[arg(long)]
        from: FamilyTag,
        #[arg(long)]
        to: FamilyTag,
        #[arg(allow_hyphen_values = true)]
        value: Option<String>,
        #[arg(long, conflicts_with = "value")]
        stdin: bool,
    },
    /// List every structure of a family of size n, one per line.
    Enumerate {
        #[arg(long)]
        family: FamilyTag,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Tabulate family sizes 0..=n against the Catalan numbers.
    Count {
        /// A family tag, or "all".
        #[arg(long)]
        family: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Print the decomposition tree of a pair file.
    Decompose {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        stdin: bool,
    },
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidPair(_) | Error::Invariant(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Verify { file, stdin: from_stdin } => {
            let text = read_input(file, from_stdin, stdin)?;
            let parsed = pairfile::parse(&text)?;
            let report = check_axioms(&parsed.s, &parsed.r)?;
            let checks = [
                (Axiom::StrictOrderS, "axiom (i) S"),
                (Axiom::StrictOrderR, "axiom (i) R"),
                (Axiom::Coverage, "axiom (ii)"),
                (Axiom::Disjointness, "axiom (iii)"),
                (Axiom::Composition, "axiom (iv)"),
            ];
            for (axiom, label) in checks {
                match report.violation(axiom) {
                    None => writeln!(out, "{label}: PASS")?,
                    Some(v) => writeln!(out, "{label}: FAIL {}", v.witness.render(1))?,
                }
            }
            if report.valid() {
                writeln!(out, "VALID")?;
                Ok(0)
            } else {
                writeln!(out, "INVALID")?;
                Ok(2)
            }
        }
        Command::Encode { family, value, stdin: from_stdin } => {
            let text = read_value(value, from_stdin, stdin)?;
            let pair = family.parse_value(&text)?.encode()?;
            out.write_all(pairfile::serialize(&pair).as_bytes())?;
            Ok(0)
        }
        Command::Convert { from, to, value, stdin: from_stdin } => {
            let text = read_value(value, from_stdin, stdin)?;
            let converted = convert(&from.parse_value(&text)?, from, to)?;
            writeln!(out, "{converted}")?;
            Ok(0)
        }
        Command::Enumerate { family, n } => {
            for value in family.enumerate(n) {
                writeln!(out, "{value}")?;
            }
            Ok(0)
        }
        Command::Count { family, n } => {
            let families =
                if family == "all" { FamilyTag::ALL.to_vec() } else { vec![family.parse::<FamilyTag>()?] };
            let mut failed = false;
            writeln!(out, "{:<12} {:>4} {:>8} {:>8} status", "family", "size", "count", "catalan")?;
            for tag in families {
                for size in 0..=n {
                    let count = tag.enumerate(size).len();
                    let expected = catalan(size);
                    let ok = expected == count.into();
                    failed |= !ok;
                    let status = if ok { "PASS" } else { "FAIL" };
                    writeln!(out, "{:<12} {size:>4} {count:>8} {expected:>8} {status}", tag.name())?;
                }
            }
            Ok(if failed { 2 } else { 0 })
        }
        Command::Decompose { file, stdin: from_stdin } => {
            let text = read_input(file, from_stdin, stdin)?;
            let pair = pairfile::parse(&text)?.into_pair()?;
            writeln!(out, "{}", pair_to_tree(&pair)?)?;
            Ok(0)
        }
    }
}

fn read_input(file: Option<PathBuf>, from_stdin: bool, stdin: &mut dyn Read) -> Result<String, Failure> {
    match file {
        Some(path) => fs::read_to_string(&path)
            .map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) }),
        None if from_stdin => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
        None => Err(Failure { code: 1, message: "expected a file or --stdin".into() }),
    }
}

fn read_value(value: Option<String>, from_stdin: bool, stdin: &mut dyn Read) -> Result<String, Failure> {
    match value {
        Some(v) => Ok(v),
        None if from_stdin => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text.trim_end_matches(['\n', '\r']).to_string())
        }
        None => Err(Failure { code: 1, message: "expected a value or --stdin".into() }),
    }
}
