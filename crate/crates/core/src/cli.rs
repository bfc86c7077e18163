//! The command-line interface.
//!
//! One command per invocation, no shared state. Successful commands exit 0
//! with deterministic output; domain failures exit 1 with a single
//! machine-parseable `error:<kind>:<detail>` line on stderr, where `<kind>`
//! is one of `parse`, `validation`, `degeneracy`, `morphism`, `operation`,
//! `exceeded`, `presentation`, `family`, `io`, or `internal`; malformed
//! command lines exit 2.

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::builders::{self, build_family, Family, FamilyError, MatrixError};
use crate::category::{self, CategoryError};
use crate::coset::{
    coset_enumerate, verify_homomorphism, Enumeration, EnumerationError, GeneratorMap, VerifyError,
    DEFAULT_COSET_LIMIT,
};
use crate::document::{self, DocumentError};
use crate::morphism::{Morphism, MorphismError};
use crate::presentation::{abelianization_rank, presentation_of, AbelianizationError};
use crate::quotient::QuotientMode;

#[derive(Parser)]
#[command(
    name = "wc2",
    version,
    about = "Weighted 2-complexes, their category, and their generalized Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a complex document satisfies every axiom
    Validate {
        file: PathBuf,
        /// Accepted for uniformity; validation has a single strict mode
        #[arg(long)]
        lax: bool,
    },
    /// Print the group presentation of a complex
    Present {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Native)]
        format: Format,
    },
    /// Compute the exact group order by coset enumeration
    Order {
        file: PathBuf,
        /// Live-coset budget; enumeration stops with an error beyond it
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Print the rank of the F2 abelianization of the group
    Abelianize { file: PathBuf },
    /// Build a family complex and write its document
    Build {
        /// Family name: empty | point | discrete | complete2 | coxeter |
        /// sympath | dihedral | gvp | gnk
        family: String,
        /// Family parameters: discrete/complete2/sympath/dihedral/gvp take
        /// one integer, gnk takes two, coxeter takes a matrix JSON file
        args: Vec<String>,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Categorical operations on complex documents
    #[command(subcommand)]
    Op(OpCommand),
    /// Check whether a vertex map induces a group homomorphism
    HomCheck {
        src: PathBuf,
        dst: PathBuf,
        /// JSON file {"map": {"source-vertex": "target-vertex", ...}}
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        /// Live-coset budget for enumerating the target group
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// Disjoint union of two complexes
    Union {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Strong product of two complexes
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Equalizer of two parallel morphisms A -> B
    Equalize {
        a: PathBuf,
        b: PathBuf,
        /// Vertex-map file for the first morphism
        #[arg(long, value_name = "FILE")]
        phi: PathBuf,
        /// Vertex-map file for the second morphism
        #[arg(long, value_name = "FILE")]
        psi: PathBuf,
        /// Accepted for uniformity; equalizers never degenerate
        #[arg(long)]
        lax: bool,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Coequalizer of two parallel morphisms A -> B
    Coequalize {
        a: PathBuf,
        b: PathBuf,
        /// Vertex-map file for the first morphism
        #[arg(long, value_name = "FILE")]
        phi: PathBuf,
        /// Vertex-map file for the second morphism
        #[arg(long, value_name = "FILE")]
        psi: PathBuf,
        /// Let collapsing edges vanish and fully collapsed cells become
        /// vertices instead of failing
        #[arg(long)]
        lax: bool,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Native,
    Gap,
    Magma,
}

/// A domain failure: one `error:<kind>:<detail>` line, exit 1.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CliError {
    kind: &'static str,
    detail: String,
}

impl CliError {
    fn new(kind: &'static str, detail: impl fmt::Display) -> CliError {
        let detail = detail.to_string().replace('\n', " ");
        CliError { kind, detail }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error:{}:{}", self.kind, self.detail)
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> CliError {
        match e {
            DocumentError::Syntax { .. } => CliError::new("parse", e),
            DocumentError::Invalid(_) => CliError::new("validation", e),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> CliError {
        CliError::new("family", e)
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> CliError {
        match e {
            MatrixError::Syntax(_) => CliError::new("parse", format!("coxeter matrix: {e}")),
            _ => CliError::new("family", format!("coxeter matrix: {e}")),
        }
    }
}

impl From<MorphismError> for CliError {
    fn from(e: MorphismError) -> CliError {
        CliError::new("morphism", e)
    }
}

impl From<CategoryError> for CliError {
    fn from(e: CategoryError) -> CliError {
        match e {
            CategoryError::Quotient(q) => CliError::new("degeneracy", q),
            _ => CliError::new("operation", e),
        }
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> CliError {
        match e {
            EnumerationError::MissingSquare(_) => CliError::new("presentation", e),
            EnumerationError::ZeroLimit => CliError::new("operation", e),
        }
    }
}

impl From<AbelianizationError> for CliError {
    fn from(e: AbelianizationError) -> CliError {
        CliError::new("presentation", e)
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> CliError {
        CliError::new("morphism", e)
    }
}

/// Any command failure: a domain error (exit 1) or a usage error (exit 2).
enum Failure {
    Domain(CliError),
    Usage(String),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Domain(e.into())
    }
}

/// Run with the process arguments; returns the exit code.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

/// Run with explicit arguments (the first is the program name); returns
/// the exit code and prints exactly what the process would print.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(Some(text)) => emit(&text),
        Ok(None) => 0,
        Err(Failure::Domain(e)) => {
            eprintln!("{e}");
            1
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
    }
}

/// Print a result line to stdout. A closed pipe (e.g. the output piped into
/// `head`) is a normal way for a consumer to stop reading, not a failure;
/// any other write error is reported as one.
fn emit(text: &str) -> i32 {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Ok(()) => 0,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error:io:stdout: {e}");
            1
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<crate::complex::WeightedComplex, CliError> {
    Ok(document::parse(&read_file(path)?)?)
}

fn completed_table(
    p: &crate::presentation::GroupPresentation,
    limit: u64,
) -> Result<crate::coset::CosetTable, CliError> {
    let limit = usize::try_from(limit).unwrap_or(usize::MAX);
    match coset_enumerate(p, limit)? {
        Enumeration::Completed(table) => Ok(table),
        Enumeration::Exceeded { limit } => Err(CliError::new(
            "exceeded",
            format!("coset limit {limit} reached without completing"),
        )),
    }
}

fn parallel_pair(
    a: &Path,
    b: &Path,
    phi: &Path,
    psi: &Path,
) -> Result<(Morphism, Morphism), CliError> {
    let source = load_complex(a)?;
    let target = load_complex(b)?;
    let phi_map = document::parse_vertex_map(&read_file(phi)?)?;
    let psi_map = document::parse_vertex_map(&read_file(psi)?)?;
    let phi = Morphism::extend_from_vertex_map(&source, &target, &phi_map)?;
    let psi = Morphism::extend_from_vertex_map(&source, &target, &psi_map)?;
    Ok((phi, psi))
}

fn execute(command: Command) -> Result<Option<String>, Failure> {
    match command {
        Command::Validate { file, lax: _ } => {
            load_complex(&file)?;
            Ok(Some("ok".to_owned()))
        }
        Command::Present { file, format } => {
            let p = presentation_of(&load_complex(&file)?);
            Ok(Some(match format {
                Format::Native => p.to_native(),
                Format::Gap => p.to_gap(),
                Format::Magma => p.to_magma(),
            }))
        }
        Command::Order { file, limit } => {
            let p = presentation_of(&load_complex(&file)?);
            let table = completed_table(&p, limit)?;
            Ok(Some(table.order().to_string()))
        }
        Command::Abelianize { file } => {
            let p = presentation_of(&load_complex(&file)?);
            let rank = abelianization_rank(&p).map_err(CliError::from)?;
            Ok(Some(format!("rank {rank}")))
        }
        Command::Build {
            family,
            args,
            output,
        } => {
            let family = match parse_build_spec(&family, &args).map_err(Failure::Usage)? {
                BuildSpec::Ready(f) => f,
                BuildSpec::CoxeterFile(path) => {
                    let matrix = builders::parse_coxeter_matrix(&read_file(&path)?)
                        .map_err(CliError::from)?;
                    Family::Coxeter(matrix)
                }
            };
            let complex = build_family(&family).map_err(CliError::from)?;
            write_file(&output, &document::serialize(&complex))?;
            Ok(None)
        }
        Command::Op(op) => {
            let (result, output) = match op {
                OpCommand::Union { a, b, output } => {
                    let parts = [load_complex(&a)?, load_complex(&b)?];
                    (category::disjoint_union(&parts), output)
                }
                OpCommand::Product { a, b, output } => {
                    let parts = [load_complex(&a)?, load_complex(&b)?];
                    (
                        category::strong_product(&parts).map_err(CliError::from)?,
                        output,
                    )
                }
                OpCommand::Equalize {
                    a,
                    b,
                    phi,
                    psi,
                    lax: _,
                    output,
                } => {
                    let (phi, psi) = parallel_pair(&a, &b, &phi, &psi)?;
                    (
                        category::equalizer(&phi, &psi).map_err(CliError::from)?,
                        output,
                    )
                }
                OpCommand::Coequalize {
                    a,
                    b,
                    phi,
                    psi,
                    lax,
                    output,
                } => {
                    let (phi, psi) = parallel_pair(&a, &b, &phi, &psi)?;
                    let mode = if lax {
                        QuotientMode::Lax
                    } else {
                        QuotientMode::Strict
                    };
                    (
                        category::coequalizer(&phi, &psi, mode).map_err(CliError::from)?,
                        output,
                    )
                }
            };
            write_file(&output, &document::serialize(&result.object))?;
            Ok(None)
        }
        Command::HomCheck {
            src,
            dst,
            map,
            limit,
        } => {
            let source = load_complex(&src)?;
            let target = load_complex(&dst)?;
            let vertex_map = document::parse_vertex_map(&read_file(&map)?)?;
            let genmap: GeneratorMap = vertex_map.into_iter().map(|(v, w)| (v, vec![w])).collect();
            let table = completed_table(&presentation_of(&target), limit)?;
            let verdict = verify_homomorphism(&genmap, &presentation_of(&source), &table)
                .map_err(CliError::from)?;
            Ok(Some(verdict.to_string()))
        }
    }
}

/// A parsed `build` argument list: either a complete family or the path of
/// a Coxeter matrix still to be read.
#[derive(Debug, PartialEq, Eq)]
enum BuildSpec {
    Ready(Family),
    CoxeterFile(PathBuf),
}

fn parse_build_spec(name: &str, args: &[String]) -> Result<BuildSpec, String> {
    fn arity(name: &str, args: &[String], expected: usize, what: &str) -> Result<(), String> {
        if args.len() == expected {
            Ok(())
        } else {
            Err(format!(
                "family '{name}' takes {expected} argument(s){what}, got {}",
                args.len()
            ))
        }
    }
    fn integer<T: FromStr>(name: &str, arg: &str) -> Result<T, String> {
        arg.parse::<T>()
            .map_err(|_| format!("family '{name}': '{arg}' is not a valid integer"))
    }
    let ready = |f: Family| Ok(BuildSpec::Ready(f));
    match name {
        "empty" => {
            arity(name, args, 0, "")?;
            ready(Family::Empty)
        }
        "point" => {
            arity(name, args, 0, "")?;
            ready(Family::Point)
        }
        "discrete" => {
            arity(name, args, 1, " (R)")?;
            ready(Family::Discrete(integer(name, &args[0])?))
        }
        "complete2" => {
            arity(name, args, 1, " (R)")?;
            ready(Family::Complete2(integer(name, &args[0])?))
        }
        "sympath" => {
            arity(name, args, 1, " (N)")?;
            ready(Family::Sympath(integer(name, &args[0])?))
        }
        "dihedral" => {
            arity(name, args, 1, " (N)")?;
            ready(Family::Dihedral(integer(name, &args[0])?))
        }
        "gvp" => {
            arity(name, args, 1, " (N)")?;
            ready(Family::Gvp(integer(name, &args[0])?))
        }
        "gnk" => {
            arity(name, args, 2, " (N K)")?;
            ready(Family::Gnk(
                integer(name, &args[0])?,
                integer(name, &args[1])?,
            ))
        }
        "coxeter" => {
            arity(name, args, 1, " (MATRIXFILE)")?;
            Ok(BuildSpec::CoxeterFile(PathBuf::from(&args[0])))
        }
        other => Err(format!(
            "unknown family '{other}' (expected empty, point, discrete, complete2, \
             coxeter, sympath, dihedral, gvp, or gnk)"
        )),
    }
}
