use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfkit::catalog::{self, CatalogId, Family};
use hopfkit::cobar::{CochainComplex, DEFAULT_MAX_TENSOR};
use hopfkit::{Error, HopfPresentation, Interrupt, PresentationDocument, Report};
use serde_json::{json, Value};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "Exact computations with finite-dimensional Hopf algebras over GF(p)")]
struct Cli {
    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a catalog entry as a presentation document.
    Catalog {
        #[arg(long)]
        p: u32,
        /// D1, D2, L1 or L2.
        #[arg(long)]
        family: String,
        #[arg(long)]
        case: u32,
    },
    /// Check the Hopf algebra axioms of a document.
    Verify { file: PathBuf },
    /// Basis of the primitive elements.
    Primitives { file: PathBuf },
    /// Dimensions of the coradical filtration.
    Coradical { file: PathBuf },
    /// The dual Hopf algebra as a presentation document.
    Dual { file: PathBuf },
    /// Isomorphism invariants.
    Fingerprint { file: PathBuf },
    /// Cohomology H^n(k, H) of the cobar complex, for n ≤ 2.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Build and cross-check every catalog entry at p.
    Classify {
        #[arg(long)]
        p: u32,
    },
}

/// Result of a command: the JSON document for stdout and whether every
/// mathematical check passed.
struct Outcome {
    value: Value,
    passed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, passed: true }
    }

    fn report(report: &Report) -> Self {
        let value = serde_json::to_value(report).expect("report serializes");
        Outcome { value, passed: report.passed() }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource(_) | Error::Cancelled => EXIT_RESOURCE,
        Error::NotHopf(_) | Error::TheoremViolation(_) | Error::NormalityViolation(_) | Error::Internal(_) => {
            EXIT_CHECK_FAILED
        }
        Error::InvalidPrime(_)
        | Error::Dimension { .. }
        | Error::FieldMismatch { .. }
        | Error::InvalidInput(_)
        | Error::Unsupported(_) => EXIT_BAD_INPUT,
    }
}

fn max_tensor() -> Result<usize, Error> {
    match std::env::var("HOPFKIT_MAX_TENSOR") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("HOPFKIT_MAX_TENSOR={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_TENSOR),
    }
}

fn load(path: &PathBuf, verbose: bool) -> Result<HopfPresentation, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?
    };
    let h = PresentationDocument::parse(&text)?.to_presentation()?;
    if verbose {
        eprintln!("loaded {}: dim {} over GF({})", path.display(), h.dim(), h.field().p());
    }
    Ok(h)
}

/// Loads a document and requires the Hopf axioms, returning the failed
/// report otherwise.
fn load_hopf(path: &PathBuf, verbose: bool) -> Result<Result<HopfPresentation, Report>, Error> {
    let h = load(path, verbose)?;
    let report = h.check_hopf();
    if !report.passed() {
        return Ok(Err(report));
    }
    Ok(Ok(h.with_antipode()?))
}

fn sparse(v: &[u32]) -> Vec<(usize, u32)> {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let verbose = cli.verbose;
    match &cli.command {
        Command::Catalog { p, family, case } => {
            let id = CatalogId::new(family.parse::<Family>()?, *case)?;
            if verbose {
                eprintln!("building {id} over GF({p})");
            }
            let h = catalog::build(*p, id)?;
            Ok(Outcome::ok(serde_json::to_value(PresentationDocument::from_presentation(&h)).unwrap()))
        }
        Command::Verify { file } => Ok(Outcome::report(&load(file, verbose)?.check_hopf())),
        Command::Primitives { file } => {
            let h = load(file, verbose)?;
            let prim = h.primitives();
            let basis: Vec<_> = prim.basis_vectors().iter().map(|v| sparse(v)).collect();
            Ok(Outcome::ok(json!({ "dimension": prim.dim(), "basis": basis })))
        }
        Command::Coradical { file } => match load_hopf(file, verbose)? {
            Err(r) => Ok(Outcome::report(&r)),
            Ok(h) => Ok(Outcome::ok(h.coradical_filtration_with(&Interrupt::new())?.to_json())),
        },
        Command::Dual { file } => match load_hopf(file, verbose)? {
            Err(r) => Ok(Outcome::report(&r)),
            Ok(h) => Ok(Outcome::ok(serde_json::to_value(PresentationDocument::from_presentation(&h.dual()?)).unwrap())),
        },
        Command::Fingerprint { file } => match load_hopf(file, verbose)? {
            Err(r) => Ok(Outcome::report(&r)),
            Ok(h) => Ok(Outcome::ok(serde_json::to_value(catalog::fingerprint(&h)?).unwrap())),
        },
        Command::Cohomology { file, degree } => {
            if *degree > 2 {
                return Err(Error::Unsupported(format!("cohomology is available in degrees 0..=2, got {degree}")));
            }
            match load_hopf(file, verbose)? {
                Err(r) => Ok(Outcome::report(&r)),
                Ok(h) => {
                    let limit = max_tensor()?;
                    if verbose {
                        eprintln!("building the cobar complex to degree {} (limit {limit})", degree + 1);
                    }
                    let c = CochainComplex::build_with(&h, degree + 1, limit, &Interrupt::new())?;
                    Ok(Outcome::ok(c.cohomology(*degree)?.to_json()))
                }
            }
        }
        Command::Classify { p } => {
            if verbose {
                eprintln!("verifying the catalog over GF({p})");
            }
            Ok(Outcome::report(&catalog::verify_classification(*p)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.value).expect("json output");
            // A closed pipe on stdout is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
