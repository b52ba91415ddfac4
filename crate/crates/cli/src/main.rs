use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use inoue_core::autq::{aut_structure, build_h, cardinality_bound, compute_q};
use inoue_core::gamma::{is_standard_form_direct, standard_form_witness, SurfaceParams};
use inoue_core::units::fundamental_unit;
use inoue_core::{presets, Error, FieldDescriptor};

mod paramfile;
mod report;

use paramfile::LoadError;
use report::Analysis;

const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_NOT_STANDARD: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(name = "inoue", version, about = "Automorphism component groups of Inoue surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a parameter file.
    Analyze {
        path: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        machine: bool,
        /// Skip the brute-force normalizer cross-check.
        #[arg(long)]
        no_oracle: bool,
        /// Also compute Q for 2r and check that Q(r) embeds.
        #[arg(long)]
        double_r: bool,
    },
    /// Runs the built-in parameter sets and compares with the known answers.
    Examples {
        /// Also write each set as `<name>.params` into this directory.
        #[arg(long, value_name = "DIR")]
        write: Option<PathBuf>,
    },
    /// Fundamental unit of the field for `theta` and surface type `+` or `-`.
    FundamentalUnit {
        theta: i64,
        #[arg(value_name = "TYPE", allow_hyphen_values = true)]
        surface: String,
    },
    /// Reports whether a parameter file is in standard form.
    CheckStandardForm { path: PathBuf },
    /// Prints the upper bound n*|Norm(1-u)| on |Q|.
    Bound { path: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::NotStandardForm(_) => EXIT_NOT_STANDARD,
        Error::InvalidDelta(_)
        | Error::InvalidField(_)
        | Error::InvalidParams(_)
        | Error::DegenerateBasis
        | Error::NotInvariant(_)
        | Error::NotUnit(_)
        | Error::OutsideLattice(..)
        | Error::NotSublattice
        | Error::ZeroScalar
        | Error::NotPureIrrational(_)
        | Error::Unsupported(_) => EXIT_INVALID,
        _ => EXIT_INTERNAL,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code(&e), e.to_string())
    }
}

fn load(path: &Path) -> Result<SurfaceParams, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    paramfile::parse(&text).map_err(|e| match e {
        LoadError::Parse(pe) => Failure::new(EXIT_PARSE, format!("{}: {pe}", path.display())),
        LoadError::Invalid(err) => Failure::new(exit_code(&err), format!("{}: {err}", path.display())),
    })
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn analyze(path: &Path, machine: bool, no_oracle: bool, double_r: bool) -> Result<(), Failure> {
    let params = load(path)?;
    let aut = aut_structure(&params, !no_oracle, double_r)?;
    let analysis = Analysis::new(params, aut)?;
    if machine {
        let json = serde_json::to_string_pretty(&report::machine(&analysis))
            .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
        emit(&format!("{json}\n"));
    } else {
        emit(&report::human(&analysis));
    }
    match analysis.disagreement_count() {
        0 => Ok(()),
        k => Err(Failure::new(EXIT_INTERNAL, format!("oracle disagrees with the conditions on {k} elements"))),
    }
}

fn examples(write: Option<&Path>) -> Result<(), Failure> {
    let mut failures = 0;
    for preset in presets::all()? {
        if let Some(dir) = write {
            let file = dir.join(format!("{}.params", preset.name));
            std::fs::write(&file, paramfile::render(&preset.params))
                .map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", file.display())))?;
        }
        let h = build_h(&preset.params)?;
        let q = compute_q(&preset.params)?;
        let computed = q.classification.to_string();
        let ok = h.order() == preset.expected_h_order
            && q.order() == preset.expected_q_order
            && computed == preset.expected_q;
        if !ok {
            failures += 1;
        }
        println!(
            "{:<20} expected |H| = {}, |Q| = {}, Q = {}; computed |H| = {}, |Q| = {}, Q = {}  {}",
            preset.name,
            preset.expected_h_order,
            preset.expected_q_order,
            preset.expected_q,
            h.order(),
            q.order(),
            computed,
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::new(EXIT_INTERNAL, format!("{failures} built-in examples do not match")))
    }
}

fn fundamental_unit_cmd(theta: i64, surface: &str) -> Result<(), Failure> {
    let ty = paramfile::parse_surface_type(surface)
        .ok_or_else(|| Failure::new(EXIT_PARSE, format!("type must be `+` or `-`, found `{surface}`")))?;
    let d = FieldDescriptor::new(theta, ty)?;
    let eta = fundamental_unit(d);
    println!("{}", eta.sigma1().to_reduced_string());
    println!("coordinates: {eta}");
    Ok(())
}

fn check_standard_form(path: &Path) -> Result<(), Failure> {
    let params = load(path)?;
    let yes = is_standard_form_direct(&params);
    println!("standard form: {}", if yes { "yes" } else { "no" });
    if !yes {
        println!("witness (1-u)/u*e + n21*n22/2*x1 - n11*n12/2*x2 = {}", standard_form_witness(&params));
    }
    Ok(())
}

fn bound(path: &Path) -> Result<(), Failure> {
    let params = load(path)?;
    println!("{}", cardinality_bound(&params)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { path, machine, no_oracle, double_r } => analyze(path, *machine, *no_oracle, *double_r),
        Command::Examples { write } => examples(write.as_deref()),
        Command::FundamentalUnit { theta, surface } => fundamental_unit_cmd(*theta, surface),
        Command::CheckStandardForm { path } => check_standard_form(path),
        Command::Bound { path } => bound(path),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
