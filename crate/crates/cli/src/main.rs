use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use floercone::arithmetic::{dgs_plan, lens_d_invariants, ArithError, LensSpace, RationalJson};
use floercone::cfk::{mirror, CfkError, KnotComplex};
use floercone::cone::{build_cone, default_window, ConeError, SurgerySlope};
use floercone::contact::{contact_report, ContactCoefficient, ContactError, LegendrianData};
use floercone::hkm::{verify_hkm_strong, HkmError, DEFAULT_BUDGET};
use floercone::invariants::{invariants, InvariantError};

#[derive(Parser)]
#[command(
    name = "floercone",
    version,
    about = "Knot Floer surgery and contact invariant calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex file: gradings, filtration, d^2 = 0 and the involution.
    Validate { file: PathBuf },
    /// tau, nu and epsilon of a complex.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        mirror: bool,
    },
    /// Homology of the p/q surgery cone, by spin^c residue.
    Cone {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        window: Option<u32>,
        #[arg(long)]
        mirror: bool,
    },
    /// Contact invariant of contact x/y surgery on a Legendrian realisation.
    Contact {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        tb: i64,
        #[arg(long, allow_hyphen_values = true)]
        rot: i64,
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
    },
    /// Stabilization plan turning contact x/y surgery into +-1 surgeries.
    Dgs {
        #[arg(long, allow_hyphen_values = true)]
        tb: i64,
        #[arg(long, allow_hyphen_values = true)]
        rot: i64,
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
    },
    /// Correction terms of the lens space L(q, r).
    Dinv {
        #[arg(long)]
        q: i64,
        #[arg(long)]
        r: i64,
    },
    /// Exhaustive strong-diagram check for the lens space diagram of c1,...,cn.
    Hkm {
        #[arg(long, value_delimiter = ',', required = true)]
        coeffs: Vec<i64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// A failure with its exit code: 2 for bad input, 3 for an internal
/// inconsistency.
struct Failure {
    code: u8,
    lines: Vec<String>,
}

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Self {
            code: 2,
            lines: vec![msg.to_string()],
        }
    }

    fn internal(msg: impl ToString) -> Self {
        Self {
            code: 3,
            lines: vec![msg.to_string()],
        }
    }
}

impl From<CfkError> for Failure {
    fn from(e: CfkError) -> Self {
        match e {
            CfkError::InvalidComplex(diagnostics) => Self {
                code: 2,
                lines: diagnostics.iter().map(ToString::to_string).collect(),
            },
            CfkError::Algebra(e) => Self::internal(e),
            e => Self::input(e),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Cfk(e) => e.into(),
            InvariantError::NotKnotLike(_) => Self::input(e),
            e => Self::internal(e),
        }
    }
}

impl From<ConeError> for Failure {
    fn from(e: ConeError) -> Self {
        match e {
            ConeError::Cfk(e) => e.into(),
            ConeError::Algebra(e) => Self::internal(e),
            e => Self::input(e),
        }
    }
}

impl From<ContactError> for Failure {
    fn from(e: ContactError) -> Self {
        match e {
            ContactError::Invariant(e) => e.into(),
            ContactError::Cone(e) => e.into(),
            ContactError::Disagreement { .. } => Self::internal(e),
            e => Self::input(e),
        }
    }
}

impl From<ArithError> for Failure {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::InconsistentInput(_) => Self::internal(e),
            e => Self::input(e),
        }
    }
}

impl From<HkmError> for Failure {
    fn from(e: HkmError) -> Self {
        Self::input(e)
    }
}

fn parse_complex(path: &Path) -> Result<KnotComplex, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let complex = KnotComplex::from_json(&text)?;
    let diagnostics = complex.validate();
    if diagnostics.is_empty() {
        Ok(complex)
    } else {
        Err(CfkError::InvalidComplex(diagnostics).into())
    }
}

fn maybe_mirror(c: KnotComplex, flip: bool) -> Result<KnotComplex, Failure> {
    Ok(if flip { mirror(&c)? } else { c })
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Validate { file } => {
            let c = parse_complex(&file)?;
            Ok(json!({
                "valid": true,
                "name": c.name(),
                "generators": c.len(),
                "arrows": c.arrows().len(),
                "width": c.width(),
                "involution": c.involution().is_some(),
            }))
        }
        Command::Invariants { file, mirror } => {
            let c = maybe_mirror(parse_complex(&file)?, mirror)?;
            Ok(json!(invariants(&c)?))
        }
        Command::Cone {
            file,
            p,
            q,
            window,
            mirror,
        } => {
            let c = maybe_mirror(parse_complex(&file)?, mirror)?;
            let slope = SurgerySlope::new(p, q)?;
            let window = window.unwrap_or_else(|| default_window(&c));
            let dims = build_cone(&c, slope, window)?.homology_by_residue()?;
            let residues: Vec<Value> = dims
                .iter()
                .map(|(r, d)| json!({"residue": r, "dim": d}))
                .collect();
            Ok(json!({
                "p": p,
                "q": q,
                "window": window,
                "total_dim": dims.values().sum::<usize>(),
                "residues": residues,
            }))
        }
        Command::Contact {
            file,
            tb,
            rot,
            x,
            y,
        } => {
            let complex = parse_complex(&file)?;
            let coefficient = ContactCoefficient::new(x, y)?;
            let l = LegendrianData { tb, rot, complex };
            let (report, class) = contact_report(&l, coefficient)?;
            let mut value = json!(report);
            value["block_dim"] = json!(class.block_dim);
            value["coordinates"] = json!(class.coordinates);
            Ok(value)
        }
        Command::Dgs { tb, rot, x, y } => {
            let coefficient = ContactCoefficient::new(x, y)?;
            let mut value = json!(dgs_plan(tb, rot, coefficient)?);
            value["chern_sign_ambiguous"] = json!(true);
            Ok(value)
        }
        Command::Dinv { q, r } => {
            let d: Vec<RationalJson> = lens_d_invariants(LensSpace::new(q, r)?)
                .into_iter()
                .map(RationalJson::from)
                .collect();
            Ok(json!(d))
        }
        Command::Hkm { coeffs, budget } => Ok(json!(verify_hkm_strong(&coeffs, budget)?)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            for line in failure.lines {
                eprintln!("error: {line}");
            }
            ExitCode::from(failure.code)
        }
    }
}
