//! Command-line interface: complex/cochain file ingestion, cup-i products,
//! the verification suite, cohomology and Steenrod square computations.
//!
//! Exit codes: 0 on success (all selected checks pass), 1 when verification
//! finds a counterexample, 2 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use steenrod::checks;
use steenrod::classic;
use steenrod::cohomology;
use steenrod::cupi::{self, DiagonalFamily};
use steenrod::f2::{F2Matrix, F2Vector};
use steenrod::simplicial::{Cochain, Simplex, SimplicialComplex};

const DEFAULT_DIM_CEILING: usize = 7;
const DIM_CEILING_VAR: &str = "CUPI_MAX_DIM";

#[derive(Parser)]
#[command(
    name = "steenrod",
    version,
    about = "Exact mod-2 cup-i products, verification checks, and Steenrod squares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite on both cup-i constructions.
    Verify(VerifyArgs),
    /// Compute the cup-i product of two cochains over a complex.
    Cup(CupArgs),
    /// Print the tensor terms of the degree-i diagonal of one simplex.
    Nabla(NablaArgs),
    /// Compute Steenrod square matrices on the cohomology of a complex.
    Sq(SqArgs),
    /// Compute mod-2 cohomology dimensions and class representatives.
    Cohomology(CohomologyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension bound for every selected check (per-check defaults otherwise).
    #[arg(long)]
    dim: Option<usize>,
    /// Cap on the resolution degree i.
    #[arg(long)]
    max_i: Option<usize>,
    /// Comma-separated subset of: chainmap, nondegeneracy, freeness, naturality, compare.
    #[arg(
        long,
        default_value = "chainmap,nondegeneracy,freeness,naturality,compare"
    )]
    checks: String,
    /// Also write the report JSON to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CupArgs {
    #[arg(long)]
    complex: PathBuf,
    /// Resolution degree of the product.
    #[arg(long)]
    i: usize,
    #[arg(long)]
    alpha: PathBuf,
    #[arg(long)]
    beta: PathBuf,
    #[arg(long, value_enum, default_value_t = Formula::New)]
    formula: Formula,
    /// Also write the resulting cochain to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NablaArgs {
    /// Ambient standard simplex dimension.
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    i: usize,
    /// Comma-separated, strictly increasing vertex list, e.g. 0,1,2.
    #[arg(long)]
    simplex: String,
}

#[derive(Args)]
struct SqArgs {
    #[arg(long)]
    complex: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Formula::New)]
    formula: Formula,
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    New,
    Classic,
}

impl Formula {
    fn family(self) -> &'static dyn DiagonalFamily {
        match self {
            Formula::New => &cupi::Family,
            Formula::Classic => &classic::Family,
        }
    }
}

/// On-disk cochain document: homogeneous degree plus a support list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CochainFile {
    degree: usize,
    support: Vec<Vec<usize>>,
}

impl CochainFile {
    fn from_cochain(cochain: &Cochain) -> Self {
        Self {
            degree: cochain.degree(),
            support: cochain
                .support()
                .iter()
                .map(|s| s.vertices().to_vec())
                .collect(),
        }
    }

    fn into_cochain(self, complex: &SimplicialComplex) -> Result<Cochain> {
        let mut support = F2Vector::zero();
        for vertices in self.support {
            let simplex = Simplex::new(vertices).context("invalid support simplex")?;
            if !complex.contains(&simplex) {
                bail!("support simplex {simplex} is not a face of the complex");
            }
            if support.contains(&simplex) {
                bail!("support simplex {simplex} is listed twice");
            }
            support.toggle(simplex);
        }
        Cochain::new(self.degree, support)
            .map_err(|e| anyhow!("cochain is not homogeneous of degree {}: {e}", self.degree))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Cup(args) => cmd_cup(args),
        Command::Nabla(args) => cmd_nabla(args),
        Command::Sq(args) => cmd_sq(args),
        Command::Cohomology(args) => cmd_cohomology(args),
    }
}

fn dim_ceiling() -> Result<usize> {
    match std::env::var(DIM_CEILING_VAR) {
        Ok(raw) => raw
            .parse()
            .map_err(|_| anyhow!("{DIM_CEILING_VAR} must be a non-negative integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_DIM_CEILING),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let ceiling = dim_ceiling()?;
    if let Some(dim) = args.dim {
        if dim > ceiling {
            bail!("--dim {dim} exceeds the dimension ceiling {ceiling} (override with {DIM_CEILING_VAR})");
        }
    }
    let selected: Vec<&str> = args
        .checks
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if selected.is_empty() {
        bail!("--checks selected nothing");
    }
    for name in &selected {
        if ![
            "chainmap",
            "nondegeneracy",
            "freeness",
            "naturality",
            "compare",
        ]
        .contains(name)
        {
            bail!("unknown check {name:?}; expected chainmap, nondegeneracy, freeness, naturality or compare");
        }
    }

    // per-check default ranges, chosen so the full suite runs in seconds
    let dim_for = |default: usize| args.dim.unwrap_or(default).min(ceiling);
    let families: [&dyn DiagonalFamily; 2] = [&cupi::Family, &classic::Family];

    let mut reports: Vec<serde_json::Value> = Vec::new();
    let mut all_pass = true;
    for name in &selected {
        match *name {
            "compare" => {
                let report = checks::compare_constructions(
                    &classic::Family,
                    &cupi::Family,
                    dim_for(5),
                    args.max_i,
                );
                all_pass &= report.pass;
                reports.push(serde_json::to_value(&report)?);
            }
            check => {
                for family in families {
                    let report = match check {
                        "chainmap" => checks::check_chain_map(family, dim_for(6), args.max_i),
                        "nondegeneracy" => {
                            checks::check_nondegeneracy(family, dim_for(5), args.max_i)
                        }
                        "freeness" => checks::check_freeness(family, dim_for(4), args.max_i),
                        "naturality" => checks::check_naturality(family, dim_for(5), args.max_i),
                        _ => unreachable!("validated above"),
                    };
                    all_pass &= report.pass;
                    reports.push(serde_json::to_value(&report)?);
                }
            }
        }
    }

    emit(&reports, args.out.as_deref())?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_cup(args: CupArgs) -> Result<ExitCode> {
    let complex = read_complex(&args.complex)?;
    let alpha = read_cochain(&args.alpha, &complex)?;
    let beta = read_cochain(&args.beta, &complex)?;
    let product = cupi::cup_i_with(args.formula.family(), &alpha, &beta, args.i, &complex);
    emit(&CochainFile::from_cochain(&product), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_nabla(args: NablaArgs) -> Result<ExitCode> {
    let vertices = args
        .simplex
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .context("simplex entries must be integers")
        })
        .collect::<Result<Vec<_>>>()?;
    let simplex = Simplex::new(vertices).context("invalid simplex")?;
    if simplex.vertices().iter().any(|&v| v > args.dim) {
        bail!(
            "simplex {simplex} does not fit in the standard {}-simplex",
            args.dim
        );
    }
    for (a, b) in cupi::diagonal(args.i, &simplex).iter() {
        println!("{a}⊗{b}");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SquareBlock {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    matrix: Vec<Vec<u8>>,
}

#[derive(Serialize)]
struct SquareFile {
    k: usize,
    degrees: Vec<SquareBlock>,
}

fn cmd_sq(args: SqArgs) -> Result<ExitCode> {
    let complex = read_complex(&args.complex)?;
    let basis = cohomology::cohomology_basis(&complex)?;
    let matrices = cohomology::steenrod_square_on(args.formula.family(), &basis, &complex, args.k)?;
    let degrees = matrices
        .iter()
        .enumerate()
        .map(|(degree, matrix)| SquareBlock {
            degree,
            source_dim: matrix.num_rows(),
            target_dim: matrix.columns().len(),
            matrix: dense_rows(matrix),
        })
        .collect();
    emit(&SquareFile { k: args.k, degrees }, None)?;
    Ok(ExitCode::SUCCESS)
}

fn dense_rows(matrix: &F2Matrix<usize>) -> Vec<Vec<u8>> {
    matrix
        .rows()
        .iter()
        .map(|row| {
            matrix
                .columns()
                .iter()
                .map(|c| u8::from(row.contains(c)))
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct CohomologyFile {
    dims: Vec<usize>,
    representatives: Vec<Vec<Vec<Vec<usize>>>>,
}

fn cmd_cohomology(args: CohomologyArgs) -> Result<ExitCode> {
    let complex = read_complex(&args.complex)?;
    let basis = cohomology::cohomology_basis(&complex)?;
    let dims = basis.dims();
    let representatives = (0..dims.len())
        .map(|n| {
            (0..dims[n])
                .map(|j| {
                    let rep = basis.representative(n, j).expect("indices in range");
                    rep.support()
                        .iter()
                        .map(|s| s.vertices().to_vec())
                        .collect()
                })
                .collect()
        })
        .collect();
    emit(
        &CohomologyFile {
            dims,
            representatives,
        },
        None,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read complex file {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("invalid complex file {}", path.display()))
}

fn read_cochain(path: &Path, complex: &SimplicialComplex) -> Result<Cochain> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read cochain file {}", path.display()))?;
    let file: CochainFile = serde_json::from_str(&text)
        .with_context(|| format!("invalid cochain file {}", path.display()))?;
    file.into_cochain(complex)
        .with_context(|| format!("invalid cochain in {}", path.display()))
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    println!("{text}");
    if let Some(path) = out {
        fs::write(path, format!("{text}\n"))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}
