//! Command-line front end: sign tables, products, e↔i translation,
//! property reports, oracle sweeps, and the ℓ² experiments.
//!
//! Exit status: 0 on success, 1 when a check or oracle sweep fails,
//! 2 on usage errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use twistalg::cd_oracle::run_oracle_sweep;
use twistalg::clifford::{format_e, parse_e, Blade};
use twistalg::experiments::{
    norm_growth, orthogonality_scan, DecayProfile, NormGrowthConfig, OrthogonalityConfig,
};
use twistalg::twist::check_properties;
use twistalg::{
    AlgebraContext, BasisProductTable, Element64, FiniteGroup, GroupElement, Twist, TwistTable,
};

#[derive(Parser)]
#[command(
    name = "twistalg",
    version,
    about = "Twisted group algebras over the XOR group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for data printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistKind {
    Cyd,
    Clf,
    Hadamard,
    Trivial,
    GradeParity,
    XorParity,
}

impl TwistKind {
    fn to_twist(self) -> Twist {
        match self {
            TwistKind::Cyd => Twist::CayleyDickson,
            TwistKind::Clf => Twist::Clifford,
            TwistKind::Hadamard => Twist::Hadamard,
            TwistKind::Trivial => Twist::Trivial,
            TwistKind::GradeParity => Twist::GradeParity,
            TwistKind::XorParity => Twist::XorParity,
        }
    }
}

/// Twist selection: a built-in rule by name, or an explicit ±1 sign table
/// loaded from a `.json` ({"kind","n","signs"}) or `.csv` file.
#[derive(Args)]
struct TwistArg {
    /// Built-in twist kind.
    #[arg(long, value_enum)]
    twist: Option<TwistKind>,

    /// Sign table file (.json or .csv) to use instead of a built-in kind.
    #[arg(long, conflicts_with = "twist")]
    twist_file: Option<PathBuf>,
}

impl TwistArg {
    fn resolve(&self, n: u32) -> Result<Twist> {
        match (&self.twist, &self.twist_file) {
            (Some(kind), None) => Ok(kind.to_twist()),
            (None, Some(path)) => {
                let table = load_twist_table(path)?;
                if table.n() != n {
                    bail!(
                        "twist table in {} is over G_{}, but --n is {n}",
                        path.display(),
                        table.n()
                    );
                }
                Ok(table.to_twist()?)
            }
            _ => bail!("exactly one of --twist or --twist-file is required"),
        }
    }
}

fn load_twist_table(path: &Path) -> Result<TwistTable> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if path.extension().is_some_and(|ext| ext == "json") {
        Ok(TwistTable::from_json(&text)?)
    } else {
        Ok(TwistTable::from_csv(&text)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the 2ⁿ×2ⁿ sign matrix of a twist.
    TwistTable {
        #[command(flatten)]
        twist: TwistArg,
        #[arg(long)]
        n: u32,
    },
    /// Print the basis multiplication table; cell ±k means ±i_k.
    MulTable {
        #[command(flatten)]
        twist: TwistArg,
        #[arg(long)]
        n: u32,
    },
    /// Multiply two elements given in text form, e.g. "1 - 2*i3".
    Mul {
        #[command(flatten)]
        twist: TwistArg,
        #[arg(long)]
        n: u32,
        x: String,
        y: String,
    },
    /// Translate terms between e-notation and i-notation, one per line.
    Translate {
        #[arg(required = true)]
        terms: Vec<String>,
    },
    /// Check the twist axioms exhaustively and print the report.
    CheckProperties {
        #[command(flatten)]
        twist: TwistArg,
        /// Dimension exponent of the dyadic group to check over.
        #[arg(long, required_unless_present = "group_csv")]
        n: Option<u32>,
        /// Check over a group given by a Cayley-table CSV instead of G_n.
        #[arg(long)]
        group_csv: Option<PathBuf>,
    },
    /// Run both oracle-equivalence sweeps over all pairs of G_n.
    OracleCheck {
        #[arg(long)]
        n: u32,
    },
    /// Print the left-regular matrix L_p (associative twists only).
    MatrixRep {
        #[command(flatten)]
        twist: TwistArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: GroupElement,
    },
    /// Numerical exploration of products on truncated ℓ² sequences.
    Experiment {
        #[command(subcommand)]
        experiment: ExperimentCommand,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Max of |<i_p x, i_q x>| / |x|^2 over random x under the
    /// Cayley-Dickson twist; exits 1 if the n<4 orthogonality check fails.
    Orthogonality {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 64)]
        trials: u32,
        #[arg(long, env = "TWISTALG_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Trend table of |x*y| / (|x||y|) for random decayed sequences as the
    /// truncation dimension grows. Exploratory: no pass/fail claim.
    NormGrowth {
        #[arg(long, value_enum, default_value_t = TwistKind::Trivial)]
        twist: TwistKind,
        #[arg(long, default_value_t = 4)]
        n_min: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = DecayKind::Geometric)]
        decay: DecayKind,
        /// Ratio of the geometric envelope r^p.
        #[arg(long, default_value_t = 0.5)]
        ratio: f64,
        /// Exponent of the power-law envelope (p+1)^(-s).
        #[arg(long, default_value_t = 1.0)]
        exponent: f64,
        #[arg(long, default_value_t = 64)]
        trials: u32,
        #[arg(long, env = "TWISTALG_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecayKind {
    Geometric,
    PowerLaw,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn unsupported_format(command: &str) -> anyhow::Error {
    anyhow!("--format csv is not supported for {command}")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::TwistTable { twist, n } => {
            let table = TwistTable::materialize(&twist.resolve(n)?, n)?;
            match format {
                Format::Csv => print!("{}", table.to_csv()),
                Format::Json => println!("{}", table.to_json()),
                Format::Text => {
                    let dim = table.dim() as GroupElement;
                    for p in 0..dim {
                        let row: Vec<String> =
                            (0..dim).map(|q| format!("{:+}", table.get(p, q))).collect();
                        println!("{}", row.join(" "));
                    }
                }
            }
        }
        Command::MulTable { twist, n } => {
            let ctx = AlgebraContext::new(twist.resolve(n)?, n)?;
            let table = BasisProductTable::new(&ctx);
            match format {
                Format::Csv => print!("{}", table.to_csv()),
                Format::Json => println!("{}", table.to_json()),
                Format::Text => {
                    let width = table
                        .cells
                        .iter()
                        .flatten()
                        .map(String::len)
                        .max()
                        .unwrap_or(2);
                    for row in &table.cells {
                        let cells: Vec<String> =
                            row.iter().map(|c| format!("{c:>width$}")).collect();
                        println!("{}", cells.join(" "));
                    }
                }
            }
        }
        Command::Mul { twist, n, x, y } => {
            let ctx = AlgebraContext::new(twist.resolve(n)?, n)?;
            let x = Element64::parse(n, &x)?;
            let y = Element64::parse(n, &y)?;
            let product = ctx.mul(&x, &y)?;
            match format {
                Format::Csv => return Err(unsupported_format("mul")),
                Format::Json => println!("{}", product.to_json()),
                Format::Text => println!("{product}"),
            }
        }
        Command::Translate { terms } => {
            let mut outputs = Vec::with_capacity(terms.len());
            for term in &terms {
                outputs.push(translate_term(term)?);
            }
            match format {
                Format::Csv => return Err(unsupported_format("translate")),
                Format::Json => println!("{}", serde_json::to_string(&outputs)?),
                Format::Text => {
                    for line in outputs {
                        println!("{line}");
                    }
                }
            }
        }
        Command::CheckProperties {
            twist,
            n,
            group_csv,
        } => {
            let group = match (&group_csv, n) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    FiniteGroup::from_csv(&text)?
                }
                (None, Some(n)) => FiniteGroup::dyadic(n)?,
                (None, None) => unreachable!("clap requires one of --n / --group-csv"),
            };
            let twist = match (&twist.twist, &twist.twist_file) {
                (Some(kind), None) => kind.to_twist(),
                (None, Some(path)) => {
                    let table = load_twist_table(path)?;
                    if let Some(n) = n {
                        if table.n() != n {
                            bail!(
                                "twist table in {} is over G_{}, but --n is {n}",
                                path.display(),
                                table.n()
                            );
                        }
                    }
                    table.to_twist()?
                }
                _ => bail!("exactly one of --twist or --twist-file is required"),
            };
            let report = check_properties(&twist, &group)?;
            match format {
                Format::Csv => return Err(unsupported_format("check-properties")),
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                Format::Text => print!("{}", report.render_text()),
            }
        }
        Command::OracleCheck { n } => {
            let report = run_oracle_sweep(n)?;
            match format {
                Format::Csv => return Err(unsupported_format("oracle-check")),
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                Format::Text => print!("{}", report.render_text()),
            }
            if !report.pass() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::MatrixRep { twist, n, p } => {
            let ctx = AlgebraContext::new(twist.resolve(n)?, n)?;
            let matrix = ctx.matrix_rep(p)?;
            match format {
                Format::Csv => print!("{}", matrix.to_csv()),
                Format::Json => println!("{}", serde_json::to_string(&matrix)?),
                Format::Text => {
                    for row in matrix.rows() {
                        let mut line = String::new();
                        for (i, e) in row.iter().enumerate() {
                            if i > 0 {
                                line.push(' ');
                            }
                            write!(line, "{e:>2}")?;
                        }
                        println!("{line}");
                    }
                }
            }
        }
        Command::Experiment { experiment } => {
            let (report, failed) = match experiment {
                ExperimentCommand::Orthogonality { n, trials, seed } => {
                    let report = orthogonality_scan(&OrthogonalityConfig { n, trials, seed })?;
                    let failed = report.verdicts.iter().any(|v| v.contains("FAIL"));
                    (report, failed)
                }
                ExperimentCommand::NormGrowth {
                    twist,
                    n_min,
                    n_max,
                    decay,
                    ratio,
                    exponent,
                    trials,
                    seed,
                } => {
                    let decay = match decay {
                        DecayKind::Geometric => DecayProfile::Geometric { ratio },
                        DecayKind::PowerLaw => DecayProfile::PowerLaw { exponent },
                    };
                    let report = norm_growth(&NormGrowthConfig {
                        twist: twist.to_twist(),
                        n_lo: n_min,
                        n_hi: n_max,
                        decay,
                        trials,
                        seed,
                    })?;
                    (report, false)
                }
            };
            match format {
                Format::Csv => return Err(unsupported_format("experiment")),
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.render_text()),
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// e-notation in, i-notation out, and vice versa. `1` is treated as the
/// scalar blade in e-notation.
fn translate_term(term: &str) -> Result<String> {
    let term = term.trim();
    if let Some(digits) = term.strip_prefix('i') {
        let index: GroupElement = digits
            .parse()
            .map_err(|_| anyhow!("bad i-notation index in `{term}`"))?;
        Ok(format_e(Blade::new(index)))
    } else {
        let blade = parse_e(term)?;
        Ok(format!("i{}", blade.index()))
    }
}
