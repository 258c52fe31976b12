use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use contragenic::checks::{run_suite, Suite};
use contragenic::decomposition::{certify, decompose, degree_split};
use contragenic::exact::{parse_rational, rat, TriPoly};
use contragenic::io::{FieldDocument, Format, ReportDocument};
use contragenic::quadrature::{quad_crosscheck, QuadOrder};
use contragenic::report::{
    basis_report, decomposition_report, dims_report, gram_report, kernel_report, quadrature_report,
    Family,
};
use contragenic::{Error, Exec, Rational, VecField};

const DEFAULT_CAP: u32 = 12;

#[derive(Parser)]
#[command(name = "contragenic", version, about = "Exact monogenic, ambigenic and contragenic bases on the unit ball")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = OutFormat::Json, global = true)]
    format: OutFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Lift the degree cap (default 12).
    #[arg(long, global = true)]
    cap_override: bool,
    /// Run sequentially even when built with the parallel feature.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Latex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a basis family in one degree.
    Basis {
        /// UV, XY, ambigenic, contragenic or vec.
        kind: Family,
        #[arg(short = 'n', long)]
        degree: u32,
    },
    /// Run an exact invariant suite for degrees up to --max-degree.
    Check {
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Split a harmonic field into monogenic, antimonogenic and contragenic parts.
    Decompose {
        input: PathBuf,
        /// Drop homogeneous parts above this degree.
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Exact Gram matrix of a basis family.
    Gram {
        kind: Family,
        #[arg(short = 'n', long)]
        degree: u32,
    },
    /// Dimension table for degrees up to --max-degree.
    Dims {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Evaluate the degree-n reproducing kernel at a pair of rational points.
    BergmanEval {
        #[arg(short = 'n', long)]
        degree: u32,
        /// Comma-separated rationals, e.g. 1/2,0,1/3.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Compare exact inner products with floating quadrature.
    Quadcheck {
        /// Field document; with --other, checks this single pair.
        #[arg(long, requires = "other")]
        input: Option<PathBuf>,
        #[arg(long)]
        other: Option<PathBuf>,
        /// Uniform node count; defaults to the sufficient rule.
        #[arg(long)]
        order: Option<usize>,
        /// Degree bound of random pairs.
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
}

#[derive(Debug)]
enum Failure {
    Math(String),
    Usage(String),
    Io(String),
    Cap(u32),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Math(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
            Failure::Cap(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotHarmonic { .. } | Error::NotVecMonogenic { .. } | Error::Singular => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            match &f {
                Failure::Cap(n) => eprintln!(
                    "error: degree {n} exceeds the cap of {DEFAULT_CAP}; exact rationals grow factorially. Pass --cap-override to run anyway."
                ),
                Failure::Math(m) | Failure::Usage(m) | Failure::Io(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

/// `Ok(false)` means the report was written but records a failed check.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let c = &cli.common;
    let exec = if c.sequential { Exec::Sequential } else { Exec::default() };
    let cap = |n: u32| if n > DEFAULT_CAP && !c.cap_override { Err(Failure::Cap(n)) } else { Ok(()) };
    let (report, passed) = match &cli.command {
        Command::Basis { kind, degree } => {
            cap(*degree)?;
            (basis_report(*kind, *degree)?, true)
        }
        Command::Gram { kind, degree } => {
            cap(*degree)?;
            (gram_report(*kind, *degree, exec)?, true)
        }
        Command::Check { suite, max_degree } => {
            cap(*max_degree)?;
            let r = run_suite(*suite, *max_degree, exec)?;
            for item in r.failures() {
                let m = item.order.map(|m| format!(" m={m}")).unwrap_or_default();
                eprintln!("FAIL {} n={}{m}: {}", item.name, item.degree, item.detail);
            }
            (r.to_report(), r.passed())
        }
        Command::Dims { max_degree } => {
            cap(*max_degree)?;
            let r = dims_report(*max_degree, exec);
            let ok = r.passed == Some(true);
            (r, ok)
        }
        Command::Decompose { input, max_degree } => {
            let mut f = read_field(input)?;
            if let Some(d) = max_degree {
                f = degree_split(&f).into_iter().filter(|(n, _)| n <= d).map(|(_, p)| p).sum();
            }
            cap(f.degree().unwrap_or(0))?;
            let d = decompose(&f)?;
            let ok = certify(&f, &d)?.holds();
            (decomposition_report(&d), ok)
        }
        Command::BergmanEval { degree, x, y } => {
            cap(*degree)?;
            (kernel_report(*degree, &parse_point(x)?, &parse_point(y)?), true)
        }
        Command::Quadcheck { input, other, order, max_degree, pairs, seed, tolerance } => {
            let order = order.map(QuadOrder::uniform);
            let reports = match (input, other) {
                (Some(a), Some(b)) => vec![quad_crosscheck(&read_field(a)?, &read_field(b)?, order)],
                _ => {
                    cap(*max_degree)?;
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    (0..*pairs)
                        .map(|_| {
                            let f = random_field(&mut rng, *max_degree);
                            let g = random_field(&mut rng, *max_degree);
                            quad_crosscheck(&f, &g, order)
                        })
                        .collect()
                }
            };
            let r = quadrature_report(&reports, *tolerance);
            let ok = r.passed == Some(true);
            (r, ok)
        }
    };
    emit(&report, c)?;
    Ok(passed)
}

fn emit(report: &ReportDocument, c: &Common) -> Result<(), Failure> {
    let mut text = report.render(c.format.into());
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &c.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_field(path: &Path) -> Result<VecField, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(FieldDocument::parse(&text)?.to_field()?)
}

fn parse_point(text: &str) -> Result<[Rational; 3], Failure> {
    let parts: Vec<Rational> = text.split(',').map(|s| parse_rational(s.trim())).collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| Failure::Usage(format!("expected three comma-separated coordinates, got {text:?}")))
}

/// A few random monomials per component, total degree at most `max_degree`.
fn random_field(rng: &mut impl Rng, max_degree: u32) -> VecField {
    let mut f = VecField::zero();
    for axis in 0..3 {
        for _ in 0..rng.gen_range(1..=4) {
            let a = rng.gen_range(0..=max_degree);
            let b = rng.gen_range(0..=max_degree - a);
            let c = rng.gen_range(0..=max_degree - a - b);
            let k = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
            f = f + VecField::along(axis, TriPoly::monomial(a, b, c).scale(&k));
        }
    }
    f
}
