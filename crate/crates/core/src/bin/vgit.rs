use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vgit::job::{self, BoundsQuery, Command, JobSpec, LiuInput, OutputFormat, PairFile, PairSource, PolyInput};

#[derive(Parser)]
#[command(name = "vgit", version, about = "Exact variational GIT for hypersurface-hyperplane pairs")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "record")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Record,
    Text,
}

#[derive(Args)]
struct Dims {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
}

#[derive(Args)]
struct PairArgs {
    /// JSON file `{"f": ..., "h": ...}`.
    #[arg(long, conflicts_with_all = ["f", "h"])]
    pair: Option<PathBuf>,
    #[arg(long, requires = "h")]
    f: Option<String>,
    #[arg(long, requires = "f")]
    h: Option<String>,
}

impl PairArgs {
    fn source(self) -> Result<PairSource, String> {
        match (self.pair, self.f, self.h) {
            (Some(path), _, _) => Ok(PairSource::File(path)),
            (None, Some(f), Some(h)) => {
                Ok(PairSource::Inline(PairFile { f: PolyInput::Text(f), h: PolyInput::Text(h) }))
            }
            _ => Err("give either --pair FILE or both --f and --h".into()),
        }
    }
}

#[derive(Subcommand)]
enum Sub {
    /// Generate or load the candidate subgroups for (n, d).
    Candidates {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Drop candidates with an entry above this bound (marks the set incomplete).
        #[arg(long)]
        weight_bound: Option<i64>,
    },
    /// Candidate walls in (0, d/(n+1)].
    Walls {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Hilbert-Mumford verdict of a pair over the candidate set.
    Check {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        t: String,
        #[command(flatten)]
        pair: PairArgs,
        /// Also report mu_t for these raw weights, e.g. 2,2,-2,-2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i64>>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Limit of a pair under a normalized subgroup.
    Limit {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
    },
    /// Monomials I with <I, lambda> + t a_j >= 0.
    Families {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        t: String,
        #[arg(long)]
        j: usize,
    },
    /// Log CM coefficients a(beta), b(beta) and t(beta).
    Cm {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        beta: String,
    },
    /// beta-Donaldson-Futaki invariant of the test configuration of a subgroup.
    Df {
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        beta: String,
    },
    /// Closed-form thresholds.
    Bounds {
        #[arg(long)]
        gap: Option<u32>,
        #[arg(long)]
        quotient_order: Option<u64>,
        /// Group-order bound and sqrt(3)/2 test for a cubic surface angle.
        #[arg(long)]
        cubic_beta: Option<String>,
        /// n,d for beta_0.
        #[arg(long, value_delimiter = ',')]
        beta0: Option<Vec<u32>>,
        /// Angle to compare with beta_0.
        #[arg(long, requires = "beta0")]
        beta: Option<String>,
        /// n,d for the Z1, Z1', Z2 codimensions.
        #[arg(long, value_delimiter = ',')]
        codim: Option<Vec<u32>>,
        /// n,pair_degree,vol_hat for the volume inequality.
        #[arg(long, value_delimiter = ',')]
        liu: Option<Vec<String>>,
    },
    /// Centroid criterion for a torus-weighted section.
    Torus {
        /// JSON weight table `{"rank": r, "weights": [[...], ...]}`; defaults to the 3A2 surface.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        coeffs: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        shift: Vec<String>,
        /// Basis indices permuted by the symmetric group, e.g. 0,2,3.
        #[arg(long, value_delimiter = ',')]
        symmetric: Option<Vec<usize>>,
    },
}

fn pair2<T: Copy>(flag: &str, v: Option<Vec<T>>) -> Result<Option<(T, T)>, String> {
    match v.as_deref() {
        None => Ok(None),
        Some(&[a, b]) => Ok(Some((a, b))),
        Some(_) => Err(format!("--{flag} takes two values, e.g. 3,5")),
    }
}

fn build(sub: Sub) -> Result<Command, String> {
    Ok(match sub {
        Sub::Candidates { dims, cache, weight_bound } => {
            Command::Candidates { n: dims.n, d: dims.d, cache, weight_bound }
        }
        Sub::Walls { dims, cache } => Command::Walls { n: dims.n, d: dims.d, cache },
        Sub::Check { dims, t, pair, lambda, cache } => {
            Command::Check { n: dims.n, d: dims.d, t, pair: pair.source()?, lambda, cache }
        }
        Sub::Limit { dims, pair, lambda } => Command::Limit { n: dims.n, d: dims.d, pair: pair.source()?, lambda },
        Sub::Families { dims, lambda, t, j } => Command::Families { n: dims.n, d: dims.d, lambda, t, j },
        Sub::Cm { dims, beta } => Command::Cm { n: dims.n, d: dims.d, beta },
        Sub::Df { dims, pair, lambda, beta } => {
            Command::Df { n: dims.n, d: dims.d, pair: pair.source()?, lambda, beta }
        }
        Sub::Bounds { gap, quotient_order, cubic_beta, beta0, beta, codim, liu } => Command::Bounds(BoundsQuery {
            gap,
            quotient_order,
            cubic_beta,
            beta0: pair2("beta0", beta0)?,
            beta,
            codim: pair2("codim", codim)?,
            liu: liu
                .map(|v| -> Result<LiuInput, String> {
                    if v.len() != 3 {
                        return Err("--liu takes three values: n,pair_degree,vol_hat".into());
                    }
                    Ok(LiuInput {
                        n: v[0].parse().map_err(|_| format!("bad dimension {:?}", v[0]))?,
                        pair_degree: v[1].clone(),
                        vol_hat: v[2].clone(),
                    })
                })
                .transpose()?,
        }),
        Sub::Torus { table, coeffs, shift, symmetric } => Command::Torus { table, coeffs, shift, symmetric },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match build(cli.command) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let format = match cli.format {
        Format::Record => OutputFormat::Record,
        Format::Text => OutputFormat::Text,
    };
    let spec = JobSpec { command, output_path: cli.out, format };
    match job::run_and_write(&spec) {
        Ok(Some(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
