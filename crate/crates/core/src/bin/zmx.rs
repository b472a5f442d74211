use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zmx::cli::{self, describe, emit_report, format_perron, parse_matrix, run_verify, ReportFormat, VerifyConfig};
use zmx::construct::{
    bdsw_matrix, circulant_conditions, circulant_pz, from_cyclic_params, type_d, CirculantParams, CyclicParams,
    SignMode, TypeDParams,
};
use zmx::cyclic::{cyclic_det, cyclic_inverse, cyclic_products, is_bdsw, is_full, is_inverse_cyclic};
use zmx::graph::{digraph_of, maybee_inverse};
use zmx::matcore::{inverse, parse_rational, Rational};
use zmx::zclass::Classifier;
use zmx::{Error, Matrix};

#[derive(Parser)]
#[command(name = "zmx", version, about = "Exact inverse cyclic, bdsw and Z-matrix tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Z-class taxonomy, cyclic products and the exact inverse.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact inverse.
    Invert {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Inverse cyclic property, d, c, closed-form determinant.
    CyclicCheck { file: PathBuf },
    /// Digraph of the matrix.
    Digraph {
        file: PathBuf,
        /// Emit Graphviz DOT (the only format).
        #[arg(long)]
        dot: bool,
    },
    /// rho_r(B) of a nonnegative matrix by bisection.
    Perron {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "1/1000000000")]
        tol: String,
    },
    /// Build a matrix from family parameters.
    #[command(subcommand)]
    Gen(Gen),
    /// Seeded theorem-verification campaign.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Order range `lo..hi` (inclusive) or a single order.
        #[arg(long, default_value = "2..6")]
        n: String,
        /// Trials per order.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Entry magnitude bound for random parameters.
        #[arg(long, default_value_t = 5)]
        max: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Cyclic,
    Maybee,
}

#[derive(Args)]
struct OutFormat {
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Gen {
    /// Type-D matrix from a_1 < ... < a_n.
    Typed {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<String>,
        #[command(flatten)]
        out: OutFormat,
    },
    /// Inverse cyclic matrix from its diagonal, super-diagonal and (n,1) entry.
    Cyclic {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        diag: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        sup: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        corner: String,
        #[command(flatten)]
        out: OutFormat,
    },
    /// bdsw matrix from its diagonal, super-diagonal and (n,1) entry.
    Bdsw {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        diag: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        sup: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        corner: String,
        #[command(flatten)]
        out: OutFormat,
    },
    /// p(Z) = alpha_1 I + alpha_2 Z + ... for the cyclic shift Z.
    Circulant {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        alpha: Vec<String>,
        /// Also report whether the sign conditions hold in this mode.
        #[arg(long, value_enum)]
        check: Option<Mode>,
        #[command(flatten)]
        out: OutFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Nonneg,
    Nonpos,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("zmx: {msg}");
            ExitCode::from(2)
        }
    }
}

fn classifier() -> Result<Classifier, Failure> {
    match std::env::var(cli::ORDER_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Classifier::with_cap)
            .map_err(|_| Failure::Usage(format!("{} must be a positive integer, got {v:?}", cli::ORDER_CAP_ENV))),
        Err(_) => Ok(Classifier::default()),
    }
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn rationals(flag: &str, items: &[String]) -> Result<Vec<Rational>, Failure> {
    items.iter().map(|s| rational(flag, s)).collect()
}

fn rational(flag: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s.trim()).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn render(a: &Matrix, json: bool) -> String {
    if json {
        format!("{}\n", cli::to_json(a))
    } else {
        cli::to_plain(a)
    }
}

fn order_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("--n: expected `lo..hi` or a single order, got {s:?}"));
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => parse(s).map(|n| (n, n)),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let classifier = classifier()?;
    match cli.command {
        Command::Classify { file, json } => {
            let a = read_matrix(&file)?;
            let (r, info) = describe(&a, &classifier)?;
            let format = if json { ReportFormat::Json } else { ReportFormat::Text };
            Ok(emit_report(&r, &info, format))
        }
        Command::Invert { file, method, json } => {
            let a = read_matrix(&file)?;
            let b = match method {
                Method::Oracle => inverse(&a)?,
                Method::Cyclic => cyclic_inverse(&a)?,
                Method::Maybee => maybee_inverse(&a)?,
            };
            Ok(render(&b, json))
        }
        Command::CyclicCheck { file } => {
            let a = read_matrix(&file)?;
            let p = cyclic_products(&a);
            let ic = is_inverse_cyclic(&a);
            let mut out = format!(
                "inverse_cyclic: {ic}\nfull: {}\nbdsw: {}\nd: {}\nc: {}\nd-c: {}\n",
                is_full(&a),
                is_bdsw(&a),
                p.d,
                p.c,
                p.d_minus_c()
            );
            if ic {
                out += &format!("det: {}\n", cyclic_det(&a)?);
            }
            Ok(out)
        }
        Command::Digraph { file, dot: _ } => Ok(digraph_of(&read_matrix(&file)?).to_dot()),
        Command::Perron { file, r, tol } => {
            let b = read_matrix(&file)?;
            let tol = rational("tol", &tol)?;
            let est = classifier.perron_r(&b, r, &tol)?;
            Ok(format!(
                "{}\nargmax: {:?}\n",
                format_perron(r, &est.lower, &est.upper, &est.value),
                est.argmax.members()
            ))
        }
        Command::Gen(g) => generate(g),
        Command::Verify { theorem, n, trials, seed, max } => {
            let theorem = theorem.parse()?;
            let (lo, hi) = order_range(&n)?;
            let mut cfg = VerifyConfig::new(theorem, lo, hi, trials, seed);
            if max < 1 {
                return Err(Failure::Usage("--max must be at least 1".into()));
            }
            cfg.range = zmx::construct::random::IntRange::symmetric(max);
            cfg.classifier = classifier;
            let summary = run_verify(&cfg)?;
            if summary.passed() {
                Ok(summary.to_string())
            } else {
                Err(Failure::Verification(summary.to_string()))
            }
        }
    }
}

fn generate(g: Gen) -> Result<String, Failure> {
    match g {
        Gen::Typed { a, out } => {
            let p = TypeDParams::new(rationals("a", &a)?)?;
            Ok(render(&type_d(&p), out.json))
        }
        Gen::Cyclic { diag, sup, corner, out } => {
            let p =
                CyclicParams::new(rationals("diag", &diag)?, rationals("sup", &sup)?, rational("corner", &corner)?)?;
            Ok(render(&from_cyclic_params(&p), out.json))
        }
        Gen::Bdsw { diag, sup, corner, out } => {
            let m = bdsw_matrix(&rationals("diag", &diag)?, &rationals("sup", &sup)?, &rational("corner", &corner)?)?;
            Ok(render(&m, out.json))
        }
        Gen::Circulant { alpha, check, out } => {
            let p = CirculantParams::new(rationals("alpha", &alpha)?)?;
            let mut s = render(&circulant_pz(&p), out.json);
            if let Some(mode) = check {
                let mode = match mode {
                    Mode::Nonneg => SignMode::Nonneg,
                    Mode::Nonpos => SignMode::Nonpos,
                };
                s += &format!("conditions: {}\n", circulant_conditions(&p, mode)?);
            }
            Ok(s)
        }
    }
}
