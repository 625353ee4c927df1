use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use bott8::brauer_wall::{bw_cycle, chessboard, spinorial_clock};
use bott8::classify::{algebra_type, primitive_idempotent};
use bott8::render::{self, Format};
use bott8::spin_reps::{bw_rep_walk, rep_label, representation_block, spin_chain, HalfInt};
use bott8::spinor::{
    bloch_vector, density_from_bloch, pure_density, real_four_vector, spinor_outer, vector_to_herm, BlochVector,
    FourVector, QubitState, TwoSpinor, Twistor,
};
use bott8::verify::{self, Target, VerifyOptions};
use bott8::{BlochVector64, DensityMatrix64, FourVector64, Herm2x64, TwoSpinor64, Twistor64};

#[derive(Parser)]
#[command(name = "bott8", version, about = "Clifford algebra classification, Brauer-Wall walks and spinor tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Seed for sampled checks and random demo inputs.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// key=value file with defaults (format, seed, pmax, qmax, nmax, order, samples, output_dir).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify Cl(p,q), or sweep 0 <= p <= pmax, 0 <= q <= qmax.
    Classify {
        #[arg(requires = "q", required_unless_present_any = ["pmax", "qmax"])]
        p: Option<u32>,
        #[arg(conflicts_with_all = ["pmax", "qmax"])]
        q: Option<u32>,
        #[arg(long)]
        pmax: Option<u32>,
        #[arg(long)]
        qmax: Option<u32>,
    },
    /// Primitive idempotent of Cl(p,q).
    Idempotent { p: u32, q: u32 },
    /// Spinorial chessboard of the given order.
    Chessboard {
        #[arg(long)]
        order: Option<u32>,
    },
    /// The eight hours of the spinorial clock.
    Clock,
    /// Brauer-Wall cycle r, Cl(0,8r) .. Cl(0,8r+8).
    Cycle { r: u32 },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
        #[arg(long)]
        qmax: Option<u32>,
        /// Classification sweep bound on p + q.
        #[arg(long)]
        nmax: Option<u32>,
        /// Samples per numeric property.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Representation tau_{l,l'}, or the labels along the walk with --walk.
    Rep {
        #[arg(requires = "l_dot", required_unless_present = "walk")]
        l: Option<HalfInt>,
        #[arg(conflicts_with = "walk")]
        l_dot: Option<HalfInt>,
        /// Number of Brauer-Wall cycles to walk.
        #[arg(long)]
        walk: Option<u32>,
    },
    /// Spin chain starting at tau_{l,l'}.
    Chain { l: HalfInt, l_dot: HalfInt },
    /// Representation block of order 1 or 2.
    Block {
        #[arg(long)]
        order: Option<u32>,
    },
    /// Null four-vector of the spinor (xi1, xi2); random when omitted.
    Spinor {
        #[arg(requires = "xi2", allow_hyphen_values = true)]
        xi1: Option<Complex64>,
        #[arg(allow_hyphen_values = true)]
        xi2: Option<Complex64>,
    },
    /// Twistor incident with the point x for the co-spinor pi.
    Twistor {
        /// Comma-separated x0,x1,x2,x3.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<f64>>,
        /// Comma-separated pi1,pi2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pi: Option<Vec<Complex64>>,
    },
    /// Density matrix of a|0> + b|1>, or of a Bloch vector.
    Qubit {
        #[arg(requires = "b", allow_hyphen_values = true, conflicts_with = "bloch")]
        a: Option<Complex64>,
        #[arg(allow_hyphen_values = true)]
        b: Option<Complex64>,
        /// Comma-separated P1,P2,P3.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        bloch: Option<Vec<f64>>,
    },
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Target::SUITES.iter().map(|t| t.name()).chain(["all"]).collect();
        format!("expected one of {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

impl From<bott8::Error> for Failure {
    fn from(e: bott8::Error) -> Self {
        match e {
            bott8::Error::CertificateFailed(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

#[derive(Default)]
struct Config {
    values: BTreeMap<String, String>,
}

const CONFIG_KEYS: [&str; 8] = ["format", "seed", "pmax", "qmax", "nmax", "order", "samples", "output_dir"];

impl Config {
    fn load(path: &PathBuf) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
            let k = k.trim();
            if !CONFIG_KEYS.contains(&k) {
                return Err(Failure::Usage(format!("{}:{}: unknown key '{k}'", path.display(), i + 1)));
            }
            values.insert(k.to_string(), v.trim().to_string());
        }
        Ok(Config { values })
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.values
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Failure::Usage(format!("config value for '{key}' is invalid: {v}")))
            })
            .transpose()
    }

    fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, Failure> {
        Ok(match flag {
            Some(v) => v,
            None => self.get(key)?.unwrap_or(default),
        })
    }
}

#[derive(Serialize)]
struct SpinorOut {
    xi: TwoSpinor64,
    x: FourVector64,
    lorentz_norm: f64,
    herm: Herm2x64,
}

#[derive(Serialize)]
struct TwistorOut {
    x: FourVector64,
    twistor: Twistor64,
    norm: f64,
}

#[derive(Serialize)]
struct QubitOut {
    state: Option<TwoSpinor64>,
    rho: DensityMatrix64,
    bloch: BlochVector64,
    purity: f64,
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Runtime(e.to_string()))
}

fn numeric_only(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage("csv output is not available for numeric demos".into()));
    }
    Ok(())
}

fn arity<T: Copy, const N: usize>(flag: &str, v: Vec<T>) -> Result<[T; N], Failure> {
    <[T; N]>::try_from(v).map_err(|v| Failure::Usage(format!("--{flag} takes {N} comma-separated values, got {}", v.len())))
}

fn cfmt(z: Complex64) -> String {
    format!("{:.12}{:+.12}i", z.re, z.im)
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let format: Format = match cli.format {
        Some(f) => f.into(),
        None => match config.values.get("format") {
            Some(v) => v.parse().map_err(|e: bott8::Error| Failure::Usage(e.to_string()))?,
            None => Format::Text,
        },
    };
    let seed = config.pick(cli.seed, "seed", verify::DEFAULT_SEED)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;

    let out = match cli.command {
        Command::Classify { p, q, pmax, qmax } => match (p, q) {
            (Some(p), Some(q)) => render::classification(&algebra_type(p, q), format)?,
            _ => {
                let pmax = config.pick(pmax, "pmax", 7)?;
                let qmax = config.pick(qmax, "qmax", 7)?;
                let all: Vec<_> = (0..=pmax)
                    .flat_map(|p| (0..=qmax).map(move |q| algebra_type(p, q)))
                    .collect();
                render::classifications(&all, format)?
            }
        },
        Command::Idempotent { p, q } => render::idempotent(&primitive_idempotent(p, q)?, format)?,
        Command::Chessboard { order } => {
            render::chessboard(&chessboard(config.pick(order, "order", 1)?)?, format)?
        }
        Command::Clock => render::clock(&spinorial_clock(), format)?,
        Command::Cycle { r } => render::cycle(r, &bw_cycle(r), format)?,
        Command::Verify {
            target,
            qmax,
            nmax,
            samples,
        } => {
            let defaults = VerifyOptions::default();
            let opts = VerifyOptions {
                seed,
                q_max: config.pick(qmax, "qmax", defaults.q_max)?,
                n_max: config.pick(nmax, "nmax", defaults.n_max)?,
                samples: config.pick(samples, "samples", defaults.samples)?,
            };
            let report = verify::run(target, &opts)?;
            ok = report.passed();
            render::report(&report, format)?
        }
        Command::Rep { l, l_dot, walk } => match (l, l_dot, walk) {
            (_, _, Some(n)) => render::walk(&bw_rep_walk(n)?, format)?,
            (Some(l), Some(ld), None) => render::rep(&rep_label(l.twice(), ld.twice()), format)?,
            _ => return Err(Failure::Usage("rep needs <L> <L_DOT> or --walk <N>".into())),
        },
        Command::Chain { l, l_dot } => render::chain(&spin_chain(l, l_dot)?, format)?,
        Command::Block { order } => {
            render::block(&representation_block(config.pick(order, "order", 1)?)?, format)?
        }
        Command::Spinor { xi1, xi2 } => {
            numeric_only(format)?;
            let xi = match (xi1, xi2) {
                (Some(a), Some(b)) => TwoSpinor::new(a, b),
                _ => TwoSpinor::random(&mut rng),
            };
            let raw = spinor_outer(&xi, &xi.conj());
            let x = real_four_vector(&raw, 1e-12 * (1.0 + raw.iter().map(|z| z.norm_sqr()).sum::<f64>()))
                .ok_or_else(|| Failure::Verification("outer product is not real".into()))?;
            let res = SpinorOut {
                xi,
                x,
                lorentz_norm: x.lorentz_norm(),
                herm: vector_to_herm(&x),
            };
            match format {
                Format::Json => json(&res)?,
                _ => format!(
                    "xi = ({}, {})\nx = ({:.12}, {:.12}, {:.12}, {:.12})\nS^2(x) = {:.3e}\n",
                    cfmt(xi.c[0]),
                    cfmt(xi.c[1]),
                    x.x[0],
                    x.x[1],
                    x.x[2],
                    x.x[3],
                    res.lorentz_norm
                ),
            }
        }
        Command::Twistor { x, pi } => {
            numeric_only(format)?;
            let x = match x {
                Some(v) => {
                    let [a, b, c, d] = arity("x", v)?;
                    FourVector::new(a, b, c, d)
                }
                None => FourVector::random(&mut rng),
            };
            let pi = match pi {
                Some(v) => {
                    let [a, b] = arity("pi", v)?;
                    TwoSpinor::new(a, b)
                }
                None => TwoSpinor::random(&mut rng),
            };
            let z = Twistor::incident(&x, pi);
            let res = TwistorOut { x, twistor: z, norm: z.norm() };
            match format {
                Format::Json => json(&res)?,
                _ => format!(
                    "x = ({}, {}, {}, {})\npi = ({}, {})\nomega = ({}, {})\nnorm = {:.12}\n",
                    x.x[0],
                    x.x[1],
                    x.x[2],
                    x.x[3],
                    cfmt(pi.c[0]),
                    cfmt(pi.c[1]),
                    cfmt(z.omega.c[0]),
                    cfmt(z.omega.c[1]),
                    res.norm
                ),
            }
        }
        Command::Qubit { a, b, bloch } => {
            numeric_only(format)?;
            let (state, rho) = match (a, b, bloch) {
                (_, _, Some(p)) => (None, density_from_bloch(&BlochVector { p: arity("bloch", p)? })?),
                (Some(a), Some(b), None) => {
                    let st = QubitState::new(a, b)?;
                    (Some(st), pure_density(&st))
                }
                _ => {
                    let st = QubitState::random(&mut rng);
                    (Some(st), pure_density(&st))
                }
            };
            let res = QubitOut {
                state: state.map(|s| TwoSpinor::new(s.a, s.b)),
                rho,
                bloch: bloch_vector(&rho),
                purity: rho.purity(),
            };
            match format {
                Format::Json => json(&res)?,
                _ => {
                    let mut s = String::new();
                    if let Some(st) = state {
                        let _ = writeln!(s, "psi = {}|0> + {}|1>", cfmt(st.a), cfmt(st.b));
                    }
                    for i in 0..2 {
                        let _ = writeln!(s, "rho[{i}] = [{}, {}]", cfmt(rho.m[(i, 0)]), cfmt(rho.m[(i, 1)]));
                    }
                    let p = res.bloch.p;
                    let _ = writeln!(s, "P = ({:.12}, {:.12}, {:.12}), |P| = {:.12}", p[0], p[1], p[2], res.bloch.norm());
                    let _ = writeln!(s, "Tr rho^2 = {:.12}", res.purity);
                    s
                }
            }
        }
    };

    if let Some(path) = &cli.output {
        let path = match config.values.get("output_dir") {
            Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
            _ => path.clone(),
        };
        fs::write(&path, &out).map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))?;
        return Ok((String::new(), ok));
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("bott8: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("bott8: {msg}");
            eprintln!("Run 'bott8 --help' for usage.");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) | Err(Failure::Runtime(msg)) => {
            eprintln!("bott8: {msg}");
            ExitCode::from(1)
        }
    }
}
