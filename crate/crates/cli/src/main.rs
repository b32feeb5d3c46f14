use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use tropikit::dequant::{amoeba_line_sample, newton_set, newton_set_exact, tropical_curve_2d, Polytope};
use tropikit::interval::{interval_bellman_with, IntervalMatrix};
use tropikit::io;
use tropikit::linalg::{kleene_star, shortest_paths, BellmanSolver, GaussSeidel, Jacobi, SemiringMatrix, Star};
use tropikit::semiring::axioms::check_builtin;
use tropikit::transform::{convolution, hopf_lax_evolve, legendre, EvolveParams, Grid};
use tropikit::{deformed_add, DeformationParam, ExtReal, Polynomial, Rational, Semiring64};

#[derive(Parser)]
#[command(name = "tropikit", version, about = "Idempotent and tropical algebra in batch")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semiring axioms on random elements.
    Axioms {
        /// bool, maxplus, minplus, maxmin, nonneg or deformed:<h>.
        #[arg(long)]
        semiring: String,
        /// Random triples per law.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All-pairs shortest paths of a weighted graph.
    Sp {
        /// Graph file: header `n <count>`, then `src dst weight` lines.
        #[arg(long)]
        graph: PathBuf,
        /// Iteration cap (default: node count + 1).
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Least solution of X = H ⊙ X ⊕ F.
    Bellman {
        /// Square matrix file.
        #[arg(long = "h")]
        h: PathBuf,
        /// Right-hand side matrix file.
        #[arg(long = "f")]
        f: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Jacobi)]
        method: Method,
        /// Iteration cap (default: rows + 1).
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Interval solution of the Bellman equation of an interval graph.
    IntervalBellman {
        /// Interval graph file: header `n <count>`, then `src dst wmin wmax` lines.
        #[arg(long)]
        graph: PathBuf,
        /// Semiring the edge weights live in.
        #[arg(long, default_value = "minplus")]
        semiring: String,
        /// Solve for paths into this node only (default: all pairs).
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Jacobi)]
        method: Method,
        /// Iteration cap for each endpoint system.
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Newton polytope of a polynomial file.
    Newton {
        /// Polynomial file: header `n <dim>`, then `coeff d1 .. dn` lines.
        #[arg(long)]
        poly: PathBuf,
        /// Fail instead of returning an unreduced polytope above dimension 2.
        #[arg(long)]
        exact: bool,
    },
    /// Corner locus of a bivariate max-plus polynomial as CSV.
    Tropcurve {
        /// Polynomial file with `n 2`; each coefficient is the tropical constant c.
        #[arg(long)]
        poly: PathBuf,
    },
    /// Sampled amoeba of the line x + y + 1 = 0 as CSV.
    Amoeba {
        /// Deformation parameter.
        #[arg(long = "h")]
        h: f64,
        /// Minimum number of points.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Legendre transform sup_x (ξx + φ(x)) of a max-plus function.
    Legendre {
        /// Sampled max-plus function.
        #[arg(long)]
        input: PathBuf,
        /// First ξ of the output grid.
        #[arg(long, allow_hyphen_values = true)]
        xi_start: f64,
        /// Spacing of the output grid.
        #[arg(long)]
        xi_step: f64,
        /// Number of output points.
        #[arg(long)]
        xi_count: usize,
    },
    /// Idempotent convolution of two sampled functions.
    Convolve {
        /// Sampled function; must share step and convention with `--right`.
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Hopf–Lax evolution min_y [S0(y) + m(x - y)²/(2t)].
    Hopflax {
        /// Sampled min-plus initial condition S0.
        #[arg(long)]
        input: PathBuf,
        /// Evolution time.
        #[arg(long)]
        t: f64,
        /// Mass.
        #[arg(long, default_value_t = 1.0)]
        m: f64,
    },
    /// Table of h, u, v, u ⊕_h v and its excess over max(u, v).
    DequantDemo {
        /// Comma-separated deformation parameters.
        #[arg(long = "h", value_delimiter = ',', required = true)]
        h: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Jacobi,
    GaussSeidel,
    /// Kleene star of H times F.
    Star,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] tropikit::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    AxiomViolation(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.code(),
            CliError::Io { .. } => "IoError",
            CliError::Usage(_) => "UsageError",
            CliError::AxiomViolation(_) => "AxiomViolation",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_usage() => 2,
            CliError::Lib(_) | CliError::AxiomViolation(_) => 1,
            CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn solver(method: Method) -> Box<dyn BellmanSolver<f64>> {
    match method {
        Method::Jacobi => Box::new(Jacobi),
        Method::GaussSeidel => Box::new(GaussSeidel),
        Method::Star => Box::new(Star),
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("TROPIKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("TROPIKIT_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(command: Command) -> CliResult<String> {
    match command {
        Command::Axioms { semiring, trials, seed } => {
            let spec: Semiring64 = semiring.parse()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let report = check_builtin(&spec, trials, &mut rng).expect("parsed specs are built-in");
            let mut out = format!("semiring\t{}\ncomparison\t{}\n", report.semiring, report.comparison);
            for c in &report.checks {
                let status = match (c.expected, c.ok()) {
                    (true, true) => "holds",
                    (false, true) => "fails as expected",
                    (true, false) => "VIOLATED",
                    (false, false) => "UNEXPECTEDLY HOLDS",
                };
                out.push_str(&format!("{}\t{}/{}\t{status}\n", c.law, c.violations, c.trials));
            }
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::AxiomViolation(format!(
                    "{} does not satisfy its laws",
                    report.semiring
                )))
            }
        }
        Command::Sp { graph, max_iter } => {
            let g = io::parse_graph::<f64>(&read(&graph)?)?;
            let d = match max_iter {
                None => shortest_paths(&g)?,
                Some(k) => {
                    let a = g.adjacency(Semiring64::MinPlus)?;
                    kleene_star(&a, Some(k)).map_err(|e| match e {
                        tropikit::Error::NonConvergent { iterations, .. } => {
                            tropikit::Error::NegativeCycle { iterations }
                        }
                        other => other,
                    })?
                }
            };
            Ok(io::write_matrix(&d))
        }
        Command::Bellman { h, f, method, max_iter } => {
            let h = io::parse_matrix::<f64>(&read(&h)?)?;
            let f = io::parse_matrix::<f64>(&read(&f)?)?;
            let x = solver(method).solve(&h, &f, max_iter)?;
            Ok(io::write_matrix(&x))
        }
        Command::IntervalBellman {
            graph,
            semiring,
            target,
            method,
            max_iter,
        } => {
            let spec: Semiring64 = semiring.parse()?;
            let g = io::parse_interval_graph::<f64>(&read(&graph)?)?;
            let n = g.node_count();
            let h = g.adjacency(spec.clone())?;
            let f = match target {
                None => SemiringMatrix::identity(n, spec),
                Some(t) if t < n => {
                    let mut f = SemiringMatrix::zeros(n, 1, spec.clone());
                    f.set(t, 0, spec.one())?;
                    f
                }
                Some(t) => return Err(CliError::Usage(format!("target {t} out of range for {n} nodes"))),
            };
            let f = IntervalMatrix::point(f)?;
            let x = interval_bellman_with(solver(method).as_ref(), &h, &f, max_iter)?;
            Ok(io::write_interval_matrix(&x))
        }
        Command::Newton { poly, exact } => {
            let f: Polynomial = io::parse_polynomial(&read(&poly)?)?;
            let p: Polytope<Rational> = if exact { newton_set_exact(&f)? } else { newton_set(&f)? };
            Ok(format!("{}\n", io::format_polytope(&p)))
        }
        Command::Tropcurve { poly } => {
            let terms = io::parse_tropical_terms::<Rational>(&read(&poly)?)?;
            let curve = tropical_curve_2d(terms)?;
            if curve.merged_duplicates() > 0 {
                eprintln!(
                    "note: merged {} term(s) with repeated exponents, keeping the larger constant",
                    curve.merged_duplicates()
                );
            }
            Ok(io::write_curve(&curve))
        }
        Command::Amoeba { h, samples } => {
            let pts = amoeba_line_sample(DeformationParam::new(h)?, samples)?;
            Ok(io::write_points(&pts))
        }
        Command::Legendre {
            input,
            xi_start,
            xi_step,
            xi_count,
        } => {
            let phi = io::parse_sampled::<f64>(&read(&input)?)?;
            let xi = Grid::new(xi_start, xi_step, xi_count)?;
            Ok(io::write_sampled(&legendre(&phi, &xi)?))
        }
        Command::Convolve { left, right } => {
            let a = io::parse_sampled::<f64>(&read(&left)?)?;
            let b = io::parse_sampled::<f64>(&read(&right)?)?;
            Ok(io::write_sampled(&convolution(&a, &b)?))
        }
        Command::Hopflax { input, t, m } => {
            let s0 = io::parse_sampled::<f64>(&read(&input)?)?;
            Ok(io::write_sampled(&hopf_lax_evolve(&s0, EvolveParams::new(t, m)?)?))
        }
        Command::DequantDemo { h, u, v } => {
            let (eu, ev) = (ExtReal::new(u)?, ExtReal::new(v)?);
            let mut out = String::new();
            for h in h {
                let value = deformed_add(eu, ev, DeformationParam::new(h)?)?.get();
                let gap = value - u.max(v);
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    io::format_real(h),
                    io::format_real(u),
                    io::format_real(v),
                    io::format_real(value),
                    io::format_real(gap)
                ));
            }
            Ok(out)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads()
        .and_then(|()| run(cli.command))
        .and_then(|text| emit(cli.output.as_deref(), &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ERROR {}: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
