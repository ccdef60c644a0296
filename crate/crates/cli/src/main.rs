//! `ratinterp`: exact rational interpolation and μ-bases from the command line.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use input::{InputError, Problem};
use ratinterp::delta::{
    interpolation_trace, minimal_delta_solutions_with_limit, sample_solution_of_delta_with_limit,
    MAX_SCAN_ENV,
};
use ratinterp::kappa::sample_solution_of_kappa_with_limit;
use ratinterp::oracle::{
    admissible_kappa_below_n, min_degree_weak_pair, min_mu_oracle, weak_pairs_upto,
};
use ratinterp::{
    admissible_delta_set, admissible_kappa, critical_indices, extended_euclid, hermite_polynomial,
    hermite_rational, minimal_basis, mu_basis, nodal_poly, InterpolationData, PlaneParametrization,
};

#[derive(Parser)]
#[command(
    name = "ratinterp",
    version,
    about = "Exact rational interpolation via the extended Euclidean algorithm"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArg {
    /// Problem file (JSON); reads stdin when omitted or "-"
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full Euclidean table of (f, g), or of (r0, r1) for a parametrization
    Eea(FileArg),
    /// δ-degree questions: minimal basis, solutions, admissible set
    Delta {
        #[command(flatten)]
        file: FileArg,
        /// Print the minimal basis with mu1, mu2
        #[arg(long, conflicts_with_all = ["solve", "set"])]
        basis: bool,
        /// Also print the bases at every critical index (with --basis)
        #[arg(long, requires = "basis")]
        all_bases: bool,
        /// Sample an interpolant of exactly this δ-degree
        #[arg(long, value_name = "DELTA", conflicts_with = "set")]
        solve: Option<usize>,
        /// Print the admissible δ-degree set
        #[arg(long)]
        set: bool,
    },
    /// κ-degree questions: admissible set, minimum, solutions, Hermite splits
    Kappa {
        #[command(flatten)]
        file: FileArg,
        /// Print the full report (isolated values with witnesses and the tail)
        #[arg(long, conflicts_with_all = ["min", "solve", "hermite_d"])]
        set: bool,
        /// Print the minimal κ-degree and its solutions
        #[arg(long, conflicts_with_all = ["solve", "hermite_d"])]
        min: bool,
        /// Sample an interpolant of exactly this κ-degree
        #[arg(long, value_name = "KAPPA", conflicts_with = "hermite_d")]
        solve: Option<usize>,
        /// Solve the rational Hermite problem with deg a <= D, deg b <= n - D - 1
        #[arg(long, value_name = "D")]
        hermite_d: Option<usize>,
    },
    /// μ-basis of the plane parametrization t -> (r0(t), r1(t))
    MuBasis {
        #[command(flatten)]
        file: FileArg,
        /// First coordinate as an ascending JSON coefficient array, e.g. '[0,0,6,0,-4]'
        #[arg(long, requires = "r1")]
        r0: Option<String>,
        /// Second coordinate as an ascending JSON coefficient array
        #[arg(long, requires = "r0")]
        r1: Option<String>,
        /// Also print the homogenized moving lines
        #[arg(long)]
        projective: bool,
    },
    /// Rational Hermite interpolation for the degree split D
    HermiteD {
        /// Numerator degree bound
        d: usize,
        #[command(flatten)]
        file: FileArg,
    },
    /// Brute-force linear-algebra answers, for cross-checking
    #[command(hide = true)]
    Oracle(FileArg),
}

enum Failure {
    Input(InputError),
    Domain(ratinterp::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<ratinterp::Error> for Failure {
    fn from(e: ratinterp::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Text and JSON forms of one command's result.
struct Output {
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            report(cli.json, "input", &e.to_string());
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            report(cli.json, "domain", &e.to_string());
            ExitCode::from(1)
        }
    }
}

fn report(as_json: bool, kind: &str, message: &str) {
    if as_json {
        eprintln!("{}", json!({ "error": kind, "message": message }));
    } else {
        eprintln!("error: {message}");
    }
}

fn scan_limit() -> Result<Option<usize>, InputError> {
    match std::env::var(MAX_SCAN_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            InputError::field(
                MAX_SCAN_ENV,
                format!("expected a nonnegative integer, found {v:?}"),
            )
        }),
        Err(_) => Ok(None),
    }
}

fn load(file: &FileArg) -> Result<Problem, InputError> {
    input::parse_problem(&input::read_json(file.file.as_deref())?)
}

fn load_data(file: &FileArg) -> Result<InterpolationData, InputError> {
    match load(file)? {
        Problem::Interpolation(data) => Ok(data),
        Problem::Parametrization(_) => Err(InputError::field(
            "points",
            "this command needs interpolation data",
        )),
    }
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Eea(file) => eea(load(file)?),
        Command::Delta {
            file,
            basis,
            all_bases,
            solve,
            set,
        } => {
            let data = load_data(file)?;
            let limit = scan_limit()?;
            if *set {
                delta_set(&data)
            } else if let Some(d) = solve {
                let rf = sample_solution_of_delta_with_limit(&data, *d, limit)?;
                Ok(Output {
                    text: format!("{rf}\n"),
                    json: json!({ "delta": d, "solution": render::function(&rf) }),
                })
            } else if *basis {
                Ok(delta_basis(&data, *all_bases))
            } else {
                delta_report(&data, limit)
            }
        }
        Command::Kappa {
            file,
            set,
            min,
            solve,
            hermite_d,
        } => {
            let data = load_data(file)?;
            if let Some(d) = hermite_d {
                hermite(&data, *d)
            } else if let Some(k) = solve {
                let rf = sample_solution_of_kappa_with_limit(&data, *k, scan_limit()?)?;
                Ok(Output {
                    text: format!("{rf}\n"),
                    json: json!({ "kappa": k, "solution": render::function(&rf) }),
                })
            } else if *min && !*set {
                Ok(kappa_min(&data))
            } else {
                Ok(kappa_set(&data))
            }
        }
        Command::MuBasis {
            file,
            r0,
            r1,
            projective,
        } => {
            let param = match (r0, r1) {
                (Some(r0), Some(r1)) => input::parametrization(
                    input::parse_poly_str(r0, "--r0")?,
                    input::parse_poly_str(r1, "--r1")?,
                )?,
                _ => match load(file)? {
                    Problem::Parametrization(p) => p,
                    Problem::Interpolation(_) => {
                        return Err(
                            InputError::field("r0", "this command needs a parametrization").into(),
                        )
                    }
                },
            };
            mu(&param, *projective)
        }
        Command::HermiteD { d, file } => hermite(&load_data(file)?, *d),
        Command::Oracle(file) => Ok(oracle(load(file)?)),
    }
}

fn eea(problem: Problem) -> Result<Output, Failure> {
    let trace = match &problem {
        Problem::Interpolation(data) => match interpolation_trace(data) {
            Some(t) => t,
            None => {
                let f = nodal_poly(data);
                return Ok(Output {
                    text: format!("all values are zero: g = 0, f = {f}; no table\n"),
                    json: json!({ "n": data.n(), "N": null, "rows": [], "f": render::poly(&f), "g": [] }),
                });
            }
        },
        Problem::Parametrization(p) => extended_euclid(p.r0(), p.r1())?,
    };
    let mut json = render::trace(&trace);
    if let Problem::Interpolation(data) = &problem {
        json["f"] = render::poly(&nodal_poly(data));
        json["g"] = render::poly(&hermite_polynomial(data));
    }
    Ok(Output {
        text: format!("N = {}\n{}", trace.len(), render::trace_table(&trace)),
        json,
    })
}

fn basis_text(b: &ratinterp::MinimalBasis) -> String {
    let rows = match b.rows {
        Some((i, j)) => format!(" (rows {i}, {j})"),
        None => String::new(),
    };
    format!(
        "mu1 = {}, mu2 = {}{rows}\npair1: a = {}, b = {}\npair2: a = {}, b = {}\n",
        b.mu1, b.mu2, b.pair1.a, b.pair1.b, b.pair2.a, b.pair2.b
    )
}

fn delta_basis(data: &InterpolationData, all: bool) -> Output {
    let b = minimal_basis(data);
    let trace = interpolation_trace(data);
    let critical = trace.as_ref().map(critical_indices).unwrap_or_default();
    let mut text = basis_text(&b);
    if !critical.is_empty() {
        let list: Vec<String> = critical.iter().map(ToString::to_string).collect();
        text.push_str(&format!("critical indices: {}\n", list.join(", ")));
    }
    let mut json = render::basis(&b, &critical);
    if all {
        if let Some(trace) = &trace {
            let others: Vec<_> = critical
                .iter()
                .map(|&i| ratinterp::delta::basis_at(trace, i))
                .collect();
            for (i, other) in critical.iter().zip(&others) {
                text.push_str(&format!(
                    "\nbasis at critical index {i}:\n{}",
                    basis_text(other)
                ));
            }
            json["all_bases"] = others.iter().map(|o| render::basis(o, &critical)).collect();
        }
    }
    Output { text, json }
}

fn delta_set(data: &InterpolationData) -> Result<Output, Failure> {
    let set = admissible_delta_set(data)?;
    Ok(Output {
        text: format!("admissible delta: {set}\n"),
        json: render::degree_set(&set),
    })
}

fn delta_report(data: &InterpolationData, limit: Option<usize>) -> Result<Output, Failure> {
    let r = minimal_delta_solutions_with_limit(data, limit)?;
    let critical = interpolation_trace(data)
        .map(|t| critical_indices(&t))
        .unwrap_or_default();
    let mut text = format!("minimal delta = {}\n", r.minimal_delta);
    match r.kind {
        ratinterp::SolutionKind::Unique => {
            text.push_str(&format!("unique solution: {}\n", r.representative));
        }
        ratinterp::SolutionKind::Family => {
            let (a1, b1, a2, b2) = (
                &r.basis.pair1.a,
                &r.basis.pair1.b,
                &r.basis.pair2.a,
                &r.basis.pair2.b,
            );
            text.push_str(&format!(
                "family: ({a2} + p*({a1})) / ({b2} + p*({b1})), deg p <= {}\n",
                r.free_degree.unwrap_or(0)
            ));
            let excluded: Vec<String> = r
                .exclusions
                .iter()
                .map(|e| format!("p({}) != {}", e.node, e.forbidden))
                .collect();
            if !excluded.is_empty() {
                text.push_str(&format!("subject to: {}\n", excluded.join(", ")));
            }
            if let Some(lambda) = &r.lambda {
                text.push_str(&format!("member (p = {lambda}): {}\n", r.representative));
            }
        }
    }
    Ok(Output {
        text,
        json: render::delta_report(&r, &critical),
    })
}

fn kappa_min(data: &InterpolationData) -> Output {
    let r = admissible_kappa(data);
    let mut text = format!("minimal kappa = {}\n", r.minimal_kappa);
    for s in &r.minimal_solutions {
        text.push_str(&format!("{s}\n"));
    }
    Output {
        text,
        json: json!({
            "minimal_kappa": r.minimal_kappa,
            "minimal_solutions": r.minimal_solutions.iter().map(render::function).collect::<Vec<_>>(),
        }),
    }
}

fn kappa_set(data: &InterpolationData) -> Output {
    let r = admissible_kappa(data);
    let values: Vec<String> = r
        .isolated_values()
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut text = format!(
        "admissible kappa: {{{}}} ∪ {{κ ≥ {}}}\nminimal kappa = {}\n",
        values.join(", "),
        r.tail_threshold,
        r.minimal_kappa
    );
    for w in &r.isolated {
        text.push_str(&format!(
            "kappa {} (k = {}): {}\n",
            w.kappa, w.k, w.solution
        ));
    }
    Output {
        text,
        json: render::kappa_report(&r),
    }
}

fn hermite(data: &InterpolationData, d: usize) -> Result<Output, Failure> {
    let solution = hermite_rational(data, d).map_err(|e| match e {
        ratinterp::Error::SplitOutOfRange { .. } => {
            Failure::Input(InputError::field("d", e.to_string()))
        }
        other => Failure::Domain(other),
    })?;
    let text = match &solution {
        Some(rf) => format!("{rf}\n"),
        None => "no solution\n".to_string(),
    };
    Ok(Output {
        text,
        json: json!({ "d": d, "solution": solution.as_ref().map(render::function) }),
    })
}

fn mu(param: &PlaneParametrization, projective: bool) -> Result<Output, Failure> {
    let b = mu_basis(param)?;
    let n = param.n();
    let mut text = format!("mu = {}\nlow:  {}\nhigh: {}\n", b.mu, b.low, b.high);
    if projective {
        text.push_str(&format!(
            "projective low:  {}\nprojective high: {}\n",
            b.low.projective(b.mu),
            b.high.projective(n - b.mu)
        ));
    }
    Ok(Output {
        text,
        json: render::mu_basis(&b, n, projective),
    })
}

fn oracle(problem: Problem) -> Output {
    match problem {
        Problem::Interpolation(data) => {
            let n = data.n();
            let dims: Vec<usize> = (0..=n)
                .map(|d| weak_pairs_upto(&data, d, d).len())
                .collect();
            let kappas: Vec<usize> = admissible_kappa_below_n(&data).into_iter().collect();
            let min = min_degree_weak_pair(&data);
            Output {
                text: format!(
                    "min weak degree = {min}\ndimensions by degree: {dims:?}\nkappa below n: {kappas:?}\n"
                ),
                json: json!({ "min_degree_weak_pair": min, "dimensions": dims, "kappa_below_n": kappas }),
            }
        }
        Problem::Parametrization(param) => {
            let mu = min_mu_oracle(&param);
            Output {
                text: format!("min mu = {mu}\n"),
                json: json!({ "min_mu": mu }),
            }
        }
    }
}
