//! Command-line front end for the betadual crates.
//!
//! Exact results are printed with rationals as "p/q" strings. Every command
//! can render as JSON, CSV or plain text.

pub mod suite;

use std::fmt::Write as _;

use betadual_core::dunkl::{hermite_poly, laguerre_poly};
use betadual_core::exact::{parse_rat, MPoly, Rat};
use betadual_core::hypergeom::HyperSeries;
use betadual_core::moments::{chiral_duality_check, gaussian_duality_check, jack_average, DualityReport, Ensemble};
use betadual_core::symfunc::{jack, Basis};
use betadual_core::Partition;
use betadual_numerics::checks::{sample_statistic, EigenSampler, GaussianModel, McComparison, Statistic};
use betadual_numerics::edge::{edge_convergence_report, s_grid};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use suite::{Status, SuiteOptions, SuiteResult};

#[derive(Debug, Parser)]
#[command(name = "betadual", version, about = "Exact and numerical checks of beta-ensemble dualities")]
pub struct RunConfig {
    /// Worker threads; defaults to the available parallelism. Use 1 for
    /// bit-reproducible Monte Carlo runs.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    Gaussian,
    Chiral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Hermite,
    Laguerre,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Dense,
    Tridiagonal,
}

fn rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// One entry of a comma-separated list that may be wrapped in brackets.
fn rational_item(s: &str) -> Result<Rat, String> {
    rational(s.trim().trim_start_matches('[').trim_end_matches(']'))
}

fn statistic(s: &str) -> Result<Statistic, String> {
    Statistic::parse(s).ok_or_else(|| format!("unknown statistic {s:?}; use p<k> or e2"))
}

/// The ensemble flags shared by `avg` and `sample`. β may be given directly
/// or through α = 2/β.
#[derive(Debug, Clone, Args)]
pub struct EnsembleArgs {
    #[arg(long, value_enum, default_value_t = EnsembleArg::Gaussian)]
    pub ensemble: EnsembleArg,
    #[arg(long, value_parser = rational, conflicts_with = "alpha")]
    pub beta: Option<Rat>,
    #[arg(long, value_parser = rational)]
    pub alpha: Option<Rat>,
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long, value_parser = rational, default_value = "0")]
    pub gamma: Rat,
}

impl EnsembleArgs {
    fn build(&self) -> betadual_core::Result<Ensemble> {
        let beta = match (&self.beta, &self.alpha) {
            (Some(b), _) => b.clone(),
            (None, Some(a)) if *a > Rat::from_integer(0.into()) => Rat::from_integer(2.into()) / a,
            (None, Some(_)) => return Err(usage("alpha must be positive")),
            (None, None) => Rat::from_integer(2.into()),
        };
        match self.ensemble {
            EnsembleArg::Gaussian => Ensemble::gaussian(beta, self.n),
            EnsembleArg::Chiral => Ensemble::chiral(beta, self.n, self.gamma.clone()),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jack polynomial P_λ^(α) in the monomial or power-sum basis.
    Jack {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = rational)]
        alpha: Rat,
        #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
        basis: BasisArg,
    },
    /// Exact ⟨P_λ⟩ over a Gaussian or chiral ensemble.
    Avg {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[command(flatten)]
        ensemble: EnsembleArgs,
    },
    /// Both sides of the Jack-average duality and their ratio.
    Dual {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = rational)]
        alpha: Rat,
        #[arg(long = "N")]
        n: usize,
        #[arg(long = "N-dual")]
        n_dual: usize,
        #[arg(long, value_enum, default_value_t = EnsembleArg::Gaussian)]
        ensemble: EnsembleArg,
        #[arg(long, value_parser = rational, default_value = "0")]
        gamma: Rat,
        #[arg(long = "gamma-dual", value_parser = rational)]
        gamma_dual: Option<Rat>,
    },
    /// Multivariate Hermite or Laguerre polynomial.
    Hermite {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = rational)]
        alpha: Rat,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyKind::Hermite)]
        kind: PolyKind,
        #[arg(long, value_parser = rational, default_value = "0")]
        gamma: Rat,
    },
    /// Coefficients of a truncated pFq series in Jack polynomials.
    Hyper {
        #[arg(long, value_parser = rational_item, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<Rat>,
        #[arg(long, value_parser = rational_item, value_delimiter = ',', allow_hyphen_values = true)]
        b: Vec<Rat>,
        #[arg(long, value_parser = rational)]
        alpha: Rat,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 4)]
        cutoff: u32,
    },
    /// Runs the verification suite or one criterion of it.
    Verify {
        /// `all`, a criterion number, or a criterion name.
        target: String,
        #[arg(long)]
        quick: bool,
        /// Restricts the exact criteria to one α.
        #[arg(long, value_parser = rational)]
        alpha: Option<Rat>,
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Monte Carlo estimate of a spectral statistic against its exact value.
    Sample {
        #[command(flatten)]
        ensemble: EnsembleArgs,
        #[arg(long, value_parser = statistic, default_value = "p2")]
        stat: Statistic,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModelArg::Tridiagonal)]
        model: ModelArg,
    },
    /// Scaled characteristic-polynomial average against Ai near the edge.
    Edge {
        #[arg(long, default_value_t = 2.0)]
        beta: f64,
        #[arg(long = "N", value_delimiter = ',', default_value = "50,100,200,400")]
        ns: Vec<usize>,
        #[arg(long = "s-min", default_value_t = -3.0, allow_hyphen_values = true)]
        s_min: f64,
        #[arg(long = "s-max", default_value_t = 2.0, allow_hyphen_values = true)]
        s_max: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
    },
}

/// A rendered command result.
#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
    /// JSON printed to stderr alongside CSV output.
    pub summary: Option<Value>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n",
            Format::Text => self.text.clone(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
            }
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failed(m) => write!(f, "error: {m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<betadual_core::Error> for CliError {
    fn from(e: betadual_core::Error) -> Self {
        match e {
            betadual_core::Error::Usage(_)
            | betadual_core::Error::Parse(_)
            | betadual_core::Error::DegreeCap { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

fn usage(msg: &str) -> betadual_core::Error {
    betadual_core::Error::Usage(msg.to_string())
}

fn poly_json(p: &MPoly<Rat>) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({"exponents": e, "coeff": c.to_string()})).collect();
    json!({"nvars": p.nvars(), "terms": terms})
}

fn poly_rows(p: &MPoly<Rat>) -> Vec<Vec<String>> {
    p.terms().map(|(e, c)| vec![format!("{e:?}"), c.to_string()]).collect()
}

fn exact_report(json: Value, header: &[&str], rows: Vec<Vec<String>>, text: String) -> Report {
    Report {
        status: Status::Pass,
        json,
        header: header.iter().map(|s| s.to_string()).collect(),
        rows,
        text,
        summary: None,
    }
}

fn duality_json(r: &DualityReport) -> Value {
    json!({
        "lambda": r.lambda.to_string(),
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "ratio": r.ratio.as_ref().map(|x| x.to_string()),
        "predicted": r.predicted.to_string(),
        "printed": r.printed.as_ref().map(|x| x.to_string()),
        "printed_matches": r.printed_matches(),
        "passed": r.passed,
    })
}

pub fn suite_report(result: &SuiteResult) -> Report {
    let rows = result
        .entries
        .iter()
        .map(|e| vec![e.id.clone(), e.anchor.clone(), format!("{:?}", e.status).to_lowercase(), e.detail.clone()])
        .collect();
    let mut text = String::new();
    for e in &result.entries {
        let _ = writeln!(text, "{} criterion {} ({:.1}s): {}", e.status.label(), e.id, e.seconds, e.detail);
    }
    let _ = writeln!(text, "overall: {}", result.status.label());
    Report {
        status: result.status,
        json: serde_json::to_value(result).expect("suite results serialize"),
        header: ["id", "anchor", "status", "detail"].iter().map(|s| s.to_string()).collect(),
        rows,
        text,
        summary: None,
    }
}

fn mc_json(c: &McComparison) -> Value {
    serde_json::to_value(c).expect("comparisons serialize")
}

pub fn dispatch(config: &RunConfig) -> Result<Report, CliError> {
    match &config.command {
        Command::Jack { lambda, alpha, basis } => {
            let p = jack(lambda, alpha)?;
            let p = match basis {
                BasisArg::Monomial => p,
                BasisArg::Power => p.to_basis(Basis::PowerSum, alpha)?,
            };
            let coeffs: serde_json::Map<String, Value> =
                p.coeffs().iter().map(|(mu, c)| (mu.to_string(), Value::String(c.to_string()))).collect();
            let rows: Vec<Vec<String>> = p.coeffs().iter().map(|(mu, c)| vec![mu.to_string(), c.to_string()]).collect();
            let text = rows.iter().map(|r| format!("{} {}\n", r[1], r[0])).collect();
            let json = json!({"lambda": lambda.to_string(), "alpha": alpha.to_string(),
                "basis": format!("{basis:?}").to_lowercase(), "coeffs": coeffs});
            Ok(exact_report(json, &["partition", "coeff"], rows, text))
        }
        Command::Avg { lambda, ensemble } => {
            let ens = ensemble.build()?;
            let v = jack_average(lambda, &ens)?;
            let json = json!({"lambda": lambda.to_string(), "ensemble": format!("{:?}", ens.kind).to_lowercase(),
                "beta": ens.beta.to_string(), "N": ens.n, "gamma": ens.gamma.to_string(), "average": v.to_string()});
            let row = vec![lambda.to_string(), ens.beta.to_string(), ens.n.to_string(), v.to_string()];
            Ok(exact_report(json, &["lambda", "beta", "N", "average"], vec![row], format!("{v}\n")))
        }
        Command::Dual { lambda, alpha, n, n_dual, ensemble, gamma, gamma_dual } => {
            let r = match ensemble {
                EnsembleArg::Gaussian => gaussian_duality_check(lambda, alpha, *n, *n_dual)?,
                EnsembleArg::Chiral => {
                    let gd = gamma_dual.clone().unwrap_or_else(|| gamma.clone());
                    chiral_duality_check(lambda, alpha, gamma, &gd, *n, *n_dual)?
                }
            };
            let json = duality_json(&r);
            let ratio = r.ratio.as_ref().map(|x| x.to_string()).unwrap_or_default();
            let row = vec![
                r.lambda.to_string(),
                r.lhs.to_string(),
                r.rhs.to_string(),
                ratio.clone(),
                r.predicted.to_string(),
            ];
            let text = format!("lhs {} rhs {} ratio {} predicted {}\n", r.lhs, r.rhs, ratio, r.predicted);
            let mut rep = exact_report(json, &["lambda", "lhs", "rhs", "ratio", "predicted"], vec![row], text);
            rep.status = if r.passed { Status::Pass } else { Status::Fail };
            Ok(rep)
        }
        Command::Hermite { lambda, alpha, n, kind, gamma } => {
            let p = match kind {
                PolyKind::Hermite => hermite_poly(lambda, alpha, *n)?,
                PolyKind::Laguerre => laguerre_poly(lambda, alpha, gamma, *n)?,
            };
            Ok(exact_report(poly_json(&p), &["exponents", "coeff"], poly_rows(&p), format!("{p}\n")))
        }
        Command::Hyper { a, b, alpha, n, cutoff } => {
            let series = HyperSeries::new(a, b, alpha, *n, *cutoff)?;
            let coeffs: serde_json::Map<String, Value> =
                series.terms().iter().map(|(l, c)| (l.to_string(), Value::String(c.to_string()))).collect();
            let rows: Vec<Vec<String>> =
                series.terms().iter().map(|(l, c)| vec![l.to_string(), c.to_string()]).collect();
            let text = rows.iter().map(|r| format!("{} {}\n", r[0], r[1])).collect();
            let json = json!({"p": series.p(), "q": series.q(), "alpha": alpha.to_string(), "N": n,
                "cutoff": cutoff, "coeffs": coeffs});
            Ok(exact_report(json, &["partition", "coeff"], rows, text))
        }
        Command::Verify { target, quick, alpha, cutoff, seed } => {
            let mut opts = if *quick { SuiteOptions::quick() } else { SuiteOptions::full() };
            opts.alphas = alpha.clone().map(|a| vec![a]);
            opts.cutoff = *cutoff;
            if let Some(s) = seed {
                opts.seed = *s;
            }
            if let Some(a) = alpha {
                if *a <= Rat::from_integer(0.into()) {
                    return Err(CliError::Usage("alpha must be positive".into()));
                }
            }
            let result = if target == "all" {
                suite::run_all(&opts)
            } else {
                let c = suite::find(target).ok_or_else(|| CliError::Usage(format!("unknown check {target:?}")))?;
                SuiteResult::new(vec![c.run(&opts)])
            };
            Ok(suite_report(&result))
        }
        Command::Sample { ensemble, stat, samples, seed, model } => {
            let ens = ensemble.build()?;
            let model = match model {
                ModelArg::Dense => GaussianModel::Dense,
                ModelArg::Tridiagonal => GaussianModel::Tridiagonal,
            };
            let sampler = EigenSampler::new(ens.clone(), model);
            let est = sample_statistic(&sampler, *stat, *samples, *seed);
            let exact = stat.exact(&ens)?;
            let cmp = McComparison::real(stat.name(), &est, betadual_core::exact::rat_to_f64(&exact));
            let status = match cmp.verdict {
                betadual_numerics::checks::Verdict::Pass => Status::Pass,
                betadual_numerics::checks::Verdict::Fail => Status::Fail,
                betadual_numerics::checks::Verdict::Inconclusive => Status::Inconclusive,
            };
            let json = json!({"ensemble": format!("{:?}", ens.kind).to_lowercase(), "beta": ens.beta.to_string(),
                "N": ens.n, "gamma": ens.gamma.to_string(), "stat": stat.name(), "exact": exact.to_string(),
                "estimate": est, "comparison": mc_json(&cmp)});
            let row =
                vec![stat.name(), est.mean.to_string(), est.stderr.to_string(), exact.to_string(), cmp.z.to_string()];
            let text = format!("{} = {} ± {} (exact {}, z {:.2})\n", stat.name(), est.mean, est.stderr, exact, cmp.z);
            Ok(Report {
                status,
                json,
                header: ["stat", "mean", "stderr", "exact", "z"].iter().map(|s| s.to_string()).collect(),
                rows: vec![row],
                text,
                summary: None,
            })
        }
        Command::Edge { beta, ns, s_min, s_max, step } => {
            if !(*step > 0.0) || s_max < s_min || ns.is_empty() {
                return Err(CliError::Usage("need step > 0, s-min <= s-max and at least one N".into()));
            }
            let grid = s_grid(*s_min, *s_max, *step);
            let r = edge_convergence_report(*beta, ns, &grid).map_err(|e| CliError::Usage(e.to_string()))?;
            let rows: Vec<Vec<String>> = r
                .rows()
                .iter()
                .map(|x| {
                    vec![
                        x.n.to_string(),
                        x.s.to_string(),
                        x.scaled.to_string(),
                        x.airy.to_string(),
                        x.error.to_string(),
                    ]
                })
                .collect();
            let summary = json!({"beta": r.beta, "N": r.ns, "max_errors": r.max_errors, "slope": r.slope,
                "constant_factor": r.constant_factor, "decreasing": r.decreasing,
                "pointwise_improved": r.pointwise_improved, "passed": r.passed});
            let mut text = String::new();
            for (n, e) in r.ns.iter().zip(&r.max_errors) {
                let _ = writeln!(text, "N={n} max error {e:.4e}");
            }
            let _ = writeln!(text, "slope {:.4} ({})", r.slope, if r.passed { "pass" } else { "fail" });
            let json = json!({"summary": summary, "rows": r.rows()});
            Ok(Report {
                status: if r.passed { Status::Pass } else { Status::Fail },
                json,
                header: ["N", "s", "scaled", "airy", "error"].iter().map(|s| s.to_string()).collect(),
                rows,
                text,
                summary: Some(summary),
            })
        }
    }
}

/// Parses arguments, runs the command and prints the result; returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = config.threads {
        if t == 0 {
            eprintln!("usage error: --threads must be positive");
            return 2;
        }
        // a pool built earlier in the same process keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match dispatch(&config) {
        Ok(report) => {
            print!("{}", report.render(config.format));
            if let (Format::Csv, Some(summary)) = (config.format, &report.summary) {
                eprintln!("{summary}");
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
