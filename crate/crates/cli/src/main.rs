mod output;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use trifp::bias::{attribute_bias, degree_bias, triangle_bias, wedge_bias, BiasReport};
use trifp::graphon::{chi_t, two_block_chi, Graphon, DEFAULT_QUADRATURE_N};
use trifp::mc::{run_mc, ExperimentConfig, ModelConfig, Statistic};
use trifp::rational::{self, to_f64};
use trifp::sparse::{
    cm_brute_force_mean, cm_exact_mean_rational, errg_brute_force_mean, errg_exact_mean_rational,
    errg_exact_mean_tfb, zeta_errg, DegreeSequence, ErrgParams,
};
use trifp::star::{
    build_pcs, glue_pcs, nb_decompose, pcs_closed_form, small_bias_catalogue, GluePoint,
    PcsInstance, PcsSpec,
};
use trifp::{Error, Multigraph, Rational, Result};

use output::{Cell, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "trifp", version, about = "Friendship-paradox bias calculations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Master seed for sampling commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of Monte Carlo trials.
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Worker threads (1 = sequential; default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Cells per axis for graphon quadrature.
    #[arg(long, global = true, default_value_t = DEFAULT_QUADRATURE_N)]
    quadrature_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-vertex and average bias of an attribute on an edge-list graph.
    Bias {
        edges: PathBuf,
        /// degree, wedge, triangle, or file:<path> with one value per vertex.
        #[arg(long, default_value = "triangle")]
        attribute: String,
    },
    /// Closed-form and direct triangle bias of a partially completed star graph.
    Pcs(PcsArgs),
    /// Rows of (lambda, zeta(lambda)) for the sparse Erdos-Renyi limit.
    ZetaCurve(ZetaArgs),
    /// Exact expected triangle bias for sparse models.
    Exact {
        #[command(subcommand)]
        model: ExactModel,
    },
    /// Monte Carlo estimate from a JSON experiment config.
    Mc { config: PathBuf },
    /// Dense-limit chi for a graphon.
    Graphon(GraphonArgs),
}

#[derive(Debug, Args)]
struct PcsArgs {
    /// e.g. pcs:t=1,iso=1,bands=5
    #[arg(required_unless_present = "catalogue")]
    spec: Option<String>,
    /// Second spec to glue onto the first.
    #[arg(long, requires = "at", conflicts_with = "catalogue")]
    glue: Option<String>,
    /// Gluing selectors `v1,v2`: end|mid|tadpole|iso[:i], band:b:p, or a ring vertex id.
    #[arg(long, requires = "glue")]
    at: Option<String>,
    /// List every spec with at most N vertices whose summed bias is below 3/2.
    #[arg(long, value_name = "N", conflicts_with = "spec")]
    catalogue: Option<usize>,
}

#[derive(Debug, Args)]
struct ZetaArgs {
    #[arg(long, default_value_t = 1e-3, conflicts_with = "lambda")]
    min: f64,
    #[arg(long, default_value_t = 1e3, conflicts_with = "lambda")]
    max: f64,
    #[arg(long, default_value_t = 100, conflicts_with = "lambda")]
    points: usize,
    /// Log-spaced grid.
    #[arg(long, conflicts_with = "lambda")]
    log: bool,
    /// Evaluate at a single point instead of a grid.
    #[arg(long)]
    lambda: Option<f64>,
}

#[derive(Debug, Args)]
struct ErrgArgs {
    #[arg(long)]
    n: usize,
    /// Edge probability: a decimal or a fraction `a/b`.
    #[arg(long, required_unless_present = "lambda", conflicts_with = "lambda")]
    p: Option<String>,
    /// Mean degree parameter, p = lambda / n.
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Debug, Args)]
struct CmArgs {
    /// Comma-separated degrees, e.g. 3,3,2,1,1.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["degrees_file", "distribution"])]
    degrees: Option<Vec<u64>>,
    /// One degree per line.
    #[arg(long, conflicts_with = "distribution")]
    degrees_file: Option<PathBuf>,
    /// regular:<d> or two-point:<a>,<b>,<frac>.
    #[arg(long, requires = "n")]
    distribution: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum ExactModel {
    /// Closed-form mean for G(n, p).
    Errg(ErrgArgs),
    /// Enumeration over all labelled graphs (n <= 5).
    ErrgOracle(ErrgArgs),
    /// Closed-form mean for the configuration model.
    Cm(CmArgs),
    /// Enumeration over all perfect matchings of half-edges (at most 12).
    CmOracle(CmArgs),
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
struct GraphonArgs {
    /// Graphon JSON file.
    file: Option<PathBuf>,
    /// Also estimate n^-2 times the average bias on sampled graphs of this size.
    #[arg(long, global = true)]
    sample: Option<usize>,
    #[command(subcommand)]
    kind: Option<GraphonKind>,
}

#[derive(Debug, Subcommand)]
enum GraphonKind {
    Constant {
        #[arg(long)]
        p: f64,
    },
    TwoBlock {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        /// Width of the first block.
        #[arg(long)]
        p: f64,
    },
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_rational(s: &str) -> Result<Rational> {
    rational::parse(s)
}

fn cmd_bias(edges: &Path, attribute: &str) -> Result<Table> {
    let g = Multigraph::parse_edge_list(&read_text(edges)?)?;
    let (name, report): (&str, BiasReport) = match attribute {
        "degree" => ("degree", degree_bias(&g)),
        "wedge" => ("wedge", wedge_bias(&g)),
        "triangle" => ("triangle", triangle_bias(&g)),
        other => {
            let path = other.strip_prefix("file:").ok_or_else(|| {
                Error::Input(format!("unknown attribute {other:?}; use degree, wedge, triangle or file:<path>"))
            })?;
            let text = read_text(Path::new(path))?;
            let values = text
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            ("file", attribute_bias(&g, &values)?)
        }
    };
    let mut t = Table::new(&["row", "vertex", "attribute", "bias"]);
    for (v, b) in report.per_vertex.iter().enumerate() {
        t.push(vec!["vertex".into(), v.into(), name.into(), b.clone().into()]);
    }
    t.push(vec!["average".into(), Cell::Empty, name.into(), report.average.into()]);
    Ok(t)
}

fn cmd_pcs(args: &PcsArgs) -> Result<Table> {
    if let Some(max) = args.catalogue {
        let mut t = Table::new(&["spec", "label", "vertices", "total", "average"]);
        for (spec, total) in small_bias_catalogue(max) {
            let avg = pcs_closed_form(&spec).average;
            t.push(vec![
                spec.to_string().into(),
                spec.label().into(),
                spec.total_vertices().into(),
                total.into(),
                avg.into(),
            ]);
        }
        return Ok(t);
    }
    let spec: PcsSpec = args.spec.as_deref().unwrap_or_default().parse()?;
    let Some(other) = &args.glue else {
        let closed = pcs_closed_form(&spec);
        let direct = triangle_bias(&build_pcs(&spec));
        let mut t = Table::new(&[
            "spec",
            "label",
            "vertices",
            "closed_total",
            "closed_average",
            "direct_total",
            "direct_average",
        ]);
        t.push(vec![
            spec.to_string().into(),
            spec.label().into(),
            spec.total_vertices().into(),
            closed.total.into(),
            closed.average.into(),
            direct.total().into(),
            direct.average.into(),
        ]);
        return Ok(t);
    };
    let other: PcsSpec = other.parse()?;
    let at = args.at.as_deref().unwrap_or_default();
    let (s1, s2) = at
        .split_once(',')
        .ok_or_else(|| Error::Input(format!("--at expects `v1,v2`, got {at:?}")))?;
    let v1 = s1.parse::<GluePoint>()?.resolve(&spec)?;
    let v2 = s2.parse::<GluePoint>()?.resolve(&other)?;
    let a = PcsInstance::new(spec);
    let b = PcsInstance::new(other);
    let glued = glue_pcs(&a.graph, v1, &b.graph, v2)?;
    let direct = triangle_bias(&glued);
    let nb = nb_decompose(&a, v1, &b, v2)?;
    let lower = nb.lower_bound();
    let mut t = Table::new(&[
        "spec1", "spec2", "v1", "v2", "vertices", "ob1", "ob2", "i", "ii", "iii", "nb", "lower_bound",
        "direct_total", "direct_average",
    ]);
    t.push(vec![
        a.spec.to_string().into(),
        b.spec.to_string().into(),
        v1.into(),
        v2.into(),
        glued.n().into(),
        nb.ob1.into(),
        nb.ob2.into(),
        nb.i.into(),
        nb.ii.into(),
        nb.iii.into(),
        nb.nb.into(),
        lower.into(),
        direct.total().into(),
        direct.average.into(),
    ]);
    Ok(t)
}

fn cmd_zeta(args: &ZetaArgs) -> Result<Table> {
    let grid: Vec<f64> = match args.lambda {
        Some(l) => vec![l],
        None => {
            let (lo, hi, k) = (args.min, args.max, args.points);
            if !(lo > 0.0 && lo < hi) {
                return Err(Error::Input(format!("need 0 < min < max, got [{lo}, {hi}]")));
            }
            if k < 2 {
                return Err(Error::Input("a grid needs at least 2 points; use --lambda for one".into()));
            }
            (0..k)
                .map(|i| {
                    let s = i as f64 / (k - 1) as f64;
                    if args.log {
                        (lo.ln() + s * (hi.ln() - lo.ln())).exp()
                    } else {
                        lo + s * (hi - lo)
                    }
                })
                .collect()
        }
    };
    let mut t = Table::new(&["lambda", "zeta"]);
    for l in grid {
        t.push(vec![l.into(), zeta_errg(l)?.into()]);
    }
    Ok(t)
}

fn errg_p(args: &ErrgArgs) -> Result<Rational> {
    match (&args.p, &args.lambda) {
        (Some(p), _) => parse_rational(p),
        (None, Some(l)) => {
            if args.n == 0 {
                return Err(Error::Domain("n must be positive".into()));
            }
            Ok(parse_rational(l)? / Rational::from_integer(args.n.into()))
        }
        (None, None) => Err(Error::Input("give --p or --lambda".into())),
    }
}

fn degree_sequence(args: &CmArgs) -> Result<DegreeSequence> {
    match (&args.degrees, &args.degrees_file, &args.distribution) {
        (Some(d), _, _) => DegreeSequence::new(d.clone()),
        (_, Some(path), _) => DegreeSequence::read(path),
        (_, _, Some(name)) => DegreeSequence::named(name, args.n.unwrap_or_default()),
        _ => Err(Error::Input("give --degrees, --degrees-file or --distribution".into())),
    }
}

fn cmd_exact(model: &ExactModel) -> Result<Table> {
    let mut t = Table::new(&["model", "n", "parameter", "exact", "mean"]);
    match model {
        ExactModel::Errg(a) | ExactModel::ErrgOracle(a) => {
            let p = errg_p(a)?;
            let (name, exact) = match model {
                ExactModel::Errg(_) => ("errg", errg_exact_mean_rational(a.n, &p)?),
                _ => ("errg-oracle", errg_brute_force_mean(a.n, &p)?),
            };
            let mean = match model {
                ExactModel::Errg(_) => errg_exact_mean_tfb(&ErrgParams::from_p(a.n, to_f64(&p))?)?,
                _ => to_f64(&exact),
            };
            let param = format!("p={}", rational::to_fraction_string(&p));
            t.push(vec![name.into(), a.n.into(), param.into(), exact.into(), mean.into()]);
        }
        ExactModel::Cm(a) | ExactModel::CmOracle(a) => {
            let ds = degree_sequence(a)?;
            let (name, exact) = match model {
                ExactModel::Cm(_) => ("cm", cm_exact_mean_rational(&ds)?),
                _ => ("cm-oracle", cm_brute_force_mean(&ds)?),
            };
            let param = format!("m1={}", ds.half_edges());
            let mean = to_f64(&exact);
            t.push(vec![name.into(), ds.n().into(), param.into(), exact.into(), mean.into()]);
        }
    }
    Ok(t)
}

fn cmd_mc(cli: &Cli, path: &Path) -> Result<Table> {
    let mut config = ExperimentConfig::from_json(&read_text(path)?)?;
    if let Some(seed) = cli.seed {
        config.master_seed = seed;
    }
    if let Some(trials) = cli.trials {
        config.trials = trials;
    }
    if cli.workers.is_some() {
        config.workers = cli.workers;
    }
    log::info!("running {} trials with master seed {}", config.trials, config.master_seed);
    let est = run_mc(&config)?;
    let mut t = Table::new(&["mean", "stderr", "trials", "master_seed"]);
    t.push(vec![
        est.mean.into(),
        est.stderr.into(),
        est.trials.into(),
        Cell::Text(est.master_seed.to_string()),
    ]);
    Ok(t)
}

fn cmd_graphon(cli: &Cli, args: &GraphonArgs) -> Result<Table> {
    let g = match (&args.file, &args.kind) {
        (Some(path), _) => Graphon::from_json(&read_text(path)?)?,
        (None, Some(GraphonKind::Constant { p })) => Graphon::Constant { p: *p },
        (None, Some(GraphonKind::TwoBlock { alpha, beta, gamma, p })) => Graphon::TwoBlock {
            alpha: *alpha,
            beta: *beta,
            gamma: *gamma,
            p: *p,
        },
        (None, None) => return Err(Error::Input("give a graphon file, `constant` or `two-block`".into())),
    };
    g.validate()?;
    let chi = g.chi()?;
    let quad = chi_t(&g, cli.quadrature_n)?;
    let theta = match g {
        Graphon::TwoBlock { alpha, beta, gamma, p } => Some(two_block_chi(alpha, beta, gamma, p)?),
        _ => None,
    };
    let sampled = match args.sample {
        Some(n) => Some(run_mc(&ExperimentConfig {
            model: ModelConfig::Graphon { n, graphon: g.clone() },
            statistic: Statistic::ScaledTfb { power: -2 },
            trials: cli.trials.unwrap_or(100),
            master_seed: cli.seed.unwrap_or(0),
            workers: cli.workers,
        })?),
        None => None,
    };
    let mut t = Table::new(&[
        "chi",
        "chi_quadrature",
        "theta1",
        "theta2",
        "theta3",
        "product",
        "sample_n",
        "sample_mean",
        "sample_stderr",
    ]);
    t.push(vec![
        chi.into(),
        quad.into(),
        theta.map(|b| b.theta1).into(),
        theta.map(|b| b.theta2).into(),
        theta.map(|b| b.theta3).into(),
        theta.map(|b| b.product).into(),
        args.sample.into(),
        sampled.as_ref().map(|e| e.mean).into(),
        sampled.as_ref().map(|e| e.stderr).into(),
    ]);
    Ok(t)
}

fn run(cli: &Cli) -> Result<Table> {
    match &cli.command {
        Command::Bias { edges, attribute } => cmd_bias(edges, attribute),
        Command::Pcs(args) => cmd_pcs(args),
        Command::ZetaCurve(args) => cmd_zeta(args),
        Command::Exact { model } => cmd_exact(model),
        Command::Mc { config } => cmd_mc(cli, config),
        Command::Graphon(args) => cmd_graphon(cli, args),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|t| t.write(cli.format, io::stdout().lock()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
