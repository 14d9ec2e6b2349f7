//! `meandric`: counts, distances, averages, exhaustive verification and
//! Monte Carlo sampling for meandric systems.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or invalid
//! input, 3 resource limit.

mod output;
mod verify;

use std::f64::consts::SQRT_2;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use meandric::enumeration::{
    count_cyclic_shallow, count_cyclic_shallow_total, count_shallow_meanders, count_shallow_meanders_by_blocks,
    growth_rate, ln_count_shallow_meanders, partners_lambda,
};
use meandric::meander::oracle::rainbow_experiment;
use meandric::meander::{hasse_distance_bfs, PairRecord};
use meandric::nc::NcPartition;
use meandric::sampler::{estimate_components, Mode};
use meandric::series::{
    avg_bound_bn_all, avg_distance_interval_all, avg_distance_lambda2, limit_constants, rational_to_f64,
    ExactRational,
};
use meandric::shallow_tree::{forget, forget_cyclic, recover, recover_cyclic, CyclicFatTree, FatTree};
use meandric::Error;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use output::{Format, Output};
use verify::Suite;

#[derive(Parser)]
#[command(name = "meandric", version, about = "Meandric systems and the Hasse diagram of NC(n)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Worker threads for parallel commands (results do not depend on it).
    #[arg(long, global = true, env = "MEANDRIC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form meander counts.
    Count(CountArgs),
    /// Distance, components and bound for a pair of partitions.
    Distance(DistanceArgs),
    /// Exact average distances.
    Average(AverageArgs),
    /// Run an exhaustive verification suite.
    Verify(VerifyArgs),
    /// Monte Carlo estimate of the expected number of components.
    Sample(SampleArgs),
    /// Exponential growth rate of meanders with interval top.
    GrowthRate(GrowthArgs),
    /// The fat-tree bijection.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Exhaustive experiments.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Limiting constants of the averages.
    Constants,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Shallow,
    CyclicShallow,
    Partners,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of points.
    #[arg(long)]
    n: Option<usize>,
    /// Number of top blocks (shallow families), or of blocks of λ (partners).
    #[arg(long)]
    m: Option<usize>,
    /// Block size of λ_{ℓ,m} (partners).
    #[arg(long)]
    ell: Option<usize>,
}

#[derive(Args)]
struct DistanceArgs {
    /// Top partition, e.g. `1,3/2` (blocks separated by `/`; quote it in the shell).
    #[arg(long)]
    pi: String,
    /// Bottom partition.
    #[arg(long)]
    rho: String,
    /// Also compute the distance by breadth-first search (n <= 8).
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AverageKind {
    /// Interval top, any bottom.
    Dn,
    /// Top λ_{2,m}, any bottom.
    Dtilde2m,
    /// The bound b over all pairs.
    Btilde,
}

#[derive(Args)]
struct AverageArgs {
    #[arg(long, value_enum)]
    kind: AverageKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Emit every value from 1 up to the given size.
    #[arg(long)]
    upto: bool,
    /// Also report the distance to the limiting constant.
    #[arg(long)]
    limit_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 7)]
    max_n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleMode {
    All,
    IntervalTop,
    FixedBase,
}

#[derive(Args)]
struct SampleArgs {
    /// One or more sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "all")]
    mode: SampleMode,
    /// Base partition for `fixed-base`: a partition, or `lambda2` for λ_{2,n/2}.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Args)]
struct GrowthArgs {
    /// Also report (number of meanders with interval top)^(1/n) at this n.
    #[arg(long)]
    nth_root_at: Option<usize>,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Tree of a meander with interval (or, with --cyclic, rotated interval) top.
    Forget {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        rho: String,
        #[arg(long)]
        cyclic: bool,
    },
    /// Pair of partitions of a tree.
    Recover {
        /// Tree in text form, e.g. `B*(W(B(*W)),W)`.
        #[arg(long)]
        tree: String,
        /// Root child carrying label 1 (rotated-interval tops).
        #[arg(long)]
        one_edge: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Compare the partitions with the most meandric partners with the
    /// Kreweras orbit of the rainbow partition.
    Rainbow {
        #[arg(long)]
        n: usize,
    },
}

/// A failed command: exit code and message.
struct Failure {
    code: u8,
    message: String,
    output: Option<Output>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Resource(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
            output: None,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
        output: None,
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| usage(format!("missing required flag --{flag}")))
}

fn parse_partition(s: &str) -> Result<NcPartition, Failure> {
    Ok(s.parse::<NcPartition>()?)
}

fn count(a: CountArgs) -> Result<Output, Failure> {
    let (value, n, m, ell) = match a.family {
        Family::Shallow | Family::CyclicShallow => {
            let n = need(a.n, "n")?;
            let cyclic = matches!(a.family, Family::CyclicShallow);
            let v = match (a.m, cyclic) {
                (Some(m), false) => count_shallow_meanders_by_blocks(n, m)?,
                (None, false) => count_shallow_meanders(n)?,
                (Some(m), true) => count_cyclic_shallow(n, m)?,
                (None, true) => count_cyclic_shallow_total(n)?,
            };
            (v, Some(n), a.m, None)
        }
        Family::Partners => {
            let (ell, m) = (need(a.ell, "ell")?, need(a.m, "m")?);
            (partners_lambda(ell, m)?, Some(ell * m), Some(m), Some(ell))
        }
    };
    let family = a.family.to_possible_value().expect("named").get_name().to_string();
    let text = value.to_string();
    Ok(Output::from_json(
        json!({"family": family, "n": n, "m": m, "ell": ell, "count": value.to_string()}),
        text,
    )
    .with_csv(
        &["family", "n", "m", "ell", "count"],
        vec![vec![
            family,
            n.map(|x| x.to_string()).unwrap_or_default(),
            m.map(|x| x.to_string()).unwrap_or_default(),
            ell.map(|x| x.to_string()).unwrap_or_default(),
            value.to_string(),
        ]],
    ))
}

fn distance(a: DistanceArgs) -> Result<Output, Failure> {
    let (pi, rho) = (parse_partition(&a.pi)?, parse_partition(&a.rho)?);
    let record = PairRecord::new(&pi, &rho)?;
    let mut json = serde_json::to_value(&record).expect("serializable");
    let mut text = format!(
        "d_h {}\ncomponents {}\nb {}\nis_meander {}",
        record.d_h, record.components, record.b, record.is_meander
    );
    if a.oracle {
        let bfs = hasse_distance_bfs(&pi, &rho)?;
        json["d_h_bfs"] = json!(bfs);
        json["oracle_agrees"] = json!(bfs == record.d_h);
        text.push_str(&format!("\nd_h_bfs {bfs}"));
        if bfs != record.d_h {
            return Err(Failure {
                code: 1,
                message: format!("BFS distance {bfs} differs from {}", record.d_h),
                output: Some(Output::from_json(json, text)),
            });
        }
    }
    Ok(Output::from_json(json, text))
}

fn average(a: AverageArgs) -> Result<Output, Failure> {
    let c = limit_constants();
    let (size_flag, key, size) = match a.kind {
        AverageKind::Dn => ("n", "d_n", need(a.n, "n")?),
        AverageKind::Btilde => ("n", "btilde_n", need(a.n, "n")?),
        AverageKind::Dtilde2m => ("m", "dtilde_2m", need(a.m, "m")?),
    };
    if size == 0 {
        return Err(usage(format!("--{size_flag} must be at least 1")));
    }
    let sizes: Vec<usize> = if a.upto { (1..=size).collect() } else { vec![size] };
    let values: Vec<BigRational> = match a.kind {
        AverageKind::Dn => avg_distance_interval_all(size),
        AverageKind::Btilde => avg_bound_bn_all(size)?,
        AverageKind::Dtilde2m => sizes.par_iter().map(|&m| avg_distance_lambda2(m)).collect::<Result<_, _>>()?,
    };
    let values = &values[values.len() - sizes.len()..];
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for (&s, v) in sizes.iter().zip(values) {
        let x = rational_to_f64(v);
        let mut rec = json!({size_flag: s, key: ExactRational::from(v), "float": x});
        let mut row = vec![s.to_string(), v.numer().to_string(), v.denom().to_string(), x.to_string()];
        text.push_str(&format!("{size_flag}={s} {key}={v} ({x})"));
        if a.limit_check {
            let sf = s as f64;
            let (scaled, constant) = match a.kind {
                AverageKind::Dn => (x - 2.0 * sf / 3.0, c.interval_distance_offset),
                AverageKind::Dtilde2m => (x - SQRT_2 * sf, c.lambda2_distance_offset),
                AverageKind::Btilde => (x / sf, c.bound_ratio),
            };
            let gap = (scaled - constant).abs();
            rec["limit"] = json!({"scaled": scaled, "constant": constant, "distance": gap});
            row.extend([scaled.to_string(), constant.to_string(), gap.to_string()]);
            text.push_str(&format!(" scaled={scaled} limit={constant} distance={gap}"));
        }
        text.push('\n');
        records.push(rec);
        rows.push(row);
    }
    let json = if records.len() == 1 { records.pop().unwrap() } else { json!(records) };
    let mut header = vec![size_flag, "num", "den", "float"];
    if a.limit_check {
        header.extend(["scaled", "constant", "distance"]);
    }
    Ok(Output::from_json(json, text).with_csv(&header, rows))
}

fn verify(a: VerifyArgs) -> Result<Output, Failure> {
    let checks = verify::run(a.suite, a.max_n)?;
    let failed: Vec<&verify::Check> = checks.iter().filter(|c| !c.ok).collect();
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!("{:<32} n={:<3} {}\n", c.check, c.n, if c.ok { "ok" } else { "MISMATCH" }));
        if !c.ok {
            text.push_str(&format!("    counterexample: {}\n", c.detail));
        }
    }
    text.push_str(&format!("{} checks, {} failed\n", checks.len(), failed.len()));
    let out = Output::from_json(serde_json::to_value(&checks).expect("serializable"), text);
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(Failure {
            code: 1,
            message: format!("{} of {} checks failed", failed.len(), checks.len()),
            output: Some(out),
        })
    }
}

fn sample(a: SampleArgs) -> Result<Output, Failure> {
    let mut estimates = Vec::new();
    for &n in &a.n {
        let mode = match a.mode {
            SampleMode::All => Mode::All,
            SampleMode::IntervalTop => Mode::IntervalTop,
            SampleMode::FixedBase => {
                let base = need(a.base.as_deref(), "base")?;
                if base == "lambda2" {
                    if n % 2 != 0 {
                        return Err(usage("--base lambda2 needs an even --n"));
                    }
                    Mode::FixedBase(NcPartition::lambda_interval(2, n / 2)?)
                } else {
                    Mode::FixedBase(parse_partition(base)?)
                }
            }
        };
        estimates.push(estimate_components(n, a.trials, a.seed, &mode)?);
    }
    let rows = estimates
        .iter()
        .map(|e| {
            vec![
                e.n.to_string(),
                e.mode.clone(),
                e.trials.to_string(),
                e.seed.to_string(),
                e.mean.to_string(),
                e.stderr.to_string(),
            ]
        })
        .collect();
    let text = estimates
        .iter()
        .map(|e| format!("n={} mean={} stderr={} mean/n={}\n", e.n, e.mean, e.stderr, e.mean_per_n))
        .collect();
    let json = if estimates.len() == 1 {
        serde_json::to_value(&estimates[0])
    } else {
        serde_json::to_value(&estimates)
    }
    .expect("serializable");
    Ok(Output::from_json(json, text).with_csv(&["n", "mode", "trials", "seed", "mean", "stderr"], rows))
}

fn growth(a: GrowthArgs) -> Result<Output, Failure> {
    let g = growth_rate();
    let mut json = json!({"alpha_star": g.alpha_star, "rate": g.rate});
    let mut text = format!("rate {}\nalpha_star {}", g.rate, g.alpha_star);
    if let Some(n) = a.nth_root_at {
        let root = (ln_count_shallow_meanders(n)? / n as f64).exp();
        json["n"] = json!(n);
        json["nth_root"] = json!(root);
        text.push_str(&format!("\nnth_root({n}) {root}"));
    }
    Ok(Output::from_json(json, text))
}

fn tree(cmd: TreeCommand) -> Result<Output, Failure> {
    match cmd {
        TreeCommand::Forget { pi, rho, cyclic } => {
            let (pi, rho) = (parse_partition(&pi)?, parse_partition(&rho)?);
            let (tree, one_edge) = if cyclic {
                let t = forget_cyclic(&pi, &rho)?;
                (t.tree, Some(t.one_edge))
            } else {
                (forget(&pi, &rho)?, None)
            };
            let profile = tree.profile();
            let json = json!({
                "tree": tree.to_string(),
                "one_edge": one_edge,
                "n_edges": tree.n_edges(),
                "black_vertices": profile.m,
            });
            let text = match one_edge {
                Some(k) => format!("{tree}\none_edge {k}"),
                None => tree.to_string(),
            };
            Ok(Output::from_json(json, text))
        }
        TreeCommand::Recover { tree, one_edge } => {
            let t: FatTree = tree.parse()?;
            let (pi, rho) = match one_edge {
                Some(k) => recover_cyclic(&CyclicFatTree::new(t, k)?)?,
                None => recover(&t)?,
            };
            let json = json!({"pi": pi.to_string(), "rho": rho.to_string()});
            Ok(Output::from_json(json, format!("pi {pi}\nrho {rho}")))
        }
    }
}

fn experiment(cmd: ExperimentCommand) -> Result<Output, Failure> {
    match cmd {
        ExperimentCommand::Rainbow { n } => {
            let r = rainbow_experiment(n)?;
            let text = format!(
                "n={} max_partners={} maximizers={} orbit_is_argmax={}",
                r.n,
                r.max_partners,
                r.maximizers.join(" "),
                r.orbit_is_argmax
            );
            Ok(Output::from_json(serde_json::to_value(&r).expect("serializable"), text))
        }
    }
}

fn constants() -> Output {
    let c = limit_constants();
    let json = serde_json::to_value(c).expect("serializable");
    let text = json
        .as_object()
        .expect("object")
        .iter()
        .map(|(k, v)| format!("{k} {v}\n"))
        .collect();
    Output::from_json(json, text)
}

fn run(cli: Cli) -> Result<Output, Failure> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    match cli.command {
        Command::Count(a) => count(a),
        Command::Distance(a) => distance(a),
        Command::Average(a) => average(a),
        Command::Verify(a) => verify(a),
        Command::Sample(a) => sample(a),
        Command::GrowthRate(a) => growth(a),
        Command::Tree(c) => tree(c),
        Command::Experiment(c) => experiment(c),
        Command::Constants => Ok(constants()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => match out.print(format) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(f) => {
            if let Some(out) = f.output {
                let _ = out.print(format);
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
