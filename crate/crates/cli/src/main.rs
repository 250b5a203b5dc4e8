//! `kbgp`: balanced connected partitions from the command line.
//!
//! Bench reports are tab-separated with the columns
//! `family n seed k algo size opt ratio certificate ops millis`, one row per
//! instance ordered by (family, n, seed), then `#`-prefixed summary lines.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kbgp::{
    emit_dot, exact_opt_with_limit, generate, parse_edge_list, ratio_report, verify_certificate, write_edge_list,
    Algo, Error, Family, GeneratorSpec, Graph, Mode, Solution, TraceRecord, ORACLE_LIMIT,
};
use num_rational::Ratio;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "kbgp", version, about = "Min-max balanced connected graph partition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition one graph and print the result.
    Partition(PartitionArgs),
    /// Compare an algorithm with the exact optimum over generated graphs.
    Bench(BenchArgs),
    /// Write a generated graph as an edge list.
    Gen {
        /// Generator as FAMILY:N:SEED.
        spec: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Parser)]
struct PartitionArgs {
    /// Edge-list file: header `n m`, then one `u v` pair per line.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    input: Option<PathBuf>,
    /// Generator as FAMILY:N:SEED.
    #[arg(long)]
    gen: Option<String>,
    /// Number of parts.
    #[arg(long)]
    k: usize,
    /// One of approx3, approxk, approx4, exact.
    #[arg(long, value_parser = parse_algo)]
    algo: Algo,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include the operation log.
    #[arg(long)]
    trace: bool,
    /// Re-check the certificate and, within the oracle limit, the ratio to
    /// the optimum.
    #[arg(long)]
    verify: bool,
}

#[derive(Parser)]
struct BenchArgs {
    /// Comma-separated family names.
    #[arg(long, value_delimiter = ',', required = true)]
    families: Vec<String>,
    /// Vertex counts, `A..B` (inclusive) or a single number.
    #[arg(long)]
    sizes: String,
    /// Instances per family and size.
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long)]
    k: usize,
    /// One of approx3, approxk, approx4, exact.
    #[arg(long, value_parser = parse_algo)]
    algo: Algo,
    /// First seed; instance `i` uses `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run instances one at a time.
    #[arg(long)]
    sequential: bool,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tsv,
}

fn parse_algo(s: &str) -> Result<Algo, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Bad flags or input the chosen algorithm cannot take.
    Config(String),
    /// An algorithm result that does not stand up to checking.
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::StructureViolation(_) | Error::Infeasible(_) => Failure::Verify(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

/// The oracle guard, optionally lowered through `BGP_ORACLE_LIMIT`.
fn oracle_limit() -> Result<usize, Failure> {
    match std::env::var("BGP_ORACLE_LIMIT") {
        Err(_) => Ok(ORACLE_LIMIT),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|l| l.min(ORACLE_LIMIT))
            .map_err(|_| Failure::Config(format!("BGP_ORACLE_LIMIT must be a non-negative integer, got `{v}`"))),
    }
}

fn load(args: &PartitionArgs) -> Result<(Graph, Option<GeneratorSpec>), Failure> {
    if let Some(spec) = &args.gen {
        let spec: GeneratorSpec = spec.parse()?;
        return Ok((generate(&spec)?, Some(spec)));
    }
    let path = args.input.as_ref().expect("clap requires --input or --gen");
    let text = fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    Ok((parse_edge_list(&text)?, None))
}

#[derive(Serialize)]
struct Record<'a> {
    n: usize,
    k: usize,
    algo: Algo,
    sizes: Vec<usize>,
    parts: Vec<Vec<usize>>,
    certificate: &'a kbgp::Certificate,
    trace: &'a [TraceRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<Verification>,
}

#[derive(Serialize)]
struct Verification {
    certificate_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    lower_bound: Option<usize>,
    opt: Option<usize>,
    ratio: Option<String>,
    ratio_value: Option<f64>,
    within_claim: Option<bool>,
}

impl Verification {
    fn passed(&self) -> bool {
        self.certificate_ok && self.within_claim != Some(false)
    }
}

fn verification(g: &Graph, sol: &Solution, algo: Algo, limit: usize) -> Result<Verification, Failure> {
    let checked = verify_certificate(g, &sol.partition, &sol.certificate);
    let opt = if g.n() <= limit {
        Some(exact_opt_with_limit(g, sol.partition.k(), limit)?.0)
    } else {
        None
    };
    let ratio = opt.map(|o| Ratio::new(sol.size() as u64, o as u64));
    Ok(Verification {
        certificate_ok: checked.is_ok(),
        reason: checked.as_ref().err().map(|e| e.0.clone()),
        lower_bound: checked.ok().map(|v| v.lower_bound),
        opt,
        ratio: ratio.map(|r| r.to_string()),
        ratio_value: ratio.map(kbgp::report::to_f64),
        within_claim: ratio.map(|r| r <= algo.claimed_ratio(sol.partition.k())),
    })
}

fn run_partition(args: &PartitionArgs) -> Result<String, Failure> {
    let limit = oracle_limit()?;
    let (g, _) = load(args)?;
    let sol = args.algo.run(&g, args.k, limit)?;
    let check = if args.verify {
        Some(verification(&g, &sol, args.algo, limit)?)
    } else {
        None
    };
    let failed = check.as_ref().is_some_and(|c| !c.passed());
    let out = match args.format {
        Format::Json => {
            let record = Record {
                n: g.n(),
                k: sol.partition.k(),
                algo: args.algo,
                sizes: sol.partition.rank().0,
                parts: sol.partition.to_lists(),
                certificate: &sol.certificate,
                trace: if args.trace { &sol.trace } else { &[] },
                verification: check,
            };
            serde_json::to_string_pretty(&record).expect("records serialize") + "\n"
        }
        Format::Dot => emit_dot(&g, &sol.partition, Some(&sol.certificate)),
        Format::Tsv => {
            let mut out = String::from("vertex\tpart\n");
            for v in 0..g.n() {
                out.push_str(&format!("{v}\t{}\n", sol.partition.part_of(v)));
            }
            out
        }
    };
    if failed {
        print!("{out}");
        return Err(Failure::Verify("verification failed".into()));
    }
    Ok(out)
}

fn parse_sizes(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Config(format!("sizes must be `A..B` or a number, got `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn run_bench(args: &BenchArgs) -> Result<String, Failure> {
    let limit = oracle_limit()?;
    let families = args
        .families
        .iter()
        .map(|f| f.parse::<Family>())
        .collect::<Result<Vec<_>, _>>()?;
    let sizes = parse_sizes(&args.sizes)?;
    let mut specs = Vec::new();
    for &family in &families {
        for &n in &sizes {
            specs.extend((0..args.count).map(|i| GeneratorSpec::new(family, n, args.seed + i)));
        }
    }
    let mode = if args.sequential { Mode::Sequential } else { Mode::default() };
    let report = ratio_report(&specs, args.k, args.algo, limit, mode)?;
    let tsv = report.to_tsv();
    match &args.output {
        Some(path) => {
            fs::write(path, &tsv).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
            eprint!("{}", report.summary());
        }
        None => print!("{tsv}"),
    }
    if report.violations() > 0 {
        return Err(Failure::Verify(format!(
            "{} instances exceed the claimed ratio {}",
            report.violations(),
            report.claimed_ratio
        )));
    }
    Ok(String::new())
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Partition(args) => run_partition(args),
        Command::Bench(args) => run_bench(args),
        Command::Gen { spec, output } => {
            let g = generate(&spec.parse()?)?;
            let text = write_edge_list(&g);
            match output {
                Some(path) => fs::write(path, text)
                    .map(|_| String::new())
                    .map_err(|e| Failure::Config(format!("{}: {e}", path.display()))),
                None => Ok(text),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
