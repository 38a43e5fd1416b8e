use std::fs;
use std::io::{self, Read};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use phibound_core::generate::{generate, parse_family, Probability};
use phibound_core::report::{analyze_with, csv_header, csv_row, AnalyzeConfig, AnalyzeError};
use phibound_core::sweep::{oracle_check, run_sweep, SweepError, SweepMode, SweepSpec};
use phibound_core::{encode_graph6, parse_edge_list, parse_graph6, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_ANOMALY: u8 = 3;
const EXIT_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "phibound",
    version,
    about = "Generalized chromatic number and degree bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bound report for a graph (one per graph6 line).
    Analyze {
        /// Input file, or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        /// Emit CSV instead of the text report.
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = 10)]
        oracle_max_n: usize,
    },
    /// Print a member of a named family as graph6.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        /// Edge probability as `num/den`.
        #[arg(long)]
        p: Option<Probability>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Analyze many graphs and write one CSV row per graph.
    Sweep {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Vertex count or range, e.g. `5` or `1..5`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        p: Option<Probability>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10)]
        oracle_max_n: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare greedy φ with the exhaustive oracle.
    OracleCheck {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        Ok(num(a)?..=num(b)?)
    } else {
        let n = num(s)?;
        Ok(n..=n)
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn read_input(input: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if input == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(input)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{input}: {e}")))?;
    }
    Ok(text)
}

fn load_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, Failure> {
    match format {
        InputFormat::Edgelist => parse_edge_list(text)
            .map(|g| vec![g])
            .map_err(|e| Failure::new(EXIT_PARSE, e.to_string())),
        InputFormat::Graph6 => {
            let graphs: Vec<Graph> = text
                .lines()
                .map(|l| l.trim_end_matches('\r'))
                .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l))
                .filter(|l| !l.is_empty())
                .map(|l| parse_graph6(l).map_err(|e| Failure::new(EXIT_PARSE, format!("{l}: {e}"))))
                .collect::<Result<_, _>>()?;
            if graphs.is_empty() {
                return Err(Failure::new(EXIT_PARSE, "no graph in input"));
            }
            Ok(graphs)
        }
    }
}

fn analyze_cmd(
    input: &str,
    format: InputFormat,
    csv: bool,
    oracle_max_n: usize,
) -> Result<(), Failure> {
    let graphs = load_graphs(&read_input(input)?, format)?;
    let cfg = AnalyzeConfig {
        oracle_max_n,
        ..AnalyzeConfig::default()
    };
    let mut anomalies = Vec::new();
    let mut limited = false;
    if csv {
        println!("{}", csv_header());
    }
    for (i, g) in graphs.iter().enumerate() {
        let report = analyze_with(g, &cfg).map_err(|e| match e {
            AnalyzeError::EmptyGraph => Failure::new(EXIT_USAGE, e.to_string()),
            other => Failure::new(EXIT_ANOMALY, other.to_string()),
        })?;
        if csv {
            println!("{}", csv_row(&report));
        } else {
            if i > 0 {
                println!();
            }
            println!("{report}");
        }
        limited |= !report.skipped.is_empty();
        if !report.is_clean() {
            anomalies.push(report.graph_id.clone());
        }
    }
    if !anomalies.is_empty() {
        return Err(Failure::new(
            EXIT_ANOMALY,
            format!("anomalies on: {}", anomalies.join(" ")),
        ));
    }
    if limited {
        return Err(Failure::new(
            EXIT_LIMIT,
            "solver limit reached; some checks skipped",
        ));
    }
    Ok(())
}

fn generate_cmd(
    family: &str,
    n: usize,
    r: Option<usize>,
    p: Option<Probability>,
    seed: Option<u64>,
) -> Result<(), Failure> {
    let spec =
        parse_family(family, n, r, p, seed).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let g = generate(&spec).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let s = encode_graph6(&g).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    println!("{s}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn sweep_cmd(
    mode: Mode,
    n: RangeInclusive<usize>,
    count: Option<usize>,
    p: Option<Probability>,
    seed: Option<u64>,
    oracle_max_n: usize,
    threads: Option<usize>,
    out: &PathBuf,
) -> Result<(), Failure> {
    let mode = match mode {
        Mode::Exhaustive => SweepMode::Exhaustive,
        Mode::Random => {
            let missing =
                |flag: &str| Failure::new(EXIT_USAGE, format!("random mode requires {flag}"));
            SweepMode::Random {
                count: count.ok_or_else(|| missing("--count"))?,
                p: p.ok_or_else(|| missing("--p"))?,
                seed: seed.ok_or_else(|| missing("--seed"))?,
            }
        }
    };
    let spec = SweepSpec {
        mode,
        n,
        oracle_max_n,
        threads,
        ..SweepSpec::exhaustive(1..=1)
    };
    let (reports, summary) = run_sweep(&spec).map_err(|e| match e {
        SweepError::Invalid(_) | SweepError::Pool(_) => Failure::new(EXIT_USAGE, e.to_string()),
        other => Failure::new(EXIT_ANOMALY, other.to_string()),
    })?;
    let csv = phibound_core::emit_csv(&reports);
    fs::write(out, csv).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", out.display())))?;

    println!("reports        {}", summary.reports);
    println!("anomalies      {}", summary.anomalies);
    println!("equality hits  {}", summary.equality_hits);
    if let (Some(min), Some(mean)) = (summary.min_gap, &summary.mean_gap) {
        println!(
            "gap phi - lb   min {min}, mean {mean} (~{:.4})",
            mean.to_f64()
        );
    }
    if summary.anomalies > 0 {
        return Err(Failure::new(
            EXIT_ANOMALY,
            format!("anomalies on: {}", summary.anomalous.join(" ")),
        ));
    }
    if summary.skipped > 0 {
        return Err(Failure::new(
            EXIT_LIMIT,
            format!("{} graphs exceeded a solver limit", summary.skipped),
        ));
    }
    Ok(())
}

fn oracle_cmd(
    max_n: usize,
    count: usize,
    seed: u64,
    threads: Option<usize>,
) -> Result<(), Failure> {
    let summary = oracle_check(max_n, count, seed, threads).map_err(|e| match e {
        SweepError::Invalid(_) => Failure::new(EXIT_USAGE, e.to_string()),
        other => Failure::new(EXIT_ANOMALY, other.to_string()),
    })?;
    println!("checked        {}", summary.checked);
    println!("mismatches     {}", summary.mismatches.len());
    if summary.mismatches.is_empty() {
        Ok(())
    } else {
        let lines: Vec<String> = summary.mismatches.iter().map(ToString::to_string).collect();
        Err(Failure::new(EXIT_ANOMALY, lines.join("\n")))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            input,
            format,
            csv,
            oracle_max_n,
        } => analyze_cmd(&input, format, csv, oracle_max_n),
        Command::Generate {
            family,
            n,
            r,
            p,
            seed,
        } => generate_cmd(&family, n, r, p, seed),
        Command::Sweep {
            mode,
            n,
            count,
            p,
            seed,
            oracle_max_n,
            threads,
            out,
        } => sweep_cmd(mode, n, count, p, seed, oracle_max_n, threads, &out),
        Command::OracleCheck {
            max_n,
            count,
            seed,
            threads,
        } => oracle_cmd(max_n, count, seed, threads),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
