use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fibgold::algorithm::{evaluate, Algorithm, IntWidth, Mode};
use fibgold::bench::{emit_records, run_bench, Format};
use fibgold::capacity::{estimate_bits, estimate_max_index, probe_max_index, ProbeMode};
use fibgold::fastfib::{fib_alternate, lucas_golden};
use fibgold::sequences::{general_via_fib, lucas_linear, SeqParams};
use fibgold::verify::verify;
use fibgold::{Error, Nat, OpCount, PrecisionPolicy};

/// Fibonacci and Lucas numbers by golden-ratio powers and fast doubling.
#[derive(Parser, Debug)]
#[command(name = "fibgold", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print Fₙ computed by one algorithm.
    Compute(ComputeArgs),
    /// Print the Lucas number Lₙ.
    Lucas {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = LucasVia::Golden)]
        via: LucasVia,
    },
    /// Print 𝓛ₙ for the sequence starting 𝓛₀ = l0, 𝓛₁ = l1.
    General {
        #[arg(long)]
        l0: Nat,
        #[arg(long)]
        l1: Nat,
        #[arg(long)]
        n: u64,
    },
    /// Estimate the largest index fitting in E bits, or the bits Fₙ needs.
    Capacity {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        bits: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Find the last index an algorithm gets right under a constrained mode.
    Probe {
        /// i32, i64, f64, f32 or trunc9
        #[arg(long)]
        mode: ProbeMode,
        #[arg(long)]
        algo: Algorithm,
    },
    /// Time algorithms and write CSV or JSON-lines records.
    Bench(BenchArgs),
    /// Run the differential and identity suite up to an index.
    Verify {
        #[arg(long)]
        max_n: u64,
    },
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long)]
    algo: Algorithm,
    #[arg(long)]
    n: u64,
    /// adaptive, double, single or trunc9 (φ-power algorithms only)
    #[arg(long)]
    policy: Option<PrecisionPolicy>,
    /// Run an integer algorithm in overflow-checked 32- or 64-bit arithmetic.
    #[arg(long, value_parser = ["32", "64"])]
    checked_bits: Option<String>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',', required = true)]
    algos: Vec<Algorithm>,
    /// Comma-separated indices.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    #[arg(long)]
    reps: u32,
    #[arg(long, default_value_t = 1)]
    warmup: u32,
    /// exact, i32, i64, f64, f32 or trunc9
    #[arg(long, default_value = "exact")]
    mode: Mode,
    #[arg(long)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LucasVia {
    Golden,
    Linear,
}

/// Failure of a command, carrying its exit status.
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IncompatibleMode { .. } | Error::Config(_) => Failure::Usage(e.to_string()),
            Error::Overflow { .. } | Error::Underflow | Error::Domain(_) => {
                Failure::Compute(e.to_string())
            }
        }
    }
}

fn compute(args: ComputeArgs) -> Result<String, Failure> {
    let mode = match (args.algo.is_integer(), args.policy, args.checked_bits) {
        (true, Some(_), _) => {
            return Err(Failure::Usage(format!(
                "--policy applies to golden, rgolden and binet, not {}",
                args.algo
            )))
        }
        (false, _, Some(_)) => {
            return Err(Failure::Usage(format!(
                "--checked-bits applies to integer algorithms, not {}",
                args.algo
            )))
        }
        (true, None, Some(bits)) => Mode::Checked(IntWidth::from_bits(bits.parse().unwrap())?),
        (_, Some(policy), None) => Mode::Float(policy),
        (_, None, None) => Mode::Exact,
    };
    Ok(evaluate(args.algo, mode, args.n, &mut OpCount::new())?.to_string())
}

fn bench(args: BenchArgs) -> Result<String, Failure> {
    let mut records = Vec::new();
    for algo in &args.algos {
        for &n in &args.n {
            records.push(run_bench(algo.name(), args.mode, n, args.reps, args.warmup)?);
        }
    }
    let text = emit_records(&records, args.format)?;
    match args.out {
        Some(path) => {
            std::fs::write(&path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text.trim_end().to_string()),
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Compute(args) => compute(args),
        Command::Lucas { n, via } => Ok(match via {
            LucasVia::Golden => lucas_golden(n, PrecisionPolicy::default())?,
            LucasVia::Linear => lucas_linear(n),
        }
        .to_string()),
        Command::General { l0, l1, n } => {
            let params = SeqParams { l0, l1 };
            let v: Nat = general_via_fib(&params, n, |i| Ok(fib_alternate(i, &mut OpCount::new())))?;
            Ok(v.to_string())
        }
        Command::Capacity { bits: Some(0), .. } | Command::Capacity { n: Some(0), .. } => {
            Err(Failure::Usage("capacity needs a positive --bits or --n".into()))
        }
        Command::Capacity { bits: Some(eta), .. } => Ok(estimate_max_index(eta).to_string()),
        Command::Capacity { n: Some(n), .. } => Ok(estimate_bits(n).to_string()),
        Command::Capacity { .. } => unreachable!("clap requires --bits or --n"),
        Command::Probe { mode, algo } => Ok(probe_max_index(mode, algo)?.to_string()),
        Command::Bench(args) => bench(args),
        Command::Verify { max_n } => {
            let report = verify(max_n);
            if report.ok() {
                Ok(report.to_string())
            } else {
                println!("{report}");
                Err(Failure::Compute(format!("{} checks failed", report.failed())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
