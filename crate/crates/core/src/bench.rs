//! Timing harness with operation counts.
//!
//! Each measurement runs unrecorded warmup repetitions, then `reps` timed
//! repetitions one after another on a monotonic clock, and keeps the median
//! and the minimum. Operation counts come from a separate instrumented run;
//! they are exact and identical on every repetition.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algorithm::{evaluate, Algorithm, Mode};
use crate::error::{Error, Result};
use crate::fastfib::OpCount;

pub const CSV_HEADER: &str = "algorithm,n,mode,reps,median_ns,min_ns,mults,squares,adds,iters";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: u64,
    pub mode: Mode,
    pub reps: u32,
    pub warmup_reps: u32,
    pub median_ns: u64,
    pub min_ns: u64,
    pub ops: OpCount,
}

/// Flat serialized form shared by the CSV and JSON-lines outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub algorithm: String,
    pub n: u64,
    pub mode: String,
    pub reps: u32,
    pub median_ns: u64,
    pub min_ns: u64,
    pub mults: u64,
    pub squares: u64,
    pub adds: u64,
    pub iters: u64,
}

impl From<&BenchRecord> for BenchRow {
    fn from(r: &BenchRecord) -> Self {
        BenchRow {
            algorithm: r.algorithm.to_string(),
            n: r.n,
            mode: r.mode.to_string(),
            reps: r.reps,
            median_ns: r.median_ns,
            min_ns: r.min_ns,
            mults: r.ops.mults,
            squares: r.ops.squares,
            adds: r.ops.adds,
            iters: r.ops.iters,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json-lines" => Ok(Format::JsonLines),
            _ => Err(Error::Config(format!("unknown output format `{s}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::JsonLines => "jsonl",
        })
    }
}

/// Times `algorithm` (by name) at index `n` under `mode`.
pub fn run_bench(algorithm: &str, mode: Mode, n: u64, reps: u32, warmup: u32) -> Result<BenchRecord> {
    let algorithm: Algorithm = algorithm.parse()?;
    if reps < 3 {
        return Err(Error::Config(format!("need at least 3 timed repetitions, got {reps}")));
    }
    if warmup < 1 {
        return Err(Error::Config("need at least one warmup repetition".into()));
    }

    let mut ops = OpCount::new();
    evaluate(algorithm, mode, n, &mut ops)?;

    for _ in 0..warmup {
        black_box(evaluate(algorithm, mode, black_box(n), &mut OpCount::new())?);
    }

    let mut samples = Vec::with_capacity(reps as usize);
    for _ in 0..reps {
        let mut counter = OpCount::new();
        let start = Instant::now();
        let v = evaluate(algorithm, mode, black_box(n), &mut counter)?;
        let elapsed = start.elapsed();
        black_box(v);
        debug_assert_eq!(counter, ops);
        samples.push((elapsed.as_nanos() as u64).max(1));
    }
    samples.sort_unstable();

    Ok(BenchRecord {
        algorithm,
        n,
        mode,
        reps,
        warmup_reps: warmup,
        median_ns: samples[samples.len() / 2],
        min_ns: samples[0],
        ops,
    })
}

/// Serializes records as CSV (with header) or one JSON object per line.
pub fn emit_records(records: &[BenchRecord], format: Format) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Config("no benchmark records to emit".into()));
    }
    let rows = records.iter().map(BenchRow::from);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row).map_err(|e| Error::Config(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::JsonLines => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(&row).map_err(|e| Error::Config(e.to_string()))?);
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<BenchRow>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Config(format!("bad benchmark csv: {e}")))
}

pub fn parse_json_lines(text: &str) -> Result<Vec<BenchRow>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Config(format!("bad json line: {e}"))))
        .collect()
}
