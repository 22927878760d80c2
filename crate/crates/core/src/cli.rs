//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on usage or domain errors, 2 when the
//! closed form and the minor-sum oracle disagree.

use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::degree::{allowable_range, degree_verified, degree_with_workers, DegreeQuery, DegreeResult};
use crate::error::Error;
use crate::exactnum::render_integer;
use crate::indexseq::IndexSequence;
use crate::psi::{psi_closed, psi_oracle, PsiCache};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Number of cache entries re-evaluated when a cache file is loaded.
pub const CACHE_SPOT_CHECKS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "sdp-degree",
    version,
    about = "Exact algebraic degree of semidefinite programming"
)]
pub struct Command {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Verb {
    /// Compute a single δ(m, n, r).
    Degree {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// δ(m, n, r) for every rank 1..n-1 (or just --r) over its allowable range.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Evaluate ψ on an index sequence such as 1,2,5.
    Psi {
        #[arg(long)]
        seq: IndexSequence,
    },
    /// The coefficients δ(m, n, r) over the allowable range of m.
    Bidegree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// Cross-check the closed form against the minor sum; omitted --r or --m
    /// are swept over every value.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        m: Option<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, clap::Args)]
pub struct Options {
    /// Also evaluate through the Pascal-minor oracle and require agreement.
    #[arg(long, global = true)]
    pub oracle: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Worker count, or `max` for the machine's available parallelism.
    #[arg(long, global = true, default_value = "max")]
    pub threads: Threads,
    /// Read ψ values from, and write them back to, this file.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Max,
    Count(NonZeroUsize),
}

impl Threads {
    pub fn resolve(self) -> usize {
        match self {
            Threads::Max => std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
            Threads::Count(k) => k.get(),
        }
    }
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "max" {
            return Ok(Threads::Max);
        }
        s.parse::<NonZeroUsize>()
            .map(Threads::Count)
            .map_err(|_| format!("expected a positive integer or `max`, got {s:?}"))
    }
}

impl fmt::Display for Threads {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threads::Max => f.write_str("max"),
            Threads::Count(k) => write!(f, "{k}"),
        }
    }
}

/// Parses arguments without the program name. Unknown flags are errors.
pub fn parse_args<I, S>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("sdp-degree")).chain(argv.into_iter().map(Into::into));
    Command::try_parse_from(args)
}

/// One computed δ value as written to standard output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct OutputRecord {
    pub m: u64,
    pub n: u32,
    pub r: u32,
    /// Exact decimal string.
    pub value: String,
    pub term_count: u64,
    pub in_range: bool,
    pub elapsed_ms: u64,
}

impl OutputRecord {
    fn new(q: DegreeQuery, d: &DegreeResult, started: Instant) -> Self {
        Self {
            m: q.m,
            n: q.n,
            r: q.r,
            value: render_integer(&d.value),
            term_count: d.term_count,
            in_range: d.in_range,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    fn plain(&self) -> String {
        format!(
            "delta({},{},{}) = {}  ({} terms, {}, {} ms)",
            self.m,
            self.n,
            self.r,
            self.value,
            self.term_count,
            if self.in_range { "in range" } else { "out of range" },
            self.elapsed_ms
        )
    }

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.m, self.n, self.r, self.value, self.term_count, self.in_range
        )
    }
}

pub const CSV_HEADER: &str = "m,n,r,value,term_count,in_range";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct PsiRecord {
    pub seq: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OracleMismatch { .. } => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

/// Parses `argv` (without the program name) and runs it.
pub fn execute<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cmd) => run(&cmd, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            }
        }
    }
}

pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cache = match &cmd.options.cache {
        Some(path) => load_cache(path, err),
        None => PsiCache::new(),
    };
    let status = match dispatch(cmd, &cache, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_MISMATCH
        }
    };
    if let Some(path) = &cmd.options.cache {
        if let Err(e) = store_cache(path, &cache) {
            let _ = writeln!(err, "warning: could not write cache {}: {e}", path.display());
        }
    }
    status
}

fn load_cache(path: &Path, err: &mut dyn Write) -> PsiCache {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return PsiCache::new(),
        Err(e) => {
            let _ = writeln!(
                err,
                "warning: cannot read cache {}: {e}; starting empty",
                path.display()
            );
            return PsiCache::new();
        }
    };
    match PsiCache::load(BufReader::new(file), CACHE_SPOT_CHECKS) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "warning: ignoring cache {}: {e}", path.display());
            PsiCache::new()
        }
    }
}

fn store_cache(path: &Path, cache: &PsiCache) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    cache.save(io::BufWriter::new(File::create(&tmp)?))?;
    std::fs::rename(tmp, path)
}

fn dispatch(cmd: &Command, cache: &PsiCache, out: &mut dyn Write) -> Result<(), Failure> {
    let opts = &cmd.options;
    let workers = opts.threads.resolve();
    let evaluate = |q: DegreeQuery| -> Result<OutputRecord, Failure> {
        let started = Instant::now();
        let d = if opts.oracle {
            degree_verified(q)?
        } else {
            degree_with_workers(q, cache, workers)
        };
        Ok(OutputRecord::new(q, &d, started))
    };
    match cmd.verb {
        Verb::Degree { m, n, r } => {
            let rec = evaluate(DegreeQuery::new(m, n, r)?)?;
            write_records(out, opts.format, &[rec], false)?;
        }
        Verb::Bidegree { n, r } => {
            let (lo, hi) = allowable_range(n, r)?;
            let recs = (lo..=hi)
                .map(|m| evaluate(DegreeQuery::new(m, n, r)?))
                .collect::<Result<Vec<_>, _>>()?;
            write_records(out, opts.format, &recs, true)?;
        }
        Verb::Table { n, r } => {
            let ranks: Vec<u32> = match r {
                Some(r) => vec![r],
                None if n >= 2 => (1..n).collect(),
                None => return Err(Error::RankOutOfRange { n, r: 1 }.into()),
            };
            let mut recs = Vec::new();
            for r in ranks {
                let (lo, hi) = allowable_range(n, r)?;
                for m in lo..=hi {
                    recs.push(evaluate(DegreeQuery::new(m, n, r)?)?);
                }
            }
            write_records(out, opts.format, &recs, true)?;
        }
        Verb::Verify { n, r, m } => {
            let top = u64::from(n) * (u64::from(n) + 1) / 2;
            let ranks: Vec<u32> = r.map_or_else(|| (0..=n).collect(), |r| vec![r]);
            let weights: Vec<u64> = m.map_or_else(|| (0..=top).collect(), |m| vec![m]);
            let mut recs = Vec::new();
            for &r in &ranks {
                for &m in &weights {
                    let q = DegreeQuery::new(m, n, r)?;
                    let started = Instant::now();
                    recs.push(OutputRecord::new(q, &degree_verified(q)?, started));
                }
            }
            write_records(out, opts.format, &recs, true)?;
        }
        Verb::Psi { ref seq } => {
            let value = psi_closed(seq, cache);
            let oracle = opts.oracle.then(|| psi_oracle(seq));
            let rec = PsiRecord {
                seq: seq.to_string(),
                value: render_integer(&value),
                oracle: oracle.as_ref().map(render_integer),
                agree: oracle.as_ref().map(|o| *o == value),
            };
            write_psi(out, opts.format, &rec)?;
            if rec.agree == Some(false) {
                return Err(Failure::Mismatch(format!(
                    "psi({}) closed form {} differs from minor sum {}",
                    rec.seq,
                    rec.value,
                    rec.oracle.unwrap_or_default()
                )));
            }
        }
    }
    Ok(())
}

fn write_records(out: &mut dyn Write, format: Format, recs: &[OutputRecord], as_list: bool) -> io::Result<()> {
    match format {
        Format::Plain => {
            for r in recs {
                writeln!(out, "{}", r.plain())?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in recs {
                writeln!(out, "{}", r.csv())?;
            }
        }
        Format::Json => {
            let text = if as_list {
                serde_json::to_string_pretty(recs)
            } else {
                serde_json::to_string_pretty(&recs[0])
            };
            writeln!(out, "{}", text.map_err(io::Error::other)?)?;
        }
    }
    Ok(())
}

fn write_psi(out: &mut dyn Write, format: Format, rec: &PsiRecord) -> io::Result<()> {
    match format {
        Format::Plain => {
            writeln!(out, "psi({}) = {}", rec.seq, rec.value)?;
            if let (Some(oracle), Some(agree)) = (&rec.oracle, rec.agree) {
                writeln!(out, "psi({}) via minors = {}", rec.seq, oracle)?;
                writeln!(out, "{}", if agree { "routes agree" } else { "routes DISAGREE" })?;
            }
        }
        Format::Csv => {
            writeln!(out, "seq,value,oracle,agree")?;
            writeln!(
                out,
                "\"{}\",{},{},{}",
                rec.seq,
                rec.value,
                rec.oracle.as_deref().unwrap_or(""),
                rec.agree.map_or(String::new(), |a| a.to_string())
            )?;
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(rec).map_err(io::Error::other)?)?;
        }
    }
    Ok(())
}
