//! Command-line front end for the `jordan` binary.
//!
//! Data goes to stdout and diagnostics to stderr. Exit status is 0 on
//! success, 1 when a verification sweep finds a mismatch (or an internal
//! failure), and 2 for invalid arguments.

pub mod sweep;

use std::ffi::OsString;
use std::io::{self, Write};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::prime::Prime;
use crate::recursion::{jordan_partition, signed_sequence_traced, CaseTrace};
use crate::seqcore::{JordanPartition, SignedSequence};
use crate::standardness::{classify, direct_verdict, Criterion, Verdict};
use sweep::{run_sweep, Path, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "jordan",
    version,
    about = "Jordan partitions of V_m ⊗ V_n for cyclic p-groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Jordan partition λ(m, n, p).
    Compute(ComputeArgs),
    /// Print the signed sequence s_p(m, n).
    Sequence(SequenceArgs),
    /// Decide whether λ(m, n, p) is standard.
    Standard(StandardArgs),
    /// Tabulate partitions and standardness over a grid.
    Table(TableArgs),
    /// Cross-check independent computations over a grid.
    Verify(VerifyArgs),
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let v: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Prime::new(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    /// Characteristic of the field.
    #[arg(short = 'p', long = "prime", value_parser = parse_prime)]
    pub prime: Prime,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub prime: PrimeArg,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetailFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Tex,
    Text,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
    pub format: RecordFormat,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[command(flatten)]
    pub prime: PrimeArg,
    /// May be 0.
    pub m: u64,
    /// May be 0 when m is positive.
    pub n: u64,
    /// Also list the case taken at every recursive call.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t = DetailFormat::Text)]
    pub format: DetailFormat,
}

#[derive(Debug, Args)]
pub struct StandardArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t = DetailFormat::Text)]
    pub format: DetailFormat,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Largest n on the grid.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// Largest m on the grid; defaults to --max-n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_m: Option<u64>,
}

impl GridArgs {
    fn bounds(&self) -> Result<(u64, u64), String> {
        let max_m = self.max_m.unwrap_or(self.max_n);
        if max_m > self.max_n {
            return Err(format!(
                "--max-m ({max_m}) must not exceed --max-n ({})",
                self.max_n
            ));
        }
        Ok((max_m, self.max_n))
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub prime: PrimeArg,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub prime: PrimeArg,
    /// Largest m*n for the oracle comparison.
    #[arg(long, default_value_t = 900, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Comparisons to run; all applicable ones by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub paths: Vec<Path>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

/// The JSON shape of `compute --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeRecord {
    pub p: Prime,
    pub m: u64,
    pub n: u64,
    pub parts: Vec<u64>,
    pub standard: bool,
}

impl ComputeRecord {
    pub fn from_partition(lp: &JordanPartition) -> Self {
        ComputeRecord {
            p: lp.p(),
            m: lp.m(),
            n: lp.n(),
            parts: lp.parts().to_vec(),
            standard: lp.is_standard(),
        }
    }

    pub fn into_partition(self) -> crate::Result<JordanPartition> {
        JordanPartition::new(self.parts, self.m, self.n, self.p)
    }
}

#[derive(Serialize)]
struct SequenceRecord<'a> {
    p: Prime,
    m: u64,
    n: u64,
    terms: &'a SignedSequence,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a CaseTrace>,
}

#[derive(Serialize)]
struct StandardRecord<'a> {
    p: Prime,
    m: u64,
    n: u64,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

enum Failure {
    Usage(String),
    Runtime(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::NotUnipotent => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn joined(parts: &[u64], sep: &str) -> String {
    parts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> Outcome {
    let p = args.pair.prime.prime;
    let lp = jordan_partition(args.pair.m, args.pair.n, p)?;
    match args.format {
        RecordFormat::Text => writeln!(out, "{lp}")?,
        RecordFormat::Json => json_line(out, &ComputeRecord::from_partition(&lp))?,
        RecordFormat::Csv => {
            writeln!(out, "p,m,n,parts,standard")?;
            let parts = joined(lp.parts(), ";");
            writeln!(
                out,
                "{p},{},{},{parts},{}",
                lp.m(),
                lp.n(),
                lp.is_standard()
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_sequence(args: &SequenceArgs, out: &mut dyn Write) -> Outcome {
    if args.m == 0 && args.n == 0 {
        return Err(Failure::Usage("<M> and <N> cannot both be 0".into()));
    }
    let p = args.prime.prime;
    let (seq, trace) = signed_sequence_traced(args.m, args.n, p)?;
    let (m, n) = (args.m.min(args.n), args.m.max(args.n));
    match args.format {
        DetailFormat::Text => {
            writeln!(out, "{seq}")?;
            if args.trace {
                for entry in trace.entries() {
                    writeln!(out, "{entry}")?;
                }
            }
        }
        DetailFormat::Json => {
            let record = SequenceRecord {
                p,
                m,
                n,
                terms: &seq,
                trace: args.trace.then_some(&trace),
            };
            json_line(out, &record)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_standard(args: &StandardArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let (p, m, n) = (args.pair.prime.prime, args.pair.m, args.pair.n);
    let mut verdict = if p.is_odd() {
        classify(m, n, p)?
    } else {
        writeln!(
            err,
            "warning: p=2 classification open; reporting the direct verdict"
        )?;
        direct_verdict(m, n, p)?
    };
    if args.trace {
        verdict = verdict.with_trace(m, n, p)?;
    }
    match args.format {
        DetailFormat::Text => {
            writeln!(out, "{verdict}")?;
            if let Some(trace) = &verdict.trace {
                for entry in trace.entries() {
                    writeln!(out, "{entry}")?;
                }
            }
        }
        DetailFormat::Json => {
            let (m, n) = (m.min(n), m.max(n));
            json_line(
                out,
                &StandardRecord {
                    p,
                    m,
                    n,
                    verdict: &verdict,
                },
            )?;
        }
    }
    Ok(EXIT_OK)
}

/// One row of `jordan table`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub partition: JordanPartition,
    pub standard: bool,
    /// The closed-form criterion when it certifies standardness, otherwise
    /// the definition.
    pub criterion: Criterion,
}

pub fn table_row(m: u64, n: u64, p: Prime) -> crate::Result<TableRow> {
    let partition = jordan_partition(m, n, p)?;
    let standard = partition.is_standard();
    let criterion = if p.is_odd() && standard {
        let verdict = classify(m, n, p)?;
        if verdict.standard {
            verdict.criterion
        } else {
            Criterion::Direct
        }
    } else {
        Criterion::Direct
    };
    Ok(TableRow {
        partition,
        standard,
        criterion,
    })
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    let p = args.prime.prime;
    let (max_m, max_n) = args.grid.bounds().map_err(Failure::Usage)?;
    match args.format {
        TableFormat::Csv => writeln!(out, "p,m,n,parts,standard,criterion")?,
        TableFormat::Tex => {
            writeln!(out, "\\begin{{tabular}}{{rrrlll}}")?;
            writeln!(out, "$p$ & $m$ & $n$ & parts & standard & criterion \\\\")?;
            writeln!(out, "\\hline")?;
        }
        TableFormat::Text => writeln!(
            out,
            "{:>4} {:>5} {:>5}  {:<8} {:<12} parts",
            "p", "m", "n", "standard", "criterion"
        )?,
    }
    for (m, n) in sweep::box_grid(max_m, max_n) {
        let row = table_row(m, n, p)?;
        let lp = &row.partition;
        match args.format {
            TableFormat::Csv => writeln!(
                out,
                "{p},{m},{n},{},{},{}",
                joined(lp.parts(), ";"),
                row.standard,
                row.criterion
            )?,
            TableFormat::Tex => writeln!(
                out,
                "{p} & {m} & {n} & ${}$ & {} & {} \\\\",
                joined(lp.parts(), ","),
                if row.standard { "yes" } else { "no" },
                row.criterion
            )?,
            TableFormat::Text => writeln!(
                out,
                "{p:>4} {m:>5} {n:>5}  {:<8} {:<12} {lp}",
                row.standard, row.criterion
            )?,
        }
    }
    if args.format == TableFormat::Tex {
        writeln!(out, "\\end{{tabular}}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> Outcome {
    let p = args.prime.prime;
    let (max_m, max_n) = args.grid.bounds().map_err(Failure::Usage)?;
    let paths = if args.paths.is_empty() {
        SweepConfig::default_paths(p)
    } else {
        args.paths.clone()
    };
    let jobs = match args.jobs {
        Some(j) => j as usize,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let config = SweepConfig {
        p,
        budget: args.budget,
        max_m,
        max_n,
        paths,
        jobs,
    };
    let sink = Mutex::new(err);
    let report = run_sweep(&config, |mismatch| {
        let mut err = sink.lock().unwrap_or_else(|e| e.into_inner());
        let line = serde_json::to_string(mismatch).unwrap_or_default();
        let _ = writeln!(err, "mismatch: {line}");
    })?;
    json_line(out, &report)?;
    Ok(if report.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { &mut *err } else { &mut *out };
            let _ = write!(target, "{text}");
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Compute(a) => cmd_compute(a, out),
        Command::Sequence(a) => cmd_sequence(a, out),
        Command::Standard(a) => cmd_standard(a, out, err),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MISMATCH
        }
        // a closed stdout (e.g. piping into `head`) is not an error
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MISMATCH
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("jordan").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_examples() {
        assert_eq!(call(&["compute", "-p", "5", "6", "7"]).1, "12 10 8 5 5 2\n");
        assert_eq!(call(&["compute", "-p", "7", "1", "1"]).1, "1\n");
        let (code, out, _) = call(&["compute", "-p", "3", "6", "8", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"p\":3,\"m\":6,\"n\":8,\"parts\":[9,9,9,9,9,3],\"standard\":false}\n"
        );
        assert_eq!(
            call(&["compute", "-p", "5", "7", "6", "--format", "csv"]).1,
            "p,m,n,parts,standard\n5,6,7,12;10;8;5;5;2,false\n"
        );
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(
            call(&["sequence", "-p", "5", "6", "7"]).1,
            "12 10 8 5 5 2 0 -2 -5 -5 -8 -10 -12\n"
        );
        assert_eq!(call(&["sequence", "-p", "3", "0", "4"]).1, "0 0 0 0\n");
        let out = call(&["sequence", "-p", "5", "6", "7", "--trace"]).1;
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("12 10 8 5 5 2 0 -2 -5 -5 -8 -10 -12"));
        assert_eq!(lines.next(), Some("0 (6,7) case 3 k=1 a=1 b=1 c=1 d=2"));
        assert_eq!(call(&["sequence", "-p", "3", "0", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn standard_examples() {
        assert_eq!(
            call(&["standard", "-p", "3", "4", "5"]).1,
            "standard (theorem2: t=1 i=1 x=1 j=1 y=2 k=0)\n"
        );
        assert_eq!(
            call(&["standard", "-p", "3", "3", "7"]).1,
            "not standard (theorem2)\n"
        );
        let (code, out, err) = call(&["standard", "-p", "2", "2", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "not standard (direct)\n");
        assert!(err.contains("p=2 classification open"));
    }

    #[test]
    fn table_rows() {
        let out = call(&["table", "-p", "5", "--max-n", "7"]).1;
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "p,m,n,parts,standard,criterion");
        assert!(lines.contains(&"5,6,7,12;10;8;5;5;2,false,direct"));
        assert!(lines.contains(&"5,2,4,5;3,true,theorem1"));
        assert_eq!(lines.len(), 1 + 28);
        let out = call(&["table", "-p", "3", "--max-n", "1"]).1;
        assert_eq!(
            out,
            "p,m,n,parts,standard,criterion\n3,1,1,1,true,theorem1\n"
        );
        let tex = call(&["table", "-p", "3", "--max-n", "2", "--format", "tex"]).1;
        assert!(tex.starts_with("\\begin{tabular}"));
        assert!(tex.contains("3 & 2 & 2 & $3,1$ & yes & theorem1 \\\\"));
        assert!(tex.ends_with("\\end{tabular}\n"));
        assert_eq!(
            call(&["table", "-p", "3", "--max-n", "3", "--max-m", "4"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["compute", "-p", "4", "2", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--prime"));
        let (code, _, err) = call(&["compute", "-p", "3", "0", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("<M>"));
        assert_eq!(call(&["compute", "-p", "3", "2"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["compute", "-p", "3", "1", "4294967296"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["verify", "-p", "3", "--jobs", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_p2_theorems_is_rejected() {
        let (code, out, err) = call(&["verify", "-p", "2", "--paths", "direct-theorems"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("classification undefined for p=2"));
    }

    #[test]
    fn compute_record_round_trips() {
        let lp = jordan_partition(6, 7, Prime::new(5).unwrap()).unwrap();
        let json = serde_json::to_string(&ComputeRecord::from_partition(&lp)).unwrap();
        let back: ComputeRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_partition().unwrap(), lp);
    }
}
