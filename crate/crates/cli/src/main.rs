//! Command-line front end for the `heckeq` library: export the
//! composition-indexed matrices, evaluate Jucys-Murphy pairings, run the
//! verification suites, and print centre bases.
//!
//! Output goes to stdout (or `--output`) as JSON by default; `--format csv`
//! renders the same data with human-readable polynomial strings. Exit codes:
//! 0 on success, 1 on a failed verification or internal error, 2 on a usage
//! error.

use std::fmt::Display;
use std::fs;
use std::io::{self, ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heckeq::centre::{geck_rouquier, mk_matrix, CentreBasis, MkMethod, CENTRE_BOUND};
use heckeq::comp_matrices::{
    build_a, build_b, build_sign_family, build_upsilon, build_xi, BuildMethod, CompMatrix,
    SignFamily,
};
use heckeq::compositions::{compositions_below, Composition};
use heckeq::hecke::{quasi_monomial_jm, IncreasingElement};
use heckeq::report::Report;
use heckeq::verify::{Bounds, Suite};

/// Largest composition-size bound accepted by `matrix` and `compositions`
/// (the matrices have dimension `2^(k-1)`).
const MAX_MATRIX_BOUND: usize = 10;

/// Largest rank accepted by `pair`; the pairing forms an explicit algebra
/// product, so this keeps a single evaluation at desk scale.
const MAX_PAIR_RANK: usize = 8;

/// Ceilings for the `verify` bounds flags.
const MAX_VERIFY_K: usize = 8;
const MAX_VERIFY_N: usize = 6;

#[derive(Parser)]
#[command(
    name = "heckeq",
    version,
    about = "Exact Hecke-algebra computations over Z[q, q^-1]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the composition-indexed matrices.
    Matrix {
        /// Matrix family; Mk is the class-by-partition transition block.
        #[arg(long, value_enum, ignore_case = true)]
        which: Which,
        /// Composition-size bound indexing rows and columns.
        #[arg(long)]
        k: usize,
        /// Rank for Mk (defaults to 2k, where the block is square).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Evaluate the pairing of a basis element against a power-sum product
    /// of Jucys-Murphy elements.
    Pair {
        /// Comma-separated strictly increasing generator indices; empty for
        /// the identity.
        #[arg(long, default_value = "")]
        word: String,
        /// Exponent composition, e.g. "[2,1]".
        #[arg(long)]
        mu: String,
        /// Rank of the algebra.
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// Suite to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Composition-size ceiling for series and matrix checks.
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        /// Rank ceiling for Hecke algebra checks.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Rank ceiling for centre solves.
        #[arg(long, default_value_t = 4)]
        centre_n: usize,
    },
    /// Print the dual centre basis and the centre dimension at a rank.
    Centre {
        /// Rank of the algebra.
        #[arg(long)]
        n: usize,
    },
    /// List the compositions of size below a bound, in listing order.
    Compositions {
        /// Size bound (exclusive).
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum Which {
    J,
    K,
    Z,
    Y,
    A,
    B,
    Xi,
    Upsilon,
    Mk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Laurent,
    Qsym,
    Matrices,
    Hecke,
    James,
    DipperJames,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Laurent => Suite::Laurent,
            SuiteArg::Qsym => Suite::Qsym,
            SuiteArg::Matrices => Suite::Matrices,
            SuiteArg::Hecke => Suite::Hecke,
            SuiteArg::James => Suite::James,
            SuiteArg::DipperJames => Suite::DipperJames,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// A terminating failure: usage problems exit 2, internal errors exit 1.
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Internal(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        }
    }
}

impl From<heckeq::Error> for Failure {
    fn from(err: heckeq::Error) -> Failure {
        Failure::Internal(err.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Failure {
        Failure::Internal(err.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => failure.exit(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let sink = Sink {
        path: cli.output,
        format: cli.format,
    };
    match cli.command {
        Command::Matrix { which, k, n } => cmd_matrix(which, k, n, &sink),
        Command::Pair { word, mu, n } => cmd_pair(&word, &mu, n, &sink),
        Command::Verify {
            suite,
            max_k,
            max_n,
            centre_n,
        } => cmd_verify(suite, max_k, max_n, centre_n, &sink),
        Command::Centre { n } => cmd_centre(n, &sink),
        Command::Compositions { k } => cmd_compositions(k, &sink),
    }
}

/// Where and how output is written.
struct Sink {
    path: Option<PathBuf>,
    format: Format,
}

impl Sink {
    fn format(&self) -> Format {
        self.format
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.path {
            Some(path) => fs::write(path, format!("{text}\n"))?,
            None => {
                // Exit quietly when the downstream reader closes the pipe.
                if let Err(err) = writeln!(io::stdout(), "{text}") {
                    if err.kind() == ErrorKind::BrokenPipe {
                        std::process::exit(0);
                    }
                    return Err(err.into());
                }
            }
        }
        Ok(())
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Result<(), Failure> {
        let text =
            serde_json::to_string(value).map_err(|err| Failure::Internal(err.to_string()))?;
        self.emit(&text)
    }

    fn emit_csv(&self, records: &[Vec<String>]) -> Result<(), Failure> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for record in records {
            writer
                .write_record(record)
                .map_err(|err| Failure::Internal(err.to_string()))?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|err| Failure::Internal(err.to_string()))?;
        let text = String::from_utf8(bytes).expect("csv output is UTF-8");
        self.emit(text.trim_end_matches('\n'))
    }
}

fn cmd_matrix(which: Which, k: usize, n: Option<usize>, sink: &Sink) -> Result<ExitCode, Failure> {
    if k == 0 || k > MAX_MATRIX_BOUND {
        return Err(usage(format!("k must be between 1 and {MAX_MATRIX_BOUND}")));
    }
    if which == Which::Mk {
        let n = n.unwrap_or(2 * k);
        if n == 0 {
            return Err(usage("n must be positive"));
        }
        let matrix = mk_matrix(k, n, MkMethod::ViaXi)?;
        return match sink.format() {
            Format::Json => {
                sink.emit_json(&matrix)?;
                Ok(ExitCode::SUCCESS)
            }
            Format::Csv => {
                let records = grid_records(matrix.rows(), matrix.cols(), matrix.entries());
                sink.emit_csv(&records)?;
                Ok(ExitCode::SUCCESS)
            }
        };
    }
    if n.is_some() {
        return Err(usage("--n applies only to Mk"));
    }
    let matrix = build_family(which, k);
    match sink.format() {
        Format::Json => sink.emit_json(&matrix)?,
        Format::Csv => {
            let records = grid_records(matrix.index(), matrix.index(), matrix.entries());
            sink.emit_csv(&records)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn build_family(which: Which, k: usize) -> CompMatrix {
    match which {
        Which::J => build_sign_family(k, SignFamily::J, BuildMethod::ClosedForm),
        Which::K => build_sign_family(k, SignFamily::K, BuildMethod::ClosedForm),
        Which::Z => build_sign_family(k, SignFamily::Z, BuildMethod::ClosedForm),
        Which::Y => build_sign_family(k, SignFamily::Y, BuildMethod::ClosedForm),
        Which::A => build_a(k),
        Which::B => build_b(k),
        Which::Xi => build_xi(k),
        Which::Upsilon => build_upsilon(k),
        Which::Mk => unreachable!("handled by the caller"),
    }
}

/// CSV records for a labelled matrix: a header row of column labels under
/// an `index` corner cell, then one row per row label.
fn grid_records<R: Display, C: Display, E: Display>(
    rows: &[R],
    cols: &[C],
    entries: &[Vec<E>],
) -> Vec<Vec<String>> {
    let mut records = Vec::with_capacity(entries.len() + 1);
    let mut header = Vec::with_capacity(cols.len() + 1);
    header.push("index".to_string());
    header.extend(cols.iter().map(|c| c.to_string()));
    records.push(header);
    for (label, row) in rows.iter().zip(entries) {
        let mut record = Vec::with_capacity(row.len() + 1);
        record.push(label.to_string());
        record.extend(row.iter().map(|e| e.to_string()));
        records.push(record);
    }
    records
}

fn cmd_pair(word: &str, mu: &str, n: usize, sink: &Sink) -> Result<ExitCode, Failure> {
    if n == 0 || n > MAX_PAIR_RANK {
        return Err(usage(format!("n must be between 1 and {MAX_PAIR_RANK}")));
    }
    let indices = parse_word(word)?;
    if !indices.windows(2).all(|w| w[0] < w[1]) {
        return Err(usage("word indices must be strictly increasing"));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i >= n) {
        return Err(usage(format!(
            "generator index {bad} is outside 1..{}",
            n - 1
        )));
    }
    let mu = parse_composition(mu)?;
    if mu.len() > n {
        return Err(usage(format!(
            "mu has {} parts, more than the rank {n}",
            mu.len()
        )));
    }
    let element = IncreasingElement::new(indices).to_basis_element(n);
    let value = element.pairing(&quasi_monomial_jm(&mu, n));
    match sink.format() {
        Format::Json => sink.emit_json(&value)?,
        Format::Csv => sink.emit(&value.to_string())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_word(raw: &str) -> Result<Vec<usize>, Failure> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("invalid generator index {:?}", piece.trim())))
        })
        .collect()
}

fn parse_composition(raw: &str) -> Result<Composition, Failure> {
    Composition::from_str(raw).map_err(usage)
}

fn cmd_verify(
    suite: SuiteArg,
    max_k: usize,
    max_n: usize,
    centre_n: usize,
    sink: &Sink,
) -> Result<ExitCode, Failure> {
    if max_k == 0 || max_k > MAX_VERIFY_K {
        return Err(usage(format!("max-k must be between 1 and {MAX_VERIFY_K}")));
    }
    if max_n == 0 || max_n > MAX_VERIFY_N {
        return Err(usage(format!("max-n must be between 1 and {MAX_VERIFY_N}")));
    }
    if centre_n == 0 || centre_n > CENTRE_BOUND {
        return Err(usage(format!(
            "centre-n must be between 1 and {CENTRE_BOUND}"
        )));
    }
    let bounds = Bounds {
        max_k,
        max_n,
        centre_n,
    };
    let report = Suite::from(suite).run(&bounds);
    match sink.format() {
        Format::Json => sink.emit_json(&report)?,
        Format::Csv => sink.emit_csv(&report_records(&report))?,
    }
    if report.pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        let failures: Vec<_> = report.failures().collect();
        eprintln!(
            "{}",
            serde_json::to_string(&failures).map_err(|err| Failure::Internal(err.to_string()))?
        );
        Ok(ExitCode::from(1))
    }
}

fn report_records(report: &Report) -> Vec<Vec<String>> {
    let mut records = vec![vec![
        "statement".to_string(),
        "parameters".to_string(),
        "pass".to_string(),
        "witness".to_string(),
    ]];
    for check in report.checks() {
        records.push(vec![
            check.statement.clone(),
            check.parameters.to_string(),
            check.pass.to_string(),
            check.witness.clone().unwrap_or_default(),
        ]);
    }
    records
}

#[derive(Serialize)]
struct CentreOutput<'a> {
    n: usize,
    dimension: usize,
    basis: &'a CentreBasis,
}

fn cmd_centre(n: usize, sink: &Sink) -> Result<ExitCode, Failure> {
    if n == 0 || n > CENTRE_BOUND {
        return Err(usage(format!("n must be between 1 and {CENTRE_BOUND}")));
    }
    let basis = geck_rouquier(n)?;
    match sink.format() {
        Format::Json => sink.emit_json(&CentreOutput {
            n,
            dimension: basis.dimension(),
            basis: &basis,
        })?,
        Format::Csv => {
            let mut records = vec![vec![
                "n".to_string(),
                "dimension".to_string(),
                "label".to_string(),
                "word".to_string(),
                "coefficient".to_string(),
            ]];
            for (label, element) in basis.iter() {
                for (perm, coeff) in element.terms() {
                    records.push(vec![
                        n.to_string(),
                        basis.dimension().to_string(),
                        label.to_string(),
                        perm.word_string(),
                        coeff.to_string(),
                    ]);
                }
            }
            sink.emit_csv(&records)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compositions(k: usize, sink: &Sink) -> Result<ExitCode, Failure> {
    if k == 0 || k > MAX_MATRIX_BOUND {
        return Err(usage(format!("k must be between 1 and {MAX_MATRIX_BOUND}")));
    }
    let list = compositions_below(k);
    match sink.format() {
        Format::Json => {
            let strings: Vec<String> = list.iter().map(|c| c.to_string()).collect();
            sink.emit_json(&strings)?;
        }
        Format::Csv => {
            let mut records = vec![vec!["position".to_string(), "composition".to_string()]];
            for (pos, comp) in list.iter().enumerate() {
                records.push(vec![pos.to_string(), comp.to_string()]);
            }
            sink.emit_csv(&records)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
