//! Command line front end for the exact co-Toeplitz engine.
//!
//! Four subcommands: `matrix` exports one operator matrix, `verify`
//! runs named check suites, `relations` analyzes generator relations
//! from a file, and `info` prints tool metadata. All output is JSON
//! (or CSV for matrices at a rational `q`), UTF-8, newline-terminated,
//! and byte-identical across runs with the same flags and seed.
//!
//! Exit codes: 0 on success (for `verify`, all checks satisfied), 1
//! when a verification suite ran but a check came out wrong, 2 for
//! configuration, parse, or usage errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Value};

use cotoeplitz::coalgebra::{CoSymbol, Suq2Instance};
use cotoeplitz::linear::Element;
use cotoeplitz::operators::{
    associated_classical, check_relation, classify_relation, hbar_deform, matrix_of_cosymbol,
    matrix_of_symbol, RelationVerdict, Truncation,
};
use cotoeplitz::scalar::specialization_warning;
use cotoeplitz::serial;
use cotoeplitz::suq2::{normal_order, BasisMonomial, Subspace, WeightFunction, Word};

mod suites;

#[derive(Parser)]
#[command(name = "cotoeplitz", version, about = "Exact co-Toeplitz operators on SU_q(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Deformation parameter: a rational "p/r" or "symbolic".
    #[arg(long, global = true, default_value = "symbolic")]
    q: String,

    /// Weight function: "one" or a table file path.
    #[arg(long, global = true, default_value = "one")]
    weight: String,

    /// Truncation degree of the operator matrices.
    #[arg(long, global = true, default_value_t = 5)]
    trunc: u32,

    /// Holomorphic subspace variant.
    #[arg(long, global = true, value_enum, default_value_t = SubspaceArg::P)]
    subspace: SubspaceArg,

    /// Output format for matrices.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Seed for the randomized suite samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Square root of the deformation step used by `relations`.
    #[arg(long = "hbar-sqrt", global = true, default_value = "1")]
    hbar_sqrt: String,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Export the matrix of one operator.
    Matrix {
        /// Symbol as a word over a/A/c/C or a "k,l,m" triple.
        #[arg(long)]
        symbol: Option<String>,
        /// Co-symbol: the literal "counit" or a JSON file path.
        #[arg(long)]
        cosymbol: Option<String>,
    },
    /// Run a named verification suite.
    Verify { suite: String },
    /// Classify and deform the relations listed in a file.
    Relations { file: PathBuf },
    /// Print tool metadata and the available suites.
    Info,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubspaceArg {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Pprime", alias = "pprime")]
    Pprime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Rational(BigRational),
}

/// Fully resolved configuration shared by every subcommand.
pub struct RunConfig {
    pub q: QMode,
    pub weight: WeightFunction,
    pub weight_label: String,
    pub trunc: u32,
    pub subspace: Subspace,
    pub seed: u64,
    pub hbar_sqrt: BigRational,
}

impl RunConfig {
    pub fn instance(&self) -> Suq2Instance {
        Suq2Instance::new(self.weight.clone(), self.subspace)
    }

    pub fn truncation(&self) -> Truncation {
        Truncation::new(self.trunc)
    }

    /// The rational `q` the adjoint checks run at: the configured value
    /// when it is positive, one half otherwise.
    pub fn adjoint_q(&self) -> BigRational {
        match &self.q {
            QMode::Rational(v) if *v > BigRational::new(0.into(), 1.into()) => v.clone(),
            _ => BigRational::new(1.into(), 2.into()),
        }
    }

    pub fn to_json(&self) -> Value {
        let q = match &self.q {
            QMode::Symbolic => "symbolic".to_string(),
            QMode::Rational(v) => v.to_string(),
        };
        json!({
            "q": q,
            "weight": self.weight_label,
            "trunc": self.trunc,
            "subspace": match self.subspace {
                Subspace::P => "P",
                Subspace::PPrime => "Pprime",
            },
            "seed": self.seed,
            "hbar_sqrt": self.hbar_sqrt.to_string(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let config = resolve_config(&cli)?;
    match &cli.command {
        Command::Matrix { symbol, cosymbol } => {
            cmd_matrix(&config, symbol.as_deref(), cosymbol.as_deref(), cli.format, &cli.output)
        }
        Command::Verify { suite } => cmd_verify(&config, suite, &cli.output),
        Command::Relations { file } => cmd_relations(&config, file, &cli.output),
        Command::Info => cmd_info(&config, &cli.output),
    }
}

fn resolve_config(cli: &Cli) -> Result<RunConfig, String> {
    let q = if cli.q == "symbolic" {
        QMode::Symbolic
    } else {
        let value = serial::parse_rational(&cli.q).map_err(|e| e.to_string())?;
        if value == BigRational::new(0.into(), 1.into()) {
            return Err("q must be nonzero".into());
        }
        if let Some(warning) = specialization_warning(&value) {
            eprintln!("warning: {warning}");
        }
        QMode::Rational(value)
    };

    if cli.trunc < 1 {
        return Err("trunc must be at least 1".into());
    }

    let (weight, weight_label) = if cli.weight == "one" {
        (WeightFunction::one(), "one".to_string())
    } else {
        let text = fs::read_to_string(&cli.weight)
            .map_err(|e| format!("cannot read weight table {}: {e}", cli.weight))?;
        let table = serial::parse_weight_table(&text).map_err(|e| e.to_string())?;
        (table, format!("file:{}", cli.weight))
    };

    let hbar_sqrt = serial::parse_rational(&cli.hbar_sqrt).map_err(|e| e.to_string())?;

    Ok(RunConfig {
        q,
        weight,
        weight_label,
        trunc: cli.trunc,
        subspace: match cli.subspace {
            SubspaceArg::P => Subspace::P,
            SubspaceArg::Pprime => Subspace::PPrime,
        },
        seed: cli.seed,
        hbar_sqrt,
    })
}

fn cmd_matrix(
    config: &RunConfig,
    symbol: Option<&str>,
    cosymbol: Option<&str>,
    format: FormatArg,
    output: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let inst = config.instance();
    let t = config.truncation();
    let matrix = match (symbol, cosymbol) {
        (Some(arg), None) => matrix_of_symbol(&inst, &parse_symbol(arg)?, &t),
        (None, Some(arg)) => matrix_of_cosymbol(&inst, &parse_cosymbol(arg)?, &t),
        _ => return Err("provide exactly one of --symbol or --cosymbol".into()),
    };

    let text = match format {
        FormatArg::Json => {
            let value = serial::matrix_to_json(&matrix).map_err(|e| e.to_string())?;
            pretty(&value)
        }
        FormatArg::Csv => {
            let QMode::Rational(q) = &config.q else {
                return Err("CSV output specializes q; pass --q with a rational value".into());
            };
            serial::matrix_to_csv(&matrix, q).map_err(|e| e.to_string())?
        }
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

/// A symbol argument: either a word over the four letters or a basis
/// index triple.
fn parse_symbol(arg: &str) -> Result<Element<BasisMonomial>, String> {
    if arg.contains(',') {
        let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!("expected k,l,m in {arg:?}"));
        }
        let k: i64 = parts[0].parse().map_err(|_| format!("bad index {:?}", parts[0]))?;
        let l: u32 = parts[1].parse().map_err(|_| format!("bad index {:?}", parts[1]))?;
        let m: u32 = parts[2].parse().map_err(|_| format!("bad index {:?}", parts[2]))?;
        Ok(Element::basis(BasisMonomial::new(k, l, m)))
    } else {
        let word = Word::from_str(arg).map_err(|e| e.to_string())?;
        Ok(normal_order(&word))
    }
}

fn parse_cosymbol(arg: &str) -> Result<CoSymbol<BasisMonomial>, String> {
    if arg == "counit" {
        return Ok(CoSymbol::counit());
    }
    let text =
        fs::read_to_string(arg).map_err(|e| format!("cannot read co-symbol {arg}: {e}"))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| format!("co-symbol {arg}: {e}"))?;
    serial::cosymbol_from_json(&value).map_err(|e| e.to_string())
}

fn cmd_verify(
    config: &RunConfig,
    suite: &str,
    output: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let (report, all_satisfied) = suites::run_verify(config, suite)?;
    emit(output, &pretty(&report))?;
    Ok(if all_satisfied { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_relations(
    config: &RunConfig,
    file: &PathBuf,
    output: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let text = fs::read_to_string(file)
        .map_err(|e| format!("cannot read relations {}: {e}", file.display()))?;
    let relations = serial::parse_relations(&text).map_err(|e| e.to_string())?;

    let inst = config.instance();
    let t = config.truncation();
    let mut entries = Vec::new();
    for rel in &relations {
        let mut assignment = std::collections::BTreeMap::new();
        for (word, _) in rel.iter() {
            for g in word {
                assignment
                    .entry(*g)
                    .or_insert_with(|| matrix_of_symbol(&inst, &Element::basis(*g), &t));
            }
        }
        let verdict = if assignment.is_empty() {
            // A relation with only constant terms needs no operators;
            // judge it against the identity-free sum directly.
            json!({ "verdict": if rel.is_zero() { "candidate" } else { "violated" } })
        } else {
            verdict_json(&check_relation(rel, &assignment).map_err(|e| e.to_string())?)
        };
        let class = classify_relation(rel).map_err(|e| e.to_string())?;
        let classical = associated_classical(rel).map_err(|e| e.to_string())?;
        let deformed = hbar_deform(rel, &config.hbar_sqrt).map_err(|e| e.to_string())?;
        entries.push(json!({
            "relation": serial::ncpoly_to_json(rel).map_err(|e| e.to_string())?,
            "verdict": verdict,
            "class": class.to_string(),
            "degree": rel.degree(),
            "classical_part": serial::ncpoly_to_json(&classical).map_err(|e| e.to_string())?,
            "deformed": serial::ncpoly_to_json(&deformed).map_err(|e| e.to_string())?,
        }));
    }

    let report = json!({
        "config": config.to_json(),
        "relations": entries,
    });
    emit(output, &pretty(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn verdict_json(v: &RelationVerdict<BasisMonomial>) -> Value {
    match v {
        RelationVerdict::Candidate => json!({ "verdict": "candidate" }),
        RelationVerdict::Violated { row, col, value } => json!({
            "verdict": "violated",
            "row": { "k": row.k, "l": row.l, "m": row.m },
            "col": { "k": col.k, "l": col.l, "m": col.m },
            "value": serial::qscalar_to_json(value).unwrap_or(Value::Null),
        }),
    }
}

fn cmd_info(config: &RunConfig, output: &Option<PathBuf>) -> Result<ExitCode, String> {
    let report = json!({
        "name": "cotoeplitz",
        "version": env!("CARGO_PKG_VERSION"),
        "letters": { "a": "generator", "A": "star of a", "c": "generator", "C": "star of c" },
        "basis": "e[k,l,m] = a^k c^l (c*)^m with (a*)^{-k} when k < 0",
        "suites": suites::SUITE_NAMES,
        "config": config.to_json(),
    });
    emit(output, &pretty(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON serialization");
    text.push('\n');
    text
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => match io::stdout().write_all(text.as_bytes()) {
            // A closed pipe on the reading side is not our error.
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                Err(format!("cannot write to stdout: {e}"))
            }
            _ => Ok(()),
        },
    }
}
