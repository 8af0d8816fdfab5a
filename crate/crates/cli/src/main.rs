//! `specht`: symmetric group characters and Specht module straightening
//! from the command line.
//!
//! Exit status is 0 on success, 1 when a requested check fails, and 2 for
//! usage or parse errors.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use specht_core::verify::{default_budget, registered_suites};
use specht_core::{
    border_strips, char_table, char_table_with, dimension, mn_char, run_suite, skew_char_trace, CharacterTable, Method,
    Partition, Permutation, SkewShape, SkewTableau, Straightener,
};

#[derive(Parser, Debug)]
#[command(
    name = "specht",
    version,
    about = "Exact symmetric group characters and Specht module straightening"
)]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Orthogonality,
    Trace,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character value chi^λ at a cycle type, by border strips.
    Char {
        partition: String,
        cycle_type: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Skew character value, as the trace of a representing matrix.
    ///
    /// The second argument is a permutation in cycle notation if it starts
    /// with `(`, otherwise a cycle type.
    SkewChar {
        shape: String,
        element: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Character table of S_n.
    Table {
        n: usize,
        #[arg(long, value_enum)]
        check: Option<Check>,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        /// Largest n for which `--check trace` is allowed.
        #[arg(long, default_value_t = 8)]
        trace_limit: usize,
        /// Defaults to $SPECHT_CACHE_DIR, then ~/.cache/specht.
        #[arg(long, value_name = "DIR")]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Expansion of the polytabloid of a tableau in the standard basis.
    Straighten {
        shape: String,
        tableau: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Border strips of size k removable from λ.
    BorderStrips {
        partition: String,
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Number of standard tableaux of a (skew) shape.
    Dim {
        shape: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites; all of them if none are named.
    Verify {
        suites: Vec<String>,
        #[arg(long = "suite", value_name = "NAME")]
        suite_flags: Vec<String>,
        /// Override every suite's default size budget.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<specht_core::Error> for Failure {
    fn from(e: specht_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

pub(crate) fn number(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse().expect("integer literal"))
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("json value"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: --threads ignored: {e}");
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Char {
            partition,
            cycle_type,
            format,
        } => {
            let la: Partition = partition.parse()?;
            let rho: Partition = cycle_type.parse()?;
            let v = mn_char(&la, &rho)?;
            match format {
                Format::Text => println!("{v}"),
                Format::Json => {
                    emit(&json!({"partition": la.to_string(), "cycle_type": rho.to_string(), "value": number(&v)}))
                }
            }
        }
        Command::SkewChar { shape, element, format } => {
            let s: SkewShape = shape.parse()?;
            let sigma = if element.trim_start().starts_with('(') {
                Permutation::from_cycles_with_degree(&element, s.size())?
            } else {
                Permutation::class_representative(&element.parse()?)
            };
            let v = skew_char_trace(&s, &sigma)?;
            match format {
                Format::Text => println!("{v}"),
                Format::Json => {
                    emit(&json!({"shape": s.to_string(), "element": sigma.to_string(), "value": number(&v)}))
                }
            }
        }
        Command::Table {
            n,
            check,
            format,
            trace_limit,
            cache_dir,
            no_cache,
        } => {
            if check == Some(Check::Trace) && n > trace_limit {
                return Err(Failure::Usage(format!(
                    "--check trace is limited to n <= {trace_limit}; raise --trace-limit to go further"
                )));
            }
            let dir = if no_cache { None } else { cache::resolve_dir(cache_dir) };
            let table = match dir.as_deref().and_then(|d| cache::load(d, n)) {
                Some(t) => t,
                None => {
                    let t = char_table(n);
                    if let Some(d) = &dir {
                        if let Err(e) = cache::store(d, &t) {
                            eprintln!("warning: could not write cache in {}: {e}", d.display());
                        }
                    }
                    t
                }
            };
            match format {
                TableFormat::Json => emit(&cache::to_json(&table)),
                TableFormat::Tsv => print!("{}", tsv(&table)),
            }
            match check {
                Some(Check::Orthogonality) => {
                    if !(table.rows_orthonormal() && table.columns_orthogonal()) {
                        return Err(Failure::Check(format!("orthogonality check failed for n = {n}")));
                    }
                }
                Some(Check::Trace) if char_table_with(n, Method::Trace) != table => {
                    return Err(Failure::Check(format!("trace engine disagrees for n = {n}")));
                }
                _ => {}
            }
        }
        Command::Straighten { shape, tableau, format } => {
            let s: SkewShape = shape.parse()?;
            let t = SkewTableau::parse_in(s.clone(), &tableau)?;
            let v = Straightener::new().straighten(&t);
            let terms = v.terms();
            match format {
                Format::Text => {
                    for (x, c) in &terms {
                        println!("{c:+} {x}");
                    }
                }
                Format::Json => {
                    let terms: Vec<Value> = terms
                        .iter()
                        .map(|(x, c)| json!({"tableau": x.to_string(), "coeff": number(c)}))
                        .collect();
                    emit(&json!({"shape": s.to_string(), "terms": terms}));
                }
            }
        }
        Command::BorderStrips { partition, k, format } => {
            let la: Partition = partition.parse()?;
            let strips = border_strips(&la, k);
            match format {
                Format::Text => {
                    for (mu, h) in &strips {
                        println!("{mu} ht={h}");
                    }
                }
                Format::Json => emit(&Value::Array(
                    strips
                        .iter()
                        .map(|(mu, h)| json!({"remaining": mu.to_string(), "height": h}))
                        .collect(),
                )),
            }
        }
        Command::Dim { shape, format } => {
            let s: SkewShape = shape.parse()?;
            let d = dimension(&s);
            match format {
                Format::Text => println!("{d}"),
                Format::Json => emit(&json!({"shape": s.to_string(), "dimension": d})),
            }
        }
        Command::Verify {
            suites,
            suite_flags,
            budget,
            format,
        } => {
            let mut names: Vec<String> = suites.into_iter().chain(suite_flags).collect();
            if names.is_empty() {
                names = registered_suites().into_iter().map(String::from).collect();
            }
            let mut reports = Vec::new();
            for name in &names {
                let b = match budget {
                    Some(b) => b,
                    None => default_budget(name)?,
                };
                reports.push(run_suite(name, b)?);
            }
            match format {
                Format::Text => reports.iter().for_each(|r| print!("{r}")),
                Format::Json => println!("{}", serde_json::to_string(&reports).expect("reports serialize")),
            }
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.suite.as_str())
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Check(format!("failed suites: {}", failed.join(", "))));
            }
        }
    }
    Ok(())
}

fn tsv(table: &CharacterTable) -> String {
    let mut out = String::from("label");
    for c in &table.classes {
        out.push('\t');
        out.push_str(&c.to_string());
    }
    out.push('\n');
    for (la, row) in table.labels.iter().zip(&table.values) {
        out.push_str(&la.to_string());
        for v in row {
            out.push('\t');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}
