use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use springer_core::checks::{self, Ranges, Suite};
use springer_core::combinatorics::{gcd, multinomial, nonempty_subsets};
use springer_core::lattice::{is_fixed, is_symplectic, parse_lattice, stabilizes};
use springer_core::laurent::{char_poly, q};
use springer_core::type_a::{
    default_springer_s, euler_sl, euler_sl_oracle, nu_sl, springer_euler_sl,
    springer_euler_sl_oracle, standard_rep_sl, ParahoricTypeA,
};
use springer_core::type_c::{
    default_springer_s_sp, euler_sp, euler_sp_oracle, nu_sp, springer_euler_sp,
    springer_euler_sp_oracle, standard_rep_sp, SymplecticPartition,
};
use springer_core::Error;

/// Euler characteristics of affine Springer fibers by counting torus-fixed
/// lattice chains.
#[derive(Parser)]
#[command(name = "springer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Family {
    Sl,
    Sp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    Sl,
    Sp,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of the fixed-point variety for a homogeneous element.
    Euler {
        family: Family,
        n: usize,
        s: i64,
        /// Comma list, `full`, or `max:i`.
        #[arg(value_name = "TYPE")]
        type_set: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Euler characteristic of a classical Springer fiber.
    Springer {
        family: Family,
        /// `2,1` for sl; `n0:parts` such as `1:1` for sp.
        partition: String,
        /// Comma list of levels in `[1, n]`, or `full`.
        #[arg(value_name = "TYPE", default_value = "full")]
        type_set: String,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run verification suites: bijections, oracles, matrix, identities or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        s_max: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Tabulate Euler characteristics over a parameter range.
    Table {
        #[arg(long, value_enum, default_value = "all")]
        family: TableFamily,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        s_min: i64,
        #[arg(long, default_value_t = 5)]
        s_max: i64,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the standard homogeneous representative and its characteristic polynomial.
    Rep {
        family: Family,
        n: usize,
        s: i64,
        #[arg(long, default_value_t = 1)]
        b: i64,
        /// JSON lattice to test for stability and fixedness.
        #[arg(long)]
        lattice: Option<PathBuf>,
    },
}

enum Failure {
    Verify(String),
    Params(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Params(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
struct TableRow {
    family: Family,
    n: usize,
    s: i64,
    #[serde(rename = "type")]
    type_set: Vec<usize>,
    chi_formula: String,
    chi_oracle: Option<String>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

impl TableRow {
    fn new(
        family: Family,
        n: usize,
        s: i64,
        type_set: Vec<usize>,
        formula: BigUint,
        oracle: Option<BigUint>,
    ) -> Self {
        TableRow {
            family,
            n,
            s,
            type_set,
            matches: oracle.as_ref().map(|o| *o == formula),
            chi_formula: formula.to_string(),
            chi_oracle: oracle.map(|o| o.to_string()),
        }
    }

    fn csv_record(&self) -> [String; 7] {
        let family = match self.family {
            Family::Sl => "sl",
            Family::Sp => "sp",
        };
        [
            family.to_string(),
            self.n.to_string(),
            self.s.to_string(),
            self.type_set
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            self.chi_formula.clone(),
            self.chi_oracle.clone().unwrap_or_default(),
            self.matches.map(|m| m.to_string()).unwrap_or_default(),
        ]
    }
}

const HEADER: [&str; 7] = [
    "family",
    "n",
    "s",
    "type",
    "chi_formula",
    "chi_oracle",
    "match",
];

fn render(rows: &[TableRow], format: Format) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io_err = |e: csv::Error| Failure::Io(e.to_string());
            w.write_record(HEADER).map_err(io_err)?;
            for r in rows {
                w.write_record(r.csv_record()).map_err(io_err)?;
            }
            w.into_inner().map_err(|e| Failure::Io(e.to_string()))
        }
        Format::Json => {
            let mut out =
                serde_json::to_vec_pretty(rows).map_err(|e| Failure::Io(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>, Failure> {
    let mut out: Vec<usize> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Params(format!("bad integer {t:?} in {text:?}")))
        })
        .collect::<Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `full` expands to `[lo, hi]`, `max:i` to `{i}`, anything else is a comma list.
fn parse_type_set(text: &str, lo: usize, hi: usize) -> Result<Vec<usize>, Failure> {
    let set = if text == "full" {
        (lo..=hi).collect()
    } else if let Some(i) = text.strip_prefix("max:") {
        vec![i
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Params(format!("bad index in {text:?}")))?]
    } else {
        parse_list(text)?
    };
    if set.is_empty() || set.iter().any(|&i| i < lo || i > hi) {
        return Err(Failure::Params(format!(
            "type set {set:?} must be a nonempty subset of [{lo}, {hi}]"
        )));
    }
    Ok(set)
}

fn parse_sp_partition(text: &str) -> Result<SymplecticPartition, Failure> {
    let (n0, parts) = text.split_once(':').ok_or_else(|| {
        Failure::Params(format!(
            "symplectic partition {text:?} must look like n0:part,part"
        ))
    })?;
    let n0 = n0
        .trim()
        .parse::<usize>()
        .map_err(|_| Failure::Params(format!("bad n0 in {text:?}")))?;
    let parts = if parts.trim().is_empty() {
        vec![]
    } else {
        parse_partition(parts)?
    };
    Ok(SymplecticPartition::new(n0, parts)?)
}

fn parse_partition(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Params(format!("bad part {t:?} in {text:?}")))
        })
        .collect()
}

fn euler_row(
    family: Family,
    n: usize,
    s: i64,
    set: Vec<usize>,
    oracle: bool,
) -> Result<TableRow, Error> {
    let (formula, check) = match family {
        Family::Sl => {
            let p = ParahoricTypeA::new(n, set.clone())?;
            let f = euler_sl(n, s, &p)?;
            (
                f,
                if oracle {
                    Some(euler_sl_oracle(n, s, &p)?)
                } else {
                    None
                },
            )
        }
        Family::Sp => {
            let f = euler_sp(n, s, &set)?;
            (
                f,
                if oracle {
                    Some(euler_sp_oracle(n, s, &set)?)
                } else {
                    None
                },
            )
        }
    };
    Ok(TableRow::new(family, n, s, set, formula, check))
}

fn cells(
    family: TableFamily,
    n_min: usize,
    n_max: usize,
    s_min: i64,
    s_max: i64,
) -> Vec<(Family, usize, i64, Vec<usize>)> {
    let mut out = Vec::new();
    let families: &[Family] = match family {
        TableFamily::Sl => &[Family::Sl],
        TableFamily::Sp => &[Family::Sp],
        TableFamily::All => &[Family::Sl, Family::Sp],
    };
    for &fam in families {
        for n in n_min.max(1)..=n_max {
            for s in s_min.max(1)..=s_max {
                if gcd(n as i64, s) != 1 || (fam == Family::Sp && s % 2 == 0) {
                    continue;
                }
                let hi = if fam == Family::Sl { n - 1 } else { n };
                let mut sets = nonempty_subsets(0, hi);
                sets.sort();
                out.extend(sets.into_iter().map(|j| (fam, n, s, j)));
            }
        }
    }
    out
}

fn write_output(bytes: &[u8], out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => Ok(io::stdout().write_all(bytes)?),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Euler {
            family,
            n,
            s,
            type_set,
            oracle,
            format,
        } => {
            let hi = match family {
                Family::Sl => n.saturating_sub(1),
                Family::Sp => n,
            };
            let set = parse_type_set(&type_set, 0, hi)?;
            let row = euler_row(family, n, s, set, oracle)?;
            write_output(&render(std::slice::from_ref(&row), format)?, None)?;
            if row.matches == Some(false) {
                return Err(Failure::Verify("formula and oracle disagree".into()));
            }
        }
        Command::Springer {
            family,
            partition,
            type_set,
            s,
            oracle,
            format,
        } => {
            let row = match family {
                Family::Sl => {
                    let parts = parse_partition(&partition)?;
                    let n: usize = parts.iter().sum();
                    let (set, levels) = if n == 1 && type_set == "full" {
                        (vec![], None)
                    } else {
                        let set = parse_type_set(&type_set, 1, n - 1)?;
                        (set.clone(), Some(set))
                    };
                    let sum = springer_euler_sl(&parts, levels.as_deref(), s)?;
                    let check = if oracle {
                        Some(springer_euler_sl_oracle(&parts, levels.as_deref(), s)?)
                    } else {
                        None
                    };
                    let s = s.unwrap_or_else(|| default_springer_s(parts.len(), n));
                    TableRow::new(Family::Sl, n, s, set, sum, check)
                }
                Family::Sp => {
                    let sp = parse_sp_partition(&partition)?;
                    let n = sp.n();
                    let set = parse_type_set(&type_set, 1, n)?;
                    let sum = springer_euler_sp(&sp, Some(&set), s)?;
                    let check = if oracle {
                        Some(springer_euler_sp_oracle(&sp, Some(&set), s)?)
                    } else {
                        None
                    };
                    let s = s.unwrap_or_else(|| default_springer_s_sp(sp.l(), n));
                    TableRow::new(Family::Sp, n, s, set, sum, check)
                }
            };
            write_output(&render(std::slice::from_ref(&row), format)?, None)?;
            if type_set == "full" {
                let closed = match family {
                    Family::Sl => multinomial(&parse_partition(&partition)?),
                    Family::Sp => parse_sp_partition(&partition)?.full_flag_count(),
                };
                eprintln!("full-flag closed form: {closed}");
            }
            if row.matches == Some(false) {
                return Err(Failure::Verify("formula and oracle disagree".into()));
            }
        }
        Command::Verify {
            suite,
            n_max,
            s_max,
            format,
        } => {
            let suite: Suite = suite.parse()?;
            let reports = checks::run(suite, &Ranges { n_max, s_max });
            match format {
                ReportFormat::Text => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
                ReportFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&reports)
                            .map_err(|e| Failure::Io(e.to_string()))?
                    );
                }
            }
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.name)
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Verify(format!(
                    "failed checks: {}",
                    failed.join(", ")
                )));
            }
        }
        Command::Table {
            family,
            n_min,
            n_max,
            s_min,
            s_max,
            oracle,
            format,
            out,
            jobs,
        } => {
            let work = cells(family, n_min, n_max, s_min, s_max);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::Params(e.to_string()))?;
            let rows: Vec<TableRow> = pool.install(|| {
                work.into_par_iter()
                    .map(|(fam, n, s, j)| euler_row(fam, n, s, j, oracle))
                    .collect::<Result<_, _>>()
            })?;
            write_output(&render(&rows, format)?, out.as_ref())?;
            if rows.iter().any(|r| r.matches == Some(false)) {
                return Err(Failure::Verify(
                    "formula and oracle disagree in at least one row".into(),
                ));
            }
        }
        Command::Rep {
            family,
            n,
            s,
            b,
            lattice,
        } => {
            let l = match &lattice {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Some(parse_lattice(&text)?)
                }
                None => None,
            };
            let b = q(b);
            let (m, nu) = match family {
                Family::Sl => (standard_rep_sl(n, s, &b)?, nu_sl(n, s)),
                Family::Sp => (standard_rep_sp(n, s, &b)?, nu_sp(n, s)),
            };
            print!("{m}");
            println!("char: {}", char_poly(&m));
            if let Some(l) = l {
                if l.dim() != m.dim() {
                    return Err(Failure::Params(format!(
                        "lattice has dimension {}, expected {}",
                        l.dim(),
                        m.dim()
                    )));
                }
                println!("valuation: {}", l.valuation()?);
                println!("stable: {}", stabilizes(&m, &l)?);
                println!("torus fixed: {}", is_fixed(&nu, &l)?);
                if family == Family::Sp {
                    println!("self dual: {}", is_symplectic(&l)?);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Params(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(3)
        }
    }
}
