use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use matchnest::bijections::*;
use matchnest::enumeration::{distribution, filter_class, ObjectClass, Predicate};
use matchnest::statistics::{matching_stats, perm_stats, poset_stats, Stat, StatRecord, StatTerm};
use matchnest::verify::{registry, run_all, run_check, CheckReport};
use matchnest::{Error, FactorialPoset, FromJson, InversionTable, Matching, Permutation, Poset, TriangularMatrix};

#[derive(Parser)]
#[command(name = "matchnest", version, about = "Matchings, factorial posets and the maps between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every object of a class on [n], one JSON value per line.
    Enumerate {
        class: String,
        n: usize,
        /// Keep only objects satisfying this predicate (repeatable).
        #[arg(long = "filter", value_delimiter = ',')]
        filters: Vec<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Map one object to another class.
    Convert {
        from: Form,
        to: Form,
        /// JSON object, or `-` for stdin.
        object: String,
        /// Which partial inverse of psi to use when starting from a matrix.
        #[arg(long)]
        via: Option<Via>,
    },
    /// Statistics of one object as a JSON record.
    Stats {
        class: Form,
        object: String,
        #[arg(long, value_delimiter = ',')]
        stats: Vec<String>,
    },
    /// Tally of statistic tuples over a class, as CSV.
    Distribution {
        class: String,
        n: usize,
        /// Statistics, optionally shifted: `lev-1`, `des+1`.
        #[arg(long, value_delimiter = ',', required = true)]
        stats: Vec<String>,
        #[arg(long = "filter", value_delimiter = ',')]
        filters: Vec<String>,
    },
    /// Run named checks. Exit status 1 if any fails.
    Verify {
        check: Option<String>,
        #[arg(long, conflicts_with = "check")]
        all: bool,
        #[arg(long)]
        n_max: Option<usize>,
        /// One JSON report per line.
        #[arg(long)]
        json: bool,
        /// Include elapsed_ms in reports.
        #[arg(long)]
        timings: bool,
        /// List registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Form {
    InversionTable,
    Permutation,
    Poset,
    IntervalOrder,
    Matching,
    MatchingNc,
    Matrix,
}

impl Form {
    fn name(self) -> &'static str {
        match self {
            Form::InversionTable => "inversion_table",
            Form::Permutation => "permutation",
            Form::Poset => "poset",
            Form::IntervalOrder => "interval_order",
            Form::Matching => "matching",
            Form::MatchingNc => "matching_nc",
            Form::Matrix => "matrix",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Via {
    #[value(alias = "nnn")]
    NonneighborNesting,
    #[value(alias = "nnc")]
    NonneighborCrossing,
    ZeroOne,
}

enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.kind().to_string();
            let detail = e.to_string();
            let first = detail.lines().next().unwrap_or(&msg).trim_start_matches("error: ");
            eprintln!("error: Usage: {first}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: Io: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut Out) -> Result<ExitCode, Failure> {
    match command {
        Command::Enumerate { class, n, filters, count_only } => {
            let class: ObjectClass = class.parse()?;
            let objects = filter_class(class, n, &parse_predicates(&filters)?)?;
            if count_only {
                writeln!(out, "{}", objects.count())?;
            } else {
                for o in objects {
                    serde_json::to_writer(&mut *out, &o)?;
                    writeln!(out)?;
                }
            }
        }
        Command::Convert { from, to, object, via } => {
            writeln!(out, "{}", convert(from, to, &read_object(&object)?, via)?)?;
        }
        Command::Stats { class, object, stats } => {
            let record = object_stats(class, &read_object(&object)?)?;
            let record = if stats.is_empty() {
                record
            } else {
                let wanted = stats.iter().map(|s| s.parse::<Stat>()).collect::<Result<Vec<_>, _>>()?;
                if let Some(s) = wanted.iter().find(|s| record.get(**s).is_none()) {
                    return Err(Error::StatisticNotApplicable { stat: s.to_string(), class: class.name().into() }.into());
                }
                record.select(&wanted)
            };
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        Command::Distribution { class, n, stats, filters } => {
            let class: ObjectClass = class.parse()?;
            let terms = stats.iter().map(|s| s.parse::<StatTerm>()).collect::<Result<Vec<_>, _>>()?;
            let table = distribution(filter_class(class, n, &parse_predicates(&filters)?)?, &terms)?;
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record(table.stat_names.iter().map(String::as_str).chain(["count"]))?;
            for (tuple, count) in &table.rows {
                csv.write_record(tuple.iter().map(|v| v.to_string()).chain([count.to_string()]))?;
            }
            csv.flush()?;
        }
        Command::Verify { check, all, n_max, json, timings, list } => {
            if list {
                for spec in registry() {
                    writeln!(out, "{:<36} {:<12} n<={}  {}", spec.name, spec.kind.name(), spec.default_n_max, spec.summary)?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = match (check, all) {
                (Some(name), _) => vec![run_check(&name, n_max)?],
                (None, true) => run_all(n_max),
                (None, false) => {
                    eprintln!("error: Usage: give a check name or --all");
                    return Ok(ExitCode::from(2));
                }
            };
            let reports: Vec<CheckReport> =
                reports.into_iter().map(|r| if timings { r.with_timings() } else { r }).collect();
            print_reports(&reports, json, out)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_reports(reports: &[CheckReport], json: bool, out: &mut Out) -> Result<(), Failure> {
    if json {
        for r in reports {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        return Ok(());
    }
    for r in reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        write!(out, "{verdict}  {:<36} n<={:<2} {:<12}", r.check, r.n_max, r.kind.name())?;
        if let Some(ms) = r.elapsed_ms {
            write!(out, " {ms:>6} ms")?;
        }
        if let Some(d) = &r.detail {
            write!(out, "  {d}")?;
        }
        if let Some(w) = &r.witness {
            write!(out, "  witness {w}")?;
        }
        writeln!(out)?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
    Ok(())
}

fn parse_predicates(names: &[String]) -> Result<Vec<Predicate>, Error> {
    names.iter().map(|s| s.parse()).collect()
}

fn read_object(arg: &str) -> Result<Value, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        arg.to_string()
    };
    Ok(serde_json::from_str(&text)?)
}

fn parse<T: FromJson>(v: &Value) -> Result<T, Error> {
    T::from_json(v)
}

fn convert(from: Form, to: Form, object: &Value, via: Option<Via>) -> Result<String, Failure> {
    let unsupported = || Error::UnsupportedConversion { from: from.name().into(), to: to.name().into() };
    if from == Form::Matrix {
        let t: TriangularMatrix = parse(object)?;
        let m = match (to, via) {
            (Form::Matrix, None) => return Ok(serde_json::to_string(&t)?),
            (Form::Matching | Form::MatchingNc, Some(Via::ZeroOne)) => psi_inverse_zero_one(&t)?,
            (Form::Matching, None) | (Form::Matching | Form::MatchingNc, Some(Via::NonneighborNesting)) => {
                psi_inverse_nonneighbor_nesting(&t)
            }
            (Form::MatchingNc, None) | (Form::Matching | Form::MatchingNc, Some(Via::NonneighborCrossing)) => {
                psi_inverse_nonneighbor_crossing(&t)
            }
            _ => return Err(unsupported().into()),
        };
        return Ok(serde_json::to_string(&m)?);
    }
    if via.is_some() {
        return Err(unsupported().into());
    }
    if to == Form::Matrix {
        return match from {
            Form::Matching | Form::MatchingNc => {
                let m: Matching = parse(object)?;
                Ok(serde_json::to_string(&psi_matching_to_matrix(&m))?)
            }
            _ => Err(unsupported().into()),
        };
    }
    let w = match from {
        Form::InversionTable => parse::<InversionTable>(object)?,
        Form::Permutation => perm_to_inv(&parse::<Permutation>(object)?),
        Form::Poset => g_poset_to_inv(&parse::<FactorialPoset>(object)?),
        Form::IntervalOrder => g_poset_to_inv(&canonical_labeling(&parse::<Poset>(object)?)?),
        Form::Matching => f_matching_to_inv(&parse::<Matching>(object)?)?,
        Form::MatchingNc => fnc_matching_to_inv(&parse::<Matching>(object)?)?,
        Form::Matrix => unreachable!(),
    };
    Ok(match to {
        Form::InversionTable => serde_json::to_string(&w)?,
        Form::Permutation => serde_json::to_string(&inv_to_perm(&w))?,
        Form::Poset | Form::IntervalOrder => serde_json::to_string(&g_inv_to_poset(&w))?,
        Form::Matching => serde_json::to_string(&f_inv_to_matching(&w))?,
        Form::MatchingNc => serde_json::to_string(&fnc_inv_to_matching(&w))?,
        Form::Matrix => unreachable!(),
    })
}

fn object_stats(class: Form, object: &Value) -> Result<StatRecord, Failure> {
    Ok(match class {
        Form::Permutation => perm_stats(&parse(object)?),
        Form::Matching | Form::MatchingNc => matching_stats(&parse(object)?),
        Form::Poset => poset_stats(&parse(object)?),
        Form::IntervalOrder => poset_stats(&canonical_labeling(&parse(object)?)?),
        Form::InversionTable => {
            let w: InversionTable = parse(object)?;
            StatRecord([(Stat::Dent, w.distinct_entries() as u64)].into_iter().collect())
        }
        Form::Matrix => {
            return Err(Error::StatisticNotApplicable { stat: "any".into(), class: "matrix".into() }.into());
        }
    })
}
