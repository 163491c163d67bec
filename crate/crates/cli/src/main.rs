mod reproduce;
mod seq;

use std::cmp::Ordering;
use std::fs::File;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use partilog_core::criteria::{predict_eventually_logconcave, predict_r_logconcave, predict_scaled, predict_strong, Prediction};
use partilog_core::exact::{int_rat, parse_rat};
use partilog_core::logconcavity::{
    default_horizon, delta_alpha_table, lhat_table, r_logconcave_empirical, r_logconcave_threshold, scaled_empirical,
    strong_empirical, CheckReport, Verdict,
};
use partilog_core::puiseux::r2_lhat_series;
use partilog_core::{almkvist_head, p_restricted, p_series, qp_from_cnt, rat_to_string, BigRat, CntOptions, Error, PartSpec};

use seq::Tokens;

#[derive(Parser)]
#[command(name = "partilog", version, about = "Restricted partition functions and their log-concavity")]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print p_A(n, k). Example: `eval gen=colored-primes k=6 n=7`.
    Eval {
        /// Sequence tokens and `n=<int>`.
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Quasi-polynomial of p_A(n, k) as JSON.
    Quasipoly {
        #[arg(required = true)]
        args: Vec<String>,
        /// Print one residue row in readable form instead.
        #[arg(long)]
        residue: Option<u64>,
    },
    /// Check a property on p_A(., k); exit 0 holds, 1 fails, 4 unknown.
    Check {
        args: Vec<String>,
        /// logconcave | strong <m> | scaled <alpha> | rlog <r>
        #[arg(long, num_args = 1..=2, required = true)]
        property: Vec<String>,
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Write `n,value,sign` rows over the window.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Criterion prediction as JSON; exit 0 when predicted true.
    Predict {
        args: Vec<String>,
        #[arg(long, num_args = 1..=2, required = true)]
        property: Vec<String>,
    },
    /// Expansion of R^2 L^(j-1) f in powers of 1/n.
    Series {
        args: Vec<String>,
        /// `l,a_l,a_(l-1),...`; only `l` means the monomial n^l.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 1)]
        level: usize,
        /// Defaults to twice the level.
        #[arg(long)]
        order: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Re-run a worked example and compare with the published values.
    Reproduce {
        #[arg(long = "paper-example", value_enum)]
        example: reproduce::Example,
        /// Output directory for `figures`.
        #[arg(long, default_value = "figures")]
        out: PathBuf,
        /// Largest n in the figure tables.
        #[arg(long, default_value_t = 100_000)]
        max_n: u64,
        /// Keep every stride-th row of the figure tables.
        #[arg(long, default_value_t = 1)]
        stride: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Symbolic when the quasi-polynomial fits the budget, else a window scan.
    Auto,
    Symbolic,
    Empirical,
}

pub enum CliError {
    Usage(String),
    Budget(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

enum Prop {
    LogConcave,
    Strong(u64),
    Scaled(BigRat),
    Rlog(usize),
}

fn parse_property(values: &[String], rest: &mut Vec<String>) -> Result<Prop, CliError> {
    let mut values = values.to_vec();
    // `--property logconcave gen=...` swallows one sequence token
    if values.len() == 2 && values[1].contains('=') {
        rest.push(values.pop().unwrap());
    }
    let arg = values.get(1);
    let need = |what: &str| arg.cloned().ok_or_else(|| usage(format!("--property {} needs {what}", values[0])));
    match values[0].as_str() {
        "logconcave" if arg.is_none() => Ok(Prop::LogConcave),
        "strong" => need("a gap m")?.parse().ok().filter(|m| *m > 0).map(Prop::Strong).ok_or_else(|| usage("gap m must be a positive integer")),
        "scaled" => {
            let a = parse_rat(&need("an exponent alpha")?).map_err(|e| usage(format!("bad alpha: {e}")))?;
            if a.is_negative() {
                return Err(usage("alpha must be nonnegative"));
            }
            Ok(Prop::Scaled(a))
        }
        "rlog" => need("an order r")?.parse().ok().filter(|r| *r > 0).map(Prop::Rlog).ok_or_else(|| usage("r must be a positive integer")),
        other => Err(usage(format!("unknown property {other:?}; expected logconcave, strong m, scaled alpha or rlog r"))),
    }
}

fn sign_str(x: &BigRat) -> &'static str {
    if x.is_positive() {
        "1"
    } else if x.is_zero() {
        "0"
    } else {
        "-1"
    }
}

fn ordering_str(o: Ordering) -> &'static str {
    match o {
        Ordering::Greater => "1",
        Ordering::Equal => "0",
        Ordering::Less => "-1",
    }
}

fn write_rows(path: &Path, rows: impl Iterator<Item = (u64, String, &'static str)>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(File::create(path)?);
    w.write_record(["n", "value", "sign"])?;
    for (n, value, sign) in rows {
        w.write_record([n.to_string(), value, sign.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn write_strong_csv(spec: &PartSpec, m: u64, horizon: u64, path: &Path) -> Result<(), CliError> {
    let vals: Vec<BigInt> = p_series(spec, (horizon + m) as usize).into_iter().map(BigInt::from).collect();
    let at = |i: i64| if i < 0 { BigInt::zero() } else { vals[i as usize].clone() };
    let rows = (0..=horizon).map(|n| {
        let i = n as i64;
        let d = int_rat(&(at(i) * at(i) - at(i + m as i64) * at(i - m as i64)));
        let s = sign_str(&d);
        (n, rat_to_string(&d), s)
    });
    write_rows(path, rows)
}

fn write_scaled_csv(spec: &PartSpec, alpha: &BigRat, horizon: u64, path: &Path) -> Result<(), CliError> {
    let table = delta_alpha_table(spec, alpha, 2, horizon)?;
    write_rows(path, table.into_iter().map(|(n, s, v)| (n, v.as_ref().map(rat_to_string).unwrap_or_default(), ordering_str(s))))
}

fn write_lhat_csv(spec: &PartSpec, level: usize, horizon: u64, path: &Path) -> Result<(), CliError> {
    let rows = lhat_table(spec, level, horizon).into_iter().map(|(n, v)| {
        let s = sign_str(&v);
        (n, rat_to_string(&v), s)
    });
    write_rows(path, rows)
}

fn rlog_report(spec: &PartSpec, r: usize, horizon: Option<u64>, method: Method) -> Result<CheckReport, CliError> {
    let empirical = || r_logconcave_empirical(spec, r, horizon.unwrap_or_else(|| default_horizon(spec, r)));
    match method {
        Method::Empirical => Ok(empirical()?),
        Method::Symbolic => Ok(r_logconcave_threshold(spec, r, &CntOptions::default())?),
        Method::Auto => match r_logconcave_threshold(spec, r, &CntOptions::default()) {
            Err(e @ Error::BudgetExceeded { .. }) => {
                let mut rep = empirical()?;
                rep.notes.push(format!("symbolic method skipped: {e}"));
                Ok(rep)
            }
            other => Ok(other?),
        },
    }
}

fn cmd_check(mut args: Vec<String>, property: &[String], horizon: Option<u64>, method: Method, csv: Option<PathBuf>) -> Result<ExitCode, CliError> {
    let prop = parse_property(property, &mut args)?;
    let mut tokens = Tokens::parse(&args).map_err(usage)?;
    let spec = tokens.spec().map_err(usage)?;
    tokens.finish().map_err(usage)?;
    let empirical_only = matches!(prop, Prop::Strong(_) | Prop::Scaled(_));
    if empirical_only && method == Method::Symbolic {
        return Err(usage("only logconcave and rlog have a symbolic method"));
    }
    let window = |r| horizon.unwrap_or_else(|| default_horizon(&spec, r));
    let report = match &prop {
        Prop::LogConcave => rlog_report(&spec, 1, horizon, method)?,
        Prop::Rlog(r) => rlog_report(&spec, *r, horizon, method)?,
        Prop::Strong(m) => strong_empirical(&spec, *m, window(1))?,
        Prop::Scaled(a) => scaled_empirical(&spec, a, window(1))?,
    };
    println!("{}", report.to_json_string());
    if let Some(path) = csv {
        // the symbolic report has no window; tabulate up to its threshold or the default
        let h = horizon.or(report.horizon).unwrap_or_else(|| {
            let r = match prop {
                Prop::Rlog(r) => r,
                _ => 1,
            };
            report.threshold_n.map_or(0, |n| n + 10).max(default_horizon(&spec, r))
        });
        match &prop {
            Prop::LogConcave => write_lhat_csv(&spec, 1, h, &path)?,
            Prop::Rlog(r) => write_lhat_csv(&spec, *r, h, &path)?,
            Prop::Strong(m) => write_strong_csv(&spec, *m, h, &path)?,
            Prop::Scaled(a) => write_scaled_csv(&spec, a, h, &path)?,
        }
    }
    Ok(ExitCode::from(match report.verdict {
        Verdict::HoldsFromN => 0,
        Verdict::FailsInfinitelyOften => 1,
        Verdict::UnknownAtHorizon => 4,
    }))
}

fn cmd_predict(mut args: Vec<String>, property: &[String]) -> Result<ExitCode, CliError> {
    let prop = parse_property(property, &mut args)?;
    let mut tokens = Tokens::parse(&args).map_err(usage)?;
    let spec = tokens.spec().map_err(usage)?;
    tokens.finish().map_err(usage)?;
    let p: Prediction = match &prop {
        Prop::LogConcave => predict_eventually_logconcave(&spec),
        Prop::Strong(_) => predict_strong(&spec),
        Prop::Scaled(a) => predict_scaled(&spec, a),
        Prop::Rlog(r) => predict_r_logconcave(&spec, *r),
    };
    println!("{}", p.to_json_string());
    Ok(ExitCode::from(if p.verdict { 0 } else { 1 }))
}

fn parse_poly(s: &str) -> Result<(usize, Vec<BigRat>), CliError> {
    let mut items = s.split(',').map(str::trim);
    let first = items.next().unwrap_or_default();
    let first = first.strip_prefix("l=").unwrap_or(first);
    let l: usize = first.parse().map_err(|_| usage(format!("bad degree {first:?}")))?;
    let coeffs = items.map(|c| parse_rat(c).map_err(|e| usage(e.to_string()))).collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        let mut mono = vec![BigRat::zero(); l + 1];
        mono[0] = BigRat::from_integer(1.into());
        return Ok((l, mono));
    }
    Ok((l, coeffs))
}

fn cmd_series(args: Vec<String>, poly: Option<String>, level: usize, order: Option<u64>, json: bool) -> Result<ExitCode, CliError> {
    let order = order.unwrap_or(2 * level as u64);
    let (l, top) = match (poly, args.is_empty()) {
        (Some(_), false) => return Err(usage("give either --poly or a sequence")),
        (None, true) => return Err(usage("missing --poly or sequence")),
        (Some(p), true) => parse_poly(&p)?,
        (None, false) => {
            let mut tokens = Tokens::parse(&args).map_err(usage)?;
            let spec = tokens.spec().map_err(usage)?;
            tokens.finish().map_err(usage)?;
            let k = spec.k();
            if order as usize >= k {
                return Err(usage(format!("order {order} needs at least {} parts", order + 1)));
            }
            let head = almkvist_head(&spec, k - order as usize)?;
            (k - 1, head.coeffs)
        }
    };
    let series = r2_lhat_series(l, &top, level, order)?;
    if json {
        println!("{}", series.to_json_string());
    } else {
        println!("{series}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Eval { args } => {
            let mut tokens = Tokens::parse(&args).map_err(usage)?;
            let spec = tokens.spec().map_err(usage)?;
            let n = tokens.take("n").ok_or_else(|| usage("missing n=<int>"))?;
            let n: i64 = n.parse().map_err(|_| usage(format!("bad n {n:?}")))?;
            tokens.finish().map_err(usage)?;
            println!("{}", p_restricted(&spec, n));
            Ok(ExitCode::SUCCESS)
        }
        Command::Quasipoly { args, residue } => {
            let mut tokens = Tokens::parse(&args).map_err(usage)?;
            let spec = tokens.spec().map_err(usage)?;
            tokens.finish().map_err(usage)?;
            let qp = qp_from_cnt(&spec, &CntOptions::default())?;
            match residue {
                Some(r) if r >= qp.period() => return Err(usage(format!("residue {r} out of range for period {}", qp.period()))),
                Some(r) => println!("{}", qp.row(r)),
                None => println!("{}", qp.to_json_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { args, property, horizon, method, csv } => cmd_check(args, &property, horizon, method, csv),
        Command::Predict { args, property } => cmd_predict(args, &property),
        Command::Series { args, poly, level, order, json } => cmd_series(args, poly, level, order, json),
        Command::Reproduce { example, out, max_n, stride } => reproduce::run(example, &out, max_n, stride.max(1)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
