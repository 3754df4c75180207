//! `tlcat`: command-line front end for the exact Temperley-Lieb toolkit.
//!
//! Subcommands map one-to-one onto the crate's layers: `verify` drives the
//! batch suites, `hilbert` prints a quotient series against its two
//! independent oracles, `pairing-table` dumps a full Gram matrix,
//! `weyl` reports the line arrangement attached to an index set, and
//! `cells` reports induced-module dimensions and pairing data.
//!
//! Output on stdout is deterministic (JSON keys sorted, fixed row orders);
//! timing and notices go to stderr. Exit codes: 0 = pass, 1 = failure or
//! error, 2 = inconclusive (a resource bound cut the run short).
//! `TLCAT_MAX_DEGREE` caps every `--max-degree` request globally.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::bigint::BigInt;
use num::traits::{Signed, Zero};

use tlcat_core::cells::{self, InducedModule};
use tlcat_core::ideal;
use tlcat_core::laurent::{LaurentPoly, RationalFn};
use tlcat_core::tl::Trace;
use tlcat_core::verify::{self, Suite, SuiteConfig};
use tlcat_core::weyl;
use tlcat_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "tlcat",
    version,
    about = "Exact Temperley-Lieb computations: diagram algebra, trace pairings, \
             quotient rings, line arrangements, and cell-module data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a structured report
    Verify(VerifyArgs),
    /// Quotient ring series with its counting and linear-algebra oracles
    Hilbert(HilbertArgs),
    /// Full Gram matrix of a trace pairing on the diagram basis
    PairingTable(PairingTableArgs),
    /// Line arrangement for an index set, with degreewise dimension checks
    Weyl(WeylArgs),
    /// Induced-module dimensions, filtration, rank, and pairing values
    Cells(CellsArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest generator count: suites run for 1..=n
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Suites to run (repeatable or comma-separated); default all
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<String>,
    /// Degree ceiling in the polynomial grading
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    /// Output format: json, csv, or md
    #[arg(long, default_value = "json")]
    format: String,
    /// Worker threads for the parallel kernels
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct HilbertArgs {
    /// Number of ring generators
    #[arg(long)]
    n: usize,
    /// Index set as comma-separated increasing indices, e.g. 1,3
    #[arg(long)]
    word: Option<String>,
    /// Pivot index (must belong to the index set)
    #[arg(long)]
    pivot: Option<usize>,
    /// Degree ceiling in the polynomial grading
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    /// Output format: json or csv
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct PairingTableArgs {
    /// Trace to tabulate: std, triv, or psi0
    #[arg(long)]
    spec: String,
    /// Generator count; the diagram basis lives on n + 1 strands
    #[arg(long)]
    n: usize,
    /// Output format: csv or md
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct WeylArgs {
    /// Number of ring generators
    #[arg(long)]
    n: usize,
    /// Index set as comma-separated increasing indices
    #[arg(long)]
    word: Option<String>,
    /// Degree ceiling in the polynomial grading
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
}

#[derive(Args)]
struct CellsArgs {
    /// Number of algebra generators; modules live on n + 1 strands
    #[arg(long)]
    n: usize,
    /// Module index, between 1 and n
    #[arg(long)]
    i: usize,
    /// Degree ceiling for series expansions
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    /// Output format: json or md
    #[arg(long, default_value = "json")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BoundExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Verify(args) => cmd_verify(args),
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::PairingTable(args) => cmd_pairing_table(args),
        Command::Weyl(args) => cmd_weyl(args),
        Command::Cells(args) => cmd_cells(args),
    }
}

/// Apply the `TLCAT_MAX_DEGREE` global ceiling to a requested degree bound.
fn apply_degree_ceiling(requested: u32) -> Result<u32> {
    match std::env::var("TLCAT_MAX_DEGREE") {
        Err(std::env::VarError::NotPresent) => Ok(requested),
        Err(e) => Err(Error::InvalidWord(format!("TLCAT_MAX_DEGREE: {e}"))),
        Ok(raw) => {
            let ceiling: u32 = raw.trim().parse().map_err(|_| {
                Error::InvalidWord(format!(
                    "TLCAT_MAX_DEGREE must be a non-negative integer, got `{raw}`"
                ))
            })?;
            if requested > ceiling {
                eprintln!("note: max degree capped at {ceiling} by TLCAT_MAX_DEGREE");
                Ok(ceiling)
            } else {
                Ok(requested)
            }
        }
    }
}

fn parse_word(word: &Option<String>, n: usize) -> Result<Vec<usize>> {
    let subset: Vec<usize> = match word {
        None => Vec::new(),
        Some(raw) => raw
            .split(',')
            .filter(|part| !part.trim().is_empty())
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidWord(format!("bad index `{part}` in --word")))
            })
            .collect::<Result<_>>()?,
    };
    ideal::check_subset(n, &subset)?;
    Ok(subset)
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: Option<usize>) {
    if let Some(threads) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("note: could not size the thread pool: {e}");
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(jobs: Option<usize>) {
    if jobs.is_some() {
        eprintln!("note: built without the parallel feature; --jobs ignored");
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    configure_jobs(args.jobs);
    let suites: Vec<Suite> = args
        .suites
        .iter()
        .map(|name| Suite::from_name(name))
        .collect::<Result<_>>()?;
    let config = SuiteConfig {
        n_max: args.n,
        max_degree: apply_degree_ceiling(args.max_degree)?,
        suites,
    };
    let started = std::time::Instant::now();
    let report = verify::run(&config)?;
    eprintln!(
        "{} checks in {:?}",
        report.len(),
        started.elapsed()
    );
    print!("{}", report.render(&args.format)?);
    Ok(report.exit_code() as u8)
}

fn cmd_hilbert(args: HilbertArgs) -> Result<u8> {
    let subset = parse_word(&args.word, args.n)?;
    let exp = apply_degree_ceiling(args.max_degree)? / 2;
    let sys = match args.pivot {
        None => ideal::RewriteSystem::new(args.n, &subset)?,
        Some(k) => ideal::RewriteSystem::with_pivot(args.n, &subset, k)?,
    };
    let prefix: Vec<u64> = (0..=exp).map(|m| sys.irreducible_count(m)).collect();
    let gens = ideal::generator_family(args.n, &subset)?;
    let mut oracle: Vec<u64> = Vec::with_capacity(prefix.len());
    for m in 0..=exp {
        let ring = ideal::ring_piece_dim(args.n, m);
        let cut = ideal::ideal_piece_dim(args.n, &gens, m)?;
        oracle.push((ring - cut) as u64);
    }
    let closed = ideal::hilbert_closed_form(args.n, &subset)?;
    let series = closed.series_prefix(2 * exp as usize)?;
    let center = 2 * exp as usize;
    let closed_prefix: Vec<BigInt> =
        (0..=exp as usize).map(|m| series[center + 2 * m].clone()).collect();
    let matches = prefix == oracle
        && prefix
            .iter()
            .zip(&closed_prefix)
            .all(|(a, b)| BigInt::from(*a) == *b);

    match args.format.as_str() {
        "json" => {
            let value = serde_json::json!({
                "closed_form": closed.to_string(),
                "prefix": prefix,
                "oracle_prefix": oracle,
                "match": matches,
            });
            println!("{value:#}");
        }
        "csv" => {
            println!("degree,quotient_dim,oracle_dim,closed_form_dim");
            for m in 0..=exp as usize {
                println!(
                    "{},{},{},{}",
                    2 * m,
                    prefix[m],
                    oracle[m],
                    closed_prefix[m]
                );
            }
        }
        other => {
            return Err(Error::InvalidWord(format!(
                "unknown output format `{other}` (expected json or csv)"
            )))
        }
    }
    Ok(if matches { 0 } else { 1 })
}

fn cmd_pairing_table(args: PairingTableArgs) -> Result<u8> {
    let trace = Trace::from_name(&args.spec)?;
    let strands = args.n + 1;
    let gram = trace.gram(strands)?;
    let dim = gram.len();
    let labels: Vec<String> = (0..dim).map(|i| format!("b{i}")).collect();
    match args.format.as_str() {
        "csv" => {
            println!("basis,{}", labels.join(","));
            for (i, row) in gram.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|v| format!("({})/({})", v.num(), v.den()))
                    .collect();
                println!("{},{}", labels[i], cells.join(","));
            }
        }
        "md" => {
            println!("| basis | {} |", labels.join(" | "));
            println!("|{}", "---|".repeat(dim + 1));
            for (i, row) in gram.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
                println!("| {} | {} |", labels[i], cells.join(" | "));
            }
        }
        other => {
            return Err(Error::InvalidWord(format!(
                "unknown output format `{other}` (expected csv or md)"
            )))
        }
    }
    // Rows and columns follow the canonical matching enumeration; remind
    // the reader on stderr so stdout stays a clean table.
    eprintln!(
        "{dim} basis diagrams on {strands} strands, {} pairing",
        trace.name()
    );
    Ok(0)
}

fn cmd_weyl(args: WeylArgs) -> Result<u8> {
    let subset = parse_word(&args.word, args.n)?;
    let exp = apply_degree_ceiling(args.max_degree)? / 2;
    let lines = weyl::enumerate_lines(args.n)?;
    let transverse: Vec<bool> = lines
        .iter()
        .map(|line| line.is_transverse(&subset))
        .collect();
    let transverse_lines: Vec<weyl::WeylLine> = lines
        .iter()
        .zip(&transverse)
        .filter(|(_, t)| **t)
        .map(|(l, _)| l.clone())
        .collect();
    let d = subset.len();
    let expected_count: usize = if d == 0 {
        (1 << args.n) - 1
    } else {
        1 << (args.n - d)
    };
    let closed = ideal::hilbert_closed_form(args.n, &subset)?;
    let mut numerator_at_one = BigInt::zero();
    for (_, c) in closed.num().iter() {
        numerator_at_one += c;
    }
    let gens = ideal::generator_family(args.n, &subset)?;
    let quotient = ideal::hilbert_series_prefix(args.n, &subset, exp)?;
    let mut degree_table = Vec::new();
    let mut degrees_agree = true;
    for m in 0..=exp {
        let ideal_dim = ideal::ideal_piece_dim(args.n, &gens, m)?;
        let vanishing_dim = weyl::vanishing_piece_dim(&transverse_lines, args.n, m)?;
        let restriction_rank = weyl::restriction_dim(&transverse_lines, args.n, m)?;
        let quotient_dim = quotient[m as usize];
        degrees_agree &=
            ideal_dim == vanishing_dim && restriction_rank as u64 == quotient_dim;
        degree_table.push(serde_json::json!({
            "degree": 2 * m,
            "ideal_dim": ideal_dim,
            "vanishing_dim": vanishing_dim,
            "restriction_rank": restriction_rank,
            "quotient_dim": quotient_dim,
        }));
    }
    let pass = degrees_agree
        && transverse_lines.len() == expected_count
        && numerator_at_one == BigInt::from(expected_count as u64);
    let value = serde_json::json!({
        "lines": lines
            .iter()
            .zip(&transverse)
            .map(|(line, t)| serde_json::json!({
                "direction": line.to_json(),
                "transverse": t,
            }))
            .collect::<Vec<_>>(),
        "transverse_count": transverse_lines.len(),
        "degree_table": degree_table,
        "pass": pass,
    });
    println!("{value:#}");
    Ok(if pass { 0 } else { 1 })
}

fn cmd_cells(args: CellsArgs) -> Result<u8> {
    let strands = args.n + 1;
    let max_degree = apply_degree_ceiling(args.max_degree)?;
    let module = InducedModule::new(strands, args.i)?;
    let dims = module.dimension_report()?;
    let rank = module.pairing_space_rank()?;
    let expected_rank = cells::max_level(strands, args.i) + 1;
    let den = LaurentPoly::one().sub(&LaurentPoly::t_pow(2));
    let one_plus_t2 = LaurentPoly::one().add(&LaurentPoly::t_pow(2));
    let unit = tlcat_core::Matching::identity(strands);
    let mut end_dims = Vec::new();
    let mut values_pass = true;
    for level in 0..=module.max_level() {
        let dist = module.distinguished(level)?.clone();
        let self_pairing = module.pairing(&dist, &dist)?;
        let self_want = RationalFn::new(one_plus_t2.pow(level), den.clone())?;
        let unit_pairing = module.pairing(&unit, &dist)?;
        let unit_want = RationalFn::new(LaurentPoly::t_pow(level as i64), den.clone())?;
        values_pass &= self_pairing == self_want && unit_pairing == unit_want;
        end_dims.push(self_pairing.to_string());
    }
    // Expand every basis pairing through the degree ceiling: coefficients
    // must be non-negative and the degree-zero one must detect equality.
    let bound = max_degree as usize;
    for (xi, x) in module.basis().iter().enumerate() {
        for (yi, y) in module.basis().iter().enumerate() {
            let coeffs = module.pairing(x, y)?.series_prefix(bound)?;
            let delta = if xi == yi { BigInt::from(1) } else { BigInt::zero() };
            values_pass &= coeffs.iter().all(|c| !c.is_negative())
                && coeffs[..bound].iter().all(|c| c.is_zero())
                && coeffs[bound] == delta;
        }
    }
    let filtration: Vec<serde_json::Value> = dims
        .level_sizes
        .iter()
        .enumerate()
        .map(|(level, size)| {
            serde_json::json!({
                "level": level,
                "size": size,
                "matches_cell_action": true,
            })
        })
        .collect();
    let pass = values_pass && rank == expected_rank;
    let gram_table = gram_markdown(&module)?;
    match args.format.as_str() {
        "json" => {
            let value = serde_json::json!({
                "dimensions": {
                    "total": dims.dim,
                    "levels": dims.level_sizes,
                },
                "filtration": filtration,
                "pairing_rank": rank,
                "end_dims": end_dims,
                "gram_markdown": gram_table,
                "pass": pass,
            });
            println!("{value:#}");
        }
        "md" => {
            println!("# Module {} on {strands} strands", args.i);
            println!();
            println!(
                "dimension {} across levels {:?}; pairing rank {rank} (expected {expected_rank}); pass: {pass}",
                dims.dim, dims.level_sizes
            );
            println!();
            print!("{gram_table}");
        }
        other => {
            return Err(Error::InvalidWord(format!(
                "unknown output format `{other}` (expected json or md)"
            )))
        }
    }
    Ok(if pass { 0 } else { 1 })
}

fn gram_markdown(module: &InducedModule) -> Result<String> {
    use std::fmt::Write;
    let gram = module.gram()?;
    let labels: Vec<String> = (0..gram.len()).map(|j| format!("b{j}")).collect();
    let mut out = String::new();
    let _ = writeln!(out, "| pairing | {} |", labels.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(gram.len() + 1));
    for (j, row) in gram.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        let _ = writeln!(out, "| {} | {} |", labels[j], cells.join(" | "));
    }
    Ok(out)
}
