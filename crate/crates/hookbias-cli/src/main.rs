//! `hookbias`: command-line surface for the hook census toolkit.
//!
//! Subcommands: `expand` (named generating functions), `census` (hook
//! counts by enumeration), `sylvester` (the odd ↔ distinct bijection),
//! `phi` (the pair-set injection), `hooks` (diagram hook lengths),
//! `verify` (claim targets), and `scan` (conjecture sweeps).
//!
//! Exit codes: 0 on success (including evidence-only sweeps), 1 when a
//! verification target or scan finds a violation, 2 on usage errors.
//! `HOOKBIAS_THREADS` caps the worker-thread count.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hookbias_core::census::{census_refined, census_total, Bound, Side};
use hookbias_core::genfun;
use hookbias_core::partition::{Partition, Render};
use hookbias_core::series::TruncatedSeries;
use hookbias_core::sylvester::{inject_pair, psi, sigma, PairPartition};
use hookbias_core::verify::{run, scan, Overrides, ScanTarget, Target};
use hookbias_core::Status;

#[derive(Parser)]
#[command(
    name = "hookbias",
    version,
    about = "Exact hook-length censuses, q-series expansion, and verification for partitions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Odd,
    Distinct,
}

impl From<SideArg> for Side {
    fn from(side: SideArg) -> Side {
        match side {
            SideArg::Odd => Side::Odd,
            SideArg::Distinct => Side::Distinct,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Odd parts to distinct parts.
    Psi,
    /// Distinct parts to odd parts.
    Sigma,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a named generating function.
    ///
    /// Bounded names (a2, b2, a2w, b2w, AL, BL, CL, conj41-lhs, conj41-rhs)
    /// require --L; unbounded names (a2inf, b2inf, a3inf, b3inf, w-a-inf,
    /// w-b-inf, rhs314) reject it.
    Expand {
        /// Generating-function name.
        name: String,
        /// Largest-part bound parameter.
        #[arg(long = "L")]
        l: Option<u32>,
        /// Truncation order: coefficients of q^0 … q^N are printed.
        #[arg(long = "N", default_value_t = 40)]
        n: usize,
    },
    /// Count hooks of one length over a partition family by enumeration.
    Census {
        /// Partition family.
        side: SideArg,
        /// Hook length to count.
        #[arg(long, default_value_t = 2)]
        t: u64,
        /// Largest-part bound (omit for the unbounded family).
        #[arg(long = "L")]
        l: Option<u32>,
        /// Largest partition size to include.
        #[arg(long = "n-max")]
        n_max: u64,
        /// Tabulate by exact hook multiplicity instead of totals.
        #[arg(long)]
        refined: bool,
    },
    /// Apply the odd ↔ distinct bijection to one partition.
    Sylvester {
        direction: Direction,
        /// Partition literal: comma-separated non-increasing parts, `-` for
        /// the empty partition.
        partition: String,
    },
    /// Apply the pair-set injection at bound L to a pair `pi1|pi2`.
    Phi {
        #[arg(long = "L")]
        l: u32,
        /// Pair literal, e.g. `6,5|2`.
        pair: String,
    },
    /// Print the hook lengths of a partition's Young diagram.
    Hooks {
        partition: String,
        /// Also draw the cell diagram.
        #[arg(long)]
        render: bool,
    },
    /// Run a verification target (or `all`).
    Verify {
        /// Target id, e.g. T2.1, Rem2.3, Ntable, NO-z, or all.
        target: String,
        /// Override the target's default largest-bound sweep.
        #[arg(long = "L")]
        l_max: Option<u32>,
        /// Override the target's default size range / truncation.
        #[arg(long = "n-max")]
        n_max: Option<u64>,
    },
    /// Sweep a conjectured inequality (C2.6 or C4.1).
    Scan {
        target: String,
        #[arg(long = "L")]
        l_max: Option<u32>,
        #[arg(long = "n-max")]
        n_max: Option<u64>,
    },
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(outcome) => {
            if let Err(err) = deliver(&cli.out, &outcome.text) {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Respect the HOOKBIAS_THREADS cap before any parallel work starts.
fn configure_threads() {
    if let Ok(value) = std::env::var("HOOKBIAS_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                // A second initialization (e.g. in tests) is harmless.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn deliver(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Expand { name, l, n } => expand(name, *l, *n, cli.format),
        Command::Census { side, t, l, n_max, refined } => {
            census((*side).into(), *t, *l, *n_max, *refined, cli.format)
        }
        Command::Sylvester { direction, partition } => {
            sylvester(*direction, partition, cli.format)
        }
        Command::Phi { l, pair } => phi(*l, pair, cli.format),
        Command::Hooks { partition, render } => hooks(partition, *render, cli.format),
        Command::Verify { target, l_max, n_max } => {
            let target: Target = target.parse()?;
            let ov = Overrides { l_max: *l_max, n_max: *n_max };
            let reports = run(target, &ov);
            render_reports(&reports, matches!(target, Target::All), cli.format)
        }
        Command::Scan { target, l_max, n_max } => {
            let target: ScanTarget = target.parse()?;
            let ov = Overrides { l_max: *l_max, n_max: *n_max };
            let reports = vec![scan(target, &ov)];
            render_reports(&reports, false, cli.format)
        }
    }
}

/// Looks up a generating function by its public name and expands it.
fn expand(name: &str, l: Option<u32>, n: usize, format: Format) -> anyhow::Result<Outcome> {
    type Bounded = fn(u32, usize) -> TruncatedSeries;
    type Unbounded = fn(usize) -> TruncatedSeries;
    const BOUNDED: [(&str, Bounded); 9] = [
        ("a2", genfun::hook2_count_odd),
        ("b2", genfun::hook2_count_distinct),
        ("a2w", genfun::hook2_pairs_odd),
        ("b2w", genfun::hook2_pairs_distinct),
        ("AL", genfun::pair_family_odd),
        ("BL", genfun::pair_family_distinct),
        ("CL", genfun::difference_residue),
        ("conj41-lhs", genfun::dominance_lhs),
        ("conj41-rhs", genfun::dominance_rhs),
    ];
    const UNBOUNDED: [(&str, Unbounded); 7] = [
        ("a2inf", genfun::hook2_count_odd_inf),
        ("b2inf", genfun::hook2_count_distinct_inf),
        ("a3inf", genfun::hook3_count_odd_inf),
        ("b3inf", genfun::hook3_count_distinct_inf),
        ("w-a-inf", genfun::hook2_pairs_odd_inf),
        ("w-b-inf", genfun::hook2_pairs_distinct_inf),
        ("rhs314", genfun::hook2_pairs_gap_inf),
    ];
    let series = if let Some((_, gf)) = BOUNDED.iter().find(|(id, _)| *id == name) {
        let l = l.ok_or_else(|| anyhow::anyhow!("{name} requires --L"))?;
        gf(l, n)
    } else if let Some((_, gf)) = UNBOUNDED.iter().find(|(id, _)| *id == name) {
        anyhow::ensure!(l.is_none(), "{name} does not take --L");
        gf(n)
    } else {
        let known: Vec<&str> = BOUNDED
            .iter()
            .map(|(id, _)| *id)
            .chain(UNBOUNDED.iter().map(|(id, _)| *id))
            .collect();
        anyhow::bail!("unknown generating function {name:?} (known: {})", known.join(", "));
    };
    let text = match format {
        Format::Table => {
            let mut out = String::from("   n  coefficient\n");
            for (k, c) in series.iter() {
                out.push_str(&format!("{k:>4}  {c}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (k, c) in series.iter() {
                out.push_str(&format!("{k},{c}\n"));
            }
            out
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&series)?),
    };
    Ok(Outcome::ok(text))
}

fn census(
    side: Side,
    t: u64,
    l: Option<u32>,
    n_max: u64,
    refined: bool,
    format: Format,
) -> anyhow::Result<Outcome> {
    let bound = match l {
        Some(l) => Bound::Finite(l),
        None => Bound::Unbounded,
    };
    let text = if refined {
        let table = census_refined(side, t, bound, n_max);
        match format {
            Format::Table => {
                let mut out = String::from("   m     n  count\n");
                for (n, by_m) in table.counts.iter().enumerate() {
                    for (m, v) in by_m {
                        out.push_str(&format!("{m:>4}  {n:>4}  {v}\n"));
                    }
                }
                out
            }
            Format::Csv => table.to_csv(),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&table)?),
        }
    } else {
        let table = census_total(side, t, bound, n_max);
        match format {
            Format::Table => {
                let mut out = String::from("   n  hooks\n");
                for (n, v) in table.values.iter().enumerate() {
                    out.push_str(&format!("{n:>4}  {v}\n"));
                }
                out
            }
            Format::Csv => table.to_csv(),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&table)?),
        }
    };
    Ok(Outcome::ok(text))
}

fn sylvester(direction: Direction, literal: &str, format: Format) -> anyhow::Result<Outcome> {
    let input: Partition = literal.parse()?;
    let (name, image) = match direction {
        Direction::Psi => ("psi", psi(&input)?),
        Direction::Sigma => ("sigma", sigma(&input)?),
    };
    let text = match format {
        Format::Json => format!(
            "{}\n",
            json!({"map": name, "input": input.to_string(), "image": image.to_string()})
        ),
        _ => format!("{image}\n"),
    };
    Ok(Outcome::ok(text))
}

fn phi(l: u32, literal: &str, format: Format) -> anyhow::Result<Outcome> {
    let pair: PairPartition = literal.parse()?;
    let image = inject_pair(l, &pair)?;
    let text = match format {
        Format::Json => format!(
            "{}\n",
            json!({"L": l, "input": pair.to_string(), "image": image.to_string()})
        ),
        _ => format!("{image}\n"),
    };
    Ok(Outcome::ok(text))
}

fn hooks(literal: &str, render: bool, format: Format) -> anyhow::Result<Outcome> {
    let pi: Partition = literal.parse()?;
    let diagram = pi.render_young(Render::HookLengths);
    let text = match format {
        Format::Json => {
            let rows: Vec<Vec<u64>> = diagram
                .lines()
                .map(|line| line.split_whitespace().map(|w| w.parse().unwrap()).collect())
                .collect();
            format!("{}\n", json!({"partition": pi.to_string(), "rows": rows}))
        }
        _ if render => {
            format!("{}\n{diagram}", pi.render_young(Render::Cells))
        }
        _ => diagram,
    };
    Ok(Outcome::ok(text))
}

fn render_reports(
    reports: &[hookbias_core::VerificationReport],
    as_array: bool,
    format: Format,
) -> anyhow::Result<Outcome> {
    anyhow::ensure!(format != Format::Csv, "verification reports have no CSV form");
    let text = match format {
        Format::Json if as_array => format!("{}\n", serde_json::to_string_pretty(reports)?),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports[0])?),
        _ => {
            let mut out = String::new();
            for report in reports {
                out.push_str(&format!(
                    "{}  ({:.2?})\n",
                    report.summary_line(),
                    report.elapsed
                ));
            }
            out
        }
    };
    let code = if reports.iter().any(|r| r.status == Status::Violated) { 1 } else { 0 };
    Ok(Outcome { text, code })
}
