//! Command-line front end: prime sweeps, identity grids, oracle
//! cross-checks, machine-readable reports.
//!
//! Exit codes: 0 when every check passed, 1 when any check failed,
//! 2 on usage or I/O errors.

pub mod report;
pub mod runner;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use tricon::claims::{self, SweepConfig, VerifyOptions};

use report::{write_records, Format, Record};
use runner::{IdentityBounds, Summary};

#[derive(Parser)]
#[command(
    name = "tricon",
    about = "Verify congruences of central trinomial coefficient sums over prime sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the claim catalog.
    ListClaims,
    /// Sweep congruence claims over a prime range.
    Verify(VerifyArgs),
    /// Run the exact-rational identity grids.
    Identities(IdentityArgs),
    /// Cross-check the modular pipeline against the exact-rational oracle.
    Oracle(OracleArgs),
    /// Congruence sweep, identity grids and oracle cross-check in one run.
    All(AllArgs),
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Report file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, default_value = "jsonl")]
    format: String,
    /// Record real per-check timings in the `micros` field. Off by default
    /// so identical runs produce byte-identical reports.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Clone)]
struct SweepArgs {
    /// Comma-separated claim ids; all claims when omitted.
    #[arg(long)]
    claims: Option<String>,
    /// Inclusive prime range, e.g. 5..3000.
    #[arg(long, default_value = "5..3000")]
    primes: String,
    /// m values for the double-sum claim: a..b or a comma-separated list.
    /// Defaults to -10..10 without 0 and 1.
    #[arg(long, value_name = "SET", allow_hyphen_values = true)]
    m_set: Option<String>,
    /// Largest index n for the integer-indexed divisibility claim.
    #[arg(long, default_value_t = 40)]
    n_max: u64,
    /// (b, c) square grid for the divisibility claim, e.g. -2..2.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    bc_grid: String,
    /// Worker threads; results are identical at any count.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Evaluate claims below their stated prime bound and record the
    /// outcome (p = 2 and p = 3 behaviour).
    #[arg(long)]
    include_small_primes: bool,
    /// Evaluate the double-sum claim by its direct O(p^2) route instead of
    /// the O(p) swapped-order route.
    #[arg(long)]
    thm3_direct: bool,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Clone)]
struct IdentityGridArgs {
    /// Bound for the two lemma grids, the transform pair and the
    /// hockey-stick grid.
    #[arg(long, default_value_t = 60)]
    grid_lemmas: u64,
    /// Bound for the integrated-binomial grid.
    #[arg(long, default_value_t = 40)]
    grid_integral: u64,
    /// Bound for the telescoping-certificate grid.
    #[arg(long, default_value_t = 30)]
    grid_certificate: u64,
    /// Bound for the trinomial-forms grid.
    #[arg(long, default_value_t = 120)]
    grid_forms: u64,
}

#[derive(Args, Clone)]
struct IdentityArgs {
    #[command(flatten)]
    grids: IdentityGridArgs,
    /// (b, c) grid for the trinomial-forms checks.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    bc_grid: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Clone)]
struct OracleArgs {
    /// Comma-separated claim ids; all oracle-supported claims when omitted.
    #[arg(long)]
    claims: Option<String>,
    /// Cross-check primes up to this bound.
    #[arg(long, default_value_t = 97)]
    oracle_max_p: u64,
    /// m values for the double-sum claim.
    #[arg(long, value_name = "SET", default_value = "-3,2,5,6,7", allow_hyphen_values = true)]
    m_set: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Clone)]
struct AllArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    #[command(flatten)]
    grids: IdentityGridArgs,
    /// Cross-check primes up to this bound.
    #[arg(long, default_value_t = 97)]
    oracle_max_p: u64,
    #[command(flatten)]
    output: OutputArgs,
}

/// Run the CLI with the full argument vector (including argv[0]).
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text; help and version are
            // not errors, anything else is a usage error
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(fail_count) => {
            if fail_count == 0 {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<u64> {
    match cli.command {
        Command::ListClaims => {
            for claim in claims::list_claims() {
                let base = if claim.integer_indexed { "n" } else { "p" };
                println!(
                    "{:<10} mod {:<4} [{}]  {}",
                    claim.id,
                    format!("{base}^{}", claim.modulus_exponent),
                    claim.tag,
                    claim.statement
                );
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let start = Instant::now();
            let (ids, cfg) = sweep_setup(&args.sweep)?;
            let (records, summary) = runner::cmd_verify(&ids, &cfg, args.output.timings)?;
            emit(&records, &args.output)?;
            print_summary("congruence", &summary, start);
            Ok(summary.fail)
        }
        Command::Identities(args) => {
            let start = Instant::now();
            let bounds = identity_bounds(&args.grids, &args.bc_grid)?;
            let (records, summary) = runner::cmd_identities(&bounds, args.output.timings);
            emit(&records, &args.output)?;
            print_summary("identity", &summary, start);
            Ok(summary.fail)
        }
        Command::Oracle(args) => {
            let start = Instant::now();
            let ids = claim_selection(&args.claims)?;
            let m_values = parse_i64_set(&args.m_set)?;
            let (records, summary) =
                runner::cmd_oracle(&ids, args.oracle_max_p, &m_values, args.output.timings)?;
            emit(&records, &args.output)?;
            print_summary("oracle", &summary, start);
            Ok(summary.fail)
        }
        Command::All(args) => {
            let start = Instant::now();
            let (ids, cfg) = sweep_setup(&args.sweep)?;
            let (mut records, congruence) =
                runner::cmd_verify(&ids, &cfg, args.output.timings)?;
            let bounds = identity_bounds(&args.grids, &args.sweep.bc_grid)?;
            let (identity_records, identity) =
                runner::cmd_identities(&bounds, args.output.timings);
            records.extend(identity_records);
            let (oracle_records, oracle) = runner::cmd_oracle(
                &ids,
                args.oracle_max_p,
                runner::ORACLE_M_VALUES,
                args.output.timings,
            )?;
            records.extend(oracle_records);
            emit(&records, &args.output)?;
            print_summary("congruence", &congruence, start);
            print_summary("identity", &identity, start);
            print_summary("oracle", &oracle, start);
            Ok(congruence.fail + identity.fail + oracle.fail)
        }
    }
}

fn emit(records: &[Record], output: &OutputArgs) -> Result<()> {
    let format = parse_format(&output.format)?;
    write_records(records, format, output.out.as_deref())
        .context("writing the report failed")?;
    Ok(())
}

fn print_summary(kind: &str, summary: &Summary, start: Instant) {
    eprintln!(
        "{kind}: {} pass, {} fail, {} inapplicable ({:.2?})",
        summary.pass,
        summary.fail,
        summary.inapplicable,
        start.elapsed()
    );
}

fn sweep_setup(args: &SweepArgs) -> Result<(Vec<&'static str>, SweepConfig)> {
    let ids = claim_selection(&args.claims)?;
    let (lo, hi) = parse_range_u64(&args.primes)?;
    if lo < 2 {
        bail!("prime range must start at 2 or above, got {lo}");
    }
    if hi < lo {
        bail!("empty prime range {lo}..{hi}");
    }
    if hi > 100_000_000 {
        bail!("prime bound {hi} is beyond the supported sweep scale");
    }
    if args.threads == 0 {
        bail!("--threads must be at least 1");
    }
    let m_values = match &args.m_set {
        Some(spec) => parse_i64_set(spec)?,
        None => claims::default_m_values(),
    };
    let cfg = SweepConfig {
        prime_lo: lo,
        prime_hi: hi,
        m_values,
        sun_n_max: args.n_max,
        bc_grid: parse_bc_grid(&args.bc_grid)?,
        threads: args.threads,
        options: VerifyOptions {
            allow_small_primes: args.include_small_primes,
            thm3_direct: args.thm3_direct,
            rhs_offset: 0,
        },
    };
    Ok((ids, cfg))
}

fn identity_bounds(grids: &IdentityGridArgs, bc_grid: &str) -> Result<IdentityBounds> {
    Ok(IdentityBounds {
        lemmas: grids.grid_lemmas,
        integral: grids.grid_integral,
        certificate: grids.grid_certificate,
        forms: grids.grid_forms,
        bc_grid: parse_bc_grid(bc_grid)?,
    })
}

fn claim_selection(spec: &Option<String>) -> Result<Vec<&'static str>> {
    match spec {
        None => Ok(runner::all_claim_ids()),
        Some(s) => {
            let mut ids = Vec::new();
            for part in s.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                match claims::find_claim(part) {
                    Some(c) => ids.push(c.id),
                    None => bail!("unknown claim id `{part}`"),
                }
            }
            if ids.is_empty() {
                bail!("--claims selected nothing");
            }
            Ok(ids)
        }
    }
}

fn parse_format(s: &str) -> Result<Format> {
    match s {
        "jsonl" => Ok(Format::Jsonl),
        "csv" => Ok(Format::Csv),
        other => bail!("unknown format `{other}` (expected jsonl or csv)"),
    }
}

fn parse_range_u64(s: &str) -> Result<(u64, u64)> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u64 = lo.trim().parse().context("bad range start")?;
        let hi: u64 = hi.trim().parse().context("bad range end")?;
        Ok((lo, hi))
    } else {
        let v: u64 = s.trim().parse().context("bad range")?;
        Ok((v, v))
    }
}

fn parse_i64_set(s: &str) -> Result<Vec<i64>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().context("bad set start")?;
        let hi: i64 = hi.trim().parse().context("bad set end")?;
        if hi < lo {
            bail!("empty set {lo}..{hi}");
        }
        Ok((lo..=hi).collect())
    } else {
        let mut values = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            values.push(part.parse::<i64>().context("bad set element")?);
        }
        if values.is_empty() {
            bail!("empty value set `{s}`");
        }
        Ok(values)
    }
}

fn parse_bc_grid(s: &str) -> Result<Vec<(i64, i64)>> {
    let (lo, hi) = {
        let (lo, hi) = s
            .split_once("..")
            .with_context(|| format!("bad grid spec `{s}` (expected lo..hi)"))?;
        (
            lo.trim().parse::<i64>().context("bad grid start")?,
            hi.trim().parse::<i64>().context("bad grid end")?,
        )
    };
    if hi < lo {
        bail!("empty grid {lo}..{hi}");
    }
    let mut grid = Vec::new();
    for b in lo..=hi {
        for c in lo..=hi {
            grid.push((b, c));
        }
    }
    Ok(grid)
}
