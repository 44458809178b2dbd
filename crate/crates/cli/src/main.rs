//! Command-line scanner and verifier for Wieferich primes and the
//! monogenicity of the trinomial family x^(2p) + 2x^p + 2.
//!
//! Subcommands: `scan` (range scan with cross-check policy), `check`
//! (single-prime deep report), `identities` (congruence identity suite over a
//! range), `disc` (closed-form vs resultant discriminant).
//!
//! Exit codes: 0 clean, 1 mathematical contradiction found, 2 usage error,
//! 3 internal fault.

mod checkpoint;
mod output;
mod scan;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use monotri::arith::MAX_PRIME;
use monotri::report::{check_prime, run_identity_suite, CheckOptions};
use monotri::sieve::primes_in;
use monotri::{gfp, zpoly, Error, PrimeP};

use output::{emit_record, Format};
use scan::{CrossCheck, ScanConfig, IDENTITY_SEED};

/// Degree cap for the resultant route in `disc` and `check --full`: the
/// Sylvester elimination is exact but quartic-ish in the degree, so the
/// comparison is limited to 2p of at most 30.
const DISC_DEGREE_CEILING: u64 = 30;

#[derive(Parser)]
#[command(
    name = "monotri",
    version,
    about = "Scan primes for the Wieferich condition and cross-check that \
             x^(2p) + 2x^p + 2 is monogenic exactly for the non-Wieferich ones",
    after_help = "Exit codes: 0 clean, 1 mathematical contradiction, 2 usage error, 3 internal fault."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a prime range: Wieferich fast path plus a cross-check policy
    #[command(after_help = format!(
        "CSV columns: {}\n\nThe checkpoint file refuses to resume under a \
         different configuration. Records are emitted in prime order whatever \
         --jobs says; timing fields vary run to run, everything else is \
         deterministic.",
        output::CSV_HEADER
    ))]
    Scan {
        /// Range start (inclusive)
        #[arg(long)]
        from: u64,
        /// Range end (inclusive)
        #[arg(long)]
        to: u64,
        /// Which primes also get the monogenicity path: none, all, every:N, sample:K
        #[arg(long, default_value = "none")]
        cross_check: String,
        /// Run the congruence identity suite on cross-checked primes
        #[arg(long)]
        identities: bool,
        /// Run the Dedekind oracle on cross-checked primes up to this bound (0 = off)
        #[arg(long, default_value_t = 0)]
        dedekind_max_p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Checkpoint file for interrupt/resume
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Deep verification report for a single prime
    Check {
        /// The prime to verify
        p: u64,
        /// Also run the Dedekind oracle and the discriminant comparison
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Dedekind oracle bound for --full (capped by the degree ceiling)
        #[arg(long, default_value_t = 4000)]
        dedekind_max_p: u64,
    },
    /// Run the congruence identity suite over a prime range
    Identities {
        /// Range start (inclusive)
        #[arg(long)]
        from: u64,
        /// Range end (inclusive)
        #[arg(long)]
        to: u64,
        /// Output format (text or json)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the closed-form and resultant-route discriminants of the trinomial
    Disc {
        /// The prime p; the trinomial has degree 2p, capped at 30
        p: u64,
    },
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }

    fn from_io(e: std::io::Error) -> CliError {
        CliError::Internal(format!("i/o error: {e}"))
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::NotPrime(_)
            | Error::PrimeTooLarge(_)
            | Error::DegreeCeiling { .. }
            | Error::DegreeBelowMinimum { .. } => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// The Dedekind oracle works on the degree-2p trinomial, so the bound must
/// keep 2p within the polynomial degree ceiling.
fn validate_dedekind_max_p(value: u64) -> Result<(), CliError> {
    let max = (zpoly::DEGREE_CEILING / 2) as u64;
    if value > max {
        return Err(CliError::Usage(format!(
            "--dedekind-max-p {value} exceeds {max} (trinomial degree ceiling {})",
            zpoly::DEGREE_CEILING
        )));
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Scan {
            from,
            to,
            cross_check,
            identities,
            dedekind_max_p,
            format,
            jobs,
            checkpoint,
        } => cross_check
            .parse::<CrossCheck>()
            .map_err(CliError::Usage)
            .and_then(|cross_check| {
                scan::run_scan(&ScanConfig {
                    from,
                    to,
                    cross_check,
                    identities,
                    dedekind_max_p,
                    format,
                    jobs,
                    checkpoint,
                })
            }),
        Command::Check {
            p,
            full,
            format,
            dedekind_max_p,
        } => cmd_check(p, full, format, dedekind_max_p),
        Command::Identities { from, to, format } => cmd_identities(from, to, format),
        Command::Disc { p } => cmd_disc(p),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}

fn cmd_check(p: u64, full: bool, format: Format, dedekind_max_p: u64) -> Result<i32, CliError> {
    validate_dedekind_max_p(dedekind_max_p)?;
    let prime = PrimeP::new(p)?;
    let run_dedekind = full && p <= dedekind_max_p;
    let opts = CheckOptions {
        jks: true,
        identities: true,
        dedekind: run_dedekind,
        seed: IDENTITY_SEED,
    };
    let report = check_prime(prime, opts)?;
    let mut contradiction = report.contradiction;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if format == Format::Csv {
        writeln!(&mut out, "{}", output::CSV_HEADER).map_err(CliError::from_io)?;
    }
    emit_record(&mut out, format, &report).map_err(CliError::from_io)?;

    let text = format == Format::Text;
    if text && prime.is_odd() {
        let witness = gfp::jks_gcd_witness(prime)?;
        writeln!(&mut out, "  gcd witness: {witness}").map_err(CliError::from_io)?;
        let suite = run_identity_suite(prime, IDENTITY_SEED)?;
        let checks: usize = suite.reports.iter().map(|r| r.checks.len()).sum();
        writeln!(
            &mut out,
            "  identities: {} checks in {} batches, lift_independent={}, bridge={}",
            checks,
            suite.reports.len(),
            suite.lift_independent,
            suite.bridge_holds
        )
        .map_err(CliError::from_io)?;
        for failure in suite.failures() {
            writeln!(&mut out, "  identity FAILURE: {failure}").map_err(CliError::from_io)?;
        }
    }
    if text && run_dedekind {
        let f = zpoly::build_f(prime);
        writeln!(
            &mut out,
            "  eisenstein at 2: {}",
            zpoly::eisenstein_check(&f, 2)
        )
        .map_err(CliError::from_io)?;
        let mut qs = vec![2u64];
        if prime.is_odd() {
            qs.push(p);
        }
        for q in qs {
            let verdict = zpoly::dedekind_divides_index(&f, PrimeP::new(q)?)?;
            match verdict.certificate {
                Some(c) => writeln!(
                    &mut out,
                    "  dedekind q={q}: divides index (certificate {c})"
                ),
                None => writeln!(&mut out, "  dedekind q={q}: does not divide index"),
            }
            .map_err(CliError::from_io)?;
        }
    }
    if full && 2 * p <= DISC_DEGREE_CEILING {
        let closed = zpoly::swan_discriminant(prime);
        let routed = zpoly::discriminant(&zpoly::build_f(prime))?;
        let equal = closed == routed;
        if text {
            writeln!(&mut out, "  discriminant closed form = {closed}")
                .map_err(CliError::from_io)?;
            writeln!(&mut out, "  discriminant resultant   = {routed}")
                .map_err(CliError::from_io)?;
            writeln!(
                &mut out,
                "  discriminant routes: {}",
                if equal { "EQUAL" } else { "UNEQUAL" }
            )
            .map_err(CliError::from_io)?;
        }
        contradiction |= !equal;
    }
    Ok(if contradiction { 1 } else { 0 })
}

fn cmd_identities(from: u64, to: u64, format: Format) -> Result<i32, CliError> {
    if from > to {
        return Err(CliError::Usage(format!("--from {from} exceeds --to {to}")));
    }
    if to > MAX_PRIME {
        return Err(CliError::Usage(format!(
            "--to {to} exceeds the supported ceiling {MAX_PRIME}"
        )));
    }
    if format == Format::Csv {
        return Err(CliError::Usage(
            "identities supports text or json output".into(),
        ));
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut primes = 0u64;
    let mut checks = 0u64;
    let mut failed = 0u64;
    // The suite is defined for odd primes; a range containing 2 skips it.
    for n in primes_in(from.max(3), to) {
        let suite = run_identity_suite(PrimeP::new(n)?, IDENTITY_SEED)?;
        primes += 1;
        checks += suite
            .reports
            .iter()
            .map(|r| r.checks.len() as u64)
            .sum::<u64>()
            + 2;
        if !suite.all_passed {
            failed += 1;
            match format {
                Format::Json => {
                    let json = serde_json::to_string(&suite).expect("suite serializes");
                    writeln!(&mut out, "{json}").map_err(CliError::from_io)?;
                }
                _ => {
                    for failure in suite.failures() {
                        writeln!(&mut out, "p={n} FAILED {failure}").map_err(CliError::from_io)?;
                    }
                }
            }
        }
    }
    match format {
        Format::Json => {
            let json = serde_json::json!({
                "identities_summary": {
                    "from": from,
                    "to": to,
                    "primes": primes,
                    "checks": checks,
                    "failed_primes": failed,
                }
            });
            writeln!(&mut out, "{json}").map_err(CliError::from_io)?;
        }
        _ => {
            writeln!(
                &mut out,
                "identities: range=[{from},{to}] primes={primes} checks={checks} failed={failed}"
            )
            .map_err(CliError::from_io)?;
        }
    }
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_disc(p: u64) -> Result<i32, CliError> {
    let prime = PrimeP::new(p)?;
    if 2 * p > DISC_DEGREE_CEILING {
        return Err(CliError::Usage(format!(
            "trinomial degree 2p = {} exceeds the resultant ceiling {DISC_DEGREE_CEILING}",
            2 * p
        )));
    }
    let closed = zpoly::swan_discriminant(prime);
    let routed = zpoly::discriminant(&zpoly::build_f(prime))?;
    let equal = closed == routed;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(&mut out, "p = {p}").map_err(CliError::from_io)?;
    writeln!(&mut out, "closed form = {closed}").map_err(CliError::from_io)?;
    writeln!(&mut out, "resultant   = {routed}").map_err(CliError::from_io)?;
    writeln!(&mut out, "{}", if equal { "EQUAL" } else { "UNEQUAL" }).map_err(CliError::from_io)?;
    Ok(if equal { 0 } else { 1 })
}
