//! Record and summary rendering for the three output formats.
//!
//! The JSON schema is the serde serialization of [`PrimeReport`]; CSV columns
//! are fixed in [`CSV_HEADER`] order with empty cells for phases that did not
//! run. Text is the human-facing single-line form. Timing columns are
//! informational and excluded from determinism comparisons.

use std::io::{self, Write};

use monotri::report::PrimeReport;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub const CSV_HEADER: &str = "p,wieferich,monogenic_jks,gcd_witness_degree,identities_passed,\
dedekind_agrees,contradiction,wieferich_us,jks_us,identities_us,dedekind_us";

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn emit_record(w: &mut impl Write, format: Format, r: &PrimeReport) -> io::Result<()> {
    match format {
        Format::Text => {
            let mut line = String::new();
            if r.contradiction {
                line.push_str("CONTRADICTION ");
            }
            line.push_str(&format!("p={} wieferich={}", r.p, r.wieferich));
            if let Some(m) = r.monogenic_jks {
                line.push_str(&format!(" monogenic_jks={m}"));
            }
            if let Some(d) = r.gcd_witness_degree {
                line.push_str(&format!(" gcd_witness_degree={d}"));
            }
            if let Some(i) = r.identities_passed {
                line.push_str(&format!(" identities_passed={i}"));
            }
            if let Some(d) = r.dedekind_agrees {
                line.push_str(&format!(" dedekind_agrees={d}"));
            }
            line.push_str(&format!(
                " [us: wieferich={}{}{}{}]",
                r.elapsed.wieferich_us,
                r.elapsed
                    .jks_us
                    .map(|t| format!(" jks={t}"))
                    .unwrap_or_default(),
                r.elapsed
                    .identities_us
                    .map(|t| format!(" identities={t}"))
                    .unwrap_or_default(),
                r.elapsed
                    .dedekind_us
                    .map(|t| format!(" dedekind={t}"))
                    .unwrap_or_default(),
            ));
            writeln!(w, "{line}")
        }
        Format::Csv => writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.p,
            r.wieferich,
            opt(r.monogenic_jks),
            opt(r.gcd_witness_degree),
            opt(r.identities_passed),
            opt(r.dedekind_agrees),
            r.contradiction,
            r.elapsed.wieferich_us,
            opt(r.elapsed.jks_us),
            opt(r.elapsed.identities_us),
            opt(r.elapsed.dedekind_us),
        ),
        Format::Json => {
            let json = serde_json::to_string(r).expect("report serializes");
            writeln!(w, "{json}")
        }
    }
}

/// End-of-scan totals. `elapsed_ms` and `throughput_pps` vary run to run and
/// are excluded from determinism comparisons.
#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub from: u64,
    pub to: u64,
    pub primes_scanned: u64,
    pub slow_path_runs: u64,
    pub wieferich_primes: Vec<u64>,
    pub contradictions: u64,
    pub elapsed_ms: u64,
    pub throughput_pps: u64,
}

pub fn emit_summary(w: &mut impl Write, format: Format, s: &ScanSummary) -> io::Result<()> {
    match format {
        Format::Text => writeln!(
            w,
            "summary: range=[{},{}] primes={} slow_checks={} wieferich={:?} \
             contradictions={} elapsed_ms={} throughput_pps={}",
            s.from,
            s.to,
            s.primes_scanned,
            s.slow_path_runs,
            s.wieferich_primes,
            s.contradictions,
            s.elapsed_ms,
            s.throughput_pps,
        ),
        Format::Csv => writeln!(
            w,
            "# summary from={} to={} primes={} slow_checks={} wieferich={} contradictions={} \
             elapsed_ms={} throughput_pps={}",
            s.from,
            s.to,
            s.primes_scanned,
            s.slow_path_runs,
            s.wieferich_primes
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            s.contradictions,
            s.elapsed_ms,
            s.throughput_pps,
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Wrapper<'a> {
                summary: &'a ScanSummary,
            }
            let json = serde_json::to_string(&Wrapper { summary: s }).expect("summary serializes");
            writeln!(w, "{json}")
        }
    }
}
