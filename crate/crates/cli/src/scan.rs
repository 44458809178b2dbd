//! Parallel prime-range scanning with deterministic, in-order output.
//!
//! The range splits into fixed-width blocks. Workers pull block indices from
//! a shared counter, sieve their own primes, and run the per-prime pipeline;
//! a single emitter reorders finished blocks and owns stdout and the
//! checkpoint file, so the record stream is identical whatever `--jobs` says.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc};
use std::time::Instant;

use monotri::arith::MAX_PRIME;
use monotri::report::{check_prime, CheckOptions, PrimeReport};
use monotri::sieve::primes_in;
use monotri::PrimeP;

use crate::checkpoint::{self, fnv1a64, Checkpoint, Loaded};
use crate::output::{emit_record, emit_summary, Format, ScanSummary, CSV_HEADER};
use crate::CliError;

/// Value-space width of one work block.
const BLOCK_WIDTH: u64 = 1 << 16;

/// Seed for the identity suite's randomized lift offsets; fixed so that runs
/// are reproducible.
pub const IDENTITY_SEED: u64 = 0x006d_6f6e_6f74_7269;

/// Which primes get the slow path on top of the Wieferich test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheck {
    None,
    All,
    /// Every Nth prime of the scan, by global index from the range start.
    EveryNth(u64),
    /// K primes spread evenly across the range.
    Sample(u64),
}

impl std::str::FromStr for CrossCheck {
    type Err = String;

    fn from_str(s: &str) -> Result<CrossCheck, String> {
        match s {
            "none" => Ok(CrossCheck::None),
            "all" => Ok(CrossCheck::All),
            _ => {
                if let Some(n) = s.strip_prefix("every:") {
                    let n: u64 = n
                        .parse()
                        .map_err(|_| format!("invalid cross-check value `{s}`"))?;
                    if n == 0 {
                        return Err("every:N requires N >= 1".into());
                    }
                    Ok(CrossCheck::EveryNth(n))
                } else if let Some(k) = s.strip_prefix("sample:") {
                    let k: u64 = k
                        .parse()
                        .map_err(|_| format!("invalid cross-check value `{s}`"))?;
                    if k == 0 {
                        return Err("sample:K requires K >= 1".into());
                    }
                    Ok(CrossCheck::Sample(k))
                } else {
                    Err(format!(
                        "invalid cross-check policy `{s}` (expected none, all, every:N or sample:K)"
                    ))
                }
            }
        }
    }
}

impl CrossCheck {
    fn canonical(&self) -> String {
        match self {
            CrossCheck::None => "none".into(),
            CrossCheck::All => "all".into(),
            CrossCheck::EveryNth(n) => format!("every:{n}"),
            CrossCheck::Sample(k) => format!("sample:{k}"),
        }
    }
}

pub struct ScanConfig {
    pub from: u64,
    pub to: u64,
    pub cross_check: CrossCheck,
    pub identities: bool,
    pub dedekind_max_p: u64,
    pub format: Format,
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
}

impl ScanConfig {
    /// Hash of the report-affecting configuration. `jobs` and the checkpoint
    /// path are excluded: they cannot change the record stream.
    fn config_hash(&self) -> u64 {
        let canonical = format!(
            "from={};to={};cross={};identities={};dedekind_max_p={};format={:?}",
            self.from,
            self.to,
            self.cross_check.canonical(),
            self.identities,
            self.dedekind_max_p,
            self.format,
        );
        fnv1a64(&canonical)
    }
}

/// Slow-path selection plan shared by all workers.
struct Plan {
    cross_check: CrossCheck,
    identities: bool,
    dedekind_max_p: u64,
    /// Global prime index at the start of each block (selection policies only).
    block_index_base: Vec<u64>,
    /// Selected global indices, sorted (Sample only).
    sample: Vec<u64>,
}

impl Plan {
    fn build(config: &ScanConfig, blocks: &[(u64, u64)]) -> Plan {
        let needs_indices = matches!(
            config.cross_check,
            CrossCheck::EveryNth(_) | CrossCheck::Sample(_)
        );
        let mut block_index_base = Vec::new();
        let mut total = 0u64;
        if needs_indices {
            // Counting pass over the whole range; cheap next to the scan
            // itself and independent of any resume point, so selection is
            // stable across interruptions.
            block_index_base.reserve(blocks.len());
            for &(lo, hi) in blocks {
                block_index_base.push(total);
                total += primes_in(lo, hi).count() as u64;
            }
        }
        let sample = match config.cross_check {
            CrossCheck::Sample(k) => {
                let k = k.min(total.max(1));
                (0..k).map(|j| j * total / k).collect()
            }
            _ => Vec::new(),
        };
        Plan {
            cross_check: config.cross_check.clone(),
            identities: config.identities,
            dedekind_max_p: config.dedekind_max_p,
            block_index_base,
            sample,
        }
    }

    fn selected(&self, global_index: u64) -> bool {
        match self.cross_check {
            CrossCheck::None => false,
            CrossCheck::All => true,
            CrossCheck::EveryNth(n) => global_index.is_multiple_of(n),
            CrossCheck::Sample(_) => self.sample.binary_search(&global_index).is_ok(),
        }
    }
}

#[derive(Default)]
struct BlockResult {
    reports: Vec<PrimeReport>,
    last_prime: Option<u64>,
    scanned: u64,
    checked: u64,
    contradictions: u64,
    wieferich: Vec<u64>,
}

fn scan_block(
    (lo, hi): (u64, u64),
    block_idx: usize,
    plan: &Plan,
) -> Result<BlockResult, monotri::Error> {
    let mut result = BlockResult::default();
    let index_base = plan
        .block_index_base
        .get(block_idx)
        .copied()
        .unwrap_or_default();
    for (offset, n) in primes_in(lo, hi).enumerate() {
        let index = index_base + offset as u64;
        let p = PrimeP::new(n).expect("sieve yields primes in range");
        let slow = plan.selected(index) && n >= 3;
        let opts = CheckOptions {
            jks: slow,
            identities: slow && plan.identities,
            dedekind: slow && n <= plan.dedekind_max_p,
            seed: IDENTITY_SEED,
        };
        let report = check_prime(p, opts)?;
        result.scanned += 1;
        if slow {
            result.checked += 1;
        }
        if report.contradiction {
            result.contradictions += 1;
        }
        if report.wieferich {
            result.wieferich.push(n);
        }
        if report.wieferich || slow {
            result.reports.push(report);
        }
        result.last_prime = Some(n);
    }
    Ok(result)
}

fn block_ranges(from: u64, to: u64) -> Vec<(u64, u64)> {
    let mut blocks = Vec::new();
    let mut lo = from;
    loop {
        let hi = lo.saturating_add(BLOCK_WIDTH - 1).min(to);
        blocks.push((lo, hi));
        if hi == to {
            return blocks;
        }
        lo = hi + 1;
    }
}

pub fn run_scan(config: &ScanConfig) -> Result<i32, CliError> {
    if config.from > config.to {
        return Err(CliError::Usage(format!(
            "--from {} exceeds --to {}",
            config.from, config.to
        )));
    }
    if config.to > MAX_PRIME {
        return Err(CliError::Usage(format!(
            "--to {} exceeds the supported ceiling {MAX_PRIME}",
            config.to
        )));
    }
    if config.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    crate::validate_dedekind_max_p(config.dedekind_max_p)?;

    let hash = config.config_hash();
    let mut state = Checkpoint::fresh(hash);
    if let Some(path) = &config.checkpoint {
        if path.exists() {
            match checkpoint::load(path, hash)
                .map_err(|e| CliError::Internal(format!("cannot read checkpoint: {e}")))?
            {
                Loaded::Resume(cp) => {
                    eprintln!(
                        "resuming from checkpoint: {} blocks done, last prime {}",
                        cp.blocks_done, cp.last_completed_prime
                    );
                    state = cp;
                }
                Loaded::ConfigMismatch => {
                    return Err(CliError::Usage(
                        "checkpoint was written by a different configuration; refusing to resume"
                            .into(),
                    ));
                }
                Loaded::Corrupt => {
                    return Err(CliError::Usage(
                        "checkpoint file is corrupt; refusing to resume".into(),
                    ));
                }
            }
        }
    }

    let blocks = block_ranges(config.from, config.to);
    let plan = Arc::new(Plan::build(config, &blocks));
    let first_block = (state.blocks_done as usize).min(blocks.len());
    let started = Instant::now();

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if config.format == Format::Csv {
        writeln!(&mut out, "{CSV_HEADER}").map_err(CliError::from_io)?;
    }

    let next_block = AtomicUsize::new(first_block);
    let total_blocks = blocks.len();
    let workers = config.jobs.min(total_blocks - first_block).max(1);
    let (tx, rx) = mpsc::channel::<(usize, Result<BlockResult, monotri::Error>)>();

    let mut failure: Option<CliError> = None;
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let plan = Arc::clone(&plan);
            let blocks = &blocks;
            let next_block = &next_block;
            scope.spawn(move || loop {
                let i = next_block.fetch_add(1, Ordering::Relaxed);
                if i >= total_blocks {
                    break;
                }
                let result = scan_block(blocks[i], i, &plan);
                if tx.send((i, result)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        let mut pending: BTreeMap<usize, BlockResult> = BTreeMap::new();
        let mut next_emit = first_block;
        'recv: for (i, result) in &rx {
            let block = match result {
                Ok(block) => block,
                Err(e) => {
                    failure = Some(CliError::Internal(format!("scan failed: {e}")));
                    break 'recv;
                }
            };
            pending.insert(i, block);
            while let Some(block) = pending.remove(&next_emit) {
                for report in &block.reports {
                    if let Err(e) = emit_record(&mut out, config.format, report) {
                        failure = Some(CliError::from_io(e));
                        break 'recv;
                    }
                }
                if let Err(e) = out.flush() {
                    failure = Some(CliError::from_io(e));
                    break 'recv;
                }
                state.scanned += block.scanned;
                state.checked += block.checked;
                state.contradictions += block.contradictions;
                state.wieferich.extend(&block.wieferich);
                if let Some(p) = block.last_prime {
                    state.last_completed_prime = p;
                }
                state.blocks_done = next_emit as u64 + 1;
                if let Some(path) = &config.checkpoint {
                    // Write failures are fatal by contract.
                    if let Err(e) = checkpoint::save(path, &state) {
                        failure = Some(CliError::Internal(format!("checkpoint write failed: {e}")));
                        break 'recv;
                    }
                }
                eprintln!(
                    "progress: block {}/{} done (p <= {}), scanned={} wieferich={}",
                    state.blocks_done,
                    total_blocks,
                    blocks[next_emit].1,
                    state.scanned,
                    state.wieferich.len()
                );
                next_emit += 1;
            }
        }
        drop(rx);
    });
    if let Some(e) = failure {
        return Err(e);
    }

    let elapsed_ms = started.elapsed().as_millis() as u64;
    let summary = ScanSummary {
        from: config.from,
        to: config.to,
        primes_scanned: state.scanned,
        slow_path_runs: state.checked,
        wieferich_primes: state.wieferich.clone(),
        contradictions: state.contradictions,
        elapsed_ms,
        throughput_pps: (state.scanned * 1000)
            .checked_div(elapsed_ms)
            .unwrap_or(state.scanned),
    };
    emit_summary(&mut out, config.format, &summary).map_err(CliError::from_io)?;
    out.flush().map_err(CliError::from_io)?;

    Ok(if state.contradictions > 0 { 1 } else { 0 })
}
