//! Per-prime verdict records and the combined verification pipelines.
//!
//! A [`PrimeReport`] is the unit of scanner output: the fast Wieferich verdict
//! plus whichever slow-path phases ran (coprimality witness, identity suite,
//! Dedekind oracle). Field names here fix the JSON schema used by the CLI.

use std::time::Instant;

use serde::Serialize;

use crate::arith::{is_wieferich, PrimeP};
use crate::error::Error;
use crate::gauss::{self, GaussRes, IdentityReport};
use crate::gfp;
use crate::zpoly;

/// Elapsed microseconds per phase; a phase that did not run is absent.
///
/// Timing fields are informational and excluded from determinism comparisons.
#[derive(Debug, Clone, Default, Serialize)]
pub struct PhaseTimings {
    pub wieferich_us: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jks_us: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities_us: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dedekind_us: Option<u64>,
}

/// Verdict record for one prime.
///
/// Invariants: when `monogenic_jks` is present it must equal `!wieferich`
/// (anything else is flagged by `contradiction`), and `gcd_witness_degree`
/// is 2 exactly when `monogenic_jks` is false, 0 otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeReport {
    pub p: u64,
    pub wieferich: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monogenic_jks: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gcd_witness_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities_passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dedekind_agrees: Option<bool>,
    /// True when any cross-check contradicts the expected equivalence; a
    /// contradiction record means a defect somewhere and drives exit code 1.
    pub contradiction: bool,
    pub elapsed: PhaseTimings,
}

/// Which slow-path phases [`check_prime`] should run.
#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub jks: bool,
    pub identities: bool,
    pub dedekind: bool,
    /// Seed for the randomized lift-independence offsets.
    pub seed: u64,
}

/// Run the verification pipeline for one prime.
///
/// The Wieferich test always runs. The JKS and identity phases apply to odd
/// primes only and are silently skipped for p = 2, which routes to the
/// Dedekind oracle alone.
pub fn check_prime(p: PrimeP, opts: CheckOptions) -> Result<PrimeReport, Error> {
    let start = Instant::now();
    let wieferich = is_wieferich(p);
    let mut elapsed = PhaseTimings {
        wieferich_us: start.elapsed().as_micros() as u64,
        ..PhaseTimings::default()
    };

    let mut monogenic_jks = None;
    let mut gcd_witness_degree = None;
    if opts.jks && p.is_odd() {
        let start = Instant::now();
        let witness = gfp::jks_gcd_witness(p)?;
        gcd_witness_degree = witness.degree();
        monogenic_jks = Some(witness.degree() == Some(0));
        elapsed.jks_us = Some(start.elapsed().as_micros() as u64);
    }

    let mut identities_passed = None;
    if opts.identities && p.is_odd() {
        let start = Instant::now();
        let suite = run_identity_suite(p, opts.seed)?;
        identities_passed = Some(suite.all_passed);
        elapsed.identities_us = Some(start.elapsed().as_micros() as u64);
    }

    let mut dedekind_agrees = None;
    if opts.dedekind {
        let start = Instant::now();
        let monogenic_dedekind = zpoly::is_monogenic_dedekind(p)?;
        // Agreement target: the JKS verdict when it ran, otherwise the
        // Wieferich-predicted verdict.
        let target = monogenic_jks.unwrap_or(!wieferich);
        dedekind_agrees = Some(monogenic_dedekind == target);
        elapsed.dedekind_us = Some(start.elapsed().as_micros() as u64);
    }

    let contradiction = monogenic_jks == Some(wieferich)
        || identities_passed == Some(false)
        || dedekind_agrees == Some(false);

    Ok(PrimeReport {
        p: p.get(),
        wieferich,
        monogenic_jks,
        gcd_witness_degree,
        identities_passed,
        dedekind_agrees,
        contradiction,
        elapsed,
    })
}

/// Every identity batch for one odd prime, plus the cross-module bridge.
#[derive(Debug, Clone, Serialize)]
pub struct IdentitySuite {
    pub p: u64,
    pub reports: Vec<IdentityReport>,
    /// Lift independence of the evaluations under randomized k·p shifts.
    pub lift_independent: bool,
    /// Coprimality witness is non-trivial iff p·H₂ vanishes at the zero.
    pub bridge_holds: bool,
    pub all_passed: bool,
}

impl IdentitySuite {
    /// Names of everything that failed, for diagnostics.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for report in &self.reports {
            for name in report.failures() {
                out.push(format!("{}/{}", report.suite, name));
            }
        }
        if !self.lift_independent {
            out.push("lift_independence".into());
        }
        if !self.bridge_holds {
            out.push("bridge".into());
        }
        out
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Run the full identity suite for an odd prime: the residue-class branch
/// batch, the square-root congruence (p ≡ 3 mod 4 only), the factorization
/// route, lift independence at seeded offsets, and the bridge between the
/// coprimality witness and the mod-p² evaluation.
pub fn run_identity_suite(p: PrimeP, seed: u64) -> Result<IdentitySuite, Error> {
    p.require_odd()?;
    let mut reports = Vec::new();
    if p.get() % 4 == 3 {
        reports.push(gauss::check_branch_3mod4(p)?);
        reports.push(gauss::check_claim(p)?);
    } else {
        reports.push(gauss::check_branch_1mod4(p)?);
    }
    reports.push(gauss::check_wieferich_factorization(p)?);

    let zero = gauss::canonical_zero(p)?;
    let mut lift_independent = true;
    for round in 0..3u64 {
        let r = splitmix64(seed ^ p.get().wrapping_mul(round + 1));
        let k = r % p.get();
        let theta = GaussRes::new(
            p,
            splitmix64(r) % p.squared(),
            splitmix64(r ^ 1) % p.squared(),
        );
        lift_independent &= gauss::check_lift_independence(p, zero, k);
        lift_independent &= gauss::check_lift_independence(p, theta, k);
    }
    lift_independent &= gauss::check_lift_independence(p, zero, 0);

    let witness = gfp::jks_gcd_witness(p)?;
    let bridge_holds = (!witness.is_one()) == gauss::ph2_eval(p, zero).is_zero();

    let all_passed = reports.iter().all(|r| r.all_passed) && lift_independent && bridge_holds;
    Ok(IdentitySuite {
        p: p.get(),
        reports,
        lift_independent,
        bridge_holds,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    fn pp(n: u64) -> PrimeP {
        PrimeP::new(n).unwrap()
    }

    const FULL: CheckOptions = CheckOptions {
        jks: true,
        identities: true,
        dedekind: true,
        seed: 7,
    };

    #[test]
    fn report_for_p3() {
        let r = check_prime(pp(3), FULL).unwrap();
        assert!(!r.wieferich);
        assert_eq!(r.monogenic_jks, Some(true));
        assert_eq!(r.gcd_witness_degree, Some(0));
        assert_eq!(r.identities_passed, Some(true));
        assert_eq!(r.dedekind_agrees, Some(true));
        assert!(!r.contradiction);
    }

    #[test]
    fn report_for_wieferich_prime() {
        let r = check_prime(pp(1093), FULL).unwrap();
        assert!(r.wieferich);
        assert_eq!(r.monogenic_jks, Some(false));
        assert_eq!(r.gcd_witness_degree, Some(2));
        assert_eq!(r.identities_passed, Some(true));
        assert_eq!(r.dedekind_agrees, Some(true));
        assert!(!r.contradiction);
    }

    #[test]
    fn report_for_two_skips_odd_only_phases() {
        let r = check_prime(pp(2), FULL).unwrap();
        assert!(!r.wieferich);
        assert_eq!(r.monogenic_jks, None);
        assert_eq!(r.identities_passed, None);
        // The Dedekind oracle runs and agrees with the Wieferich prediction.
        assert_eq!(r.dedekind_agrees, Some(true));
        assert!(!r.contradiction);
    }

    #[test]
    fn fast_path_only() {
        let r = check_prime(pp(13), CheckOptions::default()).unwrap();
        assert!(!r.wieferich);
        assert_eq!(r.monogenic_jks, None);
        assert_eq!(r.gcd_witness_degree, None);
        assert_eq!(r.identities_passed, None);
        assert_eq!(r.dedekind_agrees, None);
        assert!(!r.contradiction);
    }

    #[test]
    fn jks_negates_wieferich_on_small_range() {
        let opts = CheckOptions {
            jks: true,
            ..CheckOptions::default()
        };
        for n in (3..300u64).filter(|&n| is_prime(n)) {
            let r = check_prime(pp(n), opts).unwrap();
            assert_eq!(r.monogenic_jks, Some(!r.wieferich), "p = {n}");
            let expected_deg = if r.wieferich { 2 } else { 0 };
            assert_eq!(r.gcd_witness_degree, Some(expected_deg), "p = {n}");
            assert!(!r.contradiction, "p = {n}");
        }
    }

    #[test]
    fn identity_suite_passes_on_both_branches() {
        for n in [3u64, 5, 7, 13, 101, 103, 1093, 3511] {
            let suite = run_identity_suite(pp(n), 42).unwrap();
            assert!(
                suite.all_passed,
                "p = {n}, failures: {:?}",
                suite.failures()
            );
        }
    }

    #[test]
    fn identity_suite_report_counts() {
        // p ≡ 3 mod 4 carries the claim batch; p ≡ 1 mod 4 does not.
        assert_eq!(run_identity_suite(pp(7), 0).unwrap().reports.len(), 3);
        assert_eq!(run_identity_suite(pp(5), 0).unwrap().reports.len(), 2);
        assert!(run_identity_suite(pp(2), 0).is_err());
    }

    #[test]
    fn json_schema_field_names() {
        let r = check_prime(pp(1093), FULL).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["p"], 1093);
        assert_eq!(json["wieferich"], true);
        assert_eq!(json["monogenic_jks"], false);
        assert_eq!(json["gcd_witness_degree"], 2);
        assert_eq!(json["identities_passed"], true);
        assert_eq!(json["dedekind_agrees"], true);
        assert_eq!(json["contradiction"], false);
        assert!(json["elapsed"]["wieferich_us"].is_u64());
        // Absent phases leave no key behind.
        let fast = check_prime(pp(13), CheckOptions::default()).unwrap();
        let json = serde_json::to_value(&fast).unwrap();
        assert!(json.get("monogenic_jks").is_none());
        assert!(json.get("dedekind_agrees").is_none());
    }
}
