//! Segmented prime sieve over arbitrary ranges.
//!
//! [`primes_in`] streams the primes of [lo, hi] in increasing order. Memory is
//! bounded by the segment width plus the base primes up to √hi, never by the
//! range itself, so scans over wide windows stay cheap.

use crate::arith::MAX_PRIME;

const SEGMENT_WIDTH: u64 = 1 << 16;

/// Iterator over the primes in a closed range, in increasing order.
pub struct PrimeRange {
    base: Vec<u64>,
    segment: Vec<bool>,
    seg_lo: u64,
    idx: usize,
    hi: u64,
}

/// All primes p with lo ≤ p ≤ hi, ascending.
///
/// `hi` must not exceed [`MAX_PRIME`]; an empty range (lo > hi) yields nothing.
pub fn primes_in(lo: u64, hi: u64) -> PrimeRange {
    assert!(
        hi <= MAX_PRIME,
        "range end {hi} exceeds the supported width"
    );
    let lo = lo.max(2);
    let mut base = Vec::new();
    if lo <= hi {
        base = simple_sieve(isqrt(hi));
    }
    let mut range = PrimeRange {
        base,
        segment: Vec::new(),
        seg_lo: lo,
        idx: 0,
        hi,
    };
    if lo <= hi {
        range.fill_segment();
    }
    range
}

/// Integer square root (floor).
fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Plain sieve of Eratosthenes up to `limit` inclusive.
fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

impl PrimeRange {
    fn fill_segment(&mut self) {
        let width = SEGMENT_WIDTH.min(self.hi - self.seg_lo + 1) as usize;
        self.segment.clear();
        self.segment.resize(width, true);
        for &p in &self.base {
            if p * p > self.seg_lo + width as u64 - 1 {
                break;
            }
            // First multiple of p in the segment, at least p².
            let start = (p * p).max(self.seg_lo.div_ceil(p) * p);
            let mut j = start;
            while j < self.seg_lo + width as u64 {
                self.segment[(j - self.seg_lo) as usize] = false;
                j += p;
            }
        }
        if self.seg_lo == 0 {
            self.segment[0] = false;
            if width > 1 {
                self.segment[1] = false;
            }
        } else if self.seg_lo == 1 {
            self.segment[0] = false;
        }
        self.idx = 0;
    }
}

impl Iterator for PrimeRange {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.seg_lo > self.hi {
                return None;
            }
            let width = self.segment.len();
            while self.idx < width {
                let i = self.idx;
                self.idx += 1;
                if self.segment[i] {
                    return Some(self.seg_lo + i as u64);
                }
            }
            self.seg_lo += width as u64;
            if self.seg_lo > self.hi {
                return None;
            }
            self.fill_segment();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(lo: u64, hi: u64) -> Vec<u64> {
        (lo.max(2)..=hi)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    }

    #[test]
    fn small_range() {
        assert_eq!(primes_in(2, 12).collect::<Vec<_>>(), vec![2, 3, 5, 7, 11]);
    }

    #[test]
    fn window_around_1093() {
        // Oracle: direct trial division over the window.
        assert_eq!(
            primes_in(1090, 1100).collect::<Vec<_>>(),
            trial_division(1090, 1100)
        );
        assert_eq!(
            primes_in(1090, 1100).collect::<Vec<_>>(),
            vec![1091, 1093, 1097]
        );
    }

    #[test]
    fn empty_windows() {
        assert_eq!(primes_in(14, 16).count(), 0);
        assert_eq!(primes_in(0, 1).count(), 0);
        assert_eq!(primes_in(24, 28).count(), 0);
    }

    #[test]
    fn single_point_ranges() {
        assert_eq!(primes_in(13, 13).collect::<Vec<_>>(), vec![13]);
        assert_eq!(primes_in(15, 15).count(), 0);
        assert_eq!(primes_in(2, 2).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn matches_trial_division_on_windows() {
        // Windows of width ≤ 10⁴ at assorted offsets, including ones that
        // straddle segment boundaries.
        let cases = [
            (0u64, 10_000u64),
            (9_990, 10_010),
            (65_530, 65_600),
            (65_536 * 2 - 50, 65_536 * 2 + 50),
            (1_000_000, 1_001_000),
        ];
        for (lo, hi) in cases {
            assert_eq!(
                primes_in(lo, hi).collect::<Vec<_>>(),
                trial_division(lo, hi),
                "window [{lo}, {hi}]"
            );
        }
    }

    #[test]
    fn output_is_increasing_and_in_range() {
        let mut prev = 0;
        for p in primes_in(100_000, 140_000) {
            assert!(p > prev);
            assert!((100_000..=140_000).contains(&p));
            prev = p;
        }
    }

    #[test]
    fn isqrt_exact() {
        for n in 0..2_000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "isqrt({n}) = {r}");
        }
        assert_eq!(isqrt(u32::MAX as u64), 65_535);
        assert_eq!(isqrt((1u64 << 32) - 1), 65_535);
    }

    #[test]
    fn counts_match_known_pi() {
        // π(10⁵) = 9592, π(10⁶) = 78498
        assert_eq!(primes_in(2, 100_000).count(), 9_592);
        assert_eq!(primes_in(2, 1_000_000).count(), 78_498);
    }
}
