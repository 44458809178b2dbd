//! Exact modular arithmetic on machine-width integers.
//!
//! Everything here is branch-free of heap allocation: products widen to 128
//! bits, so every modulus up to `u64::MAX` is supported exactly. Primality is
//! decided by a deterministic Miller–Rabin witness set, and the Wieferich and
//! Fermat-quotient tests work mod p², which is why scanned primes are capped
//! at [`MAX_PRIME`].

use crate::error::Error;

/// Largest supported prime: p² must fit in a `u64`, so p ≤ 2³² − 1.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// (a · b) mod m with a 128-bit intermediate product.
///
/// Exact for every modulus 2 ≤ m ≤ `u64::MAX`; the product of two values
/// below 2⁶⁴ cannot overflow the 128-bit widening.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(m >= 2, "modulus must be at least 2");
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by square-and-multiply. `powmod(a, 0, m)` = 1 mod m.
pub fn powmod(a: u64, e: u64, m: u64) -> u64 {
    debug_assert!(m >= 2, "modulus must be at least 2");
    let mut base = a % m;
    let mut exp = e;
    let mut acc: u64 = 1;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// a⁻¹ mod m via the extended Euclidean algorithm.
///
/// Errors with [`Error::NotInvertible`] when gcd(a, m) > 1.
pub fn inv_mod(a: u64, m: u64) -> Result<u64, Error> {
    debug_assert!(m >= 2, "modulus must be at least 2");
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible {
            value: a % m,
            modulus: m,
        });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic primality test for the full 64-bit range.
///
/// Uses the seven-witness set {2, 325, 9375, 28178, 450775, 9780504,
/// 1795265022}, which decides primality exactly for every n < 2⁶⁴.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime within the supported scan width.
///
/// Construction validates primality with [`is_prime`] and enforces
/// p ≤ [`MAX_PRIME`] so that arithmetic mod p² never overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeP(u64);

impl PrimeP {
    pub fn new(value: u64) -> Result<PrimeP, Error> {
        if value > MAX_PRIME {
            return Err(Error::PrimeTooLarge(value));
        }
        if !is_prime(value) {
            return Err(Error::NotPrime(value));
        }
        Ok(PrimeP(value))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// p², guaranteed not to overflow by the [`MAX_PRIME`] bound.
    #[inline]
    pub fn squared(self) -> u64 {
        self.0 * self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }

    pub(crate) fn require_odd(self) -> Result<(), Error> {
        if self.is_odd() {
            Ok(())
        } else {
            Err(Error::OddPrimeRequired(self.0))
        }
    }
}

impl std::fmt::Display for PrimeP {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A canonical residue: `value` in [0, modulus).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Residue {
        debug_assert!(modulus >= 2, "modulus must be at least 2");
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

/// The Fermat quotient of 2: (2^(p−1) − 1)/p mod p, for odd p.
///
/// The division is exact by Fermat's little theorem; the result is zero
/// exactly when p is a Wieferich prime.
pub fn fermat_quotient_2(p: PrimeP) -> Result<Residue, Error> {
    p.require_odd()?;
    let psq = p.squared();
    let pow = powmod(2, p.get() - 1, psq);
    // pow ≡ 1 mod p, so pow − 1 is an exact multiple of p below p².
    let q = (pow - 1) / p.get();
    Ok(Residue::new(q, p.get()))
}

/// Wieferich test: 2^(p−1) ≡ 1 (mod p²).
///
/// p = 2 is accepted and reports false (2¹ = 2 ≢ 1 mod 4).
pub fn is_wieferich(p: PrimeP) -> bool {
    powmod(2, p.get() - 1, p.squared()) == 1
}

/// The canonical square root of −1 mod p, for p ≡ 1 (mod 4).
///
/// Finds a quadratic non-residue g by Euler's criterion over 2, 3, 4, …,
/// raises it to (p−1)/4, and returns the smaller of the two roots.
pub fn sqrt_minus_one(p: PrimeP) -> Result<Residue, Error> {
    let pv = p.get();
    if pv % 4 != 1 {
        return Err(Error::WrongResidueClass {
            p: pv,
            needed_mod4: 1,
        });
    }
    let mut g = 2;
    while powmod(g, (pv - 1) / 2, pv) != pv - 1 {
        g += 1;
    }
    let r = powmod(g, (pv - 1) / 4, pv);
    Ok(Residue::new(r.min(pv - r), pv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn p(n: u64) -> PrimeP {
        PrimeP::new(n).unwrap()
    }

    #[test]
    fn mulmod_fixtures() {
        assert_eq!(mulmod(3, 4, 5), 2);
        assert_eq!(mulmod(123456, 0, 997), 0);
        assert_eq!(mulmod(0, 987654, 997), 0);
    }

    #[test]
    fn mulmod_matches_bigint_oracle() {
        // 10⁹ · 10⁹ mod (10⁹+7), recomputed with arbitrary precision.
        let m = 1_000_000_007u64;
        let expected: u64 = (BigUint::from(1_000_000_000u64) * BigUint::from(1_000_000_000u64)
            % BigUint::from(m))
        .try_into()
        .unwrap();
        assert_eq!(mulmod(1_000_000_000, 1_000_000_000, m), expected);

        // Near the top of the supported width.
        let m = u64::MAX;
        let a = u64::MAX - 1;
        let b = u64::MAX - 2;
        let expected: u64 = (BigUint::from(a) * BigUint::from(b) % BigUint::from(m))
            .try_into()
            .unwrap();
        assert_eq!(mulmod(a, b, m), expected);
    }

    #[test]
    fn powmod_fixtures() {
        assert_eq!(powmod(2, 2, 9), 4);
        // 2¹⁰ mod 121 = 1024 − 8·121 = 56
        assert_eq!(powmod(2, 10, 121), 56);
        assert_eq!(powmod(7, 0, 13), 1);
        assert_eq!(powmod(0, 0, 13), 1);
    }

    #[test]
    fn powmod_matches_bigint_oracle() {
        let m = 3511u64 * 3511;
        let expected: u64 = BigUint::from(2u64)
            .modpow(&BigUint::from(3510u64), &BigUint::from(m))
            .try_into()
            .unwrap();
        assert_eq!(powmod(2, 3510, m), expected);
    }

    #[test]
    fn is_prime_fixtures() {
        assert!(is_prime(1093));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        // Carmichael number 561 = 3·11·17.
        assert!(!is_prime(561));
        assert!(is_prime(2));
        assert!(is_prime(3511));
        // Strong pseudoprime to bases 2, 3, 5, 7.
        assert!(!is_prime(3_215_031_751));
        // Largest 64-bit prime.
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(u64::MAX));
    }

    #[test]
    fn is_prime_matches_trial_division_to_10k() {
        let trial = |n: u64| {
            n >= 2
                && (2..n)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..10_000u64 {
            assert_eq!(is_prime(n), trial(n), "disagreement at {n}");
        }
    }

    #[test]
    fn prime_p_construction() {
        assert!(PrimeP::new(2).is_ok());
        assert_eq!(PrimeP::new(4), Err(Error::NotPrime(4)));
        assert_eq!(
            PrimeP::new(MAX_PRIME + 2),
            Err(Error::PrimeTooLarge(MAX_PRIME + 2))
        );
        // p² at the ceiling must not overflow.
        let big = (2..).map(|d| MAX_PRIME - d).find(|&n| is_prime(n)).unwrap();
        assert!(PrimeP::new(big).unwrap().squared() >= big);
    }

    #[test]
    fn inv_mod_fixtures() {
        assert_eq!(inv_mod(2, 3), Ok(2));
        assert_eq!(inv_mod(3, 7), Ok(5));
        assert_eq!(
            inv_mod(3, 9),
            Err(Error::NotInvertible {
                value: 3,
                modulus: 9
            })
        );
        assert_eq!(
            inv_mod(0, 5),
            Err(Error::NotInvertible {
                value: 0,
                modulus: 5
            })
        );
    }

    #[test]
    fn fermat_quotient_fixtures() {
        // (2² − 1)/3 = 1, (2⁴ − 1)/5 = 3
        assert_eq!(fermat_quotient_2(p(3)).unwrap().value(), 1);
        assert_eq!(fermat_quotient_2(p(5)).unwrap().value(), 3);
        assert_eq!(fermat_quotient_2(p(1093)).unwrap().value(), 0);
        assert_eq!(fermat_quotient_2(p(3511)).unwrap().value(), 0);
        assert_eq!(fermat_quotient_2(p(2)), Err(Error::OddPrimeRequired(2)));
    }

    #[test]
    fn wieferich_fixtures() {
        assert!(is_wieferich(p(1093)));
        assert!(is_wieferich(p(3511)));
        assert!(!is_wieferich(p(3)));
        assert!(!is_wieferich(p(2)));
    }

    #[test]
    fn wieferich_iff_zero_quotient() {
        for n in (3..2000u64).filter(|&n| is_prime(n)) {
            let pp = p(n);
            assert_eq!(
                is_wieferich(pp),
                fermat_quotient_2(pp).unwrap().value() == 0,
                "mismatch at p = {n}"
            );
        }
        assert!(fermat_quotient_2(p(1093)).unwrap().value() == 0);
    }

    #[test]
    fn sqrt_minus_one_fixtures() {
        assert_eq!(sqrt_minus_one(p(5)).unwrap().value(), 2);
        assert_eq!(sqrt_minus_one(p(13)).unwrap().value(), 5);
        assert_eq!(sqrt_minus_one(p(17)).unwrap().value(), 4);
        assert_eq!(
            sqrt_minus_one(p(7)),
            Err(Error::WrongResidueClass {
                p: 7,
                needed_mod4: 1
            })
        );
    }

    #[test]
    fn sqrt_minus_one_squares_to_minus_one() {
        for n in (5..10_000u64).filter(|&n| is_prime(n) && n % 4 == 1) {
            let r = sqrt_minus_one(p(n)).unwrap().value();
            assert_eq!(mulmod(r, r, n), n - 1, "root invalid at p = {n}");
            assert!(r <= n - r, "root not canonical at p = {n}");
        }
    }

    #[test]
    fn euler_criterion_for_two() {
        // 2^((p−1)/2) ≡ (−1)^((p²−1)/8) mod p for every odd prime.
        for n in (3..5_000u64).filter(|&n| is_prime(n)) {
            let lhs = powmod(2, (n - 1) / 2, n);
            let rhs = if ((n * n - 1) / 8) % 2 == 0 { 1 } else { n - 1 };
            assert_eq!(lhs, rhs, "Euler criterion failed at p = {n}");
        }
    }

    #[test]
    fn residue_is_canonical() {
        let r = Residue::new(17, 5);
        assert_eq!(r.value(), 2);
        assert_eq!(r.modulus(), 5);
    }

    proptest! {
        #[test]
        fn mulmod_agrees_with_naive(a in 0u64..1u64 << 32, b in 0u64..1u64 << 32, m in 2u64..1u64 << 32) {
            let (a, b) = (a % m, b % m);
            prop_assert_eq!(mulmod(a, b, m), (a as u128 * b as u128 % m as u128) as u64);
        }

        #[test]
        fn inverse_really_inverts(a in 1u64..100_000, m in 2u64..100_000) {
            match inv_mod(a, m) {
                Ok(inv) => prop_assert_eq!(mulmod(a % m, inv, m), 1 % m),
                Err(_) => prop_assert!(gcd(a, m) > 1),
            }
        }

        #[test]
        fn fermat_little_theorem(seed in 3u64..100_000, a in 2u64..1_000_000) {
            // Round the seed up to the next prime.
            let n = (seed..).find(|&n| is_prime(n)).unwrap();
            prop_assume!(a % n != 0);
            prop_assert_eq!(powmod(a, n - 1, n), 1);
        }
    }
}
