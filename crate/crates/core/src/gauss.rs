//! Arithmetic in (Z/p²Z)[i] and the congruence identity suite.
//!
//! Elements are a + b·i with i² = −1 and both components stored as canonical
//! residues mod p², the working modulus for every identity checked here. The
//! checks split by residue class: for p ≡ 3 (mod 4) the quadratic x² + 2x + 2
//! is irreducible mod p and its zero α = −1 + i lives in the ring extension;
//! for p ≡ 1 (mod 4) the zeros are the integers −1 ± i mod p. Each check
//! verifies that p·H₂ evaluated at those zeros vanishes mod p² exactly for
//! Wieferich p, together with the algebraic identities that conclusion rests
//! on.

use serde::Serialize;

use crate::arith::{is_wieferich, mulmod, powmod, sqrt_minus_one, PrimeP};
use crate::error::Error;

/// An element re + im·i of (Z/p²Z)[i], components canonical mod p².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussRes {
    re: u64,
    im: u64,
    base: u64, // the prime p; the component modulus is p²
}

impl GaussRes {
    pub fn new(p: PrimeP, re: u64, im: u64) -> GaussRes {
        let m = p.squared();
        GaussRes {
            re: re % m,
            im: im % m,
            base: p.get(),
        }
    }

    /// Build from signed components, reducing into [0, p²).
    pub fn from_signed(p: PrimeP, re: i64, im: i64) -> GaussRes {
        let m = p.squared() as i128;
        GaussRes {
            re: (re as i128).rem_euclid(m) as u64,
            im: (im as i128).rem_euclid(m) as u64,
            base: p.get(),
        }
    }

    pub fn re(self) -> u64 {
        self.re
    }

    pub fn im(self) -> u64 {
        self.im
    }

    /// The prime p; components live mod p².
    pub fn modulus_base(self) -> u64 {
        self.base
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn one(p: u64) -> GaussRes {
        GaussRes {
            re: 1,
            im: 0,
            base: p,
        }
    }

    fn check_base(self, other: GaussRes) -> Result<(), Error> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.base,
                right: other.base,
            })
        }
    }

    fn add_unchecked(self, other: GaussRes) -> GaussRes {
        let m = self.base * self.base;
        GaussRes {
            re: (self.re + other.re) % m,
            im: (self.im + other.im) % m,
            base: self.base,
        }
    }

    fn mul_unchecked(self, other: GaussRes) -> GaussRes {
        let m = self.base * self.base;
        // (a + bi)(c + di) = (ac − bd) + (ad + bc)i
        let ac = mulmod(self.re, other.re, m);
        let bd = mulmod(self.im, other.im, m);
        let ad = mulmod(self.re, other.im, m);
        let bc = mulmod(self.im, other.re, m);
        GaussRes {
            re: (ac + m - bd) % m,
            im: (ad + bc) % m,
            base: self.base,
        }
    }

    fn pow_unchecked(self, e: u64) -> GaussRes {
        let mut acc = GaussRes::one(self.base);
        let mut base = self;
        let mut e = e;
        while e != 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(base);
            }
            base = base.mul_unchecked(base);
            e >>= 1;
        }
        acc
    }

    /// Scale by an integer.
    fn scale(self, c: u64) -> GaussRes {
        let m = self.base * self.base;
        GaussRes {
            re: mulmod(c % m, self.re, m),
            im: mulmod(c % m, self.im, m),
            base: self.base,
        }
    }
}

impl std::fmt::Display for GaussRes {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

/// Sum in (Z/p²Z)[i]; errors on mismatched p.
pub fn g_add(a: GaussRes, b: GaussRes) -> Result<GaussRes, Error> {
    a.check_base(b)?;
    Ok(a.add_unchecked(b))
}

/// Product in (Z/p²Z)[i] with i² = −1; errors on mismatched p.
pub fn g_mul(a: GaussRes, b: GaussRes) -> Result<GaussRes, Error> {
    a.check_base(b)?;
    Ok(a.mul_unchecked(b))
}

/// a^e by square-and-multiply; a⁰ = 1.
pub fn g_pow(a: GaussRes, e: u64) -> GaussRes {
    a.pow_unchecked(e)
}

/// p·H₂(θ) mod p²: evaluates 2θ^p + 2 − 2^p(θ+1)^p.
pub fn ph2_eval(p: PrimeP, theta: GaussRes) -> GaussRes {
    let psq = p.squared();
    let theta_p = theta.pow_unchecked(p.get());
    let theta1_p = theta
        .add_unchecked(GaussRes::one(p.get()))
        .pow_unchecked(p.get());
    let two_p = powmod(2, p.get(), psq);
    let mut acc = theta_p.scale(2);
    acc = acc.add_unchecked(GaussRes {
        re: 2 % psq,
        im: 0,
        base: p.get(),
    });
    let negated = theta1_p.scale(two_p).scale(psq - 1); // multiply by −1
    acc.add_unchecked(negated)
}

/// The trinomial evaluated mod p²: θ^(2p) + 2θ^p + 2.
pub fn f_eval(p: PrimeP, theta: GaussRes) -> GaussRes {
    let psq = p.squared();
    let theta_p = theta.pow_unchecked(p.get());
    let mut acc = theta_p.mul_unchecked(theta_p);
    acc = acc.add_unchecked(theta_p.scale(2));
    acc.add_unchecked(GaussRes {
        re: 2 % psq,
        im: 0,
        base: p.get(),
    })
}

/// One verified congruence with its name.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
}

/// Outcome of an identity batch for one prime.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub p: u64,
    pub suite: &'static str,
    pub checks: Vec<IdentityCheck>,
    pub all_passed: bool,
}

impl IdentityReport {
    fn new(p: u64, suite: &'static str) -> IdentityReport {
        IdentityReport {
            p,
            suite,
            checks: Vec::new(),
            all_passed: true,
        }
    }

    fn push(&mut self, name: &'static str, passed: bool) {
        self.checks.push(IdentityCheck { name, passed });
        self.all_passed &= passed;
    }

    /// Names of the failed checks, for diagnostics.
    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }
}

/// (−1)^e as a residue mod m.
fn sign_pow(e: u64, m: u64) -> u64 {
    if e.is_multiple_of(2) {
        1
    } else {
        m - 1
    }
}

/// Identity batch for p ≡ 3 (mod 4), at the extension zero α = −1 + i.
///
/// Verifies, all mod p²: the power formula α^p = (−1)^((p−3)/4)·2^((p−1)/2)·(1+i);
/// the steps (α+1)^p = i^p = −i and i^(2p) = −1; the closed component form of
/// p·H₂(α); and that p·H₂(α) ≡ 0 exactly when p is Wieferich. Every check is
/// a proven statement, so a failure indicates a defect in the arithmetic,
/// never in the input.
#[allow(clippy::manual_div_ceil)] // (p+1)/2 is the identity's exponent, p odd
pub fn check_branch_3mod4(p: PrimeP) -> Result<IdentityReport, Error> {
    if p.get() % 4 != 3 {
        return Err(Error::WrongResidueClass {
            p: p.get(),
            needed_mod4: 3,
        });
    }
    let pv = p.get();
    let psq = p.squared();
    let mut report = IdentityReport::new(pv, "branch_3mod4");

    let alpha = GaussRes::from_signed(p, -1, 1);
    let i = GaussRes::new(p, 0, 1);
    let sign = sign_pow((pv - 3) / 4, psq);

    // α^p = (−1)^((p−3)/4)·2^((p−1)/2)·(1+i)
    let magnitude = mulmod(sign, powmod(2, (pv - 1) / 2, psq), psq);
    let expected_alpha_p = GaussRes {
        re: magnitude,
        im: magnitude,
        base: pv,
    };
    let alpha_p = g_pow(alpha, pv);
    report.push("alpha_pow_closed_form", alpha_p == expected_alpha_p);

    // (α+1)^p = i^p = −i
    let minus_i = GaussRes::from_signed(p, 0, -1);
    let alpha1_p = g_pow(g_add(alpha, GaussRes::one(pv))?, pv);
    report.push(
        "alpha_plus_one_pow",
        alpha1_p == g_pow(i, pv) && alpha1_p == minus_i,
    );

    // i^(2p) = −1
    report.push(
        "i_pow_2p",
        g_pow(i, 2 * pv) == GaussRes::from_signed(p, -1, 0),
    );

    // Components of p·H₂(α): 2+(−1)^((p−3)/4)·2^((p+1)/2) and
    // 2^p+(−1)^((p−3)/4)·2^((p+1)/2).
    let ph2 = ph2_eval(p, alpha);
    let halfpow = mulmod(sign, powmod(2, (pv + 1) / 2, psq), psq);
    let expected = GaussRes {
        re: (2 + halfpow) % psq,
        im: (powmod(2, pv, psq) + halfpow) % psq,
        base: pv,
    };
    report.push("ph2_closed_form", ph2 == expected);

    // p·H₂(α) ≡ 0 iff 2^(p−1) ≡ 1 (mod p²).
    report.push("ph2_zero_iff_wieferich", ph2.is_zero() == is_wieferich(p));

    Ok(report)
}

/// The square-root congruence 2^((p−1)/2) ≡ (−1)^((p+1)/4) mod p², plus its
/// weak mod-p form, for p ≡ 3 (mod 4).
///
/// The weak form 2^((p−1)/2) ≡ (−1)^((p²−1)/8) (mod p) is Euler's criterion
/// with the quadratic character of 2 and holds for every such prime. The
/// mod-p² form assumes the Wieferich condition, so it is only exercised when
/// `is_wieferich(p)` holds; among known primes, only at p = 3511.
pub fn check_claim(p: PrimeP) -> Result<IdentityReport, Error> {
    if p.get() % 4 != 3 {
        return Err(Error::WrongResidueClass {
            p: p.get(),
            needed_mod4: 3,
        });
    }
    let pv = p.get();
    let mut report = IdentityReport::new(pv, "claim");

    // (p²−1)/8 is even iff p ≡ ±1 (mod 8).
    let weak = powmod(2, (pv - 1) / 2, pv);
    let weak_expected = if pv % 8 == 1 || pv % 8 == 7 {
        1
    } else {
        pv - 1
    };
    report.push("euler_criterion_mod_p", weak == weak_expected);

    if is_wieferich(p) {
        let psq = p.squared();
        let strong = powmod(2, (pv - 1) / 2, psq);
        report.push(
            "sqrt_sign_mod_p_squared",
            strong == sign_pow((pv + 1) / 4, psq),
        );
    }

    Ok(report)
}

/// Identity batch for p ≡ 1 (mod 4), at the integer zeros α, β = −1 ± i mod p.
///
/// Verifies, all mod p²: p·H₂(θ) ≡ θ^(2p) + 2θ^p + 2 at both zeros; the two
/// evaluations vanish together or not at all; they vanish exactly for
/// Wieferich p; the product relation α^p·β^p ≡ 2^p; and the squaring
/// relations α^(2p) ≡ −2^p·i^p, β^(2p) ≡ 2^p·i^p.
pub fn check_branch_1mod4(p: PrimeP) -> Result<IdentityReport, Error> {
    let pv = p.get();
    if pv % 4 != 1 {
        return Err(Error::WrongResidueClass {
            p: pv,
            needed_mod4: 1,
        });
    }
    let psq = p.squared();
    let mut report = IdentityReport::new(pv, "branch_1mod4");

    let i = sqrt_minus_one(p)?.value();
    let alpha = (pv - 1 + i) % pv;
    let beta = (2 * pv - 1 - i) % pv;

    let ga = GaussRes::new(p, alpha, 0);
    let gb = GaussRes::new(p, beta, 0);
    let ph2_a = ph2_eval(p, ga);
    let ph2_b = ph2_eval(p, gb);
    report.push("ph2_equals_f_at_alpha", ph2_a == f_eval(p, ga));
    report.push("ph2_equals_f_at_beta", ph2_b == f_eval(p, gb));
    report.push("zeros_vanish_together", ph2_a.is_zero() == ph2_b.is_zero());
    report.push("ph2_zero_iff_wieferich", ph2_a.is_zero() == is_wieferich(p));

    // α^p·β^p ≡ 2^p (from αβ ≡ 2 mod p).
    let alpha_p = powmod(alpha, pv, psq);
    let beta_p = powmod(beta, pv, psq);
    let two_p = powmod(2, pv, psq);
    report.push("alpha_beta_product", mulmod(alpha_p, beta_p, psq) == two_p);

    // α^(2p) ≡ −2^p·i^p and β^(2p) ≡ 2^p·i^p.
    let i_p = powmod(i, pv, psq);
    let product = mulmod(two_p, i_p, psq);
    report.push(
        "alpha_squared_power",
        powmod(alpha, 2 * pv, psq) == (psq - product) % psq,
    );
    report.push("beta_squared_power", powmod(beta, 2 * pv, psq) == product);

    Ok(report)
}

/// Evaluations factor through θ mod p: shifting θ by k·p changes neither
/// p·H₂(θ) nor the trinomial value mod p².
pub fn check_lift_independence(p: PrimeP, theta: GaussRes, k: u64) -> bool {
    let shift = GaussRes::new(p, (k % p.get()) * p.get(), 0);
    let shifted = theta.add_unchecked(shift);
    ph2_eval(p, theta) == ph2_eval(p, shifted) && f_eval(p, theta) == f_eval(p, shifted)
}

/// The factorization route to the Wieferich condition, for odd p:
/// 2^p + 2 ≢ 0 (mod p), and (2^p−2)(2^p+2) ≡ 0 (mod p²) exactly when
/// 2^p ≡ 2 (mod p²), which is the Wieferich condition.
pub fn check_wieferich_factorization(p: PrimeP) -> Result<IdentityReport, Error> {
    p.require_odd()?;
    let pv = p.get();
    let psq = p.squared();
    let mut report = IdentityReport::new(pv, "wieferich_factorization");

    report.push(
        "second_factor_nonzero_mod_p",
        !(powmod(2, pv, pv) + 2).is_multiple_of(pv),
    );

    let two_p = powmod(2, pv, psq);
    let product = mulmod((two_p + psq - 2) % psq, (two_p + 2) % psq, psq);
    report.push("product_zero_iff_2p_is_2", (product == 0) == (two_p == 2));
    report.push("2p_is_2_iff_wieferich", (two_p == 2) == is_wieferich(p));

    Ok(report)
}

/// The zero of x² + 2x + 2 used by the identity suite: the extension element
/// −1 + i for p ≡ 3 (mod 4), the integer lift (−1 + √−1) mod p otherwise.
pub fn canonical_zero(p: PrimeP) -> Result<GaussRes, Error> {
    p.require_odd()?;
    if p.get() % 4 == 3 {
        Ok(GaussRes::from_signed(p, -1, 1))
    } else {
        let i = sqrt_minus_one(p)?.value();
        Ok(GaussRes::new(p, (p.get() - 1 + i) % p.get(), 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use proptest::prelude::*;

    fn pp(n: u64) -> PrimeP {
        PrimeP::new(n).unwrap()
    }

    #[test]
    fn mul_fixtures() {
        let p = pp(3);
        let alpha = GaussRes::from_signed(p, -1, 1);
        // (−1+i)² = −2i, i.e. 0 + 7i mod 9.
        assert_eq!(g_mul(alpha, alpha).unwrap(), GaussRes::new(p, 0, 7));
        // a·1 = a.
        let a = GaussRes::new(p, 5, 8);
        assert_eq!(g_mul(a, GaussRes::new(p, 1, 0)).unwrap(), a);
        // i·i = −1 mod p².
        let i = GaussRes::new(p, 0, 1);
        assert_eq!(g_mul(i, i).unwrap(), GaussRes::from_signed(p, -1, 0));
    }

    #[test]
    fn mul_rejects_mixed_moduli() {
        let a = GaussRes::new(pp(3), 1, 1);
        let b = GaussRes::new(pp(5), 1, 1);
        assert_eq!(
            g_mul(a, b),
            Err(Error::ModulusMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn pow_fixtures() {
        let p = pp(3);
        let alpha = GaussRes::from_signed(p, -1, 1);
        // α³ = (−1+i)(−2i) = 2+2i mod 9; recomputed by chained mul below.
        assert_eq!(g_pow(alpha, 3), GaussRes::new(p, 2, 2));
        let chained = g_mul(g_mul(alpha, alpha).unwrap(), alpha).unwrap();
        assert_eq!(g_pow(alpha, 3), chained);
        // a⁰ = 1.
        assert_eq!(g_pow(alpha, 0), GaussRes::new(p, 1, 0));
        // i^p = −i for p ≡ 3 mod 4.
        for n in [3u64, 7, 11, 19, 3511] {
            let q = pp(n);
            let i = GaussRes::new(q, 0, 1);
            assert_eq!(g_pow(i, n), GaussRes::from_signed(q, 0, -1), "p = {n}");
        }
    }

    #[test]
    fn pow_agrees_with_repeated_mul() {
        let p = pp(13);
        let a = GaussRes::new(p, 17, 101);
        let mut acc = GaussRes::new(p, 1, 0);
        for e in 0..=16u64 {
            assert_eq!(g_pow(a, e), acc, "e = {e}");
            acc = g_mul(acc, a).unwrap();
        }
    }

    #[test]
    fn ph2_eval_fixtures() {
        // p = 3, θ = −1+i: 2α³+2−8(α+1)³ = 6+12i ≡ 6+3i mod 9, recomputed
        // with explicit multiplications.
        let p = pp(3);
        let alpha = GaussRes::from_signed(p, -1, 1);
        let expected = {
            let a3 = g_mul(g_mul(alpha, alpha).unwrap(), alpha).unwrap();
            let i = g_add(alpha, GaussRes::new(p, 1, 0)).unwrap();
            let i3 = g_mul(g_mul(i, i).unwrap(), i).unwrap();
            let mut acc = a3.scale(2);
            acc = g_add(acc, GaussRes::new(p, 2, 0)).unwrap();
            g_add(acc, i3.scale(8).scale(9 - 1)).unwrap()
        };
        assert_eq!(ph2_eval(p, alpha), expected);
        assert_eq!(ph2_eval(p, alpha), GaussRes::new(p, 6, 3));

        // p = 5: the two integer zeros give 5 and 15 mod 25.
        let p5 = pp(5);
        assert_eq!(
            ph2_eval(p5, GaussRes::new(p5, 1, 0)),
            GaussRes::new(p5, 5, 0)
        );
        assert_eq!(
            ph2_eval(p5, GaussRes::new(p5, 2, 0)),
            GaussRes::new(p5, 15, 0)
        );
    }

    #[test]
    fn f_eval_fixtures() {
        let p5 = pp(5);
        // 1 + 2 + 2 = 5.
        assert_eq!(f_eval(p5, GaussRes::new(p5, 1, 0)), GaussRes::new(p5, 5, 0));
        // 1024 + 64 + 2 = 1090 ≡ 15 mod 25.
        assert_eq!(
            f_eval(p5, GaussRes::new(p5, 2, 0)),
            GaussRes::new(p5, 15, 0)
        );
        // θ = 0 → 2.
        assert_eq!(f_eval(p5, GaussRes::new(p5, 0, 0)), GaussRes::new(p5, 2, 0));
    }

    #[test]
    fn branch_3mod4_fixtures() {
        // p = 3: closed form gives (6, 12) ≡ (6, 3) mod 9.
        let r3 = check_branch_3mod4(pp(3)).unwrap();
        assert!(r3.all_passed, "failures: {:?}", r3.failures());
        // p = 7: all pass, pH₂(α) ≢ 0.
        let r7 = check_branch_3mod4(pp(7)).unwrap();
        assert!(r7.all_passed);
        assert!(!ph2_eval(pp(7), GaussRes::from_signed(pp(7), -1, 1)).is_zero());
        // p = 3511: all pass with pH₂(α) ≡ 0.
        let r = check_branch_3mod4(pp(3511)).unwrap();
        assert!(r.all_passed, "failures: {:?}", r.failures());
        assert!(ph2_eval(pp(3511), GaussRes::from_signed(pp(3511), -1, 1)).is_zero());
        // Wrong residue class is rejected.
        assert!(check_branch_3mod4(pp(5)).is_err());
    }

    #[test]
    fn branch_3mod4_sweep() {
        for n in (3..1000u64).filter(|&n| is_prime(n) && n % 4 == 3) {
            let r = check_branch_3mod4(pp(n)).unwrap();
            assert!(r.all_passed, "p = {n}, failures: {:?}", r.failures());
        }
    }

    #[test]
    fn claim_fixtures() {
        // Weak form: 2³ = 8 ≡ 1 mod 7 and (−1)^((49−1)/8) = 1.
        assert_eq!(powmod(2, 3, 7), 1);
        let r7 = check_claim(pp(7)).unwrap();
        assert!(r7.all_passed);
        assert_eq!(r7.checks.len(), 1);
        // Weak form: 2¹ ≡ −1 mod 3 and (−1)^((9−1)/8) = −1.
        assert_eq!(powmod(2, 1, 3), 2);
        let r3 = check_claim(pp(3)).unwrap();
        assert!(r3.all_passed);
        // Strong mod-p² form fires at the Wieferich prime 3511:
        // 2¹⁷⁵⁵ ≡ (−1)^878 = 1 mod 3511².
        let r = check_claim(pp(3511)).unwrap();
        assert!(r.all_passed, "failures: {:?}", r.failures());
        assert_eq!(r.checks.len(), 2);
        assert_eq!(powmod(2, 1755, 3511 * 3511), 1);
        assert!(check_claim(pp(5)).is_err());
    }

    #[test]
    fn claim_weak_form_sweep() {
        for n in (3..2000u64).filter(|&n| is_prime(n) && n % 4 == 3) {
            assert!(check_claim(pp(n)).unwrap().all_passed, "p = {n}");
        }
    }

    #[test]
    fn branch_1mod4_fixtures() {
        // p = 5: zeros 1 and 2, evaluations 5 and 15, both nonzero.
        let r5 = check_branch_1mod4(pp(5)).unwrap();
        assert!(r5.all_passed, "failures: {:?}", r5.failures());
        let r13 = check_branch_1mod4(pp(13)).unwrap();
        assert!(r13.all_passed);
        // p = 1093: all pass with pH₂ ≡ 0 at both roots.
        let p = pp(1093);
        let r = check_branch_1mod4(p).unwrap();
        assert!(r.all_passed, "failures: {:?}", r.failures());
        let i = sqrt_minus_one(p).unwrap().value();
        let alpha = GaussRes::new(p, 1092 + i, 0);
        let beta = GaussRes::new(p, (2 * 1093 - 1 - i) % 1093, 0);
        assert!(ph2_eval(p, alpha).is_zero());
        assert!(ph2_eval(p, beta).is_zero());
        assert!(check_branch_1mod4(pp(7)).is_err());
    }

    #[test]
    fn branch_1mod4_sweep() {
        for n in (5..1000u64).filter(|&n| is_prime(n) && n % 4 == 1) {
            let r = check_branch_1mod4(pp(n)).unwrap();
            assert!(r.all_passed, "p = {n}, failures: {:?}", r.failures());
        }
    }

    #[test]
    fn lift_independence_fixtures() {
        // (1 + 15)⁵ ≡ 1⁵ mod 25 and friends.
        assert!(check_lift_independence(
            pp(5),
            GaussRes::new(pp(5), 1, 0),
            3
        ));
        assert!(check_lift_independence(
            pp(3),
            GaussRes::from_signed(pp(3), -1, 1),
            1
        ));
        assert!(check_lift_independence(
            pp(7),
            GaussRes::new(pp(7), 4, 2),
            0
        ));
    }

    #[test]
    fn lift_independence_holds_for_gaussian_shifts() {
        // Shifting either component by a multiple of p preserves both
        // evaluations; checked directly on shifted elements.
        for n in [5u64, 13, 19, 23] {
            let p = pp(n);
            for (re, im) in [(1u64, 0u64), (3, 2), (0, 1), (n - 1, 1)] {
                let theta = GaussRes::new(p, re, im);
                for k in [1u64, 2, n - 1] {
                    assert!(check_lift_independence(p, theta, k));
                    let shifted = GaussRes::new(p, re + k * n, im + 2 * k * n);
                    assert_eq!(ph2_eval(p, theta), ph2_eval(p, shifted));
                    assert_eq!(f_eval(p, theta), f_eval(p, shifted));
                }
            }
        }
    }

    #[test]
    fn wieferich_factorization_fixtures() {
        // p = 3: 2³+2 = 10 ≡ 1 mod 3; product 6·10 = 60 ≢ 0 mod 9.
        let r3 = check_wieferich_factorization(pp(3)).unwrap();
        assert!(r3.all_passed);
        assert_ne!(60 % 9, 0);
        // p = 5: product 30·34 = 1020 ≡ 20 mod 25 ≠ 0.
        let r5 = check_wieferich_factorization(pp(5)).unwrap();
        assert!(r5.all_passed);
        assert_eq!((30 * 34) % 25, 20);
        // p = 1093: (2^p−2)(2^p+2) ≡ 0 mod p².
        let p = pp(1093);
        let r = check_wieferich_factorization(p).unwrap();
        assert!(r.all_passed);
        let psq = p.squared();
        let two_p = powmod(2, 1093, psq);
        assert_eq!(mulmod((two_p + psq - 2) % psq, (two_p + 2) % psq, psq), 0);
        assert!(check_wieferich_factorization(pp(2)).is_err());
    }

    #[test]
    fn alpha_power_induction_spot_checks() {
        // α^j = (−1)^((j−3)/4)·2^((j−1)/2)·(1+i) for j ≡ 3 mod 4, j ≤ 199,
        // checked mod p² for several primes.
        for n in [7u64, 11, 103, 3511] {
            let p = pp(n);
            let psq = p.squared();
            let alpha = GaussRes::from_signed(p, -1, 1);
            for j in (3..=199u64).step_by(4) {
                let magnitude =
                    mulmod(sign_pow((j - 3) / 4, psq), powmod(2, (j - 1) / 2, psq), psq);
                assert_eq!(
                    g_pow(alpha, j),
                    GaussRes {
                        re: magnitude,
                        im: magnitude,
                        base: n
                    },
                    "p = {n}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn canonical_zero_annihilates_h1() {
        // The chosen zero satisfies θ² + 2θ + 2 ≡ 0 mod p.
        for n in (3..200u64).filter(|&n| is_prime(n) && n % 2 == 1) {
            let p = pp(n);
            let theta = canonical_zero(p).unwrap();
            let h1 = g_add(
                g_add(g_mul(theta, theta).unwrap(), theta.scale(2)).unwrap(),
                GaussRes::new(p, 2, 0),
            )
            .unwrap();
            assert_eq!(h1.re() % n, 0, "p = {n}");
            assert_eq!(h1.im() % n, 0, "p = {n}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_commutative_associative(
            are in 0u64..169, aim in 0u64..169,
            bre in 0u64..169, bim in 0u64..169,
            cre in 0u64..169, cim in 0u64..169,
        ) {
            let p = PrimeP::new(13).unwrap();
            let a = GaussRes::new(p, are, aim);
            let b = GaussRes::new(p, bre, bim);
            let c = GaussRes::new(p, cre, cim);
            prop_assert_eq!(g_mul(a, b).unwrap(), g_mul(b, a).unwrap());
            let ab_c = g_mul(g_mul(a, b).unwrap(), c).unwrap();
            let a_bc = g_mul(a, g_mul(b, c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }

        #[test]
        fn evaluations_factor_through_mod_p(
            re in 0u64..100, im in 0u64..100, k in 0u64..50,
        ) {
            let p = PrimeP::new(19).unwrap();
            let theta = GaussRes::new(p, re, im);
            prop_assert!(check_lift_independence(p, theta, k));
        }
    }
}
