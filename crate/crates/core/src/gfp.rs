//! Dense univariate polynomials over F_p.
//!
//! `GfpPoly` stores canonical residues in ascending degree order: `coeffs[j]`
//! is the coefficient of x^j, the vector is empty for the zero polynomial, and
//! the last entry is nonzero otherwise. The module builds the coprimality
//! witness for the trinomial criterion: the quadratic H₁ = x² + 2x + 2 and the
//! degree-p companion H₂ = (2x^p + 2 − (2x+2)^p)/p, the latter by two
//! independent routes that the tests hold against each other.

use crate::arith::{fermat_quotient_2, inv_mod, mulmod, powmod, PrimeP, MAX_PRIME};
use crate::error::Error;

/// Residue product mod p. The modulus is capped at 2³² − 1, so the product of
/// two canonical residues fits in a u64 and no 128-bit division is needed.
#[inline]
fn mulp(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(a < p && b < p && p <= MAX_PRIME);
    a * b % p
}

/// Dense polynomial over F_p (p prime, p ≤ 2³² − 1), canonical representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfpPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl GfpPoly {
    /// Build from coefficients in ascending degree order; values are reduced
    /// mod p and trailing zeros stripped.
    pub fn from_coeffs(modulus: u64, coeffs: impl IntoIterator<Item = u64>) -> GfpPoly {
        assert!(modulus >= 2 && modulus <= MAX_PRIME, "modulus out of range");
        debug_assert!(crate::arith::is_prime(modulus), "modulus must be prime");
        let coeffs = coeffs.into_iter().map(|c| c % modulus).collect();
        let mut poly = GfpPoly { modulus, coeffs };
        poly.normalize();
        poly
    }

    pub fn zero(modulus: u64) -> GfpPoly {
        GfpPoly {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: u64) -> GfpPoly {
        GfpPoly::from_coeffs(modulus, [1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Coefficient of x^j (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> u64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    /// Evaluate at t by Horner's rule.
    pub fn eval(&self, t: u64) -> u64 {
        let t = t % self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mulp(acc, t, self.modulus) + c) % self.modulus)
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn make_monic(&self) -> GfpPoly {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(lc) => {
                let inv = inv_mod(lc, self.modulus).expect("prime modulus, nonzero leading");
                let coeffs = self
                    .coeffs
                    .iter()
                    .map(|&c| mulp(c, inv, self.modulus))
                    .collect();
                GfpPoly {
                    modulus: self.modulus,
                    coeffs,
                }
            }
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> GfpPoly {
        if self.coeffs.len() <= 1 {
            return GfpPoly::zero(self.modulus);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| mulp(j as u64 % self.modulus, c, self.modulus))
            .collect();
        let mut poly = GfpPoly {
            modulus: self.modulus,
            coeffs,
        };
        poly.normalize();
        poly
    }

    /// Replace f(x^k) by f(x): keeps the coefficients at exponents divisible
    /// by k. Callers must ensure all other coefficients vanish.
    pub(crate) fn deflate(&self, k: usize) -> GfpPoly {
        debug_assert!(k >= 1);
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || j % k == 0));
        let coeffs = self.coeffs.iter().step_by(k).copied().collect();
        let mut poly = GfpPoly {
            modulus: self.modulus,
            coeffs,
        };
        poly.normalize();
        poly
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn check_modulus(&self, other: &GfpPoly) -> Result<(), Error> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }
}

impl std::fmt::Display for GfpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, j) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, j) => write!(f, "x^{j}")?,
                (c, 1) => write!(f, "{c}x")?,
                (c, j) => write!(f, "{c}x^{j}")?,
            }
        }
        Ok(())
    }
}

/// Sum in F_p[x].
pub fn poly_add(a: &GfpPoly, b: &GfpPoly) -> Result<GfpPoly, Error> {
    a.check_modulus(b)?;
    let p = a.modulus;
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n).map(|j| (a.coeff(j) + b.coeff(j)) % p).collect();
    let mut out = GfpPoly { modulus: p, coeffs };
    out.normalize();
    Ok(out)
}

/// Difference in F_p[x].
pub fn poly_sub(a: &GfpPoly, b: &GfpPoly) -> Result<GfpPoly, Error> {
    a.check_modulus(b)?;
    let p = a.modulus;
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n).map(|j| (a.coeff(j) + p - b.coeff(j)) % p).collect();
    let mut out = GfpPoly { modulus: p, coeffs };
    out.normalize();
    Ok(out)
}

/// Product in F_p[x], schoolbook.
pub fn poly_mul(a: &GfpPoly, b: &GfpPoly) -> Result<GfpPoly, Error> {
    a.check_modulus(b)?;
    let p = a.modulus;
    if a.is_zero() || b.is_zero() {
        return Ok(GfpPoly::zero(p));
    }
    let mut coeffs = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ca) in a.coeffs.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.coeffs.iter().enumerate() {
            coeffs[i + j] = (coeffs[i + j] + mulp(ca, cb, p)) % p;
        }
    }
    let mut out = GfpPoly { modulus: p, coeffs };
    out.normalize();
    Ok(out)
}

/// Quotient and remainder of a by b, with deg(rem) < deg(b).
pub fn poly_divmod(a: &GfpPoly, b: &GfpPoly) -> Result<(GfpPoly, GfpPoly), Error> {
    a.check_modulus(b)?;
    if b.is_zero() {
        return Err(Error::ZeroPolynomialDivision);
    }
    let p = a.modulus;
    let db = b.coeffs.len() - 1;
    if a.coeffs.len() < b.coeffs.len() {
        return Ok((GfpPoly::zero(p), a.clone()));
    }
    let lc_inv = inv_mod(b.coeffs[db], p)?;
    let mut rem = a.coeffs.clone();
    let mut quot = vec![0u64; a.coeffs.len() - db];
    for i in (db..rem.len()).rev() {
        let q = mulp(rem[i], lc_inv, p);
        if q == 0 {
            continue;
        }
        quot[i - db] = q;
        for (k, &cb) in b.coeffs.iter().enumerate() {
            let idx = i - db + k;
            rem[idx] = (rem[idx] + p - mulp(q, cb, p)) % p;
        }
    }
    rem.truncate(db);
    let mut quot = GfpPoly {
        modulus: p,
        coeffs: quot,
    };
    let mut rem = GfpPoly {
        modulus: p,
        coeffs: rem,
    };
    quot.normalize();
    rem.normalize();
    Ok((quot, rem))
}

/// Remainder of a mod b.
pub fn poly_rem(a: &GfpPoly, b: &GfpPoly) -> Result<GfpPoly, Error> {
    poly_divmod(a, b).map(|(_, r)| r)
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn poly_gcd(a: &GfpPoly, b: &GfpPoly) -> Result<GfpPoly, Error> {
    a.check_modulus(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdBothZero);
    }
    let mut f = a.clone();
    let mut g = b.clone();
    while !g.is_zero() {
        let r = poly_rem(&f, &g)?;
        f = g;
        g = r;
    }
    Ok(f.make_monic())
}

/// Radical (squarefree part): the monic product of the distinct irreducible
/// factors of f over F_p.
///
/// Uses only GCDs plus the characteristic-p deflation f(x) = w(x)^p whenever
/// the derivative vanishes, so no factorization is needed.
pub fn radical(f: &GfpPoly) -> Result<GfpPoly, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomialDivision);
    }
    let p = f.modulus;
    let f = f.make_monic();
    if f.degree() == Some(0) {
        return Ok(GfpPoly::one(p));
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = w(x)^p with w the deflation by p; same radical.
        return radical(&f.deflate(p as usize));
    }
    let d = poly_gcd(&f, &df)?;
    // u carries each factor whose multiplicity is not divisible by p, once.
    let (u, r) = poly_divmod(&f, &d)?;
    debug_assert!(r.is_zero());
    // Strip u's factors out of d; what survives is a perfect p-th power.
    let mut v = d;
    loop {
        let w = poly_gcd(&v, &u)?;
        if w.degree() == Some(0) {
            break;
        }
        let (q, r) = poly_divmod(&v, &w)?;
        debug_assert!(r.is_zero());
        v = q;
    }
    if v.degree() == Some(0) {
        return Ok(u);
    }
    poly_mul(&u, &radical(&v)?)
}

/// The quadratic H₁(x) = x² + 2x + 2 reduced mod p.
pub fn build_h1(p: PrimeP) -> GfpPoly {
    GfpPoly::from_coeffs(p.get(), [2, 2, 1])
}

/// H₂ mod p from the closed form of its coefficients.
///
/// c₀ = c_p = −2·q_p(2) where q_p(2) is the Fermat quotient of 2, and
/// c_j = −2·(−1)^(j−1)·j⁻¹ for 1 ≤ j ≤ p−1, using C(p,j)/p ≡ (−1)^(j−1)·j⁻¹
/// and 2^p ≡ 2 (mod p). O(p) with a batch inverse table and no mod-p²
/// arithmetic; validated against [`build_h2_direct`] by the test suite.
pub fn build_h2_closed(p: PrimeP) -> Result<GfpPoly, Error> {
    p.require_odd()?;
    let pv = p.get();
    let fq = fermat_quotient_2(p)?.value();
    let edge = (pv - (2 * fq) % pv) % pv;
    let inv = batch_inverses(pv);
    let mut coeffs = vec![0u64; pv as usize + 1];
    coeffs[0] = edge;
    coeffs[pv as usize] = edge;
    for j in 1..pv as usize {
        let term = (2 * inv[j]) % pv;
        coeffs[j] = if j % 2 == 1 { (pv - term) % pv } else { term };
    }
    Ok(GfpPoly::from_coeffs(pv, coeffs))
}

/// H₂ mod p from the defining quotient (2x^p + 2 − (2x+2)^p)/p.
///
/// Expands the numerator mod p² using the binomial recurrence
/// C(p,j) = C(p,j−1)·(p−j+1)·j⁻¹ (j < p is invertible mod p²), divides each
/// coefficient exactly by p, and reduces mod p. Errors with an internal fault
/// if any coefficient is not divisible by p, which can never happen.
pub fn build_h2_direct(p: PrimeP) -> Result<GfpPoly, Error> {
    p.require_odd()?;
    let pv = p.get();
    let psq = p.squared();
    let pow2p = powmod(2, pv, psq);
    let mut numerator = vec![0u64; pv as usize + 1];
    let edge = (2 + psq - pow2p) % psq;
    numerator[0] = edge;
    numerator[pv as usize] = edge;
    let mut binom = 1u64; // C(p, j) mod p²
    for j in 1..pv {
        binom = mulmod(binom, pv - j + 1, psq);
        binom = mulmod(binom, inv_mod(j, psq)?, psq);
        numerator[j as usize] = (psq - mulmod(pow2p, binom, psq)) % psq;
    }
    let mut coeffs = Vec::with_capacity(numerator.len());
    for &c in &numerator {
        if c % pv != 0 {
            return Err(Error::InternalFault(
                "H2 numerator coefficient not divisible by p",
            ));
        }
        coeffs.push(c / pv);
    }
    Ok(GfpPoly::from_coeffs(pv, coeffs))
}

/// The monic gcd of H₁ and H₂ over F_p: the coprimality witness.
pub fn jks_gcd_witness(p: PrimeP) -> Result<GfpPoly, Error> {
    poly_gcd(&build_h1(p), &build_h2_closed(p)?)
}

/// Monogenicity of x^(2p) + 2x^p + 2 by the trinomial criterion: true iff
/// H₁ and H₂ are coprime in F_p[x].
pub fn is_monogenic_jks(p: PrimeP) -> Result<bool, Error> {
    Ok(jks_gcd_witness(p)?.degree() == Some(0))
}

/// Inverse table mod a prime: `inv[j]` = j⁻¹ for 1 ≤ j < p, in O(p).
#[allow(clippy::needless_range_loop)] // reads earlier entries while filling
fn batch_inverses(p: u64) -> Vec<u64> {
    let n = p as usize;
    let mut inv = vec![0u64; n.max(2)];
    inv[1] = 1;
    for j in 2..n {
        // inv[j] = −(p/j)·inv[p mod j]; both factors < p < 2³², no overflow.
        inv[j] = p - (p / j as u64) * inv[(p % j as u64) as usize] % p;
        if inv[j] == p {
            inv[j] = 0;
        }
    }
    inv
}
