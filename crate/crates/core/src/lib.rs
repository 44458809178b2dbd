//! Exact verification toolkit for Wieferich primes and the monogenicity of
//! the trinomial family x^(2p) + 2x^p + 2.
//!
//! The library decides, for each prime p, whether 2^(p−1) ≡ 1 (mod p²) (the
//! Wieferich condition) and whether the trinomial x^(2p) + 2x^p + 2 is
//! monogenic, then cross-checks that the two verdicts are opposite: by the
//! trinomial coprimality criterion over F_p, by an independent Dedekind index
//! oracle over Z[x], and by a suite of congruence identities in (Z/p²Z)[i].
//! All arithmetic is exact; nothing here is approximate or probabilistic.
//!
//! Module map:
//! - [`arith`]: machine-width modular arithmetic, deterministic primality,
//!   Fermat quotients and the Wieferich test.
//! - [`sieve`]: segmented prime range iterator.
//! - [`gfp`]: dense polynomials over F_p and the coprimality witness.
//! - [`zpoly`]: big-integer polynomials with resultants, discriminants, the Swan
//!   closed form, Eisenstein and Dedekind index criteria.
//! - [`gauss`]: arithmetic in (Z/p²Z)[i] and the congruence identity suite.
//! - [`report`]: per-prime verdict records and the combined pipelines.

pub mod arith;
pub mod error;
pub mod gauss;
pub mod gfp;
pub mod report;
pub mod sieve;
pub mod zpoly;

pub use arith::{PrimeP, Residue};
pub use error::Error;
