//! Exact evaluation of finite sums of the Euler totient over floor quotients
//! at shifted prime arguments,
//!
//! ```text
//! S(x, a) = Σ_{p ≤ x} φ(|⌊x / (p + a)⌋|),
//! ```
//!
//! together with the machinery needed to check the identities and asymptotic
//! formulas that govern such sums at desk scale: segmented φ/μ/prime sieves,
//! a sublinear prime counter over the distinct quotients ⌊x/n⌋, the offset
//! logarithmic integral, the analytic constants 6/π², γ, and the Mertens
//! constant, empirical error terms E(x, a) against the main term
//! (6/π²)·x·log log x, and a least-squares fit of the secondary constants.
//!
//! Conventions, fixed throughout the crate:
//!
//! * φ(0) = 0. The quotient ⌊x/(p+a)⌋ can vanish for a > 0; such terms
//!   contribute nothing.
//! * Negative quotients (possible for a < 0) contribute φ(|q|), with q the
//!   *floor* quotient (⌊10/−3⌋ = −4, not −3).
//! * Terms with p + a = 0 are skipped and counted in [`floor_sums::ExactSum::skipped`].
//! * Integer sums are accumulated exactly with checked 64-bit arithmetic;
//!   floating point never enters an integer accumulation path.
//! * li(x) means the offset logarithmic integral ∫₂ˣ dt/log t.

pub mod asymptotics;
pub mod error;
pub mod floor_sums;
pub mod identities;
pub mod prime_count;
pub mod sieves;
pub mod special_values;

pub use error::Error;

/// Integer square root, ⌊√n⌋.
pub(crate) fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |s| s <= n) {
        r += 1;
    }
    r
}

/// Floor division for signed integers (`⌊a / b⌋`, not truncation).
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) != (b < 0) {
        q - 1
    } else {
        q
    }
}
