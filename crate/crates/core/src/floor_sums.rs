//! Exact evaluation of the finite sums over primes and integers:
//!
//! * S(x, a) = Σ_{p ≤ x} φ(|⌊x/(p+a)⌋|), by a naive prime loop and, for
//!   a = 0, by a sublinear quotient-block algorithm;
//! * Σ_{n ≤ x} φ(⌊x/n⌋) over the integer domain;
//! * Σ_{p ≤ x} ⌊x/p⌋ via quotient blocks;
//! * Σ_{p ≤ x} {x/p} with exact rational terms and compensated accumulation;
//! * Σ_{p ≤ x} f(|⌊x/(p+a)⌋|) for arbitrary integer-valued f.
//!
//! Integer accumulation is checked 64-bit throughout; floating-point division
//! never produces a floor quotient.

use crate::prime_count::PrimeCounter;
use crate::sieves::SieveTables;
use crate::{floor_div, isqrt, Error};

/// Which evaluation strategy to use for S(x, a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Loop over every prime p ≤ x. Works for any shift a.
    Naive,
    /// Quotient-block summation with π-differences. Requires a = 0.
    Blocked,
}

/// One sum evaluation request.
#[derive(Debug, Clone, Copy)]
pub struct SumQuery {
    pub x: u64,
    pub shift: i64,
    pub algorithm: Algorithm,
}

/// An exactly evaluated integer sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSum {
    /// The exact value. No floating point enters its computation.
    pub value: i64,
    /// Number of primes p ≤ x considered (equals π(x)).
    pub terms: u64,
    /// Terms skipped because p + a = 0 (the paper's excluded singularity).
    pub skipped: u64,
}

fn checked_add(acc: i64, term: i64) -> Result<i64, Error> {
    acc.checked_add(term).ok_or(Error::Overflow)
}

/// S(x, a) by direct iteration over all primes p ≤ x.
///
/// Needs φ and the prime list up to x, so `q.x` must not exceed the sieve
/// bound. Terms with p + a = 0 are skipped and counted.
pub fn sum_phi_floor_primes_naive(q: &SumQuery, tables: &SieveTables) -> Result<ExactSum, Error> {
    if q.x > tables.bound() {
        return Err(Error::ExceedsSieveBound {
            x: q.x,
            bound: tables.bound(),
        });
    }
    let mut value = 0i64;
    let mut terms = 0u64;
    let mut skipped = 0u64;
    for &p in tables.primes() {
        if p > q.x {
            break;
        }
        terms += 1;
        let d = p as i64 + q.shift;
        if d == 0 {
            skipped += 1;
            continue;
        }
        let quotient = floor_div(q.x as i64, d);
        let m = quotient.unsigned_abs();
        value = checked_add(value, tables.phi(m)? as i64)?;
    }
    Ok(ExactSum {
        value,
        terms,
        skipped,
    })
}

/// S(x, 0) in sublinear time using quotient blocks and π-differences.
///
/// Split at s = ⌊√x⌋:
/// * primes p ≤ s contribute φ(⌊x/p⌋) directly, with φ of the large
///   quotient computed by trial factorization over the sieved primes
///   (all prime factors of ⌊x/p⌋ up to its square root are ≤ s);
/// * primes p > s have quotient m = ⌊x/p⌋ ≤ ⌊x/(s+1)⌋ ≤ s, and each m
///   is hit by exactly π(⌊x/m⌋) − π(max(⌊x/(m+1)⌋, s)) primes, where the
///   clamp at s keeps the small primes out of the block count.
///
/// `tables` must cover ⌊√x⌋ (a full sieve to x is *not* required);
/// `counter` must be built for the same x. Shifts are rejected: with a ≠ 0
/// the quotient is no longer constant on the π-difference blocks.
pub fn sum_phi_floor_primes_blocked(
    q: &SumQuery,
    tables: &SieveTables,
    counter: &PrimeCounter,
) -> Result<ExactSum, Error> {
    if q.shift != 0 {
        return Err(Error::BlockedShiftUnsupported(q.shift));
    }
    let x = q.x;
    let s = isqrt(x);
    if s > tables.bound() {
        return Err(Error::ExceedsSieveBound {
            x: s,
            bound: tables.bound(),
        });
    }
    let mut value = 0i64;

    // direct part: p ≤ s
    for &p in tables.primes() {
        if p > s {
            break;
        }
        let m = x / p;
        value = checked_add(value, phi_by_factorization(m, tables) as i64)?;
    }

    // block part: p > s, quotient m = ⌊x/p⌋ ≤ ⌊x/(s+1)⌋
    let pi_s = counter.pi_at_value(s.max(1));
    let m_max = x / (s + 1);
    for m in 1..=m_max {
        let hi = counter.pi_at_value(x / m);
        let lo = counter.pi_at_value(x / (m + 1)).max(pi_s);
        if hi > lo {
            let count = hi - lo;
            let phi_m = tables.phi(m)? as i64;
            let term = phi_m.checked_mul(count as i64).ok_or(Error::Overflow)?;
            value = checked_add(value, term)?;
        }
    }

    Ok(ExactSum {
        value,
        terms: counter.pi_x(),
        skipped: 0,
    })
}

/// φ(m) by trial division over the sieved primes; every prime factor of m
/// below √m must be within the table's prime list.
fn phi_by_factorization(m: u64, tables: &SieveTables) -> u64 {
    if m == 0 {
        return 0;
    }
    let mut n = m;
    let mut phi = m;
    for &p in tables.primes() {
        if p * p > n {
            break;
        }
        if n % p == 0 {
            phi = phi / p * (p - 1);
            while n % p == 0 {
                n /= p;
            }
        }
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

/// Σ_{n ≤ x} φ(⌊x/n⌋), the integer-domain analogue, in O(x) table lookups.
pub fn sum_phi_floor_integers(x: u64, tables: &SieveTables) -> Result<ExactSum, Error> {
    if x > tables.bound() {
        return Err(Error::ExceedsSieveBound {
            x,
            bound: tables.bound(),
        });
    }
    let mut value = 0i64;
    for n in 1..=x {
        value = checked_add(value, tables.phi(x / n)? as i64)?;
    }
    Ok(ExactSum {
        value,
        terms: x,
        skipped: 0,
    })
}

/// Σ_{p ≤ x} ⌊x/p⌋ via the identity Σ_{p ≤ x} ⌊x/p⌋ = Σ_{n ≤ x} π(⌊x/n⌋),
/// walked over the O(√x) quotient blocks.
pub fn sum_floor_primes(x: u64, counter: &PrimeCounter) -> Result<ExactSum, Error> {
    let mut value = 0i64;
    let mut n = 1u64;
    while n <= x {
        let q = x / n;
        let n_hi = x / q; // last n with the same quotient
        let pi_q = counter.pi_at_value(q) as i64;
        let width = (n_hi - n + 1) as i64;
        let term = pi_q.checked_mul(width).ok_or(Error::Overflow)?;
        value = checked_add(value, term)?;
        n = n_hi + 1;
    }
    Ok(ExactSum {
        value,
        terms: counter.pi_x(),
        skipped: 0,
    })
}

/// Σ_{p ≤ x} {x/p} = Σ_{p ≤ x} (x mod p)/p, each term an exact rational,
/// accumulated with Kahan compensation.
pub fn sum_fractional_primes(x: u64, tables: &SieveTables) -> Result<f64, Error> {
    if x > tables.bound() {
        return Err(Error::ExceedsSieveBound {
            x,
            bound: tables.bound(),
        });
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for &p in tables.primes() {
        if p > x {
            break;
        }
        let term = (x % p) as f64 / p as f64;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// Σ_{p ≤ x} f(|⌊x/(p+a)⌋|) for a caller-supplied integer function f,
/// total on [0, x]. Terms with p + a = 0 are skipped; an f failure is
/// reported with the offending argument attached.
pub fn sum_generic_floor_primes<F>(
    x: u64,
    a: i64,
    f: F,
    tables: &SieveTables,
) -> Result<ExactSum, Error>
where
    F: Fn(u64) -> Result<i64, String>,
{
    if x > tables.bound() {
        return Err(Error::ExceedsSieveBound {
            x,
            bound: tables.bound(),
        });
    }
    let mut value = 0i64;
    let mut terms = 0u64;
    let mut skipped = 0u64;
    for &p in tables.primes() {
        if p > x {
            break;
        }
        terms += 1;
        let d = p as i64 + a;
        if d == 0 {
            skipped += 1;
            continue;
        }
        let m = floor_div(x as i64, d).unsigned_abs();
        let fv = f(m).map_err(|reason| Error::SummandFailed { arg: m, reason })?;
        value = checked_add(value, fv)?;
    }
    Ok(ExactSum {
        value,
        terms,
        skipped,
    })
}
