//! Segmented sieving of primes, Euler totient φ, and Möbius μ up to a bound N.
//!
//! The builder walks the range [2, N] in cache-sized segments. Each segment
//! starts with `phi[n] = n` and an undivided remainder `rem[n] = n`; every
//! base prime p ≤ √N then visits its multiples, applying the factor
//! (1 − 1/p) to φ, stripping p from `rem`, and updating the Möbius sign from
//! the exponent of p. Whatever is left in `rem` afterwards is either 1 or a
//! single prime factor > √N. Primality falls out for free: n is prime iff
//! φ(n) = n − 1.
//!
//! A completed [`SieveTables`] is immutable and can be shared freely across
//! threads.

use crate::{isqrt, Error};

/// Largest bound `build_sieves` accepts. At this size the tables hold
/// 4N bytes of φ (u32) plus N bytes of μ plus the prime list, roughly 1.1 GB;
/// the default CLI capacity of 10^7 needs about 55 MB.
pub const MAX_SIEVE_BOUND: u64 = 200_000_000;

/// Default segment length. 1<<16 entries of (u64 rem + u32 phi + i8 mu)
/// is under 1 MB of working set, comfortably inside L2.
pub const DEFAULT_SEGMENT_LEN: usize = 1 << 16;

/// Prime, φ, and μ tables for 1 ≤ n ≤ bound, built once and read many.
pub struct SieveTables {
    bound: u64,
    phi: Vec<u32>,
    mu: Vec<i8>,
    primes: Vec<u64>,
    multiplicative_ops: u64,
}

impl SieveTables {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// φ(n) for 0 ≤ n ≤ bound, with φ(0) = 0 by the crate convention.
    pub fn phi(&self, n: u64) -> Result<u64, Error> {
        self.phi
            .get(n as usize)
            .map(|&v| v as u64)
            .ok_or(Error::OutOfSieveRange {
                arg: n,
                bound: self.bound,
            })
    }

    /// μ(n) ∈ {−1, 0, 1} for 1 ≤ n ≤ bound.
    pub fn mu(&self, n: u64) -> Result<i64, Error> {
        if n == 0 || n > self.bound {
            return Err(Error::OutOfSieveRange {
                arg: n,
                bound: self.bound,
            });
        }
        Ok(self.mu[n as usize] as i64)
    }

    /// Ascending list of primes ≤ bound.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Multiplications and divisions spent building the tables. The build is
    /// o(N log N): roughly N·(log log N + 1) divisions in total.
    pub fn multiplicative_ops(&self) -> u64 {
        self.multiplicative_ops
    }
}

/// φ(|m|) lookup honoring the crate's quotient conventions: φ(0) = 0, and
/// callers with negative floor quotients pass the absolute value.
pub fn phi_of(m: u64, tables: &SieveTables) -> Result<u64, Error> {
    tables.phi(m)
}

/// Build prime/φ/μ tables up to `bound` with the default segment length.
pub fn build_sieves(bound: u64) -> Result<SieveTables, Error> {
    build_sieves_with_segment(bound, DEFAULT_SEGMENT_LEN)
}

/// Build with an explicit segment length. Output is independent of the
/// segment length; only the cache behavior changes.
pub fn build_sieves_with_segment(bound: u64, segment_len: usize) -> Result<SieveTables, Error> {
    if bound == 0 {
        return Err(Error::ZeroSieveBound);
    }
    if bound > MAX_SIEVE_BOUND {
        return Err(Error::SieveBoundTooLarge {
            requested: bound,
            max: MAX_SIEVE_BOUND,
        });
    }
    let segment_len = segment_len.max(16);
    let n = bound as usize;
    let mut ops: u64 = 0;

    let base_primes = small_primes(isqrt(bound), &mut ops);

    let mut phi = vec![0u32; n + 1];
    let mut mu = vec![0i8; n + 1];
    let mut primes = Vec::new();
    if n >= 1 {
        phi[1] = 1;
        mu[1] = 1;
    }

    let mut rem = vec![0u64; segment_len];
    let mut phi_seg = vec![0u32; segment_len];
    let mut mu_seg = vec![0i8; segment_len];

    let mut lo = 2u64;
    while lo <= bound {
        let hi = (lo + segment_len as u64 - 1).min(bound);
        let len = (hi - lo + 1) as usize;
        for i in 0..len {
            let v = lo + i as u64;
            rem[i] = v;
            phi_seg[i] = v as u32;
            mu_seg[i] = 1;
        }
        for &p in &base_primes {
            // first multiple of p in [lo, hi]
            let start = lo.div_ceil(p) * p;
            ops += 1;
            if start > hi {
                continue;
            }
            let mut j = start;
            while j <= hi {
                let i = (j - lo) as usize;
                phi_seg[i] = (phi_seg[i] as u64 / p * (p - 1)) as u32;
                ops += 2;
                let mut e = 0u32;
                while rem[i] % p == 0 {
                    rem[i] /= p;
                    e += 1;
                    ops += 2;
                }
                mu_seg[i] = if e >= 2 { 0 } else { -mu_seg[i] };
                j += p;
            }
        }
        for i in 0..len {
            let v = lo + i as u64;
            let r = rem[i];
            if r > 1 {
                // exactly one prime factor > √bound, exponent 1
                phi_seg[i] = (phi_seg[i] as u64 / r * (r - 1)) as u32;
                mu_seg[i] = -mu_seg[i];
                ops += 2;
            }
            phi[v as usize] = phi_seg[i];
            mu[v as usize] = mu_seg[i];
            if phi_seg[i] as u64 == v - 1 {
                primes.push(v);
            }
        }
        lo = hi + 1;
    }

    Ok(SieveTables {
        bound,
        phi,
        mu,
        primes,
        multiplicative_ops: ops,
    })
}

/// Non-segmented reference builder: a linear (smallest-prime-factor) sieve.
/// Kept as an independent route for cross-checking the segmented builder.
pub fn build_sieves_simple(bound: u64) -> Result<SieveTables, Error> {
    if bound == 0 {
        return Err(Error::ZeroSieveBound);
    }
    if bound > MAX_SIEVE_BOUND {
        return Err(Error::SieveBoundTooLarge {
            requested: bound,
            max: MAX_SIEVE_BOUND,
        });
    }
    let n = bound as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes_u32: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes_u32.push(i as u32);
        }
        for &p in &primes_u32 {
            let ip = i as u64 * p as u64;
            if p > spf[i] || ip > bound {
                break;
            }
            spf[ip as usize] = p;
        }
    }
    let mut phi = vec![0u32; n + 1];
    let mut mu = vec![0i8; n + 1];
    if n >= 1 {
        phi[1] = 1;
        mu[1] = 1;
    }
    for i in 2..=n {
        let p = spf[i] as usize;
        let m = i / p;
        if m % p == 0 {
            phi[i] = phi[m] * p as u32;
            mu[i] = 0;
        } else {
            phi[i] = phi[m] * (p as u32 - 1);
            mu[i] = -mu[m];
        }
    }
    Ok(SieveTables {
        bound,
        phi,
        mu,
        primes: primes_u32.into_iter().map(u64::from).collect(),
        multiplicative_ops: 0,
    })
}

/// Simple sieve of Eratosthenes for the base primes ≤ limit.
fn small_primes(limit: u64, ops: &mut u64) -> Vec<u64> {
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
            *ops += 1;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn phi_brute(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(n, k) == 1).count() as u64
    }

    fn is_prime_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn phi_first_ten() {
        let t = build_sieves(10).unwrap();
        let got: Vec<u64> = (1..=10).map(|n| t.phi(n).unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
    }

    #[test]
    fn mu_first_twelve() {
        let t = build_sieves(12).unwrap();
        let got: Vec<i64> = (1..=12).map(|n| t.mu(n).unwrap()).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn primes_to_100_match_trial_division() {
        let t = build_sieves(100).unwrap();
        assert_eq!(t.primes().len(), 25);
        let expect: Vec<u64> = (2..=100).filter(|&n| is_prime_trial(n)).collect();
        assert_eq!(t.primes(), expect.as_slice());
    }

    #[test]
    fn prime_and_unit_values() {
        let t = build_sieves(1000).unwrap();
        assert_eq!(t.phi(1).unwrap(), 1);
        assert_eq!(t.mu(1).unwrap(), 1);
        for &p in t.primes() {
            assert_eq!(t.phi(p).unwrap(), p - 1);
            assert_eq!(t.mu(p).unwrap(), -1);
        }
    }

    #[test]
    fn phi_of_conventions() {
        let t = build_sieves(10).unwrap();
        assert_eq!(phi_of(1, &t).unwrap(), 1);
        assert_eq!(phi_of(0, &t).unwrap(), 0);
        assert_eq!(phi_of(10, &t).unwrap(), 4);
        assert!(matches!(
            phi_of(11, &t),
            Err(Error::OutOfSieveRange { arg: 11, bound: 10 })
        ));
    }

    #[test]
    fn divisor_sum_identities_to_1e4() {
        let n = 10_000u64;
        let t = build_sieves(n).unwrap();
        // Σ_{d|n} φ(d) = n and Σ_{d|n} μ(d) = [n = 1], checked by
        // accumulating over multiples instead of factoring each n.
        let mut phi_acc = vec![0u64; n as usize + 1];
        let mut mu_acc = vec![0i64; n as usize + 1];
        for d in 1..=n {
            let (pd, md) = (t.phi(d).unwrap(), t.mu(d).unwrap());
            let mut m = d;
            while m <= n {
                phi_acc[m as usize] += pd;
                mu_acc[m as usize] += md;
                m += d;
            }
        }
        for m in 1..=n {
            assert_eq!(phi_acc[m as usize], m);
            assert_eq!(mu_acc[m as usize], i64::from(m == 1));
        }
    }

    #[test]
    fn mu_zero_iff_square_factor() {
        let t = build_sieves(2000).unwrap();
        for m in 1..=2000u64 {
            let has_square = (2..).take_while(|d| d * d <= m).any(|d| m % (d * d) == 0);
            assert_eq!(t.mu(m).unwrap() == 0, has_square, "m = {m}");
        }
    }

    #[test]
    fn phi_matches_brute_force_to_500() {
        let t = build_sieves(500).unwrap();
        for m in 1..=500 {
            assert_eq!(t.phi(m).unwrap(), phi_brute(m), "phi({m})");
        }
    }

    #[test]
    fn segmented_matches_simple_at_1e6() {
        let n = 1_000_000;
        let seg = build_sieves(n).unwrap();
        let simple = build_sieves_simple(n).unwrap();
        assert_eq!(seg.phi, simple.phi);
        assert_eq!(seg.mu, simple.mu);
        assert_eq!(seg.primes, simple.primes);
        assert_eq!(seg.primes.len(), 78498);
    }

    #[test]
    fn output_independent_of_segment_length() {
        let reference = build_sieves_with_segment(5000, DEFAULT_SEGMENT_LEN).unwrap();
        for seg_len in [16, 17, 100, 4999, 5000, 9999] {
            let t = build_sieves_with_segment(5000, seg_len).unwrap();
            assert_eq!(t.phi, reference.phi, "segment length {seg_len}");
            assert_eq!(t.mu, reference.mu);
            assert_eq!(t.primes, reference.primes);
        }
    }

    #[test]
    fn build_cost_is_subquadratic_in_log() {
        // o(N log N) multiplicative operations; the observed count is about
        // N·(log log N + 1.6).
        let n = 1_000_000u64;
        let t = build_sieves(n).unwrap();
        let budget = (n as f64 * (n as f64).ln()) as u64;
        assert!(
            t.multiplicative_ops() < budget,
            "ops {} vs N log N {}",
            t.multiplicative_ops(),
            budget
        );
    }

    #[test]
    fn bound_errors() {
        assert!(matches!(build_sieves(0), Err(Error::ZeroSieveBound)));
        assert!(matches!(
            build_sieves(MAX_SIEVE_BOUND + 1),
            Err(Error::SieveBoundTooLarge { .. })
        ));
    }

    #[test]
    fn tiny_bounds() {
        let t = build_sieves(1).unwrap();
        assert_eq!(t.phi(1).unwrap(), 1);
        assert!(t.primes().is_empty());
        let t = build_sieves(2).unwrap();
        assert_eq!(t.primes(), &[2]);
    }
}
