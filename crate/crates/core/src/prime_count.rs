//! π(y) at every distinct quotient y = ⌊x/n⌋, without sieving to x.
//!
//! Uses the Legendre-sum dynamic program over the ≤ 2⌈√x⌉ distinct quotient
//! values: start from S(v) = v − 1 (every integer in [2, v] counted as a
//! prime candidate) and, for each prime p ≤ √x in increasing order, remove
//! the composites whose smallest prime factor is p:
//!
//! ```text
//! S(v) ← S(v) − (S(v/p) − S(p−1))        for all quotient points v ≥ p².
//! ```
//!
//! After the last prime, S(v) = π(v) at every quotient point. Time
//! O(x^{3/4}), space O(√x). Counts stay exact in u64 for the supported
//! range x ≤ 10^12 (working range 10^9 is exercised in tests; the ceiling
//! is a documented limit, not a tested one).

use crate::{isqrt, Error};

/// Largest x accepted by [`build_prime_counter`].
pub const MAX_COUNTER_X: u64 = 1_000_000_000_000;

/// π at all distinct quotients ⌊x/n⌋. Immutable once built.
pub struct PrimeCounter {
    x: u64,
    rt: u64,
    /// small[v] = π(v) for 0 ≤ v ≤ rt
    small: Vec<u64>,
    /// large[j] = π(⌊x/j⌋) for 1 ≤ j ≤ rt
    large: Vec<u64>,
}

/// Build the counter for a given x.
pub fn build_prime_counter(x: u64) -> Result<PrimeCounter, Error> {
    if x == 0 || x > MAX_COUNTER_X {
        return Err(Error::CounterRange {
            x,
            max: MAX_COUNTER_X,
        });
    }
    let rt = isqrt(x);
    let mut small: Vec<u64> = (0..=rt).map(|v| v.saturating_sub(1)).collect();
    let mut large: Vec<u64> = (0..=rt).map(|j| if j == 0 { 0 } else { x / j - 1 }).collect();

    for p in 2..=rt {
        if small[p as usize] == small[p as usize - 1] {
            continue; // p composite
        }
        let sp = small[p as usize - 1]; // π(p − 1)
        let p2 = p * p;
        for j in 1..=rt {
            let v = x / j;
            if v < p2 {
                break;
            }
            let t = v / p; // = ⌊x/(jp)⌋
            let pi_t = if t <= rt {
                small[t as usize]
            } else {
                large[(j * p) as usize]
            };
            large[j as usize] -= pi_t - sp;
        }
        for v in (p2..=rt).rev() {
            small[v as usize] -= small[(v / p) as usize] - sp;
        }
    }

    Ok(PrimeCounter { x, rt, small, large })
}

impl PrimeCounter {
    pub fn x(&self) -> u64 {
        self.x
    }

    /// Number of stored quotient points; always ≤ 2⌈√x⌉.
    pub fn distinct_quotients(&self) -> usize {
        let mut seen = 0usize;
        let mut last = u64::MAX;
        for j in 1..=self.rt {
            let v = self.x / j;
            if v != last {
                seen += 1;
                last = v;
            }
        }
        for v in (1..=self.rt).rev() {
            if v != last {
                seen += 1;
                last = v;
            }
        }
        seen
    }

    /// π(⌊x/n⌋); returns 0 for n > x.
    pub fn pi_at_quotient(&self, n: u64) -> u64 {
        if n > self.x {
            return 0;
        }
        self.pi_at_value(self.x / n)
    }

    /// π(v) for any v ≤ √x or any quotient point v = ⌊x/n⌋.
    ///
    /// For other v the result would count primes up to the enclosing
    /// quotient point, so callers must stay on the stored grid.
    pub fn pi_at_value(&self, v: u64) -> u64 {
        if v <= self.rt {
            self.small[v as usize]
        } else {
            self.large[(self.x / v) as usize]
        }
    }

    /// π(x) itself.
    pub fn pi_x(&self) -> u64 {
        self.pi_at_quotient(1)
    }
}
