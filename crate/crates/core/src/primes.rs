//! Integer factorisation for group orders.

use serde::Serialize;

/// Ascending prime factorisation `[(p, e), ...]` of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSignature {
    pub factors: Vec<(u64, u32)>,
}

impl PrimeSignature {
    /// The set of prime divisors.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    /// Exponent of `p` in the factorisation (zero if absent).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

pub fn prime_signature(mut n: u64) -> PrimeSignature {
    assert!(n >= 1, "prime_signature of 0");
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    PrimeSignature { factors }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_signature(n).factors == [(n, 1)]
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match prime_signature(n).factors.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}
