//! Möbius function of the subgroup lattice and predictions for `S_n`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::bounds::{g_poly, theorem1_check, BoundCheckResult, ShapeReading};
use crate::degree::{sd, ExactRatio};
use crate::error::Result;
use crate::lattice::{MaxConvention, SubgroupLattice};
use crate::primes::{is_prime, prime_power};

/// `mu(K, G)` for every node `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoebiusTable {
    pub values: Vec<i64>,
}

impl MoebiusTable {
    /// `mu(1, G)`.
    pub fn bottom(&self) -> i64 {
        self.values[0]
    }

    pub fn get(&self, node: usize) -> i64 {
        self.values[node]
    }
}

/// Top-down recursion `mu(G, G) = 1`, `mu(K, G) = -sum_{K < J <= G} mu(J, G)`.
pub fn moebius_table(l: &SubgroupLattice) -> MoebiusTable {
    let len = l.len();
    let mut values = vec![0i64; len];
    for k in (0..len).rev() {
        values[k] = if k == l.top() {
            1
        } else {
            -l.above(k).iter().filter(|&j| j != k).map(|j| values[j]).sum::<i64>()
        };
    }
    MoebiusTable { values }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `mu(1, S_n)` where a closed form is known: `n` prime, `n = 2p` with `p`
/// an odd prime, or `n` a power of two. `None` elsewhere.
pub fn predicted_mu_symmetric(n: u64) -> Option<BigInt> {
    if n < 2 {
        return None;
    }
    let f = factorial(n);
    if is_prime(n) {
        let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
        return Some(sign * f / 2);
    }
    if let Some((2, _)) = prime_power(n) {
        return Some(-f / 2);
    }
    if n.is_multiple_of(2) && n / 2 > 2 && is_prime(n / 2) {
        let p = n / 2;
        return Some(if is_prime(n - 1) && p % 4 == 3 {
            -f
        } else if n == 22 {
            f / 2
        } else {
            -f / 2
        });
    }
    None
}

/// The conjectured general value `(-1)^(n-1) |Aut(S_n)| / 2`. Conjectural,
/// and not an integer at `n = 2`.
pub fn conjectured_mu_symmetric(n: u64) -> ExactRatio {
    let aut = match n {
        2 => BigInt::one(),
        6 => BigInt::from(1440),
        _ => factorial(n),
    };
    let sign = if n % 2 == 1 { 1 } else { -1 };
    ExactRatio::new(sign * aut, 2)
}

/// `sd(G) >= g / (2 mu(1, G)^2)` for groups meeting the rank-two
/// centraliser hypotheses and with `|L(G)| = mu(1, G)`.
pub fn corollary_mu_bound(
    l: &SubgroupLattice,
    convention: MaxConvention,
    reading: ShapeReading,
) -> Result<BoundCheckResult> {
    let mu = moebius_table(l).bottom();
    let t1 = theorem1_check(l, convention, reading)?;
    let mut res = BoundCheckResult {
        claim: "corollary_mu".into(),
        convention: None,
        hypothesis_satisfied: true,
        reasons: t1.reasons.clone(),
        bound: None,
        bound_squared: None,
        actual: None,
        holds: None,
        slack: None,
    };
    if !t1.hypotheses {
        res.hypothesis_satisfied = false;
    }
    if l.len() as i64 != mu {
        res.hypothesis_satisfied = false;
        res.reasons.push(format!("|L(G)| = {} differs from mu(1, G) = {mu}", l.len()));
    }
    if let (Some(shape), true) = (t1.shape, mu != 0) {
        let bound = g_poly(&shape).derivation / ExactRatio::integer(2 * mu * mu);
        let actual = sd(l);
        res.holds = Some(actual >= bound);
        res.slack = Some(&actual - &bound);
        res.bound = Some(bound);
        res.actual = Some(actual);
    }
    Ok(res)
}
