//! Catalog constructors and the group-descriptor grammar.
//!
//! ```text
//! C<n>            cyclic of order n
//! S<n> / A<n>     symmetric / alternating on n points
//! D<n>            dihedral of order 2n
//! Q8              quaternion group
//! Z:<k1>,<k2>...  abelian Z_k1 x Z_k2 x ...
//! <a>x<b>x...     direct product of the above
//! ```

use crate::error::{Error, Result};
use crate::group::{direct_product, permutation_group, FiniteGroup};

pub fn make_named(spec: &str, max_order: usize) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::UnknownSpec(spec.into()));
    }
    let parts: Vec<&str> = spec.split('x').collect();
    let mut order: u128 = 1;
    for p in &parts {
        order = order.saturating_mul(factor_order(p)?);
    }
    if order > max_order as u128 {
        return Err(Error::OrderCap { order, cap: max_order });
    }
    let mut acc = build_factor(parts[0])?;
    for p in &parts[1..] {
        acc = direct_product(&acc, &build_factor(p)?, max_order)?;
    }
    Ok(acc.with_name(spec))
}

fn parse_n(token: &str, rest: &str) -> Result<usize> {
    rest.parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::UnknownSpec(token.into()))
}

fn abelian_factors(token: &str, rest: &str) -> Result<Vec<usize>> {
    let ks = rest
        .split(',')
        .map(|k| parse_n(token, k.trim()))
        .collect::<Result<Vec<_>>>()?;
    if ks.is_empty() {
        return Err(Error::UnknownSpec(token.into()));
    }
    Ok(ks)
}

/// Order of one factor without building it.
fn factor_order(token: &str) -> Result<u128> {
    if token == "Q8" {
        return Ok(8);
    }
    if let Some(rest) = token.strip_prefix("Z:") {
        return Ok(abelian_factors(token, rest)?
            .iter()
            .fold(1u128, |a, &k| a.saturating_mul(k as u128)));
    }
    let (kind, rest) = token.split_at(token.chars().next().map_or(0, |c| c.len_utf8()));
    let n = parse_n(token, rest)? as u128;
    let fact = |n: u128| (1..=n).fold(1u128, |a, k| a.saturating_mul(k));
    match kind {
        "C" => Ok(n),
        "D" => Ok(2 * n),
        "S" => Ok(fact(n)),
        "A" => Ok(if n < 2 { 1 } else { fact(n) / 2 }),
        _ => Err(Error::UnknownSpec(token.into())),
    }
}

fn build_factor(token: &str) -> Result<FiniteGroup> {
    if token == "Q8" {
        return Ok(quaternion());
    }
    if let Some(rest) = token.strip_prefix("Z:") {
        let ks = abelian_factors(token, rest)?;
        let mut acc = cyclic(ks[0]);
        for &k in &ks[1..] {
            acc = direct_product(&acc, &cyclic(k), usize::MAX)?;
        }
        return Ok(acc.with_name(token));
    }
    let (kind, rest) = token.split_at(1.min(token.len()));
    let n = parse_n(token, rest)?;
    match kind {
        "C" => Ok(cyclic(n)),
        "D" => Ok(dihedral(n)),
        "S" => Ok(symmetric(n)),
        "A" => Ok(alternating(n)),
        _ => Err(Error::UnknownSpec(token.into())),
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FiniteGroup::from_raw(format!("C{n}"), n, table, None)
}

/// Dihedral group of order `2n`; element `r^i s^a` is stored at `i + n a`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, a) = (x % n, x / n);
        for y in 0..order {
            let (k, b) = (y % n, y / n);
            let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            table.push(rot + n * ((a + b) % 2));
        }
    }
    let labels = (0..order)
        .map(|x| match (x % n, x / n) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("r^{i}"),
            (0, _) => "s".to_string(),
            (i, _) => format!("r^{i}s"),
        })
        .collect();
    FiniteGroup::from_raw(format!("D{n}"), order, table, Some(labels))
}

/// Quaternion group; index `2u + s` encodes sign `s` and unit `u` of 1, i, j, k.
pub fn quaternion() -> FiniteGroup {
    // unit products as (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (s, u) = UNIT[x / 2][y / 2];
            table.push(2 * u + (s + x % 2 + y % 2) % 2);
        }
    }
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    FiniteGroup::from_raw("Q8", 8, table, Some(labels))
}

/// All permutations of `0..n` in lexicographic order (identity first).
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for s in 0..p.len() {
        let mut k = s;
        let mut len = 0;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

pub fn symmetric(n: usize) -> FiniteGroup {
    permutation_group(format!("S{n}"), all_permutations(n))
}

pub fn alternating(n: usize) -> FiniteGroup {
    let even = all_permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(format!("A{n}"), even)
}
