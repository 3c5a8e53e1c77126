//! Slow, direct reference implementations. Only the multiplication of the
//! group under test is used; no library lattice or degree code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use subgroup_degree::FiniteGroup;

pub type Sub = BTreeSet<usize>;

pub fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Closure of `seed` under multiplication (identity is index 0).
pub fn closure(g: &FiniteGroup, seed: &Sub) -> Sub {
    let mut out: Sub = seed.clone();
    out.insert(0);
    let gens: Vec<usize> = out.iter().copied().collect();
    let mut queue: Vec<usize> = gens.clone();
    while let Some(x) = queue.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if out.insert(y) {
                queue.push(y);
            }
        }
    }
    out
}

/// All subgroups, by repeatedly adjoining one element to known subgroups.
pub fn subgroups(g: &FiniteGroup) -> Vec<Sub> {
    let mut seen: HashSet<Sub> = HashSet::new();
    let trivial: Sub = [0].into_iter().collect();
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(s) = frontier.pop() {
        for x in 0..g.order() {
            if s.contains(&x) {
                continue;
            }
            let mut seed = s.clone();
            seed.insert(x);
            let t = closure(g, &seed);
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut v: Vec<Sub> = seen.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

/// Subgroups by testing every subset containing the identity. |G| <= 16.
pub fn subgroups_power_set(g: &FiniteGroup) -> Vec<Sub> {
    let n = g.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let s: Sub = std::iter::once(0)
            .chain((1..n).filter(|&i| mask & (1 << (i - 1)) != 0))
            .collect();
        if s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.mul(a, b)))) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn inverse(g: &FiniteGroup, x: usize) -> usize {
    (0..g.order()).find(|&y| g.mul(x, y) == 0).unwrap()
}

/// `h` normal in `k`, both given as element sets.
pub fn normal_in(g: &FiniteGroup, h: &Sub, k: &Sub) -> bool {
    k.iter().all(|&x| {
        let xi = inverse(g, x);
        h.iter().all(|&y| h.contains(&g.mul(g.mul(x, y), xi)))
    })
}

pub fn whole(g: &FiniteGroup) -> Sub {
    (0..g.order()).collect()
}

pub fn normal(g: &FiniteGroup, subs: &[Sub]) -> Vec<Sub> {
    let all = whole(g);
    subs.iter().filter(|h| normal_in(g, h, &all)).cloned().collect()
}

/// Subnormal: `G` is reachable from `H` along "normal in" edges.
pub fn subnormal(g: &FiniteGroup, subs: &[Sub]) -> Vec<Sub> {
    let all = whole(g);
    let mut memo: HashMap<Sub, bool> = HashMap::new();
    fn reach(g: &FiniteGroup, h: &Sub, subs: &[Sub], all: &Sub, memo: &mut HashMap<Sub, bool>) -> bool {
        if h == all {
            return true;
        }
        if let Some(&r) = memo.get(h) {
            return r;
        }
        let r = subs
            .iter()
            .filter(|k| k.len() > h.len() && h.is_subset(k) && normal_in(g, h, k))
            .any(|k| reach(g, k, subs, all, memo));
        memo.insert(h.clone(), r);
        r
    }
    subs.iter().filter(|h| reach(g, h, subs, &all, &mut memo)).cloned().collect()
}

/// Maximal subgroups; with `closed`, also the trivial subgroup and `G`.
pub fn maximal(g: &FiniteGroup, subs: &[Sub], closed: bool) -> Vec<Sub> {
    let n = g.order();
    let mut out: Vec<Sub> = subs
        .iter()
        .filter(|h| h.len() < n && !subs.iter().any(|k| k.len() < n && k.len() > h.len() && h.is_subset(k)))
        .cloned()
        .collect();
    if closed {
        for s in [subs[0].clone(), whole(g)] {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

/// `XY` is a subgroup, checked by closure of the product set.
pub fn permutes(g: &FiniteGroup, x: &Sub, y: &Sub) -> bool {
    let p: Sub = x.iter().flat_map(|&a| y.iter().map(move |&b| g.mul(a, b))).collect();
    p.iter().all(|&a| p.iter().all(|&b| p.contains(&g.mul(a, b))))
}

pub fn permuting_pairs(g: &FiniteGroup, s: &[Sub], t: &[Sub]) -> u64 {
    s.iter()
        .map(|x| t.iter().filter(|y| permutes(g, x, y)).count() as u64)
        .sum()
}

pub fn sd(g: &FiniteGroup) -> BigRational {
    let l = subgroups(g);
    let n = l.len() as u64;
    ratio(permuting_pairs(g, &l, &l), n * n)
}

pub fn spd(g: &FiniteGroup, closed: bool) -> BigRational {
    let l = subgroups(g);
    let sn = subnormal(g, &l);
    let m = maximal(g, &l, closed);
    ratio(permuting_pairs(g, &sn, &m), (sn.len() * m.len()) as u64)
}

pub fn d(g: &FiniteGroup) -> BigRational {
    let n = g.order() as u64;
    let c = (0..g.order())
        .flat_map(|a| (0..g.order()).map(move |b| (a, b)))
        .filter(|&(a, b)| g.mul(a, b) == g.mul(b, a))
        .count() as u64;
    ratio(c, n * n)
}

/// `mu(1, G)` by the bottom-up recursion `mu(1, H) = -sum_{K < H} mu(1, K)`.
pub fn mu_bottom(subs: &[Sub]) -> i64 {
    let mut mu: Vec<i64> = Vec::with_capacity(subs.len());
    for (i, h) in subs.iter().enumerate() {
        let v = if i == 0 {
            1
        } else {
            -(0..i).filter(|&k| subs[k].len() < h.len() && subs[k].is_subset(h)).map(|k| mu[k]).sum::<i64>()
        };
        mu.push(v);
    }
    *mu.last().unwrap()
}

/// `Z_m x Z_n` written out as an additive table.
pub fn abelian2(m: usize, n: usize) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = (0..m * n)
        .map(|x| {
            (0..m * n)
                .map(|y| ((x / n + y / n) % m) * n + (x % n + y % n) % n)
                .collect()
        })
        .collect();
    FiniteGroup::from_table(format!("Z{m}xZ{n}"), &rows).unwrap()
}

/// Number of subgroups of a two-generated abelian group: closures of all pairs.
pub fn rank2_subgroup_count(g: &FiniteGroup) -> usize {
    let mut seen: HashSet<Sub> = HashSet::new();
    for a in 0..g.order() {
        for b in a..g.order() {
            seen.insert(closure(g, &[a, b].into_iter().collect()));
        }
    }
    seen.len()
}

pub fn is_one(r: &BigRational) -> bool {
    r.is_one()
}

pub fn is_zero(r: &BigRational) -> bool {
    r.is_zero()
}

/// Direct product table, pair `(a, b)` at index `a * |B| + b`.
pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (m, n) = (a.order(), b.order());
    let rows: Vec<Vec<usize>> = (0..m * n)
        .map(|x| (0..m * n).map(|y| a.mul(x / n, y / n) * n + b.mul(x % n, y % n)).collect())
        .collect();
    FiniteGroup::from_table(format!("{}x{}", a.name(), b.name()), &rows).unwrap()
}

/// Subgroups of `g` contained in `n`.
pub fn below(subs: &[Sub], n: &Sub) -> Vec<Sub> {
    subs.iter().filter(|s| s.is_subset(n)).cloned().collect()
}

/// Subgroups permuting with every member of `s`.
pub fn perp(g: &FiniteGroup, subs: &[Sub], s: &[Sub]) -> Vec<Sub> {
    subs.iter().filter(|x| s.iter().all(|y| permutes(g, x, y))).cloned().collect()
}
