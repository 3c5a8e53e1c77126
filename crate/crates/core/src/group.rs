//! Finite groups stored as multiplication tables.
//!
//! Element `0` is always the identity. All subgroup algorithms work on
//! [`ElementSet`]s over the element indices of one [`FiniteGroup`].

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::primes::{prime_power, prime_signature};

/// Default cap on group orders accepted by constructors.
pub const DEFAULT_MAX_ORDER: usize = 720;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// Abelian / nilpotent / solvable flags of a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
}

impl FiniteGroup {
    /// Builds a group from a table already known to satisfy the group axioms
    /// with identity at index 0.
    pub(crate) fn from_raw(
        name: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if table[i * order + j] == 0 {
                    inverse[i] = j;
                    break;
                }
            }
        }
        FiniteGroup {
            name: name.into(),
            order,
            table,
            inverse,
            labels,
        }
    }

    /// Validates an arbitrary Cayley table and relabels its identity to 0.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            if !is_permutation(row) {
                return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
            }
        }
        for j in 0..n {
            let col: Vec<usize> = rows.iter().map(|r| r[j]).collect();
            if !is_permutation(&col) {
                return Err(Error::InvalidTable(format!("column {j} is not a permutation")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(rows[i][j]);
            }
        }
        let g = FiniteGroup::from_raw(name, n, table, None);
        g.validate()?;
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `x^{-1} h x`.
    #[inline]
    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(self.inverse[x], h), x)
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn pow(&self, x: usize, mut k: usize) -> usize {
        let mut acc = 0;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet::singleton(self.order, 0)
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Exhaustive check of the group axioms.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(Error::InvalidTable(format!("0 is not an identity at {i}")));
            }
            if self.inverse[i] >= n || self.mul(i, self.inverse[i]) != 0 {
                return Err(Error::InvalidTable(format!("element {i} has no inverse")));
            }
        }
        for i in 0..n {
            let row = &self.table[i * n..(i + 1) * n];
            if !is_permutation(row) {
                return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
            }
        }
        for j in 0..n {
            let col: Vec<usize> = (0..n).map(|i| self.mul(i, j)).collect();
            if !is_permutation(&col) {
                return Err(Error::InvalidTable(format!("column {j} is not a permutation")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(0)
            && s.iter().all(|x| {
                s.contains(self.inverse[x]) && s.iter().all(|y| s.contains(self.mul(x, y)))
            })
    }

    /// Adjoins `gens` to the subgroup `h`: returns `<h, gens>`.
    ///
    /// The result is grown as a union of right cosets `h g`, so only
    /// coset representatives are multiplied by the generators.
    pub fn extend_subgroup(&self, h: &ElementSet, gens: &[usize]) -> ElementSet {
        let h_elems = h.to_vec();
        let mut elems = h.clone();
        let mut reps = vec![0usize];
        let mut k = 0;
        while k < reps.len() {
            let r = reps[k];
            k += 1;
            for &s in gens {
                let y = self.mul(r, s);
                if !elems.contains(y) {
                    reps.push(y);
                    for &x in &h_elems {
                        elems.insert(self.mul(x, y));
                    }
                }
            }
        }
        elems
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> ElementSet {
        self.closure_with_generators(gens.iter().copied()).0
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &ElementSet) -> ElementSet {
        self.closure_with_generators(seed.iter()).0
    }

    /// Closure together with an irredundant-by-construction generating list.
    pub fn closure_with_generators<I>(&self, seed: I) -> (ElementSet, Vec<usize>)
    where
        I: IntoIterator<Item = usize>,
    {
        let mut h = self.trivial_subgroup();
        let mut gens = Vec::new();
        for x in seed {
            if !h.contains(x) {
                gens.push(x);
                h = self.extend_subgroup(&h, &gens);
            }
        }
        (h, gens)
    }

    /// Product set `XY = {xy | x in X, y in Y}`.
    pub fn product_set(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        let ys = y.to_vec();
        for a in x {
            let row = &self.table[a * self.order..(a + 1) * self.order];
            for &b in &ys {
                out.insert(row[b]);
            }
        }
        out
    }

    pub fn centralizer(&self, x: usize) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&g| self.mul(g, x) == self.mul(x, g)),
        )
    }

    pub fn centralizer_of_set(&self, s: &ElementSet) -> ElementSet {
        let mut c = self.whole();
        for x in s {
            c.intersect_with(&self.centralizer(x));
        }
        c
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer_of_set(&self.whole())
    }

    /// Normaliser of `h` inside the whole group.
    pub fn normalizer(&self, h: &ElementSet) -> ElementSet {
        let gens = self.closure_with_generators(h.iter()).1;
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| gens.iter().all(|&g| h.contains(self.conjugate(g, x)))),
        )
    }

    /// Whether subgroup `h` is normal in subgroup `k` (assumes `h <= k`).
    pub fn is_normal_in(&self, h: &ElementSet, k: &ElementSet) -> bool {
        let hg = self.closure_with_generators(h.iter()).1;
        let kg = self.closure_with_generators(k.iter()).1;
        kg.iter()
            .all(|&x| hg.iter().all(|&g| h.contains(self.conjugate(g, x))))
    }

    pub fn is_normal(&self, h: &ElementSet) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// Smallest normal subgroup of `k` containing `h`.
    pub fn normal_closure(&self, h: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
        if !h.is_subset(k) {
            return Err(Error::NotSubset);
        }
        let kgens = self.closure_with_generators(k.iter()).1;
        let (mut n, mut ngens) = self.closure_with_generators(h.iter());
        let mut i = 0;
        // every conjugate of a generator by a generator of k must land in n
        while i < ngens.len() {
            let g = ngens[i];
            for &x in &kgens {
                let c = self.conjugate(g, x);
                if !n.contains(c) {
                    ngens.push(c);
                    n = self.extend_subgroup(&n, &ngens);
                }
            }
            i += 1;
        }
        Ok(n)
    }

    /// `[A, B]`, generated by all `a^{-1} b^{-1} a b`.
    pub fn commutator_subgroup(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let bs = b.to_vec();
        let mut seed = self.empty_set();
        for x in a {
            for &y in &bs {
                let c = self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y));
                seed.insert(c);
            }
        }
        self.closure(&seed)
    }

    pub fn derived_series(&self) -> Vec<ElementSet> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn lower_central_series(&self) -> Vec<ElementSet> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, &whole);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().count() == 1
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().count() == 1
    }

    pub fn structural_predicates(&self) -> StructuralFlags {
        StructuralFlags {
            is_abelian: self.is_abelian(),
            is_nilpotent: self.is_nilpotent(),
            is_solvable: self.is_solvable(),
        }
    }

    /// Some Sylow `p`-subgroup, grown one `p`-element at a time inside
    /// the normaliser of the current `p`-subgroup.
    pub fn sylow_subgroup(&self, p: u64) -> ElementSet {
        let target = (p as usize).pow(prime_signature(self.order as u64).exponent(p));
        let mut sub = self.trivial_subgroup();
        while sub.count() < target {
            let norm = self.normalizer(&sub);
            let x = norm
                .iter()
                .find(|&x| !sub.contains(x) && self.has_p_power_order_mod(x, p, &sub))
                .expect("normaliser of a non-Sylow p-subgroup contains a p-element outside it");
            let gens: Vec<usize> = self
                .closure_with_generators(sub.iter())
                .1
                .into_iter()
                .chain([x])
                .collect();
            sub = self.generate(&gens);
        }
        sub
    }

    fn has_p_power_order_mod(&self, x: usize, p: u64, sub: &ElementSet) -> bool {
        let mut y = x;
        for _ in 0..=self.order {
            if sub.contains(y) {
                return true;
            }
            y = self.pow(y, p as usize);
        }
        false
    }

    /// Largest normal `p`-subgroup: the intersection of the conjugates of a
    /// Sylow `p`-subgroup.
    pub fn p_core(&self, p: u64) -> ElementSet {
        let sylow = self.sylow_subgroup(p);
        let mut core = sylow.clone();
        for x in 0..self.order {
            let conj = ElementSet::from_indices(self.order, sylow.iter().map(|s| self.conjugate(s, x)));
            core.intersect_with(&conj);
        }
        core
    }

    /// Product of the `p`-cores over the prime divisors of the order.
    pub fn fitting_subgroup(&self) -> ElementSet {
        let sig = prime_signature(self.order as u64);
        let mut seed = self.trivial_subgroup();
        for p in sig.primes() {
            seed.union_with(&self.p_core(p));
        }
        self.closure(&seed)
    }

    /// Materialises subgroup `s` as a standalone group. Returns the group and
    /// the embedding `new index -> old index` (ascending, identity first).
    pub fn subgroup_as_group(&self, s: &ElementSet, name: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::NotSubgroup(format!("{:?}", s)));
        }
        let elems = s.to_vec();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                table.push(pos[self.mul(a, b)]);
            }
        }
        let labels = self.labels.as_ref().map(|l| elems.iter().map(|&e| l[e].clone()).collect());
        Ok((FiniteGroup::from_raw(name, n, table, labels), elems))
    }

    /// Quotient by a normal subgroup. Returns `G/N` and the map
    /// `element -> coset index`; cosets are numbered by first appearance.
    pub fn quotient(&self, n: &ElementSet, name: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(n) {
            return Err(Error::NotSubgroup(format!("{:?}", n)));
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal(format!("{:?}", n)));
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        let ns = n.to_vec();
        for g in 0..self.order {
            if coset[g] == usize::MAX {
                let c = reps.len();
                reps.push(g);
                for &x in &ns {
                    coset[self.mul(g, x)] = c;
                }
            }
        }
        let q = reps.len();
        let mut table = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                table.push(coset[self.mul(a, b)]);
            }
        }
        Ok((FiniteGroup::from_raw(name, q, table, None), coset))
    }

    /// If this group is an abelian `p`-group, returns `p` and its invariant
    /// exponents in ascending order (`Z_{p^a1} x ... x Z_{p^ak}`).
    pub fn abelian_p_invariants(&self) -> Option<(u64, Vec<u32>)> {
        if self.order == 1 || !self.is_abelian() {
            return None;
        }
        let (p, total) = prime_power(self.order as u64)?;
        // omega[k] = log_p #{x : x^{p^k} = 1}
        let orders: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        let mut omega = vec![0u32];
        let mut k = 1;
        while *omega.last().unwrap() < total {
            let bound = (p as usize).pow(k);
            let count = orders.iter().filter(|&&o| bound % o == 0).count();
            omega.push(prime_power(count as u64).map_or(0, |(_, e)| e));
            k += 1;
        }
        // number of cyclic factors of exponent >= k is omega[k] - omega[k-1]
        let at_least: Vec<u32> = omega.windows(2).map(|w| w[1] - w[0]).collect();
        let mut exps = Vec::new();
        for (i, &c) in at_least.iter().enumerate() {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            for _ in 0..(c - next) {
                exps.push(i as u32 + 1);
            }
        }
        exps.sort_unstable();
        Some((p, exps))
    }

    /// Canonical byte encoding of the table, used as a cache key.
    pub fn table_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.table.len() * 4);
        out.extend_from_slice(&(self.order as u64).to_le_bytes());
        for &x in &self.table {
            out.extend_from_slice(&(x as u32).to_le_bytes());
        }
        out
    }
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// `G x H` with element `(a, b)` stored at index `a * |H| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    let order = a.order * b.order;
    if order > max_order {
        return Err(Error::OrderCap { order: order as u128, cap: max_order });
    }
    let nb = b.order;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..order {
            let (ya, yb) = (y / nb, y % nb);
            table.push(a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    }
    let labels = match (&a.labels, &b.labels) {
        (None, None) => None,
        _ => Some(
            (0..order)
                .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
                .collect(),
        ),
    };
    Ok(FiniteGroup::from_raw(
        format!("{}x{}", a.name, b.name),
        order,
        table,
        labels,
    ))
}

/// Closure of a set of permutations of `0..degree` (given as image arrays).
///
/// Elements are numbered in breadth-first order from the identity, and
/// `(x * y)[k] = x[y[k]]`.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>], max_order: usize) -> Result<FiniteGroup> {
    for (index, g) in generators.iter().enumerate() {
        if g.len() != degree || !is_permutation(g) {
            return Err(Error::NotBijective { index, degree });
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let prod: Vec<usize> = (0..degree).map(|k| elems[i][g[k]]).collect();
            if !index.contains_key(&prod) {
                if elems.len() >= max_order {
                    return Err(Error::OrderCap { order: elems.len() as u128 + 1, cap: max_order });
                }
                index.insert(prod.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(prod);
            }
        }
    }
    Ok(permutation_group(format!("Perm({degree})"), elems))
}

/// Builds the table of an already closed list of permutations whose first
/// entry is the identity.
pub(crate) fn permutation_group(name: String, elems: Vec<Vec<usize>>) -> FiniteGroup {
    let n = elems.len();
    let index: HashMap<&[usize], usize> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let degree = elems[0].len();
    let mut table = Vec::with_capacity(n * n);
    let mut buf = vec![0; degree];
    for x in &elems {
        for y in &elems {
            for k in 0..degree {
                buf[k] = x[y[k]];
            }
            table.push(index[buf.as_slice()]);
        }
    }
    let labels = elems.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_raw(name, n, table, Some(labels))
}

pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut k = p[start];
        while k != start {
            seen[k] = true;
            cyc.push(k);
            k = p[k];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::make_named;

    fn s3() -> FiniteGroup {
        make_named("S3", DEFAULT_MAX_ORDER).unwrap()
    }

    fn three_cycle(g: &FiniteGroup) -> usize {
        (0..g.order()).find(|&x| g.element_order(x) == 3).unwrap()
    }

    fn involutions(g: &FiniteGroup) -> Vec<usize> {
        (0..g.order()).filter(|&x| g.element_order(x) == 2).collect()
    }

    #[test]
    fn closure_examples() {
        let g = s3();
        assert_eq!(g.closure(&g.trivial_subgroup()).count(), 1);
        let a = three_cycle(&g);
        let c = g.closure(&ElementSet::singleton(6, a));
        assert_eq!(c.to_vec(), {
            let mut v = vec![0, a, g.mul(a, a)];
            v.sort();
            v
        });
        let t = involutions(&g);
        assert_eq!(g.closure(&ElementSet::from_indices(6, [t[0], t[1]])).count(), 6);
    }

    #[test]
    fn centralizers_in_s3() {
        let g = s3();
        assert_eq!(g.centralizer(0), g.whole());
        let a = three_cycle(&g);
        let ca = g.centralizer(a);
        assert_eq!(ca.count(), 3);
        assert_eq!(g.centralizer_of_set(&ca), ca);
        assert_eq!(g.centralizer_of_set(&g.trivial_subgroup()), g.whole());
        let z = make_named("Z:2,4", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(z.centralizer_of_set(&z.whole()), z.whole());
        assert_eq!(z.centralizer(5), z.whole());
    }

    #[test]
    fn normal_closure_examples() {
        let g = s3();
        let b = g.generate(&[involutions(&g)[0]]);
        let a3 = g.generate(&[three_cycle(&g)]);
        let whole = g.whole();
        assert_eq!(g.normal_closure(&b, &whole).unwrap(), whole);
        assert_eq!(g.normal_closure(&a3, &whole).unwrap(), a3);
        assert_eq!(g.normal_closure(&b, &b).unwrap(), b);
        assert!(matches!(g.normal_closure(&whole, &b), Err(Error::NotSubset)));
    }

    #[test]
    fn predicates() {
        let f = |s: &str| make_named(s, DEFAULT_MAX_ORDER).unwrap().structural_predicates();
        let t = |a, n, s| StructuralFlags { is_abelian: a, is_nilpotent: n, is_solvable: s };
        assert_eq!(f("C12"), t(true, true, true));
        assert_eq!(f("C1"), t(true, true, true));
        assert_eq!(f("S3"), t(false, false, true));
        assert_eq!(f("Q8"), t(false, true, true));
        assert_eq!(f("A4"), t(false, false, true));
        assert_eq!(f("A5"), t(false, false, false));
    }

    #[test]
    fn fitting_examples() {
        let g = s3();
        let fit = g.fitting_subgroup();
        assert_eq!(fit, g.generate(&[three_cycle(&g)]));
        let a4 = make_named("A4", DEFAULT_MAX_ORDER).unwrap();
        let v4 = a4.fitting_subgroup();
        assert_eq!(v4.count(), 4);
        assert!(v4.iter().all(|x| a4.element_order(x) <= 2));
        let q8 = make_named("Q8", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(q8.fitting_subgroup(), q8.whole());
        let s4 = make_named("S4", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(s4.fitting_subgroup().count(), 4);
    }

    #[test]
    fn sylow_orders() {
        let s4 = make_named("S4", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(s4.sylow_subgroup(2).count(), 8);
        assert_eq!(s4.sylow_subgroup(3).count(), 3);
        assert_eq!(s4.p_core(2).count(), 4);
        assert_eq!(s4.p_core(3).count(), 1);
    }

    #[test]
    fn permutation_closures() {
        let g = from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], 720).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let v = from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 720).unwrap();
        assert_eq!(v.order(), 4);
        assert!((0..4).all(|x| v.element_order(x) <= 2));
        let t = from_permutations(1, &[], 720).unwrap();
        assert_eq!(t.order(), 1);
        assert!(matches!(
            from_permutations(3, &[vec![0, 0, 1]], 720),
            Err(Error::NotBijective { index: 0, .. })
        ));
        assert!(matches!(
            from_permutations(6, &[vec![1, 2, 3, 4, 5, 0], vec![1, 0, 2, 3, 4, 5]], 100),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn products() {
        let c1 = make_named("C1", 720).unwrap();
        let g = s3();
        assert_eq!(direct_product(&c1, &g, 720).unwrap().order(), 6);
        let c5 = make_named("C5", 720).unwrap();
        let p = direct_product(&g, &c5, 720).unwrap();
        assert_eq!(p.order(), 30);
        p.validate().unwrap();
        assert!(direct_product(&p, &p, 720).is_err());
    }

    #[test]
    fn quotient_and_reroot() {
        let a4 = make_named("A4", 720).unwrap();
        let v4 = a4.fitting_subgroup();
        let (q, coset) = a4.quotient(&v4, "A4/V4").unwrap();
        assert_eq!(q.order(), 3);
        q.validate().unwrap();
        assert_eq!(coset[0], 0);
        let (n, emb) = a4.subgroup_as_group(&v4, "V4").unwrap();
        n.validate().unwrap();
        assert_eq!(emb[0], 0);
        assert_eq!(n.abelian_p_invariants(), Some((2, vec![1, 1])));
        let c3 = a4.generate(&[(0..12).find(|&x| a4.element_order(x) == 3).unwrap()]);
        assert!(matches!(a4.quotient(&c3, "bad"), Err(Error::NotNormal(_))));
    }

    #[test]
    fn invariants_of_abelian_p_groups() {
        let inv = |s: &str| make_named(s, 720).unwrap().abelian_p_invariants();
        assert_eq!(inv("Z:2,4"), Some((2, vec![1, 2])));
        assert_eq!(inv("Z:4,2"), Some((2, vec![1, 2])));
        assert_eq!(inv("Z:2,4,8"), Some((2, vec![1, 2, 3])));
        assert_eq!(inv("Z:9,3"), Some((3, vec![1, 2])));
        assert_eq!(inv("C8"), Some((2, vec![3])));
        assert_eq!(inv("C6"), None);
        assert_eq!(inv("Q8"), None);
        assert_eq!(inv("C1"), None);
    }

    #[test]
    fn from_table_relabels_identity() {
        // Z3 with identity stored at index 2
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_table("z3", &rows).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.mul(1, 2), 0);
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table("bad", &bad).is_err());
        // a Latin square that is not associative
        let latin = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table("loop", &latin).is_err());
    }
}
