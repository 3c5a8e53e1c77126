//! The subgroup lattice `L(G)` and its distinguished sublattices.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::{BitSet, ElementSet};
use crate::degree::permutes;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::primes::prime_signature;

/// Default cap on the number of lattice nodes.
pub const DEFAULT_MAX_NODES: usize = 20_000;

/// How the set of maximal subgroups is formed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MaxConvention {
    /// Proper subgroups that are maximal under inclusion.
    #[default]
    Raw,
    /// `Raw` together with the meet of all of them and the whole group.
    Closed,
}

impl fmt::Display for MaxConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MaxConvention::Raw => "raw",
            MaxConvention::Closed => "closed",
        })
    }
}

impl std::str::FromStr for MaxConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(MaxConvention::Raw),
            "closed" => Ok(MaxConvention::Closed),
            _ => Err(Error::Input(format!("unknown maximal convention `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SelectionKind {
    All,
    Normal,
    Subnormal,
    MaximalRaw,
    MaximalClosed,
    Sylow,
    PerpOf(Box<SelectionKind>),
    Custom,
}

/// A set of lattice nodes, stored as indices into the parent lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeSelection {
    pub kind: SelectionKind,
    pub members: BitSet,
    /// Whether the meet and join of the members were adjoined.
    pub bounds_included: bool,
}

impl SublatticeSelection {
    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.members.contains(node)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &SublatticeSelection) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// All subgroups of a group, ordered by cardinality and then by membership
/// vector, with the containment relation precomputed.
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    nodes: Vec<ElementSet>,
    generators: Vec<Vec<usize>>,
    index: HashMap<ElementSet, usize>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    chi: OnceLock<Vec<BitSet>>,
    tables: OnceLock<(Vec<u32>, Vec<u32>)>,
    normal: OnceLock<BitSet>,
    subnormal: OnceLock<BitSet>,
}

impl fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.name())
            .field("nodes", &self.nodes.len())
            .finish()
    }
}

type Found = HashMap<ElementSet, Vec<usize>>;

/// Enumerates every subgroup: seeds with the cyclic subgroups, then joins
/// each newly found subgroup with every cyclic subgroup until no new
/// subgroup appears.
pub fn enumerate_subgroups(group: impl Into<Arc<FiniteGroup>>, max_nodes: usize) -> Result<SubgroupLattice> {
    let group = group.into();
    let g = &*group;
    let n = g.order();

    let mut found: Found = HashMap::new();
    found.insert(g.trivial_subgroup(), Vec::new());
    let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
    for x in 1..n {
        let c = g.generate(&[x]);
        if !found.contains_key(&c) {
            found.insert(c.clone(), vec![x]);
            cyclic.push((c, x));
        }
    }
    check_cap(found.len(), max_nodes)?;

    let mut frontier: Vec<(ElementSet, Vec<usize>)> =
        cyclic.iter().map(|(c, x)| (c.clone(), vec![*x])).collect();
    while !frontier.is_empty() {
        let batches: Vec<Vec<(ElementSet, Vec<usize>)>> = frontier
            .par_iter()
            .map(|(h, gens)| {
                let mut local: HashSet<ElementSet> = HashSet::new();
                let mut out = Vec::new();
                for (c, x) in &cyclic {
                    if h.contains(*x) || c.count() == 1 {
                        continue;
                    }
                    let mut jg = gens.clone();
                    jg.push(*x);
                    let j = g.extend_subgroup(h, &jg);
                    if !found.contains_key(&j) && local.insert(j.clone()) {
                        out.push((j, jg));
                    }
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for (j, jg) in batches.into_iter().flatten() {
            if !found.contains_key(&j) {
                found.insert(j.clone(), jg.clone());
                next.push((j, jg));
            }
        }
        check_cap(found.len(), max_nodes)?;
        frontier = next;
    }

    let mut entries: Vec<(ElementSet, Vec<usize>)> = found.into_iter().collect();
    entries.sort_by(|a, b| node_order(&a.0, &b.0));
    let (nodes, generators) = entries.into_iter().unzip();
    Ok(SubgroupLattice::assemble(group, nodes, generators))
}

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        Err(Error::LatticeCap { cap })
    } else {
        Ok(())
    }
}

fn node_order(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    a.count().cmp(&b.count()).then_with(|| a.membership_cmp(b))
}

impl SubgroupLattice {
    /// Rebuilds a lattice from a complete list of subgroups (for instance a
    /// cache file). Nodes are re-sorted canonically and checked to be
    /// distinct subgroups containing the trivial group and the whole group.
    pub fn from_nodes(group: impl Into<Arc<FiniteGroup>>, mut nodes: Vec<ElementSet>) -> Result<Self> {
        let group = group.into();
        let g = &*group;
        nodes.sort_by(node_order);
        nodes.dedup();
        for s in &nodes {
            if s.universe() != g.order() || !g.is_subgroup(s) {
                return Err(Error::NotSubgroup(format!("{s:?}")));
            }
        }
        if nodes.first() != Some(&g.trivial_subgroup()) || nodes.last() != Some(&g.whole()) {
            return Err(Error::Input("node list lacks the trivial or the whole group".into()));
        }
        let generators = nodes
            .iter()
            .map(|s| g.closure_with_generators(s.iter()).1)
            .collect();
        Ok(Self::assemble(group, nodes, generators))
    }

    fn assemble(group: Arc<FiniteGroup>, nodes: Vec<ElementSet>, generators: Vec<Vec<usize>>) -> Self {
        let len = nodes.len();
        let index = nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let counts: Vec<usize> = nodes.iter().map(|s| s.count()).collect();
        let up: Vec<BitSet> = (0..len)
            .into_par_iter()
            .map(|i| {
                BitSet::from_indices(
                    len,
                    (i..len).filter(|&j| counts[j].is_multiple_of(counts[i]) && nodes[i].is_subset(&nodes[j])),
                )
            })
            .collect();
        let mut down = vec![BitSet::empty(len); len];
        for (i, row) in up.iter().enumerate() {
            for j in row {
                down[j].insert(i);
            }
        }
        SubgroupLattice {
            group,
            nodes,
            generators,
            index,
            up,
            down,
            chi: OnceLock::new(),
            tables: OnceLock::new(),
            normal: OnceLock::new(),
            subnormal: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[ElementSet] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &ElementSet {
        &self.nodes[i]
    }

    /// A generating list of node `i`.
    pub fn generators(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `nodes[a] <= nodes[b]`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Nodes containing `a` (including `a`).
    pub fn above(&self, a: usize) -> &BitSet {
        &self.up[a]
    }

    /// Nodes contained in `a` (including `a`).
    pub fn below(&self, a: usize) -> &BitSet {
        &self.down[a]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        if let Some((m, _)) = self.tables.get() {
            return m[a * self.len() + b] as usize;
        }
        self.down[a]
            .intersection(&self.down[b])
            .iter()
            .last()
            .expect("bottom lies below every node")
    }

    /// The smallest node above both; nodes are sorted by cardinality, so the
    /// first common upper bound is the least one.
    pub fn join(&self, a: usize, b: usize) -> usize {
        if let Some((_, j)) = self.tables.get() {
            return j[a * self.len() + b] as usize;
        }
        self.up[a]
            .intersection(&self.up[b])
            .first()
            .expect("top lies above every node")
    }

    /// Full meet and join tables, built on first use.
    pub fn tables(&self) -> (&[u32], &[u32]) {
        let (m, j) = self.tables.get_or_init(|| {
            let len = self.len();
            let rows: Vec<(Vec<u32>, Vec<u32>)> = (0..len)
                .into_par_iter()
                .map(|a| {
                    (0..len)
                        .map(|b| (self.meet(a, b) as u32, self.join(a, b) as u32))
                        .unzip()
                })
                .collect();
            let mut m = Vec::with_capacity(len * len);
            let mut j = Vec::with_capacity(len * len);
            for (rm, rj) in rows {
                m.extend(rm);
                j.extend(rj);
            }
            (m, j)
        });
        (m, j)
    }

    fn selection(&self, kind: SelectionKind, members: BitSet, bounds_included: bool) -> SublatticeSelection {
        SublatticeSelection { kind, members, bounds_included }
    }

    pub fn all(&self) -> SublatticeSelection {
        self.selection(SelectionKind::All, BitSet::full(self.len()), false)
    }

    /// A custom selection; `bounds` adjoins the meet and join of the members.
    pub fn custom(&self, nodes: &[usize], bounds: bool) -> Result<SublatticeSelection> {
        if nodes.is_empty() || nodes.iter().any(|&i| i >= self.len()) {
            return Err(Error::Input("custom selection must list valid nodes".into()));
        }
        let mut members = BitSet::from_indices(self.len(), nodes.iter().copied());
        if bounds {
            let lo = nodes.iter().fold(self.top(), |acc, &i| self.meet(acc, i));
            let hi = nodes.iter().fold(self.bottom(), |acc, &i| self.join(acc, i));
            members.insert(lo);
            members.insert(hi);
        }
        Ok(self.selection(SelectionKind::Custom, members, bounds))
    }

    pub fn normal_subgroups(&self) -> SublatticeSelection {
        let members = self
            .normal
            .get_or_init(|| {
                let g = &*self.group;
                let outer = &self.generators[self.top()];
                BitSet::from_indices(
                    self.len(),
                    (0..self.len()).filter(|&i| {
                        outer.iter().all(|&x| {
                            self.generators[i]
                                .iter()
                                .all(|&h| self.nodes[i].contains(g.conjugate(h, x)))
                        })
                    }),
                )
            })
            .clone();
        self.selection(SelectionKind::Normal, members, false)
    }

    /// Node `i` is subnormal iff the chain `K_0 = G`,
    /// `K_{j+1} = normal closure of H in K_j` reaches `H`.
    pub fn is_subnormal(&self, i: usize) -> bool {
        let g = &*self.group;
        let h = &self.nodes[i];
        let mut k = g.whole();
        loop {
            let next = g.normal_closure(h, &k).expect("h <= k along the chain");
            if next == k {
                return &k == h;
            }
            k = next;
        }
    }

    pub fn subnormal_subgroups(&self) -> SublatticeSelection {
        let members = self
            .subnormal
            .get_or_init(|| {
                let flags: Vec<bool> = (0..self.len()).into_par_iter().map(|i| self.is_subnormal(i)).collect();
                BitSet::from_indices(self.len(), flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i))
            })
            .clone();
        self.selection(SelectionKind::Subnormal, members, false)
    }

    pub fn maximal_subgroups(&self, convention: MaxConvention) -> Result<SublatticeSelection> {
        if self.len() == 1 {
            return Err(Error::TrivialGroup);
        }
        let top = self.top();
        let raw = BitSet::from_indices(
            self.len(),
            (0..top).filter(|&i| self.up[i].count() == 2),
        );
        Ok(match convention {
            MaxConvention::Raw => self.selection(SelectionKind::MaximalRaw, raw, false),
            MaxConvention::Closed => {
                let lo = raw.iter().fold(top, |acc, i| self.meet(acc, i));
                let mut members = raw;
                members.insert(lo);
                members.insert(top);
                self.selection(SelectionKind::MaximalClosed, members, true)
            }
        })
    }

    /// Nodes whose order is the full `p`-part of `|G|` for some prime `p`.
    pub fn sylow_subgroups(&self) -> SublatticeSelection {
        let n = self.group.order();
        if n == 1 {
            return self.selection(SelectionKind::Sylow, BitSet::singleton(1, 0), false);
        }
        let sizes: Vec<usize> = prime_signature(n as u64)
            .factors
            .iter()
            .map(|&(p, e)| (p as usize).pow(e))
            .collect();
        let members = BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| sizes.contains(&self.nodes[i].count())),
        );
        self.selection(SelectionKind::Sylow, members, false)
    }

    /// Permutability relation between nodes, computed once on first use.
    pub fn permutability(&self) -> &[BitSet] {
        self.chi.get_or_init(|| {
            let len = self.len();
            let normal = self.normal_subgroups().members;
            let rows: Vec<Vec<usize>> = (0..len)
                .into_par_iter()
                .map(|i| {
                    (i + 1..len)
                        .filter(|&j| !self.node_pair_permutes(i, j, &normal))
                        .collect()
                })
                .collect();
            let mut chi = vec![BitSet::full(len); len];
            for (i, bad) in rows.into_iter().enumerate() {
                for j in bad {
                    chi[i].remove(j);
                    chi[j].remove(i);
                }
            }
            chi
        })
    }

    fn node_pair_permutes(&self, i: usize, j: usize, normal: &BitSet) -> bool {
        if self.leq(i, j) || self.leq(j, i) || normal.contains(i) || normal.contains(j) {
            return true;
        }
        let (x, y) = (&self.nodes[i], &self.nodes[j]);
        let product = x.count() * y.count() / x.intersection_count(y);
        if !self.group.order().is_multiple_of(product) {
            return false;
        }
        permutes(&self.group, x, y)
    }

    /// `chi(X, Y)` for nodes.
    pub fn permutes_nodes(&self, i: usize, j: usize) -> bool {
        self.permutability()[i].contains(j)
    }

    /// `S^perp`: nodes permuting with every member of `s`.
    pub fn perp(&self, s: &SublatticeSelection) -> SublatticeSelection {
        let chi = self.permutability();
        let members = BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| s.members.is_subset(&chi[i])),
        );
        self.selection(SelectionKind::PerpOf(Box::new(s.kind.clone())), members, false)
    }

    /// Whether the member set is closed under pairwise meet and join.
    pub fn is_meet_join_closed(&self, s: &SublatticeSelection) -> bool {
        let m: Vec<usize> = s.iter().collect();
        m.iter().all(|&a| {
            m.iter()
                .all(|&b| s.contains(self.meet(a, b)) && s.contains(self.join(a, b)))
        })
    }

    /// Modular law `X v (Y ^ Z) = (X v Y) ^ Z` for all `X <= Z`.
    pub fn is_modular_lattice(&self) -> bool {
        self.tables();
        (0..self.len()).into_par_iter().all(|x| {
            self.up[x].iter().all(|z| {
                (0..self.len()).all(|y| self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), z))
            })
        })
    }

    /// Every subgroup is permutable, i.e. `L^perp = L`.
    pub fn is_quasihamiltonian(&self) -> bool {
        self.perp(&self.all()).len() == self.len()
    }

    /// Maps the nodes of `sub`, a lattice of a group embedded into this one by
    /// `embedding` (new index -> element of this group), to node indices here.
    pub fn embed_nodes(&self, sub: &SubgroupLattice, embedding: &[usize]) -> Vec<usize> {
        sub.nodes
            .iter()
            .map(|s| {
                let image = ElementSet::from_indices(self.group.order(), s.iter().map(|e| embedding[e]));
                self.index_of(&image).expect("image of a subgroup is a subgroup")
            })
            .collect()
    }

    /// Node indices of the complements `H` of `n` in the sense used by the
    /// bound checks: `NH = G` and `|H| = |G| / |N|`.
    pub fn complement_candidates(&self, n: usize) -> Vec<usize> {
        let g = &*self.group;
        let target = g.order() / self.nodes[n].count();
        (0..self.len())
            .filter(|&h| {
                self.nodes[h].count() == target
                    && self.nodes[h].intersection_count(&self.nodes[n]) == 1
            })
            .collect()
    }
}
