//! Closed-form lattice counts, the bound polynomials `f` and `g`, and
//! checkers for the lower bounds on `sd` and `spd`.
//!
//! Every checker separates "are the hypotheses met" from "does the
//! inequality hold": callers must only treat `holds` as a claim when
//! `hypothesis_satisfied` is true.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::degree::{permuting_pairs, sd, spd, spd_pairs, ExactRatio};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_subgroups, MaxConvention, SubgroupLattice, DEFAULT_MAX_NODES};
use crate::primes::is_prime;

/// How strictly the shape `Z_{p^a1} x Z_{p^a2}` is matched.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeReading {
    /// Two non-trivial cyclic factors, `1 <= a1 <= a2`.
    #[default]
    Strict,
    /// Also accepts a cyclic `p`-group, read as `a1 = 0`.
    Relaxed,
}

impl fmt::Display for ShapeReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeReading::Strict => "strict",
            ShapeReading::Relaxed => "relaxed",
        })
    }
}

impl FromStr for ShapeReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(ShapeReading::Strict),
            "relaxed" => Ok(ShapeReading::Relaxed),
            _ => Err(Error::Input(format!("unknown reading `{s}`"))),
        }
    }
}

/// `Z_{p^alpha1} x Z_{p^alpha2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rank2AbelianShape {
    pub p: u64,
    pub alpha1: u32,
    pub alpha2: u32,
}

impl Rank2AbelianShape {
    pub fn new(p: u64, alpha1: u32, alpha2: u32) -> Result<Self> {
        Self::with_reading(p, alpha1, alpha2, ShapeReading::Strict)
    }

    pub fn with_reading(p: u64, alpha1: u32, alpha2: u32, reading: ShapeReading) -> Result<Self> {
        let lowest = match reading {
            ShapeReading::Strict => 1,
            ShapeReading::Relaxed => 0,
        };
        if !is_prime(p) || alpha1 < lowest || alpha1 > alpha2 || alpha2 == 0 {
            return Err(Error::Input(format!(
                "invalid shape p={p}, alpha1={alpha1}, alpha2={alpha2} ({reading} reading)"
            )));
        }
        Ok(Rank2AbelianShape { p, alpha1, alpha2 })
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.alpha1 + self.alpha2)
    }

    /// Descriptor accepted by [`crate::named::make_named`].
    pub fn descriptor(&self) -> String {
        let p = self.p;
        if self.alpha1 == 0 {
            format!("C{}", p.pow(self.alpha2))
        } else {
            format!("Z:{},{}", p.pow(self.alpha1), p.pow(self.alpha2))
        }
    }

    /// The numerator polynomial of `|L(N)|` before division by `(p-1)^2`.
    fn lattice_numerator(&self) -> BigInt {
        let p = BigInt::from(self.p);
        let (a1, a2) = (self.alpha1 as i64, self.alpha2 as i64);
        BigInt::from(a2 - a1 + 1) * p.pow(self.alpha1 + 2) - BigInt::from(a2 - a1 - 1) * p.pow(self.alpha1 + 1)
            - BigInt::from(a1 + a2 + 3) * &p
            + BigInt::from(a1 + a2 + 1)
    }
}

/// Matches a group against the rank-two shape.
pub fn shape_of(g: &crate::group::FiniteGroup, reading: ShapeReading) -> Option<Rank2AbelianShape> {
    let (p, exps) = g.abelian_p_invariants()?;
    match (exps.as_slice(), reading) {
        ([a1, a2], _) => Some(Rank2AbelianShape { p, alpha1: *a1, alpha2: *a2 }),
        ([a2], ShapeReading::Relaxed) => Some(Rank2AbelianShape { p, alpha1: 0, alpha2: *a2 }),
        _ => None,
    }
}

/// `|L(Z_{p^a1} x Z_{p^a2})|` in closed form.
pub fn lattice_count_rank2(shape: &Rank2AbelianShape) -> u64 {
    let den = BigInt::from(shape.p - 1).pow(2);
    let num = shape.lattice_numerator();
    assert!((&num % &den) == BigInt::from(0), "closed form is integral");
    u64::try_from(num / den).expect("lattice count fits in u64")
}

/// Number of maximal subgroups of an abelian `p`-group of rank `k`:
/// `(p^k - 1) / (p - 1)`.
pub fn maximal_count_elementary(p: u64, k: u32) -> u64 {
    (p.pow(k) - 1) / (p - 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyForms {
    /// Value obtained by carrying the lemma's derivation through.
    pub derivation: ExactRatio,
    /// The printed closed expansion, kept for comparison.
    pub printed: ExactRatio,
}

/// `f(p, a1, a2)`. The derivation form `(p + 1) |L(N)| + 4` is normative.
pub fn f_poly(shape: &Rank2AbelianShape) -> PolyForms {
    let p = BigInt::from(shape.p);
    let (a1, a2) = (shape.alpha1 as i64, shape.alpha2 as i64);
    let derivation = ExactRatio::integer(BigInt::from(shape.p + 1) * lattice_count_rank2(shape) + 4);
    let num = BigInt::from(a2 - a1 + 1) * p.pow(shape.alpha1 + 3) + BigInt::from(2) * p.pow(shape.alpha1 + 2)
        - BigInt::from(a2 - a1 - 1) * p.pow(shape.alpha1 + 1)
        - BigInt::from(a1 + a2 - 1) * p.pow(2)
        - BigInt::from(a1 + a2 + 11) * &p
        + BigInt::from(a1 + a2 + 5);
    let den = &p * &p - BigInt::from(2) * &p + 1;
    PolyForms { derivation, printed: ExactRatio::new(num, den) }
}

/// `g(p, a1, a2) = |L(N)|^2 + 4`; both forms coincide.
pub fn g_poly(shape: &Rank2AbelianShape) -> PolyForms {
    let count = BigInt::from(lattice_count_rank2(shape));
    let derivation = ExactRatio::integer(&count * &count + 4);
    let num = shape.lattice_numerator();
    let printed = ExactRatio::new(&num * &num, BigInt::from(shape.p - 1).pow(4)) + ExactRatio::integer(4);
    PolyForms { derivation, printed }
}

/// Outcome of one bound check.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCheckResult {
    pub claim: String,
    pub convention: Option<MaxConvention>,
    pub hypothesis_satisfied: bool,
    pub reasons: Vec<String>,
    pub bound: Option<ExactRatio>,
    /// Exact square of the bound when the bound is a square root; `bound`
    /// then holds its rounded-down value.
    pub bound_squared: Option<ExactRatio>,
    pub actual: Option<ExactRatio>,
    pub holds: Option<bool>,
    pub slack: Option<ExactRatio>,
}

impl BoundCheckResult {
    fn new(claim: &str, convention: Option<MaxConvention>) -> Self {
        BoundCheckResult {
            claim: claim.to_string(),
            convention,
            hypothesis_satisfied: true,
            reasons: Vec::new(),
            bound: None,
            bound_squared: None,
            actual: None,
            holds: None,
            slack: None,
        }
    }

    fn fail(&mut self, reason: impl Into<String>) {
        self.hypothesis_satisfied = false;
        self.reasons.push(reason.into());
    }

    fn compare(&mut self, bound: ExactRatio, actual: ExactRatio) {
        self.holds = Some(actual >= bound);
        self.slack = Some(&actual - &bound);
        self.bound = Some(bound);
        self.actual = Some(actual);
    }

    /// Square-root bound `sqrt(radicand) / scale`, decided by cross-squaring.
    fn compare_sqrt(&mut self, radicand: u128, scale: u64, actual: ExactRatio, actual_count: u64) {
        let root = radicand.isqrt();
        if root * root != radicand {
            self.reasons.push(format!("radicand {radicand} is not a square; bound rounded down"));
        }
        let bound = ExactRatio::new(BigInt::from(root), scale);
        self.holds = Some((actual_count as u128).pow(2) >= radicand);
        self.bound_squared = Some(ExactRatio::new(BigInt::from(radicand), BigInt::from(scale).pow(2)));
        self.slack = Some(&actual - &bound);
        self.bound = Some(bound);
        self.actual = Some(actual);
    }

    /// Whether the result counts as a verified instance of the claim.
    pub fn asserted_and_holds(&self) -> bool {
        self.hypothesis_satisfied && self.holds == Some(true)
    }
}

/// Re-rooted subgroup with its own lattice and the map of its nodes into
/// the parent lattice.
struct Rerooted {
    lattice: SubgroupLattice,
    nodes_in_parent: Vec<usize>,
}

fn reroot(l: &SubgroupLattice, node: usize, name: &str) -> Result<Rerooted> {
    let (g, emb) = l.group().subgroup_as_group(l.node(node), name)?;
    let lattice = enumerate_subgroups(g, DEFAULT_MAX_NODES)?;
    let nodes_in_parent = l.embed_nodes(&lattice, &emb);
    Ok(Rerooted { lattice, nodes_in_parent })
}

fn require_normal(l: &SubgroupLattice, n: usize) -> Result<()> {
    if l.normal_subgroups().contains(n) {
        Ok(())
    } else {
        Err(Error::NotNormal(format!("node {n}")))
    }
}

fn require_product(l: &SubgroupLattice, n: usize, h: usize) -> Result<()> {
    let g = l.group();
    if g.product_set(l.node(n), l.node(h)).count() == g.order() {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("NH != G for N = node {n}, H = node {h}")))
    }
}

fn prime_index(l: &SubgroupLattice, n: usize) -> Result<u64> {
    let index = (l.group().order() / l.node(n).count()) as u64;
    if is_prime(index) {
        Ok(index)
    } else {
        Err(Error::Hypothesis(format!("|G : N| = {index} is not prime")))
    }
}

fn require_shape(l: &SubgroupLattice, n: usize, reading: ShapeReading) -> Result<Rank2AbelianShape> {
    let (ng, _) = l.group().subgroup_as_group(l.node(n), "N")?;
    shape_of(&ng, reading).ok_or_else(|| {
        Error::Hypothesis(format!("N = node {n} is not Z_p^a1 x Z_p^a2 ({reading} reading)"))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionsA1A2 {
    pub a1: bool,
    pub a2: bool,
    pub details: Vec<String>,
}

/// Literal inclusion tests: (a:1) `sn(H) ⊆ sn(G)` and `M(H) ⊆ M(G)`;
/// (a:2) `sn(N) ⊆ sn(G)` and `M(N) ⊆ M(G)`.
pub fn check_conditions_a1_a2(
    l: &SubgroupLattice,
    n: usize,
    h: usize,
    convention: MaxConvention,
) -> Result<ConditionsA1A2> {
    require_normal(l, n)?;
    require_product(l, n, h)?;
    let sn_g = l.subnormal_subgroups();
    let m_g = l.maximal_subgroups(convention)?;
    let mut details = Vec::new();
    let mut side = |node: usize, label: &str| -> Result<bool> {
        if l.node(node).count() == 1 {
            details.push(format!("{label} is trivial and has no maximal subgroups"));
            return Ok(false);
        }
        let r = reroot(l, node, label)?;
        let sn = r.lattice.subnormal_subgroups();
        let m = r.lattice.maximal_subgroups(convention)?;
        if let Some(x) = sn.iter().map(|i| r.nodes_in_parent[i]).find(|&x| !sn_g.contains(x)) {
            details.push(format!(
                "sn({label}) member node {x} (order {}) is not subnormal in G",
                l.node(x).count()
            ));
            return Ok(false);
        }
        if let Some(x) = m.iter().map(|i| r.nodes_in_parent[i]).find(|&x| !m_g.contains(x)) {
            details.push(format!(
                "M({label}) member node {x} (order {}) is not in M(G) ({convention})",
                l.node(x).count()
            ));
            return Ok(false);
        }
        Ok(true)
    };
    let a1 = side(h, "H")?;
    let a2 = side(n, "N")?;
    Ok(ConditionsA1A2 { a1, a2, details })
}

fn record_conditions(res: &mut BoundCheckResult, c: &ConditionsA1A2) {
    if !c.a1 {
        res.fail("condition (a:1) fails");
    }
    if !c.a2 {
        res.fail("condition (a:2) fails");
    }
    res.reasons.extend(c.details.iter().cloned());
}

/// `spd(G) >= f(p, a1, a2) / (2 |sn(G)| |M(G)|)`.
pub fn lemma1_bound_check(
    l: &SubgroupLattice,
    n: usize,
    h: usize,
    convention: MaxConvention,
    reading: ShapeReading,
) -> Result<BoundCheckResult> {
    require_normal(l, n)?;
    let shape = require_shape(l, n, reading)?;
    prime_index(l, n)?;
    let mut res = BoundCheckResult::new("lemma1", Some(convention));
    let cond = check_conditions_a1_a2(l, n, h, convention)?;
    record_conditions(&mut res, &cond);
    let denom = 2 * l.subnormal_subgroups().len() as u64 * l.maximal_subgroups(convention)?.len() as u64;
    let bound = f_poly(&shape).derivation / ExactRatio::integer(denom);
    res.compare(bound, spd(l, convention)?);
    Ok(res)
}

/// `sd(G) >= g(p, a1, a2) / (2 |L(G)|^2)`.
pub fn lemma2_bound_check(l: &SubgroupLattice, n: usize, reading: ShapeReading) -> Result<BoundCheckResult> {
    require_normal(l, n)?;
    let shape = require_shape(l, n, reading)?;
    prime_index(l, n)?;
    let mut res = BoundCheckResult::new("lemma2", None);
    let size = l.len() as u64;
    let bound = g_poly(&shape).derivation / ExactRatio::integer(2 * size * size);
    res.compare(bound, sd(l));
    Ok(res)
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Check {
    pub hypotheses: bool,
    pub reasons: Vec<String>,
    pub reading: ShapeReading,
    pub fitting_order: usize,
    pub centralizer_node: Option<usize>,
    pub shape: Option<Rank2AbelianShape>,
    /// Complement used for part (i), with its result.
    pub part_i: Option<(usize, BoundCheckResult)>,
    pub part_ii: Option<BoundCheckResult>,
}

/// Solvable `G` with `C = C_G(Fit(G))` of rank-two shape and `|G : C|` prime.
pub fn theorem1_check(l: &SubgroupLattice, convention: MaxConvention, reading: ShapeReading) -> Result<Theorem1Check> {
    let g = l.group();
    let fit = g.fitting_subgroup();
    let c = g.centralizer_of_set(&fit);
    let c_node = l.index_of(&c);
    let mut out = Theorem1Check {
        hypotheses: true,
        reasons: Vec::new(),
        reading,
        fitting_order: fit.count(),
        centralizer_node: c_node,
        shape: None,
        part_i: None,
        part_ii: None,
    };
    if !g.is_solvable() {
        out.hypotheses = false;
        out.reasons.push("G is not solvable".into());
    }
    let (cg, _) = g.subgroup_as_group(&c, "C")?;
    out.shape = shape_of(&cg, reading);
    if out.shape.is_none() {
        out.hypotheses = false;
        out.reasons.push(format!("C_G(Fit(G)) of order {} is not of the required shape", c.count()));
    }
    let index = (g.order() / c.count()) as u64;
    if !is_prime(index) {
        out.hypotheses = false;
        out.reasons.push(format!("|G : C| = {index} is not prime"));
    }
    if !out.hypotheses {
        return Ok(out);
    }
    let c_node = c_node.expect("centraliser is a subgroup");
    out.part_ii = Some(lemma2_bound_check(l, c_node, reading)?);
    let mut first = None;
    for h in l.complement_candidates(c_node) {
        let r = lemma1_bound_check(l, c_node, h, convention, reading)?;
        if r.hypothesis_satisfied {
            first = Some((h, r));
            break;
        }
        first.get_or_insert((h, r));
    }
    if first.is_none() {
        out.reasons.push("C has no complement; part (i) not applicable".into());
    }
    out.part_i = first;
    Ok(out)
}

/// `|L(G)|^2 sd(G) >= |L(N)|^2 + 2|L(N)| + 1` for normal abelian `N` of prime index.
pub fn cor26_bound_check(l: &SubgroupLattice, n: usize) -> Result<BoundCheckResult> {
    require_normal(l, n)?;
    prime_index(l, n)?;
    let r = reroot(l, n, "N")?;
    if !r.lattice.group().is_abelian() {
        return Err(Error::Hypothesis(format!("N = node {n} is not abelian")));
    }
    let mut res = BoundCheckResult::new("cor26", None);
    let ln = r.lattice.len() as u64;
    let all = l.all();
    res.compare(
        ExactRatio::integer((ln + 1) * (ln + 1)),
        ExactRatio::integer(permuting_pairs(l, &all, &all)),
    );
    Ok(res)
}

/// Square-root lower bounds for `spd` (first) and `sd` (second) from the
/// decomposition `G = NH`.
pub fn cauchy_bound_checks(
    l: &SubgroupLattice,
    n: usize,
    h: usize,
    convention: MaxConvention,
) -> Result<(BoundCheckResult, BoundCheckResult)> {
    require_normal(l, n)?;
    require_product(l, n, h)?;
    let rn = reroot(l, n, "N")?;
    let rh = reroot(l, h, "H")?;

    let mut sd_res = BoundCheckResult::new("cauchy_sd", None);
    let (all_n, all_h, all_g) = (rn.lattice.all(), rh.lattice.all(), l.all());
    let sum_n = permuting_pairs(&rn.lattice, &all_n, &all_n) as u128;
    let sum_h = permuting_pairs(&rh.lattice, &all_h, &all_h) as u128;
    let size = l.len() as u64;
    sd_res.compare_sqrt(sum_n * sum_h, size * size, sd(l), permuting_pairs(l, &all_g, &all_g));

    let mut spd_res = BoundCheckResult::new("cauchy_spd", Some(convention));
    if l.node(n).count() == 1 || l.node(h).count() == 1 {
        spd_res.fail("N and H must be non-trivial for maximal subgroups to exist");
        return Ok((spd_res, sd_res));
    }
    let cond = check_conditions_a1_a2(l, n, h, convention)?;
    record_conditions(&mut spd_res, &cond);
    let (pairs_n, _) = spd_pairs(&rn.lattice, convention)?;
    let (pairs_h, _) = spd_pairs(&rh.lattice, convention)?;
    let (pairs_g, den_g) = spd_pairs(l, convention)?;
    spd_res.compare_sqrt(pairs_n as u128 * pairs_h as u128, den_g, spd(l, convention)?, pairs_g);
    Ok((spd_res, sd_res))
}

/// `2 |sn(G)||M(G)| spd(G) >= |sn(N)||M(N)| spd(N) + |sn(G/N)||M(G/N)| spd(G/N)`.
///
/// Both sides are permuting-pair counts; `actual` is the left side.
pub fn lb3_check(l: &SubgroupLattice, n: usize, h: usize, convention: MaxConvention) -> Result<BoundCheckResult> {
    require_normal(l, n)?;
    require_product(l, n, h)?;
    let size_n = l.node(n).count();
    if size_n == 1 || size_n == l.group().order() {
        return Err(Error::Hypothesis("N must be a non-trivial proper subgroup".into()));
    }
    let mut res = BoundCheckResult::new("lb3", Some(convention));
    if l.node(h).count() == 1 {
        res.fail("H is trivial");
    } else {
        let cond = check_conditions_a1_a2(l, n, h, convention)?;
        record_conditions(&mut res, &cond);
    }
    let rn = reroot(l, n, "N")?;
    let (q, _) = l.group().quotient(l.node(n), "G/N")?;
    let lq = enumerate_subgroups(q, DEFAULT_MAX_NODES)?;
    let (pairs_n, _) = spd_pairs(&rn.lattice, convention)?;
    let (pairs_q, _) = spd_pairs(&lq, convention)?;
    let (pairs_g, _) = spd_pairs(l, convention)?;
    res.compare(ExactRatio::integer(pairs_n + pairs_q), ExactRatio::integer(2 * pairs_g));
    Ok(res)
}

/// All `(N, H)` with `N` normal, non-trivial and proper and `H` a complement
/// candidate of `N`.
pub fn decompositions(l: &SubgroupLattice) -> Vec<(usize, usize)> {
    let normal = l.normal_subgroups();
    normal
        .iter()
        .filter(|&n| n != l.bottom() && n != l.top())
        .flat_map(|n| l.complement_candidates(n).into_iter().map(move |h| (n, h)))
        .collect()
}

/// Node indices of normal subgroups of prime index.
pub fn prime_index_normals(l: &SubgroupLattice) -> Vec<usize> {
    l.normal_subgroups()
        .iter()
        .filter(|&n| is_prime((l.group().order() / l.node(n).count()) as u64))
        .collect()
}

/// Convenience: node of an element set.
pub fn node_of(l: &SubgroupLattice, s: &ElementSet) -> Result<usize> {
    l.index_of(s).ok_or_else(|| Error::NotSubgroup(format!("{s:?}")))
}
