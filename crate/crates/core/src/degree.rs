//! Exact commutativity degrees.
//!
//! `sd(G)` counts permuting ordered pairs in `L(G)^2`, `spd(G)` counts them in
//! `sn(G) x M(G)`, and `d(G)` counts commuting ordered pairs of elements.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{direct_product, FiniteGroup};
use crate::lattice::{enumerate_subgroups, MaxConvention, SubgroupLattice, SublatticeSelection};

/// Arbitrary-precision rational in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRatio(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Non-normative decimal approximation.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExactRatio", 3)?;
        st.serialize_field("num", &self.numer().to_string())?;
        st.serialize_field("den", &self.denom().to_string())?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

macro_rules! ratio_op {
    ($tr:ident, $f:ident) => {
        impl $tr for &ExactRatio {
            type Output = ExactRatio;
            fn $f(self, rhs: &ExactRatio) -> ExactRatio {
                ExactRatio((&self.0).$f(&rhs.0))
            }
        }
        impl $tr for ExactRatio {
            type Output = ExactRatio;
            fn $f(self, rhs: ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$f(rhs.0))
            }
        }
    };
}
ratio_op!(Add, add);
ratio_op!(Sub, sub);
ratio_op!(Mul, mul);
ratio_op!(Div, div);

/// `chi(X, Y)`: whether the product sets `XY` and `YX` coincide.
pub fn permutes(g: &FiniteGroup, x: &ElementSet, y: &ElementSet) -> bool {
    g.product_set(x, y) == g.product_set(y, x)
}

/// Cross-check for [`permutes`]: `XY` is a subgroup iff `<X, Y>` has
/// exactly `|X||Y|/|X ∩ Y|` elements.
pub fn permutes_by_order(g: &FiniteGroup, x: &ElementSet, y: &ElementSet) -> bool {
    let product = x.count() * y.count() / x.intersection_count(y);
    g.closure(&x.union(y)).count() == product
}

/// Number of ordered pairs in `s x t` that permute.
pub fn permuting_pairs(l: &SubgroupLattice, s: &SublatticeSelection, t: &SublatticeSelection) -> u64 {
    let chi = l.permutability();
    s.iter().map(|i| chi[i].intersection_count(&t.members) as u64).sum()
}

/// Fraction of permuting ordered pairs in `s x t`.
pub fn generalized_degree(l: &SubgroupLattice, s: &SublatticeSelection, t: &SublatticeSelection) -> ExactRatio {
    let den = s.len() as u64 * t.len() as u64;
    ExactRatio::new(permuting_pairs(l, s, t), den)
}

pub fn sd(l: &SubgroupLattice) -> ExactRatio {
    let all = l.all();
    generalized_degree(l, &all, &all)
}

/// Permuting pairs in `sn(G) x M(G)`.
pub fn spd_pairs(l: &SubgroupLattice, convention: MaxConvention) -> Result<(u64, u64)> {
    let sn = l.subnormal_subgroups();
    let m = l.maximal_subgroups(convention)?;
    Ok((permuting_pairs(l, &sn, &m), sn.len() as u64 * m.len() as u64))
}

pub fn spd(l: &SubgroupLattice, convention: MaxConvention) -> Result<ExactRatio> {
    let sn = l.subnormal_subgroups();
    let m = l.maximal_subgroups(convention)?;
    Ok(generalized_degree(l, &sn, &m))
}

/// `|{(x, y) : xy = yx}|`.
pub fn commuting_pairs(g: &FiniteGroup) -> u64 {
    let n = g.order();
    (0..n)
        .map(|x| (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count() as u64)
        .sum()
}

/// `sum_x |C_G(x)|`.
pub fn centralizer_sum(g: &FiniteGroup) -> u64 {
    (0..g.order()).map(|x| g.centralizer(x).count() as u64).sum()
}

/// `d(G)`; both counting formulas are evaluated and must agree.
pub fn element_commutativity_degree(g: &FiniteGroup) -> ExactRatio {
    let pairs = commuting_pairs(g);
    assert_eq!(pairs, centralizer_sum(g), "commuting pairs vs centraliser sum");
    let n = g.order() as u64;
    ExactRatio::new(pairs, n * n)
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductComparison {
    pub product_degree: ExactRatio,
    pub degree_product: ExactRatio,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicativityCheck {
    pub parts: Vec<String>,
    pub coprime: bool,
    pub convention: MaxConvention,
    pub sd: ProductComparison,
    pub spd: ProductComparison,
}

/// Compares the degrees of `G_1 x ... x G_k` with the product of the
/// factors' degrees. Trivial factors contribute `1` to the `spd` product.
pub fn check_multiplicativity(
    parts: &[FiniteGroup],
    convention: MaxConvention,
    max_order: usize,
    max_nodes: usize,
) -> Result<MultiplicativityCheck> {
    if parts.is_empty() {
        return Err(Error::Input("no factors given".into()));
    }
    let mut product = parts[0].clone();
    for p in &parts[1..] {
        product = direct_product(&product, p, max_order)?;
    }
    let coprime = parts.iter().enumerate().all(|(i, a)| {
        parts[i + 1..]
            .iter()
            .all(|b| num_integer::gcd(a.order(), b.order()) == 1)
    });

    let mut sd_prod = ExactRatio::one();
    let mut spd_prod = ExactRatio::one();
    for p in parts {
        let l = enumerate_subgroups(p.clone(), max_nodes)?;
        sd_prod = sd_prod * sd(&l);
        if p.order() > 1 {
            spd_prod = spd_prod * spd(&l, convention)?;
        }
    }
    let l = enumerate_subgroups(product, max_nodes)?;
    let sd_whole = sd(&l);
    let spd_whole = if l.len() > 1 { spd(&l, convention)? } else { ExactRatio::one() };
    Ok(MultiplicativityCheck {
        parts: parts.iter().map(|p| p.name().to_string()).collect(),
        coprime,
        convention,
        sd: ProductComparison {
            equal: sd_whole == sd_prod,
            product_degree: sd_whole,
            degree_product: sd_prod,
        },
        spd: ProductComparison {
            equal: spd_whole == spd_prod,
            product_degree: spd_whole,
            degree_product: spd_prod,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalSpd {
    pub spd_is_one: bool,
    pub sn_in_mperp: bool,
    pub m_in_snperp: bool,
}

impl ExtremalSpd {
    /// `spd = 1` iff one of the two inclusions holds.
    pub fn biconditional_holds(&self) -> bool {
        self.spd_is_one == (self.sn_in_mperp || self.m_in_snperp)
    }
}

pub fn check_extremal_spd(l: &SubgroupLattice, convention: MaxConvention) -> Result<ExtremalSpd> {
    let sn = l.subnormal_subgroups();
    let m = l.maximal_subgroups(convention)?;
    Ok(ExtremalSpd {
        spd_is_one: spd(l, convention)?.is_one(),
        sn_in_mperp: sn.is_subset(&l.perp(&m)),
        m_in_snperp: m.is_subset(&l.perp(&sn)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityC4 {
    pub lhs: ExactRatio,
    pub rhs: ExactRatio,
    pub holds: bool,
    pub equality: bool,
    pub sn_eq_m_eq_l: bool,
}

/// `(|sn||M| / |L|^2) spd(G) <= sd(G)`, with equality iff `sn = M = L`.
pub fn check_inequality_c4(l: &SubgroupLattice, convention: MaxConvention) -> Result<InequalityC4> {
    let sn = l.subnormal_subgroups();
    let m = l.maximal_subgroups(convention)?;
    let size = l.len() as u64;
    let lhs = ExactRatio::new(sn.len() as u64 * m.len() as u64, size * size) * spd(l, convention)?;
    let rhs = sd(l);
    let all = l.all();
    Ok(InequalityC4 {
        holds: lhs <= rhs,
        equality: lhs == rhs,
        sn_eq_m_eq_l: sn.members == all.members && m.members == all.members,
        lhs,
        rhs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub group: String,
    pub order: usize,
    pub lattice_size: usize,
    pub subnormal_count: usize,
    pub maximal_raw_count: usize,
    pub maximal_closed_count: usize,
    pub convention: MaxConvention,
    pub sd: ExactRatio,
    pub spd: Option<ExactRatio>,
    pub d: ExactRatio,
    pub permuting_pair_count: u64,
    pub quasihamiltonian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub modular: bool,
}

pub fn degree_report(l: &SubgroupLattice, convention: MaxConvention) -> DegreeReport {
    let g = l.group();
    let flags = g.structural_predicates();
    let all = l.all();
    let (raw, closed, spd) = if l.len() > 1 {
        (
            l.maximal_subgroups(MaxConvention::Raw).map(|s| s.len()).unwrap_or(0),
            l.maximal_subgroups(MaxConvention::Closed).map(|s| s.len()).unwrap_or(0),
            spd(l, convention).ok(),
        )
    } else {
        (0, 0, None)
    };
    DegreeReport {
        group: g.name().to_string(),
        order: g.order(),
        lattice_size: l.len(),
        subnormal_count: l.subnormal_subgroups().len(),
        maximal_raw_count: raw,
        maximal_closed_count: closed,
        convention,
        sd: sd(l),
        spd,
        d: element_commutativity_degree(g),
        permuting_pair_count: permuting_pairs(l, &all, &all),
        quasihamiltonian: l.is_quasihamiltonian(),
        nilpotent: flags.is_nilpotent,
        solvable: flags.is_solvable,
        modular: l.is_modular_lattice(),
    }
}
