//! Inertia data for two global-quotient families.
//!
//! * Diagonal actions of a finite abelian group `G = Z/m_1 x ... x Z/m_k` on `P^n`.
//!   Each element `g` splits `C^{n+1}` into eigenspaces `V_chi`; every nonzero
//!   eigenspace gives a fixed component `P(V_chi)`. Because `G` is abelian and
//!   acts diagonally it preserves each component and acts trivially on its
//!   cohomology, so no further folding is required.
//! * The negation involution on a complex torus of dimension `n >= 2`, fixing
//!   the `2^{2n}` two-torsion points.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::diamond::HodgeDiamond;
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::inertia::{InertiaComponent, OrbifoldPresentation};

pub const DEFAULT_GROUP_LIMIT: u64 = 10_000;

/// Largest torus dimension accepted by [`build_kummer`] (`4^10` fixed points).
pub const MAX_KUMMER_DIM: u32 = 10;

/// A diagonal abelian action on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectiveQuotientSpec {
    /// The action is on `P^n`.
    pub n: u32,
    /// Cyclic factor orders `m_1, ..., m_k`.
    #[serde(default)]
    pub orders: Vec<u32>,
    /// `k` rows of `n + 1` weights; generator `j` multiplies coordinate `i`
    /// by `exp(2 pi i w[j][i] / m_j)`.
    #[serde(default)]
    pub weights: Vec<Vec<u32>>,
    #[serde(default = "default_limit", skip_serializing_if = "is_default_limit")]
    pub group_limit: u64,
}

fn default_limit() -> u64 {
    DEFAULT_GROUP_LIMIT
}

fn is_default_limit(v: &u64) -> bool {
    *v == DEFAULT_GROUP_LIMIT
}

impl ProjectiveQuotientSpec {
    pub fn new(n: u32, orders: Vec<u32>, weights: Vec<Vec<u32>>) -> Self {
        ProjectiveQuotientSpec {
            n,
            orders,
            weights,
            group_limit: DEFAULT_GROUP_LIMIT,
        }
    }

    /// `P^n` with the trivial group.
    pub fn trivial(n: u32) -> Self {
        Self::new(n, vec![], vec![])
    }

    pub fn with_group_limit(mut self, limit: u64) -> Self {
        self.group_limit = limit;
        self
    }

    fn validate_shape(&self) -> Result<u64> {
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        if self.n == 0 {
            return bad("projective dimension must be positive".into());
        }
        if self.orders.len() != self.weights.len() {
            return bad(format!(
                "{} cyclic orders but {} weight rows",
                self.orders.len(),
                self.weights.len()
            ));
        }
        if let Some(&m) = self.orders.iter().find(|&&m| m == 0) {
            return bad(format!("cyclic order {m} must be positive"));
        }
        if let Some(row) = self.weights.iter().find(|r| r.len() != self.n as usize + 1) {
            return bad(format!("weight row {row:?} must have {} entries", self.n + 1));
        }
        let mut order: u64 = 1;
        for &m in &self.orders {
            order = order
                .checked_mul(m as u64)
                .filter(|&o| o <= self.group_limit)
                .ok_or(Error::GroupTooLarge {
                    order: self
                        .orders
                        .iter()
                        .map(|&m| m as u64)
                        .fold(1u64, |a, b| a.saturating_mul(b)),
                    limit: self.group_limit,
                })?;
        }
        Ok(order)
    }
}

/// A group element in mixed-radix order, with coordinate eigenvalue exponents in `Z/order`.
struct Element {
    coords: Vec<u32>,
    order: u32,
    eigen: Vec<u32>,
}

fn enumerate_elements(spec: &ProjectiveQuotientSpec, group_order: u64) -> Vec<Element> {
    let big = spec.orders.iter().fold(1u64, |acc, &m| acc.lcm(&(m as u64)));
    let mut out = Vec::with_capacity(group_order as usize);
    for index in 0..group_order {
        let mut rest = index;
        let coords: Vec<u32> = spec
            .orders
            .iter()
            .map(|&m| {
                let t = (rest % m as u64) as u32;
                rest /= m as u64;
                t
            })
            .collect();
        let order = spec
            .orders
            .iter()
            .zip(&coords)
            .fold(1u64, |acc, (&m, &t)| acc.lcm(&(m as u64 / (t as u64).gcd(&(m as u64)))));
        // exponents in Z/big, then rescaled to Z/order
        let eigen = (0..=spec.n as usize)
            .map(|i| {
                let e = spec
                    .orders
                    .iter()
                    .zip(&coords)
                    .zip(&spec.weights)
                    .fold(0u64, |acc, ((&m, &t), row)| {
                        (acc + (t as u64) * (row[i] as u64 % m as u64) % m as u64 * (big / m as u64)) % big
                    });
                (e / (big / order)) as u32
            })
            .collect();
        out.push(Element {
            coords,
            order: order as u32,
            eigen,
        });
    }
    out
}

fn element_name(e: &Element) -> String {
    let parts: Vec<String> = e.coords.iter().map(u32::to_string).collect();
    format!("g=({})", parts.join(","))
}

/// Eigenvalue exponent -> multiplicity.
fn eigenspaces(e: &Element) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &c in &e.eigen {
        *m.entry(c).or_insert(0) += 1;
    }
    m
}

/// Sectors of `[P^n / G]` for a diagonal abelian action, ordered by element
/// index then eigenvalue.
pub fn build_projective_quotient(spec: &ProjectiveQuotientSpec) -> Result<OrbifoldPresentation> {
    let group_order = spec.validate_shape()?;
    let n = spec.n;
    let elements = enumerate_elements(spec, group_order);

    for e in elements.iter().skip(1) {
        let spaces = eigenspaces(e);
        if spaces.len() == 1 {
            return Err(Error::ScalarAction(format!(
                "element {} acts on P^{n} as a scalar",
                element_name(e)
            )));
        }
        if spaces.values().any(|&m| m == n) {
            return Err(Error::PseudoReflection(format!(
                "element {} fixes a hyperplane of P^{n}",
                element_name(e)
            )));
        }
    }

    let mut components = vec![InertiaComponent::untwisted(HodgeDiamond::projective_space(n))];
    for e in elements.iter().skip(1) {
        let l = e.order;
        for (&chi, &mult) in &eigenspaces(e) {
            let mut exponents: Vec<u32> = e
                .eigen
                .iter()
                .filter(|&&c| c != chi)
                .map(|&c| (c + l - chi) % l)
                .chain(std::iter::repeat_n(0, mult as usize - 1))
                .collect();
            exponents.sort_unstable();
            let label = format!("{} chi={chi}/{l}", element_name(e));
            components.push(InertiaComponent::new(
                l,
                exponents,
                HodgeDiamond::projective_space(mult - 1),
                label,
            )?);
        }
    }
    OrbifoldPresentation::new(format!("P{n}_quotient"), n, components)
}

/// The negation involution on a complex torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KummerSpec {
    /// Complex dimension of the torus.
    pub n: u32,
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Negation-invariant part of the torus diamond: `C(n,p) C(n,q)` for even `p + q`.
pub fn even_torus_diamond(n: u32) -> HodgeDiamond {
    let entries = (0..=n)
        .flat_map(|p| (0..=n).map(move |q| (p, q)))
        .filter(|(p, q)| (p + q) % 2 == 0)
        .map(|(p, q)| {
            (
                Grade::int(p as i64),
                Grade::int(q as i64),
                binomial(n, p) * binomial(n, q),
            )
        });
    HodgeDiamond::new(n, entries).expect("torus entries are in range")
}

/// Sectors of `[A / {+-1}]` for a torus `A` of dimension `n`.
pub fn build_kummer(spec: KummerSpec) -> Result<OrbifoldPresentation> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n > MAX_KUMMER_DIM {
        return Err(Error::GroupTooLarge {
            order: 1u64 << (2 * n.min(31)),
            limit: 1 << (2 * MAX_KUMMER_DIM),
        });
    }
    let point = InertiaComponent::new(2, vec![1; n as usize], HodgeDiamond::point(), "2-torsion point")?;
    let mut components = vec![InertiaComponent::untwisted(even_torus_diamond(n))];
    components.extend(std::iter::repeat_n(point, 1 << (2 * n)));
    OrbifoldPresentation::new(format!("kummer{n}"), n, components)
}
