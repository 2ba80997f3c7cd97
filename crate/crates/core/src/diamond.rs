//! Sparse, rationally bigraded Hodge diamonds and their column sums.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grade::{lcm_u64, Grade};
use crate::inertia::{age, OrbifoldPresentation};

/// A bidegree `(p, q)`.
pub type Bidegree = (Grade, Grade);

/// Dimensions `h^{p,q}` of one (orbifold) cohomology space.
///
/// Zero entries are never stored. Every key lies in `[0, n] x [0, n]` and has
/// integral `p - q`. The level is the least common multiple of the grade
/// denominators, or of the sector orders when assembled from inertia data.
#[derive(Clone, Debug)]
pub struct HodgeDiamond {
    dim: u32,
    level: u64,
    entries: BTreeMap<Bidegree, u64>,
}

impl PartialEq for HodgeDiamond {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

impl Eq for HodgeDiamond {}

impl HodgeDiamond {
    /// Builds a diamond from `(p, q, h)` triples. Zero values are dropped;
    /// repeated bidegrees are rejected.
    pub fn new(dim: u32, entries: impl IntoIterator<Item = (Grade, Grade, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, q, h) in entries {
            if map.insert((p, q), h).is_some() {
                return Err(Error::InvalidDiamond(format!("duplicate entry at ({p}, {q})")));
            }
        }
        Self::from_map(dim, None, map)
    }

    /// Convenience constructor for integer-graded diamonds.
    pub fn from_integer_entries(dim: u32, entries: &[(i64, i64, u64)]) -> Result<Self> {
        Self::new(dim, entries.iter().map(|&(p, q, h)| (Grade::int(p), Grade::int(q), h)))
    }

    /// The diamond of a point.
    pub fn point() -> Self {
        Self::projective_space(0)
    }

    /// `h^{p,p} = 1` for `0 <= p <= n`.
    pub fn projective_space(n: u32) -> Self {
        let entries = (0..=n as i64).map(|p| ((Grade::int(p), Grade::int(p)), 1)).collect();
        HodgeDiamond {
            dim: n,
            level: 1,
            entries,
        }
    }

    pub(crate) fn from_map(dim: u32, level: Option<u64>, mut map: BTreeMap<Bidegree, u64>) -> Result<Self> {
        map.retain(|_, h| *h > 0);
        let top = Grade::int(dim as i64);
        let mut denominators = 1;
        for &(p, q) in map.keys() {
            if p.is_negative() || q.is_negative() || p > top || q > top {
                return Err(Error::InvalidDiamond(format!(
                    "entry ({p}, {q}) lies outside [0, {dim}]"
                )));
            }
            if !p.differs_by_integer(q) {
                return Err(Error::InvalidDiamond(format!(
                    "entry ({p}, {q}) has non-integral p - q"
                )));
            }
            denominators = lcm_u64(denominators, p.denom() as u64);
        }
        let level = match level {
            None => denominators,
            Some(0) => return Err(Error::InvalidDiamond("level must be positive".into())),
            Some(l) if l % denominators != 0 => {
                return Err(Error::InvalidDiamond(format!(
                    "grade denominators (lcm {denominators}) do not divide level {l}"
                )))
            }
            Some(l) => l,
        };
        Ok(HodgeDiamond {
            dim,
            level,
            entries: map,
        })
    }

    /// Re-declares the level; every grade denominator must divide it.
    pub fn with_level(self, level: u64) -> Result<Self> {
        Self::from_map(self.dim, Some(level), self.entries)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn get(&self, p: Grade, q: Grade) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn get_int(&self, p: i64, q: i64) -> u64 {
        self.get(Grade::int(p), Grade::int(q))
    }

    /// Nonzero entries in `(p, q)` order.
    pub fn entries(&self) -> impl Iterator<Item = (Grade, Grade, u64)> + '_ {
        self.entries.iter().map(|(&(p, q), &h)| (p, q, h))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entries.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `true` when every stored grade is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.keys().all(|(p, q)| p.is_integer() && q.is_integer())
    }

    /// Returns a copy with the entry at `(p, q)` replaced.
    pub fn with_entry(&self, p: Grade, q: Grade, h: u64) -> Result<Self> {
        let mut map = self.entries.clone();
        map.insert((p, q), h);
        Self::from_map(self.dim, Some(self.level), map)
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, q, h)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p},{q}):{h}")?;
        }
        write!(f, "}}")
    }
}

/// Entry at `(p, q)` of the result equals the input entry at `(n - p, n - q)`.
pub fn serre_dual(d: &HodgeDiamond) -> HodgeDiamond {
    let n = Grade::int(d.dim as i64);
    let entries = d.entries.iter().map(|(&(p, q), &h)| ((n - p, n - q), h)).collect();
    HodgeDiamond {
        dim: d.dim,
        level: d.level,
        entries,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// `h^{p,q} = h^{n-p,n-q}`
    pub serre: bool,
    /// `h^{p,q} = h^{q,p}`
    pub hodge: bool,
}

pub fn check_symmetries(d: &HodgeDiamond) -> SymmetryReport {
    let serre = serre_dual(d) == *d;
    let hodge = d.entries.iter().all(|(&(p, q), &h)| d.get(q, p) == h);
    SymmetryReport { serre, hodge }
}

/// Diagonal sums `c_i = sum_{p - q = i} h^{p,q}` for `i` in `[-n, n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnVector {
    dim: u32,
    values: Vec<u64>,
}

impl ColumnVector {
    /// All-zero columns for dimension `dim`.
    pub fn zeros(dim: u32) -> Self {
        ColumnVector {
            dim,
            values: vec![0; 2 * dim as usize + 1],
        }
    }

    /// Builds a column vector from `(i, c_i)` pairs; unlisted columns are 0.
    pub fn new(dim: u32, cols: impl IntoIterator<Item = (i64, u64)>) -> Result<Self> {
        let mut out = Self::zeros(dim);
        for (i, v) in cols {
            if i.unsigned_abs() > dim as u64 {
                return Err(Error::InvalidDiamond(format!(
                    "column index {i} outside [-{dim}, {dim}]"
                )));
            }
            *out.slot(i) = v;
        }
        Ok(out)
    }

    fn slot(&mut self, i: i64) -> &mut u64 {
        &mut self.values[(i + self.dim as i64) as usize]
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `c_i`, or 0 outside `[-n, n]`.
    pub fn get(&self, i: i64) -> u64 {
        if i.unsigned_abs() > self.dim as u64 {
            0
        } else {
            self.values[(i + self.dim as i64) as usize]
        }
    }

    /// `(i, c_i)` for every `i` in `[-n, n]`, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        let n = self.dim as i64;
        self.values.iter().enumerate().map(move |(k, &v)| (k as i64 - n, v))
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    pub(crate) fn add_assign(&mut self, other: &ColumnVector) {
        for (i, v) in other.iter() {
            if v > 0 {
                *self.slot(i) += v;
            }
        }
    }
}

impl fmt::Display for ColumnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(i, v)| format!("{i}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn columns(d: &HodgeDiamond) -> ColumnVector {
    let mut out = ColumnVector::zeros(d.dim);
    for (&(p, q), &h) in &d.entries {
        let i = (p - q).as_integer().expect("diamond keys have integral p - q");
        *out.slot(i) += h;
    }
    out
}

/// Signed generating polynomial with rational exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StringyPolynomial {
    terms: BTreeMap<Bidegree, i64>,
}

impl StringyPolynomial {
    pub fn coefficient(&self, p: Grade, q: Grade) -> i64 {
        self.terms.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Nonzero terms in `(p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Grade, Grade, i64)> + '_ {
        self.terms.iter().map(|(&(p, q), &c)| (p, q, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `u = v = 1`, the orbifold Euler number.
    pub fn euler_number(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// `E(u, v) = sum_Z (uv)^{a(Z)} sum (-1)^{p'+q'} h^{p',q'}(Z) u^{p'} v^{q'}`.
///
/// Signs come from the integral bidegrees of each sector before the shift.
pub fn stringy_e(p: &OrbifoldPresentation) -> StringyPolynomial {
    let mut terms: BTreeMap<Bidegree, i64> = BTreeMap::new();
    for c in p.components() {
        let shift = age(c);
        for (pp, qq, h) in c.coarse_diamond().entries() {
            let parity = (pp + qq).as_integer().expect("coarse diamonds are integral");
            let sign = if parity.rem_euclid(2) == 0 { 1 } else { -1 };
            *terms.entry((pp + shift, qq + shift)).or_insert(0) += sign * h as i64;
        }
    }
    terms.retain(|_, c| *c != 0);
    StringyPolynomial { terms }
}
