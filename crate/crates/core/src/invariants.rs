//! Numerical constraints satisfied by orbifolds with equivalent derived categories.
//!
//! Everything here is a necessary condition. A `CompatibleSoFar` verdict never
//! claims that two orbifolds are derived equivalent.

use std::collections::BTreeSet;

use crate::diamond::{check_symmetries, columns, Bidegree, ColumnVector, HodgeDiamond};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::inertia::OrbifoldPresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    CompatibleSoFar,
    Incompatible,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CompatibleSoFar => "CompatibleSoFar",
            Verdict::Incompatible => "Incompatible",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// Diagonal sums `sum_{p-q=i} h^{p,q}`.
    Columns,
    H01,
    Hn0,
    Hn10,
    /// `h^{0,q}` for `2 <= q <= n-1`; informational only.
    H0q,
    /// Full equality, for integer-graded diamonds of dimension at most 3.
    Strict,
}

impl Constraint {
    pub fn as_str(self) -> &'static str {
        match self {
            Constraint::Columns => "columns",
            Constraint::H01 => "h01",
            Constraint::Hn0 => "hn0",
            Constraint::Hn10 => "hn10",
            Constraint::H0q => "h0q",
            Constraint::Strict => "strict",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Column(i64),
    Entry(Grade, Grade),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mismatch {
    pub constraint: Constraint,
    pub location: Location,
    pub left: u64,
    pub right: u64,
}

impl Mismatch {
    /// The same record with sides swapped.
    pub fn mirrored(&self) -> Mismatch {
        Mismatch {
            left: self.right,
            right: self.left,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerReport {
    pub columns_equal: bool,
    pub h01_equal: bool,
    pub hn0_equal: bool,
    pub hn10_equal: bool,
    /// `None` unless strict mode was requested and applies.
    pub strict_equal: Option<bool>,
    pub verdict: Verdict,
    pub failures: Vec<Mismatch>,
    /// Differences that do not affect the verdict.
    pub notes: Vec<Mismatch>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartnerOptions {
    /// For `n <= 3` and integer-graded diamonds, also require full equality.
    pub strict_dim3: bool,
}

pub fn check_partners(a: &HodgeDiamond, b: &HodgeDiamond) -> Result<PartnerReport> {
    check_partners_with(a, b, PartnerOptions::default())
}

pub fn check_partners_with(a: &HodgeDiamond, b: &HodgeDiamond, opts: PartnerOptions) -> Result<PartnerReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let n = a.dim() as i64;
    let mut failures = Vec::new();

    let (ca, cb) = (columns(a), columns(b));
    for ((i, l), (_, r)) in ca.iter().zip(cb.iter()) {
        if l != r {
            failures.push(Mismatch {
                constraint: Constraint::Columns,
                location: Location::Column(i),
                left: l,
                right: r,
            });
        }
    }
    let columns_equal = failures.is_empty();

    let mut compare_entry = |constraint, p: i64, q: i64| {
        let (l, r) = (a.get_int(p, q), b.get_int(p, q));
        if l != r {
            let location = Location::Entry(Grade::int(p), Grade::int(q));
            failures.push(Mismatch {
                constraint,
                location,
                left: l,
                right: r,
            });
        }
        l == r
    };
    let h01_equal = compare_entry(Constraint::H01, 0, 1);
    let hn0_equal = compare_entry(Constraint::Hn0, n, 0);
    let hn10_equal = compare_entry(Constraint::Hn10, n - 1, 0);

    let notes = (2..n)
        .filter_map(|q| {
            let (l, r) = (a.get_int(0, q), b.get_int(0, q));
            (l != r).then(|| Mismatch {
                constraint: Constraint::H0q,
                location: Location::Entry(Grade::ZERO, Grade::int(q)),
                left: l,
                right: r,
            })
        })
        .collect();

    let strict_equal = if opts.strict_dim3 && n <= 3 && a.is_integral() && b.is_integral() {
        let keys: BTreeSet<Bidegree> = a.entries().chain(b.entries()).map(|(p, q, _)| (p, q)).collect();
        let before = failures.len();
        for (p, q) in keys {
            let (l, r) = (a.get(p, q), b.get(p, q));
            if l != r {
                failures.push(Mismatch {
                    constraint: Constraint::Strict,
                    location: Location::Entry(p, q),
                    left: l,
                    right: r,
                });
            }
        }
        Some(failures.len() == before)
    } else {
        None
    };

    let all = columns_equal && h01_equal && hn0_equal && hn10_equal && strict_equal.unwrap_or(true);
    let verdict = if all {
        Verdict::CompatibleSoFar
    } else {
        Verdict::Incompatible
    };
    Ok(PartnerReport {
        columns_equal,
        h01_equal,
        hn0_equal,
        hn10_equal,
        strict_equal,
        verdict,
        failures,
        notes,
    })
}

/// `h^{n,0}_orb`, read off column `n`; twisted sectors cannot reach it.
pub fn extract_hn0(c: &ColumnVector) -> u64 {
    c.get(c.dim() as i64)
}

/// `h^{n-1,0}_orb = c_{n-1} / 2`; column `n - 1` holds `h^{n-1,0} + h^{n,1}`.
pub fn extract_hn10(c: &ColumnVector) -> Result<u64> {
    let i = c.dim() as i64 - 1;
    let v = c.get(i);
    if v % 2 == 1 {
        return Err(Error::ParityError { index: i, value: v });
    }
    Ok(v / 2)
}

fn half(value: u64, what: &str) -> Result<u64> {
    if value % 2 == 1 {
        return Err(Error::Inconsistent(format!("{what} = {value} must be even")));
    }
    Ok(value / 2)
}

fn at_least(value: u64, floor: u64, what: &str) -> Result<u64> {
    value
        .checked_sub(floor)
        .ok_or_else(|| Error::Inconsistent(format!("{what} = {value} is below the minimum {floor}")))
}

fn check_h01(given: Option<u64>, solved: u64) -> Result<()> {
    match given {
        Some(v) if v != solved => Err(Error::Inconsistent(format!(
            "h01 = {v} contradicts the value {solved} forced by the columns"
        ))),
        _ => Ok(()),
    }
}

/// Solves for the unique integer diamond with `h^{0,0} = 1`, Hodge symmetry,
/// Serre duality, the given columns and `h^{0,1}`, in dimension at most 3.
///
/// `h01` is required for `n = 3`; for smaller `n` it is determined by the
/// columns and only checked when supplied.
pub fn reconstruct_gorenstein(c: &ColumnVector, h01: Option<u64>, n: u32) -> Result<HodgeDiamond> {
    if n > 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    if c.dim() != n {
        return Err(Error::DimensionMismatch {
            left: c.dim(),
            right: n,
        });
    }
    for i in 1..=n as i64 {
        if c.get(i) != c.get(-i) {
            return Err(Error::Inconsistent(format!(
                "c_{i} = {} differs from c_-{i} = {}",
                c.get(i),
                c.get(-i)
            )));
        }
    }
    let col = |i: i64| c.get(i);

    // independent values (p, q, h) with p >= q and p + q <= n
    let independent: Vec<(i64, i64, u64)> = match n {
        0 => {
            if col(0) != 1 {
                return Err(Error::Inconsistent(format!("c_0 = {} but a point has c_0 = 1", col(0))));
            }
            check_h01(h01, 0)?;
            vec![(0, 0, 1)]
        }
        1 => {
            if col(0) != 2 {
                return Err(Error::Inconsistent(format!("c_0 = {} but a curve has c_0 = 2", col(0))));
            }
            check_h01(h01, col(1))?;
            vec![(0, 0, 1), (1, 0, col(1))]
        }
        2 => {
            let h10 = half(col(1), "c_1")?;
            check_h01(h01, h10)?;
            vec![
                (0, 0, 1),
                (2, 0, col(2)),
                (1, 0, h10),
                (1, 1, at_least(col(0), 2, "c_0")?),
            ]
        }
        _ => {
            let h01 = h01.ok_or_else(|| Error::MissingArgument("h01 is required in dimension 3".into()))?;
            let h21 = col(1).checked_sub(2 * h01).ok_or_else(|| {
                Error::Inconsistent(format!("c_1 = {} is smaller than 2 * h01 = {}", col(1), 2 * h01))
            })?;
            let h11 = half(at_least(col(0), 2, "c_0")?, "c_0 - 2")?;
            vec![
                (0, 0, 1),
                (3, 0, col(3)),
                (2, 0, half(col(2), "c_2")?),
                (1, 0, h01),
                (2, 1, h21),
                (1, 1, h11),
            ]
        }
    };

    let ni = n as i64;
    let mut entries = std::collections::BTreeMap::new();
    for (p, q, h) in independent {
        for (x, y) in [(p, q), (q, p), (ni - p, ni - q), (ni - q, ni - p)] {
            entries.insert((Grade::int(x), Grade::int(y)), h);
        }
    }
    let d = HodgeDiamond::from_map(n, None, entries).expect("closed-form keys lie in the box");

    let sym = check_symmetries(&d);
    assert!(sym.serre && sym.hodge, "reconstruction must be symmetric");
    assert_eq!(&columns(&d), c, "reconstruction must reproduce the columns");
    Ok(d)
}

/// Column vector assembled sector by sector: each sector contributes the
/// columns of its coarse diamond, since a diagonal shift preserves `p - q`.
pub fn hochschild_via_sectors(p: &OrbifoldPresentation) -> ColumnVector {
    let mut out = ColumnVector::zeros(p.dim());
    for c in p.components() {
        out.add_assign(&columns(c.coarse_diamond()));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryDifference {
    pub p: Grade,
    pub q: Grade,
    pub orbifold: u64,
    pub resolution: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayReport {
    pub equal: bool,
    pub differences: Vec<EntryDifference>,
}

/// Compares a Gorenstein orbifold diamond with the diamond of a proposed crepant resolution.
pub fn mckay_compare(orb: &HodgeDiamond, resolution: &HodgeDiamond) -> Result<McKayReport> {
    if !orb.is_integral() {
        return Err(Error::NonGorensteinOrbifold);
    }
    if !resolution.is_integral() {
        return Err(Error::InvalidDiamond(
            "resolution diamond must be integer-graded".into(),
        ));
    }
    if orb.dim() != resolution.dim() {
        return Err(Error::DimensionMismatch {
            left: orb.dim(),
            right: resolution.dim(),
        });
    }
    let keys: BTreeSet<Bidegree> = orb
        .entries()
        .chain(resolution.entries())
        .map(|(p, q, _)| (p, q))
        .collect();
    let differences: Vec<EntryDifference> = keys
        .into_iter()
        .filter_map(|(p, q)| {
            let (o, r) = (orb.get(p, q), resolution.get(p, q));
            (o != r).then_some(EntryDifference {
                p,
                q,
                orbifold: o,
                resolution: r,
            })
        })
        .collect();
    Ok(McKayReport {
        equal: differences.is_empty(),
        differences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inertia::assemble_diamond;
    use crate::quotient::{build_kummer, build_projective_quotient, KummerSpec, ProjectiveQuotientSpec};

    fn k3() -> HodgeDiamond {
        HodgeDiamond::from_integer_entries(2, &[(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)]).unwrap()
    }

    fn cols(n: u32, pairs: &[(i64, u64)]) -> ColumnVector {
        // mirrors nonnegative indices
        ColumnVector::new(n, pairs.iter().flat_map(|&(i, v)| [(i, v), (-i, v)])).unwrap()
    }

    #[test]
    fn partners_reflexive_and_perturbed() {
        let r = check_partners(&k3(), &k3()).unwrap();
        assert_eq!(r.verdict, Verdict::CompatibleSoFar);
        assert!(r.columns_equal && r.h01_equal && r.hn0_equal && r.hn10_equal);

        let bent = k3().with_entry(Grade::int(1), Grade::int(1), 19).unwrap();
        let r = check_partners(&k3(), &bent).unwrap();
        assert_eq!(r.verdict, Verdict::Incompatible);
        assert!(!r.columns_equal);
        assert_eq!(
            r.failures,
            vec![Mismatch {
                constraint: Constraint::Columns,
                location: Location::Column(0),
                left: 22,
                right: 21
            }]
        );
        let swapped = check_partners(&bent, &k3()).unwrap();
        assert_eq!(
            swapped.failures,
            r.failures.iter().map(Mismatch::mirrored).collect::<Vec<_>>()
        );
    }

    #[test]
    fn partners_dimension_mismatch() {
        assert_eq!(
            check_partners(&k3(), &HodgeDiamond::point()),
            Err(Error::DimensionMismatch { left: 2, right: 0 })
        );
    }

    #[test]
    fn strict_mode() {
        // same columns and extracted entries as K3, but h11 and h22 redistributed
        let other =
            HodgeDiamond::from_integer_entries(2, &[(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 19), (2, 2, 2)]).unwrap();
        let loose = check_partners(&k3(), &other).unwrap();
        assert_eq!(loose.verdict, Verdict::CompatibleSoFar);
        assert_eq!(loose.strict_equal, None);

        let strict = check_partners_with(&k3(), &other, PartnerOptions { strict_dim3: true }).unwrap();
        assert_eq!(strict.strict_equal, Some(false));
        assert_eq!(strict.verdict, Verdict::Incompatible);
        assert_eq!(strict.failures.len(), 2);
        assert!(strict.failures.iter().all(|m| m.constraint == Constraint::Strict));

        let kummer3 = assemble_diamond(&build_kummer(KummerSpec { n: 3 }).unwrap()).unwrap();
        let r = check_partners_with(&kummer3, &kummer3, PartnerOptions { strict_dim3: true }).unwrap();
        assert_eq!(r.strict_equal, None);
        assert_eq!(r.verdict, Verdict::CompatibleSoFar);
    }

    #[test]
    fn hn_extraction() {
        let kummer3 = assemble_diamond(&build_kummer(KummerSpec { n: 3 }).unwrap()).unwrap();
        let c = columns(&kummer3);
        assert_eq!(extract_hn0(&c), 0);
        assert_eq!(extract_hn10(&c), Ok(3));
        assert_eq!(kummer3.get_int(2, 0), 3);

        assert_eq!(extract_hn0(&columns(&k3())), 1);
        assert_eq!(extract_hn10(&columns(&k3())), Ok(0));
        assert_eq!(extract_hn0(&columns(&HodgeDiamond::projective_space(2))), 0);

        let odd = cols(3, &[(2, 5)]);
        assert_eq!(extract_hn10(&odd), Err(Error::ParityError { index: 2, value: 5 }));
    }

    #[test]
    fn reconstruct_quintic_and_k3() {
        let d = reconstruct_gorenstein(&cols(3, &[(3, 1), (2, 0), (1, 101), (0, 4)]), Some(0), 3).unwrap();
        assert_eq!(d.get_int(1, 1), 1);
        assert_eq!(d.get_int(2, 1), 101);
        assert_eq!(d.get_int(3, 0), 1);
        assert_eq!(d.get_int(1, 0), 0);
        assert_eq!(d.get_int(2, 0), 0);
        assert_eq!(d.total(), 208);

        assert_eq!(
            reconstruct_gorenstein(&cols(2, &[(2, 1), (1, 0), (0, 22)]), None, 2).unwrap(),
            k3()
        );
    }

    #[test]
    fn reconstruct_minimal_threefold() {
        let d = reconstruct_gorenstein(&cols(3, &[(0, 2)]), Some(0), 3).unwrap();
        assert_eq!(
            d,
            HodgeDiamond::from_integer_entries(3, &[(0, 0, 1), (3, 3, 1)]).unwrap()
        );
    }

    #[test]
    fn reconstruct_errors() {
        assert!(matches!(
            reconstruct_gorenstein(&cols(3, &[(3, 1), (2, 1), (0, 4)]), Some(0), 3),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            reconstruct_gorenstein(&cols(3, &[(1, 1), (0, 4)]), Some(1), 3),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            reconstruct_gorenstein(&cols(3, &[(0, 4)]), None, 3),
            Err(Error::MissingArgument(_))
        ));
        assert!(matches!(
            reconstruct_gorenstein(&ColumnVector::zeros(4), Some(0), 4),
            Err(Error::UnsupportedDimension(4))
        ));
        let lopsided = ColumnVector::new(2, [(2, 1), (-2, 0), (0, 22)]).unwrap();
        assert!(matches!(
            reconstruct_gorenstein(&lopsided, None, 2),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            reconstruct_gorenstein(&cols(1, &[(0, 3)]), None, 1),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            reconstruct_gorenstein(&cols(0, &[(0, 2)]), None, 0),
            Err(Error::Inconsistent(_))
        ));
        // h01 contradicting the columns of a surface
        assert!(matches!(
            reconstruct_gorenstein(&cols(2, &[(2, 1), (1, 4), (0, 10)]), Some(1), 2),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            reconstruct_gorenstein(&cols(2, &[(0, 1)]), None, 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reconstruct_low_dimensions() {
        assert_eq!(
            reconstruct_gorenstein(&cols(0, &[(0, 1)]), None, 0).unwrap(),
            HodgeDiamond::point()
        );
        let elliptic = reconstruct_gorenstein(&cols(1, &[(1, 1), (0, 2)]), Some(1), 1).unwrap();
        assert_eq!(
            elliptic,
            HodgeDiamond::from_integer_entries(1, &[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]).unwrap()
        );
    }

    #[test]
    fn hochschild_matches_assembled_columns() {
        let k2 = build_kummer(KummerSpec { n: 2 }).unwrap();
        let c = hochschild_via_sectors(&k2);
        assert_eq!(c, cols(2, &[(2, 1), (0, 22)]));
        assert_eq!(c, columns(&assemble_diamond(&k2).unwrap()));

        let p2 = build_projective_quotient(&ProjectiveQuotientSpec::new(2, vec![3], vec![vec![0, 1, 2]])).unwrap();
        assert_eq!(hochschild_via_sectors(&p2), cols(2, &[(0, 9)]));
    }

    #[test]
    fn mckay() {
        let p2 = build_projective_quotient(&ProjectiveQuotientSpec::new(2, vec![3], vec![vec![0, 1, 2]])).unwrap();
        let orb = assemble_diamond(&p2).unwrap();
        let resolution = HodgeDiamond::from_integer_entries(2, &[(0, 0, 1), (1, 1, 7), (2, 2, 1)]).unwrap();
        assert!(mckay_compare(&orb, &resolution).unwrap().equal);
        assert!(mckay_compare(&k3(), &k3()).unwrap().equal);

        let r = mckay_compare(&orb, &HodgeDiamond::projective_space(2)).unwrap();
        assert!(!r.equal);
        assert_eq!(r.differences.len(), 1);
        assert_eq!((r.differences[0].orbifold, r.differences[0].resolution), (7, 1));

        let kummer3 = assemble_diamond(&build_kummer(KummerSpec { n: 3 }).unwrap()).unwrap();
        assert_eq!(mckay_compare(&kummer3, &kummer3), Err(Error::NonGorensteinOrbifold));
    }
}
