//! Inertia-stack sector data, ages, and assembly of the orbifold diamond.
//!
//! Exponent convention: a sector whose automorphism has order `l` acts on the
//! ambient tangent space with eigenvalues `exp(2 pi i a_j / l)`, `0 <= a_j < l`.
//! Zero exponents are the directions tangent to the fixed component, and the
//! age is `sum(a_j) / l`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::diamond::HodgeDiamond;
use crate::error::{Error, Result};
use crate::grade::{lcm_u64, Grade};

type SortKey<'a> = (u32, &'a [u32], &'a str, Vec<(Grade, Grade, u64)>);

/// One connected component of the inertia stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaComponent {
    order: u32,
    exponents: Vec<u32>,
    coarse: HodgeDiamond,
    label: String,
}

impl InertiaComponent {
    /// Validates everything that does not depend on the ambient dimension.
    pub fn new(order: u32, exponents: Vec<u32>, coarse: HodgeDiamond, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let invalid = |reason: String| Error::InvalidComponent {
            label: label.clone(),
            reason,
        };

        if order == 0 {
            return Err(invalid("order must be positive".into()));
        }
        if let Some(a) = exponents.iter().find(|&&a| a >= order) {
            return Err(invalid(format!("exponent {a} not in [0, {}]", order - 1)));
        }
        let moving = exponents.iter().filter(|&&a| a != 0).count();
        if moving == 1 {
            return Err(Error::PseudoReflection(format!(
                "sector {label:?} has a single nonzero exponent (codimension-one fixed locus)"
            )));
        }
        if order > 1 {
            // The tangent representation is faithful: the exponents generate Z/l.
            let g = exponents.iter().fold(order, |acc, &a| acc.gcd(&a));
            if g != 1 {
                return Err(invalid(format!(
                    "exponents {exponents:?} only generate a subgroup of order {} in Z/{order}",
                    order / g
                )));
            }
        }
        let fixed = (exponents.len() - moving) as u32;
        if coarse.dim() != fixed {
            return Err(invalid(format!(
                "coarse diamond has dimension {} but there are {fixed} zero exponents",
                coarse.dim()
            )));
        }
        if !coarse.is_integral() {
            return Err(invalid("coarse diamond must have integer grades".into()));
        }
        Ok(InertiaComponent {
            order,
            exponents,
            coarse,
            label,
        })
    }

    /// The identity sector with coarse space `x`.
    pub fn untwisted(x: HodgeDiamond) -> Self {
        InertiaComponent {
            order: 1,
            exponents: vec![0; x.dim() as usize],
            coarse: x,
            label: "untwisted".into(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coarse_diamond(&self) -> &HodgeDiamond {
        &self.coarse
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_untwisted(&self) -> bool {
        self.order == 1
    }

    /// Number of nonzero exponents, i.e. the codimension of the fixed component.
    pub fn codimension(&self) -> u32 {
        self.exponents.iter().filter(|&&a| a != 0).count() as u32
    }

    fn sort_key(&self) -> SortKey<'_> {
        (
            self.order,
            &self.exponents,
            &self.label,
            self.coarse.entries().collect(),
        )
    }
}

/// Full inertia data of an orbifold: the untwisted sector plus twisted sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldPresentation {
    name: String,
    dim: u32,
    components: Vec<InertiaComponent>,
}

impl OrbifoldPresentation {
    pub fn new(name: impl Into<String>, dim: u32, components: Vec<InertiaComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPresentation("no sectors".into()));
        }
        let untwisted = components.iter().filter(|c| c.is_untwisted()).count();
        if untwisted != 1 {
            return Err(Error::InvalidPresentation(format!(
                "expected exactly one untwisted sector (order 1), found {untwisted}"
            )));
        }
        if let Some(c) = components.iter().find(|c| c.exponents.len() != dim as usize) {
            return Err(Error::InvalidComponent {
                label: c.label.clone(),
                reason: format!("{} exponents but ambient dimension is {dim}", c.exponents.len()),
            });
        }
        Ok(OrbifoldPresentation {
            name: name.into(),
            dim,
            components,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn components(&self) -> &[InertiaComponent] {
        &self.components
    }

    pub fn untwisted(&self) -> &InertiaComponent {
        self.components.iter().find(|c| c.is_untwisted()).expect("validated")
    }

    pub fn twisted(&self) -> impl Iterator<Item = &InertiaComponent> {
        self.components.iter().filter(|c| !c.is_untwisted())
    }

    /// Least common multiple of all sector orders.
    pub fn level(&self) -> u64 {
        self.components.iter().fold(1, |acc, c| lcm_u64(acc, c.order as u64))
    }

    /// Copy with sectors sorted by (order, exponents, label, coarse entries).
    pub fn canonicalized(&self) -> Self {
        let mut components = self.components.clone();
        components.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        OrbifoldPresentation {
            name: self.name.clone(),
            dim: self.dim,
            components,
        }
    }
}

/// `sum(a_j) / l`; zero for the untwisted sector.
pub fn age(c: &InertiaComponent) -> Grade {
    let total: u64 = c.exponents.iter().map(|&a| a as u64).sum();
    Grade::new(total as i64, c.order as i64)
}

/// All ages integral, i.e. the coarse space has Gorenstein quotient singularities.
pub fn is_gorenstein(p: &OrbifoldPresentation) -> bool {
    p.components.iter().all(|c| age(c).is_integer())
}

/// `h^{p,q}_orb = sum_Z h^{p - a(Z), q - a(Z)}(Z)`.
pub fn assemble_diamond(p: &OrbifoldPresentation) -> Result<HodgeDiamond> {
    let top = Grade::int(p.dim as i64);
    let mut map = BTreeMap::new();
    for c in &p.components {
        let shift = age(c);
        for (pp, qq, h) in c.coarse.entries() {
            let (sp, sq) = (pp + shift, qq + shift);
            if sp.is_negative() || sq.is_negative() || sp > top || sq > top {
                return Err(Error::OutOfRange {
                    label: c.label.clone(),
                    p: sp.to_string(),
                    q: sq.to_string(),
                    dim: p.dim,
                });
            }
            *map.entry((sp, sq)).or_insert(0) += h;
        }
    }
    HodgeDiamond::from_map(p.dim, Some(p.level()), map)
}

/// `h^{0,q}_orb`, which only the untwisted sector can contribute to.
pub fn extract_h0q(p: &OrbifoldPresentation, q: u32) -> u64 {
    p.untwisted().coarse.get_int(0, q as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point_sector(order: u32, exponents: Vec<u32>) -> InertiaComponent {
        InertiaComponent::new(order, exponents, HodgeDiamond::point(), "pt").unwrap()
    }

    fn kummer_surface() -> OrbifoldPresentation {
        let torus =
            HodgeDiamond::from_integer_entries(2, &[(0, 0, 1), (2, 0, 1), (1, 1, 4), (0, 2, 1), (2, 2, 1)]).unwrap();
        let mut comps = vec![InertiaComponent::untwisted(torus)];
        comps.extend((0..16).map(|_| point_sector(2, vec![1, 1])));
        OrbifoldPresentation::new("kummer2", 2, comps).unwrap()
    }

    #[test]
    fn ages() {
        let untwisted = InertiaComponent::untwisted(HodgeDiamond::projective_space(2));
        assert_eq!(age(&untwisted), Grade::ZERO);
        assert_eq!(age(&point_sector(3, vec![1, 2])), Grade::int(1));
        assert_eq!(age(&point_sector(2, vec![1, 1, 1])), Grade::new(3, 2));
    }

    #[test]
    fn gorenstein_detection() {
        let only = OrbifoldPresentation::new(
            "p2",
            2,
            vec![InertiaComponent::untwisted(HodgeDiamond::projective_space(2))],
        )
        .unwrap();
        assert!(is_gorenstein(&only));

        let surface = InertiaComponent::new(3, vec![1, 2, 0, 0], HodgeDiamond::projective_space(2), "Z").unwrap();
        assert_eq!(age(&surface), Grade::int(1));

        let torus3 = HodgeDiamond::from_integer_entries(3, &[(0, 0, 1), (3, 3, 1)]).unwrap();
        let mut comps = vec![InertiaComponent::untwisted(torus3)];
        comps.push(point_sector(2, vec![1, 1, 1]));
        let p = OrbifoldPresentation::new("x", 3, comps).unwrap();
        assert!(!is_gorenstein(&p));
    }

    #[test]
    fn kummer_surface_assembles_to_k3() {
        let d = assemble_diamond(&kummer_surface()).unwrap();
        let k3 =
            HodgeDiamond::from_integer_entries(2, &[(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)]).unwrap();
        assert_eq!(d, k3);
        assert_eq!(d.level(), 2);
    }

    #[test]
    fn untwisted_only_is_identity() {
        let p = OrbifoldPresentation::new(
            "p2",
            2,
            vec![InertiaComponent::untwisted(HodgeDiamond::projective_space(2))],
        )
        .unwrap();
        assert_eq!(assemble_diamond(&p).unwrap(), HodgeDiamond::projective_space(2));
    }

    #[test]
    fn h0q_comes_from_untwisted_sector() {
        let k = kummer_surface();
        assert_eq!(extract_h0q(&k, 0), 1);
        assert_eq!(extract_h0q(&k, 1), 0);
        assert_eq!(extract_h0q(&k, 2), 1);
        let d = assemble_diamond(&k).unwrap();
        for q in 0..=2 {
            assert_eq!(extract_h0q(&k, q), d.get_int(0, q as i64));
        }
    }

    #[test]
    fn component_validation() {
        let pseudo = InertiaComponent::new(2, vec![1, 0], HodgeDiamond::projective_space(1), "r");
        assert!(matches!(pseudo, Err(Error::PseudoReflection(_))));

        let big = InertiaComponent::new(3, vec![3, 1], HodgeDiamond::point(), "x");
        assert!(matches!(big, Err(Error::InvalidComponent { .. })));

        let wrong_dim = InertiaComponent::new(3, vec![1, 2, 0], HodgeDiamond::point(), "x");
        assert!(matches!(wrong_dim, Err(Error::InvalidComponent { .. })));

        // exponents (2, 4) in Z/6 generate only Z/3
        let unfaithful = InertiaComponent::new(6, vec![2, 4], HodgeDiamond::point(), "x");
        assert!(matches!(unfaithful, Err(Error::InvalidComponent { .. })));

        // (2, 3) in Z/6: neither exponent has order 6 but together they generate Z/6
        assert!(InertiaComponent::new(6, vec![2, 3], HodgeDiamond::point(), "x").is_ok());

        let trivial_twist = InertiaComponent::new(2, vec![0, 0], HodgeDiamond::projective_space(2), "x");
        assert!(trivial_twist.is_err());
    }

    #[test]
    fn presentation_validation() {
        let two_untwisted = OrbifoldPresentation::new(
            "x",
            1,
            vec![
                InertiaComponent::untwisted(HodgeDiamond::projective_space(1)),
                InertiaComponent::untwisted(HodgeDiamond::projective_space(1)),
            ],
        );
        assert!(two_untwisted.is_err());
        assert!(OrbifoldPresentation::new("x", 1, vec![]).is_err());

        let mismatched = OrbifoldPresentation::new(
            "x",
            2,
            vec![
                InertiaComponent::untwisted(HodgeDiamond::projective_space(2)),
                point_sector(2, vec![1, 1, 1]),
            ],
        );
        assert!(mismatched.is_err());
    }

    #[test]
    fn overflowing_shift_is_out_of_range() {
        // Bypasses component validation: an age-1/2 sector whose coarse space carries h^{1,1}
        // lands at (3/2, 3/2), outside the box of a curve.
        let bad = InertiaComponent {
            order: 2,
            exponents: vec![1],
            coarse: HodgeDiamond::projective_space(1),
            label: "bad".into(),
        };
        let p = OrbifoldPresentation {
            name: "x".into(),
            dim: 1,
            components: vec![InertiaComponent::untwisted(HodgeDiamond::projective_space(1)), bad],
        };
        assert!(matches!(assemble_diamond(&p), Err(Error::OutOfRange { .. })));
    }
}
