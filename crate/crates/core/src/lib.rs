//! Exact Chen-Ruan orbifold Hodge diamonds of projective quotient orbifolds.
//!
//! Inertia data (one record per sector: automorphism order, tangent
//! eigenvalue exponents, coarse Hodge diamond) is assembled into a rationally
//! graded diamond by shifting each sector by its age. On top of that the
//! crate checks the numerical constraints forced by an equivalence of
//! derived categories: equal column sums, equal `h^{0,1}`, `h^{n,0}` and
//! `h^{n-1,0}`, and, for Gorenstein orbifolds of dimension at most three,
//! the full diamond.
//!
//! All arithmetic is exact.

pub mod catalog;
#[cfg(feature = "cli")]
pub mod cli;
pub mod diamond;
pub mod error;
pub mod format;
pub mod grade;
pub mod inertia;
pub mod invariants;
pub mod quotient;
pub mod render;

pub use diamond::{
    check_symmetries, columns, serre_dual, stringy_e, ColumnVector, HodgeDiamond, StringyPolynomial, SymmetryReport,
};
pub use error::{Error, Result};
pub use grade::Grade;
pub use inertia::{age, assemble_diamond, extract_h0q, is_gorenstein, InertiaComponent, OrbifoldPresentation};
pub use invariants::{
    check_partners, check_partners_with, extract_hn0, extract_hn10, hochschild_via_sectors, mckay_compare,
    reconstruct_gorenstein, McKayReport, PartnerOptions, PartnerReport, Verdict,
};
pub use quotient::{build_kummer, build_projective_quotient, KummerSpec, ProjectiveQuotientSpec};
