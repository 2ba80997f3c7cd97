use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),

    #[error("invalid diamond: {0}")]
    InvalidDiamond(String),

    #[error("invalid component {label:?}: {reason}")]
    InvalidComponent { label: String, reason: String },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("PseudoReflection: {0}")]
    PseudoReflection(String),

    #[error("ScalarAction: {0}")]
    ScalarAction(String),

    #[error("GroupTooLarge: group order {order} exceeds limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },

    #[error("DimensionTooSmall: torus dimension {0} must be at least 2")]
    DimensionTooSmall(u32),

    #[error("OutOfRange: sector {label:?} shifts ({p}, {q}) outside [0, {dim}]")]
    OutOfRange {
        label: String,
        p: String,
        q: String,
        dim: u32,
    },

    #[error("DimensionMismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("ParityError: column {index} has odd value {value}")]
    ParityError { index: i64, value: u64 },

    #[error("Inconsistent: {0}")]
    Inconsistent(String),

    #[error("NonGorensteinOrbifold: diamond has fractional grades")]
    NonGorensteinOrbifold,

    #[error("UnsupportedDimension: {0} is outside the supported range 0..=3")]
    UnsupportedDimension(u32),

    #[error("missing argument: {0}")]
    MissingArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short stable name of the error variant, used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "Parse",
            Error::UnknownCatalogEntry(_) => "UnknownCatalogEntry",
            Error::InvalidDiamond(_) => "InvalidDiamond",
            Error::InvalidComponent { .. } => "InvalidComponent",
            Error::InvalidPresentation(_) => "InvalidPresentation",
            Error::PseudoReflection(_) => "PseudoReflection",
            Error::ScalarAction(_) => "ScalarAction",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::DimensionTooSmall(_) => "DimensionTooSmall",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ParityError { .. } => "ParityError",
            Error::Inconsistent(_) => "Inconsistent",
            Error::NonGorensteinOrbifold => "NonGorensteinOrbifold",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::MissingArgument(_) => "MissingArgument",
            Error::Io(_) => "Io",
        }
    }

    /// Process exit code for the command-line tool.
    ///
    /// 1 check failed or unsolvable, 2 parse/usage, 3 validation,
    /// 4 dimension mismatch, 5 unsupported range.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::UnknownCatalogEntry(_) | Error::MissingArgument(_) | Error::Io(_) => 2,
            Error::InvalidDiamond(_)
            | Error::InvalidComponent { .. }
            | Error::InvalidPresentation(_)
            | Error::PseudoReflection(_)
            | Error::ScalarAction(_)
            | Error::GroupTooLarge { .. }
            | Error::DimensionTooSmall(_)
            | Error::OutOfRange { .. } => 3,
            Error::DimensionMismatch { .. } => 4,
            Error::ParityError { .. } | Error::Inconsistent(_) => 1,
            Error::NonGorensteinOrbifold | Error::UnsupportedDimension(_) => 5,
        }
    }
}
