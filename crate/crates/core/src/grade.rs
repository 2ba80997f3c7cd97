//! Exact rational bidegree coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Hodge bidegree coordinate `p` or `q`.
///
/// Always held in lowest terms with a positive denominator. Integer grades
/// serialize as JSON integers, fractional ones as `"a/b"` strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));

    pub fn int(value: i64) -> Self {
        Grade(Ratio::from_integer(value))
    }

    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Grade(Ratio::new(num, den))
    }

    pub fn checked_new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in grade {num}/{den}")));
        }
        Ok(Grade::new(num, den))
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if this grade is integral.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn floor(self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn is_negative(self) -> bool {
        self.0.is_negative()
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    /// Whether the difference of two grades is an integer.
    pub fn differs_by_integer(self, other: Grade) -> bool {
        (self - other).is_integer()
    }

    /// `true` when this grade's denominator divides `level`.
    pub fn fits_level(self, level: u64) -> bool {
        level.is_multiple_of(self.denom() as u64)
    }

    pub fn to_f64_lossy(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Grade {
    fn from(value: i64) -> Self {
        Grade::int(value)
    }
}

impl From<Ratio<i64>> for Grade {
    fn from(value: Ratio<i64>) -> Self {
        Grade(value)
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, rhs: Grade) -> Grade {
        Grade(self.0 + rhs.0)
    }
}

impl Sub for Grade {
    type Output = Grade;
    fn sub(self, rhs: Grade) -> Grade {
        Grade(self.0 - rhs.0)
    }
}

impl Neg for Grade {
    type Output = Grade;
    fn neg(self) -> Grade {
        Grade(-self.0)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Accepts `"a"` or `"a/b"` with integer `a`, `b`. Decimals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational grade {s:?} (expected \"a\" or \"a/b\")"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let den: i64 = den.parse().map_err(|_| bad())?;
        if den <= 0 {
            return Err(bad());
        }
        Grade::checked_new(num, den)
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.collect_str(self),
        }
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct GradeVisitor;

        impl Visitor<'_> for GradeVisitor {
            type Value = Grade;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a rational string \"a/b\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Grade, E> {
                Ok(Grade::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Grade, E> {
                i64::try_from(v)
                    .map(Grade::int)
                    .map_err(|_| E::custom("grade out of range"))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Grade, E> {
                Err(E::custom(format!("floating-point grade {v} not allowed; use \"a/b\"")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Grade, E> {
                v.parse().map_err(|e: Error| E::custom(e.to_string()))
            }
        }

        deserializer.deserialize_any(GradeVisitor)
    }
}

/// Least common multiple, with `lcm(0, x) = x` so it can seed folds.
pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else if b == 0 {
        a
    } else {
        a.lcm(&b)
    }
}
