//! Weights: positive naturals extended with infinity, ordered by divisibility.
//!
//! Every element of a complex carries a weight: vertices weigh exactly 1,
//! edges weigh at least 2 (possibly `inf`), cells weigh a finite number at
//! least 2. The order that matters is not magnitude but divisibility, with
//! infinity divisible by every weight (itself included) while dividing no
//! finite weight. [`Weight::gcd`] and [`Weight::lcm`] are meet and join in
//! that lattice.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A weight: a natural number or infinity. Displayed and serialized as a
/// plain number or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Finite(u64),
    Infinity,
}

impl Weight {
    pub const ONE: Weight = Weight::Finite(1);

    pub fn finite(n: u64) -> Weight {
        Weight::Finite(n)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Weight::Infinity)
    }

    pub fn is_finite(self) -> bool {
        !self.is_infinite()
    }

    /// Does `self` divide `m`? Infinity is divisible by every weight but
    /// divides no finite one.
    pub fn divides(self, m: Weight) -> bool {
        match (self, m) {
            (Weight::Finite(d), Weight::Finite(m)) => d != 0 && m % d == 0,
            (Weight::Finite(_), Weight::Infinity) => true,
            (Weight::Infinity, Weight::Finite(_)) => false,
            (Weight::Infinity, Weight::Infinity) => true,
        }
    }

    /// Meet in the divisibility lattice.
    pub fn gcd(self, other: Weight) -> Weight {
        match (self, other) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(gcd_u64(a, b)),
            (Weight::Finite(a), Weight::Infinity) => Weight::Finite(a),
            (Weight::Infinity, Weight::Finite(b)) => Weight::Finite(b),
            (Weight::Infinity, Weight::Infinity) => Weight::Infinity,
        }
    }

    /// Join in the divisibility lattice. Panics on overflow of finite
    /// values, which cannot happen for the desk-scale weights this crate
    /// works with.
    pub fn lcm(self, other: Weight) -> Weight {
        match (self, other) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(lcm_u64(a, b)),
            _ => Weight::Infinity,
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd_u64(a, b))
        .checked_mul(b)
        .expect("weight lcm overflow")
}

/// GCD of a collection of weights; `None` when empty.
pub fn weight_gcd<I: IntoIterator<Item = Weight>>(weights: I) -> Option<Weight> {
    weights.into_iter().reduce(Weight::gcd)
}

/// LCM of a collection of weights; `None` when empty.
pub fn weight_lcm<I: IntoIterator<Item = Weight>>(weights: I) -> Option<Weight> {
    weights.into_iter().reduce(Weight::lcm)
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(n) => write!(f, "{n}"),
            Weight::Infinity => write!(f, "inf"),
        }
    }
}

/// Error from parsing a weight out of text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid weight {0:?} (expected a natural number or \"inf\")")]
pub struct ParseWeightError(pub String);

impl FromStr for Weight {
    type Err = ParseWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Weight::Infinity);
        }
        s.parse::<u64>()
            .map(Weight::Finite)
            .map_err(|_| ParseWeightError(s.to_owned()))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Weight::Finite(n) => serializer.serialize_u64(*n),
            Weight::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct WeightVisitor;

        impl Visitor<'_> for WeightVisitor {
            type Value = Weight;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a natural number or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Weight, E> {
                Ok(Weight::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Weight, E> {
                u64::try_from(v)
                    .map(Weight::Finite)
                    .map_err(|_| E::custom("weight must be non-negative"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Weight, E> {
                if v == "inf" {
                    Ok(Weight::Infinity)
                } else {
                    Err(E::custom(format!(
                        "invalid weight string {v:?} (only \"inf\" is allowed)"
                    )))
                }
            }
        }

        deserializer.deserialize_any(WeightVisitor)
    }
}
