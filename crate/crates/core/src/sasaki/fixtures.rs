//! Named Sasakian structures with known basic Hodge data.
//!
//! The two structures on `21#(S^2 x S^3)` have identical basic Betti
//! numbers but different diamonds; together with the round spheres they
//! exercise every validator.

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::{sphere_diamond, HodgeDiamond};

/// Number of closed leaves of the characteristic foliation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeafCount {
    Finite(u64),
    Infinite,
}

impl Serialize for LeafCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            LeafCount::Finite(k) => serializer.serialize_u64(*k),
            LeafCount::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for LeafCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LeafCountVisitor;
        impl Visitor<'_> for LeafCountVisitor {
            type Value = LeafCount;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a nonnegative integer or the string \"infinite\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<LeafCount, E> {
                Ok(LeafCount::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<LeafCount, E> {
                u64::try_from(v)
                    .map(LeafCount::Finite)
                    .map_err(|_| E::custom("closed_leaves must be nonnegative"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<LeafCount, E> {
                if v == "infinite" {
                    Ok(LeafCount::Infinite)
                } else {
                    Err(E::custom("expected \"infinite\""))
                }
            }
        }
        deserializer.deserialize_any(LeafCountVisitor)
    }
}

/// Sign of the basic first Chern class, when known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Positivity {
    Positive,
    Negative,
    Null,
    Unknown,
}

/// A Sasakian structure at the level of its computable invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SasakiStructureRecord {
    pub name: String,
    pub diamond: HodgeDiamond,
    pub closed_leaf_count: LeafCount,
    pub positivity: Positivity,
}

/// Built-in structures: the circle bundle over a K3 surface and the
/// positive link structure on `21#(S^2 x S^3)`, and the round spheres
/// `S^3 .. S^11`.
pub fn builtin_fixtures() -> Vec<SasakiStructureRecord> {
    let mut records = vec![
        SasakiStructureRecord {
            name: "21#(S^2 x S^3), circle bundle over a K3 surface".into(),
            diamond: HodgeDiamond::new(
                2,
                vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]],
            )
            .expect("fixture shape"),
            // regular: every leaf is closed
            closed_leaf_count: LeafCount::Infinite,
            // the K3 surface has trivial canonical bundle
            positivity: Positivity::Null,
        },
        SasakiStructureRecord {
            name: "21#(S^2 x S^3), positive link".into(),
            diamond: HodgeDiamond::diagonal(&[1, 22, 1]),
            closed_leaf_count: LeafCount::Infinite,
            positivity: Positivity::Positive,
        },
    ];
    for n in 1..=5 {
        records.push(SasakiStructureRecord {
            name: format!("S^{} (round)", 2 * n + 1),
            diamond: sphere_diamond(n),
            closed_leaf_count: LeafCount::Infinite,
            positivity: Positivity::Positive,
        });
    }
    records
}
