use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::gysin::GysinSegment;
use crate::linalg::AbelianInvariants;
use crate::report::big_to_json;

fn opt_big<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    v.as_ref().map(big_to_json).serialize(s)
}

/// What is known about `H^m` in one degree. `order` is `None` for infinite groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FingerprintEntry {
    pub degree: u32,
    #[serde(serialize_with = "opt_big")]
    pub order: Option<BigInt>,
    pub determined: bool,
    #[serde(serialize_with = "opt_big")]
    pub exponent: Option<BigInt>,
    pub structure: Option<String>,
}

impl FingerprintEntry {
    pub fn known(degree: u32, g: &AbelianInvariants) -> Self {
        FingerprintEntry {
            degree,
            order: g.order(),
            determined: true,
            exponent: g.exponent(),
            structure: Some(g.to_string()),
        }
    }

    pub fn from_segment(s: &GysinSegment) -> Self {
        match s.structure() {
            Some(g) => Self::known(s.degree, &g),
            None => FingerprintEntry {
                degree: s.degree,
                order: s.total_order.clone(),
                determined: false,
                exponent: None,
                structure: None,
            },
        }
    }

    /// Whether the recorded data prove the two groups non-isomorphic.
    pub fn differs_from(&self, o: &Self) -> bool {
        self.order != o.order || (self.determined && o.determined && self.exponent != o.exponent)
    }
}

/// Low-degree integral cohomology of one group, as far as it was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub label: String,
    pub entries: Vec<FingerprintEntry>,
}

impl Fingerprint {
    /// The first degree in which the fingerprints tell the groups apart.
    pub fn separating_degree(&self, o: &Self) -> Option<u32> {
        self.entries.iter().zip(&o.entries).find(|(a, b)| a.differs_from(b)).map(|(a, _)| a.degree)
    }

    pub fn orders(&self) -> Vec<Option<BigInt>> {
        self.entries.iter().map(|e| e.order.clone()).collect()
    }
}
