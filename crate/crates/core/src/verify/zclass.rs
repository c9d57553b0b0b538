use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::maximal_abelian::MaximalAbelianFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ZVerdict {
    ZIndependent,
    ZDependent,
    NotApplicable,
}

impl ZVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ZVerdict::ZIndependent => "Z_INDEPENDENT",
            ZVerdict::ZDependent => "Z_DEPENDENT",
            ZVerdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

/// `H_i ∩ H_j = D` with `Z ⊊ D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZWitness {
    pub i: usize,
    pub j: usize,
    pub d: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZClassification {
    pub verdict: ZVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ZWitness>,
}

/// Z-independent iff every pairwise intersection of maximal abelian
/// subgroups is exactly the center. The witness for Z-dependence is the
/// lexicographically smallest pair `(i, j)`.
pub fn classify_z(g: &FiniteGroup, fam: &MaximalAbelianFamily) -> ZClassification {
    if g.is_abelian() {
        return ZClassification {
            verdict: ZVerdict::NotApplicable,
            witness: None,
        };
    }
    // Every member contains Z, so "strictly above Z" is a size test.
    let z = fam.center().order();
    let witness = fam
        .pairwise_intersections()
        .find(|(_, d)| d.order() > z)
        .map(|((i, j), d)| ZWitness {
            i,
            j,
            d: d.elements(),
        });
    ZClassification {
        verdict: if witness.is_some() {
            ZVerdict::ZDependent
        } else {
            ZVerdict::ZIndependent
        },
        witness,
    }
}
