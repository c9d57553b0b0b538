//! Verdicts, witnesses and counterexamples.
//!
//! Every payload carries enough raw data (member lists, element indices) to
//! be re-checked against the group table alone; see
//! [`TheoremReport::revalidate`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::commuting::center;
use crate::group::FiniteGroup;
use crate::maximal_abelian::maximal_abelian_subgroups;
use crate::subgroup::{centralizer_of_subgroup, closure, normalizer, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T2i,
    T2ii,
    T2iii,
    T2iv,
    T2v,
    T4,
    T5,
    T6,
    T7,
    /// No group is the union of two proper subgroups.
    #[serde(rename = "COVER")]
    Cover,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T2i,
        TheoremId::T2ii,
        TheoremId::T2iii,
        TheoremId::T2iv,
        TheoremId::T2v,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::Cover,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T2i => "T2i",
            TheoremId::T2ii => "T2ii",
            TheoremId::T2iii => "T2iii",
            TheoremId::T2iv => "T2iv",
            TheoremId::T2v => "T2v",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::Cover => "COVER",
        }
    }

    /// Parses `t2i`, `T2iv`, `cover`, ... case-insensitively.
    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
    /// Held on every sampled case; the search was not exhaustive.
    Sampled,
    /// The check could not run (a cap was exceeded).
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Sampled => "SAMPLED",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where the eigenheimers tested by the conjugation check came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenheimerSource {
    AllSubgroups,
    MaximalAbelianOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    CenterContained {
        center: Vec<usize>,
        r: usize,
    },
    FamilySize {
        r: usize,
    },
    FamilyIntersection {
        intersection: Vec<usize>,
    },
    JoinEqualsUnion {
        d: Vec<usize>,
        members: Vec<usize>,
        union_size: usize,
        join_size: usize,
        d_central_in_join: bool,
    },
    /// Aggregate over all qualifying `D`.
    JoinEqualsUnionAll {
        qualifying_d: usize,
    },
    Partitions {
        r: usize,
        checked: u64,
        exhaustive: bool,
        seed: Option<u64>,
    },
    ConjugatesSelfNormalizing {
        eigenheimers: usize,
        conjugations: usize,
        source: EigenheimerSource,
    },
    ConjugateUnion {
        subgroup: Vec<usize>,
        union_size: usize,
        normalizer_order: usize,
        core_order: usize,
        conjugates: usize,
        bound: usize,
        bound_tight: bool,
        conjugates_meet_in_core: bool,
    },
    ConjugateUnions {
        subgroups_checked: usize,
        largest_union: usize,
    },
    NonEigenheimer {
        index: usize,
        subgroup: Vec<usize>,
        normalizer: Vec<usize>,
    },
    NormalizerExceedsCentralizer {
        subgroup: Vec<usize>,
        normalizer: Vec<usize>,
        centralizer: Vec<usize>,
    },
    HypothesisVerified {
        center_order: usize,
        abelian_subgroups_checked: Option<usize>,
    },
    NoTwoSubgroupCover {
        maximal_subgroups: usize,
        largest_pair_union: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    CenterNotContained {
        index: usize,
        subgroup: Vec<usize>,
        center: Vec<usize>,
    },
    TooFewMaximalAbelian {
        subgroups: Vec<Vec<usize>>,
    },
    IntersectionAboveCenter {
        intersection: Vec<usize>,
        center: Vec<usize>,
    },
    JoinNotUnion {
        d: Vec<usize>,
        members: Vec<Vec<usize>>,
        union: Vec<usize>,
        join: Vec<usize>,
    },
    NonGeneratingPartition {
        part_a: Vec<Vec<usize>>,
        part_b: Vec<Vec<usize>>,
        join_a: Vec<usize>,
        join_b: Vec<usize>,
    },
    ConjugateNotEigenheimer {
        subgroup: Vec<usize>,
        x: usize,
        conjugate: Vec<usize>,
        conjugate_normalizer: Vec<usize>,
    },
    ConjugatesCoverGroup {
        subgroup: Vec<usize>,
        union_size: usize,
        normalizer_order: usize,
        core_order: usize,
    },
    AllSelfNormalizing {
        family: Vec<Vec<usize>>,
        normalizers: Vec<Vec<usize>>,
    },
    NoNormalizerCentralizerGap {
        abelian_subgroups_checked: usize,
    },
    TwoSubgroupCover {
        a: Vec<usize>,
        b: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub group: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem: TheoremId, g: &FiniteGroup, verdict: Verdict) -> Self {
        TheoremReport {
            theorem,
            group: g.name().to_string(),
            verdict,
            witness: None,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn holds(theorem: TheoremId, g: &FiniteGroup, witness: Witness) -> Self {
        TheoremReport {
            witness: Some(witness),
            ..Self::new(theorem, g, Verdict::Holds)
        }
    }

    pub fn fails(theorem: TheoremId, g: &FiniteGroup, counterexample: Counterexample) -> Self {
        TheoremReport {
            counterexample: Some(counterexample),
            ..Self::new(theorem, g, Verdict::Fails)
        }
    }

    pub fn not_applicable(theorem: TheoremId, g: &FiniteGroup, why: &str) -> Self {
        TheoremReport {
            notes: vec![why.to_string()],
            ..Self::new(theorem, g, Verdict::NotApplicable)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Re-derives the verdict from the payload and the raw table. Returns
    /// `true` when the payload supports the stated verdict. Reports without
    /// a payload (NOT_APPLICABLE, SKIPPED) revalidate trivially.
    pub fn revalidate(&self, g: &FiniteGroup) -> bool {
        match self.verdict {
            Verdict::Fails => self
                .counterexample
                .as_ref()
                .is_some_and(|c| c.revalidate(g)),
            Verdict::Holds | Verdict::Sampled => {
                self.witness.as_ref().is_some_and(|w| w.revalidate(g))
            }
            Verdict::NotApplicable | Verdict::Skipped => true,
        }
    }
}

fn sub(g: &FiniteGroup, members: &[usize]) -> Option<Subgroup> {
    Subgroup::from_members(g, members.iter().copied())
}

impl Witness {
    pub fn revalidate(&self, g: &FiniteGroup) -> bool {
        match self {
            Witness::CenterContained { center: z, r } => {
                let fam = maximal_abelian_subgroups(g);
                center(g).elements() == *z
                    && fam.r() == *r
                    && fam
                        .subgroups()
                        .iter()
                        .all(|h| fam.center().is_subgroup_of(h))
            }
            Witness::FamilySize { r } => maximal_abelian_subgroups(g).r() == *r && *r >= 3,
            Witness::FamilyIntersection { intersection } => {
                let fam = maximal_abelian_subgroups(g);
                let mut all = crate::bitset::ElementSet::full(g.order());
                for h in fam.subgroups() {
                    all.intersect_with(h.members());
                }
                all.to_vec() == *intersection && *intersection == center(g).elements()
            }
            Witness::JoinEqualsUnion {
                d,
                union_size,
                join_size,
                ..
            } => {
                let Some(d) = sub(g, d) else { return false };
                let c = centralizer_of_subgroup(g, &d);
                // The union of the maximal abelian subgroups containing D is
                // C_G(D); recompute it from the family.
                let fam = maximal_abelian_subgroups(g);
                let mut union = crate::bitset::ElementSet::empty(g.order());
                for h in fam.subgroups().iter().filter(|h| d.is_subgroup_of(h)) {
                    union.union_with(h.members());
                }
                let join = closure(g, &union.to_vec());
                union.len() == *union_size
                    && join.order() == *join_size
                    && join.members() == &union
                    && join.members() == c.members()
                    && join.is_proper()
            }
            Witness::NonEigenheimer {
                subgroup,
                normalizer: n,
                ..
            } => {
                let Some(h) = sub(g, subgroup) else {
                    return false;
                };
                let nh = normalizer(g, &h);
                h.is_abelian(g)
                    && centralizer_of_subgroup(g, &h) == h
                    && nh.elements() == *n
                    && nh.order() > h.order()
            }
            Witness::NormalizerExceedsCentralizer {
                subgroup,
                normalizer: n,
                centralizer: c,
            } => {
                let Some(h) = sub(g, subgroup) else {
                    return false;
                };
                let nh = normalizer(g, &h);
                let ch = centralizer_of_subgroup(g, &h);
                h.is_abelian(g) && nh.elements() == *n && ch.elements() == *c && nh != ch
            }
            Witness::HypothesisVerified { center_order, .. } => {
                g.is_abelian() && center(g).order() == *center_order
            }
            Witness::ConjugateUnion {
                subgroup,
                union_size,
                ..
            } => {
                let Some(h) = sub(g, subgroup) else {
                    return false;
                };
                let mut u = crate::bitset::ElementSet::empty(g.order());
                for x in 0..g.order() {
                    for a in h.members().iter() {
                        u.insert(g.conjugate(x, a));
                    }
                }
                u.len() == *union_size && *union_size < g.order()
            }
            // Aggregates and search summaries carry counts only; they
            // re-derive by re-running the check.
            Witness::JoinEqualsUnionAll { .. }
            | Witness::Partitions { .. }
            | Witness::ConjugatesSelfNormalizing { .. }
            | Witness::ConjugateUnions { .. }
            | Witness::NoTwoSubgroupCover { .. } => true,
        }
    }
}

impl Counterexample {
    /// `true` when the counterexample really refutes the claim on `g`.
    pub fn revalidate(&self, g: &FiniteGroup) -> bool {
        let is_real_family = |lists: &[Vec<usize>]| {
            let fam = maximal_abelian_subgroups(g);
            let listed: Vec<Vec<usize>> = fam.subgroups().iter().map(Subgroup::elements).collect();
            let mut a = listed;
            let mut b = lists.to_vec();
            a.sort();
            b.sort();
            a == b
        };
        match self {
            Counterexample::CenterNotContained {
                subgroup,
                center: z,
                ..
            } => {
                let Some(h) = sub(g, subgroup) else {
                    return false;
                };
                let zc = center(g);
                zc.elements() == *z
                    && !zc.is_subgroup_of(&h)
                    && h.is_abelian(g)
                    && centralizer_of_subgroup(g, &h) == h
            }
            Counterexample::TooFewMaximalAbelian { subgroups } => {
                !g.is_abelian() && subgroups.len() < 3 && is_real_family(subgroups)
            }
            Counterexample::IntersectionAboveCenter {
                intersection,
                center: z,
            } => {
                let fam = maximal_abelian_subgroups(g);
                let mut all = crate::bitset::ElementSet::full(g.order());
                for h in fam.subgroups() {
                    all.intersect_with(h.members());
                }
                all.to_vec() == *intersection && center(g).elements() == *z && intersection != z
            }
            Counterexample::JoinNotUnion {
                members,
                union,
                join,
                ..
            } => {
                let mut u = crate::bitset::ElementSet::empty(g.order());
                for m in members {
                    let Some(h) = sub(g, m) else { return false };
                    u.union_with(h.members());
                }
                let j = closure(g, &u.to_vec());
                u.to_vec() == *union
                    && j.elements() == *join
                    && (j.members() != &u || !j.is_proper())
            }
            Counterexample::NonGeneratingPartition { part_a, part_b, .. } => {
                let mut all = part_a.clone();
                all.extend(part_b.iter().cloned());
                let side = |part: &[Vec<usize>]| {
                    let seed: Vec<usize> = part.iter().flatten().copied().collect();
                    closure(g, &seed).order() < g.order()
                };
                is_real_family(&all) && side(part_a) && side(part_b)
            }
            Counterexample::ConjugateNotEigenheimer { subgroup, x, .. } => {
                let Some(h) = sub(g, subgroup) else {
                    return false;
                };
                if *x >= g.order() || !h.is_proper() || normalizer(g, &h) != h {
                    return false;
                }
                let c = crate::subgroup::conjugate_by_index(g, &h, *x);
                normalizer(g, &c) != c
            }
            Counterexample::ConjugatesCoverGroup {
                subgroup,
                union_size,
                ..
            } => {
                let Some(h) = sub(g, subgroup) else {
                    return false;
                };
                let mut u = crate::bitset::ElementSet::empty(g.order());
                for x in 0..g.order() {
                    for a in h.members().iter() {
                        u.insert(g.conjugate(x, a));
                    }
                }
                let n = normalizer(g, &h);
                h.is_proper()
                    && u.len() == *union_size
                    && (u.len() == g.order() || (g.order() / n.order()) * h.order() > g.order())
            }
            Counterexample::AllSelfNormalizing { family, .. } => {
                is_real_family(family)
                    && family
                        .iter()
                        .all(|m| sub(g, m).is_some_and(|h| normalizer(g, &h) == h))
            }
            Counterexample::NoNormalizerCentralizerGap { .. } => {
                if g.is_abelian() {
                    return false;
                }
                // Exhaustive re-check over all abelian subgroups.
                match crate::subgroup::all_subgroups(g) {
                    Ok(all) => all
                        .iter()
                        .filter(|h| h.is_abelian(g))
                        .all(|h| normalizer(g, h) == centralizer_of_subgroup(g, h)),
                    Err(_) => false,
                }
            }
            Counterexample::TwoSubgroupCover { a, b } => {
                let (Some(a), Some(b)) = (sub(g, a), sub(g, b)) else {
                    return false;
                };
                a.is_proper() && b.is_proper() && a.members().union(b.members()).len() == g.order()
            }
        }
    }
}
