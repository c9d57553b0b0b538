//! The verification corpus: enumerated small groups, named families and
//! their direct products, deduplicated up to isomorphism.

pub mod enumerate;
pub mod fingerprint;
pub mod iso;
pub mod known;

use std::collections::HashMap;

use thiserror::Error;

use crate::families::{direct_product, family, FamilyKind};
use crate::group::{FiniteGroup, GroupError};

pub use enumerate::{enumerate_groups_of_order, ENUMERATION_CAP};
pub use fingerprint::{element_invariants, invariant_profile, ElementInvariant, Fingerprint};
pub use iso::{find_isomorphism, is_isomorphic, is_isomorphism};
pub use known::{known_groups, Construction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("order {order} exceeds the exhaustive enumeration cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub group: FiniteGroup,
    /// Family call, product expression, or `enumerated:<order>:<index>`.
    pub provenance: String,
    pub fingerprint: Fingerprint,
}

impl CatalogEntry {
    pub fn new(group: FiniteGroup, provenance: impl Into<String>) -> Self {
        let fingerprint = Fingerprint::of(&group);
        CatalogEntry {
            group,
            provenance: provenance.into(),
            fingerprint,
        }
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }
}

/// One entry per isomorphism class of each order up to `max_order`, found
/// by table search. Each class is named after the matching bundled
/// construction, and classes are listed in the order of those constructions.
pub fn enumerate_groups_up_to_order(max_order: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    if max_order > ENUMERATION_CAP {
        return Err(CatalogError::CapExceeded {
            order: max_order,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        let known = known_groups(n);
        let mut classes: Vec<(usize, FiniteGroup)> = enumerate_groups_of_order(n)?
            .into_iter()
            .map(|g| {
                let rank = known
                    .iter()
                    .position(|c| is_isomorphic(&c.group, &g))
                    .unwrap_or(known.len());
                let name = known
                    .get(rank)
                    .map_or_else(|| format!("G{n}"), |c| c.group.name().to_string());
                (rank, g.with_name(name))
            })
            .collect();
        classes.sort_by_key(|(rank, _)| *rank);
        for (i, (_, g)) in classes.into_iter().enumerate() {
            out.push(CatalogEntry::new(g, format!("enumerated:{n}:{}", i + 1)));
        }
    }
    Ok(out)
}

/// Accumulates entries, dropping any isomorphic to one already held.
/// Candidates are bucketed by fingerprint and element-invariant profile;
/// the backtracking test only runs within a bucket.
#[derive(Default)]
pub struct Deduper {
    entries: Vec<CatalogEntry>,
    buckets: HashMap<(Fingerprint, Vec<ElementInvariant>), Vec<usize>>,
}

impl Deduper {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `true` when the entry was new.
    pub fn insert(&mut self, entry: CatalogEntry) -> bool {
        let key = (entry.fingerprint.clone(), invariant_profile(&entry.group));
        let bucket = self.buckets.entry(key).or_default();
        if bucket
            .iter()
            .any(|&i| is_isomorphic(&self.entries[i].group, &entry.group))
        {
            return false;
        }
        bucket.push(self.entries.len());
        self.entries.push(entry);
        true
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<CatalogEntry> {
        self.entries
    }
}

fn family_entry(kind: FamilyKind, p: usize) -> CatalogEntry {
    CatalogEntry::new(
        family(kind, p).expect("parameter in range"),
        format!("family {kind} {p}"),
    )
}

/// The deterministic sweep corpus up to `max_order`: every enumerated class
/// of order ≤ 16; cyclic, dihedral and generalized quaternion groups;
/// S3, S4, S5, A4, A5; then direct products of two of those (no trivial
/// factor). Duplicates up to isomorphism keep their first occurrence.
/// Sorted by order, then by insertion.
pub fn standard_corpus(max_order: usize) -> Vec<CatalogEntry> {
    let mut dedup = Deduper::new();
    for e in enumerate_groups_up_to_order(max_order.min(ENUMERATION_CAP)).expect("within cap") {
        dedup.insert(e);
    }
    for n in 1..=max_order {
        dedup.insert(family_entry(FamilyKind::Cyclic, n));
    }
    for n in (3..).take_while(|n| 2 * n <= max_order) {
        dedup.insert(family_entry(FamilyKind::Dihedral, n));
    }
    for m in (2..).take_while(|m| 4 * m <= max_order) {
        dedup.insert(family_entry(FamilyKind::Quaternion, m));
    }
    for (kind, p) in [
        (FamilyKind::Symmetric, 3),
        (FamilyKind::Symmetric, 4),
        (FamilyKind::Symmetric, 5),
        (FamilyKind::Alternating, 4),
        (FamilyKind::Alternating, 5),
    ] {
        if kind.order_of(p).is_some_and(|o| o <= max_order) {
            dedup.insert(family_entry(kind, p));
        }
    }

    let base: Vec<CatalogEntry> = dedup
        .entries()
        .iter()
        .filter(|e| e.group.order() > 1)
        .cloned()
        .collect();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.group.order() * b.group.order() > max_order {
                continue;
            }
            let g = direct_product(&a.group, &b.group).expect("within order cap");
            dedup.insert(CatalogEntry::new(
                g,
                format!("product({}, {})", a.provenance, b.provenance),
            ));
        }
    }

    let mut entries: Vec<(usize, CatalogEntry)> =
        dedup.into_entries().into_iter().enumerate().collect();
    entries.sort_by_key(|(i, e)| (e.group.order(), *i));
    entries.into_iter().map(|(_, e)| e).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_constructions_to_twelve() {
        let entries = enumerate_groups_up_to_order(12).unwrap();
        for n in 1..=12 {
            let found: Vec<&CatalogEntry> =
                entries.iter().filter(|e| e.group.order() == n).collect();
            let known = known_groups(n);
            assert_eq!(found.len(), known.len(), "order {n}");
            for (e, c) in found.iter().zip(&known) {
                assert!(is_isomorphic(&e.group, &c.group));
                assert_eq!(e.name(), c.group.name());
            }
        }
        assert_eq!(entries[0].provenance, "enumerated:1:1");
    }

    #[test]
    fn tiny_corpora() {
        let one = standard_corpus(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].group.order(), 1);
        let eight = standard_corpus(8);
        assert_eq!(eight.iter().filter(|e| e.group.order() == 8).count(), 5);
        for w in eight.windows(2) {
            assert!(w[0].group.order() <= w[1].group.order());
        }
    }

    #[test]
    fn deduper_drops_isomorphic_copies() {
        let mut d = Deduper::new();
        assert!(d.insert(family_entry(FamilyKind::Symmetric, 3)));
        assert!(!d.insert(family_entry(FamilyKind::Dihedral, 3)));
        assert!(d.insert(family_entry(FamilyKind::Cyclic, 6)));
        assert_eq!(d.entries().len(), 2);
    }
}
