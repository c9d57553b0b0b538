//! Eigenheimers, conjugate unions, the non-eigenheimer search, the
//! normalizer/centralizer criterion for commutativity, and the two-subgroup
//! cover check.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::bitset::ElementSet;
use crate::group::FiniteGroup;
use crate::maximal_abelian::MaximalAbelianFamily;
use crate::subgroup::{
    all_subgroups, centralizer_of_subgroup, conjugate_by_index, cyclic_subgroups, normalizer,
    Subgroup,
};
use crate::verify::report::{Counterexample, EigenheimerSource, TheoremId, TheoremReport, Witness};
use crate::verify::zclass::{classify_z, ZVerdict};
use crate::verify::VerifyError;

/// A proper subgroup equal to its own normalizer. `H = G` is rejected.
pub fn is_eigenheimer(g: &FiniteGroup, h: &Subgroup) -> Result<bool, VerifyError> {
    if !h.is_proper() {
        return Err(VerifyError::NotProper { order: g.order() });
    }
    Ok(&normalizer(g, h) == h)
}

fn self_normalizing(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.is_proper() && &normalizer(g, h) == h
}

/// Every conjugate of every eigenheimer is an eigenheimer.
///
/// With a full subgroup list, the eigenheimers are found among all proper
/// subgroups and conjugates are looked up in that set. Without one, only
/// the eigenheimers of the maximal abelian family are tested and each
/// conjugate's normalizer is computed directly.
pub fn check_t4(
    g: &FiniteGroup,
    fam: &MaximalAbelianFamily,
    subgroups: Option<&[Subgroup]>,
) -> TheoremReport {
    let (eigen, source): (Vec<&Subgroup>, _) = match subgroups {
        Some(all) => (
            all.iter().filter(|h| self_normalizing(g, h)).collect(),
            EigenheimerSource::AllSubgroups,
        ),
        None => (
            fam.subgroups()
                .iter()
                .filter(|h| self_normalizing(g, h))
                .collect(),
            EigenheimerSource::MaximalAbelianOnly,
        ),
    };
    if eigen.is_empty() {
        return TheoremReport::not_applicable(TheoremId::T4, g, "no eigenheimers");
    }
    let known: HashSet<&ElementSet> = match source {
        EigenheimerSource::AllSubgroups => eigen.iter().map(|h| h.members()).collect(),
        EigenheimerSource::MaximalAbelianOnly => HashSet::new(),
    };
    let mut verdicts: HashMap<ElementSet, bool> = HashMap::new();
    let mut conjugations = 0;
    for h in &eigen {
        for x in 0..g.order() {
            conjugations += 1;
            let c = conjugate_by_index(g, h, x);
            if known.contains(c.members()) {
                continue;
            }
            let ok = *verdicts
                .entry(c.members().clone())
                .or_insert_with(|| self_normalizing(g, &c));
            if !ok {
                return TheoremReport::fails(
                    TheoremId::T4,
                    g,
                    Counterexample::ConjugateNotEigenheimer {
                        subgroup: h.elements(),
                        x,
                        conjugate: c.elements(),
                        conjugate_normalizer: normalizer(g, &c).elements(),
                    },
                );
            }
        }
    }
    let report = TheoremReport::holds(
        TheoremId::T4,
        g,
        Witness::ConjugatesSelfNormalizing {
            eigenheimers: eigen.len(),
            conjugations,
            source,
        },
    );
    match source {
        EigenheimerSource::AllSubgroups => report,
        EigenheimerSource::MaximalAbelianOnly => report
            .with_note("subgroup list unavailable: only maximal abelian eigenheimers were tested"),
    }
}

/// The union of all conjugates of a proper subgroup, and the counting data
/// that bounds it.
#[derive(Debug, Clone)]
pub struct ConjugateUnion {
    pub union: ElementSet,
    pub normalizer: Subgroup,
    /// `∩_x xHx⁻¹`
    pub core: Subgroup,
    /// The distinct conjugates, in canonical order.
    pub conjugates: Vec<Subgroup>,
}

impl ConjugateUnion {
    pub fn of(g: &FiniteGroup, h: &Subgroup) -> Self {
        let n = g.order();
        let conjugates: BTreeSet<Subgroup> = (0..n).map(|x| conjugate_by_index(g, h, x)).collect();
        let mut union = ElementSet::empty(n);
        let mut core = ElementSet::full(n);
        for c in &conjugates {
            union.union_with(c.members());
            core.intersect_with(c.members());
        }
        ConjugateUnion {
            union,
            normalizer: normalizer(g, h),
            core: Subgroup::from_set_unchecked(core),
            conjugates: conjugates.into_iter().collect(),
        }
    }

    /// `[G : N_G(H)]`
    pub fn index(&self) -> usize {
        self.union.universe() / self.normalizer.order()
    }

    /// `[G : N_G(H)]·(h − d) + d`
    pub fn bound(&self, h: &Subgroup) -> usize {
        let d = self.core.order();
        self.index() * (h.order() - d) + d
    }

    pub fn conjugates_meet_in_core(&self) -> bool {
        self.conjugates.iter().enumerate().all(|(i, a)| {
            self.conjugates[i + 1..]
                .iter()
                .all(|b| a.members().intersection_len(b.members()) == self.core.order())
        })
    }
}

/// The conjugates of a proper subgroup do not cover the group, with the
/// counting chain `[G:N] ≤ g/h` and `|∪ xHx⁻¹| ≤ [G:N](h − d) + d`.
pub fn check_t5(g: &FiniteGroup, h: &Subgroup) -> Result<TheoremReport, VerifyError> {
    if !h.is_proper() {
        return Err(VerifyError::NotProper { order: g.order() });
    }
    let cu = ConjugateUnion::of(g, h);
    let n = g.order();
    let bound = cu.bound(h);
    let holds = cu.union.len() < n && cu.index() * h.order() <= n && cu.union.len() <= bound;
    if !holds {
        return Ok(TheoremReport::fails(
            TheoremId::T5,
            g,
            Counterexample::ConjugatesCoverGroup {
                subgroup: h.elements(),
                union_size: cu.union.len(),
                normalizer_order: cu.normalizer.order(),
                core_order: cu.core.order(),
            },
        ));
    }
    Ok(TheoremReport::holds(
        TheoremId::T5,
        g,
        Witness::ConjugateUnion {
            subgroup: h.elements(),
            union_size: cu.union.len(),
            normalizer_order: cu.normalizer.order(),
            core_order: cu.core.order(),
            conjugates: cu.conjugates.len(),
            bound,
            bound_tight: cu.union.len() == bound,
            conjugates_meet_in_core: cu.conjugates_meet_in_core(),
        },
    ))
}

/// [`check_t5`] over every proper subgroup in `subgroups`, folded into one
/// report (the first failure, or a summary).
pub fn check_t5_all(g: &FiniteGroup, subgroups: &[Subgroup]) -> TheoremReport {
    let mut checked = 0;
    let mut largest = 0;
    for h in subgroups.iter().filter(|h| h.is_proper()) {
        let report = check_t5(g, h).expect("subgroup is proper");
        if report.verdict == crate::verify::Verdict::Fails {
            return report;
        }
        if let Some(Witness::ConjugateUnion { union_size, .. }) = report.witness {
            largest = largest.max(union_size);
        }
        checked += 1;
    }
    if checked == 0 {
        return TheoremReport::not_applicable(TheoremId::T5, g, "no proper subgroups");
    }
    TheoremReport::holds(
        TheoremId::T5,
        g,
        Witness::ConjugateUnions {
            subgroups_checked: checked,
            largest_union: largest,
        },
    )
}

/// Some maximal abelian subgroup of a nonabelian group is not an
/// eigenheimer. The witness is the first such member in family order.
pub fn check_t6(g: &FiniteGroup, fam: &MaximalAbelianFamily) -> TheoremReport {
    if g.is_abelian() {
        return TheoremReport::not_applicable(
            TheoremId::T6,
            g,
            "hypothesis requires a nonabelian group",
        );
    }
    let normalizers: Vec<Subgroup> = fam.subgroups().iter().map(|h| normalizer(g, h)).collect();
    let found = normalizers
        .iter()
        .zip(fam.subgroups())
        .position(|(n, h)| n != h);
    let report = match found {
        Some(index) => TheoremReport::holds(
            TheoremId::T6,
            g,
            Witness::NonEigenheimer {
                index,
                subgroup: fam.get(index).elements(),
                normalizer: normalizers[index].elements(),
            },
        ),
        None => TheoremReport::fails(
            TheoremId::T6,
            g,
            Counterexample::AllSelfNormalizing {
                family: fam.subgroups().iter().map(Subgroup::elements).collect(),
                normalizers: normalizers.iter().map(Subgroup::elements).collect(),
            },
        ),
    };
    counting_notes(g, fam, &normalizers)
        .into_iter()
        .fold(report, TheoremReport::with_note)
}

/// Logs whether the counting identities used for Z-independent groups
/// hold. These are observations, not part of the verdict.
fn counting_notes(
    g: &FiniteGroup,
    fam: &MaximalAbelianFamily,
    normalizers: &[Subgroup],
) -> Vec<String> {
    if classify_z(g, fam).verdict != ZVerdict::ZIndependent {
        return Vec::new();
    }
    let n = g.order();
    let z = fam.center().order();
    let total: usize = fam.subgroups().iter().map(|h| h.order() - z).sum();
    let mut notes = vec![format!(
        "counting: sum of (|H_i| - z) = {total}, g - z = {}, {}",
        n - z,
        if total == n - z { "equal" } else { "differ" }
    )];
    let h0 = fam.get(0);
    let one_class = normalizers[0].order() * fam.r() == n
        && fam.subgroups().iter().all(|h| h.order() == h0.order());
    if one_class
        && fam
            .subgroups()
            .iter()
            .all(|h| (0..n).any(|x| &conjugate_by_index(g, h0, x) == h))
    {
        let rhs = (n / h0.order()) * (h0.order() - z);
        notes.push(format!(
            "counting: all members conjugate; (g/h)(h - z) = {rhs}, g - z = {}, {}",
            n - z,
            if rhs == n - z { "equal" } else { "differ" }
        ));
    }
    notes
}

/// If every abelian subgroup has `N_G(H) = C_G(H)` then `G` is abelian.
///
/// Abelian `G`: the hypothesis is verified (`N = C = G` for every
/// subgroup). Nonabelian `G`: an abelian `H` with `N ≠ C` is searched for
/// among the maximal abelian family, then the cyclic subgroups, then every
/// abelian subgroup; the last step needs the full subgroup list and is
/// computed on demand when `subgroups` is `None`.
pub fn check_t7(
    g: &FiniteGroup,
    fam: &MaximalAbelianFamily,
    subgroups: Option<&[Subgroup]>,
) -> Result<TheoremReport, VerifyError> {
    if g.is_abelian() {
        let checked = subgroups.map(|all| {
            for h in all {
                debug_assert_eq!(normalizer(g, h), centralizer_of_subgroup(g, h));
            }
            all.len()
        });
        return Ok(TheoremReport::holds(
            TheoremId::T7,
            g,
            Witness::HypothesisVerified {
                center_order: g.order(),
                abelian_subgroups_checked: checked,
            },
        ));
    }
    let gap = |h: &Subgroup| -> Option<TheoremReport> {
        let n = normalizer(g, h);
        let c = centralizer_of_subgroup(g, h);
        (n != c).then(|| {
            TheoremReport::holds(
                TheoremId::T7,
                g,
                Witness::NormalizerExceedsCentralizer {
                    subgroup: h.elements(),
                    normalizer: n.elements(),
                    centralizer: c.elements(),
                },
            )
        })
    };
    if let Some(r) = fam.subgroups().iter().find_map(gap) {
        return Ok(r);
    }
    if let Some(r) = cyclic_subgroups(g).iter().find_map(|(_, h)| gap(h)) {
        return Ok(r);
    }
    let owned;
    let all = match subgroups {
        Some(all) => all,
        None => {
            owned = all_subgroups(g)?;
            &owned
        }
    };
    let abelian: Vec<&Subgroup> = all.iter().filter(|h| h.is_abelian(g)).collect();
    if let Some(r) = abelian.iter().find_map(|h| gap(h)) {
        return Ok(r);
    }
    Ok(TheoremReport::fails(
        TheoremId::T7,
        g,
        Counterexample::NoNormalizerCentralizerGap {
            abelian_subgroups_checked: abelian.len(),
        },
    ))
}

/// Proper subgroups contained in no larger proper subgroup.
pub fn maximal_proper_subgroups(subgroups: &[Subgroup]) -> Vec<&Subgroup> {
    let proper: Vec<&Subgroup> = subgroups.iter().filter(|h| h.is_proper()).collect();
    proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
        })
        .copied()
        .collect()
}

/// No two proper subgroups cover the group. A covering pair could be
/// enlarged to a covering pair of maximal proper subgroups (which are
/// distinct, or one would cover alone), so only those pairs are checked.
pub fn two_subgroup_cover_check(g: &FiniteGroup, subgroups: &[Subgroup]) -> TheoremReport {
    let maximal = maximal_proper_subgroups(subgroups);
    let mut largest: Option<usize> = None;
    for (i, a) in maximal.iter().enumerate() {
        for b in &maximal[i + 1..] {
            let u = a.members().union(b.members()).len();
            if u == g.order() {
                return TheoremReport::fails(
                    TheoremId::Cover,
                    g,
                    Counterexample::TwoSubgroupCover {
                        a: a.elements(),
                        b: b.elements(),
                    },
                );
            }
            largest = Some(largest.map_or(u, |l| l.max(u)));
        }
    }
    TheoremReport::holds(
        TheoremId::Cover,
        g,
        Witness::NoTwoSubgroupCover {
            maximal_subgroups: maximal.len(),
            largest_pair_union: largest,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{direct_product, family, FamilyKind};
    use crate::maximal_abelian::maximal_abelian_subgroups;
    use crate::verify::Verdict;

    fn group(kind: FamilyKind, p: usize) -> FiniteGroup {
        family(kind, p).unwrap()
    }

    fn sub_of_order(g: &FiniteGroup, order: usize, pred: impl Fn(&Subgroup) -> bool) -> Subgroup {
        all_subgroups(g)
            .unwrap()
            .into_iter()
            .find(|h| h.order() == order && pred(h))
            .unwrap()
    }

    /// Brute-force normalizer: scan every x and compare whole conjugates.
    fn naive_normalizer(g: &FiniteGroup, h: &Subgroup) -> Vec<usize> {
        (0..g.order())
            .filter(|&x| h.members().iter().all(|a| h.contains(g.conjugate(x, a))))
            .collect()
    }

    #[test]
    fn eigenheimers_in_s3() {
        let g = group(FamilyKind::Symmetric, 3);
        let t = sub_of_order(&g, 2, |_| true);
        assert!(is_eigenheimer(&g, &t).unwrap());
        assert_eq!(naive_normalizer(&g, &t), t.elements());
        let rot = sub_of_order(&g, 3, |_| true);
        assert!(!is_eigenheimer(&g, &rot).unwrap());
        assert_eq!(
            is_eigenheimer(&g, &Subgroup::whole(&g)),
            Err(VerifyError::NotProper { order: 6 })
        );
    }

    #[test]
    fn abelian_groups_have_no_eigenheimers() {
        let g = group(FamilyKind::Cyclic, 12);
        for h in all_subgroups(&g).unwrap().iter().filter(|h| h.is_proper()) {
            assert!(!is_eigenheimer(&g, h).unwrap());
        }
        let fam = maximal_abelian_subgroups(&g);
        let all = all_subgroups(&g).unwrap();
        assert_eq!(
            check_t4(&g, &fam, Some(&all)).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn t4_on_s3_and_s4() {
        for g in [
            group(FamilyKind::Symmetric, 3),
            group(FamilyKind::Symmetric, 4),
        ] {
            let fam = maximal_abelian_subgroups(&g);
            let all = all_subgroups(&g).unwrap();
            let report = check_t4(&g, &fam, Some(&all));
            assert_eq!(report.verdict, Verdict::Holds);
            // Brute-force: every conjugate of every eigenheimer has a naive
            // normalizer equal to itself.
            let eigen: Vec<&Subgroup> = all
                .iter()
                .filter(|h| h.is_proper() && naive_normalizer(&g, h) == h.elements())
                .collect();
            for h in &eigen {
                for x in 0..g.order() {
                    let c = conjugate_by_index(&g, h, x);
                    assert_eq!(naive_normalizer(&g, &c), c.elements());
                }
            }
            match report.witness {
                Some(Witness::ConjugatesSelfNormalizing { eigenheimers, .. }) => {
                    assert_eq!(eigenheimers, eigen.len())
                }
                ref w => panic!("unexpected witness {w:?}"),
            }
        }
        // S4's Sylow 2-subgroups are eigenheimers.
        let g = group(FamilyKind::Symmetric, 4);
        let sylow = sub_of_order(&g, 8, |_| true);
        assert!(is_eigenheimer(&g, &sylow).unwrap());
    }

    #[test]
    fn t4_without_subgroup_list_uses_family() {
        let g = group(FamilyKind::Symmetric, 3);
        let fam = maximal_abelian_subgroups(&g);
        let report = check_t4(&g, &fam, None);
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(matches!(
            report.witness,
            Some(Witness::ConjugatesSelfNormalizing {
                eigenheimers: 3,
                source: EigenheimerSource::MaximalAbelianOnly,
                ..
            })
        ));
    }

    #[test]
    fn t5_on_s3_transposition() {
        let g = group(FamilyKind::Symmetric, 3);
        let t = sub_of_order(&g, 2, |_| true);
        let report = check_t5(&g, &t).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        match report.witness {
            Some(Witness::ConjugateUnion {
                union_size,
                conjugates,
                bound,
                bound_tight,
                conjugates_meet_in_core,
                ..
            }) => {
                assert_eq!(union_size, 4);
                assert_eq!(conjugates, 3);
                assert_eq!(bound, 4);
                assert!(bound_tight && conjugates_meet_in_core);
            }
            ref w => panic!("unexpected witness {w:?}"),
        }
        assert!(report.revalidate(&g));
        assert!(check_t5(&g, &Subgroup::whole(&g)).is_err());
    }

    #[test]
    fn t5_normal_and_trivial() {
        let g = group(FamilyKind::Symmetric, 4);
        let v4 = sub_of_order(&g, 4, |h| h.is_normal(&g));
        let cu = ConjugateUnion::of(&g, &v4);
        assert_eq!(cu.union, *v4.members());
        assert_eq!(cu.conjugates.len(), 1);
        let trivial = Subgroup::trivial(&g);
        let report = check_t5(&g, &trivial).unwrap();
        assert!(matches!(
            report.witness,
            Some(Witness::ConjugateUnion { union_size: 1, .. })
        ));
    }

    #[test]
    fn t5_bound_tight_iff_conjugates_meet_in_core() {
        let s3 = group(FamilyKind::Symmetric, 3);
        for g in [
            group(FamilyKind::Symmetric, 4),
            group(FamilyKind::Alternating, 5),
            group(FamilyKind::Dihedral, 6),
            direct_product(&s3, &s3).unwrap(),
        ] {
            for h in all_subgroups(&g).unwrap().iter().filter(|h| h.is_proper()) {
                let cu = ConjugateUnion::of(&g, h);
                assert_eq!(cu.conjugates.len(), cu.index());
                assert_eq!(cu.union.len() == cu.bound(h), cu.conjugates_meet_in_core());
                assert!(cu.union.len() < g.order());
            }
        }
    }

    #[test]
    fn t6_witnesses() {
        let g = group(FamilyKind::Quaternion, 2);
        let fam = maximal_abelian_subgroups(&g);
        let report = check_t6(&g, &fam);
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(matches!(
            report.witness,
            Some(Witness::NonEigenheimer { index: 0, .. })
        ));
        // Q8 is Z-independent, so the counting identity is logged.
        assert!(report.notes.iter().any(|n| n.contains("equal")));

        let g = group(FamilyKind::Symmetric, 3);
        let fam = maximal_abelian_subgroups(&g);
        let report = check_t6(&g, &fam);
        match report.witness {
            Some(Witness::NonEigenheimer {
                ref subgroup,
                ref normalizer,
                ..
            }) => {
                assert_eq!(subgroup.len(), 3);
                assert_eq!(normalizer.len(), 6);
            }
            ref w => panic!("unexpected witness {w:?}"),
        }

        let g = group(FamilyKind::Symmetric, 4);
        let fam = maximal_abelian_subgroups(&g);
        let report = check_t6(&g, &fam);
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.revalidate(&g));
        let v4 = sub_of_order(&g, 4, |h| h.is_normal(&g));
        let witnesses: Vec<&Subgroup> = fam
            .subgroups()
            .iter()
            .filter(|h| &normalizer(&g, h) != *h)
            .collect();
        assert!(witnesses.contains(&&v4));
    }

    #[test]
    fn t6_doctored_family_fails_loudly() {
        let g = group(FamilyKind::Symmetric, 3);
        let fam = maximal_abelian_subgroups(&g);
        let transpositions: Vec<Subgroup> = fam
            .subgroups()
            .iter()
            .filter(|h| h.order() == 2)
            .cloned()
            .collect();
        let fake = MaximalAbelianFamily::from_subgroups(&g, transpositions);
        let report = check_t6(&g, &fake);
        assert_eq!(report.verdict, Verdict::Fails);
        assert!(!report.revalidate(&g));
    }

    #[test]
    fn t6_abelian_not_applicable() {
        let g = group(FamilyKind::Klein, 4);
        let fam = maximal_abelian_subgroups(&g);
        assert_eq!(check_t6(&g, &fam).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn t7_cases() {
        let g = group(FamilyKind::Cyclic, 8);
        let fam = maximal_abelian_subgroups(&g);
        let all = all_subgroups(&g).unwrap();
        let report = check_t7(&g, &fam, Some(&all)).unwrap();
        assert_eq!(
            report.witness,
            Some(Witness::HypothesisVerified {
                center_order: 8,
                abelian_subgroups_checked: Some(4)
            })
        );
        for (kind, p) in [(FamilyKind::Symmetric, 3), (FamilyKind::Quaternion, 2)] {
            let g = group(kind, p);
            let fam = maximal_abelian_subgroups(&g);
            let report = check_t7(&g, &fam, None).unwrap();
            assert_eq!(report.verdict, Verdict::Holds);
            assert!(report.revalidate(&g));
            match report.witness {
                Some(Witness::NormalizerExceedsCentralizer {
                    subgroup,
                    normalizer,
                    centralizer,
                }) => {
                    assert_eq!(normalizer.len(), g.order());
                    assert_eq!(centralizer, subgroup);
                }
                ref w => panic!("unexpected witness {w:?}"),
            }
        }
    }

    /// Every pair of subgroups, not just maximal ones.
    fn naive_cover(g: &FiniteGroup) -> Option<usize> {
        let all = all_subgroups(g).unwrap();
        let proper: Vec<&Subgroup> = all.iter().filter(|h| h.is_proper()).collect();
        let mut best = None;
        for (i, a) in proper.iter().enumerate() {
            for b in &proper[i + 1..] {
                let u = a.members().union(b.members()).len();
                best = Some(best.map_or(u, |x: usize| x.max(u)));
            }
        }
        best
    }

    #[test]
    fn two_subgroup_cover() {
        let cases = [
            (group(FamilyKind::Klein, 4), Some(3)),
            (group(FamilyKind::Symmetric, 3), Some(4)),
            (group(FamilyKind::Cyclic, 2), None),
        ];
        for (g, expected) in cases {
            let all = all_subgroups(&g).unwrap();
            let report = two_subgroup_cover_check(&g, &all);
            assert_eq!(report.verdict, Verdict::Holds);
            match report.witness {
                Some(Witness::NoTwoSubgroupCover {
                    largest_pair_union, ..
                }) => {
                    assert_eq!(largest_pair_union, expected, "{}", g.name())
                }
                ref w => panic!("unexpected witness {w:?}"),
            }
        }
        for g in [
            group(FamilyKind::Symmetric, 4),
            group(FamilyKind::Quaternion, 2),
        ] {
            let all = all_subgroups(&g).unwrap();
            let report = two_subgroup_cover_check(&g, &all);
            let best = naive_cover(&g).unwrap();
            assert!(best < g.order());
            assert!(matches!(
                report.witness,
                Some(Witness::NoTwoSubgroupCover { largest_pair_union: Some(u), .. }) if u == best
            ));
        }
    }

    #[test]
    fn doctored_cover_is_rejected() {
        // A non-subgroup pair must not revalidate as a cover.
        let g = group(FamilyKind::Klein, 4);
        let cx = Counterexample::TwoSubgroupCover {
            a: vec![0, 1],
            b: vec![2, 3],
        };
        assert!(!cx.revalidate(&g));
    }
}
