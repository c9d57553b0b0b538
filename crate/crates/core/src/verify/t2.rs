//! Checks on the maximal abelian family: center containment, family size,
//! intersection, the `𝓗_D` join/union claim and the two-part partition claim.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::ElementSet;
use crate::group::FiniteGroup;
use crate::maximal_abelian::MaximalAbelianFamily;
use crate::subgroup::{closure, Span, Subgroup};
use crate::verify::report::{Counterexample, TheoremId, TheoremReport, Verdict, Witness};
use crate::verify::VerifyError;

const NONABELIAN_ONLY: &str = "hypothesis requires a nonabelian group";

/// Center containment, `r ≥ 3`, and `∩ H_i = Z`, in that order.
pub fn check_t2(g: &FiniteGroup, fam: &MaximalAbelianFamily) -> Vec<TheoremReport> {
    if g.is_abelian() {
        return [TheoremId::T2i, TheoremId::T2ii, TheoremId::T2iii]
            .into_iter()
            .map(|t| TheoremReport::not_applicable(t, g, NONABELIAN_ONLY))
            .collect();
    }
    let z = fam.center();

    let t2i = match fam.subgroups().iter().position(|h| !z.is_subgroup_of(h)) {
        None => TheoremReport::holds(
            TheoremId::T2i,
            g,
            Witness::CenterContained {
                center: z.elements(),
                r: fam.r(),
            },
        ),
        Some(index) => TheoremReport::fails(
            TheoremId::T2i,
            g,
            Counterexample::CenterNotContained {
                index,
                subgroup: fam.get(index).elements(),
                center: z.elements(),
            },
        ),
    };

    let t2ii = if fam.r() >= 3 {
        TheoremReport::holds(TheoremId::T2ii, g, Witness::FamilySize { r: fam.r() })
    } else {
        TheoremReport::fails(
            TheoremId::T2ii,
            g,
            Counterexample::TooFewMaximalAbelian {
                subgroups: fam.subgroups().iter().map(Subgroup::elements).collect(),
            },
        )
    };

    let mut meet = ElementSet::full(g.order());
    for h in fam.subgroups() {
        meet.intersect_with(h.members());
    }
    let t2iii = if &meet == z.members() {
        TheoremReport::holds(
            TheoremId::T2iii,
            g,
            Witness::FamilyIntersection {
                intersection: meet.to_vec(),
            },
        )
    } else {
        TheoremReport::fails(
            TheoremId::T2iii,
            g,
            Counterexample::IntersectionAboveCenter {
                intersection: meet.to_vec(),
                center: z.elements(),
            },
        )
    };
    vec![t2i, t2ii, t2iii]
}

/// The maximal abelian subgroups containing a pairwise intersection `D`
/// that lies strictly above the center.
#[derive(Debug, Clone)]
pub struct HdFamily {
    pub d: Subgroup,
    /// Indices into the family (`H'_1 … H'_s`).
    pub members: Vec<usize>,
    pub union_set: ElementSet,
    pub join: Subgroup,
}

impl HdFamily {
    pub fn s(&self) -> usize {
        self.members.len()
    }

    /// Every element of `D` commutes with every element of the join.
    pub fn d_central_in_join(&self, g: &FiniteGroup) -> bool {
        let d = self.d.elements();
        self.join
            .members()
            .iter()
            .all(|x| d.iter().all(|&a| g.commutes(a, x)))
    }
}

/// Builds `𝓗_D` for every distinct qualifying `D` (in order of first
/// appearance over pairs `(i, j)`) and checks `⟨𝓗_D⟩ = ∪ 𝓗_D ⊊ G`.
/// Returns an empty list when the group is abelian or Z-independent.
pub fn check_t2iv(g: &FiniteGroup, fam: &MaximalAbelianFamily) -> Vec<(HdFamily, TheoremReport)> {
    if g.is_abelian() {
        return Vec::new();
    }
    let z = fam.center().order();
    let mut seen: Vec<&Subgroup> = Vec::new();
    for (_, d) in fam.pairwise_intersections() {
        if d.order() > z && !seen.contains(&d) {
            seen.push(d);
        }
    }
    seen.into_iter()
        .map(|d| {
            let members: Vec<usize> = (0..fam.r())
                .filter(|&i| d.is_subgroup_of(fam.get(i)))
                .collect();
            let mut union_set = ElementSet::empty(g.order());
            for &i in &members {
                union_set.union_with(fam.get(i).members());
            }
            let join = closure(g, &union_set.to_vec());
            let hd = HdFamily {
                d: d.clone(),
                members,
                union_set,
                join,
            };
            let central = hd.d_central_in_join(g);
            let report = if hd.join.members() == &hd.union_set && hd.join.is_proper() {
                TheoremReport::holds(
                    TheoremId::T2iv,
                    g,
                    Witness::JoinEqualsUnion {
                        d: hd.d.elements(),
                        members: hd.members.clone(),
                        union_size: hd.union_set.len(),
                        join_size: hd.join.order(),
                        d_central_in_join: central,
                    },
                )
            } else {
                TheoremReport::fails(
                    TheoremId::T2iv,
                    g,
                    Counterexample::JoinNotUnion {
                        d: hd.d.elements(),
                        members: hd.members.iter().map(|&i| fam.get(i).elements()).collect(),
                        union: hd.union_set.to_vec(),
                        join: hd.join.elements(),
                    },
                )
            };
            (hd, report)
        })
        .collect()
}

/// Folds the per-`D` reports into one verdict.
pub fn summarize_t2iv(g: &FiniteGroup, per_d: &[(HdFamily, TheoremReport)]) -> TheoremReport {
    if g.is_abelian() {
        return TheoremReport::not_applicable(TheoremId::T2iv, g, NONABELIAN_ONLY);
    }
    if per_d.is_empty() {
        return TheoremReport::not_applicable(
            TheoremId::T2iv,
            g,
            "Z-independent: no pairwise intersection lies above the center",
        );
    }
    if let Some((_, failing)) = per_d.iter().find(|(_, r)| r.verdict == Verdict::Fails) {
        return failing.clone();
    }
    TheoremReport::holds(
        TheoremId::T2iv,
        g,
        Witness::JoinEqualsUnionAll {
            qualifying_d: per_d.len(),
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionOptions {
    /// Largest `r` searched exhaustively.
    pub cap: usize,
    /// Fall back to random partitions above `cap` instead of erroring.
    pub allow_sampling: bool,
    pub samples: u64,
    pub seed: u64,
}

pub const DEFAULT_PARTITION_CAP: usize = 20;
pub const DEFAULT_PARTITION_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_PARTITION_SEED: u64 = 0x5EED;

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions {
            cap: DEFAULT_PARTITION_CAP,
            allow_sampling: true,
            samples: DEFAULT_PARTITION_SAMPLES,
            seed: DEFAULT_PARTITION_SEED,
        }
    }
}

/// Tests whether the members selected by a side generate the whole group.
///
/// Outcomes are memoized as masks over the family: a side containing a
/// known generating side generates, and a side inside the members of a
/// known proper join does not. Only sides matching neither are closed
/// explicitly.
struct SideTester<'a> {
    g: &'a FiniteGroup,
    fam: &'a MaximalAbelianFamily,
    gens: Vec<Vec<usize>>,
    generating: Vec<ElementSet>,
    proper_joins: Vec<ElementSet>,
}

impl<'a> SideTester<'a> {
    fn new(g: &'a FiniteGroup, fam: &'a MaximalAbelianFamily) -> Self {
        let gens = fam.subgroups().iter().map(|h| h.generators(g)).collect();
        SideTester {
            g,
            fam,
            gens,
            generating: Vec::new(),
            proper_joins: Vec::new(),
        }
    }

    fn generates(&mut self, side: &ElementSet) -> bool {
        if self.generating.iter().any(|m| m.is_subset(side)) {
            return true;
        }
        if self.proper_joins.iter().any(|m| side.is_subset(m)) {
            return false;
        }
        let n = self.g.order();
        let r = self.fam.r();
        let mut span: Option<Span> = None;
        let mut prefix = ElementSet::empty(r);
        for i in side.iter() {
            prefix.insert(i);
            let span = span
                .get_or_insert_with(|| Span::from_subgroup(self.fam.get(i), self.gens[i].clone()));
            for &x in &self.gens[i] {
                span.adjoin(self.g, x);
            }
            if span.len() == n {
                // The members adjoined so far already generate.
                self.generating.push(prefix);
                return true;
            }
        }
        let joined = span.map_or_else(|| ElementSet::from_indices(n, [0]), |s| s.set);
        let inside = ElementSet::from_indices(
            r,
            (0..r).filter(|&i| self.fam.get(i).members().is_subset(&joined)),
        );
        self.proper_joins.push(inside);
        false
    }

    fn join(&self, side: &[usize]) -> Subgroup {
        let seed: Vec<usize> = side
            .iter()
            .flat_map(|&i| self.gens[i].iter().copied())
            .collect();
        closure(self.g, &seed)
    }
}

/// Every split of the family into two nonempty parts has a part that
/// generates `G`. Exhaustive over all `2^(r-1) - 1` unordered splits when
/// `r ≤ cap`; otherwise samples random splits (verdict `SAMPLED`) or fails
/// with [`VerifyError::PartitionCapExceeded`] if sampling is disallowed.
pub fn check_t2v(
    g: &FiniteGroup,
    fam: &MaximalAbelianFamily,
    opts: &PartitionOptions,
) -> Result<TheoremReport, VerifyError> {
    if g.is_abelian() {
        return Ok(TheoremReport::not_applicable(
            TheoremId::T2v,
            g,
            NONABELIAN_ONLY,
        ));
    }
    let r = fam.r();
    if r < 2 {
        return Ok(TheoremReport::not_applicable(
            TheoremId::T2v,
            g,
            "fewer than two maximal abelian subgroups: no split into two nonempty parts",
        ));
    }
    let mut tester = SideTester::new(g, fam);
    let all = ElementSet::full(r);
    // The last member always sits in part B, so each unordered split is
    // visited once; part A is a nonempty subset of the first r-1 members.
    let mut check = |part_a: &ElementSet| -> Option<Counterexample> {
        if tester.generates(part_a) {
            return None;
        }
        let part_b = all.difference(part_a);
        if tester.generates(&part_b) {
            return None;
        }
        let part_a: Vec<usize> = part_a.to_vec();
        let part_b: Vec<usize> = part_b.to_vec();
        Some(Counterexample::NonGeneratingPartition {
            join_a: tester.join(&part_a).elements(),
            join_b: tester.join(&part_b).elements(),
            part_a: part_a.iter().map(|&i| fam.get(i).elements()).collect(),
            part_b: part_b.iter().map(|&i| fam.get(i).elements()).collect(),
        })
    };
    let ambiguity = "only splits with both parts nonempty are enumerated";

    if r <= opts.cap {
        let total: u64 = (1u64 << (r - 1)) - 1;
        for mask in 1..=total {
            let part_a = ElementSet::from_indices(r, (0..r - 1).filter(|&i| mask >> i & 1 == 1));
            if let Some(cx) = check(&part_a) {
                return Ok(TheoremReport::fails(TheoremId::T2v, g, cx).with_note(ambiguity));
            }
        }
        return Ok(TheoremReport::holds(
            TheoremId::T2v,
            g,
            Witness::Partitions {
                r,
                checked: total,
                exhaustive: true,
                seed: None,
            },
        )
        .with_note(ambiguity));
    }

    if !opts.allow_sampling {
        return Err(VerifyError::PartitionCapExceeded { r, cap: opts.cap });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checked = 0;
    while checked < opts.samples {
        let mut part_a = ElementSet::empty(r);
        for i in 0..r - 1 {
            if rng.gen::<bool>() {
                part_a.insert(i);
            }
        }
        if part_a.is_empty() {
            continue;
        }
        checked += 1;
        if let Some(cx) = check(&part_a) {
            return Ok(TheoremReport::fails(TheoremId::T2v, g, cx).with_note(ambiguity));
        }
    }
    let mut report = TheoremReport::holds(
        TheoremId::T2v,
        g,
        Witness::Partitions {
            r,
            checked,
            exhaustive: false,
            seed: Some(opts.seed),
        },
    )
    .with_note(ambiguity);
    report.verdict = Verdict::Sampled;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{direct_product, family, FamilyKind};
    use crate::maximal_abelian::maximal_abelian_subgroups;

    fn setup(kind: FamilyKind, p: usize) -> (FiniteGroup, MaximalAbelianFamily) {
        let g = family(kind, p).unwrap();
        let fam = maximal_abelian_subgroups(&g);
        (g, fam)
    }

    #[test]
    fn t2_on_s3() {
        let (g, fam) = setup(FamilyKind::Symmetric, 3);
        let reports = check_t2(&g, &fam);
        assert!(reports.iter().all(|r| r.verdict == Verdict::Holds));
        assert_eq!(reports[1].witness, Some(Witness::FamilySize { r: 4 }));
        assert!(reports.iter().all(|r| r.revalidate(&g)));
    }

    #[test]
    fn t2_on_abelian_is_not_applicable() {
        let (g, fam) = setup(FamilyKind::Cyclic, 10);
        assert!(check_t2(&g, &fam)
            .iter()
            .all(|r| r.verdict == Verdict::NotApplicable));
        assert!(check_t2iv(&g, &fam).is_empty());
        assert_eq!(
            check_t2v(&g, &fam, &PartitionOptions::default())
                .unwrap()
                .verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn t2iii_on_q8() {
        let (g, fam) = setup(FamilyKind::Quaternion, 2);
        let reports = check_t2(&g, &fam);
        assert_eq!(
            reports[2].witness,
            Some(Witness::FamilyIntersection {
                intersection: fam.center().elements()
            })
        );
        assert_eq!(fam.center().order(), 2);
    }

    #[test]
    fn doctored_family_with_two_members_fails_t2ii() {
        let (g, fam) = setup(FamilyKind::Symmetric, 3);
        let fake = MaximalAbelianFamily::from_subgroups(&g, fam.subgroups()[..2].to_vec());
        let reports = check_t2(&g, &fake);
        assert_eq!(reports[1].verdict, Verdict::Fails);
        // It is not the real family, so it must not revalidate.
        assert!(!reports[1].revalidate(&g));
    }

    #[test]
    fn hd_family_in_s4() {
        let (g, fam) = setup(FamilyKind::Symmetric, 4);
        let per_d = check_t2iv(&g, &fam);
        assert!(!per_d.is_empty());
        // In S4 every qualifying D is generated by a double transposition.
        for (hd, report) in &per_d {
            assert_eq!(hd.d.order(), 2);
            assert_eq!(hd.s(), 3);
            assert_eq!(hd.union_set.len(), 8);
            assert_eq!(hd.join.order(), 8);
            assert!(hd.d_central_in_join(&g));
            assert_eq!(report.verdict, Verdict::Holds);
            assert!(report.revalidate(&g));
        }
        assert_eq!(per_d.len(), 3);
        assert_eq!(summarize_t2iv(&g, &per_d).verdict, Verdict::Holds);
    }

    #[test]
    fn z_independent_has_no_hd_families() {
        let (g, fam) = setup(FamilyKind::Quaternion, 2);
        let per_d = check_t2iv(&g, &fam);
        assert!(per_d.is_empty());
        assert_eq!(summarize_t2iv(&g, &per_d).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn s3_squared_hd_families_hold() {
        let s3 = family(FamilyKind::Symmetric, 3).unwrap();
        let g = direct_product(&s3, &s3).unwrap();
        let fam = maximal_abelian_subgroups(&g);
        let per_d = check_t2iv(&g, &fam);
        assert!(!per_d.is_empty());
        for (hd, report) in &per_d {
            assert_eq!(report.verdict, Verdict::Holds);
            assert_eq!(hd.join.members(), &hd.union_set);
            assert!(hd.join.is_proper());
        }
    }

    #[test]
    fn t2v_counts_partitions() {
        let (g, fam) = setup(FamilyKind::Quaternion, 2);
        let report = check_t2v(&g, &fam, &PartitionOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(
            report.witness,
            Some(Witness::Partitions {
                r: 3,
                checked: 3,
                exhaustive: true,
                seed: None
            })
        );
        let (g, fam) = setup(FamilyKind::Symmetric, 3);
        let report = check_t2v(&g, &fam, &PartitionOptions::default()).unwrap();
        assert!(matches!(
            report.witness,
            Some(Witness::Partitions { checked: 7, .. })
        ));
    }

    #[test]
    fn t2v_over_cap() {
        let (g, fam) = setup(FamilyKind::Dihedral, 7);
        assert_eq!(fam.r(), 8);
        let strict = PartitionOptions {
            cap: 5,
            allow_sampling: false,
            ..Default::default()
        };
        assert_eq!(
            check_t2v(&g, &fam, &strict).unwrap_err(),
            VerifyError::PartitionCapExceeded { r: 8, cap: 5 }
        );
        let sampled = PartitionOptions {
            cap: 5,
            samples: 500,
            ..Default::default()
        };
        let report = check_t2v(&g, &fam, &sampled).unwrap();
        assert_eq!(report.verdict, Verdict::Sampled);
        assert!(matches!(
            report.witness,
            Some(Witness::Partitions {
                checked: 500,
                exhaustive: false,
                ..
            })
        ));
    }

    #[test]
    fn memoized_sides_agree_with_direct_closure() {
        let (g, fam) = setup(FamilyKind::Symmetric, 4);
        let r = fam.r();
        let mut tester = SideTester::new(&g, &fam);
        for mask in 0u32..1 << r {
            let side = ElementSet::from_indices(r, (0..r).filter(|&i| mask >> i & 1 == 1));
            let seed: Vec<usize> = side.iter().flat_map(|i| fam.get(i).elements()).collect();
            let direct = closure(&g, &seed).order() == g.order();
            assert_eq!(tester.generates(&side), direct, "mask {mask:b}");
        }
    }

    #[test]
    fn doctored_partition_counterexample_does_not_revalidate() {
        // Drop the rotation subgroup from D4's family: the remaining Klein
        // subgroups split so that neither side generates.
        let (g, fam) = setup(FamilyKind::Dihedral, 4);
        let klein: Vec<Subgroup> = fam
            .subgroups()
            .iter()
            .filter(|h| h.elements().iter().all(|&a| g.element_order(a) <= 2))
            .cloned()
            .collect();
        assert_eq!(klein.len(), 2);
        let fake = MaximalAbelianFamily::from_subgroups(&g, klein);
        let report = check_t2v(&g, &fake, &PartitionOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Fails);
        assert!(!report.revalidate(&g));
    }
}
