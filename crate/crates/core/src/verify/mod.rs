//! Mechanical checks of structural claims about maximal abelian subgroups.
//!
//! Checkers never assume a claim; each one recomputes the objects involved
//! and returns a [`TheoremReport`] with a witness or a counterexample.

pub mod report;
pub mod t2;
pub mod theorems;
pub mod zclass;

use std::time::Instant;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::maximal_abelian::{
    maximal_abelian_by_centralizer_descent, maximal_abelian_from_subgroups,
    maximal_abelian_subgroups, MaximalAbelianFamily,
};
use crate::subgroup::{
    all_subgroups_capped, cyclic_subgroups, Subgroup, SubgroupError, DEFAULT_ORACLE_CAP,
};

pub use report::{Counterexample, EigenheimerSource, TheoremId, TheoremReport, Verdict, Witness};
pub use t2::{check_t2, check_t2iv, check_t2v, summarize_t2iv, HdFamily, PartitionOptions};
pub use theorems::{
    check_t4, check_t5, check_t5_all, check_t6, check_t7, is_eigenheimer, maximal_proper_subgroups,
    two_subgroup_cover_check, ConjugateUnion,
};
pub use zclass::{classify_z, ZClassification, ZVerdict, ZWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("the subgroup must be proper (it equals the whole group of order {order})")]
    NotProper { order: usize },
    #[error("{r} maximal abelian subgroups exceed the exhaustive partition cap of {cap} and sampling is disabled")]
    PartitionCapExceeded { r: usize, cap: usize },
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub partition: PartitionOptions,
    /// Largest order for which the full subgroup list is computed.
    pub subgroup_cap: usize,
    /// Cross-check the family against both oracle paths and revalidate
    /// every report against the raw table.
    pub oracle: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            partition: PartitionOptions::default(),
            subgroup_cap: DEFAULT_ORACLE_CAP,
            oracle: false,
        }
    }
}

/// Everything [`run_checks`] computed for one group.
#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub family: MaximalAbelianFamily,
    pub z: ZClassification,
    /// One report per requested theorem, in request order.
    pub reports: Vec<TheoremReport>,
    /// Disagreements found in oracle mode.
    pub oracle_mismatches: Vec<String>,
    /// Wall-clock milliseconds per phase, in execution order.
    pub phase_ms: Vec<(String, f64)>,
}

impl SuiteRun {
    pub fn has_failures(&self) -> bool {
        self.reports.iter().any(|r| r.verdict == Verdict::Fails)
    }
}

fn skipped(theorem: TheoremId, g: &FiniteGroup, why: impl Into<String>) -> TheoremReport {
    TheoremReport::new(theorem, g, Verdict::Skipped).with_note(why)
}

/// Runs the requested checkers on one group, computing the family (and the
/// subgroup list, when a checker needs it and the order allows) once.
/// Checkers that need the subgroup list above the cap fall back to a
/// partial search where one exists and are SKIPPED otherwise.
pub fn run_checks(g: &FiniteGroup, theorems: &[TheoremId], opts: &SuiteOptions) -> SuiteRun {
    use TheoremId::*;
    let mut phase_ms = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, phase_ms: &mut Vec<(String, f64)>| {
        let now = Instant::now();
        phase_ms.push((name.to_string(), (now - clock).as_secs_f64() * 1e3));
        clock = now;
    };
    let family = maximal_abelian_subgroups(g);
    let z = classify_z(g, &family);
    lap("family", &mut phase_ms);
    let wants_list = opts.oracle || theorems.iter().any(|t| matches!(t, T4 | T5 | T7 | Cover));
    let subgroups: Result<Vec<Subgroup>, SubgroupError> = if wants_list {
        all_subgroups_capped(g, opts.subgroup_cap)
    } else {
        Err(SubgroupError::OrderCapExceeded {
            order: g.order(),
            cap: 0,
        })
    };
    let list = subgroups.as_deref().ok();
    if wants_list {
        lap("subgroups", &mut phase_ms);
    }
    let cap_note = || {
        format!(
            "order {} exceeds the subgroup cap of {}",
            g.order(),
            opts.subgroup_cap
        )
    };

    let mut t2 = None;
    let mut reports = Vec::with_capacity(theorems.len());
    for &t in theorems {
        let report = match t {
            T2i | T2ii | T2iii => {
                let all = t2.get_or_insert_with(|| check_t2(g, &family));
                let k = [T2i, T2ii, T2iii].iter().position(|&x| x == t).unwrap();
                all[k].clone()
            }
            T2iv => summarize_t2iv(g, &check_t2iv(g, &family)),
            T2v => match check_t2v(g, &family, &opts.partition) {
                Ok(r) => r,
                Err(e) => skipped(T2v, g, e.to_string()),
            },
            T4 => check_t4(g, &family, list),
            T5 => match list {
                Some(all) => check_t5_all(g, all),
                None => {
                    let mut partial: Vec<Subgroup> = family.subgroups().to_vec();
                    partial.extend(cyclic_subgroups(g).into_iter().map(|(_, h)| h));
                    partial.sort();
                    partial.dedup();
                    check_t5_all(g, &partial).with_note(format!(
                        "{}: checked maximal abelian and cyclic subgroups only",
                        cap_note()
                    ))
                }
            },
            T6 => check_t6(g, &family),
            T7 => match check_t7(g, &family, list) {
                Ok(r) => r,
                Err(e) => skipped(T7, g, e.to_string()),
            },
            Cover => match list {
                Some(all) => two_subgroup_cover_check(g, all),
                None => skipped(Cover, g, cap_note()),
            },
        };
        reports.push(report);
        lap(t.as_str(), &mut phase_ms);
    }

    let mut oracle_mismatches = Vec::new();
    if opts.oracle {
        let descent = maximal_abelian_by_centralizer_descent(g);
        if descent != family.subgroups() {
            oracle_mismatches.push(format!(
                "{}: centralizer descent found {} maximal abelian subgroups, clique search {}",
                g.name(),
                descent.len(),
                family.r()
            ));
        }
        if let Some(all) = list {
            let filtered = maximal_abelian_from_subgroups(g, all);
            if filtered != family.subgroups() {
                oracle_mismatches.push(format!(
                    "{}: subgroup filter found {} maximal abelian subgroups, clique search {}",
                    g.name(),
                    filtered.len(),
                    family.r()
                ));
            }
        }
        for r in &reports {
            if !r.revalidate(g) {
                oracle_mismatches.push(format!(
                    "{}: {} {} report does not revalidate",
                    g.name(),
                    r.theorem,
                    r.verdict
                ));
            }
        }
        lap("oracle", &mut phase_ms);
    }

    SuiteRun {
        family,
        z,
        reports,
        oracle_mismatches,
        phase_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilyKind};

    #[test]
    fn suite_on_s4_holds_everywhere() {
        let g = family(FamilyKind::Symmetric, 4).unwrap();
        let opts = SuiteOptions {
            oracle: true,
            ..Default::default()
        };
        let run = run_checks(&g, &TheoremId::ALL, &opts);
        assert_eq!(run.reports.len(), TheoremId::ALL.len());
        for r in &run.reports {
            assert_eq!(r.verdict, Verdict::Holds, "{}", r.theorem);
        }
        assert!(
            run.oracle_mismatches.is_empty(),
            "{:?}",
            run.oracle_mismatches
        );
        assert_eq!(run.z.verdict, ZVerdict::ZDependent);
    }

    #[test]
    fn suite_on_abelian() {
        let g = family(FamilyKind::Cyclic, 5).unwrap();
        let run = run_checks(&g, &TheoremId::ALL, &SuiteOptions::default());
        for r in &run.reports {
            let expected = match r.theorem {
                TheoremId::T7 | TheoremId::T5 | TheoremId::Cover => Verdict::Holds,
                _ => Verdict::NotApplicable,
            };
            assert_eq!(r.verdict, expected, "{}", r.theorem);
        }
    }

    #[test]
    fn suite_above_subgroup_cap() {
        let g = family(FamilyKind::Symmetric, 3).unwrap();
        let opts = SuiteOptions {
            subgroup_cap: 5,
            ..Default::default()
        };
        let run = run_checks(
            &g,
            &[
                TheoremId::T4,
                TheoremId::T5,
                TheoremId::T7,
                TheoremId::Cover,
            ],
            &opts,
        );
        assert!(matches!(
            run.reports[0].witness,
            Some(Witness::ConjugatesSelfNormalizing {
                source: EigenheimerSource::MaximalAbelianOnly,
                ..
            })
        ));
        assert_eq!(run.reports[1].verdict, Verdict::Holds);
        assert!(!run.reports[1].notes.is_empty());
        assert_eq!(run.reports[2].verdict, Verdict::Holds);
        assert_eq!(run.reports[3].verdict, Verdict::Skipped);
    }
}
