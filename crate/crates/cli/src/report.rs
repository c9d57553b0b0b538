//! The analysis report for one group and its text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use maxab_core::verify::{check_t2iv, check_t5, classify_z, ZClassification};
use maxab_core::{run_checks, FiniteGroup, SuiteOptions, TheoremId, TheoremReport, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub center_order: usize,
    pub abelian: bool,
    /// Stored index of each input index, when the input's identity was not
    /// element 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relabeling: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberSummary {
    pub order: usize,
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub r: usize,
    pub members: Vec<MemberSummary>,
    /// `|H_i ∩ H_j|`, with `|H_i|` on the diagonal.
    pub pairwise_intersection_sizes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: GroupSummary,
    pub family: FamilySummary,
    pub z_classification: ZClassification,
    /// One report per theorem, in fixed order.
    pub theorems: Vec<TheoremReport>,
    /// One `T2iv` report per qualifying intersection `D`.
    pub t2iv_per_d: Vec<TheoremReport>,
    /// One `T5` report per proper maximal abelian subgroup, in family order.
    pub t5_per_member: Vec<TheoremReport>,
    /// Disagreements found in oracle mode.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle_mismatches: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl AnalysisReport {
    pub fn build(g: &FiniteGroup, opts: &SuiteOptions, timings: bool) -> AnalysisReport {
        let run = run_checks(g, &TheoremId::ALL, opts);
        let fam = &run.family;
        let mut phases: BTreeMap<String, f64> = run.phase_ms.iter().cloned().collect();

        let clock = std::time::Instant::now();
        let t2iv_per_d = check_t2iv(g, fam).into_iter().map(|(_, r)| r).collect();
        let t5_per_member = fam
            .subgroups()
            .iter()
            .filter(|h| h.is_proper())
            .map(|h| check_t5(g, h).expect("proper"))
            .collect();
        phases.insert("per_member".into(), clock.elapsed().as_secs_f64() * 1e3);

        let r = fam.r();
        let members = fam
            .subgroups()
            .iter()
            .map(|h| MemberSummary {
                order: h.order(),
                elements: h.elements(),
                labels: h
                    .elements()
                    .iter()
                    .map(|&a| g.label(a).into_owned())
                    .collect(),
            })
            .collect();
        let pairwise_intersection_sizes = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            fam.get(i).order()
                        } else {
                            fam.intersection(i, j).order()
                        }
                    })
                    .collect()
            })
            .collect();
        debug_assert_eq!(run.z, classify_z(g, fam));
        AnalysisReport {
            schema: SCHEMA,
            group: GroupSummary {
                name: g.name().to_string(),
                order: g.order(),
                center_order: fam.center().order(),
                abelian: g.is_abelian(),
                relabeling: g.relabeling().map(<[usize]>::to_vec),
            },
            family: FamilySummary {
                r,
                members,
                pairwise_intersection_sizes,
            },
            z_classification: run.z.clone(),
            theorems: run.reports,
            t2iv_per_d,
            t5_per_member,
            oracle_mismatches: run.oracle_mismatches,
            // Microsecond resolution keeps the JSON short and round-trippable.
            timings_ms: timings.then(|| {
                phases
                    .into_iter()
                    .map(|(k, v)| (k, (v * 1e3).round() / 1e3))
                    .collect()
            }),
        }
    }

    fn all_reports(&self) -> impl Iterator<Item = &TheoremReport> {
        self.theorems
            .iter()
            .chain(&self.t2iv_per_d)
            .chain(&self.t5_per_member)
    }

    pub fn has_failures(&self) -> bool {
        self.all_reports().any(|r| r.verdict == Verdict::Fails)
    }

    pub fn failures(&self) -> Vec<&TheoremReport> {
        self.all_reports()
            .filter(|r| r.verdict == Verdict::Fails)
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.group;
        writeln!(
            out,
            "group {}: order {}, center order {}, {}",
            g.name,
            g.order,
            g.center_order,
            if g.abelian { "abelian" } else { "nonabelian" }
        )
        .unwrap();
        if let Some(map) = &g.relabeling {
            writeln!(
                out,
                "relabeled input (input index -> stored index): {map:?}"
            )
            .unwrap();
        }
        writeln!(out, "maximal abelian subgroups: r = {}", self.family.r).unwrap();
        for (i, m) in self.family.members.iter().enumerate() {
            writeln!(
                out,
                "  H{} (order {}): {{{}}}",
                i + 1,
                m.order,
                m.labels.join(", ")
            )
            .unwrap();
        }
        if self.family.r > 1 {
            writeln!(out, "pairwise intersection sizes:").unwrap();
            for row in &self.family.pairwise_intersection_sizes {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
                writeln!(out, "  {}", cells.join(" ")).unwrap();
            }
        }
        let z = &self.z_classification;
        match &z.witness {
            Some(w) => writeln!(
                out,
                "Z-classification: {} (H{} and H{} meet in {} elements)",
                z.verdict.as_str(),
                w.i + 1,
                w.j + 1,
                w.d.len()
            ),
            None => writeln!(out, "Z-classification: {}", z.verdict.as_str()),
        }
        .unwrap();
        writeln!(out, "theorems:").unwrap();
        for r in &self.theorems {
            render_line(&mut out, &r.theorem.to_string(), r);
        }
        for (i, r) in self.t2iv_per_d.iter().enumerate() {
            render_line(&mut out, &format!("T2iv[D{}]", i + 1), r);
        }
        for (i, r) in self.t5_per_member.iter().enumerate() {
            render_line(&mut out, &format!("T5[H{}]", i + 1), r);
        }
        for m in &self.oracle_mismatches {
            writeln!(out, "oracle mismatch: {m}").unwrap();
        }
        if let Some(t) = &self.timings_ms {
            writeln!(out, "timings (ms):").unwrap();
            for (phase, ms) in t {
                writeln!(out, "  {phase:<12} {ms:.3}").unwrap();
            }
        }
        out
    }
}

fn render_line(out: &mut String, tag: &str, r: &TheoremReport) {
    writeln!(out, "  {tag:<10} {}", r.verdict).unwrap();
    for note in &r.notes {
        writeln!(out, "      note: {note}").unwrap();
    }
}
