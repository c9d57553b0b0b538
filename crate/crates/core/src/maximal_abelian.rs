//! Maximal abelian subgroups.
//!
//! A set of pairwise commuting elements that cannot be enlarged equals its
//! own centralizer, so the maximal cliques of the commuting graph are exactly
//! the maximal abelian subgroups. The primary path enumerates those cliques
//! with pivoting Bron–Kerbosch; two independent oracles (centralizer descent,
//! and filtering the full subgroup list) are kept for cross-checking.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::bitset::ElementSet;
use crate::commuting::{center, commuting_graph, CommutingGraph};
use crate::group::FiniteGroup;
use crate::subgroup::{Span, Subgroup};

/// All maximal abelian subgroups `H_1 … H_r` of a group, ordered by size
/// descending and then by member list, with their pairwise intersections.
#[derive(Debug, Clone)]
pub struct MaximalAbelianFamily {
    subgroups: Vec<Subgroup>,
    center: Subgroup,
    pairwise: BTreeMap<(usize, usize), Subgroup>,
}

/// Size descending, then lexicographic on members.
pub fn canonical_cmp(a: &Subgroup, b: &Subgroup) -> Ordering {
    b.order().cmp(&a.order()).then_with(|| a.cmp(b))
}

impl MaximalAbelianFamily {
    /// Wraps an arbitrary list of subgroups as a family. The list is sorted
    /// into canonical order; maximality is not checked, which lets callers
    /// feed doctored families to the theorem checkers.
    pub fn from_subgroups(g: &FiniteGroup, mut subgroups: Vec<Subgroup>) -> Self {
        subgroups.sort_by(canonical_cmp);
        subgroups.dedup();
        let mut pairwise = BTreeMap::new();
        for i in 0..subgroups.len() {
            for j in i + 1..subgroups.len() {
                pairwise.insert((i, j), subgroups[i].intersection(&subgroups[j]));
            }
        }
        MaximalAbelianFamily {
            subgroups,
            center: center(g),
            pairwise,
        }
    }

    pub fn r(&self) -> usize {
        self.subgroups.len()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    /// `H_i ∩ H_j` for `i != j`.
    pub fn intersection(&self, i: usize, j: usize) -> &Subgroup {
        let key = if i < j { (i, j) } else { (j, i) };
        &self.pairwise[&key]
    }

    /// Pairwise intersections keyed by `(i, j)` with `i < j`.
    pub fn pairwise_intersections(&self) -> impl Iterator<Item = ((usize, usize), &Subgroup)> {
        self.pairwise.iter().map(|(&k, v)| (k, v))
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups.iter().position(|s| s == h)
    }

    /// Union of all member sets.
    pub fn union(&self) -> ElementSet {
        let mut u = ElementSet::empty(self.center.parent_order());
        for h in &self.subgroups {
            u.union_with(h.members());
        }
        u
    }
}

/// Maximal abelian subgroups via maximal cliques of the commuting graph.
pub fn maximal_abelian_subgroups(g: &FiniteGroup) -> MaximalAbelianFamily {
    let graph = commuting_graph(g);
    let z = center(g);
    let cliques = maximal_cliques_above(&graph, z.members());
    let subgroups = cliques
        .into_iter()
        .map(Subgroup::from_set_unchecked)
        .collect();
    MaximalAbelianFamily::from_subgroups(g, subgroups)
}

/// All maximal cliques of `graph`.
pub fn maximal_cliques(graph: &CommutingGraph) -> Vec<ElementSet> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    bron_kerbosch(
        graph,
        ElementSet::empty(n),
        ElementSet::full(n),
        ElementSet::empty(n),
        &mut out,
    );
    out
}

/// Maximal cliques when `universal` is a set of vertices adjacent to all
/// others (the center): they belong to every maximal clique, so the search
/// runs on the remaining vertices only.
fn maximal_cliques_above(graph: &CommutingGraph, universal: &ElementSet) -> Vec<ElementSet> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    let candidates = ElementSet::full(n).difference(universal);
    bron_kerbosch(
        graph,
        universal.clone(),
        candidates,
        ElementSet::empty(n),
        &mut out,
    );
    out
}

fn bron_kerbosch(
    graph: &CommutingGraph,
    clique: ElementSet,
    mut candidates: ElementSet,
    mut excluded: ElementSet,
    out: &mut Vec<ElementSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(clique);
        }
        return;
    }
    // Pivot on the vertex covering the most candidates.
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| graph.neighbors(u).intersection_len(&candidates))
        .expect("candidates is nonempty");
    let branch = candidates.difference(graph.neighbors(pivot));
    for v in branch.iter() {
        let nv = graph.neighbors(v);
        let mut next_clique = clique.clone();
        next_clique.insert(v);
        bron_kerbosch(
            graph,
            next_clique,
            candidates.intersection(nv),
            excluded.intersection(nv),
            out,
        );
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Oracle: grow abelian subgroups from the center, restricting the
/// candidate set to the running centralizer; a subgroup equal to its own
/// centralizer is maximal abelian.
pub fn maximal_abelian_by_centralizer_descent(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let graph = commuting_graph(g);
    let z = center(g);
    let mut start = Span::trivial(n);
    for a in z.members().iter() {
        start.adjoin(g, a);
    }
    let mut visited: HashSet<ElementSet> = HashSet::new();
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut stack = vec![(start, ElementSet::full(n))];
    while let Some((span, cent)) = stack.pop() {
        if cent == span.set {
            found.insert(Subgroup::from_set_unchecked(span.set));
            continue;
        }
        for x in cent.difference(&span.set).iter() {
            let mut next = span.clone();
            next.adjoin(g, x);
            if visited.insert(next.set.clone()) {
                let mut c = cent.intersection(graph.neighbors(x));
                c.insert(x);
                stack.push((next, c));
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(canonical_cmp);
    out
}

/// Oracle: abelian members of a full subgroup list that lie in no strictly
/// larger abelian member.
pub fn maximal_abelian_from_subgroups(g: &FiniteGroup, all: &[Subgroup]) -> Vec<Subgroup> {
    let abelian: Vec<&Subgroup> = all.iter().filter(|h| h.is_abelian(g)).collect();
    let mut out: Vec<Subgroup> = abelian
        .iter()
        .filter(|h| {
            !abelian
                .iter()
                .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
        })
        .map(|h| (*h).clone())
        .collect();
    out.sort_by(canonical_cmp);
    out
}
