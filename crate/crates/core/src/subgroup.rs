//! Subgroups, generated subgroups, centralizers, normalizers and the full
//! subgroup list.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::bitset::ElementSet;
use crate::group::{Element, FiniteGroup};

/// Default order limit for [`all_subgroups`].
pub const DEFAULT_ORACLE_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("group order {order} exceeds the subgroup enumeration cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// A subset of a group's elements closed under the group operation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: ElementSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    /// Wraps a set already known to be a subgroup.
    pub(crate) fn from_set_unchecked(members: ElementSet) -> Self {
        debug_assert!(members.contains(0));
        Subgroup { members }
    }

    /// Checks that `members` is a subgroup of `g`.
    pub fn from_members<I: IntoIterator<Item = usize>>(
        g: &FiniteGroup,
        members: I,
    ) -> Option<Self> {
        let n = g.order();
        let mut set = ElementSet::empty(n);
        for a in members {
            if a >= n {
                return None;
            }
            set.insert(a);
        }
        if !set.contains(0) {
            return None;
        }
        let elems = set.to_vec();
        let closed = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| set.contains(g.mul(a, b))));
        closed.then_some(Subgroup { members: set })
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            members: ElementSet::full(g.order()),
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup {
            members: ElementSet::from_indices(g.order(), [0]),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn parent_order(&self) -> usize {
        self.members.universe()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_proper(&self) -> bool {
        self.order() < self.parent_order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self.members.intersection(&other.members),
        }
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let gens = self.generators(g);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        normalizer(g, self).order() == g.order()
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut span = Span::trivial(g.order());
        for a in self.members.iter() {
            if !span.contains(a) {
                span.adjoin(g, a);
            }
        }
        span.gens
    }
}

/// A subgroup under construction, grown one generator at a time.
#[derive(Clone)]
pub(crate) struct Span {
    pub(crate) set: ElementSet,
    pub(crate) elements: Vec<u32>,
    pub(crate) gens: Vec<usize>,
}

impl Span {
    pub(crate) fn trivial(n: usize) -> Self {
        Span {
            set: ElementSet::from_indices(n, [0]),
            elements: vec![0],
            gens: Vec::new(),
        }
    }

    pub(crate) fn from_subgroup(h: &Subgroup, gens: Vec<usize>) -> Self {
        Span {
            set: h.members.clone(),
            elements: h.members.iter().map(|a| a as u32).collect(),
            gens,
        }
    }

    #[inline]
    pub(crate) fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    /// Dimino's step: the current set is a subgroup `H`, so `<H, x>` is a
    /// union of right cosets `H t`, and only coset representatives need to
    /// be multiplied by the generators.
    pub(crate) fn adjoin(&mut self, g: &FiniteGroup, x: usize) {
        if self.set.contains(x) {
            return;
        }
        let base: Vec<u32> = self.elements.clone();
        self.gens.push(x);
        let mut reps = vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for k in 0..self.gens.len() {
                let t = g.mul(r, self.gens[k]);
                if !self.set.contains(t) {
                    for &h in &base {
                        let y = g.mul(h as usize, t);
                        self.set.insert(y);
                        self.elements.push(y as u32);
                    }
                    reps.push(t);
                }
            }
        }
    }

    pub(crate) fn into_subgroup(self) -> Subgroup {
        Subgroup { members: self.set }
    }
}

/// Smallest subgroup containing `seed`; the empty seed gives `{e}`.
pub fn closure(g: &FiniteGroup, seed: &[usize]) -> Subgroup {
    let mut span = Span::trivial(g.order());
    for &a in seed {
        span.adjoin(g, a);
    }
    span.into_subgroup()
}

/// Subgroup generated by two subgroups.
pub fn join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut span = Span::from_subgroup(a, a.generators(g));
    for x in b.generators(g) {
        span.adjoin(g, x);
    }
    span.into_subgroup()
}

/// Elements commuting with every element of `s`; `s = ∅` gives `G`.
pub fn centralizer<I: IntoIterator<Item = usize>>(g: &FiniteGroup, s: I) -> Subgroup {
    let s: Vec<usize> = s.into_iter().collect();
    let n = g.order();
    let members =
        ElementSet::from_indices(n, (0..n).filter(|&x| s.iter().all(|&a| g.commutes(x, a))));
    Subgroup { members }
}

/// `C_G(H)`, computed from a generating set of `H`.
pub fn centralizer_of_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    centralizer(g, h.generators(g))
}

/// `{ x : x H x⁻¹ = H }`. Conjugation is an automorphism, so it is enough
/// that `x` maps a generating set of `H` into `H`.
pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let gens = h.generators(g);
    let n = g.order();
    let members = ElementSet::from_indices(
        n,
        (0..n).filter(|&x| gens.iter().all(|&a| h.contains(g.conjugate(x, a)))),
    );
    Subgroup { members }
}

/// `x H x⁻¹`
pub fn conjugate_subgroup(g: &FiniteGroup, h: &Subgroup, x: Element) -> Subgroup {
    conjugate_by_index(g, h, x.index())
}

pub(crate) fn conjugate_by_index(g: &FiniteGroup, h: &Subgroup, x: usize) -> Subgroup {
    let members = ElementSet::from_indices(g.order(), h.members.iter().map(|a| g.conjugate(x, a)));
    Subgroup { members }
}

/// One representative element per cyclic subgroup (the smallest index that
/// generates it), paired with the subgroup. Ordered by that representative.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Vec<(usize, Subgroup)> {
    let n = g.order();
    let mut seen = ElementSet::empty(n);
    let mut out = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let c = closure(g, &[x]);
        // Every generator of <x> has the same cyclic subgroup.
        let k = c.order();
        let mut y = x;
        for e in 1..=k {
            if gcd(e, k) == 1 {
                seen.insert(y);
            }
            y = g.mul(y, x);
        }
        out.push((x, c));
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every subgroup of `g`, with the default cap.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>, SubgroupError> {
    all_subgroups_capped(g, DEFAULT_ORACLE_CAP)
}

/// Every subgroup of `g`, sorted by order and then by member list.
///
/// Starts from the trivial subgroup and joins each known subgroup with each
/// cyclic subgroup until no new subgroup appears. Every subgroup is the join
/// of its cyclic subgroups, so the fixpoint is the whole list.
pub fn all_subgroups_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>, SubgroupError> {
    if g.order() > cap {
        return Err(SubgroupError::OrderCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let cyclics = cyclic_subgroups(g);
    let mut found: Vec<Span> = vec![Span::trivial(g.order())];
    let mut index: HashSet<ElementSet> = HashSet::new();
    index.insert(found[0].set.clone());
    let mut i = 0;
    while i < found.len() {
        for (x, _) in &cyclics {
            if found[i].contains(*x) {
                continue;
            }
            let mut next = found[i].clone();
            next.adjoin(g, *x);
            if index.insert(next.set.clone()) {
                found.push(next);
            }
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(Span::into_subgroup).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    Ok(out)
}
