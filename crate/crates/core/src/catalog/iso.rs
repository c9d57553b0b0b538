//! Isomorphism testing by backtracking over generator images.

use std::collections::HashMap;

use crate::catalog::fingerprint::{element_invariants, Fingerprint};
use crate::group::FiniteGroup;
use crate::subgroup::Span;

const UNMAPPED: usize = usize::MAX;

/// `true` iff some bijection between the element sets preserves products.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Brute-force check that `map[a]` is an isomorphism `g1 → g2`.
pub fn is_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup, map: &[usize]) -> bool {
    let n = g1.order();
    if g2.order() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| map[g1.mul(a, b)] == g2.mul(map[a], map[b])))
}

/// An isomorphism `g1 → g2` as an image table, if one exists.
///
/// Fingerprints and per-element invariant censuses are compared first.
/// Then a generating set of `g1` is fixed and images are tried for each
/// generator in turn, restricted to elements with matching invariants; each
/// partial assignment is extended over the subgroup it generates and
/// rejected as soon as it is inconsistent or not injective.
pub fn find_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<Vec<usize>> {
    let n = g1.order();
    if g2.order() != n || Fingerprint::of(g1) != Fingerprint::of(g2) {
        return None;
    }
    let inv1 = element_invariants(g1);
    let inv2 = element_invariants(g2);
    let mut classes: HashMap<(u32, u32, u32), Vec<usize>> = HashMap::new();
    for (y, key) in inv2.iter().enumerate() {
        classes.entry(*key).or_default().push(y);
    }
    {
        let mut a = inv1.clone();
        let mut b = inv2.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }

    let gens = generators_for_search(g1, &inv1, &classes);
    let candidates: Vec<&[usize]> = gens.iter().map(|&x| classes[&inv1[x]].as_slice()).collect();
    let mut images = Vec::with_capacity(gens.len());
    let map = assign(g1, g2, &gens, &candidates, &mut images)?;
    debug_assert!(is_isomorphism(g1, g2, &map));
    Some(map)
}

/// Greedy generating set: repeatedly adjoin the element outside the
/// current span with the largest order, preferring rare invariant classes.
fn generators_for_search(
    g: &FiniteGroup,
    inv: &[(u32, u32, u32)],
    classes: &HashMap<(u32, u32, u32), Vec<usize>>,
) -> Vec<usize> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(inv[x].0), classes[&inv[x]].len(), x));
    let mut span = Span::trivial(n);
    let mut gens = Vec::new();
    for x in order {
        if span.len() == n {
            break;
        }
        if !span.contains(x) {
            span.adjoin(g, x);
            gens.push(x);
        }
    }
    gens
}

fn assign(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[usize],
    candidates: &[&[usize]],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let level = images.len();
    if level == gens.len() {
        return extend(g1, g2, gens, images);
    }
    for &y in candidates[level] {
        images.push(y);
        if let Some(map) = extend(g1, g2, &gens[..=level], images) {
            if level + 1 == gens.len() {
                return Some(map);
            }
            if let Some(map) = assign(g1, g2, gens, candidates, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] ↦ images[i]` over the subgroup the generators span,
/// walking its right Cayley graph. `None` when an edge is inconsistent or
/// two elements collide.
fn extend(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = g1.order();
    let mut map = vec![UNMAPPED; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        for (&x, &y) in gens.iter().zip(images) {
            let b = g1.mul(a, x);
            let img = g2.mul(map[a], y);
            if map[b] == UNMAPPED {
                if std::mem::replace(&mut used[img], true) {
                    return None;
                }
                map[b] = img;
                queue.push(b);
            } else if map[b] != img {
                return None;
            }
        }
    }
    Some(map)
}
