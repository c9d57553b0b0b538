use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::commuting::center;
use crate::group::FiniteGroup;

/// Isomorphism invariants: equal fingerprints are necessary for
/// isomorphism, never sufficient in general.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, how many elements have it)`, ascending.
    pub element_orders: Vec<(usize, usize)>,
    pub center_size: usize,
    pub abelian: bool,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for k in g.element_orders() {
            *census.entry(k).or_default() += 1;
        }
        Fingerprint {
            order: g.order(),
            element_orders: census.into_iter().collect(),
            center_size: center(g).order(),
            abelian: g.is_abelian(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let census: Vec<String> = self
            .element_orders
            .iter()
            .map(|(k, c)| format!("{k}^{c}"))
            .collect();
        write!(
            f,
            "order {} | orders {} | center {} | {}",
            self.order,
            census.join(" "),
            self.center_size,
            if self.abelian {
                "abelian"
            } else {
                "nonabelian"
            }
        )
    }
}

/// Element order, centralizer size and square-root count of one element.
pub type ElementInvariant = (u32, u32, u32);

/// Per-element invariants preserved by every isomorphism: element order,
/// centralizer size, and the number of square roots.
pub fn element_invariants(g: &FiniteGroup) -> Vec<ElementInvariant> {
    let n = g.order();
    let mut roots = vec![0u32; n];
    for x in 0..n {
        roots[g.mul(x, x)] += 1;
    }
    (0..n)
        .map(|a| {
            let cent = (0..n).filter(|&x| g.commutes(a, x)).count();
            (g.element_order(a) as u32, cent as u32, roots[a])
        })
        .collect()
}

/// Sorted multiset of [`element_invariants`]; a finer bucket key than the
/// fingerprint.
pub fn invariant_profile(g: &FiniteGroup) -> Vec<ElementInvariant> {
    let mut v = element_invariants(g);
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilyKind};

    #[test]
    fn c4_and_klein_differ() {
        let c4 = Fingerprint::of(&family(FamilyKind::Cyclic, 4).unwrap());
        let v4 = Fingerprint::of(&family(FamilyKind::Klein, 4).unwrap());
        assert_eq!(c4.element_orders, vec![(1, 1), (2, 1), (4, 2)]);
        assert_eq!(v4.element_orders, vec![(1, 1), (2, 3)]);
        assert_ne!(c4, v4);
    }

    #[test]
    fn q8_fingerprint() {
        let q8 = Fingerprint::of(&family(FamilyKind::Quaternion, 2).unwrap());
        assert_eq!(q8.center_size, 2);
        assert!(!q8.abelian);
        assert_eq!(
            q8.to_string(),
            "order 8 | orders 1^1 2^1 4^6 | center 2 | nonabelian"
        );
    }
}
