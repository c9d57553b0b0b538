//! The commuting graph and the center.

use crate::bitset::ElementSet;
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// Undirected graph on element indices with an edge `a - b` iff `ab = ba`
/// and `a != b`.
#[derive(Debug, Clone)]
pub struct CommutingGraph {
    adjacency: Vec<ElementSet>,
}

impl CommutingGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, a: usize) -> &ElementSet {
        &self.adjacency[a]
    }

    #[inline]
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adjacency[a].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(ElementSet::len).sum::<usize>() / 2
    }
}

pub fn commuting_graph(g: &FiniteGroup) -> CommutingGraph {
    let n = g.order();
    let mut adjacency = vec![ElementSet::empty(n); n];
    for a in 0..n {
        for b in a + 1..n {
            if g.commutes(a, b) {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
    }
    CommutingGraph { adjacency }
}

/// `Z(G) = { z : zx = xz for all x }`
pub fn center(g: &FiniteGroup) -> Subgroup {
    let n = g.order();
    let members = ElementSet::from_indices(n, (0..n).filter(|&z| (0..n).all(|x| g.commutes(z, x))));
    Subgroup::from_set_unchecked(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilyKind};

    #[test]
    fn abelian_groups_have_complete_graphs() {
        let g = family(FamilyKind::Cyclic, 9).unwrap();
        let cg = commuting_graph(&g);
        assert_eq!(cg.edge_count(), 9 * 8 / 2);
        assert_eq!(center(&g).order(), 9);
    }

    #[test]
    fn s3_transpositions_only_touch_the_identity() {
        let g = family(FamilyKind::Symmetric, 3).unwrap();
        let cg = commuting_graph(&g);
        assert_eq!(cg.degree(0), 5);
        for t in (0..6).filter(|&a| g.element_order(a) == 2) {
            assert_eq!(cg.neighbors(t).to_vec(), vec![0]);
        }
        assert_eq!(center(&g).elements(), vec![0]);
    }

    #[test]
    fn q8_center_is_adjacent_to_everything() {
        let g = family(FamilyKind::Quaternion, 2).unwrap();
        let cg = commuting_graph(&g);
        let minus_one = (0..8).find(|&a| g.element_order(a) == 2).unwrap();
        for v in 0..8 {
            if v != 0 {
                assert!(cg.is_adjacent(v, 0));
            }
            if v != minus_one {
                assert!(cg.is_adjacent(v, minus_one));
            }
            assert!(!cg.is_adjacent(v, v));
        }
        assert_eq!(center(&g).elements(), vec![0, minus_one]);
    }

    #[test]
    fn d4_center_has_two_elements() {
        let g = family(FamilyKind::Dihedral, 4).unwrap();
        assert_eq!(center(&g).order(), 2);
    }
}
