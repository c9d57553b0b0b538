//! Explicit constructions of every group of order at most 16, used to name
//! enumerated classes and to cross-check the enumeration.

use crate::families::{direct_product, family, FamilyKind};
use crate::group::{FiniteGroup, GroupError};

/// A group together with the recipe that built it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub group: FiniteGroup,
    pub provenance: String,
}

fn fam(kind: FamilyKind, p: usize) -> Construction {
    Construction {
        group: family(kind, p).expect("small family member"),
        provenance: format!("family {} {}", kind, p),
    }
}

fn prod(a: &Construction, b: &Construction) -> Construction {
    let group = direct_product(&a.group, &b.group).expect("small product");
    Construction {
        provenance: format!("product({}, {})", a.provenance, b.provenance),
        group,
    }
}

/// `N ⋊ C_k` where the generator of `C_k` acts by the automorphism `phi`
/// of `N` (given as an image table). `(n₁, i)(n₂, j) = (n₁·φ^i(n₂), i + j)`
/// stored at `n + |N|·i`.
fn semidirect_by_cyclic(
    name: &str,
    base: &FiniteGroup,
    k: usize,
    phi: &[usize],
) -> Result<FiniteGroup, GroupError> {
    let m = base.order();
    let mut powers = vec![(0..m).collect::<Vec<usize>>()];
    for i in 1..k {
        let prev = &powers[i - 1];
        powers.push((0..m).map(|a| phi[prev[a]]).collect());
    }
    let order = m * k;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (n1, i) = (x % m, x / m);
        for y in 0..order {
            let (n2, j) = (y % m, y / m);
            table[x * order + y] = (base.mul(n1, powers[i][n2]) + m * ((i + j) % k)) as u32;
        }
    }
    FiniteGroup::from_raw(name, order, table, None)
}

fn semidirect(
    name: &str,
    recipe: &str,
    base: &FiniteGroup,
    k: usize,
    phi: &[usize],
) -> Construction {
    Construction {
        group: semidirect_by_cyclic(name, base, k, phi).expect("valid action"),
        provenance: format!("semidirect {recipe}"),
    }
}

/// `C_m ⋊ C_k` with the generator acting as `x ↦ x^t`.
fn metacyclic(name: &str, m: usize, k: usize, t: usize) -> Construction {
    let base = family(FamilyKind::Cyclic, m).expect("cyclic");
    let phi: Vec<usize> = (0..m).map(|i| i * t % m).collect();
    semidirect(name, &format!("C{m} by C{k}, x -> x^{t}"), &base, k, &phi)
}

/// Every group of order `n ≤ 16`, one construction per isomorphism class,
/// abelian groups first. Empty above 16.
pub fn known_groups(n: usize) -> Vec<Construction> {
    use FamilyKind::*;
    let c = |m| fam(Cyclic, m);
    match n {
        1 => vec![c(1)],
        2 | 3 | 5 | 7 | 11 | 13 => vec![c(n)],
        4 => vec![c(4), fam(Klein, 4)],
        6 => vec![c(6), fam(Symmetric, 3)],
        8 => vec![
            c(8),
            prod(&c(4), &c(2)),
            prod(&prod(&c(2), &c(2)), &c(2)),
            fam(Dihedral, 4),
            fam(Quaternion, 2),
        ],
        9 => vec![c(9), prod(&c(3), &c(3))],
        10 => vec![c(10), fam(Dihedral, 5)],
        12 => vec![
            c(12),
            prod(&c(6), &c(2)),
            fam(Dihedral, 6),
            fam(Alternating, 4),
            fam(Quaternion, 3),
        ],
        14 => vec![c(14), fam(Dihedral, 7)],
        15 => vec![c(15)],
        16 => {
            let c4c2 = prod(&c(4), &c(2));
            let c2c2 = prod(&c(2), &c(2));
            // Index a*2 + b for (a^i, b^j) in C4 x C2.
            let swap_b_in: Vec<usize> = (0..8).map(|x| (x / 2) * 2 + (x / 2 + x % 2) % 2).collect();
            let central_square: Vec<usize> = (0..8)
                .map(|x| ((x / 2 + 2 * (x % 2)) % 4) * 2 + x % 2)
                .collect();
            vec![
                c(16),
                prod(&c(8), &c(2)),
                prod(&c(4), &c(4)),
                prod(&c4c2, &c(2)),
                prod(&prod(&c2c2, &c(2)), &c(2)),
                fam(Dihedral, 8),
                fam(Quaternion, 4),
                metacyclic("SD16", 8, 2, 3),
                metacyclic("M16", 8, 2, 5),
                metacyclic("C4:C4", 4, 4, 3),
                semidirect(
                    "(C4xC2):C2",
                    "(C4xC2) by C2, a -> ab, b -> b",
                    &c4c2.group,
                    2,
                    &swap_b_in,
                ),
                prod(&fam(Dihedral, 4), &c(2)),
                prod(&fam(Quaternion, 2), &c(2)),
                semidirect(
                    "C4oD4",
                    "(C4xC2) by C2, a -> a, b -> a^2 b",
                    &c4c2.group,
                    2,
                    &central_square,
                ),
            ]
        }
        _ => Vec::new(),
    }
}
