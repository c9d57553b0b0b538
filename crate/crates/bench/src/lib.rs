//! Benchmark inputs shared by the criterion targets.

use maxab_core::{direct_product, family, FamilyKind, FiniteGroup};

/// Groups of increasing order with different commuting structure.
pub fn bench_groups() -> Vec<FiniteGroup> {
    use FamilyKind::*;
    let s3 = family(Symmetric, 3).unwrap();
    vec![
        family(Symmetric, 4).unwrap(),
        family(Dihedral, 30).unwrap(),
        direct_product(&family(Quaternion, 2).unwrap(), &s3).unwrap(),
        family(Alternating, 5).unwrap(),
        family(Symmetric, 5).unwrap(),
    ]
}
