//! Named families and direct products.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::group::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use crate::perm::{from_permutation_generators_capped, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion,
    Klein,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Cyclic,
        FamilyKind::Dihedral,
        FamilyKind::Symmetric,
        FamilyKind::Alternating,
        FamilyKind::Quaternion,
        FamilyKind::Klein,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Symmetric => "symmetric",
            FamilyKind::Alternating => "alternating",
            FamilyKind::Quaternion => "quaternion",
            FamilyKind::Klein => "klein",
        }
    }

    /// Order of the family member for `parameter`, if the parameter is valid.
    pub fn order_of(self, parameter: usize) -> Option<usize> {
        match self {
            FamilyKind::Cyclic if parameter >= 1 => Some(parameter),
            FamilyKind::Dihedral if parameter >= 3 => parameter.checked_mul(2),
            FamilyKind::Symmetric if parameter >= 1 => factorial(parameter),
            FamilyKind::Alternating if parameter >= 3 => factorial(parameter).map(|f| f / 2),
            FamilyKind::Quaternion if parameter >= 2 => parameter.checked_mul(4),
            FamilyKind::Klein if parameter == 4 => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!(
                    "unknown family {s:?} (expected one of cyclic, dihedral, symmetric, alternating, quaternion, klein)"
                )
            })
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Builds the named family member with the default order cap.
///
/// Orders: cyclic `n`, dihedral `2n` (`n ≥ 3`), symmetric `n!`, alternating
/// `n!/2` (`n ≥ 3`), generalized quaternion `4m` (`m ≥ 2`). The Klein four
/// group takes its order, 4, as parameter.
pub fn family(kind: FamilyKind, parameter: usize) -> Result<FiniteGroup, GroupError> {
    family_capped(kind, parameter, DEFAULT_ORDER_CAP)
}

pub fn family_capped(
    kind: FamilyKind,
    parameter: usize,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    let invalid = |reason: &str| GroupError::InvalidParameter {
        family: kind.to_string(),
        parameter: parameter as i64,
        reason: reason.to_string(),
    };
    let order = kind.order_of(parameter).ok_or_else(|| {
        invalid(match kind {
            FamilyKind::Cyclic | FamilyKind::Symmetric => "must be at least 1",
            FamilyKind::Dihedral | FamilyKind::Alternating => "must be at least 3",
            FamilyKind::Quaternion => "must be at least 2",
            FamilyKind::Klein => "the Klein four group takes parameter 4",
        })
    })?;
    if order > cap {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    match kind {
        FamilyKind::Cyclic => cyclic(parameter),
        FamilyKind::Dihedral => dihedral(parameter),
        FamilyKind::Quaternion => quaternion(parameter),
        FamilyKind::Klein => {
            let c2 = cyclic(2)?;
            Ok(direct_product_capped(&c2, &c2, cap)?.with_name("V4"))
        }
        FamilyKind::Symmetric => {
            let mut gens = Vec::new();
            if parameter >= 2 {
                gens.push(Permutation::parse(parameter, "(1 2)")?);
            }
            if parameter >= 3 {
                let cycle: Vec<String> = (1..=parameter).map(|i| i.to_string()).collect();
                gens.push(Permutation::parse(
                    parameter,
                    &format!("({})", cycle.join(" ")),
                )?);
            }
            Ok(from_permutation_generators_capped(parameter, &gens, cap)?
                .with_name(format!("S{parameter}")))
        }
        FamilyKind::Alternating => {
            let gens = (3..=parameter)
                .map(|k| Permutation::parse(parameter, &format!("(1 2 {k})")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(from_permutation_generators_capped(parameter, &gens, cap)?
                .with_name(format!("A{parameter}")))
        }
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
        .collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    FiniteGroup::from_raw(format!("C{n}"), n, table, Some(labels))
}

/// `r^i s^j` stored at index `i + n*j`.
fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    let order = 2 * n;
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        let (i, j) = (a % n, a / n);
        for b in 0..order {
            let (k, l) = (b % n, b / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            table[a * order + b] = (rot + n * ((j + l) % 2)) as u32;
        }
    }
    let labels = (0..order)
        .map(|a| word_label("r", a % n, "s", a / n))
        .collect();
    FiniteGroup::from_raw(format!("D{n}"), order, table, Some(labels))
}

/// Normal forms `a^i b^j` (`i < 2m`, `j < 2`) of
/// `<a, b | a^{2m}, b^2 = a^m, b a b^-1 = a^-1>`, stored at `i + 2m*j`.
fn quaternion(m: usize) -> Result<FiniteGroup, GroupError> {
    let n = 2 * m;
    let order = 2 * n;
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (i, j) = (x % n, x / n);
        for y in 0..order {
            let (k, l) = (y % n, y / n);
            // b^j a^k = a^{(-1)^j k} b^j
            let mut exp = if j == 0 { i + k } else { i + n - k };
            let mut bexp = j + l;
            if bexp == 2 {
                exp += m;
                bexp = 0;
            }
            table[x * order + y] = ((exp % n) + n * bexp) as u32;
        }
    }
    let labels = (0..order)
        .map(|x| word_label("a", x % n, "b", x / n))
        .collect();
    FiniteGroup::from_raw(format!("Q{order}"), order, table, Some(labels))
}

fn word_label(a: &str, i: usize, b: &str, j: usize) -> String {
    let first = match i {
        0 => String::new(),
        1 => a.to_string(),
        _ => format!("{a}^{i}"),
    };
    match (first.is_empty(), j) {
        (true, 0) => "e".to_string(),
        (false, 0) => first,
        (true, _) => b.to_string(),
        (false, _) => format!("{first} {b}"),
    }
}

/// Direct product with the default order cap.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    direct_product_capped(g1, g2, DEFAULT_ORDER_CAP)
}

/// Componentwise product; the pair `(a, b)` is stored at `a * |g2| + b`.
pub fn direct_product_capped(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    let (n1, n2) = (g1.order(), g2.order());
    let order = n1
        .checked_mul(n2)
        .filter(|&o| o <= cap)
        .ok_or(GroupError::OrderCapExceeded { cap })?;
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        let (a1, a2) = (a / n2, a % n2);
        let row = &mut table[a * order..(a + 1) * order];
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = (g1.mul(a1, b / n2) * n2 + g2.mul(a2, b % n2)) as u32;
        }
    }
    let labels = (0..order)
        .map(|a| format!("({}, {})", g1.label(a / n2), g2.label(a % n2)))
        .collect();
    FiniteGroup::from_raw(
        product_name(g1.name(), g2.name()),
        order,
        table,
        Some(labels),
    )
}

pub fn product_name(a: &str, b: &str) -> String {
    let wrap = |s: &str| {
        if s.contains('x') {
            format!("({s})")
        } else {
            s.to_string()
        }
    };
    format!("{}x{}", wrap(a), wrap(b))
}
