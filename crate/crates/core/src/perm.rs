//! Permutations in cycle notation and the groups they generate.

use std::collections::HashMap;
use std::fmt;

use crate::group::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};

/// A bijection on `{1..degree}`, stored 0-based.
///
/// Products compose left to right: `(p * q)(i) = q(p(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            if i >= degree || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotAPermutation {
                    degree,
                    reason: format!("images {images:?} are not a bijection"),
                });
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Parses cycle notation over the points `1..=degree`, e.g. `(1 2)(3 4)`.
    /// Points may be separated by spaces or commas; `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self, GroupError> {
        let bad = |reason: String| GroupError::NotAPermutation { degree, reason };
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(after_open) = rest.strip_prefix('(') else {
                return Err(bad(format!("expected '(' in {text:?}")));
            };
            let close = after_open
                .find(')')
                .ok_or_else(|| bad(format!("unclosed cycle in {text:?}")))?;
            let body = &after_open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok.parse().map_err(|_| bad(format!("bad point {tok:?}")))?;
                if p == 0 || p > degree {
                    return Err(bad(format!("point {p} outside 1..={degree}")));
                }
                if std::mem::replace(&mut moved[p - 1], true) {
                    return Err(bad(format!("point {p} appears twice")));
                }
                cycle.push(p - 1);
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
            rest = after_open[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Left-to-right product: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least 2, 1-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Group generated by `generators`, with the default order cap.
pub fn from_permutation_generators(
    degree: usize,
    generators: &[Permutation],
) -> Result<FiniteGroup, GroupError> {
    from_permutation_generators_capped(degree, generators, DEFAULT_ORDER_CAP)
}

/// Breadth-first closure from the identity. Each BFS layer is sorted by the
/// image vectors, so the element numbering depends only on the input.
pub fn from_permutation_generators_capped(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    if degree == 0 {
        return Err(GroupError::NotAPermutation {
            degree,
            reason: "degree must be positive".into(),
        });
    }
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::NotAPermutation {
                degree,
                reason: format!("generator {g} has degree {}", g.degree()),
            });
        }
    }
    let mut gens: Vec<&Permutation> = Vec::new();
    for g in generators {
        if !g.is_identity() && !gens.contains(&g) {
            gens.push(g);
        }
    }

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut layer_start = 0;
    while layer_start < elements.len() {
        let layer_end = elements.len();
        let mut next: Vec<Permutation> = Vec::new();
        for x in &elements[layer_start..layer_end] {
            for s in &gens {
                let y = x.then(s);
                if !index.contains_key(&y) {
                    next.push(y);
                }
            }
        }
        next.sort();
        next.dedup();
        for y in next {
            if elements.len() >= cap {
                return Err(GroupError::OrderCapExceeded { cap });
            }
            index.insert(y.clone(), elements.len());
            elements.push(y);
        }
        layer_start = layer_end;
    }

    let n = elements.len();
    // Right multiplication by each generator, then the full table row by row
    // along a BFS spanning tree: b = parent(b) * s  =>  a*b = (a*parent(b))*s.
    let right: Vec<Vec<u32>> = gens
        .iter()
        .map(|s| elements.iter().map(|x| index[&x.then(s)] as u32).collect())
        .collect();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut bfs = vec![0usize];
    let mut head = 0;
    while head < bfs.len() {
        let x = bfs[head];
        head += 1;
        for (k, r) in right.iter().enumerate() {
            let y = r[x] as usize;
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, k));
                bfs.push(y);
            }
        }
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        table[a * n] = a as u32;
        for &b in &bfs[1..] {
            let (p, k) = parent[b].expect("bfs tree covers the group");
            table[a * n + b] = right[k][table[a * n + p] as usize];
        }
    }
    let labels = elements.iter().map(|p| p.to_string()).collect();
    let name = format!(
        "<{}>",
        gens.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    FiniteGroup::from_raw(name, n, table, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse(degree, s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        assert_eq!(p(4, "(1 2)(3 4)").to_string(), "(1 2)(3 4)");
        assert_eq!(p(4, "(3,1,2)").to_string(), "(1 2 3)");
        assert_eq!(p(3, "()").to_string(), "()");
        assert!(Permutation::parse(3, "(1 4)").is_err());
        assert!(Permutation::parse(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse(3, "(1 2").is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = p(3, "(1 2)");
        let b = p(3, "(1 2 3)");
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.then(&a).is_identity());
        assert!(b.then(&b.inverse()).is_identity());
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let g = from_permutation_generators(3, &[p(3, "(1 2)"), p(3, "(1 2 3)")]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        g.check_axioms().unwrap();
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn cyclic_from_long_cycle() {
        for n in 1..=9 {
            let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let gen = p(n, &format!("({})", cycle.join(" ")));
            let g = from_permutation_generators(n, &[gen]).unwrap();
            assert_eq!(g.order(), n);
            assert!(g.is_abelian());
        }
    }

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = from_permutation_generators(4, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn order_cap_is_enforced() {
        let gens = [p(5, "(1 2)"), p(5, "(1 2 3 4 5)")];
        let err = from_permutation_generators_capped(5, &gens, 100).unwrap_err();
        assert_eq!(err, GroupError::OrderCapExceeded { cap: 100 });
    }

    #[test]
    fn enumeration_is_deterministic() {
        let gens = [p(4, "(1 2 3 4)"), p(4, "(1 3)")];
        let a = from_permutation_generators(4, &gens).unwrap();
        let b = from_permutation_generators(4, &gens).unwrap();
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.labels(), b.labels());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err = from_permutation_generators(4, &[p(3, "(1 2)")]).unwrap_err();
        assert!(matches!(err, GroupError::NotAPermutation { .. }));
    }
}
