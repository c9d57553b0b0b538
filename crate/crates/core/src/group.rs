//! Finite groups as fully materialized multiplication tables.

use std::borrow::Cow;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Default limit on the order of any group the constructors will build.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}) = {value} is out of range for order {order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("not a permutation of degree {degree}: {reason}")]
    NotAPermutation { degree: usize, reason: String },
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("invalid parameter {parameter} for {family}: {reason}")]
    InvalidParameter {
        family: String,
        parameter: i64,
        reason: String,
    },
    #[error("element index {index} out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("label table has {got} entries, expected {expected}")]
    LabelCount { got: usize, expected: usize },
}

/// An element index checked against the group it was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(usize);

impl Element {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite group on the indices `0..order`, identity at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
    relabeling: Option<Vec<usize>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// Validates a Cayley table and returns the group it describes.
///
/// If the identity is not at index 0 it is swapped with index 0; the map
/// from input index to stored index is then available from
/// [`FiniteGroup::relabeling`].
pub fn validate_cayley_table(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_table("table", rows, None)
}

impl FiniteGroup {
    /// Builds a group from an arbitrary square table, checking every axiom.
    pub fn from_table(
        name: impl Into<String>,
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        for (row, r) in rows.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::NotClosed {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(GroupError::LabelCount {
                    got: l.len(),
                    expected: n,
                });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;

        // Swap the identity into slot 0; the swap is an involution.
        let relabel = |i: usize| {
            if i == identity {
                0
            } else if i == 0 {
                identity
            } else {
                i
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        let labels = labels.map(|mut l| {
            l.swap(0, identity);
            l
        });
        let relabeling = (identity != 0).then(|| (0..n).map(relabel).collect());
        Self::from_normalized(name.into(), n, table, labels, relabeling, &relabel)
    }

    /// Builds a group from a row-major table whose identity is already at 0.
    pub(crate) fn from_raw(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), order * order);
        if (0..order).any(|x| table[x] as usize != x || table[x * order] as usize != x) {
            return Err(GroupError::NoIdentity);
        }
        if let Some(&value) = table.iter().find(|&&v| v as usize >= order) {
            let pos = table.iter().position(|&v| v == value).unwrap_or(0);
            return Err(GroupError::NotClosed {
                row: pos / order,
                col: pos % order,
                value: value as usize,
                order,
            });
        }
        Self::from_normalized(name.into(), order, table, labels, None, &|i| i)
    }

    fn from_normalized(
        name: String,
        n: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        relabeling: Option<Vec<usize>>,
        to_input: &dyn Fn(usize) -> usize,
    ) -> Result<Self, GroupError> {
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row
                .iter()
                .position(|&v| v == 0)
                .filter(|&b| table[b * n + a] == 0)
                .ok_or(GroupError::NoInverse {
                    element: to_input(a),
                })?;
            inverse[a] = b as u32;
        }
        if let Some((a, b, c)) = light_associativity_violation(n, &table) {
            return Err(GroupError::NotAssociative {
                a: to_input(a),
                b: to_input(b),
                c: to_input(c),
            });
        }
        Ok(FiniteGroup {
            name,
            order: n,
            table,
            inverse,
            labels,
            relabeling,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            name: "C1".into(),
            order: 1,
            table: vec![0],
            inverse: vec![0],
            labels: None,
            relabeling: None,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Map from input index to stored index, present only when the input
    /// table had its identity somewhere other than index 0.
    pub fn relabeling(&self) -> Option<&[usize]> {
        self.relabeling.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Self {
        if let Some(l) = &labels {
            assert_eq!(l.len(), self.order, "label count must match order");
        }
        self.labels = labels;
        self
    }

    /// Display label of an element; falls back to the index.
    pub fn label(&self, a: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[a]),
            None => Cow::Owned(a.to_string()),
        }
    }

    pub fn element(&self, index: usize) -> Result<Element, GroupError> {
        if index < self.order {
            Ok(Element(index))
        } else {
            Err(GroupError::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `x a x⁻¹`
    #[inline]
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn power(&self, a: usize, mut k: usize) -> usize {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    /// Full O(n³) check of the four table invariants. Independent of the
    /// generator-based associativity test used during construction.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let v = self.mul(a, b);
                if v >= n {
                    return Err(GroupError::NotClosed {
                        row: a,
                        col: b,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        if (0..n).any(|b| self.mul(0, b) != b || self.mul(b, 0) != b) {
            return Err(GroupError::NoIdentity);
        }
        for a in 0..n {
            let ai = self.inv(a);
            if ai >= n || self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return Err(GroupError::NoInverse { element: a });
            }
        }
        for a in 0..n {
            let row_a = self.row(a);
            for b in 0..n {
                let ab = row_a[b] as usize;
                let row_ab = self.row(ab);
                let row_b = self.row(b);
                for c in 0..n {
                    if row_ab[c] != row_a[row_b[c] as usize] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Light's associativity test: pick a generating set `S` of the magma and
/// check `(x s) y = x (s y)` for `s` in `S` only.
fn light_associativity_violation(n: usize, table: &[u32]) -> Option<(usize, usize, usize)> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut reached_list = vec![0usize];
    let mut gens: Vec<usize> = Vec::new();
    for candidate in 0..n {
        if reached[candidate] {
            continue;
        }
        gens.push(candidate);
        let mut queue: VecDeque<(usize, usize)> =
            reached_list.iter().map(|&x| (x, candidate)).collect();
        while let Some((x, s)) = queue.pop_front() {
            let y = mul(x, s);
            if !reached[y] {
                reached[y] = true;
                reached_list.push(y);
                queue.extend(gens.iter().map(|&g| (y, g)));
            }
        }
    }
    for &s in &gens {
        for x in 0..n {
            let xs = mul(x, s);
            for y in 0..n {
                if mul(xs, y) != mul(x, mul(s, y)) {
                    return Some((x, s, y));
                }
            }
        }
    }
    None
}
