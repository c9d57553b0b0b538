//! Every group of a small order, up to isomorphism, by Cayley-table search.
//!
//! Fix a generating sequence `g_1, g_2, …` with each `g_i` outside the
//! subgroup `H_{i-1}` generated by its predecessors. Label the identity 0
//! and then label elements breadth-first: while building `H_i`, scan the
//! labelled elements in order and, for each, the generators `g_1 … g_i`;
//! `x·g_j` either has a label already or takes the next free one. When the
//! scan catches up with the labels, `H_i` is closed; its order must divide
//! `n`, and if it is not the whole group, `g_{i+1}` takes the next label.
//! Under this labeling the table is determined by the generator columns, so
//! the search decides those cells in scan order (an existing label or the
//! next new one) and derives everything else by associativity and
//! Latin-square propagation. Each leaf is a complete group table;
//! isomorphic leaves are merged.

use crate::catalog::fingerprint::{invariant_profile, ElementInvariant, Fingerprint};
use crate::catalog::iso::is_isomorphic;
use crate::catalog::CatalogError;
use crate::group::FiniteGroup;

/// Largest order searched exhaustively.
pub const ENUMERATION_CAP: usize = 16;

const NONE: u32 = u32::MAX;

/// One representative per isomorphism class of groups of order `n`, in
/// order of discovery.
pub fn enumerate_groups_of_order(n: usize) -> Result<Vec<FiniteGroup>, CatalogError> {
    if n > ENUMERATION_CAP {
        return Err(CatalogError::CapExceeded {
            order: n,
            cap: ENUMERATION_CAP,
        });
    }
    if n <= 1 {
        return Ok(if n == 1 {
            vec![FiniteGroup::trivial()]
        } else {
            Vec::new()
        });
    }
    let mut search = TableSearch::new(n);
    let mut classes: Vec<(Fingerprint, Vec<ElementInvariant>, FiniteGroup)> = Vec::new();
    let ok = search.seed();
    debug_assert!(ok);
    // Start as if the trivial subgroup {0} had just closed.
    search.run(1, 0, 1, &mut |table| {
        let g = FiniteGroup::from_raw(format!("G{n}"), n, table.to_vec(), None)
            .expect("search leaves are group tables");
        let fp = Fingerprint::of(&g);
        let profile = invariant_profile(&g);
        let known = classes
            .iter()
            .any(|(f, p, h)| *f == fp && *p == profile && is_isomorphic(h, &g));
        if !known {
            classes.push((fp, profile, g));
        }
    });
    Ok(classes.into_iter().map(|(_, _, g)| g).collect())
}

struct TableSearch {
    n: usize,
    table: Vec<u32>,
    /// `rowpos[a*n + c] = b` iff `table[a][b] = c`.
    rowpos: Vec<u32>,
    /// `colpos[b*n + c] = a` iff `table[a][b] = c`.
    colpos: Vec<u32>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    /// Labels of the generators chosen so far.
    gens: Vec<usize>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        TableSearch {
            n,
            table: vec![NONE; n * n],
            rowpos: vec![NONE; n * n],
            colpos: vec![NONE; n * n],
            trail: Vec::new(),
            queue: Vec::new(),
            gens: Vec::new(),
        }
    }

    /// Identity row and column.
    fn seed(&mut self) -> bool {
        for x in 0..self.n as u32 {
            if !self.set(0, x as usize, x) || !self.set(x as usize, 0, x) {
                return false;
            }
        }
        self.propagate()
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> u32 {
        self.table[a * self.n + b]
    }

    fn set(&mut self, a: usize, b: usize, c: u32) -> bool {
        let n = self.n;
        let cell = a * n + b;
        let current = self.table[cell];
        if current != NONE {
            return current == c;
        }
        let c = c as usize;
        if self.rowpos[a * n + c] != NONE || self.colpos[b * n + c] != NONE {
            return false;
        }
        self.table[cell] = c as u32;
        self.rowpos[a * n + c] = b as u32;
        self.colpos[b * n + c] = a as u32;
        self.trail.push(cell);
        self.queue.push(cell);
        true
    }

    fn undo(&mut self, mark: usize) {
        let n = self.n;
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            let (a, b) = (cell / n, cell % n);
            let c = self.table[cell] as usize;
            self.rowpos[a * n + c] = NONE;
            self.colpos[b * n + c] = NONE;
            self.table[cell] = NONE;
        }
        self.queue.clear();
    }

    /// Requires `table[u][z] = table[x][v]`, filling one side from the other.
    #[inline]
    fn equate(&mut self, u: usize, z: usize, x: usize, v: usize) -> bool {
        let l = self.get(u, z);
        let r = self.get(x, v);
        match (l != NONE, r != NONE) {
            (true, true) => l == r,
            (true, false) => self.set(x, v, l),
            (false, true) => self.set(u, z, r),
            (false, false) => true,
        }
    }

    /// For each new fact `a·b = c`, revisits every triple `(x, y, z)` in
    /// which it plays one of the four roles `xy`, `yz`, `(xy)z`, `x(yz)`.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        while let Some(cell) = self.queue.pop() {
            let (a, b) = (cell / n, cell % n);
            let c = self.table[cell] as usize;
            // x = a, y = b: (c)z = a(bz)
            for z in 0..n {
                let v = self.get(b, z);
                if v != NONE && !self.equate(c, z, a, v as usize) {
                    return false;
                }
            }
            // y = a, z = b: (xa)b = x(c)
            for x in 0..n {
                let u = self.get(x, a);
                if u != NONE && !self.equate(u as usize, b, x, c) {
                    return false;
                }
            }
            // (xy)z with xy = a, z = b: c = x(yb)
            for x in 0..n {
                let y = self.rowpos[x * n + a];
                if y != NONE {
                    let v = self.get(y as usize, b);
                    if v != NONE && !self.equate(a, b, x, v as usize) {
                        return false;
                    }
                }
            }
            // x(yz) with x = a, yz = b: (ay)z = c
            for y in 0..n {
                let z = self.rowpos[y * n + b];
                if z != NONE {
                    let u = self.get(a, y);
                    if u != NONE && !self.equate(u as usize, z as usize, a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Decides the cell `x·g_j` (generator `j` of the first `gens.len()`),
    /// with `next` the first unused label.
    fn run(&mut self, x: usize, j: usize, next: u32, leaf: &mut dyn FnMut(&[u32])) {
        let n = self.n;
        if x as u32 == next {
            // The labelled elements form the subgroup generated so far.
            let size = next as usize;
            if size == n {
                debug_assert!(self.table.iter().all(|&v| v != NONE));
                leaf(&self.table);
            } else if n.is_multiple_of(size) {
                self.gens.push(size);
                self.run(0, 0, next + 1, leaf);
                self.gens.pop();
            }
            return;
        }
        let (nx, nj) = if j + 1 < self.gens.len() {
            (x, j + 1)
        } else {
            (x + 1, 0)
        };
        let col = self.gens[j];
        if self.get(x, col) != NONE {
            self.run(nx, nj, next, leaf);
            return;
        }
        let top = if (next as usize) < n { next + 1 } else { next };
        for c in 0..top {
            let mark = self.trail.len();
            if self.set(x, col, c) && self.propagate() {
                self.run(nx, nj, next.max(c + 1), leaf);
            }
            self.undo(mark);
        }
    }
}
