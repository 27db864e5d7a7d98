//! Backtracking enumeration of gyrogroup Cayley tables of small order.
//!
//! Tables are normalized loops (row 0 and column 0 are the identity) and are
//! filled one row at a time in lexicographic order. Two derived laws let a
//! completed row force others:
//!
//! * left cancellation with two-sided inverses: `L_{a⁻¹} = L_a⁻¹`, where
//!   `a⁻¹` is the column holding 0 in row `a`;
//! * `gyr[a,a] = I`: `L_{a⊕a} = L_a ∘ L_a`.
//!
//! Every completed set of rows is then checked against the gyration axioms
//! that have become evaluable. Complete tables are re-validated with
//! [`Gyrogroup::from_flat`] before they are emitted.

use std::time::{Duration, Instant};

use super::Gyrogroup;
use crate::error::{Error, Result};

pub const MAX_SEARCH_ORDER: usize = 10;

const UNSET: u8 = u8::MAX;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub order: usize,
    /// Stop after this many tables have been emitted.
    pub limit: usize,
    pub time_budget: Option<Duration>,
    /// Emit only non-associative tables.
    pub proper_only: bool,
}

impl SearchOptions {
    pub fn new(order: usize) -> Self {
        SearchOptions { order, limit: usize::MAX, time_budget: None, proper_only: false }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub tables: Vec<Gyrogroup>,
    /// The whole search space was explored.
    pub exhausted: bool,
    /// The time budget ran out first; `tables` is a lexicographic prefix.
    pub timed_out: bool,
    pub nodes: u64,
}

impl SearchOutcome {
    pub fn is_complete(&self) -> bool {
        self.exhausted
    }
}

struct Searcher {
    n: usize,
    table: Vec<u8>,
    row_done: Vec<bool>,
    opts: SearchOptions,
    started: Instant,
    nodes: u64,
    found: Vec<Gyrogroup>,
    stop: Stop,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stop {
    No,
    Limit,
    Time,
}

/// Enumerates gyrogroups of the given order in lexicographic table order.
pub fn search_gyrogroups(opts: SearchOptions) -> Result<SearchOutcome> {
    let n = opts.order;
    if n == 0 || n > MAX_SEARCH_ORDER {
        return Err(Error::Precondition(format!("search order must lie in 1..={MAX_SEARCH_ORDER}")));
    }
    let mut s = Searcher {
        n,
        table: vec![UNSET; n * n],
        row_done: vec![false; n],
        opts,
        started: Instant::now(),
        nodes: 0,
        found: Vec::new(),
        stop: Stop::No,
    };
    for b in 0..n {
        s.table[b] = b as u8;
    }
    for a in 0..n {
        s.table[a * n] = a as u8;
    }
    s.row_done[0] = true;
    if s.opts.limit > 0 {
        s.next_row(1);
    } else {
        s.stop = Stop::Limit;
    }
    Ok(SearchOutcome {
        tables: s.found,
        exhausted: s.stop == Stop::No,
        timed_out: s.stop == Stop::Time,
        nodes: s.nodes,
    })
}

impl Searcher {
    #[inline]
    fn at(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(budget) = self.opts.time_budget {
                if self.started.elapsed() > budget {
                    self.stop = Stop::Time;
                }
            }
        }
        self.stop != Stop::No
    }

    fn next_row(&mut self, r: usize) {
        if self.stop != Stop::No {
            return;
        }
        if r == self.n {
            self.emit();
            return;
        }
        if self.row_done[r] {
            self.next_row(r + 1);
            return;
        }
        let mut used = 1u16 << r;
        self.fill_cell(r, 1, &mut used);
    }

    /// Chooses the value of cell `(r, c)`, then the rest of the row.
    fn fill_cell(&mut self, r: usize, c: usize, used: &mut u16) {
        let n = self.n;
        if c == n {
            self.row_completed(r);
            return;
        }
        for v in 0..n {
            if *used & (1 << v) != 0 || self.column_has(c, v, r) {
                continue;
            }
            self.table[r * n + c] = v as u8;
            *used |= 1 << v;
            self.fill_cell(r, c + 1, used);
            *used &= !(1 << v);
            self.table[r * n + c] = UNSET;
            if self.stop != Stop::No {
                return;
            }
        }
    }

    fn column_has(&self, c: usize, v: usize, skip_row: usize) -> bool {
        (0..self.n).any(|a| a != skip_row && self.table[a * self.n + c] as usize == v)
    }

    fn row_completed(&mut self, r: usize) {
        if self.out_of_time() {
            return;
        }
        self.row_done[r] = true;
        let mut forced = Vec::new();
        if self.propagate(r, &mut forced) && self.consistent() {
            self.next_row(r + 1);
        }
        for &f in forced.iter().rev() {
            self.row_done[f] = false;
            for c in 1..self.n {
                self.table[f * self.n + c] = UNSET;
            }
        }
        self.row_done[r] = false;
    }

    /// Installs every row forced by the completed rows. Records newly forced
    /// rows in `forced` so they can be undone; returns false on conflict.
    fn propagate(&mut self, start: usize, forced: &mut Vec<usize>) -> bool {
        let n = self.n;
        let mut queue = vec![start];
        while let Some(a) = queue.pop() {
            let row: Vec<usize> = (0..n).map(|b| self.at(a, b)).collect();
            let ainv = row.iter().position(|&x| x == 0).expect("complete row");
            let mut inverse_row = vec![0; n];
            for (b, &x) in row.iter().enumerate() {
                inverse_row[x] = b;
            }
            let square_row: Vec<usize> = (0..n).map(|b| row[row[b]]).collect();
            for (target, images) in [(ainv, inverse_row), (row[a], square_row)] {
                match self.install(target, &images) {
                    Install::Conflict => return false,
                    Install::Matched => {}
                    Install::New => {
                        forced.push(target);
                        queue.push(target);
                    }
                }
            }
            // inverses pair up: a⁻¹'s inverse must be a
            if self.row_done[ainv] && self.at(ainv, a) != 0 {
                return false;
            }
        }
        true
    }

    fn install(&mut self, target: usize, images: &[usize]) -> Install {
        let n = self.n;
        if images[0] != target {
            return Install::Conflict;
        }
        if self.row_done[target] {
            let same = (0..n).all(|b| self.at(target, b) == images[b]);
            return if same { Install::Matched } else { Install::Conflict };
        }
        for c in 1..n {
            if self.column_has(c, images[c], target) {
                return Install::Conflict;
            }
        }
        for c in 1..n {
            self.table[target * n + c] = images[c] as u8;
        }
        self.row_done[target] = true;
        Install::New
    }

    /// Checks every gyration constraint whose rows are all known: that
    /// `gyr[a,b] = L_{a⊕b}⁻¹ L_a L_b` is an automorphism, and the left loop
    /// property.
    fn consistent(&self) -> bool {
        let n = self.n;
        let done = &self.row_done;
        let mut inverse_rows = vec![Vec::new(); n];
        for a in (0..n).filter(|&a| done[a]) {
            let mut inv = vec![0; n];
            for b in 0..n {
                inv[self.at(a, b)] = b;
            }
            inverse_rows[a] = inv;
        }
        let mut gyr: Vec<Option<Vec<usize>>> = vec![None; n * n];
        for a in (0..n).filter(|&a| done[a]) {
            for b in (0..n).filter(|&b| done[b]) {
                let ab = self.at(a, b);
                if !done[ab] {
                    continue;
                }
                let images: Vec<usize> =
                    (0..n).map(|z| inverse_rows[ab][self.at(a, self.at(b, z))]).collect();
                for c in (0..n).filter(|&c| done[c]) {
                    let gc = images[c];
                    if !done[gc] {
                        continue;
                    }
                    for d in 0..n {
                        if images[self.at(c, d)] != self.at(gc, images[d]) {
                            return false;
                        }
                    }
                }
                gyr[a * n + b] = Some(images);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(g) = &gyr[a * n + b] else { continue };
                let ab = self.at(a, b);
                if let Some(h) = &gyr[ab * n + b] {
                    if g != h {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn emit(&mut self) {
        let n = self.n;
        let flat: Vec<usize> = self.table.iter().map(|&x| x as usize).collect();
        if let Ok(g) = Gyrogroup::from_flat(n, flat) {
            if self.opts.proper_only && g.is_associative() {
                return;
            }
            self.found.push(g);
            if self.found.len() >= self.opts.limit {
                self.stop = Stop::Limit;
            }
        }
    }
}

enum Install {
    New,
    Matched,
    Conflict,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All reduced Latin squares of order n, by plain enumeration.
    fn reduced_latin_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn rec(n: usize, cell: usize, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if cell == n * n {
                out.push(t.clone());
                return;
            }
            let (r, c) = (cell / n, cell % n);
            if r == 0 || c == 0 {
                t[r][c] = r.max(c);
                if (0..r).any(|k| t[k][c] == t[r][c]) {
                    return;
                }
                rec(n, cell + 1, t, out);
                return;
            }
            for v in 0..n {
                if (0..c).any(|k| t[r][k] == v) || (0..r).any(|k| t[k][c] == v) {
                    continue;
                }
                t[r][c] = v;
                rec(n, cell + 1, t, out);
            }
        }
        let mut out = Vec::new();
        rec(n, 0, &mut vec![vec![0; n]; n], &mut out);
        out
    }

    #[test]
    fn order_two_gives_the_cyclic_group() {
        let out = search_gyrogroups(SearchOptions::new(2)).unwrap();
        assert!(out.exhausted);
        assert_eq!(out.tables.len(), 1);
        assert_eq!(out.tables[0].rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn small_orders_match_latin_square_oracle() {
        for n in 1..=5 {
            let oracle: Vec<Vec<Vec<usize>>> = reduced_latin_squares(n)
                .into_iter()
                .filter(|t| Gyrogroup::from_rows(t).is_ok())
                .collect();
            let got = search_gyrogroups(SearchOptions::new(n)).unwrap();
            assert!(got.exhausted);
            let rows: Vec<_> = got.tables.iter().map(|g| g.rows()).collect();
            assert_eq!(rows, oracle, "order {n}");
        }
    }

    #[test]
    fn order_three_and_five_are_associative() {
        for n in [3, 5] {
            let out = search_gyrogroups(SearchOptions::new(n)).unwrap();
            assert!(!out.tables.is_empty());
            assert!(out.tables.iter().all(|g| g.is_associative()));
        }
    }

    #[test]
    fn limit_stops_early() {
        let mut opts = SearchOptions::new(4);
        opts.limit = 1;
        let out = search_gyrogroups(opts).unwrap();
        assert_eq!(out.tables.len(), 1);
        assert!(!out.exhausted && !out.timed_out);
    }

    #[test]
    fn order_bound() {
        assert!(search_gyrogroups(SearchOptions::new(11)).is_err());
    }
}
