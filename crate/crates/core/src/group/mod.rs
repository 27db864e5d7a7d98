//! Abstract finite groups given by multiplication tables, together with the
//! permutation and closure machinery the rest of the crate is built on.

mod closure;
mod hom;
mod iso;
mod partition;
mod perm;

pub use closure::{generate_closure, ConcreteGroup, DEFAULT_CLOSURE_BUDGET};
pub use hom::{enumerate_homs, GroupHom, HomReport};
pub use iso::{isomorphic, isomorphic_with_bound, magma_isomorphism, DEFAULT_ISO_BOUND};
pub use partition::Partition;
pub use perm::Perm;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// A finite group as an `order × order` product table over element indices.
///
/// Labels are display metadata only; no algorithm reads them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a product table (Latin rows/columns, two-sided identity,
    /// inverses, associativity on all triples) and builds the group.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
        let order = rows.len();
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Malformed(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        FiniteGroup::from_flat(order, table)
    }

    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<FiniteGroup> {
        let g = FiniteGroup::from_flat_unverified(order, table)?;
        let report = g.check_axioms();
        if !report.passed() {
            return Err(Error::Axioms(report));
        }
        Ok(g)
    }

    /// Builds the group after checking shape, Latin property and the identity,
    /// but not associativity. Used for tables produced by closures of
    /// associative operations, where the cubic check would dominate.
    pub(crate) fn from_flat_unverified(order: usize, table: Vec<usize>) -> Result<FiniteGroup> {
        if order == 0 {
            return Err(Error::Malformed("a group has at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::Malformed(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(pos) = table.iter().position(|&x| x >= order) {
            return Err(Error::Malformed(format!(
                "entry ({}, {}) = {} is out of range",
                pos / order,
                pos % order,
                table[pos]
            )));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or_else(|| Error::Axioms(single("identity", &[])))?;
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            if let Some(b) = row.iter().position(|&x| x == identity) {
                inverse[a] = b;
            }
        }
        let g = FiniteGroup { order, table, identity, inverse, labels: None };
        let mut report = AxiomReport::new();
        g.check_latin(&mut report);
        for a in 0..order {
            let b = g.inverse[a];
            report.expect(b != usize::MAX && g.mul(b, a) == identity, "inverse", &[a]);
        }
        if !report.passed() {
            return Err(Error::Axioms(report));
        }
        Ok(g)
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup { order: 1, table: vec![0], identity: 0, inverse: vec![0], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FiniteGroup> {
        if labels.len() != self.order {
            return Err(Error::Malformed(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn check_latin(&self, report: &mut AxiomReport) {
        let n = self.order;
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                let r = self.table[a * n + b];
                report.expect(!std::mem::replace(&mut row[r], true), "latin-row", &[a, b]);
                let c = self.table[b * n + a];
                report.expect(!std::mem::replace(&mut col[c], true), "latin-column", &[b, a]);
            }
        }
    }

    /// Exhaustive check of every group axiom.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        self.check_latin(&mut report);
        let n = self.order;
        for a in 0..n {
            report.expect(self.mul(self.identity, a) == a, "identity", &[a]);
            report.expect(self.mul(a, self.identity) == a, "identity", &[a]);
            let ai = self.inverse[a];
            report.expect(
                self.mul(a, ai) == self.identity && self.mul(ai, a) == self.identity,
                "inverse",
                &[a],
            );
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        report.record("associativity", &[a, b, c]);
                    }
                }
            }
        }
        report
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[a].as_str())
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`, sorted by index.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let closure = generate_closure(gens, self.identity, |&x, &y| self.mul(x, y), usize::MAX)
            .expect("closure inside a finite table cannot exceed an unbounded budget");
        sorted(closure)
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let member = self.membership(subset);
        member[self.identity]
            && subset.iter().all(|&a| member[self.inv(a)] && subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        let member = self.membership(subset);
        self.is_subgroup(subset)
            && (0..self.order).all(|g| subset.iter().all(|&h| member[self.conjugate(g, h)]))
    }

    /// Every subgroup, each sorted, listed by order and then lexicographically.
    /// Found by extending known subgroups one element at a time.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        let mut frontier = vec![vec![self.identity]];
        found.insert(vec![self.identity]);
        while let Some(h) = frontier.pop() {
            let member = self.membership(&h);
            for g in (0..self.order).filter(|&g| !member[g]) {
                let mut gens = h.clone();
                gens.push(g);
                let bigger = self.subgroup_generated(&gens);
                if found.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// The smallest normal subgroup containing `gens`: close under products,
    /// conjugate the generators by every element, repeat until stable.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut generators: Vec<usize> = sorted(gens.to_vec());
        loop {
            let current = self.subgroup_generated(&generators);
            let member = self.membership(&current);
            let mut fresh = Vec::new();
            for g in 0..self.order {
                for &h in &generators {
                    let c = self.conjugate(g, h);
                    if !member[c] {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return current;
            }
            generators.extend(fresh);
            generators = sorted(generators);
        }
    }

    /// Left cosets `aN` of a normal subgroup, as `(coset index of each element,
    /// representative of each coset)`. Representatives are minimal indices and
    /// cosets are numbered by representative.
    fn cosets(&self, normal: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(a);
            for &h in normal {
                coset_of[self.mul(a, h)] = idx;
            }
        }
        (coset_of, reps)
    }

    /// The quotient by a normal subgroup, with its projection.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, GroupHom)> {
        let normal = sorted(normal.to_vec());
        if normal.iter().any(|&x| x >= self.order) {
            return Err(Error::NotSubgroup("element index out of range".into()));
        }
        if !self.is_subgroup(&normal) {
            return Err(Error::NotSubgroup(format!("{normal:?} is not closed under the product")));
        }
        if !self.is_normal(&normal) {
            return Err(Error::NotNormal(format!("{normal:?} is not stable under conjugation")));
        }
        let (coset_of, reps) = self.cosets(&normal);
        let q = reps.len();
        let mut table = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let quotient = FiniteGroup::from_flat_unverified(q, table)?;
        debug_assert_eq!(q * normal.len(), self.order);
        Ok((quotient, GroupHom::new(coset_of)))
    }

    pub(crate) fn membership(&self, subset: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        for &x in subset {
            member[x] = true;
        }
        member
    }

    /// Renumbers the identity to index 0 by swapping it with whatever sits
    /// there, returning the new group and the relabelling (old -> new).
    pub fn with_identity_first(&self) -> (FiniteGroup, Vec<usize>) {
        let n = self.order;
        let mut relabel: Vec<usize> = (0..n).collect();
        relabel.swap(0, self.identity);
        // relabel is an involution, so it is its own inverse
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel[a] * n + relabel[b]] = relabel[self.mul(a, b)];
            }
        }
        let mut g = FiniteGroup::from_flat_unverified(n, table).expect("relabelled group table");
        if let Some(l) = &self.labels {
            g.labels = Some((0..n).map(|i| l[relabel[i]].clone()).collect());
        }
        (g, relabel)
    }
}

pub(crate) fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

fn single(check: &'static str, witness: &[usize]) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.record(check, witness);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sym3() -> ConcreteGroup<Perm> {
        fixtures::symmetric_group(3)
    }

    #[test]
    fn generated_subgroups_of_sym3() {
        let s3 = sym3();
        let swap = s3.index_of(&Perm::transposition(3, 0, 1)).unwrap();
        let cyc = s3.index_of(&Perm::cycle(3, &[0, 1, 2]).unwrap()).unwrap();
        assert_eq!(s3.group().subgroup_generated(&[]), vec![0]);
        assert_eq!(s3.group().subgroup_generated(&[swap]).len(), 2);
        assert_eq!(s3.group().subgroup_generated(&[swap, cyc]).len(), 6);
    }

    #[test]
    fn subgroup_lattices() {
        // brute-force oracle: every subset closed under products
        let g = fixtures::dihedral(3);
        let mut oracle = Vec::new();
        for mask in 0u32..(1 << 6) {
            let subset: Vec<usize> = (0..6).filter(|&i| mask & (1 << i) != 0).collect();
            if !subset.is_empty() && g.is_subgroup(&subset) {
                oracle.push(subset);
            }
        }
        let mut got = g.subgroups();
        got.sort();
        oracle.sort();
        assert_eq!(got, oracle);
        assert_eq!(fixtures::quaternion().subgroups().len(), 6);
        assert_eq!(fixtures::dihedral(4).subgroups().len(), 10);
    }

    #[test]
    fn normal_closures_in_sym3() {
        let s3 = sym3();
        let g = s3.group();
        let swap = s3.index_of(&Perm::transposition(3, 0, 1)).unwrap();
        let cyc = s3.index_of(&Perm::cycle(3, &[0, 1, 2]).unwrap()).unwrap();
        assert_eq!(g.normal_closure(&[swap]).len(), 6);
        let a3 = g.normal_closure(&[cyc]);
        assert_eq!(a3.len(), 3);
        assert!(a3.iter().all(|&i| s3.element(i).is_even()));
        assert_eq!(g.normal_closure(&(0..6).collect::<Vec<_>>()).len(), 6);
    }

    #[test]
    fn brute_force_normal_closure_oracle() {
        // conjugate-and-close until nothing new appears, on element sets
        let s3 = sym3();
        let swap = Perm::transposition(3, 0, 1);
        let mut set = vec![Perm::identity(3), swap];
        loop {
            let mut next = set.clone();
            for g in s3.elements() {
                for h in &set {
                    let c = &(g * h) * &g.inverse();
                    if !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            for a in set.clone() {
                for b in set.clone() {
                    let p = &a * &b;
                    if !next.contains(&p) {
                        next.push(p);
                    }
                }
            }
            if next.len() == set.len() {
                break;
            }
            set = next;
        }
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn quotients() {
        let s3 = sym3();
        let g = s3.group();
        let all: Vec<usize> = (0..6).collect();
        let (triv, proj) = g.quotient(&all).unwrap();
        assert_eq!(triv.order(), 1);
        assert!(proj.images().iter().all(|&x| x == 0));

        let (same, proj) = g.quotient(&[0]).unwrap();
        assert_eq!(same.order(), 6);
        assert!(proj.is_injective());
        assert!(proj.verify(g, &same).passed());

        let cyc = s3.index_of(&Perm::cycle(3, &[0, 1, 2]).unwrap()).unwrap();
        let a3 = g.normal_closure(&[cyc]);
        let (c2, proj) = g.quotient(&a3).unwrap();
        assert_eq!(c2.order(), 2);
        assert!(proj.verify(g, &c2).passed());
        // hand coset table: even * even = even, odd * odd = even
        for i in 0..6 {
            let parity = if s3.element(i).is_even() { 0 } else { 1 };
            assert_eq!(proj.apply(i), parity);
        }
        assert!(c2.check_axioms().passed());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = sym3();
        let swap = s3.index_of(&Perm::transposition(3, 0, 1)).unwrap();
        let h = s3.group().subgroup_generated(&[swap]);
        assert!(matches!(s3.group().quotient(&h), Err(Error::NotNormal(_))));
        assert!(matches!(s3.group().quotient(&[swap]), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn rejects_non_associative_table() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_rows(&rows) {
            Err(Error::Axioms(r)) => assert!(r.has("associativity")),
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn quotient_order_times_normal_order() {
        for g in [fixtures::dihedral(4), fixtures::quaternion(), fixtures::cyclic(8)] {
            for x in 0..g.order() {
                let n = g.normal_closure(&[x]);
                let (q, proj) = g.quotient(&n).unwrap();
                assert_eq!(q.order() * n.len(), g.order());
                assert!(proj.verify(&g, &q).passed());
            }
        }
    }
}
