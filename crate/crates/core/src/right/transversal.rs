//! The right gyrogroup on a right transversal: `x∘y` is the element of `S`
//! lying in the right coset `H·x·y`.

use super::RightGyrogroup;
use crate::error::{Error, Result};
use crate::group::{ConcreteGroup, FiniteGroup, Perm};
use crate::fixtures;

#[derive(Clone, Debug)]
pub struct Transversal {
    pub rgyro: RightGyrogroup,
    /// `elements[i]` is the group element standing for index `i`; the
    /// element of `S` inside `H` comes first.
    pub elements: Vec<usize>,
}

pub fn transversal_rgyro(k: &FiniteGroup, h: &[usize], s: &[usize]) -> Result<Transversal> {
    if !k.is_subgroup(h) {
        return Err(Error::NotSubgroup(format!("{h:?}")));
    }
    let n = k.order();
    let mut in_h = vec![false; n];
    for &x in h {
        in_h[x] = true;
    }
    // right coset label: Hx = Hy iff x y⁻¹ ∈ H
    let same_coset = |x: usize, y: usize| in_h[k.mul(x, k.inv(y))];
    if s.len() * h.len() != n || s.iter().any(|&x| x >= n) {
        return Err(Error::NotTransversal(format!("{} elements for index {}", s.len(), n / h.len().max(1))));
    }
    for (i, &x) in s.iter().enumerate() {
        if let Some(&y) = s[..i].iter().find(|&&y| same_coset(x, y)) {
            return Err(Error::NotTransversal(format!("{x} and {y} lie in the same right coset")));
        }
    }
    let first = s.iter().position(|&x| in_h[x]).expect("some element of S lies in H");
    let mut elements = vec![s[first]];
    elements.extend(s.iter().enumerate().filter(|&(i, _)| i != first).map(|(_, &x)| x));

    let m = elements.len();
    let mut rows = vec![vec![0; m]; m];
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            let xy = k.mul(x, y);
            rows[i][j] = elements.iter().position(|&t| same_coset(xy, t)).expect("S meets every right coset");
        }
    }
    let mut rgyro = RightGyrogroup::from_rows(&rows)?;
    if let Some(labels) = k.labels() {
        rgyro = rgyro.with_labels(elements.iter().map(|&x| labels[x].clone()).collect())?;
    }
    Ok(Transversal { rgyro, elements })
}

/// `Sym(n)` with `H` the stabilizer of the last point and
/// `S = {I, (0 n-1), …, (n-2 n-1)}`.
#[derive(Clone, Debug)]
pub struct SymTransversal {
    pub group: ConcreteGroup<Perm>,
    pub subgroup: Vec<usize>,
    pub transversal: Transversal,
}

impl SymTransversal {
    /// Index in the right gyrogroup of the transposition `(i n-1)`.
    pub fn transposition(&self, i: usize) -> usize {
        let n = self.group.element(0).degree();
        let t = self.group.index_of(&Perm::transposition(n, i, n - 1)).expect("transposition in Sym(n)");
        self.transversal.elements.iter().position(|&x| x == t).expect("transposition in S")
    }

    /// Pairs `i != j` where `(i n-1)∘(j n-1) = (i n-1)` fails.
    pub fn rule_violations(&self) -> Vec<(usize, usize)> {
        let n = self.group.element(0).degree();
        let mut bad = Vec::new();
        for i in 0..n.saturating_sub(1) {
            for j in (0..n - 1).filter(|&j| j != i) {
                let (ti, tj) = (self.transposition(i), self.transposition(j));
                if self.transversal.rgyro.op(ti, tj) != ti {
                    bad.push((i, j));
                }
            }
        }
        bad
    }
}

pub fn sym_transversal(n: usize) -> Result<SymTransversal> {
    if n < 2 {
        return Err(Error::Precondition("the transversal construction needs n >= 2".into()));
    }
    let group = fixtures::symmetric_group(n);
    let subgroup: Vec<usize> =
        (0..group.order()).filter(|&i| group.element(i).fixes(n - 1)).collect();
    let mut s = vec![group.index_of(&Perm::identity(n)).expect("identity")];
    for i in 0..n - 1 {
        s.push(group.index_of(&Perm::transposition(n, i, n - 1)).expect("transposition"));
    }
    let transversal = transversal_rgyro(group.group(), &subgroup, &s)?;
    Ok(SymTransversal { group, subgroup, transversal })
}
