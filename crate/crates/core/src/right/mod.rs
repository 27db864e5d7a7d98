//! Right gyrogroups: a right identity, right inverses, and
//! `(x∘y)∘z = gyr[y,z](x)∘(y∘z)` with each `gyr[y,z]` an automorphism and
//! `gyr[y,y′] = I`.
//!
//! Gyrations are not part of the input; they are recovered from the table
//! by right division and then checked against every axiom.

mod action;
mod gbased;
mod invariant;
mod transversal;

pub use action::{
    enumerate_right_actions, enumerate_right_homs, group_actions_are_right_actions, hom_to_raction,
    non_group_action_witness, raction_orbit, raction_orbits, raction_stabilizer, raction_to_hom, rhom_kernel,
    rhom_verify, validate_right_action, NonGroupActionReport, RActionHom,
};
pub use gbased::{commutator, gbased, gbased_gyration_report, gbased_table};
pub use invariant::{
    check_invariant, congruence_from, fixed_kernel, image_rgyro, quotient_matches_image, quotient_rgyro, Congruence,
    ImageMatch, Quotient,
};
pub use transversal::{sym_transversal, transversal_rgyro, SymTransversal, Transversal};

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};
use crate::gyro::{flatten_square, is_bijection};
use crate::report::AxiomReport;

#[derive(Clone)]
pub struct RightGyrogroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    /// `gyr[y,z]` at `y * order + z`.
    gyr: Vec<Perm>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for RightGyrogroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RightGyrogroup").field("order", &self.order).field("table", &self.rows()).finish()
    }
}

impl PartialEq for RightGyrogroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for RightGyrogroup {}

/// Validates a right gyrogroup table given as rows, `rows[x][y] = x∘y`.
pub fn validate_right(rows: &[Vec<usize>]) -> Result<RightGyrogroup> {
    let (n, table) = flatten_square(rows)?;
    RightGyrogroup::from_flat(n, table)
}

impl RightGyrogroup {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<RightGyrogroup> {
        validate_right(rows)
    }

    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<RightGyrogroup> {
        if n == 0 || table.len() != n * n {
            return Err(Error::Malformed(format!("expected a non-empty {n}x{n} table")));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::Malformed(format!("entry {bad} is outside 0..{n}")));
        }
        let at = |x: usize, y: usize| table[x * n + y];

        let mut report = AxiomReport::new();
        for x in 0..n {
            report.expect(at(x, 0) == x, "right-identity", &[x]);
        }
        let mut columns_inv = vec![vec![0; n]; n];
        for y in 0..n {
            let column: Vec<usize> = (0..n).map(|x| at(x, y)).collect();
            if is_bijection(&column) {
                for (x, &v) in column.iter().enumerate() {
                    columns_inv[y][v] = x;
                }
            } else {
                report.record("right-translation-bijective", &[y]);
            }
        }
        let mut inverse = vec![0; n];
        for x in 0..n {
            match (0..n).find(|&y| at(x, y) == 0) {
                Some(y) => inverse[x] = y,
                None => report.record("right-inverse", &[x]),
            }
        }
        if !report.passed() {
            return Err(Error::Axioms(report));
        }

        // gyr[y,z](x) = R_{y∘z}⁻¹((x∘y)∘z), and again as ((x∘y)∘z)∘(y∘z)′
        let mut gyr = Vec::with_capacity(n * n);
        for y in 0..n {
            for z in 0..n {
                let yz = at(y, z);
                let mut images = vec![0; n];
                for (x, img) in images.iter_mut().enumerate() {
                    let xyz = at(at(x, y), z);
                    *img = columns_inv[yz][xyz];
                    let by_cancellation = at(xyz, inverse[yz]);
                    report.expect(*img == by_cancellation, "gyration-extraction-consistent", &[x, y, z]);
                }
                if is_bijection(&images) {
                    gyr.push(Perm::from_images_unchecked(images));
                } else {
                    report.record("gyr-bijective", &[y, z]);
                    gyr.push(Perm::identity(n));
                }
            }
        }
        let g = RightGyrogroup { order: n, table, inverse, gyr, labels: None };
        report.merge(g.check_axioms());
        report.into_result()?;
        Ok(g)
    }

    /// A group is a right gyrogroup with trivial gyrations. Elements are
    /// reindexed so the identity comes first.
    pub fn from_group(k: &FiniteGroup) -> Result<RightGyrogroup> {
        let (k, _) = k.with_identity_first();
        let g = RightGyrogroup::from_rows(&k.rows())?;
        match k.labels() {
            Some(l) => g.with_labels(l.to_vec()),
            None => Ok(g),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<RightGyrogroup> {
        if labels.len() != self.order {
            return Err(Error::Malformed(format!("{} labels for {} elements", labels.len(), self.order)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Every axiom and derived law, exhaustively, against the stored gyrations.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.order;
        let mut report = AxiomReport::new();
        for y in 0..n {
            for z in 0..n {
                let g = self.gyr(y, z);
                for x in 0..n {
                    for w in 0..n {
                        let ok = g.apply(self.op(x, w)) == self.op(g.apply(x), g.apply(w));
                        report.expect(ok, "gyr-automorphism", &[y, z, x, w]);
                    }
                    let lhs = self.op(self.op(x, y), z);
                    let rhs = self.op(g.apply(x), self.op(y, z));
                    report.expect(lhs == rhs, "right-gyroassociativity", &[x, y, z]);
                }
            }
            report.expect(self.gyr(y, self.inv(y)).is_identity(), "gyr-inverse-trivial", &[y]);
        }
        for x in 0..n {
            report.expect(self.op(0, x) == x, "left-identity", &[x]);
            report.expect(self.op(self.inv(x), x) == 0, "left-inverse", &[x]);
            report.expect(self.gyr(0, x).is_identity() && self.gyr(x, 0).is_identity(), "gyr-identity-trivial", &[x]);
            report.expect(self.gyr(x, self.inv(x)).is_identity(), "gyr-inverse-pair-trivial", &[x]);
            for y in 0..n {
                report.expect(self.op(self.op(x, y), self.inv(y)) == x, "right-cancellation", &[x, y]);
            }
        }
        // gyr[x,y] gyr[x∘y,z] = gyr[y,z] gyr[gyr[y,z](x), y∘z]
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    let gyz = self.gyr(y, z);
                    let lhs = self.gyr(x, y) * self.gyr(xy, z);
                    let rhs = gyz * self.gyr(gyz.apply(x), self.op(y, z));
                    report.expect(lhs == rhs, "gyr-composition", &[x, y, z]);
                }
            }
        }
        report
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x∘y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// `x′`, with `x∘x′ = e`.
    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    #[inline]
    pub fn gyr(&self, y: usize, z: usize) -> &Perm {
        &self.gyr[y * self.order + z]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn has_trivial_gyrations(&self) -> bool {
        self.gyr.iter().all(Perm::is_identity)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.op(x, y) == self.op(y, x)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.op(self.op(x, y), z) == self.op(x, self.op(y, z)))))
    }

    /// Contains `e` and is closed under `∘` and `′`.
    pub fn is_right_subgyrogroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in subset {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        member[0]
            && subset.iter().all(|&x| member[self.inv(x)] && subset.iter().all(|&y| member[self.op(x, y)]))
    }

    /// The same table read as a group, when it is one.
    pub fn as_group(&self) -> Option<FiniteGroup> {
        FiniteGroup::from_rows(&self.rows()).ok()
    }
}
