//! Finite gyrogroups: validation from a Cayley table, gyrations, derived
//! identities, L-subgyrogroups, homomorphism checks, and fixture search.

mod search;

pub use search::{search_gyrogroups, SearchOptions, SearchOutcome};

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};
use crate::report::AxiomReport;

/// A validated finite gyrogroup on `0..n` with identity 0.
///
/// `op(a, b)` is `a ⊕ b`. Gyrations are computed on first use and cached;
/// the cache is compute-once, so sharing a `Gyrogroup` across threads is safe.
#[derive(Clone, Debug)]
pub struct Gyrogroup {
    order: usize,
    table: Vec<usize>,
    left_inverse: Vec<usize>,
    labels: Option<Vec<String>>,
    gyr_cache: Vec<OnceLock<Perm>>,
}

impl PartialEq for Gyrogroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for Gyrogroup {}

/// Checks a square table for shape and index range only.
pub(crate) fn flatten_square(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Malformed("empty table".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!("row {a} has {} entries, expected {n}", row.len())));
        }
        if let Some(b) = row.iter().position(|&x| x >= n) {
            return Err(Error::Malformed(format!("entry ({a}, {b}) = {} is out of range", row[b])));
        }
        table.extend_from_slice(row);
    }
    Ok((n, table))
}

pub(crate) fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
}

impl Gyrogroup {
    /// Validates every gyrogroup axiom exhaustively and returns the
    /// gyrogroup, or the first witness for each violated axiom.
    ///
    /// Shape problems (non-square, out-of-range entries) come back as
    /// [`Error::Malformed`]; axiom failures as [`Error::Axioms`].
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Gyrogroup> {
        let (n, table) = flatten_square(rows)?;
        Gyrogroup::from_flat(n, table)
    }

    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Gyrogroup> {
        if n == 0 || table.len() != n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::Malformed(format!("expected {n}x{n} entries below {n}")));
        }
        let mut report = AxiomReport::new();
        for b in 0..n {
            report.expect(table[b] == b, "left-identity", &[b]);
        }
        for a in 0..n {
            // left translations must be bijective for gyr to be defined
            report.expect(is_bijection(&table[a * n..(a + 1) * n]), "left-translation-bijective", &[a]);
        }
        let mut left_inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&x| table[x * n + a] == 0) {
                Some(x) => left_inverse[a] = x,
                None => report.record("left-inverse", &[a]),
            }
        }
        if !report.passed() {
            return Err(Error::Axioms(report));
        }
        let g = Gyrogroup {
            order: n,
            table,
            left_inverse,
            labels: None,
            gyr_cache: (0..n * n).map(|_| OnceLock::new()).collect(),
        };
        let report = g.check_gyration_axioms();
        if !report.passed() {
            return Err(Error::Axioms(report));
        }
        Ok(g)
    }

    /// Any group with identity at index 0, viewed as a gyrogroup with trivial
    /// gyrations.
    pub fn from_group(group: &FiniteGroup) -> Result<Gyrogroup> {
        let (g, _) = group.with_identity_first();
        let mut gyro = Gyrogroup::from_rows(&g.rows())?;
        gyro.labels = g.labels().map(|l| l.to_vec());
        Ok(gyro)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Gyrogroup> {
        if labels.len() != self.order {
            return Err(Error::Malformed(format!("{} labels for order {}", labels.len(), self.order)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Raw image of `gyr[a,b]` from the defining formula, with no validity
    /// assumptions beyond the left inverse existing.
    fn gyr_images(&self, a: usize, b: usize) -> Vec<usize> {
        let ab_inv = self.left_inverse[self.op(a, b)];
        (0..self.order).map(|z| self.op(ab_inv, self.op(a, self.op(b, z)))).collect()
    }

    fn check_gyration_axioms(&self) -> AxiomReport {
        let n = self.order;
        let mut report = AxiomReport::new();
        let mut all_valid = true;
        for a in 0..n {
            for b in 0..n {
                let images = self.gyr_images(a, b);
                report.expect(images[0] == 0, "gyr-fixes-identity", &[a, b]);
                if !is_bijection(&images) {
                    report.record("gyr-automorphism", &[a, b]);
                    all_valid = false;
                    continue;
                }
                'auto: for c in 0..n {
                    for d in 0..n {
                        if images[self.op(c, d)] != self.op(images[c], images[d]) {
                            report.record("gyr-automorphism", &[a, b, c, d]);
                            break 'auto;
                        }
                    }
                }
                for c in 0..n {
                    let lhs = self.op(a, self.op(b, c));
                    let rhs = self.op(self.op(a, b), images[c]);
                    report.expect(lhs == rhs, "gyroassociativity", &[a, b, c]);
                }
                let _ = self.gyr_cache[a * n + b].set(Perm::from_images_unchecked(images));
            }
        }
        if all_valid {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.op(a, b);
                    report.expect(self.gyr(ab, b) == self.gyr(a, b), "left-loop", &[a, b]);
                }
            }
        }
        report
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `a ⊕ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// The `x` with `x ⊕ a = 0`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.left_inverse[a]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// `z ↦ a ⊕ z`.
    pub fn left_translation(&self, a: usize) -> Perm {
        Perm::from_images_unchecked(self.table[a * self.order..(a + 1) * self.order].to_vec())
    }

    /// `gyr[a,b]: z ↦ (a⊕b)⁻¹ ⊕ (a ⊕ (b ⊕ z))`, cached after first use.
    pub fn gyr(&self, a: usize, b: usize) -> &Perm {
        self.gyr_cache[a * self.order + b]
            .get_or_init(|| Perm::from_images_unchecked(self.gyr_images(a, b)))
    }

    /// Forces the whole gyration cache.
    pub fn gyrations(&self) -> Vec<&Perm> {
        let n = self.order;
        (0..n * n).map(|k| self.gyr(k / n, k % n)).collect()
    }

    pub fn has_trivial_gyrations(&self) -> bool {
        self.gyrations().iter().all(|p| p.is_identity())
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c))))
        })
    }

    /// Exhaustive check of the derived gyration identities: inversion
    /// `gyr⁻¹[a,b] = gyr[b,a]`, the four-gyration composition law,
    /// `gyr[a,a⁻¹] = I`, and left cancellation. Reads the cache, so a
    /// corrupted entry shows up here.
    pub fn check_identities(&self) -> AxiomReport {
        let n = self.order;
        let mut report = AxiomReport::new();
        for a in 0..n {
            report.expect(self.gyr(a, self.inv(a)).is_identity(), "gyr-inverse-pair", &[a]);
            for b in 0..n {
                report.expect(self.op(self.inv(a), self.op(a, b)) == b, "left-cancellation", &[a, b]);
                report.expect(self.gyr(a, b).inverse() == *self.gyr(b, a), "gyr-inversion", &[a, b]);
                let gab = self.gyr(a, b);
                let ab = self.op(a, b);
                for c in 0..n {
                    let lhs = self.gyr(ab, gab.apply(c)) * gab;
                    let rhs = self.gyr(a, self.op(b, c)) * self.gyr(b, c);
                    report.expect(lhs == rhs, "gyr-composition", &[a, b, c]);
                }
            }
        }
        report
    }

    fn subset_mask(&self, subset: &[usize]) -> Option<Vec<bool>> {
        let mut mask = vec![false; self.order];
        for &x in subset {
            if x >= self.order {
                return None;
            }
            mask[x] = true;
        }
        Some(mask)
    }

    /// Contains 0 and is closed under `⊕` and left inverses.
    pub fn is_subgyrogroup(&self, subset: &[usize]) -> bool {
        let Some(mask) = self.subset_mask(subset) else { return false };
        mask[0]
            && subset.iter().all(|&a| mask[self.inv(a)] && subset.iter().all(|&b| mask[self.op(a, b)]))
    }

    /// Subgyrogroup check plus gyration stability, reporting failures.
    ///
    /// Also confirms that `gyr[a,b](X) ⊆ X` and `gyr[a,b](X) = X` agree for
    /// every pair, which is forced for finite `X` and bijective gyrations.
    pub fn l_subgyrogroup_report(&self, subset: &[usize]) -> AxiomReport {
        let mut report = AxiomReport::new();
        let Some(mask) = self.subset_mask(subset) else {
            report.record("subset-in-range", &[]);
            return report;
        };
        report.expect(self.is_subgyrogroup(subset), "subgyrogroup", &[]);
        let size = mask.iter().filter(|&&m| m).count();
        for a in 0..self.order {
            for b in 0..self.order {
                let g = self.gyr(a, b);
                let mut image = vec![false; self.order];
                for x in (0..self.order).filter(|&x| mask[x]) {
                    image[g.apply(x)] = true;
                }
                let contained = (0..self.order).all(|y| !image[y] || mask[y]);
                let equal = image == mask;
                let image_size = image.iter().filter(|&&m| m).count();
                report.expect(contained, "gyr-stable", &[a, b]);
                report.expect(contained == equal && image_size == size, "stability-equivalence", &[a, b]);
            }
        }
        report
    }

    pub fn is_l_subgyrogroup(&self, subset: &[usize]) -> bool {
        self.l_subgyrogroup_report(subset).passed()
    }

    /// Checks `map(a ⊕ b) = map(a)·map(b)` for all pairs and `map(0) = e_K`.
    pub fn verify_hom_to_group(&self, target: &FiniteGroup, map: &[usize]) -> AxiomReport {
        let mut report = AxiomReport::new();
        if map.len() != self.order || map.iter().any(|&x| x >= target.order()) {
            report.record("hom-total", &[]);
            return report;
        }
        report.expect(map[0] == target.identity(), "hom-identity", &[0]);
        for a in 0..self.order {
            for b in 0..self.order {
                let ok = map[self.op(a, b)] == target.mul(map[a], map[b]);
                report.expect(ok, "hom-product", &[a, b]);
            }
        }
        report
    }

    /// Checks that `map` is a gyrogroup homomorphism `self -> target`.
    pub fn verify_hom_to_gyrogroup(&self, target: &Gyrogroup, map: &[usize]) -> AxiomReport {
        let mut report = AxiomReport::new();
        if map.len() != self.order || map.iter().any(|&x| x >= target.order()) {
            report.record("hom-total", &[]);
            return report;
        }
        report.expect(map[0] == 0, "hom-identity", &[0]);
        for a in 0..self.order {
            for b in 0..self.order {
                let ok = map[self.op(a, b)] == target.op(map[a], map[b]);
                report.expect(ok, "hom-product", &[a, b]);
            }
        }
        report
    }

    /// The table as a [`FiniteGroup`], when it is associative.
    pub fn as_group(&self) -> Option<FiniteGroup> {
        if !self.is_associative() {
            return None;
        }
        let g = FiniteGroup::from_flat_unverified(self.order, self.table.clone()).ok()?;
        match &self.labels {
            Some(l) => g.with_labels(l.clone()).ok(),
            None => Some(g),
        }
    }

    #[cfg(test)]
    pub(crate) fn overwrite_gyration(&mut self, a: usize, b: usize, p: Perm) {
        let n = self.order;
        self.gyr_cache[a * n + b] = OnceLock::from(p);
    }
}

/// Sub-gyrogroup `X` as its own gyrogroup, with the inclusion map.
pub fn restrict(g: &Gyrogroup, subset: &[usize]) -> Result<(Gyrogroup, Vec<usize>)> {
    if !g.is_subgyrogroup(subset) {
        return Err(Error::Precondition(format!("{subset:?} is not a subgyrogroup")));
    }
    let mut elems = subset.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let pos = |x: usize| elems.binary_search(&x).expect("closed subset");
    let rows: Vec<Vec<usize>> =
        elems.iter().map(|&a| elems.iter().map(|&b| pos(g.op(a, b))).collect()).collect();
    let sub = Gyrogroup::from_rows(&rows)?;
    Ok((sub, elems))
}
