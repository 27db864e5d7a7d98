//! Invariant right subgyrogroups, quotients by them, and congruences.

use std::collections::BTreeSet;

use super::{raction_to_hom, rhom_kernel, RightGyrogroup};
use crate::action::ActionTable;
use crate::error::{Error, Result};
use crate::group::{magma_isomorphism, Partition, Perm};
use crate::report::AxiomReport;

/// Checks the closure conditions that make `h` the identity class of a
/// congruence, for `x ∈ h` and all `y, z`:
///
/// * `gyr[y,z](x) ∈ h` and `gyr⁻¹[y,z](x) ∈ h`;
/// * `(y∘(x∘z))∘(y∘z)′ ∈ h`;
/// * `[gyr⁻¹[gyr[x,y](x′), x∘y](z) ∘ gyr[x,y](x′)]∘z′ ∈ h`.
///
/// The last expression is also compared with `((z∘y)∘(x∘y)′)∘z′`.
pub fn check_invariant(r: &RightGyrogroup, h: &[usize]) -> Result<AxiomReport> {
    if !r.is_right_subgyrogroup(h) {
        return Err(Error::NotRightSubgyrogroup(format!("{h:?}")));
    }
    let n = r.order();
    let mut member = vec![false; n];
    for &x in h {
        member[x] = true;
    }
    let inverse_gyr: Vec<Perm> = (0..n * n).map(|i| r.gyr(i / n, i % n).inverse()).collect();
    let mut report = AxiomReport::new();
    for &x in h {
        for y in 0..n {
            let gx = r.gyr(x, y).apply(r.inv(x));
            let xy = r.op(x, y);
            for z in 0..n {
                report.expect(member[r.gyr(y, z).apply(x)], "invariant-gyr", &[x, y, z]);
                report.expect(member[inverse_gyr[y * n + z].apply(x)], "invariant-gyr-inverse", &[x, y, z]);
                let third = r.op(r.op(y, r.op(x, z)), r.inv(r.op(y, z)));
                report.expect(member[third], "invariant-translate", &[x, y, z]);
                let inner = inverse_gyr[gx * n + xy].apply(z);
                let fourth = r.op(r.op(inner, gx), r.inv(z));
                report.expect(member[fourth], "invariant-twisted", &[x, y, z]);
                let simplified = r.op(r.op(r.op(z, y), r.inv(xy)), r.inv(z));
                report.expect(fourth == simplified, "invariant-twisted-simplifies", &[x, y, z]);
            }
        }
    }
    Ok(report)
}

/// `G_X = {a : a∗x = x for all x}`.
pub fn fixed_kernel(r: &RightGyrogroup, act: &ActionTable) -> Result<Vec<usize>> {
    rhom_kernel(r, act)
}

/// `G/H` on the cosets `H∘a`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub rgyro: RightGyrogroup,
    /// Cosets in order of their least element; the coset of `e` first.
    pub cosets: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

pub fn quotient_rgyro(r: &RightGyrogroup, h: &[usize]) -> Result<Quotient> {
    if !r.is_right_subgyrogroup(h) {
        return Err(Error::NotRightSubgyrogroup(format!("{h:?}")));
    }
    let n = r.order();
    let coset_sets: BTreeSet<Vec<usize>> = (0..n)
        .map(|a| {
            let c: BTreeSet<usize> = h.iter().map(|&x| r.op(x, a)).collect();
            c.into_iter().collect()
        })
        .collect();
    let mut cosets: Vec<Vec<usize>> = coset_sets.into_iter().collect();
    cosets.sort_by_key(|c| c[0]);
    let mut report = AxiomReport::new();
    let mut class_of = vec![usize::MAX; n];
    for (i, c) in cosets.iter().enumerate() {
        for &a in c {
            if class_of[a] != usize::MAX {
                report.record("cosets-partition", &[a]);
            }
            class_of[a] = i;
        }
    }
    for a in 0..n {
        report.expect(class_of[a] != usize::MAX && cosets[class_of[a]].contains(&a), "coset-contains-representative", &[a]);
    }
    if !report.passed() {
        return Err(Error::Axioms(report));
    }
    let m = cosets.len();
    let mut table = vec![usize::MAX; m * m];
    for a in 0..n {
        for b in 0..n {
            let (ca, cb, cab) = (class_of[a], class_of[b], class_of[r.op(a, b)]);
            let slot = &mut table[ca * m + cb];
            if *slot == usize::MAX {
                *slot = cab;
            } else if *slot != cab {
                report.record("quotient-well-defined", &[a, b]);
            }
        }
    }
    if !report.passed() {
        return Err(Error::Axioms(report));
    }
    let q = RightGyrogroup::from_flat(m, table)?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ok = q.gyr(class_of[a], class_of[b]).apply(class_of[c]) == class_of[r.gyr(a, b).apply(c)];
                report.expect(ok, "quotient-gyration", &[a, b, c]);
            }
        }
    }
    report.into_result()?;
    Ok(Quotient { rgyro: q, cosets, class_of })
}

/// `{(a, b) : a = x∘b for some x ∈ h}`.
#[derive(Clone, Debug)]
pub struct Congruence {
    pub pairs: BTreeSet<(usize, usize)>,
    pub classes: Partition,
}

pub fn congruence_from(r: &RightGyrogroup, h: &[usize]) -> Result<Congruence> {
    if !r.is_right_subgyrogroup(h) {
        return Err(Error::NotRightSubgyrogroup(format!("{h:?}")));
    }
    let n = r.order();
    let pairs: BTreeSet<(usize, usize)> = h.iter().flat_map(|&x| (0..n).map(move |b| (x, b))).map(|(x, b)| (r.op(x, b), b)).collect();
    let mut report = AxiomReport::new();
    for a in 0..n {
        report.expect(pairs.contains(&(a, a)), "congruence-reflexive", &[a]);
    }
    for &(a, b) in &pairs {
        report.expect(pairs.contains(&(b, a)), "congruence-symmetric", &[a, b]);
        for c in (0..n).filter(|&c| pairs.contains(&(b, c))) {
            report.expect(pairs.contains(&(a, c)), "congruence-transitive", &[a, b, c]);
        }
        for &(c, d) in &pairs {
            report.expect(pairs.contains(&(r.op(a, c), r.op(b, d))), "congruence-closed", &[a, b, c, d]);
        }
    }
    let mut identity_class: Vec<usize> = (0..n).filter(|&a| pairs.contains(&(a, 0))).collect();
    identity_class.sort_unstable();
    let mut sorted_h = h.to_vec();
    sorted_h.sort_unstable();
    sorted_h.dedup();
    report.expect(identity_class == sorted_h, "congruence-identity-class", &[]);
    report.into_result()?;
    let classes = Partition::from_edges(n, pairs.iter().copied());
    Ok(Congruence { pairs, classes })
}

/// The distinct rows of an action as a right gyrogroup inside `Sym(X)`
/// under `p∘q = q⁻¹ p q²`, the identity first.
pub fn image_rgyro(r: &RightGyrogroup, act: &ActionTable) -> Result<(RightGyrogroup, Vec<Perm>)> {
    let hom = raction_to_hom(r, act)?;
    let mut perms: Vec<Perm> = (0..r.order()).map(|a| hom.perm(a).clone()).collect();
    perms.sort();
    perms.dedup();
    let id = Perm::identity(act.set_size());
    let pos = perms.iter().position(|p| *p == id).expect("e acts trivially");
    perms.swap(0, pos);
    let m = perms.len();
    let mut rows = vec![vec![0; m]; m];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let prod = &(&q.inverse() * p) * &(q * q);
            rows[i][j] = perms
                .iter()
                .position(|s| *s == prod)
                .ok_or_else(|| Error::Inconsistency("the image is not closed under the right operation".into()))?;
        }
    }
    Ok((RightGyrogroup::from_rows(&rows)?, perms))
}

/// The quotient by the fixed kernel against the image of the action.
#[derive(Clone, Debug)]
pub struct ImageMatch {
    pub kernel: Vec<usize>,
    pub quotient: Quotient,
    pub image: RightGyrogroup,
    /// Quotient index to image index, if an isomorphism exists.
    pub isomorphism: Option<Vec<usize>>,
}

pub fn quotient_matches_image(r: &RightGyrogroup, act: &ActionTable) -> Result<ImageMatch> {
    let kernel = fixed_kernel(r, act)?;
    let quotient = quotient_rgyro(r, &kernel)?;
    let (image, _) = image_rgyro(r, act)?;
    let isomorphism = if quotient.rgyro.order() == image.order() {
        let (q, im) = (&quotient.rgyro, &image);
        magma_isomorphism(q.order(), |x, y| q.op(x, y), |x, y| im.op(x, y), |_, _| true, &[(0, 0)])
    } else {
        None
    };
    Ok(ImageMatch { kernel, quotient, image, isomorphism })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::right::{gbased, sym_transversal};

    #[test]
    fn trivial_and_full_subsets_are_invariant() {
        let r = gbased(&fixtures::dihedral(4)).unwrap();
        assert!(check_invariant(&r, &[0]).unwrap().passed());
        let all: Vec<usize> = (0..8).collect();
        assert!(check_invariant(&r, &all).unwrap().passed());
        assert!(check_invariant(&r, &[0, 1]).is_err());
    }

    #[test]
    fn quotient_by_identity_and_everything() {
        let r = gbased(&fixtures::dihedral(3)).unwrap();
        let q = quotient_rgyro(&r, &[0]).unwrap();
        assert_eq!(q.rgyro, r);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(quotient_rgyro(&r, &all).unwrap().rgyro.order(), 1);
    }

    #[test]
    fn kernel_of_coset_action_gives_matching_quotient() {
        let k = fixtures::dihedral(4);
        let r = gbased(&k).unwrap();
        for h in k.subgroups() {
            let act = ActionTable::on_cosets(&k, &h).unwrap();
            let kernel = fixed_kernel(&r, &act).unwrap();
            assert!(check_invariant(&r, &kernel).unwrap().passed());
            let cong = congruence_from(&r, &kernel).unwrap();
            let m = quotient_matches_image(&r, &act).unwrap();
            assert_eq!(cong.classes.len(), m.quotient.rgyro.order());
            assert!(m.isomorphism.is_some(), "subgroup {h:?}");
        }
    }

    #[test]
    fn transversal_fixture_kernels() {
        let st = sym_transversal(3).unwrap();
        let r = &st.transversal.rgyro;
        let act = ActionTable::trivial(3, 2);
        let m = quotient_matches_image(r, &act).unwrap();
        assert_eq!(m.kernel, vec![0, 1, 2]);
        assert_eq!(m.quotient.rgyro.order(), 1);
        assert!(m.isomorphism.is_some());
    }
}
