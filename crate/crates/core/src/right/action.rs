//! Right gyrogroup actions: `e∗x = x` and
//! `(b∘a)∗x = a′∗(b∗(a∗(a∗x)))`, equivalently maps `φ` into `Sym(X)` with
//! `φ(a∘b) = φ(b)⁻¹ φ(a) φ(b)²`.

use super::{gbased, RightGyrogroup};
use crate::action::ActionTable;
use crate::error::{Error, Result};
use crate::fixtures::Heisenberg;
use crate::group::{ConcreteGroup, FiniteGroup, Partition, Perm, DEFAULT_CLOSURE_BUDGET};
use crate::gyro::is_bijection;
use crate::report::AxiomReport;

/// Largest `|X|` covered by [`group_actions_are_right_actions`].
pub const GROUP_ACTION_BOUND: usize = 8;

fn check_actor(r: &RightGyrogroup, act: &ActionTable) -> Result<()> {
    if act.actor_order() != r.order() {
        return Err(Error::Dimension(format!(
            "action table has {} rows but the right gyrogroup has order {}",
            act.actor_order(),
            r.order()
        )));
    }
    Ok(())
}

pub fn validate_right_action(r: &RightGyrogroup, act: &ActionTable) -> Result<AxiomReport> {
    check_actor(r, act)?;
    let (n, k) = (r.order(), act.set_size());
    let mut report = AxiomReport::new();
    for x in 0..k {
        report.expect(act.act(0, x) == x, "raction-identity", &[x]);
    }
    for a in 0..n {
        let ai = r.inv(a);
        for b in 0..n {
            let ba = r.op(b, a);
            for x in 0..k {
                let rhs = act.act(ai, act.act(b, act.act(a, act.act(a, x))));
                report.expect(act.act(ba, x) == rhs, "raction-law", &[b, a, x]);
            }
        }
        if !is_bijection(act.row(a)) {
            report.record("inconsistency: raction-row-not-permutation", &[a]);
        }
    }
    Ok(report)
}

/// `φ(a∘b) = φ(b)⁻¹ φ(a) φ(b)²` in `target`, for every pair.
pub fn rhom_verify(r: &RightGyrogroup, target: &FiniteGroup, map: &[usize]) -> AxiomReport {
    let mut report = AxiomReport::new();
    let n = r.order();
    if map.len() != n || map.iter().any(|&m| m >= target.order()) {
        report.record("rhom-total", &[map.len()]);
        return report;
    }
    report.expect(map[0] == target.identity(), "rhom-identity", &[map[0]]);
    for a in 0..n {
        for b in 0..n {
            let pb = map[b];
            let rhs = target.mul(target.mul(target.inv(pb), map[a]), target.mul(pb, pb));
            report.expect(map[r.op(a, b)] == rhs, "rhom-product", &[a, b]);
        }
    }
    report
}

/// `a ↦ f_a`, with the target the permutation group the rows generate.
#[derive(Clone, Debug)]
pub struct RActionHom {
    pub image: ConcreteGroup<Perm>,
    pub phi: Vec<usize>,
}

impl RActionHom {
    pub fn perm(&self, a: usize) -> &Perm {
        self.image.element(self.phi[a])
    }
}

pub fn raction_to_hom(r: &RightGyrogroup, act: &ActionTable) -> Result<RActionHom> {
    let report = validate_right_action(r, act)?;
    if !report.passed() {
        return Err(Error::Axioms(report));
    }
    let perms: Vec<Perm> =
        (0..r.order()).map(|a| Perm::from_images(act.row(a).to_vec())).collect::<Result<_>>()?;
    let image = ConcreteGroup::generate(&perms, Perm::identity(act.set_size()), |p, q| p * q, DEFAULT_CLOSURE_BUDGET)?;
    let phi: Vec<usize> = perms.iter().map(|p| image.index_of(p).expect("generator in closure")).collect();
    let hom_report = rhom_verify(r, image.group(), &phi);
    if !hom_report.passed() {
        return Err(Error::NotHomomorphism(hom_report));
    }
    Ok(RActionHom { image, phi })
}

/// `a∗x = φ(a)(x)`.
pub fn hom_to_raction(hom: &RActionHom) -> ActionTable {
    let k = hom.image.element(0).degree();
    let table = (0..hom.phi.len()).flat_map(|a| hom.perm(a).images().to_vec()).collect();
    ActionTable::new(hom.phi.len(), k, table).expect("permutation rows")
}

/// `{a : a∗x = x for all x}`.
pub fn rhom_kernel(r: &RightGyrogroup, act: &ActionTable) -> Result<Vec<usize>> {
    check_actor(r, act)?;
    Ok((0..r.order()).filter(|&a| (0..act.set_size()).all(|x| act.act(a, x) == x)).collect())
}

pub fn raction_stabilizer(act: &ActionTable, x: usize) -> Vec<usize> {
    (0..act.actor_order()).filter(|&a| act.act(a, x) == x).collect()
}

/// Classes of the transitive closure of `x ∼ a∗x`.
pub fn raction_orbits(act: &ActionTable) -> Partition {
    crate::action::orbits(act)
}

pub fn raction_orbit(act: &ActionTable, x: usize) -> Vec<usize> {
    raction_orbits(act).block_of(x).to_vec()
}

/// Every `n × |X|` table satisfying the right-action laws, in lexicographic
/// order of the flattened table.
pub fn enumerate_right_actions(r: &RightGyrogroup, set_size: usize) -> Vec<ActionTable> {
    let n = r.order();
    let cells = n * set_size;
    let total = (set_size as u64).checked_pow(cells as u32).expect("enumeration size fits in u64");
    let mut out = Vec::new();
    let mut table = vec![0; cells];
    for code in 0..total {
        let mut c = code;
        for cell in (0..cells).rev() {
            table[cell] = (c % set_size as u64) as usize;
            c /= set_size as u64;
        }
        let act = ActionTable::new(n, set_size, table.clone()).expect("entries in range");
        if validate_right_action(r, &act).map(|rep| rep.passed()).unwrap_or(false) {
            out.push(act);
        }
    }
    out
}

/// Every map `R -> target` passing [`rhom_verify`], by plain enumeration.
pub fn enumerate_right_homs(r: &RightGyrogroup, target: &FiniteGroup) -> Vec<Vec<usize>> {
    let (n, t) = (r.order(), target.order());
    let total = (t as u64).checked_pow(n as u32).expect("enumeration size fits in u64");
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut map = vec![0; n];
        for slot in map.iter_mut().rev() {
            *slot = (c % t as u64) as usize;
            c /= t as u64;
        }
        if rhom_verify(r, target, &map).passed() {
            out.push(map);
        }
    }
    out
}

/// Every action of `k` on at most [`GROUP_ACTION_BOUND`] points is a right
/// action of the G-based right gyrogroup. Each such action splits into
/// transitive pieces, each isomorphic to a coset action, and the law holds
/// pointwise; so checking every coset action of index at most the bound
/// covers all of them up to relabelling.
pub fn group_actions_are_right_actions(k: &FiniteGroup) -> Result<AxiomReport> {
    let (k, _) = k.with_identity_first();
    let r = gbased(&k)?;
    let mut report = AxiomReport::new();
    for (i, h) in k.subgroups().iter().enumerate() {
        if k.order() / h.len() > GROUP_ACTION_BOUND {
            continue;
        }
        let act = ActionTable::on_cosets(&k, h)?;
        let rep = validate_right_action(&r, &act)?;
        report.expect(rep.passed(), "group-action-is-right-action", &[i]);
    }
    report.expect(
        validate_right_action(&r, &ActionTable::trivial(k.order(), 1))?.passed(),
        "group-action-is-right-action",
        &[],
    );
    Ok(report)
}

/// The Heisenberg-27 action `g∗x = g∘x` on its own G-based table.
#[derive(Clone, Debug)]
pub struct NonGroupActionReport {
    /// `(ab⁻¹)∗a`, with `ab⁻¹` the group product.
    pub lhs: usize,
    /// `a∗(b⁻¹∗a)`.
    pub rhs: usize,
    pub valid_right_action: bool,
    /// First `(g, h, x)` with `(gh)∗x ≠ g∗(h∗x)`, scanning in index order.
    pub group_law_witness: Option<(usize, usize, usize)>,
    pub commutative: bool,
    pub associative: bool,
}

impl NonGroupActionReport {
    pub fn differs(&self) -> bool {
        self.lhs != self.rhs
    }
}

pub fn non_group_action_witness(h: &Heisenberg) -> Result<NonGroupActionReport> {
    let k = h.group.group();
    let r = gbased(k)?;
    let n = k.order();
    let table = (0..n * n).map(|i| r.op(i / n, i % n)).collect();
    let act = ActionTable::new(n, n, table)?;
    let (a, b) = (h.a, h.b);
    let lhs = act.act(k.mul(a, k.inv(b)), a);
    let rhs = act.act(a, act.act(k.inv(b), a));
    let mut witness = None;
    'outer: for g in 0..n {
        for hh in 0..n {
            for x in 0..n {
                if act.act(k.mul(g, hh), x) != act.act(g, act.act(hh, x)) {
                    witness = Some((g, hh, x));
                    break 'outer;
                }
            }
        }
    }
    Ok(NonGroupActionReport {
        lhs,
        rhs,
        valid_right_action: validate_right_action(&r, &act)?.passed(),
        group_law_witness: witness,
        commutative: r.is_commutative(),
        associative: r.is_associative(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::right::sym_transversal;

    #[test]
    fn trivial_action_gives_trivial_hom() {
        let r = gbased(&fixtures::dihedral(3)).unwrap();
        let act = ActionTable::trivial(6, 3);
        assert!(validate_right_action(&r, &act).unwrap().passed());
        let hom = raction_to_hom(&r, &act).unwrap();
        assert!(hom.phi.iter().all(|&p| p == 0));
        assert_eq!(rhom_kernel(&r, &act).unwrap(), (0..6).collect::<Vec<_>>());
        assert_eq!(raction_orbits(&act).len(), 3);
    }

    #[test]
    fn group_actions_over_gbased() {
        for k in [fixtures::dihedral(3), fixtures::dihedral(4), fixtures::quaternion()] {
            assert!(group_actions_are_right_actions(&k).unwrap().passed());
        }
    }

    #[test]
    fn round_trip_through_hom() {
        let k = fixtures::dihedral(4);
        let r = gbased(&k).unwrap();
        let act = ActionTable::on_cosets(&k, &k.subgroup_generated(&[4])).unwrap();
        let hom = raction_to_hom(&r, &act).unwrap();
        assert_eq!(hom_to_raction(&hom), act);
        // oracle: φ(a∘b) = φ(b)⁻¹φ(a)φ(b)² evaluated on permutations
        for a in 0..8 {
            for b in 0..8 {
                let (pa, pb) = (hom.perm(a), hom.perm(b));
                let expect = &(&pb.inverse() * pa) * &(pb * pb);
                assert_eq!(hom.perm(r.op(a, b)), &expect);
            }
        }
    }

    #[test]
    fn heisenberg_example() {
        let h = fixtures::heisenberg27();
        let rep = non_group_action_witness(&h).unwrap();
        assert!(rep.differs());
        assert!(rep.valid_right_action);
        assert!(rep.group_law_witness.is_some());
        assert!(rep.commutative && rep.associative);
    }

    #[test]
    fn heisenberg_left_translation_has_one_orbit() {
        let h = fixtures::heisenberg27();
        let r = gbased(h.group.group()).unwrap();
        let table = (0..27 * 27).map(|i| r.op(i / 27, i % 27)).collect();
        let act = ActionTable::new(27, 27, table).unwrap();
        assert_eq!(raction_orbit(&act, 0).len(), 27);
        let hom = raction_to_hom(&r, &act).unwrap();
        assert_eq!(hom_to_raction(&hom), act);
    }

    #[test]
    fn transversal_fixture_admits_only_trivial_actions() {
        let st = sym_transversal(3).unwrap();
        let r = &st.transversal.rgyro;
        for k in 1..=3 {
            let acts = enumerate_right_actions(r, k);
            assert_eq!(acts, vec![ActionTable::trivial(3, k)]);
            let sym = fixtures::symmetric_group(k);
            let homs = enumerate_right_homs(r, sym.group());
            assert_eq!(homs, vec![vec![0; 3]]);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let r = gbased(&fixtures::cyclic(3)).unwrap();
        assert!(matches!(validate_right_action(&r, &ActionTable::trivial(2, 2)), Err(Error::Dimension(_))));
    }
}
