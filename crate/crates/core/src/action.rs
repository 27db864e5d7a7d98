//! Gyrogroup actions on finite sets and their transfer to `M(G)`.
//!
//! An action of `G` on `X` is a homomorphism `η: G -> Sym(X)`. Since
//! `Sym(X)` is a group, `η` factors uniquely as `α ∘ ν` through the group
//! completion, so every gyrogroup action is the pullback of a unique
//! `M(G)`-action. Orbits, fixed points, invariant subsets, stabilizers and
//! transitivity agree on both sides; the checks here compute each side
//! independently and compare.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ggc::{factor_hom, GgcResult};
use crate::group::{ConcreteGroup, FiniteGroup, Partition, Perm, DEFAULT_CLOSURE_BUDGET};
use crate::gyro::Gyrogroup;
use crate::report::AxiomReport;

/// Largest `|X|` for which [`gsets_equivalent`] searches bijections.
pub const EQUIVALENCE_BOUND: usize = 8;

/// Largest `|X|` for which every subset is tested for invariance.
pub const SUBSET_BOUND: usize = 16;

/// `table[a][x] = a∗x`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    actor_order: usize,
    set_size: usize,
    table: Vec<usize>,
}

impl ActionTable {
    pub fn new(actor_order: usize, set_size: usize, table: Vec<usize>) -> Result<ActionTable> {
        if table.len() != actor_order * set_size {
            return Err(Error::Malformed(format!(
                "action table has {} entries, expected {actor_order}x{set_size}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= set_size) {
            return Err(Error::Malformed(format!("entry {bad} is outside 0..{set_size}")));
        }
        Ok(ActionTable { actor_order, set_size, table })
    }

    pub fn from_rows(set_size: usize, rows: &[Vec<usize>]) -> Result<ActionTable> {
        if let Some(r) = rows.iter().position(|r| r.len() != set_size) {
            return Err(Error::Malformed(format!("row {r} does not have {set_size} entries")));
        }
        ActionTable::new(rows.len(), set_size, rows.concat())
    }

    /// Every element acts as the identity.
    pub fn trivial(actor_order: usize, set_size: usize) -> ActionTable {
        let table = (0..actor_order).flat_map(|_| 0..set_size).collect();
        ActionTable { actor_order, set_size, table }
    }

    /// Left multiplication of a group on itself.
    pub fn regular(group: &FiniteGroup) -> ActionTable {
        let n = group.order();
        let table = (0..n * n).map(|k| group.mul(k / n, k % n)).collect();
        ActionTable { actor_order: n, set_size: n, table }
    }

    /// Left multiplication on the left cosets `gH`, numbered by first
    /// appearance when scanning `g` in index order.
    pub fn on_cosets(group: &FiniteGroup, subgroup: &[usize]) -> Result<ActionTable> {
        if !group.is_subgroup(subgroup) {
            return Err(Error::NotSubgroup(format!("{subgroup:?}")));
        }
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut count = 0;
        for g in 0..n {
            if coset_of[g] == usize::MAX {
                for &h in subgroup {
                    coset_of[group.mul(g, h)] = count;
                }
                count += 1;
            }
        }
        let mut reps = vec![0; count];
        for g in (0..n).rev() {
            reps[coset_of[g]] = g;
        }
        let table = (0..n).flat_map(|a| reps.iter().map(move |&r| (a, r))).map(|(a, r)| coset_of[group.mul(a, r)]).collect();
        Ok(ActionTable { actor_order: n, set_size: count, table })
    }

    /// `a∗x = ν(a)∗x`: pulls an action of the completion back to `G`.
    pub fn pullback(nu: &[usize], act: &ActionTable) -> ActionTable {
        let table = nu.iter().flat_map(|&m| act.row(m).to_vec()).collect();
        ActionTable { actor_order: nu.len(), set_size: act.set_size, table }
    }

    pub fn actor_order(&self) -> usize {
        self.actor_order
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.table[a * self.set_size + x]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.set_size..(a + 1) * self.set_size]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.actor_order).map(|a| self.row(a).to_vec()).collect()
    }

    fn check_actor(&self, order: usize) -> Result<()> {
        if self.actor_order != order {
            return Err(Error::Dimension(format!(
                "action table has {} rows but the actor has order {order}",
                self.actor_order
            )));
        }
        Ok(())
    }
}

/// Exhaustive check of `e∗x = x`, `(a⊕b)∗x = a∗(b∗x)`, and that each row is
/// a permutation (forced by the first two; reported separately).
pub fn validate_action(g: &Gyrogroup, act: &ActionTable) -> Result<AxiomReport> {
    act.check_actor(g.order())?;
    Ok(check_laws(act, 0, |a, b| g.op(a, b)))
}

/// The same checks for a group actor.
pub fn validate_group_action(k: &FiniteGroup, act: &ActionTable) -> Result<AxiomReport> {
    act.check_actor(k.order())?;
    Ok(check_laws(act, k.identity(), |a, b| k.mul(a, b)))
}

fn check_laws(act: &ActionTable, identity: usize, op: impl Fn(usize, usize) -> usize) -> AxiomReport {
    let (n, k) = (act.actor_order, act.set_size);
    let mut report = AxiomReport::new();
    for x in 0..k {
        report.expect(act.act(identity, x) == x, "action-identity", &[x]);
    }
    for a in 0..n {
        for b in 0..n {
            let ab = op(a, b);
            for x in 0..k {
                report.expect(act.act(ab, x) == act.act(a, act.act(b, x)), "action-compatibility", &[a, b, x]);
            }
        }
        if !crate::gyro::is_bijection(act.row(a)) {
            report.record("inconsistency: action-row-not-permutation", &[a]);
        }
    }
    report
}

/// `η: G -> Sym(X)`, with the target realized as the permutation group the
/// rows generate.
#[derive(Clone, Debug)]
pub struct ActionHom {
    pub image: ConcreteGroup<Perm>,
    pub eta: Vec<usize>,
}

impl ActionHom {
    pub fn perm(&self, a: usize) -> &Perm {
        self.image.element(self.eta[a])
    }
}

pub fn action_to_hom(g: &Gyrogroup, act: &ActionTable) -> Result<ActionHom> {
    let report = validate_action(g, act)?;
    if !report.passed() {
        return Err(Error::Axioms(report));
    }
    let perms: Vec<Perm> = (0..g.order()).map(|a| Perm::from_images(act.row(a).to_vec())).collect::<Result<_>>()?;
    let image = ConcreteGroup::generate(&perms, Perm::identity(act.set_size), |p, q| p * q, DEFAULT_CLOSURE_BUDGET)?;
    let eta: Vec<usize> = perms.iter().map(|p| image.index_of(p).expect("generator lies in its closure")).collect();
    let hom_report = g.verify_hom_to_group(image.group(), &eta);
    if !hom_report.passed() {
        return Err(Error::NotHomomorphism(hom_report));
    }
    Ok(ActionHom { image, eta })
}

/// The unique `M(G)`-action whose pullback along `ν` is `act`.
pub fn lift_action(ggc: &GgcResult, act: &ActionTable) -> Result<ActionTable> {
    let hom = action_to_hom(&ggc.source, act)?;
    let alpha = factor_hom(ggc, hom.image.group(), &hom.eta)?;
    let m = ggc.completion.order();
    let table = (0..m).flat_map(|c| hom.image.element(alpha.apply(c)).images().to_vec()).collect();
    let lifted = ActionTable { actor_order: m, set_size: act.set_size, table };
    if ActionTable::pullback(&ggc.nu, &lifted) != *act {
        return Err(Error::Inconsistency("lifted action does not pull back to the original".into()));
    }
    Ok(lifted)
}

/// Components of `x ∼ a∗x`.
pub fn orbits(act: &ActionTable) -> Partition {
    let edges = (0..act.actor_order).flat_map(|a| (0..act.set_size).map(move |x| (a, x)));
    Partition::from_edges(act.set_size, edges.map(|(a, x)| (x, act.act(a, x))))
}

/// `{a∗x}` computed directly, without the partition.
pub fn orbit_of(act: &ActionTable, x: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = (0..act.actor_order).map(|a| act.act(a, x)).collect();
    set.into_iter().collect()
}

pub fn stabilizer(act: &ActionTable, x: usize) -> Vec<usize> {
    (0..act.actor_order).filter(|&a| act.act(a, x) == x).collect()
}

/// Points fixed by every actor.
pub fn fix_set(act: &ActionTable) -> Vec<usize> {
    (0..act.set_size).filter(|&x| (0..act.actor_order).all(|a| act.act(a, x) == x)).collect()
}

/// Points fixed by `a`.
pub fn fix_of(act: &ActionTable, a: usize) -> Vec<usize> {
    (0..act.set_size).filter(|&x| act.act(a, x) == x).collect()
}

pub fn is_transitive(act: &ActionTable) -> bool {
    act.set_size == 0 || orbit_of(act, 0).len() == act.set_size
}

pub fn invariant_subset(act: &ActionTable, subset: &[usize]) -> bool {
    let mut member = vec![false; act.set_size];
    for &y in subset {
        member[y] = true;
    }
    (0..act.actor_order).all(|a| subset.iter().all(|&y| member[act.act(a, y)]))
}

/// Distinct actors act as distinct permutations.
pub fn is_faithful(act: &ActionTable) -> bool {
    let rows: BTreeSet<&[usize]> = (0..act.actor_order).map(|a| act.row(a)).collect();
    rows.len() == act.actor_order
}

/// Transitive with every stabilizer trivial.
pub fn is_sharply_transitive(act: &ActionTable) -> bool {
    is_transitive(act) && (0..act.set_size).all(|x| stabilizer(act, x).len() == 1)
}

/// Compares every orbit-level notion on `G` against the lifted
/// `M(G)`-action, each side computed on its own.
pub fn bridge_check(ggc: &GgcResult, act: &ActionTable) -> Result<AxiomReport> {
    let lifted = lift_action(ggc, act)?;
    let nu = &ggc.nu;
    let k = act.set_size;
    let mut report = AxiomReport::new();

    for x in 0..k {
        report.expect(orbit_of(act, x) == orbit_of(&lifted, x), "orbits-agree", &[x]);
        let stab_m = stabilizer(&lifted, x);
        let pulled: Vec<usize> = (0..nu.len()).filter(|&a| stab_m.contains(&nu[a])).collect();
        report.expect(stabilizer(act, x) == pulled, "stabilizer-is-preimage", &[x]);
        report.merge(coset_bijection(ggc, act, &lifted, x));
    }
    report.expect(orbits(act) == orbits(&lifted), "orbit-partitions-agree", &[]);
    report.expect(fix_set(act) == fix_set(&lifted), "fixed-sets-agree", &[]);
    report.expect(is_transitive(act) == is_transitive(&lifted), "transitivity-agrees", &[]);

    if k <= SUBSET_BOUND {
        for mask in 0u32..(1u32 << k) {
            let subset: Vec<usize> = (0..k).filter(|&y| mask & (1 << y) != 0).collect();
            let same = invariant_subset(act, &subset) == invariant_subset(&lifted, &subset);
            report.expect(same, "invariant-subsets-agree", &[mask as usize]);
        }
    } else {
        for block in orbits(act).blocks() {
            report.expect(invariant_subset(&lifted, block), "invariant-subsets-agree", block);
        }
    }

    // faithfulness passes from G to M(G); back only when ν is injective
    let injective = ggc.kernel.len() == 1;
    for (pred, name) in [
        (is_faithful as fn(&ActionTable) -> bool, "faithful-transfers"),
        (is_sharply_transitive, "sharply-transitive-transfers"),
    ] {
        let (on_g, on_m) = (pred(act), pred(&lifted));
        report.expect(!on_g || on_m, name, &[]);
        if injective {
            report.expect(on_g == on_m, name, &[]);
        }
    }
    Ok(report)
}

/// Left cosets `a⊕stab_G(x)`, taken as sets, map one-to-one onto the cosets
/// `ν(a)·stab_M(x)` under `ν`.
fn coset_bijection(ggc: &GgcResult, act: &ActionTable, lifted: &ActionTable, x: usize) -> AxiomReport {
    let g = &ggc.source;
    let m = &ggc.completion;
    let stab_g = stabilizer(act, x);
    let stab_m = stabilizer(lifted, x);
    let g_cosets: BTreeSet<Vec<usize>> = (0..g.order())
        .map(|a| {
            let set: BTreeSet<usize> = stab_g.iter().map(|&s| g.op(a, s)).collect();
            set.into_iter().collect()
        })
        .collect();
    let m_cosets: BTreeSet<Vec<usize>> = (0..m.order())
        .map(|c| {
            let set: BTreeSet<usize> = stab_m.iter().map(|&s| m.mul(c, s)).collect();
            set.into_iter().collect()
        })
        .collect();
    let mut report = AxiomReport::new();
    let mut images = BTreeSet::new();
    for coset in &g_cosets {
        let targets: BTreeSet<Vec<usize>> = coset
            .iter()
            .map(|&a| {
                let set: BTreeSet<usize> = stab_m.iter().map(|&s| m.mul(ggc.nu[a], s)).collect();
                set.into_iter().collect()
            })
            .collect();
        report.expect(targets.len() == 1, "coset-map-well-defined", &[x, coset[0]]);
        images.extend(targets);
    }
    let partition: usize = g_cosets.iter().map(Vec::len).sum();
    report.expect(partition == g.order(), "cosets-partition", &[x]);
    report.expect(
        images.len() == g_cosets.len() && images == m_cosets,
        "coset-map-bijective",
        &[x, g_cosets.len(), m_cosets.len()],
    );
    report
}

/// `|G| = |Orb(x)|·|stab(x)|` for every `x`.
pub fn orbit_stabilizer_check(act: &ActionTable) -> AxiomReport {
    let mut report = AxiomReport::new();
    for x in 0..act.set_size {
        let (orb, stab) = (orbit_of(act, x).len(), stabilizer(act, x).len());
        report.expect(orb * stab == act.actor_order, "orbit-stabilizer", &[x, orb, stab]);
    }
    report
}

/// `|X| = |Fix(X)| + Σ [G : stab(x_i)]` over least-index representatives of
/// the non-singleton orbits.
pub fn orbit_decomposition_check(act: &ActionTable) -> AxiomReport {
    let mut report = AxiomReport::new();
    let mut total = fix_set(act).len();
    for block in orbits(act).blocks().iter().filter(|b| b.len() > 1) {
        let stab = stabilizer(act, block[0]).len();
        report.expect(act.actor_order.is_multiple_of(stab), "stabilizer-divides-order", &[block[0]]);
        total += act.actor_order / stab;
    }
    report.expect(total == act.set_size, "orbit-decomposition", &[total, act.set_size]);
    report
}

/// The three orbit counts that must coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BurnsideCounts {
    /// Number of orbit blocks.
    pub direct: usize,
    /// `Σ_{b∈M(G)} |fix(b)|`.
    pub completion_sum: usize,
    /// `Σ_{a∈G} |fix(a)|`.
    pub gyrogroup_sum: usize,
    pub completion_order: usize,
    pub kernel_order: usize,
}

impl BurnsideCounts {
    pub fn holds(&self) -> bool {
        let (m, k) = (self.completion_order, self.kernel_order);
        self.completion_sum == self.direct * m
            && self.gyrogroup_sum == self.direct * m * k
            && self.gyrogroup_sum == self.completion_sum * k
    }
}

pub fn burnside_counts(act: &ActionTable, ggc: &GgcResult) -> Result<BurnsideCounts> {
    let lifted = lift_action(ggc, act)?;
    Ok(BurnsideCounts {
        direct: orbits(act).len(),
        completion_sum: (0..lifted.actor_order).map(|b| fix_of(&lifted, b).len()).sum(),
        gyrogroup_sum: (0..act.actor_order).map(|a| fix_of(act, a).len()).sum(),
        completion_order: ggc.completion.order(),
        kernel_order: ggc.kernel.len(),
    })
}

/// Number of orbits by averaging fixed points over `M(G)`, confirmed against
/// the direct count and the rescaled average over `G`.
pub fn burnside(act: &ActionTable, ggc: &GgcResult) -> Result<usize> {
    let counts = burnside_counts(act, ggc)?;
    if !counts.holds() {
        return Err(Error::Inconsistency(format!("orbit counts disagree: {counts:?}")));
    }
    Ok(counts.direct)
}

/// A bijection `φ: X -> Z` with `φ(a∗x) = a∗φ(x)`, by backtracking.
pub fn gsets_equivalent(x_act: &ActionTable, z_act: &ActionTable) -> Result<Option<Vec<usize>>> {
    if x_act.actor_order != z_act.actor_order {
        return Err(Error::Dimension("actions have different actors".into()));
    }
    let k = x_act.set_size;
    if k.max(z_act.set_size) > EQUIVALENCE_BOUND {
        return Err(Error::OrderBound { order: k.max(z_act.set_size), bound: EQUIVALENCE_BOUND });
    }
    if k != z_act.set_size {
        return Ok(None);
    }
    let mut phi = vec![usize::MAX; k];
    let mut used = vec![false; k];
    Ok(extend_equivariant(x_act, z_act, 0, &mut phi, &mut used).then_some(phi))
}

fn extend_equivariant(x: &ActionTable, z: &ActionTable, next: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
    let k = phi.len();
    if next == k {
        return true;
    }
    for target in 0..k {
        if used[target] {
            continue;
        }
        phi[next] = target;
        used[target] = true;
        let consistent = (0..=next).all(|p| {
            (0..x.actor_order).all(|a| {
                let img = x.act(a, p);
                img > next || phi[img] == z.act(a, phi[p])
            })
        });
        if consistent && extend_equivariant(x, z, next + 1, phi, used) {
            return true;
        }
        used[target] = false;
        phi[next] = usize::MAX;
    }
    false
}

/// [`gsets_equivalent`] for two `G`-actions, with the answer confirmed on
/// the lifted `M(G)`-actions: the witness stays equivariant there, and the
/// `M(G)` side finds a witness exactly when the `G` side does.
pub fn gsets_equivalent_lifted(
    ggc: &GgcResult,
    x_act: &ActionTable,
    z_act: &ActionTable,
) -> Result<Option<Vec<usize>>> {
    let found = gsets_equivalent(x_act, z_act)?;
    let (lx, lz) = (lift_action(ggc, x_act)?, lift_action(ggc, z_act)?);
    if let Some(phi) = &found {
        let equivariant = (0..lx.actor_order)
            .all(|b| (0..lx.set_size).all(|p| phi[lx.act(b, p)] == lz.act(b, phi[p])));
        if !equivariant {
            return Err(Error::Inconsistency("witness is not equivariant for the completion".into()));
        }
    }
    if gsets_equivalent(&lx, &lz)?.is_some() != found.is_some() {
        return Err(Error::Inconsistency("equivalence differs between G and M(G)".into()));
    }
    Ok(found)
}

/// Pullbacks of every coset action of `M(G)`, one per subgroup.
pub fn coset_pullbacks(ggc: &GgcResult) -> Vec<ActionTable> {
    ggc.completion
        .subgroups()
        .iter()
        .map(|h| ActionTable::pullback(&ggc.nu, &ActionTable::on_cosets(&ggc.completion, h).expect("listed subgroup")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ggc::complete;
    use crate::gyro::{search_gyrogroups, SearchOptions};

    fn g8() -> Gyrogroup {
        let mut opts = SearchOptions::new(8);
        opts.proper_only = true;
        opts.limit = 1;
        search_gyrogroups(opts).unwrap().tables.remove(0)
    }

    #[test]
    fn trivial_and_regular_actions_validate() {
        let grp = fixtures::cyclic(4);
        let g = Gyrogroup::from_group(&grp).unwrap();
        assert!(validate_action(&g, &ActionTable::trivial(4, 5)).unwrap().passed());
        assert!(validate_action(&g, &ActionTable::regular(&grp)).unwrap().passed());
        assert!(matches!(validate_action(&g, &ActionTable::trivial(3, 2)), Err(Error::Dimension(_))));
    }

    #[test]
    fn broken_action_is_reported() {
        let g = Gyrogroup::from_group(&fixtures::cyclic(2)).unwrap();
        let act = ActionTable::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap();
        let report = validate_action(&g, &act).unwrap();
        assert!(report.has("action-compatibility"));
        assert!(report.has("inconsistency: action-row-not-permutation"));
    }

    #[test]
    fn regular_pullback_on_proper_fixture() {
        let r = complete(&g8()).unwrap();
        let reg = ActionTable::regular(&r.completion);
        let act = ActionTable::pullback(&r.nu, &reg);
        // oracle: a∗x = ν(a)·x straight from the completion table
        for a in 0..8 {
            for x in 0..r.completion.order() {
                assert_eq!(act.act(a, x), r.completion.mul(r.nu[a], x));
            }
        }
        assert!(validate_action(&r.source, &act).unwrap().passed());
        assert_eq!(lift_action(&r, &act).unwrap(), reg);
    }

    #[test]
    fn regular_action_of_nonabelian_group_round_trips() {
        let grp = fixtures::dihedral(3);
        let g = Gyrogroup::from_group(&grp).unwrap();
        let act = ActionTable::regular(&grp);
        let hom = action_to_hom(&g, &act).unwrap();
        for a in 0..6 {
            assert_eq!(hom.perm(a).images(), act.row(a));
        }
        let r = complete(&g).unwrap();
        let lifted = lift_action(&r, &act).unwrap();
        assert_eq!(ActionTable::pullback(&r.nu, &lifted), act);
        assert!(bridge_check(&r, &act).unwrap().passed());
    }

    #[test]
    fn trivial_lifts_to_trivial() {
        let r = complete(&g8()).unwrap();
        let lifted = lift_action(&r, &ActionTable::trivial(8, 3)).unwrap();
        assert_eq!(lifted, ActionTable::trivial(r.completion.order(), 3));
    }

    #[test]
    fn orbit_basics() {
        let grp = fixtures::cyclic(4);
        let reg = ActionTable::regular(&grp);
        assert_eq!(orbits(&reg).len(), 1);
        assert!(is_transitive(&reg) && is_sharply_transitive(&reg) && is_faithful(&reg));
        assert_eq!(stabilizer(&reg, 2), vec![0]);
        assert!(orbit_stabilizer_check(&reg).passed());
        let triv = ActionTable::trivial(4, 5);
        assert_eq!(orbits(&triv).len(), 5);
        assert_eq!(fix_set(&triv), vec![0, 1, 2, 3, 4]);
        assert!(orbit_decomposition_check(&triv).passed());
        assert!(invariant_subset(&triv, &[1, 3]));
        assert!(!invariant_subset(&reg, &[1, 3]));
    }

    #[test]
    fn burnside_small_cases() {
        let grp = fixtures::cyclic(3);
        let r = complete(&Gyrogroup::from_group(&grp).unwrap()).unwrap();
        assert_eq!(burnside(&ActionTable::regular(&grp), &r).unwrap(), 1);
        assert_eq!(burnside(&ActionTable::trivial(3, 4), &r).unwrap(), 4);
        let counts = burnside_counts(&ActionTable::regular(&grp), &r).unwrap();
        assert_eq!(counts.completion_sum, 3);
    }

    #[test]
    fn bridge_on_every_coset_pullback() {
        let r = complete(&g8()).unwrap();
        for act in coset_pullbacks(&r) {
            assert!(validate_action(&r.source, &act).unwrap().passed());
            assert!(bridge_check(&r, &act).unwrap().passed());
            assert!(orbit_stabilizer_check(&act).passed());
            assert!(orbit_decomposition_check(&act).passed());
            assert_eq!(burnside(&act, &r).unwrap(), orbits(&act).len());
        }
    }

    #[test]
    fn equivalence_search() {
        let grp = fixtures::cyclic(2);
        let reg = ActionTable::regular(&grp);
        let triv = ActionTable::trivial(2, 2);
        assert_eq!(gsets_equivalent(&reg, &reg).unwrap(), Some(vec![0, 1]));
        assert_eq!(gsets_equivalent(&triv, &reg).unwrap(), None);
        let big = ActionTable::trivial(2, 9);
        assert!(matches!(gsets_equivalent(&big, &big), Err(Error::OrderBound { .. })));
    }

    #[test]
    fn conjugate_coset_actions_are_equivalent_after_pullback() {
        let g = g8();
        let r = complete(&g).unwrap();
        let m = &r.completion;
        // a relabelled copy of the regular action is equivalent to it
        let reg = ActionTable::pullback(&r.nu, &ActionTable::regular(m));
        let k = reg.set_size();
        let shift: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
        let mut rows = vec![vec![0; k]; 8];
        for a in 0..8 {
            for x in 0..k {
                rows[a][shift[x]] = shift[reg.act(a, x)];
            }
        }
        let moved = ActionTable::from_rows(k, &rows).unwrap();
        let phi = gsets_equivalent_lifted(&r, &reg, &moved).unwrap().unwrap();
        for a in 0..8 {
            for x in 0..k {
                assert_eq!(phi[reg.act(a, x)], moved.act(a, phi[x]));
            }
        }
        let triv = ActionTable::trivial(8, k);
        assert!(gsets_equivalent_lifted(&r, &reg, &triv).unwrap().is_none());
    }
}
