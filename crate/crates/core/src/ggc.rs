//! Group completion of a finite gyrogroup.
//!
//! For a gyrogroup `G`, permutations of `G` fixing the identity carry the
//! twisting map `σ_a(f)`, defined by `f(a) ⊕ σ_a(f)(b) = f(a ⊕ b)`. Pairs
//! `(a, f)` multiply as
//!
//! ```text
//! (a, f)·(b, g) = (a ⊕ f(b), gyr[a, f(b)] ∘ σ_b(f) ∘ g)
//! ```
//!
//! The pairs `(a, I)` generate `GR(G) = G × R(G)`, where `R(G)` is the group
//! generated by all gyrations. Dividing `GR(G)` by the normal closure of
//! `{(e, r)}` gives the group `M(G)`, and `ν(a)` is the class of `(a, I)`.
//! Every gyrogroup homomorphism into a group factors uniquely through `ν`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{ConcreteGroup, FiniteGroup, GroupHom, Perm, DEFAULT_CLOSURE_BUDGET};
use crate::gyro::Gyrogroup;
use crate::report::AxiomReport;

/// Seed for every sampled check unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Groups of at most this order get exhaustive pair-group checks.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 128;

pub const SAMPLED_TRIPLES: usize = 100_000;

/// Random permutations fixing 0 added to the σ-identity test set.
const RANDOM_TEST_PERMS: usize = 8;

/// An element `(a, f)` of `G × Sym(G \ {e})`, with `f` stored as a
/// permutation of all of `G` fixing index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairElem {
    pub a: usize,
    pub f: Perm,
}

impl PairElem {
    pub fn identity(n: usize) -> PairElem {
        PairElem { a: 0, f: Perm::identity(n) }
    }

    pub fn point(n: usize, a: usize) -> PairElem {
        PairElem { a, f: Perm::identity(n) }
    }
}

/// `b ↦ f(a)⁻¹ ⊕ f(a ⊕ b)`, the unique solution of `f(a) ⊕ x = f(a ⊕ b)`.
#[inline]
fn sigma_raw(g: &Gyrogroup, a: usize, f: &Perm) -> Perm {
    let fa_inv = g.inv(f.apply(a));
    let images = (0..g.order()).map(|b| g.op(fa_inv, f.apply(g.op(a, b)))).collect();
    Perm::from_images_unchecked(images)
}

/// `σ_a(f)`, with the defining equation re-verified for every `b`.
pub fn sigma(g: &Gyrogroup, a: usize, f: &Perm) -> Result<Perm> {
    let n = g.order();
    if f.degree() != n || !f.fixes(0) {
        return Err(Error::Precondition(format!("{f} is not a permutation of 0..{n} fixing 0")));
    }
    if a >= n {
        return Err(Error::Precondition(format!("element {a} out of range")));
    }
    let fa = f.apply(a);
    let images: Vec<usize> = (0..n).map(|b| g.op(g.inv(fa), f.apply(g.op(a, b)))).collect();
    for (b, &x) in images.iter().enumerate() {
        if g.op(fa, x) != f.apply(g.op(a, b)) {
            return Err(Error::Inconsistency(format!("sigma equation unsolvable at a={a}, b={b}")));
        }
    }
    let s = Perm::from_images(images)
        .map_err(|e| Error::Inconsistency(format!("sigma is not a permutation: {e}")))?;
    if !s.fixes(0) {
        return Err(Error::Inconsistency(format!("sigma_{a}({f}) moves the identity")));
    }
    Ok(s)
}

/// `(a, f)·(b, g) = (a ⊕ f(b), gyr[a, f(b)] ∘ σ_b(f) ∘ g)`.
pub fn pair_mul(g: &Gyrogroup, x: &PairElem, y: &PairElem) -> PairElem {
    let fb = x.f.apply(y.a);
    let twist = g.gyr(x.a, fb) * &sigma_raw(g, y.a, &x.f);
    PairElem { a: g.op(x.a, fb), f: &twist * &y.f }
}

/// `(a, f)⁻¹ = (f⁻¹(a⁻¹), σ_{a⁻¹}(f⁻¹))`.
pub fn pair_inv(g: &Gyrogroup, x: &PairElem) -> PairElem {
    let finv = x.f.inverse();
    let ainv = g.inv(x.a);
    PairElem { a: finv.apply(ainv), f: sigma_raw(g, ainv, &finv) }
}

/// The deterministic set of `f` used by [`sigma_identity_suite`]: identity,
/// every distinct gyration, every distinct product of two gyrations, and a
/// few seeded random permutations fixing 0.
pub fn sigma_test_set(g: &Gyrogroup, seed: u64) -> Vec<Perm> {
    let n = g.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |p: Perm, out: &mut Vec<Perm>| {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    };
    push(Perm::identity(n), &mut out);
    let mut gyrations: Vec<Perm> = g.gyrations().into_iter().cloned().collect();
    gyrations.sort();
    gyrations.dedup();
    for p in &gyrations {
        push(p.clone(), &mut out);
    }
    for p in &gyrations {
        for q in &gyrations {
            push(p * q, &mut out);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TEST_PERMS {
        let mut rest: Vec<usize> = (1..n).collect();
        rest.shuffle(&mut rng);
        let mut images = vec![0];
        images.extend(rest);
        push(Perm::from_images_unchecked(images), &mut out);
    }
    out
}

/// Checks the eight σ identities: exhaustive over `a, b, c`, with `f`
/// ranging over [`sigma_test_set`].
pub fn sigma_identity_suite(g: &Gyrogroup, seed: u64) -> AxiomReport {
    let n = g.order();
    let fs = sigma_test_set(g, seed);
    let mut report = AxiomReport::new();
    let id = Perm::identity(n);

    // σ_a(f) for every f in the set and every a
    let table: Vec<Vec<Perm>> = fs.iter().map(|f| (0..n).map(|a| sigma_raw(g, a, f)).collect()).collect();

    for a in 0..n {
        report.expect(sigma_raw(g, a, &id).is_identity(), "sigma-of-identity", &[a]);
        for b in 0..n {
            for c in 0..n {
                let gbc = g.gyr(b, c);
                report.expect(sigma_raw(g, a, gbc) == *gbc, "sigma-fixes-gyrations", &[a, b, c]);
            }
        }
    }

    for (k, f) in fs.iter().enumerate() {
        let finv = f.inverse();
        for a in 0..n {
            let s = &table[k][a];
            let valid = sigma(g, a, f).map(|t| t == *s).unwrap_or(false);
            report.expect(valid, "sigma-is-permutation", &[k, a]);

            let lhs = g.inv(finv.apply(a));
            let rhs = sigma_raw(g, a, &finv).apply(g.inv(a));
            report.expect(lhs == rhs, "sigma-inverse-point", &[k, a]);

            let inv_lhs = s.inverse();
            let inv_rhs = sigma_raw(g, f.apply(a), &finv);
            report.expect(inv_lhs == inv_rhs, "sigma-inverse", &[k, a]);

            let trivial = g.gyr(f.apply(a), s.apply(g.inv(a))).is_identity();
            report.expect(trivial, "sigma-trivial-gyration", &[k, a]);

            for b in 0..n {
                let lhs = &table[k][g.op(a, b)] * g.gyr(a, b);
                let rhs = g.gyr(f.apply(a), s.apply(b)) * &sigma_raw(g, b, s);
                report.expect(lhs == rhs, "sigma-twist", &[k, a, b]);
            }
        }
    }

    for (i, f1) in fs.iter().enumerate() {
        for (j, f2) in fs.iter().enumerate() {
            let prod = f1 * f2;
            for a in 0..n {
                let lhs = sigma_raw(g, a, &prod);
                let rhs = &table[i][f2.apply(a)] * &table[j][a];
                report.expect(lhs == rhs, "sigma-product", &[i, j, a]);
            }
        }
    }
    report
}

/// `R(G)`: the closure of all gyrations under composition. Also confirms
/// `σ_a(r) ∈ R(G)` for every `a` and `r`.
pub fn gyration_group(g: &Gyrogroup, budget: usize) -> Result<ConcreteGroup<Perm>> {
    let gens: Vec<Perm> = g.gyrations().into_iter().cloned().collect();
    let r = ConcreteGroup::generate(&gens, Perm::identity(g.order()), |p, q| p * q, budget)?;
    for x in r.elements() {
        for a in 0..g.order() {
            if !r.contains(&sigma_raw(g, a, x)) {
                return Err(Error::Inconsistency(format!("sigma_{a}({x}) escapes R(G)")));
            }
        }
    }
    Ok(r)
}

/// `GR(G)`: the closure of `{(a, I)}` under the pair product, confirmed to
/// be exactly `G × R(G)`.
pub fn pair_group(g: &Gyrogroup, r: &ConcreteGroup<Perm>, budget: usize) -> Result<ConcreteGroup<PairElem>> {
    let n = g.order();
    let expected = n.saturating_mul(r.order());
    if expected > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let gens: Vec<PairElem> = (0..n).map(|a| PairElem::point(n, a)).collect();
    let gr = ConcreteGroup::generate(&gens, PairElem::identity(n), |x, y| pair_mul(g, x, y), budget)?;
    let mismatch = gr.order() != expected || gr.elements().iter().any(|x| !r.contains(&x.f));
    if mismatch {
        return Err(Error::Inconsistency(format!(
            "the subgroup generated by G has order {} but G x R(G) has order {expected}",
            gr.order()
        )));
    }
    Ok(gr)
}

/// Pair-group axioms over `GR(G)`: associativity (both association orders
/// evaluated independently), the two-sided identity, and two-sided inverses.
/// Exhaustive up to [`EXHAUSTIVE_PAIR_LIMIT`] elements, otherwise
/// [`SAMPLED_TRIPLES`] seeded random triples.
pub fn pair_group_suite(g: &Gyrogroup, gr: &ConcreteGroup<PairElem>, seed: u64) -> AxiomReport {
    let elems = gr.elements();
    let id = PairElem::identity(g.order());
    let mut report = AxiomReport::new();
    for (i, x) in elems.iter().enumerate() {
        report.expect(pair_mul(g, &id, x) == *x && pair_mul(g, x, &id) == *x, "pair-identity", &[i]);
        let xi = pair_inv(g, x);
        report.expect(
            pair_mul(g, x, &xi) == id && pair_mul(g, &xi, x) == id,
            "pair-inverse",
            &[i],
        );
    }
    let assoc = |i: usize, j: usize, k: usize, report: &mut AxiomReport| {
        let (x, y, z) = (&elems[i], &elems[j], &elems[k]);
        let left = pair_mul(g, &pair_mul(g, x, y), z);
        let right = pair_mul(g, x, &pair_mul(g, y, z));
        report.expect(left == right, "pair-associativity", &[i, j, k]);
    };
    let m = elems.len();
    if m <= EXHAUSTIVE_PAIR_LIMIT {
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    assoc(i, j, k, &mut report);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            let (i, j, k) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
            assoc(i, j, k, &mut report);
        }
    }
    report
}

/// Seeded random triples from all of `G × Sym(G \ {e})`, not just `GR(G)`.
pub fn full_pair_group_sample(g: &Gyrogroup, seed: u64, triples: usize) -> AxiomReport {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_pair = |rng: &mut ChaCha8Rng| {
        let mut rest: Vec<usize> = (1..n).collect();
        rest.shuffle(rng);
        let mut images = vec![0];
        images.extend(rest);
        PairElem { a: rng.gen_range(0..n), f: Perm::from_images_unchecked(images) }
    };
    let id = PairElem::identity(n);
    let mut report = AxiomReport::new();
    for t in 0..triples {
        let (x, y, z) = (random_pair(&mut rng), random_pair(&mut rng), random_pair(&mut rng));
        let left = pair_mul(g, &pair_mul(g, &x, &y), &z);
        let right = pair_mul(g, &x, &pair_mul(g, &y, &z));
        report.expect(left == right, "pair-associativity", &[t]);
        let xi = pair_inv(g, &x);
        report.expect(pair_mul(g, &x, &xi) == id && pair_mul(g, &xi, &x) == id, "pair-inverse", &[t]);
    }
    report
}

/// The completion `M(G)` with everything computed along the way.
#[derive(Clone, Debug)]
pub struct GgcResult {
    pub source: Gyrogroup,
    /// `R(G)` as permutations of `G` fixing 0.
    pub gyration_group: ConcreteGroup<Perm>,
    /// `GR(G) = G × R(G)` under the pair product.
    pub pair_group: ConcreteGroup<PairElem>,
    /// Indices into `pair_group` of the normal closure of `{(e, r)}`.
    pub normal_closure: Vec<usize>,
    /// `M(G)`.
    pub completion: FiniteGroup,
    /// `GR(G) -> M(G)`.
    pub projection: GroupHom,
    /// `ν`, indexed by elements of `G`.
    pub nu: Vec<usize>,
    pub kernel: Vec<usize>,
}

/// Builds `M(G)` and `ν` and verifies their invariants.
pub fn complete(g: &Gyrogroup) -> Result<GgcResult> {
    complete_with_budget(g, DEFAULT_CLOSURE_BUDGET)
}

pub fn complete_with_budget(g: &Gyrogroup, budget: usize) -> Result<GgcResult> {
    let n = g.order();
    let r = gyration_group(g, budget)?;
    let gr = pair_group(g, &r, budget)?;
    let embedded: Vec<usize> = r
        .elements()
        .iter()
        .map(|f| gr.index_of(&PairElem { a: 0, f: f.clone() }).expect("G x R(G) contains (e, r)"))
        .collect();
    let normal = gr.group().normal_closure(&embedded);
    let (m, projection) = gr.group().quotient(&normal)?;
    let nu: Vec<usize> = (0..n)
        .map(|a| projection.apply(gr.index_of(&PairElem::point(n, a)).expect("(a, I) lies in GR(G)")))
        .collect();
    let kernel = (0..n).filter(|&a| nu[a] == m.identity()).collect();
    let result = GgcResult {
        source: g.clone(),
        gyration_group: r,
        pair_group: gr,
        normal_closure: normal,
        completion: m,
        projection,
        nu,
        kernel,
    };
    result.check_invariants().into_result()?;
    Ok(result)
}

impl GgcResult {
    pub fn completion_order(&self) -> usize {
        self.completion.order()
    }

    /// Elements of `G` mapped to `m` by `ν`.
    pub fn fiber(&self, m: usize) -> Vec<usize> {
        (0..self.nu.len()).filter(|&a| self.nu[a] == m).collect()
    }

    pub fn fibers(&self) -> crate::group::Partition {
        crate::group::Partition::from_labels(&self.nu)
    }

    pub fn nu_hom(&self) -> GroupHom {
        GroupHom::new(self.nu.clone())
    }

    /// Re-checks every structural claim about the completion.
    pub fn check_invariants(&self) -> AxiomReport {
        let g = &self.source;
        let n = g.order();
        let mut report = AxiomReport::new();
        let gr = &self.pair_group;
        report.expect(gr.order() == n * self.gyration_group.order(), "pair-group-order", &[gr.order()]);
        for x in gr.elements() {
            report.expect(self.gyration_group.contains(&x.f), "pair-group-shape", &[x.a]);
        }
        let embedded: Vec<usize> = self
            .gyration_group
            .elements()
            .iter()
            .filter_map(|f| gr.index_of(&PairElem { a: 0, f: f.clone() }))
            .collect();
        report.expect(embedded.len() == self.gyration_group.order(), "gyration-embedding", &[]);
        report.expect(gr.group().is_subgroup(&embedded), "gyration-embedding-subgroup", &[]);
        let member = gr.group().membership(&self.normal_closure);
        report.expect(embedded.iter().all(|&i| member[i]), "normal-closure-contains", &[]);
        report.expect(gr.group().is_normal(&self.normal_closure), "normal-closure-normal", &[]);
        report.merge(g.verify_hom_to_group(&self.completion, &self.nu));
        report.expect(
            self.nu_hom().is_surjective(&self.completion),
            "nu-surjective",
            &[self.completion.order()],
        );
        report.expect(
            self.kernel.len() * self.completion.order() == n,
            "kernel-index",
            &[self.kernel.len(), self.completion.order()],
        );
        report
    }
}

/// The unique `α: M(G) -> K` with `α ∘ ν = η`.
///
/// `α(m)` is read off any element of the fiber `ν⁻¹(m)`; the result is
/// checked for well-definedness, the homomorphism property, and `α ∘ ν = η`.
/// Uniqueness is structural: `ν` is surjective, so `α` is pinned on every
/// element.
pub fn factor_hom(ggc: &GgcResult, target: &FiniteGroup, eta: &[usize]) -> Result<GroupHom> {
    let report = ggc.source.verify_hom_to_group(target, eta);
    if !report.passed() {
        return Err(Error::NotHomomorphism(report));
    }
    let m = &ggc.completion;
    let mut alpha = vec![usize::MAX; m.order()];
    for (a, &class) in ggc.nu.iter().enumerate() {
        if alpha[class] == usize::MAX {
            alpha[class] = eta[a];
        } else if alpha[class] != eta[a] {
            return Err(Error::Inconsistency(format!(
                "eta is not constant on the nu-fiber of class {class} (element {a})"
            )));
        }
    }
    if alpha.contains(&usize::MAX) {
        return Err(Error::Inconsistency("nu is not surjective".into()));
    }
    let alpha = GroupHom::new(alpha);
    if !alpha.verify(m, target).passed() {
        return Err(Error::Inconsistency("the factored map is not a group homomorphism".into()));
    }
    if (0..ggc.nu.len()).any(|a| alpha.apply(ggc.nu[a]) != eta[a]) {
        return Err(Error::Inconsistency("alpha after nu differs from eta".into()));
    }
    Ok(alpha)
}

/// `φ̂: M(G1) -> M(G2)` with `φ̂ ∘ ν₁ = ν₂ ∘ φ`.
pub fn induced_hom(ggc1: &GgcResult, ggc2: &GgcResult, phi: &[usize]) -> Result<GroupHom> {
    let report = ggc1.source.verify_hom_to_gyrogroup(&ggc2.source, phi);
    if !report.passed() {
        return Err(Error::NotHomomorphism(report));
    }
    let eta: Vec<usize> = phi.iter().map(|&b| ggc2.nu[b]).collect();
    let hat = factor_hom(ggc1, &ggc2.completion, &eta)?;
    for (a, &b) in phi.iter().enumerate() {
        if hat.apply(ggc1.nu[a]) != ggc2.nu[b] {
            return Err(Error::Inconsistency(format!("induced square fails to commute at {a}")));
        }
    }
    Ok(hat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::isomorphic;
    use crate::gyro::{search_gyrogroups, SearchOptions};

    pub(crate) fn g8() -> Gyrogroup {
        let mut opts = SearchOptions::new(8);
        opts.proper_only = true;
        opts.limit = 1;
        search_gyrogroups(opts).unwrap().tables.remove(0)
    }

    #[test]
    fn sigma_basics_on_groups() {
        let g = Gyrogroup::from_group(&fixtures::dihedral(4)).unwrap();
        let grp = fixtures::dihedral(4);
        let f = Perm::from_images(vec![0, 3, 1, 2, 4, 5, 7, 6]).unwrap();
        for a in 0..8 {
            assert!(sigma(&g, a, &Perm::identity(8)).unwrap().is_identity());
            let s = sigma(&g, a, &f).unwrap();
            for b in 0..8 {
                assert_eq!(s.apply(b), grp.mul(grp.inv(f.apply(a)), f.apply(grp.mul(a, b))));
            }
        }
    }

    #[test]
    fn sigma_rejects_perms_moving_identity() {
        let g = Gyrogroup::from_group(&fixtures::cyclic(3)).unwrap();
        assert!(sigma(&g, 1, &Perm::transposition(3, 0, 1)).is_err());
    }

    #[test]
    fn sigma_fixes_gyrations_of_proper_fixture() {
        let g = g8();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    assert_eq!(sigma(&g, a, g.gyr(b, c)).unwrap(), *g.gyr(b, c));
                }
            }
        }
    }

    #[test]
    fn sigma_suite_passes() {
        let grp = Gyrogroup::from_group(&fixtures::quaternion()).unwrap();
        assert!(sigma_identity_suite(&grp, DEFAULT_SEED).passed());
        assert!(sigma_identity_suite(&g8(), DEFAULT_SEED).passed());
    }

    #[test]
    fn pair_product_identity_and_points() {
        let g = Gyrogroup::from_group(&fixtures::cyclic(5)).unwrap();
        let id = PairElem::identity(5);
        let x = PairElem { a: 3, f: Perm::cycle(5, &[1, 2, 4]).unwrap() };
        assert_eq!(pair_mul(&g, &id, &x), x);
        assert_eq!(pair_mul(&g, &x, &id), x);
        assert_eq!(pair_mul(&g, &PairElem::point(5, 2), &PairElem::point(5, 4)), PairElem::point(5, 1));
        assert_eq!(pair_mul(&g, &x, &pair_inv(&g, &x)), id);
    }

    #[test]
    fn point_products_land_in_gyration_group() {
        let g = g8();
        for a in 0..8 {
            for b in 0..8 {
                let p = pair_mul(&g, &PairElem::point(8, a), &PairElem::point(8, b));
                assert_eq!(p, PairElem { a: g.op(a, b), f: g.gyr(a, b).clone() });
            }
        }
    }

    #[test]
    fn groups_complete_to_themselves() {
        for grp in [fixtures::cyclic(6), fixtures::dihedral(4), fixtures::quaternion()] {
            let g = Gyrogroup::from_group(&grp).unwrap();
            let r = complete(&g).unwrap();
            assert_eq!(r.gyration_group.order(), 1);
            assert_eq!(r.pair_group.order(), grp.order());
            assert_eq!(r.kernel, vec![0]);
            assert!(isomorphic(&r.completion, &grp).unwrap().is_some());
        }
    }

    #[test]
    fn proper_fixture_completion() {
        let g = g8();
        let r = complete(&g).unwrap();
        assert!(r.gyration_group.order() > 1);
        assert_eq!(r.pair_group.order(), 8 * r.gyration_group.order());
        assert_eq!(r.kernel.len() * r.completion_order(), 8);
        assert!(r.check_invariants().passed());
        assert!(pair_group_suite(&g, &r.pair_group, DEFAULT_SEED).passed());
        // R(G) is closed under inversion of gyrations
        for a in 0..8 {
            for b in 0..8 {
                assert!(r.gyration_group.contains(g.gyr(b, a)));
            }
        }
    }

    #[test]
    fn full_pair_group_is_associative_on_samples() {
        assert!(full_pair_group_sample(&g8(), DEFAULT_SEED, 2_000).passed());
    }

    #[test]
    fn factoring_through_nu() {
        let g = g8();
        let r = complete(&g).unwrap();
        let alpha = factor_hom(&r, &r.completion, &r.nu).unwrap();
        assert_eq!(alpha, GroupHom::identity(r.completion_order()));
        let k = fixtures::cyclic(3);
        let trivial = factor_hom(&r, &k, &[0; 8]).unwrap();
        assert!(trivial.images().iter().all(|&x| x == 0));
        let bad = vec![1; 8];
        assert!(matches!(factor_hom(&r, &k, &bad), Err(Error::NotHomomorphism(_))));
    }

    #[test]
    fn factoring_for_groups_matches_fiberwise_lookup() {
        let grp = fixtures::cyclic(4);
        let g = Gyrogroup::from_group(&grp).unwrap();
        let r = complete(&g).unwrap();
        let k = fixtures::cyclic(2);
        let eta = vec![0, 1, 0, 1];
        let alpha = factor_hom(&r, &k, &eta).unwrap();
        for a in 0..4 {
            assert_eq!(alpha.apply(r.nu[a]), eta[a]);
        }
    }

    #[test]
    fn induced_homs() {
        let g = g8();
        let r = complete(&g).unwrap();
        let id: Vec<usize> = (0..8).collect();
        assert_eq!(induced_hom(&r, &r, &id).unwrap(), GroupHom::identity(r.completion_order()));
        let triv = induced_hom(&r, &r, &[0; 8]).unwrap();
        assert!(triv.images().iter().all(|&x| x == 0));
    }
}
