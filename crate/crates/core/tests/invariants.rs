//! Property tests over randomly chosen fixtures, subgroups and functions.

use std::sync::OnceLock;

use gyk::action::{self, ActionTable};
use gyk::fixtures;
use gyk::ggc;
use gyk::group::{generate_closure, isomorphic, ConcreteGroup, DEFAULT_CLOSURE_BUDGET};
use gyk::gyro::{search_gyrogroups, SearchOptions};
use gyk::lgyr;
use gyk::right;
use gyk::{FiniteGroup, Gyrogroup, Perm};
use proptest::prelude::*;
use proptest::sample::select;

fn groups() -> &'static [FiniteGroup] {
    static G: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| {
        let mut v: Vec<FiniteGroup> = (1..=8).map(fixtures::cyclic).collect();
        v.extend([fixtures::dihedral(3), fixtures::dihedral(4), fixtures::quaternion()]);
        v.push(fixtures::direct_product(&fixtures::cyclic(2), &fixtures::cyclic(2)));
        v.push(fixtures::direct_product(&fixtures::cyclic(2), &fixtures::dihedral(3)));
        v
    })
}

/// The first 64 proper order-8 gyrogroups in search order.
fn proper8() -> &'static [Gyrogroup] {
    static G: OnceLock<Vec<Gyrogroup>> = OnceLock::new();
    G.get_or_init(|| {
        let mut opts = SearchOptions::new(8);
        opts.proper_only = true;
        opts.limit = 64;
        search_gyrogroups(opts).unwrap().tables
    })
}

fn gyrogroup() -> impl Strategy<Value = Gyrogroup> {
    let as_gyro: Vec<Gyrogroup> = groups().iter().map(|k| Gyrogroup::from_group(k).unwrap()).collect();
    prop_oneof![select(as_gyro), select(proper8().to_vec())]
}

fn group_and_subgroup() -> impl Strategy<Value = (FiniteGroup, Vec<usize>)> {
    select(groups().to_vec()).prop_flat_map(|k| {
        let subs = k.subgroups();
        (Just(k), select(subs))
    })
}

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closures_are_subgroups(gens in prop::collection::vec(perm(5), 1..4)) {
        let elems = generate_closure(&gens, Perm::identity(5), |p, q| p * q, DEFAULT_CLOSURE_BUDGET).unwrap();
        prop_assert!(elems.contains(&Perm::identity(5)));
        for x in &elems {
            prop_assert!(elems.contains(&x.inverse()));
            for y in &elems {
                prop_assert!(elems.contains(&(x * y)));
            }
        }
        prop_assert_eq!(120 % elems.len(), 0);
    }

    #[test]
    fn quotient_projection_is_a_hom((k, h) in group_and_subgroup()) {
        let n = k.normal_closure(&h);
        let (q, proj) = k.quotient(&n).unwrap();
        prop_assert!(proj.verify(&k, &q).passed());
        prop_assert_eq!(k.order(), q.order() * n.len());
    }

    #[test]
    fn isomorphism_is_symmetric(a in select(groups().to_vec()), b in select(groups().to_vec())) {
        prop_assert_eq!(isomorphic(&a, &b).unwrap().is_some(), isomorphic(&b, &a).unwrap().is_some());
    }

    #[test]
    fn gyrogroup_laws(g in gyrogroup()) {
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                let gyr = g.gyr(a, b);
                prop_assert_eq!(gyr.apply(0), 0);
                prop_assert_eq!(g.op(g.inv(a), g.op(a, b)), b);
                prop_assert_eq!(&gyr.inverse(), g.gyr(b, a));
                for z in 0..n {
                    prop_assert_eq!(g.op(g.op(a, b), gyr.apply(z)), g.op(a, g.op(b, z)));
                }
            }
        }
        prop_assert!(g.check_identities().passed());
        prop_assert_eq!(g.is_associative(), g.has_trivial_gyrations());
    }

    #[test]
    fn completion_invariants(g in gyrogroup()) {
        let result = ggc::complete(&g).unwrap();
        prop_assert!(result.check_invariants().passed());
        prop_assert_eq!(g.order(), result.kernel.len() * result.completion_order());
        let mut hit = vec![false; result.completion_order()];
        for &m in &result.nu {
            hit[m] = true;
        }
        prop_assert!(hit.iter().all(|&h| h));
        prop_assert_eq!(result.pair_group.order(), g.order() * result.gyration_group.order());
        if let Some(k) = g.as_group() {
            prop_assert!(isomorphic(&result.completion, &k).unwrap().is_some());
        }
    }

    #[test]
    fn pulled_back_actions(g in gyrogroup(), pick in any::<prop::sample::Index>()) {
        let result = ggc::complete(&g).unwrap();
        let actions = action::coset_pullbacks(&result);
        let act = pick.get(&actions);
        prop_assert!(action::validate_action(&g, act).unwrap().passed());
        // action -> hom -> action
        let hom = action::action_to_hom(&g, act).unwrap();
        let rows: Vec<Vec<usize>> = (0..g.order()).map(|a| hom.perm(a).images().to_vec()).collect();
        prop_assert_eq!(&ActionTable::from_rows(act.set_size(), &rows).unwrap(), act);
        // lift, then pull back along nu
        let lifted = action::lift_action(&result, act).unwrap();
        prop_assert_eq!(&ActionTable::pullback(&result.nu, &lifted), act);
        prop_assert!(action::bridge_check(&result, act).unwrap().passed());
        prop_assert!(action::burnside_counts(act, &result).unwrap().holds());
        // orbits partition X: every point lies in exactly the orbit of its representative
        let orbits = action::orbits(act);
        for x in 0..act.set_size() {
            let mut o = action::orbit_of(act, x);
            o.sort_unstable();
            prop_assert_eq!(orbits.block_of(x), &o[..]);
        }
    }

    #[test]
    fn invariant_functions_are_orbit_constant(g in gyrogroup(), values in prop::collection::vec(0u64..3, 8)) {
        let n = g.order();
        let tg = lgyr::translated_gyration_group(&g).unwrap();
        let orbits = tg.orbits(n);
        // arbitrary function
        let f: Vec<u64> = (0..n).map(|a| values[a % values.len()]).collect();
        let constant = orbits.blocks().iter().all(|b| b.iter().all(|&a| f[a] == f[b[0]]));
        prop_assert_eq!(lgyr::is_invariant(&g, &f), constant);
        // forced invariant: one value per orbit
        let h: Vec<u64> = (0..n).map(|a| values[orbits.block_of(a)[0] % values.len()]).collect();
        prop_assert!(lgyr::is_invariant(&g, &h));
        let result = ggc::complete(&g).unwrap();
        for p in [2, 3, 101] {
            let basis = lgyr::lgyr_basis(&result, p).unwrap();
            prop_assert_eq!(lgyr::rank_mod_p(&basis, p), orbits.len());
        }
    }

    #[test]
    fn right_gyrogroup_laws((k, h) in group_and_subgroup()) {
        let (k, _) = k.with_identity_first();
        let r = right::gbased(&k).unwrap();
        prop_assert!(r.check_axioms().passed());
        let n = r.order();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(r.op(r.op(x, y), r.inv(y)), x);
            }
        }
        // group actions of K are right actions of its G-based table
        let act = ActionTable::on_cosets(&k, &h).unwrap();
        prop_assert!(right::validate_right_action(&r, &act).unwrap().passed());
        let hom = right::raction_to_hom(&r, &act).unwrap();
        prop_assert_eq!(&right::hom_to_raction(&hom), &act);
        let kernel = right::rhom_kernel(&r, &act).unwrap();
        let fixed: Vec<usize> = (0..n).filter(|&a| (0..act.set_size()).all(|x| act.act(a, x) == x)).collect();
        prop_assert_eq!(&kernel, &fixed);
        prop_assert!(right::check_invariant(&r, &kernel).unwrap().passed());
        prop_assert!(right::quotient_matches_image(&r, &act).unwrap().isomorphism.is_some());
    }
}

#[test]
fn perm_laws_exhaustive_degree_four() {
    let s4: ConcreteGroup<Perm> = fixtures::symmetric_group(4);
    let e = s4.elements();
    for p in e {
        assert!((p * &p.inverse()).is_identity() && (&p.inverse() * p).is_identity());
        for q in e {
            for r in e {
                assert_eq!(&(p * q) * r, p * &(q * r));
            }
        }
    }
}
