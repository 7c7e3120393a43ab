use proptest::prelude::*;

use sbtg_core::bitop::{
    bi_soft_connected, is_sbtg_componentwise, is_sbtg_oracle, pairwise_soft_separation,
    slice_compactness_transfer, slice_separation_equivalence, Disjointness, DEFAULT_ORACLE_CAP,
};
use sbtg_core::group::Side;
use sbtg_core::random::{
    random_canonical_space, random_sbtg_instance, random_soft_group, random_soft_subset,
    random_soft_topology, seeded,
};
use sbtg_core::soft_topology::{materialize_tau_star, DEFAULT_CANONICAL_CAP, DEFAULT_TAU_STAR_CAP};
use sbtg_core::topology::{is_homeomorphism, satisfies, DEFAULT_OPEN_CAP};
use sbtg_core::{Origin, SeIndex, SeparationLevel, SubsetBits};

const LEVELS: [SeparationLevel; 3] = [
    SeparationLevel::T0,
    SeparationLevel::T1,
    SeparationLevel::T2,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn soft_elements_of_unions_and_intersections(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_soft_group(&mut rng, 64);
        let f = g.carrier().clone();
        let index = SeIndex::new(&f).unwrap();
        let a = random_soft_subset(&mut rng, &f);
        let b = random_soft_subset(&mut rng, &f);
        let (sa, sb) = (index.se_of(&a).unwrap(), index.se_of(&b).unwrap());
        let union = index.se_of(&a.union(&b).unwrap()).unwrap();
        prop_assert!(sa.bits().union(sb.bits()).is_subset(union.bits()));
        let meet = index.se_of(&a.intersection(&b).unwrap()).unwrap();
        prop_assert_eq!(meet.bits(), &sa.bits().intersection(sb.bits()));
        for e in index.elements() {
            let in_union = a.union(&b).unwrap().contains_element(&e);
            prop_assert_eq!(in_union, union.contains(index.index(&e).unwrap()));
        }
    }

    #[test]
    fn induced_family_depends_only_on_components(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_soft_group(&mut rng, DEFAULT_TAU_STAR_CAP);
        let f = g.carrier().clone();
        let tau = random_soft_topology(&mut rng, &f, 3);
        let index = SeIndex::new(&f).unwrap();
        let star = materialize_tau_star(&tau, &index, DEFAULT_TAU_STAR_CAP).unwrap();
        let can = tau.canonical_enlargement(DEFAULT_CANONICAL_CAP).unwrap();
        let can_star = materialize_tau_star(&can, &index, DEFAULT_TAU_STAR_CAP).unwrap();
        prop_assert_eq!(&star.family, &can_star.family);
        prop_assert_eq!(&star.topology, &can_star.topology);
        for h in tau.members(DEFAULT_OPEN_CAP).unwrap() {
            let se = index.se_of(&h).unwrap();
            if !se.is_empty() {
                prop_assert!(star.contains(se.bits()));
                prop_assert!(star.topology.is_open(se.bits()));
            }
        }
    }

    #[test]
    fn product_topology_matches_family_exactly_when_family_is_a_topology(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_soft_group(&mut rng, DEFAULT_TAU_STAR_CAP);
        let f = g.carrier().clone();
        let tau = random_soft_topology(&mut rng, &f, 3);
        let index = SeIndex::new(&f).unwrap();
        let star = materialize_tau_star(&tau, &index, DEFAULT_TAU_STAR_CAP).unwrap();
        let opens = star.topology.opens(DEFAULT_OPEN_CAP).unwrap();
        prop_assert!(opens.iter().all(|u| star.contains(u)));
        prop_assert_eq!(star.axioms.holds, opens == star.family);
    }

    #[test]
    fn separation_levels_are_nested(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let space = random_canonical_space(&mut rng, 64);
        for mode in [Disjointness::Sectionwise, Disjointness::SoftElement] {
            let h: Vec<bool> = LEVELS
                .iter()
                .map(|&l| pairwise_soft_separation(&space, l, mode).holds)
                .collect();
            prop_assert!(!h[2] || h[1]);
            prop_assert!(!h[1] || h[0]);
        }
    }

    #[test]
    fn slice_separation_matches_on_canonical_spaces(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let space = random_canonical_space(&mut rng, 64);
        for level in LEVELS {
            let r = slice_separation_equivalence(&space, level);
            prop_assert!(r.holds(), "{:?}", r);
            prop_assert_eq!(r.soft_holds, r.slices_hold);
        }
    }

    #[test]
    fn compactness_transfers_through_slices(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let space = random_canonical_space(&mut rng, 64);
        let h = random_soft_subset(&mut rng, space.index().ambient());
        let r = slice_compactness_transfer(&space, &h).unwrap();
        prop_assert!(r.holds(), "{:?}", r);
    }

    #[test]
    fn oracle_agrees_with_slices(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let inst = random_sbtg_instance(&mut rng, DEFAULT_ORACLE_CAP);
        let r = is_sbtg_oracle(&inst, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(r.holds, is_sbtg_componentwise(&inst).unwrap().holds);
        prop_assert!(r.incident.is_none());
    }

    #[test]
    fn group_structure_of_induced_spaces(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let inst = random_sbtg_instance(&mut rng, DEFAULT_ORACLE_CAP);
        prop_assume!(is_sbtg_componentwise(&inst).unwrap().holds);
        let g = inst.group();
        for which in Origin::BOTH {
            let tau = inst.space().tau_star(which, DEFAULT_ORACLE_CAP).unwrap().topology;
            for a in 0..g.len() {
                for side in [Side::Left, Side::Right, Side::Inversion] {
                    let m = g.translation_map(a, side).unwrap();
                    prop_assert!(is_homeomorphism(&m, &tau, &tau).unwrap());
                }
            }
            prop_assert!(!satisfies(&tau, SeparationLevel::T0) || satisfies(&tau, SeparationLevel::T2));
        }
        let conn = bi_soft_connected(inst.space(), DEFAULT_OPEN_CAP).unwrap();
        prop_assert!(conn.first.agrees() && conn.second.agrees());
    }
}

#[test]
fn discrete_component_gives_a_clopen_point() {
    let f = sbtg_core::SoftSet::constant(2, 2, SubsetBits::full(2));
    let tau = sbtg_core::SoftTopology::discrete(&f);
    let index = SeIndex::new(&f).unwrap();
    let star = materialize_tau_star(&tau, &index, DEFAULT_TAU_STAR_CAP).unwrap();
    assert!(star.axioms.holds);
    assert!(star.topology.is_discrete());
    assert_eq!(star.family.len(), 16);
}
