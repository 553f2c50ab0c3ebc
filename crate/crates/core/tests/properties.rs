use proptest::prelude::*;

use essgroup::harness::essential_by_closures;
use essgroup::{
    all_subgroups, direct_product, e_of, essentialize, has_proper_essential, is_essential,
    is_essential_by_definition, normal_closure, normal_subgroups, parse, quotient, render, socle,
    FiniteGroup, GroupSpec, NamedGroup, Perm,
};

fn random_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6)
        .prop_flat_map(|n| {
            prop::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 1..=2)
        })
        .prop_map(|images| {
            let gens: Vec<Perm> = images
                .into_iter()
                .map(|v| Perm::from_images(v).unwrap())
                .collect();
            FiniteGroup::generate(gens[0].degree(), &gens).unwrap()
        })
}

fn named() -> impl Strategy<Value = NamedGroup> {
    prop_oneof![
        (1usize..12).prop_map(NamedGroup::Cyclic),
        (3usize..8).prop_map(|k| NamedGroup::Dihedral(2 * k)),
        (1usize..5).prop_map(NamedGroup::Symmetric),
        (3usize..6).prop_map(NamedGroup::Alternating),
        Just(NamedGroup::Quaternion8),
    ]
}

fn spec_tree() -> impl Strategy<Value = GroupSpec> {
    named()
        .prop_map(GroupSpec::Named)
        .prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| GroupSpec::Product(Box::new(a), Box::new(b))),
                inner.clone().prop_map(|a| GroupSpec::Hol(Box::new(a))),
                inner.prop_map(|a| GroupSpec::Aut(Box::new(a))),
            ]
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_matches_subgroup_oracle(g in random_group()) {
        prop_assume!(g.order() <= 48);
        let lattice = normal_subgroups(&g).unwrap();
        let by_filter = all_subgroups(&g).unwrap().into_iter().filter(|s| s.is_normal()).count();
        prop_assert_eq!(lattice.len(), by_filter);
        for n in lattice.normals() {
            let fast = is_essential(&g, n).unwrap();
            prop_assert_eq!(fast.is_essential(), is_essential_by_definition(n, lattice.normals()));
            prop_assert_eq!(fast.is_essential(), essential_by_closures(&g, n));
            prop_assert!(fast.recheck(&lattice));
        }
    }

    #[test]
    fn socle_is_the_least_essential_subgroup(g in random_group()) {
        let soc = socle(&g).unwrap();
        prop_assert_eq!(&e_of(&g).unwrap(), &soc);
        prop_assert!(soc.is_normal());
        prop_assert!(is_essential(&g, &soc).unwrap().is_essential());
        prop_assert_eq!(has_proper_essential(&g).unwrap(), !soc.is_whole());
    }

    #[test]
    fn lattice_is_closed(g in random_group()) {
        let lattice = normal_subgroups(&g).unwrap();
        for a in lattice.normals() {
            prop_assert_eq!(g.order() % a.order(), 0);
            for b in lattice.normals() {
                prop_assert!(lattice.contains(&a.intersection(b)));
                prop_assert!(lattice.contains(&a.join(b)));
            }
        }
    }

    #[test]
    fn normal_closures_are_normal(g in random_group(), seed in any::<prop::sample::Index>()) {
        let x = seed.index(g.order());
        let c = normal_closure(&g, [x]);
        prop_assert!(c.is_normal());
        prop_assert!(c.contains(x));
        prop_assert!(normal_subgroups(&g).unwrap().contains(&c));
    }

    #[test]
    fn quotients_count_correctly(g in random_group(), pick in any::<prop::sample::Index>()) {
        let lattice = normal_subgroups(&g).unwrap();
        let n = &lattice.normals()[pick.index(lattice.len())];
        let (q, proj) = quotient(&g, n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert_eq!(&proj.kernel(), n);
        prop_assert!(proj.is_epi());
    }

    #[test]
    fn products_multiply_e(a in random_group(), b in random_group()) {
        prop_assume!(a.order() * b.order() <= 400);
        let p = direct_product(&a, &b).unwrap();
        let e = e_of(&p.group).unwrap();
        let ea = p.left_embedding.map_subgroup(&e_of(&a).unwrap());
        let eb = p.right_embedding.map_subgroup(&e_of(&b).unwrap());
        prop_assert_eq!(e, ea.join(&eb));
    }

    #[test]
    fn essentialized_images_are_essential(g in random_group()) {
        prop_assume!(g.order() <= 24);
        let p = direct_product(&g, &g).unwrap();
        let ess = essentialize(&p.left_embedding).unwrap();
        let lattice = normal_subgroups(&ess.quotient).unwrap();
        prop_assert!(ess.embedding.is_mono());
        prop_assert!(is_essential_by_definition(&ess.embedding.image(), lattice.normals()));
    }

    #[test]
    fn specs_round_trip(spec in spec_tree()) {
        let shown = render(&spec);
        prop_assert_eq!(parse(&shown).unwrap(), spec);
    }
}
