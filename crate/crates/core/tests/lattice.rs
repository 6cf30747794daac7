mod common;

use std::collections::BTreeSet;

use common::Set;
use proptest::prelude::*;

#[test]
fn normal_subgroups_match_brute_force() {
    for (name, g) in common::fixtures() {
        if g.order() > 200 {
            continue;
        }
        let elems = common::elements(&g);
        let brute = common::normal_subgroups(g.degree(), &elems);
        let ours: BTreeSet<Set> = g
            .normal_subgroups()
            .unwrap()
            .iter()
            .map(|n| common::subgroup_set(&g, n))
            .collect();
        assert_eq!(ours.len(), g.normal_subgroups().unwrap().len(), "{name}: duplicates");
        assert_eq!(ours, brute, "{name}");
    }
}

#[test]
fn center_and_derived_subgroup_match_brute_force() {
    for (name, g) in common::fixtures() {
        if g.order() > 200 {
            continue;
        }
        let elems = common::elements(&g);
        assert_eq!(common::subgroup_set(&g, &g.center().unwrap()), common::center(&elems), "{name}");
        assert_eq!(
            common::subgroup_set(&g, &g.derived_subgroup().unwrap()),
            common::derived(g.degree(), &elems),
            "{name}"
        );
    }
}

#[test]
fn quotient_class_counts_match_coset_orbits() {
    for (name, g) in common::fixtures() {
        if g.order() > 72 {
            continue;
        }
        let elems = common::elements(&g);
        for n in g.normal_subgroups().unwrap() {
            let set = common::subgroup_set(&g, n);
            let want = common::quotient_class_count(&elems, &set);
            assert_eq!(g.quotient_class_count(n).unwrap(), want, "{name}, |N| = {}", n.order());
            let q = g.quotient(n).unwrap();
            assert_eq!(q.group.order() * n.order(), g.order(), "{name}");
            assert_eq!(q.group.num_classes().unwrap(), want, "{name}");
        }
    }
}

#[test]
fn centralizer_orders_match_brute_force() {
    for (name, g) in common::fixtures() {
        if g.order() > 200 {
            continue;
        }
        let elems = common::elements(&g);
        for c in g.conjugacy_classes().unwrap() {
            let rep = c.representative.images().to_vec();
            assert_eq!(c.centralizer_order, common::centralizer_order(&elems, &rep) as u128, "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Every normal subgroup is a union of classes whose sizes sum to its order.
    #[test]
    fn normal_subgroups_are_unions_of_classes(i in 0usize..57) {
        let fx = common::fixtures();
        let (_, g) = &fx[i % fx.len()];
        let cl = g.conjugacy_classes().unwrap();
        for n in g.normal_subgroups().unwrap() {
            let mask = n.class_mask().unwrap();
            let total: u128 = mask.ones().map(|c| cl[c].size as u128).sum();
            prop_assert_eq!(total, n.order());
            prop_assert_eq!(g.order() % n.order(), 0);
        }
    }
}
