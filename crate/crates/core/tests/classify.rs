mod common;

use std::collections::BTreeSet;

use common::Set;
use diffclass_core::classify::*;
use diffclass_core::{construct::direct_product, make, Elem, PermGroup, Subgroup};

fn g(spec: &str) -> PermGroup {
    make(&spec.parse().unwrap()).unwrap()
}

fn normal_of_order(g: &PermGroup, order: u128, pred: impl Fn(&Subgroup) -> bool) -> Subgroup {
    g.normal_subgroups()
        .unwrap()
        .iter()
        .find(|n| n.order() == order && pred(n))
        .unwrap_or_else(|| panic!("no normal subgroup of order {order}"))
        .clone()
}

fn has_element_of_order(g: &PermGroup, n: &Subgroup, o: u64) -> bool {
    n.elements().iter().any(|&x| g.elem_order(x).unwrap() == o)
}

fn value(o: &TheoremCheckOutcome, key: &str) -> String {
    o.values.get(key).unwrap_or_else(|| panic!("{} has no value {key}", o.theorem)).clone()
}

fn all_true(o: &TheoremCheckOutcome) -> bool {
    o.applicable && o.clauses.iter().chain(&o.conditions).all(|c| c.verdict == Verdict::True)
}

fn class_set(g: &PermGroup, c: usize) -> Set {
    g.class_members(c)
        .unwrap()
        .iter()
        .map(|&x| g.element(x).unwrap().images().to_vec())
        .collect()
}

/// Brute-force difference triples `(M, N, c)` by comparing element sets.
fn brute_difference_classes(g: &PermGroup) -> BTreeSet<(Set, Set, Set)> {
    let ns: Vec<Set> = g
        .normal_subgroups()
        .unwrap()
        .iter()
        .map(|n| common::subgroup_set(g, n))
        .collect();
    let classes: Vec<Set> = (0..g.num_classes().unwrap()).map(|c| class_set(g, c)).collect();
    let mut out = BTreeSet::new();
    for m in &ns {
        for n in &ns {
            if n.len() >= m.len() || !n.is_subset(m) {
                continue;
            }
            let diff: Set = m.difference(n).cloned().collect();
            if let Some(c) = classes.iter().find(|c| **c == diff) {
                out.insert((m.clone(), n.clone(), c.clone()));
            }
        }
    }
    out
}

#[test]
fn standard_conjugacy_battery_over_fixtures() {
    let mut triples = 0;
    for (name, grp) in common::fixtures() {
        if grp.order() > 200 {
            continue;
        }
        let normals = grp.normal_subgroups().unwrap();
        for m in normals {
            for n in normals {
                if n.order() >= m.order() || !n.is_subgroup_of(m) {
                    continue;
                }
                let mset = common::subgroup_set(&grp, m);
                let nset = common::subgroup_set(&grp, n);
                let diff: Set = mset.difference(&nset).cloned().collect();
                for c in 0..grp.num_classes().unwrap() {
                    if !m.class_mask().unwrap().contains(c) || n.class_mask().unwrap().contains(c) {
                        continue;
                    }
                    let o = check_thm_standard_conj(&grp, m, n, c)
                        .unwrap_or_else(|e| panic!("{name}: {e}"));
                    let v = o.condition_verdicts();
                    let brute = class_set(&grp, c) == diff;
                    assert_eq!(v[0], Verdict::from_bool(brute), "{name}: condition (1) vs element sets");
                    for x in &v[1..4] {
                        assert_eq!(*x, v[0], "{name}: conditions disagree");
                    }
                    triples += 1;
                }
            }
        }
    }
    assert!(triples >= 1000, "only {triples} triples");
}

#[test]
fn difference_classes_match_brute_force() {
    for (name, grp) in common::fixtures() {
        if grp.order() > 120 {
            continue;
        }
        let ours: BTreeSet<(Set, Set, Set)> = difference_classes(&grp)
            .unwrap()
            .iter()
            .map(|w| {
                (
                    common::subgroup_set(&grp, &w.m),
                    common::subgroup_set(&grp, &w.n),
                    class_set(&grp, w.class_index),
                )
            })
            .collect();
        assert_eq!(ours, brute_difference_classes(&grp), "{name}");
    }
}

#[test]
fn camina_pairs_match_the_definition() {
    for (name, grp) in common::fixtures() {
        if grp.order() > 72 {
            continue;
        }
        let elems = common::elements(&grp);
        for n in grp.normal_subgroups().unwrap() {
            if n.is_trivial() || n.order() == grp.order() {
                continue;
            }
            let nset = common::subgroup_set(&grp, n);
            let brute = elems.iter().filter(|x| !nset.contains(*x)).all(|x| {
                let cl = common::class_of(&elems, x);
                nset.iter().all(|y| cl.contains(&common::mul(y, x)))
            });
            assert_eq!(is_camina_pair(&grp, n).unwrap(), brute, "{name}, |N| = {}", n.order());
        }
    }
}

#[test]
fn gagola_detection_matches_the_table() {
    for (name, grp) in common::fixtures() {
        if grp.order() <= 2 {
            continue;
        }
        let t = grp.character_table().unwrap();
        let brute = t
            .irreducibles
            .iter()
            .any(|chi| !chi.is_linear() && chi.values.iter().filter(|v| !v.is_zero()).count() == 2);
        assert_eq!(gagola_witness(&grp).unwrap().is_some(), brute, "{name}");
    }
}

#[test]
fn gagola_examples() {
    for spec in ["dihedral 8", "generalized_quaternion 8", "alternating 4", "agl1 5"] {
        let w = gagola_witness(&g(spec)).unwrap().unwrap_or_else(|| panic!("{spec}"));
        assert!(w.outcome.holds, "{spec}: {}", w.outcome);
    }
    let w = gagola_witness(&g("agl1 5")).unwrap().unwrap();
    assert_eq!(value(&w.outcome, "chi(1)"), "4");
    let w = gagola_witness(&g("alternating 4")).unwrap().unwrap();
    assert_eq!(w.m.order(), 4);
    for spec in ["cyclic 6", "alternating 5", "symmetric 4"] {
        assert!(gagola_witness(&g(spec)).unwrap().is_none(), "{spec}");
    }
}

#[test]
fn hypothesis_one_examples() {
    let a4 = g("alternating 4");
    let v4 = normal_of_order(&a4, 4, |_| true);
    let one = a4.trivial_subgroup().unwrap();
    let c = v4.elements().iter().find(|&&x| x != 0).map(|&x| a4.class_of(x).unwrap()).unwrap();
    let o = check_hypothesis1(&a4, &v4, &one, c).unwrap();
    assert!(all_true(&o), "{o}");
    assert_eq!((value(&o, "chi(1)"), value(&o, "chi(g)"), value(&o, "|C_G(g)|")), ("3".into(), "-1".into(), "4".into()));

    let f20 = g("agl1 5");
    let c5 = normal_of_order(&f20, 5, |_| true);
    let one = f20.trivial_subgroup().unwrap();
    let c = f20.class_of(c5.elements()[1]).unwrap();
    let o = check_hypothesis1(&f20, &c5, &one, c).unwrap();
    assert!(all_true(&o), "{o}");
    assert_eq!((value(&o, "chi(1)"), value(&o, "chi(g)"), value(&o, "|C_G(g)|")), ("4".into(), "-1".into(), "5".into()));

    let d8 = g("dihedral 8");
    let c4 = normal_of_order(&d8, 4, |n| has_element_of_order(&d8, n, 4));
    let z = d8.center().unwrap();
    let r = *c4.elements().iter().find(|&&x| d8.elem_order(x).unwrap() == 4).unwrap();
    let o = check_hypothesis1(&d8, &c4, &z, d8.class_of(r).unwrap()).unwrap();
    assert!(!o.applicable && !o.falsified(), "{o}");
}

fn frobenius_involution_fixtures() -> Vec<String> {
    let mut v: Vec<String> = ["dihedral_6", "dihedral_10", "dihedral_14", "dihedral_18", "agl1_3", "symmetric_3"]
        .map(String::from)
        .to_vec();
    v.sort();
    v
}

#[test]
fn degenerate_battery() {
    let positive = frobenius_involution_fixtures();
    for (name, grp) in common::fixtures() {
        for n in grp.normal_subgroups().unwrap() {
            if n.order() * 2 != grp.order() {
                continue;
            }
            let o = check_degenerate(&grp, n).unwrap_or_else(|e| panic!("{name}: {e}"));
            let v = o.condition_verdicts();
            assert_eq!(v.len(), 5, "{name}");
            assert!(v.iter().all(|x| *x == v[0]), "{name}: {o}");
            if positive.contains(&name) {
                assert!(v.iter().all(|x| *x == Verdict::True), "{name}: {o}");
            }
        }
    }
    let c4 = g("cyclic 4");
    let c2 = normal_of_order(&c4, 2, |_| true);
    let o = check_degenerate(&c4, &c2).unwrap();
    assert!(o.condition_verdicts().iter().all(|x| *x == Verdict::False), "{o}");
}

#[test]
fn central_gagola_examples() {
    let sl = g("sl2 3");
    let o = central_gagola(&sl).unwrap().expect("SL2(3) witness");
    assert!(all_true(&o), "{o}");
    assert_eq!(value(&o, "chi(1)"), "3");
    assert_eq!(value(&o, "chi(g)"), "-1");
    assert_eq!(value(&o, "|C_G(g)|"), "4");
    assert_eq!(value(&o, "|g^G|"), "6");
    let d16 = g("dihedral 16");
    let o = central_gagola(&d16).unwrap().expect("D16 witness");
    let c: usize = value(&o, "class").parse().unwrap();
    let rep = d16.conjugacy_classes().unwrap()[c].rep;
    let z2 = &d16.upper_central_series().unwrap()[2];
    assert!(z2.contains(rep) && !d16.center().unwrap().contains(rep));
    assert!(central_gagola(&g("dihedral 8")).unwrap().is_none());
}

#[test]
fn near_camina_examples() {
    let s3 = g("symmetric 3");
    let o = near_camina_element(&s3).unwrap().expect("S3 witness");
    assert!(all_true(&o), "{o}");
    assert_eq!((value(&o, "chi(1)"), value(&o, "chi(g)"), value(&o, "|K|")), ("2".into(), "-1".into(), "1".into()));
    let sl = g("sl2 3");
    let o = near_camina_element(&sl).unwrap().expect("SL2(3) witness");
    assert!(all_true(&o), "{o}");
    assert_eq!((value(&o, "|K|"), value(&o, "|C_G(g)|")), ("2".into(), "4".into()));
    assert!(near_camina_element(&g("alternating 5")).unwrap().is_none());
}

#[test]
fn frobenius_examples() {
    let s3 = g("symmetric 3");
    assert_eq!(frobenius_kernel(&s3).unwrap().unwrap().order(), 3);
    let (k, p, m) = is_doubly_transitive_frobenius(&s3).unwrap().unwrap();
    assert_eq!((k.order(), p, m), (3, 3, 1));
    let f20 = g("agl1 5");
    let (k, p, m) = is_doubly_transitive_frobenius(&f20).unwrap().unwrap();
    assert_eq!((k.order(), p, m), (5, 5, 1));
    assert!(frobenius_kernel(&g("dihedral 12")).unwrap().is_none());

    let t = (0..s3.order() as Elem).find(|&x| s3.elem_order(x).unwrap() == 2).unwrap();
    let h = Subgroup::generated_by(&s3, &[t]).unwrap();
    let one = s3.trivial_subgroup().unwrap();
    assert_eq!(is_frobenius_wielandt_triple(&s3, &h, &one).unwrap().unwrap().order(), 3);
    let x = (0..f20.order() as Elem).find(|&x| f20.elem_order(x).unwrap() == 4).unwrap();
    let h = Subgroup::generated_by(&f20, &[x]).unwrap();
    let one = f20.trivial_subgroup().unwrap();
    assert_eq!(is_frobenius_wielandt_triple(&f20, &h, &one).unwrap().unwrap().order(), 5);
    let c4 = g("cyclic 4");
    let c2 = normal_of_order(&c4, 2, |_| true);
    let one = c4.trivial_subgroup().unwrap();
    assert!(is_frobenius_wielandt_triple(&c4, &c2, &one).unwrap().is_none());
}

#[test]
fn two_frobenius_and_extraspecial_examples() {
    let s4 = g("symmetric 4");
    let v4 = normal_of_order(&s4, 4, |_| true);
    assert!(is_two_frobenius(&s4, &v4).unwrap());
    assert_eq!(is_extraspecial(&g("dihedral 8")).unwrap().map(|(p, m, _)| (p, m)), Some((2, 1)));
    assert_eq!(is_extraspecial(&g("heisenberg 3")).unwrap(), Some((3, 1, 3)));
    let c8 = g("cyclic 8");
    assert!(is_extraspecial(&c8).unwrap().is_none());
    let c4 = normal_of_order(&c8, 4, |_| true);
    assert!(!is_two_frobenius(&c8, &c4).unwrap());
}

#[test]
fn consequence_batteries_never_falsified() {
    for (name, grp) in common::fixtures() {
        for id in THEOREM_IDS {
            let v = verify(&grp, id).unwrap_or_else(|e| panic!("{name} {id}: {e}"));
            assert!(!v.falsified(), "{name} {id}: {:?}", v.outcomes);
        }
    }
}

#[test]
fn p_group_difference_classes_have_index_two() {
    for (name, grp) in common::fixtures() {
        if diffclass_core::arith::prime_power(grp.order()).is_none() || grp.order() == 1 {
            continue;
        }
        for w in difference_classes(&grp).unwrap() {
            let o = check_cor_p_groups(&grp, &w).unwrap();
            assert!(!o.falsified(), "{name}: {o}");
            if w.m.order() / w.n.order() > 1 && grp.order() > 2 {
                assert_eq!((w.p, w.m.order() / w.n.order()), (2, 2), "{name}");
            }
        }
    }
}

fn products() -> Vec<(String, PermGroup)> {
    let pairs = [
        ("dihedral 8", "cyclic 3"),
        ("symmetric 3", "cyclic 2"),
        ("symmetric 3", "symmetric 3"),
        ("generalized_quaternion 8", "cyclic 2"),
        ("alternating 4", "cyclic 2"),
        ("dihedral 10", "cyclic 3"),
        ("sl2 3", "cyclic 2"),
        ("agl1 5", "cyclic 3"),
        ("dihedral 8", "symmetric 3"),
        ("alternating 4", "symmetric 3"),
    ];
    pairs
        .iter()
        .map(|(a, b)| (format!("{a} x {b}"), direct_product(&g(a), &g(b)).unwrap()))
        .collect()
}

#[test]
fn direct_products_have_no_central_or_near_camina_witness() {
    for (name, grp) in products() {
        assert!(central_gagola(&grp).unwrap().is_none(), "{name}");
        assert!(near_camina_element(&grp).unwrap().is_none(), "{name}");
        let o = check_lemma_5_1(&grp).unwrap();
        assert!(o.applicable && o.holds, "{name}: {o}");
    }
}

#[test]
fn scan_group_examples() {
    let r = scan_group(&g("dihedral 8")).unwrap();
    assert!(r.gagola.is_some());
    assert_eq!(r.camina_center, Some(true));
    assert_eq!(r.difference_classes.len(), 4);
    assert!(r.falsified.is_empty() && r.skipped.is_empty());

    let r = scan_group(&g("alternating 5")).unwrap();
    assert!(r.gagola.is_none() && r.difference_classes.is_empty() && r.near_camina.is_empty());

    let r = scan_group(&g("cyclic 2")).unwrap();
    assert_eq!(r.difference_classes.len(), 1);
    assert_eq!((r.difference_classes[0].m_order, r.difference_classes[0].n_order), (2, 1));
}

#[test]
fn budget_exhaustion_is_reported_as_skipped() {
    let a5 = g("alternating 5");
    let small = a5.relimited(diffclass_core::Limits {
        table_order: 10,
        ..*a5.limits()
    });
    let r = scan_group(&small).unwrap();
    assert!(!r.skipped.is_empty());
    assert!(r.falsified.is_empty());
}
