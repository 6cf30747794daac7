mod common;

use std::collections::BTreeMap;

use diffclass_core::{make, Cyclotomic, FamilySpec, PermGroup, Rational};
use proptest::prelude::*;

fn g(spec: &str) -> PermGroup {
    make(&spec.parse().unwrap()).unwrap()
}

fn table_groups() -> Vec<(String, PermGroup)> {
    let mut v: Vec<String> = (2..=12).map(|n| format!("cyclic {n}")).collect();
    v.extend(
        [
            "symmetric 3",
            "dihedral 8",
            "generalized_quaternion 8",
            "dihedral 16",
            "generalized_quaternion 16",
            "semidihedral 16",
            "alternating 4",
            "symmetric 4",
            "alternating 5",
            "sl2 3",
            "agl1 5",
        ]
        .map(String::from),
    );
    v.into_iter().map(|s| (s.clone(), g(&s))).collect()
}

fn sum(it: impl IntoIterator<Item = Cyclotomic>) -> Cyclotomic {
    it.into_iter().fold(Cyclotomic::zero(), |a, b| &a + &b)
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

/// `<chi, psi>` computed from class sizes, without the library helper.
fn inner(g: &PermGroup, chi: &[Cyclotomic], psi: &[Cyclotomic]) -> Cyclotomic {
    let cl = g.conjugacy_classes().unwrap();
    let s = sum((0..cl.len()).map(|c| &(&int(cl[c].size as i64) * &chi[c]) * &psi[c].conjugate()));
    let inv_order = Cyclotomic::from_rational(Rational::new(1.into(), (g.order() as i64).into()));
    &s * &inv_order
}

fn assert_orthogonal(name: &str, g: &PermGroup) {
    let t = g.character_table().unwrap();
    let k = t.num_classes();
    assert_eq!(t.irreducibles.len(), k, "{name}: square table");
    let elems = common::elements(g);
    for (i, chi) in t.irreducibles.iter().enumerate() {
        for (j, psi) in t.irreducibles.iter().enumerate() {
            let want = int((i == j) as i64);
            assert_eq!(inner(g, &chi.values, &psi.values), want, "{name}: rows {i}, {j}");
        }
    }
    for c in 0..k {
        for d in 0..k {
            let s = sum(t.irreducibles.iter().map(|chi| chi.values[c].clone() * chi.values[d].conjugate()));
            let want = if c == d {
                let rep = t.classes[c].representative.images().to_vec();
                common::centralizer_order(&elems, &rep) as i64
            } else {
                0
            };
            assert_eq!(s, int(want), "{name}: columns {c}, {d}");
        }
    }
}

#[test]
fn tables_are_orthogonal_and_match_brute_force_classes() {
    for (name, g) in table_groups() {
        assert_orthogonal(&name, &g);
        let elems = common::elements(&g);
        let mut brute: Vec<(u64, u64)> = common::classes(&elems)
            .iter()
            .map(|c| (c.len() as u64, common::order_of(c.iter().next().unwrap())))
            .collect();
        brute.sort();
        let mut ours: Vec<(u64, u64)> = g.conjugacy_classes().unwrap().iter().map(|c| (c.size, c.order)).collect();
        ours.sort();
        assert_eq!(ours, brute, "{name}");
    }
}

#[test]
fn degree_multisets() {
    let cases: [(&str, &[u64]); 7] = [
        ("alternating 5", &[1, 3, 3, 4, 5]),
        ("symmetric 4", &[1, 1, 2, 3, 3]),
        ("alternating 4", &[1, 1, 1, 3]),
        ("sl2 3", &[1, 1, 1, 2, 2, 2, 3]),
        ("agl1 5", &[1, 1, 1, 1, 4]),
        ("dihedral 16", &[1, 1, 1, 1, 2, 2, 2]),
        ("generalized_quaternion 8", &[1, 1, 1, 1, 2]),
    ];
    for (spec, want) in cases {
        let mut d = g(spec).character_table().unwrap().degrees();
        d.sort();
        assert_eq!(d, want, "{spec}");
    }
}

fn rows(g: &PermGroup) -> Vec<Vec<Cyclotomic>> {
    let mut r: Vec<Vec<Cyclotomic>> = g
        .character_table()
        .unwrap()
        .irreducibles
        .iter()
        .map(|c| c.values.clone())
        .collect();
    r.sort_by_key(|v| format!("{v:?}"));
    r
}

#[test]
fn s3_table_from_sign_and_permutation_characters() {
    let s3 = g("symmetric 3");
    let cl = s3.conjugacy_classes().unwrap();
    let sign = |c: usize| {
        let cycles = cl[c].representative.cycle_type().len();
        if (3 - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let fixed = |c: usize| (0..3).filter(|&x| cl[c].representative.apply(x) == x).count() as i64;
    let mut want: Vec<Vec<Cyclotomic>> = vec![
        (0..3).map(|_| int(1)).collect(),
        (0..3).map(|c| int(sign(c))).collect(),
        (0..3).map(|c| int(fixed(c) - 1)).collect(),
    ];
    want.sort_by_key(|v| format!("{v:?}"));
    assert_eq!(rows(&s3), want);
}

#[test]
fn d8_table_from_index_two_kernels_and_regular_character() {
    let d8 = g("dihedral 8");
    let cl = d8.conjugacy_classes().unwrap();
    let elems = common::elements(&d8);
    let normals = common::normal_subgroups(d8.degree(), &elems);
    let mut linear: Vec<Vec<i64>> = vec![vec![1; cl.len()]];
    for n in normals.iter().filter(|n| n.len() == 4) {
        linear.push(
            cl.iter()
                .map(|c| if n.contains(c.representative.images()) { 1 } else { -1 })
                .collect(),
        );
    }
    assert_eq!(linear.len(), 4);
    let regular: Vec<i64> = cl.iter().map(|c| if c.representative.is_identity() { 8 } else { 0 }).collect();
    let two: Vec<i64> = (0..cl.len())
        .map(|c| (regular[c] - linear.iter().map(|l| l[c]).sum::<i64>()) / 2)
        .collect();
    let mut want: Vec<Vec<Cyclotomic>> = linear
        .into_iter()
        .chain([two])
        .map(|r| r.into_iter().map(int).collect())
        .collect();
    want.sort_by_key(|v| format!("{v:?}"));
    assert_eq!(rows(&d8), want);
}

/// `Ind_H^G psi` for `H = <x>` and `psi(x^k) = z(n)^(jk)`.
fn induced_from_cyclic(g: &PermGroup, x: &[u32], j: i64) -> Vec<Cyclotomic> {
    let elems = common::elements(g);
    let n = common::order_of(x) as usize;
    let mut powers: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut p: Vec<u32> = (0..x.len() as u32).collect();
    for k in 0..n {
        powers.insert(p.clone(), k as i64);
        p = common::mul(&p, x);
    }
    let cl = g.conjugacy_classes().unwrap();
    let inv_h = Cyclotomic::from_rational(Rational::new(1.into(), (n as i64).into()));
    cl.iter()
        .map(|c| {
            let rep = c.representative.images();
            let s = sum(elems.iter().filter_map(|y| {
                powers
                    .get(&common::conj(rep, y))
                    .map(|&k| Cyclotomic::root_of_unity(n as u64, j * k))
            }));
            &s * &inv_h
        })
        .collect()
}

#[test]
fn induced_and_tensor_characters_decompose_into_irreducibles() {
    for spec in ["symmetric 3", "dihedral 8", "alternating 4", "generalized_quaternion 8"] {
        let grp = g(spec);
        let t = grp.character_table().unwrap();
        let irr: Vec<&[Cyclotomic]> = t.irreducibles.iter().map(|c| c.values.as_slice()).collect();
        let decomposes = |theta: &[Cyclotomic], degree: i64| {
            let mut total = 0;
            for chi in &irr {
                let m = inner(&grp, theta, chi).as_i64().expect("integer multiplicity");
                assert!(m >= 0, "{spec}: negative multiplicity");
                total += m * chi[0].as_i64().unwrap();
            }
            assert_eq!(total, degree, "{spec}: degrees add up");
        };
        for x in common::elements(&grp) {
            let n = common::order_of(&x) as i64;
            for j in 0..n {
                let ind = induced_from_cyclic(&grp, &x, j);
                decomposes(&ind, grp.order() as i64 / n);
            }
        }
        for a in &irr {
            for b in &irr {
                let prod: Vec<Cyclotomic> = a.iter().zip(b.iter()).map(|(u, v)| u * v).collect();
                decomposes(&prod, a[0].as_i64().unwrap() * b[0].as_i64().unwrap());
            }
        }
    }
}

#[test]
fn power_map_agrees_with_permutation_powers() {
    for (name, grp) in table_groups() {
        let t = grp.character_table().unwrap();
        for (c, row) in t.power_map.iter().enumerate() {
            for (r, &d) in row.iter().enumerate() {
                let p = t.classes[c].representative.pow(r as u64);
                assert_eq!(grp.class_of_perm(&p).unwrap(), d, "{name}: class {c} power {r}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dihedral_tables_are_orthogonal(m in 3u64..=24) {
        let grp = make(&FamilySpec::Dihedral { order: 2 * m }).unwrap();
        let t = grp.character_table().unwrap();
        let want = if m % 2 == 0 { (m + 6) / 2 } else { (m + 3) / 2 };
        prop_assert_eq!(t.num_classes() as u64, want);
        let squares: u64 = t.degrees().iter().map(|d| d * d).sum();
        prop_assert_eq!(squares as u128, grp.order());
        for (i, chi) in t.irreducibles.iter().enumerate() {
            for (j, psi) in t.irreducibles.iter().enumerate() {
                prop_assert_eq!(inner(&grp, &chi.values, &psi.values), int((i == j) as i64));
            }
        }
    }

    #[test]
    fn cyclic_tables_are_the_roots_of_unity(n in 1u64..=30) {
        let grp = make(&FamilySpec::Cyclic { n }).unwrap();
        let t = grp.character_table().unwrap();
        prop_assert_eq!(t.num_classes() as u64, n);
        prop_assert!(t.irreducibles.iter().all(|c| c.is_linear()));
        for chi in &t.irreducibles {
            for v in &chi.values {
                let pow = (0..n).fold(Cyclotomic::one(), |a, _| &a * v);
                prop_assert_eq!(pow, Cyclotomic::one());
            }
        }
    }
}
