//! Brute-force oracles working on explicit permutation sets, independent
//! of the stabilizer chain, class and lattice code under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::path::PathBuf;

use diffclass_core::{pgrp, PermGroup, Permutation, Point};

pub type Set = BTreeSet<Vec<Point>>;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// All fixture groups, sorted by file name.
pub fn fixtures() -> Vec<(String, PermGroup)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "pgrp"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, pgrp::read(&p).unwrap())
        })
        .collect()
}

pub fn fixture(name: &str) -> PermGroup {
    pgrp::read(&fixture_dir().join(format!("{name}.pgrp"))).unwrap()
}

fn perm(images: &[Point]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

/// Closure of `gens` under composition, by breadth-first search.
pub fn closure(degree: usize, gens: &[Vec<Point>]) -> Set {
    let id: Vec<Point> = (0..degree as Point).collect();
    let mut seen: HashSet<Vec<Point>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y: Vec<Point> = x.iter().map(|&p| s[p as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn elements(g: &PermGroup) -> Vec<Vec<Point>> {
    let gens: Vec<Vec<Point>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
    closure(g.degree(), &gens).into_iter().collect()
}

pub fn mul(x: &[Point], y: &[Point]) -> Vec<Point> {
    x.iter().map(|&p| y[p as usize]).collect()
}

pub fn inv(x: &[Point]) -> Vec<Point> {
    let mut r = vec![0; x.len()];
    for (i, &p) in x.iter().enumerate() {
        r[p as usize] = i as Point;
    }
    r
}

/// `y^-1 x y`.
pub fn conj(x: &[Point], y: &[Point]) -> Vec<Point> {
    mul(&mul(&inv(y), x), y)
}

pub fn order_of(x: &[Point]) -> u64 {
    perm(x).order()
}

pub fn class_of(elems: &[Vec<Point>], x: &[Point]) -> Set {
    elems.iter().map(|y| conj(x, y)).collect()
}

/// Conjugacy classes as sets, in no particular order.
pub fn classes(elems: &[Vec<Point>]) -> Vec<Set> {
    let mut seen: HashSet<Vec<Point>> = HashSet::new();
    let mut out = Vec::new();
    for x in elems {
        if seen.contains(x) {
            continue;
        }
        let c = class_of(elems, x);
        seen.extend(c.iter().cloned());
        out.push(c);
    }
    out
}

pub fn centralizer_order(elems: &[Vec<Point>], x: &[Point]) -> usize {
    elems.iter().filter(|y| mul(x, y) == mul(y, x)).count()
}

pub fn center(elems: &[Vec<Point>]) -> Set {
    elems
        .iter()
        .filter(|x| centralizer_order(elems, x) == elems.len())
        .cloned()
        .collect()
}

pub fn derived(degree: usize, elems: &[Vec<Point>]) -> Set {
    let mut comms: BTreeSet<Vec<Point>> = BTreeSet::new();
    for x in elems {
        for y in elems {
            comms.insert(mul(&mul(&inv(x), &inv(y)), &mul(x, y)));
        }
    }
    closure(degree, &comms.into_iter().collect::<Vec<_>>())
}

/// Every normal subgroup: joins of normal closures of single classes.
pub fn normal_subgroups(degree: usize, elems: &[Vec<Point>]) -> BTreeSet<Set> {
    let cls = classes(elems);
    let atoms: Vec<Set> = cls
        .iter()
        .map(|c| closure(degree, &c.iter().cloned().collect::<Vec<_>>()))
        .collect();
    let mut all: BTreeSet<Set> = atoms.iter().cloned().collect();
    loop {
        let mut new = Vec::new();
        for a in &all {
            for b in &atoms {
                if b.is_subset(a) {
                    continue;
                }
                let gens: Vec<Vec<Point>> = a.union(b).cloned().collect();
                let j = closure(degree, &gens);
                if !all.contains(&j) {
                    new.push(j);
                }
            }
        }
        if new.is_empty() {
            return all;
        }
        all.extend(new);
    }
}

/// The element set of a library subgroup, as permutations.
pub fn subgroup_set(g: &PermGroup, s: &diffclass_core::Subgroup) -> Set {
    s.elements()
        .iter()
        .map(|&x| g.element(x).unwrap().images().to_vec())
        .collect()
}

/// Number of conjugacy classes of `G/N`, counted as orbits of `G` on the
/// cosets of `N` under conjugation.
pub fn quotient_class_count(elems: &[Vec<Point>], n: &Set) -> usize {
    let coset = |x: &[Point]| -> Set { n.iter().map(|y| mul(y, x)).collect() };
    let mut seen: HashSet<Vec<Point>> = HashSet::new();
    let mut count = 0;
    for x in elems {
        if seen.contains(x) {
            continue;
        }
        count += 1;
        for y in elems {
            seen.extend(coset(&conj(x, y)));
        }
    }
    count
}
