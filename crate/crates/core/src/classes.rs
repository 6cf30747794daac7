//! Conjugacy classes and the class algebra.
//!
//! Classes are orbits of the conjugation action of the generators on element
//! ids. The class algebra keeps, for every pair of classes `(i, j)`, the set
//! of classes meeting the product `C_i C_j`; that support information drives
//! normal closures, joins and quotient class fusion without touching
//! elements again. Full structure constants are produced on demand.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};
use crate::perm::Permutation;

/// A conjugacy class of a materialized group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Lexicographically smallest member.
    pub representative: Permutation,
    pub rep: Elem,
    pub size: u64,
    /// Order of the elements of the class.
    pub order: u64,
    pub centralizer_order: u128,
}

#[derive(Clone, Debug)]
pub(crate) struct ClassData {
    pub classes: Vec<ConjClass>,
    pub class_of: Vec<u32>,
    pub members: Vec<Vec<Elem>>,
    /// Class of the inverses.
    pub inverse: Vec<usize>,
    pub exponent: u64,
}

impl ClassData {
    pub fn compute(g: &PermGroup) -> Result<Self> {
        let t = g.elems()?;
        let n = g.order() as usize;
        let gens = g.generator_images();
        const NONE: u32 = u32::MAX;
        let mut class_of = vec![NONE; n];
        let mut orbits: Vec<Vec<Elem>> = Vec::new();
        for start in 0..n as Elem {
            if class_of[start as usize] != NONE {
                continue;
            }
            let c = orbits.len() as u32;
            let mut orbit = vec![start];
            class_of[start as usize] = c;
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for (s, s_inv) in &gens {
                    let y = t.conj_by_images(x, s, s_inv);
                    if class_of[y as usize] == NONE {
                        class_of[y as usize] = c;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbits.push(orbit);
        }

        struct Raw {
            rep: Elem,
            order: u64,
            members: Vec<Elem>,
        }
        let mut raw: Vec<Raw> = orbits
            .into_par_iter()
            .map(|mut members| {
                let rep = members
                    .iter()
                    .copied()
                    .min_by(|&a, &b| t.cmp_images(a, b))
                    .expect("orbit is nonempty");
                let order = t.element(rep).order();
                members.sort_unstable();
                Raw { rep, order, members }
            })
            .collect();
        raw.sort_by(|a, b| {
            (a.order, a.members.len())
                .cmp(&(b.order, b.members.len()))
                .then_with(|| t.cmp_images(a.rep, b.rep))
        });
        for (c, r) in raw.iter().enumerate() {
            for &x in &r.members {
                class_of[x as usize] = c as u32;
            }
        }
        let inverse = raw
            .iter()
            .map(|r| class_of[t.inv(r.rep) as usize] as usize)
            .collect();
        let exponent = raw.iter().fold(1, |acc, r| arith::lcm(acc, r.order));
        let classes = raw
            .iter()
            .map(|r| ConjClass {
                representative: t.element(r.rep),
                rep: r.rep,
                size: r.members.len() as u64,
                order: r.order,
                centralizer_order: n as u128 / r.members.len() as u128,
            })
            .collect();
        let members = raw.into_iter().map(|r| r.members).collect();
        Ok(ClassData {
            classes,
            class_of,
            members,
            inverse,
            exponent,
        })
    }
}

/// Supports of class products: `supp(i, j) = { k : C_k ⊆ C_i C_j }`.
#[derive(Clone, Debug)]
pub(crate) struct ClassAlgebra {
    k: usize,
    supports: Vec<FixedBitSet>,
}

impl ClassAlgebra {
    pub fn compute(g: &PermGroup) -> Result<Self> {
        let t = g.elems()?;
        let cd = g.class_data()?;
        let k = cd.classes.len();
        if k > g.limits().algebra_classes {
            return Err(Error::Budget(format!(
                "{k} classes exceed the class-algebra limit {}",
                g.limits().algebra_classes
            )));
        }
        let n = g.order() as Elem;
        // pairs[c] holds the (i, j) pairs with C_c ⊆ C_i C_j
        let pairs: Vec<FixedBitSet> = (0..k)
            .into_par_iter()
            .map(|c| {
                let z = cd.classes[c].rep;
                let mut bits = FixedBitSet::with_capacity(k * k);
                for x in 0..n {
                    let y = t.mul(t.inv(x), z);
                    let i = cd.class_of[x as usize] as usize;
                    let j = cd.class_of[y as usize] as usize;
                    bits.insert(i * k + j);
                }
                bits
            })
            .collect();
        let mut supports = vec![FixedBitSet::with_capacity(k); k * k];
        for (c, bits) in pairs.iter().enumerate() {
            for ij in bits.ones() {
                supports[ij].insert(c);
            }
        }
        Ok(ClassAlgebra { k, supports })
    }

    #[inline]
    pub fn supp(&self, i: usize, j: usize) -> &FixedBitSet {
        &self.supports[i * self.k + j]
    }
}

/// Structure constants `a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = z}` for a
/// fixed `z ∈ C_k`, indexed `a[i][j][k]`.
pub fn class_mult_coefficients(g: &PermGroup) -> Result<Vec<Vec<Vec<u64>>>> {
    let k = g.num_classes()?;
    let mut out = vec![vec![vec![0; k]; k]; k];
    for j in 0..k {
        let m = class_matrix(g, j)?;
        for i in 0..k {
            for c in 0..k {
                out[i][j][c] = m[i * k + c];
            }
        }
    }
    Ok(out)
}

/// Row-major matrix `M_j[i][c] = a[i][j][c]` of multiplication by the class
/// sum of `C_j`.
pub(crate) fn class_matrix(g: &PermGroup, j: usize) -> Result<Vec<u64>> {
    let t = g.elems()?;
    let cd = g.class_data()?;
    let k = cd.classes.len();
    let mut m = vec![0u64; k * k];
    let ys = &cd.members[j];
    for c in 0..k {
        let z = cd.classes[c].rep;
        for &y in ys {
            let x = t.mul(z, t.inv(y));
            m[cd.class_of[x as usize] as usize * k + c] += 1;
        }
    }
    Ok(m)
}

/// Closure of a union of classes to the normal subgroup it generates.
pub(crate) fn close_classes(g: &PermGroup, mask: &FixedBitSet) -> Result<FixedBitSet> {
    let k = g.num_classes()?;
    let mut closed = mask.clone();
    closed.grow(k);
    closed.insert(0);
    match g.algebra() {
        Ok(alg) => {
            let mut queue: Vec<usize> = closed.ones().collect();
            while let Some(a) = queue.pop() {
                let current: Vec<usize> = closed.ones().collect();
                for b in current {
                    for c in alg.supp(a, b).ones() {
                        if !closed.contains(c) {
                            closed.insert(c);
                            queue.push(c);
                        }
                    }
                }
            }
            Ok(closed)
        }
        Err(e) if e.is_budget() => close_classes_by_chain(g, &closed),
        Err(e) => Err(e),
    }
}

/// Fallback closure: generate the subgroup from class representatives and
/// their conjugates with a stabilizer chain.
fn close_classes_by_chain(g: &PermGroup, mask: &FixedBitSet) -> Result<FixedBitSet> {
    let classes = g.conjugacy_classes()?;
    let mut gens: Vec<Permutation> = mask
        .ones()
        .filter(|&c| c != 0)
        .map(|c| classes[c].representative.clone())
        .collect();
    let sub = crate::chain::normal_closure_chain(g.degree(), &mut gens, g.generators());
    let mut out = FixedBitSet::with_capacity(classes.len());
    for (c, cl) in classes.iter().enumerate() {
        if sub.contains(&cl.representative) {
            out.insert(c);
        }
    }
    Ok(out)
}

/// Union–find partition of the classes of `G` into classes of `G/N`.
pub(crate) fn fuse(g: &PermGroup, n_mask: &FixedBitSet) -> Result<Vec<usize>> {
    let k = g.num_classes()?;
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    match g.algebra() {
        Ok(alg) => {
            for i in 0..k {
                for nc in n_mask.ones() {
                    for c in alg.supp(i, nc).ones() {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, c));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        Err(e) if e.is_budget() => {
            // x and xn for n in N land in the same quotient class
            let t = g.elems()?;
            let cd = g.class_data()?;
            for i in 0..k {
                let x = cd.classes[i].rep;
                for nc in n_mask.ones() {
                    for &y in &cd.members[nc] {
                        let c = cd.class_of[t.mul(x, y) as usize] as usize;
                        let (a, b) = (find(&mut parent, i), find(&mut parent, c));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        Err(e) => return Err(e),
    }
    Ok((0..k).map(|i| find(&mut parent, i)).collect())
}
