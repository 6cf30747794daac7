//! Permutation groups with materialized element tables.
//!
//! Elements of a group whose order fits [`Limits::materialize`] are addressed
//! by dense ids `0..|G|` (see [`crate::chain`]); id 0 is the identity. All
//! derived data (classes, class algebra, normal lattice, character table) is
//! computed on first use and cached, so a `PermGroup` can be shared freely
//! between threads.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::chain::StabChain;
use crate::chartab::CharacterTable;
use crate::classes::{ClassAlgebra, ClassData, ConjClass};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};
use crate::subgroup::Subgroup;

/// Dense element id inside a materialized group.
pub type Elem = u32;

/// Longest base a materialized group can have (every level halves the order).
const MAX_BASE: usize = 20;

/// Resource budgets. Exceeding one yields [`Error::Budget`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest order for which the element table is built.
    pub materialize: u128,
    /// Largest number of normal subgroups enumerated.
    pub lattice: usize,
    /// Largest order for which a character table is attempted.
    pub table_order: u128,
    /// Largest class count for which a character table is attempted.
    pub table_classes: usize,
    /// Largest class count for which class multiplication coefficients are stored.
    pub algebra_classes: usize,
    /// Largest subgroup order searched for Frobenius–Wielandt structure.
    pub fw_order: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            materialize: 1 << 20,
            lattice: 100_000,
            table_order: 200_000,
            table_classes: 300,
            algebra_classes: 400,
            fw_order: 5000,
        }
    }
}

/// Flat copy of the stabilizer chain plus per-element digits.
#[derive(Clone, Debug)]
pub(crate) struct ElemTable {
    degree: usize,
    base: Vec<Point>,
    strides: Vec<u32>,
    pos: Vec<Vec<u32>>,
    reps: Vec<Vec<Point>>,
    inv_reps: Vec<Vec<Point>>,
    digits: Vec<u32>,
    inverse: Vec<Elem>,
}

impl ElemTable {
    fn build(chain: &StabChain) -> Self {
        let b = chain.base_len();
        let degree = chain.degree;
        let order = chain.order as usize;
        let flat = |ps: &[Permutation]| -> Vec<Point> {
            ps.iter().flat_map(|p| p.images().iter().copied()).collect()
        };
        let mut t = ElemTable {
            degree,
            base: chain.levels.iter().map(|l| l.base).collect(),
            strides: chain.strides.iter().map(|&s| s as u32).collect(),
            pos: chain.levels.iter().map(|l| l.pos.clone()).collect(),
            reps: chain.levels.iter().map(|l| flat(&l.reps)).collect(),
            inv_reps: chain.levels.iter().map(|l| flat(&l.inv_reps)).collect(),
            digits: Vec::with_capacity(order * b),
            inverse: vec![0; order],
        };
        let lens: Vec<u32> = chain.levels.iter().map(|l| l.orbit.len() as u32).collect();
        for id in 0..order as u32 {
            for k in 0..b {
                t.digits.push((id / t.strides[k]) % lens[k]);
            }
        }
        for id in 0..order as u32 {
            let mut imgs = [0; MAX_BASE];
            for (m, &beta) in t.base.iter().enumerate() {
                imgs[m] = t.inv_point(id, beta);
            }
            t.inverse[id as usize] = t.index(&mut imgs[..b]);
        }
        t
    }

    #[inline]
    fn b(&self) -> usize {
        self.base.len()
    }

    #[inline]
    pub fn point(&self, x: Elem, mut p: Point) -> Point {
        let b = self.b();
        let d = &self.digits[x as usize * b..x as usize * b + b];
        for k in (0..b).rev() {
            p = self.reps[k][d[k] as usize * self.degree + p as usize];
        }
        p
    }

    #[inline]
    fn inv_point(&self, x: Elem, mut p: Point) -> Point {
        let b = self.b();
        let d = &self.digits[x as usize * b..x as usize * b + b];
        for k in 0..b {
            p = self.inv_reps[k][d[k] as usize * self.degree + p as usize];
        }
        p
    }

    #[inline]
    fn index(&self, imgs: &mut [Point]) -> Elem {
        let mut idx = 0;
        for k in 0..imgs.len() {
            let j = self.pos[k][imgs[k] as usize];
            idx += j * self.strides[k];
            let inv = &self.inv_reps[k][j as usize * self.degree..];
            for m in imgs.iter_mut().skip(k + 1) {
                *m = inv[*m as usize];
            }
        }
        idx
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let b = self.b();
        let mut imgs = [0; MAX_BASE];
        for (m, &beta) in self.base.iter().enumerate() {
            imgs[m] = self.point(y, self.point(x, beta));
        }
        self.index(&mut imgs[..b])
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverse[x as usize]
    }

    /// `y^-1 x y`.
    #[inline]
    pub fn conj(&self, x: Elem, y: Elem) -> Elem {
        let b = self.b();
        let mut imgs = [0; MAX_BASE];
        for (m, &beta) in self.base.iter().enumerate() {
            imgs[m] = self.point(y, self.point(x, self.inv_point(y, beta)));
        }
        self.index(&mut imgs[..b])
    }

    /// Conjugate `s^-1 x s` by a permutation given as image arrays.
    #[inline]
    pub fn conj_by_images(&self, x: Elem, s: &[Point], s_inv: &[Point]) -> Elem {
        let b = self.b();
        let mut imgs = [0; MAX_BASE];
        for (m, &beta) in self.base.iter().enumerate() {
            imgs[m] = s[self.point(x, s_inv[beta as usize]) as usize];
        }
        self.index(&mut imgs[..b])
    }

    /// Index of an element given by its image array (must be a member).
    pub fn index_of_images(&self, images: &[Point]) -> Elem {
        let b = self.b();
        let mut imgs = [0; MAX_BASE];
        for (m, &beta) in self.base.iter().enumerate() {
            imgs[m] = images[beta as usize];
        }
        self.index(&mut imgs[..b])
    }

    pub fn element(&self, x: Elem) -> Permutation {
        Permutation::from_images_unchecked((0..self.degree as Point).map(|p| self.point(x, p)).collect())
    }

    /// Lexicographic comparison of image sequences, evaluated lazily.
    pub fn cmp_images(&self, x: Elem, y: Elem) -> std::cmp::Ordering {
        for p in 0..self.degree as Point {
            let c = self.point(x, p).cmp(&self.point(y, p));
            if c.is_ne() {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// A finite permutation group on `0..degree` given by generators.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    limits: Limits,
    pub(crate) elems: OnceLock<Result<ElemTable>>,
    pub(crate) classes: OnceLock<Result<ClassData>>,
    pub(crate) algebra: OnceLock<Result<ClassAlgebra>>,
    pub(crate) normals: OnceLock<Result<Vec<Subgroup>>>,
    pub(crate) table: OnceLock<Result<CharacterTable>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_limits(degree, gens, Limits::default())
    }

    pub fn with_limits(degree: usize, gens: Vec<Permutation>, limits: Limits) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::new(degree, &gens);
        Ok(PermGroup {
            degree,
            generators: gens,
            chain,
            limits,
            elems: OnceLock::new(),
            classes: OnceLock::new(),
            algebra: OnceLock::new(),
            normals: OnceLock::new(),
            table: OnceLock::new(),
        })
    }

    /// Builds a group from raw image lists, validating each.
    pub fn from_image_lists(degree: usize, lists: Vec<Vec<Point>>) -> Result<Self> {
        let gens = lists
            .into_iter()
            .map(|l| {
                if l.len() != degree {
                    return Err(Error::DegreeMismatch {
                        expected: degree,
                        found: l.len(),
                    });
                }
                Permutation::from_images(l)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    /// Same group with different budgets; caches are dropped.
    pub fn relimited(&self, limits: Limits) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            limits,
            elems: OnceLock::new(),
            classes: OnceLock::new(),
            algebra: OnceLock::new(),
            normals: OnceLock::new(),
            table: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain.order
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn base(&self) -> Vec<Point> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    pub(crate) fn elems(&self) -> Result<&ElemTable> {
        self.elems
            .get_or_init(|| {
                if self.order() > self.limits.materialize {
                    return Err(Error::Budget(format!(
                        "group order {} exceeds the element-table limit {}",
                        self.order(),
                        self.limits.materialize
                    )));
                }
                Ok(ElemTable::build(&self.chain))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Number of elements as a `usize` (requires materialization).
    pub fn size(&self) -> Result<usize> {
        self.elems()?;
        Ok(self.order() as usize)
    }

    pub fn element(&self, x: Elem) -> Result<Permutation> {
        Ok(self.elems()?.element(x))
    }

    pub fn id_of(&self, g: &Permutation) -> Result<Elem> {
        let t = self.elems()?;
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        if !self.contains(g) {
            return Err(Error::NotAMember);
        }
        Ok(t.index_of_images(g.images()))
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.elems()?.mul(x, y))
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        Ok(self.elems()?.inv(x))
    }

    /// `y^-1 x y`.
    pub fn conj(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.elems()?.conj(x, y))
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Result<Elem> {
        let t = self.elems()?;
        Ok(t.mul(t.inv(x), t.conj(x, y)))
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Result<Elem> {
        let t = self.elems()?;
        let mut r = 0;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                r = t.mul(r, base);
            }
            base = t.mul(base, base);
            e >>= 1;
        }
        Ok(r)
    }

    pub fn elem_order(&self, x: Elem) -> Result<u64> {
        Ok(self.elems()?.element(x).order())
    }

    /// Generator ids (identity generators dropped).
    pub fn generator_ids(&self) -> Result<Vec<Elem>> {
        let t = self.elems()?;
        let mut out: Vec<Elem> = self
            .generators
            .iter()
            .map(|g| t.index_of_images(g.images()))
            .filter(|&x| x != 0)
            .collect();
        out.dedup();
        Ok(out)
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        Ok(self.class_data()?.exponent)
    }

    pub fn conjugacy_classes(&self) -> Result<&[ConjClass]> {
        Ok(&self.class_data()?.classes)
    }

    pub fn num_classes(&self) -> Result<usize> {
        Ok(self.class_data()?.classes.len())
    }

    pub fn class_of(&self, x: Elem) -> Result<usize> {
        Ok(self.class_data()?.class_of[x as usize] as usize)
    }

    /// Class index of an arbitrary permutation of the group.
    pub fn class_of_perm(&self, g: &Permutation) -> Result<usize> {
        let x = self.id_of(g)?;
        self.class_of(x)
    }

    pub fn class_members(&self, c: usize) -> Result<&[Elem]> {
        Ok(&self.class_data()?.members[c])
    }

    /// `|C_G(g)|` for a member `g`.
    pub fn centralizer_order(&self, g: &Permutation) -> Result<u128> {
        let c = self.class_of_perm(g)?;
        Ok(self.conjugacy_classes()?[c].centralizer_order)
    }

    /// Explicit centralizer `C_G(x)` as sorted ids.
    pub fn centralizer_ids(&self, x: Elem) -> Result<Vec<Elem>> {
        let t = self.elems()?;
        Ok((0..self.order() as Elem)
            .filter(|&y| t.mul(x, y) == t.mul(y, x))
            .collect())
    }

    /// Class-count signature: sorted (element order, class size) pairs.
    pub fn class_signature(&self) -> Result<Vec<(u64, u64)>> {
        let mut sig: Vec<(u64, u64)> = self
            .conjugacy_classes()?
            .iter()
            .map(|c| (c.order, c.size))
            .collect();
        sig.sort_unstable();
        Ok(sig)
    }

    pub(crate) fn class_data(&self) -> Result<&ClassData> {
        self.classes
            .get_or_init(|| ClassData::compute(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub(crate) fn algebra(&self) -> Result<&ClassAlgebra> {
        self.algebra
            .get_or_init(|| ClassAlgebra::compute(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The cached character table (see [`crate::chartab::character_table`]).
    pub fn character_table(&self) -> Result<&CharacterTable> {
        self.table
            .get_or_init(|| crate::chartab::compute_table(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Generator images as flat arrays `(s, s^-1)`.
    pub(crate) fn generator_images(&self) -> Vec<(Vec<Point>, Vec<Point>)> {
        self.generators
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| (g.images().to_vec(), g.inverse().images().to_vec()))
            .collect()
    }
}

/// Order of a permutation.
pub fn element_order(g: &Permutation) -> u64 {
    g.order()
}

/// Convenience wrapper matching the operation name used across the crate.
pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn s3() -> PermGroup {
        group_from_generators(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(s3().order(), 6);
        let d8 = group_from_generators(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(d8.order(), 8);
        let triv = group_from_generators(1, vec![]).unwrap();
        assert_eq!(triv.order(), 1);
        assert_eq!(triv.num_classes().unwrap(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            group_from_generators(3, vec![Permutation::identity(4)]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(PermGroup::from_image_lists(3, vec![vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn element_arithmetic_matches_permutations() {
        let g = s3();
        let n = g.size().unwrap() as Elem;
        let all: HashSet<Permutation> = (0..n).map(|x| g.element(x).unwrap()).collect();
        assert_eq!(all.len(), 6);
        assert!(g.element(0).unwrap().is_identity());
        for x in 0..n {
            let px = g.element(x).unwrap();
            assert_eq!(g.id_of(&px).unwrap(), x);
            assert_eq!(g.element(g.inv(x).unwrap()).unwrap(), px.inverse());
            for y in 0..n {
                let py = g.element(y).unwrap();
                assert_eq!(g.element(g.mul(x, y).unwrap()).unwrap(), px.then(&py));
                assert_eq!(g.element(g.conj(x, y).unwrap()).unwrap(), px.conjugate_by(&py));
            }
        }
    }

    #[test]
    fn budget_on_huge_groups() {
        let limits = Limits {
            materialize: 5,
            ..Limits::default()
        };
        let g = s3().relimited(limits);
        assert!(g.conjugacy_classes().unwrap_err().is_budget());
    }
}
