//! Normal structure: closures, joins, the normal lattice, series, quotients
//! and chief factors. Everything works on class masks through the class
//! algebra, so only quotients ever build new groups.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::classes::{close_classes, fuse};
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};
use crate::perm::{Permutation, Point};
use crate::subgroup::Subgroup;

/// Largest coset count for which quotients use the coset action.
pub const MAX_COSET_DEGREE: usize = 2048;

/// The image of `G` in `G/N` together with the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    /// `projection[x]` is the id in `group` of the image of element `x`.
    pub projection: Vec<Elem>,
    /// Whether the coset action (as opposed to the block action) was used.
    pub coset_action: bool,
}

impl Quotient {
    pub fn image(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }
}

/// Class-level fusion data for `G/N`, computed without building `G/N`.
#[derive(Clone, Debug)]
pub struct Fusion {
    /// Root class of each `G`-class; classes with equal roots fuse in `G/N`.
    pub root: Vec<usize>,
    /// Size of the `G/N` class containing each `G`-class.
    pub quotient_class_size: Vec<u64>,
    pub quotient_order: u128,
    pub num_classes: usize,
}

impl Fusion {
    /// `|C_{G/N}(xN)|` for `x` in class `c`.
    pub fn centralizer_order(&self, c: usize) -> u128 {
        self.quotient_order / self.quotient_class_size[c] as u128
    }
}

impl PermGroup {
    fn mask_from(&self, classes: impl IntoIterator<Item = usize>) -> Result<FixedBitSet> {
        let mut m = FixedBitSet::with_capacity(self.num_classes()?);
        for c in classes {
            m.insert(c);
        }
        Ok(m)
    }

    /// Normal subgroup that is the closure of a union of classes.
    pub fn normal_closure_of_classes(&self, classes: &[usize]) -> Result<Subgroup> {
        let mask = self.mask_from(classes.iter().copied())?;
        Subgroup::from_class_mask(self, &close_classes(self, &mask)?)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, s: &[Permutation]) -> Result<Subgroup> {
        let classes = s
            .iter()
            .map(|g| self.class_of_perm(g))
            .collect::<Result<Vec<_>>>()?;
        self.normal_closure_of_classes(&classes)
    }

    pub fn normal_closure_ids(&self, s: &[Elem]) -> Result<Subgroup> {
        let classes = s
            .iter()
            .map(|&x| self.class_of(x))
            .collect::<Result<Vec<_>>>()?;
        self.normal_closure_of_classes(&classes)
    }

    /// Product `AB` of two normal subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        let m = self.join_masks(a.mask()?, b.mask()?)?;
        Subgroup::from_class_mask(self, &m)
    }

    pub(crate) fn join_masks(&self, a: &FixedBitSet, b: &FixedBitSet) -> Result<FixedBitSet> {
        match self.algebra() {
            Ok(alg) => {
                let mut out = a.clone();
                out.union_with(b);
                for i in a.ones() {
                    for j in b.ones() {
                        out.union_with(alg.supp(i, j));
                    }
                }
                Ok(out)
            }
            Err(e) if e.is_budget() => {
                let mut u = a.clone();
                u.union_with(b);
                close_classes(self, &u)
            }
            Err(e) => Err(e),
        }
    }

    pub fn trivial_subgroup(&self) -> Result<Subgroup> {
        Subgroup::trivial(self)
    }

    pub fn whole(&self) -> Result<Subgroup> {
        Subgroup::whole(self)
    }

    /// `Z(G)`: the union of the classes of size one.
    pub fn center(&self) -> Result<Subgroup> {
        let cl = self.conjugacy_classes()?;
        let mask = self.mask_from((0..cl.len()).filter(|&c| cl[c].size == 1))?;
        Subgroup::from_class_mask(self, &mask)
    }

    /// `G'`: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Result<Subgroup> {
        let gens = self.generator_ids()?;
        self.commutator_closure(&gens)
    }

    fn commutator_closure(&self, gens: &[Elem]) -> Result<Subgroup> {
        let mut comms = vec![0];
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b)?);
            }
        }
        self.normal_closure_ids(&comms)
    }

    /// `N'` for a normal subgroup `N`; it is characteristic in `N`, hence
    /// normal in `G`.
    pub fn derived_of(&self, n: &Subgroup) -> Result<Subgroup> {
        n.mask()?;
        let gens = n.generator_ids(self)?;
        self.commutator_closure(&gens)
    }

    /// `G = G^(0) > G^(1) > ...` down to the first repeated term.
    pub fn derived_series(&self) -> Result<Vec<Subgroup>> {
        let mut series = vec![self.whole()?];
        loop {
            let next = self.derived_of(series.last().unwrap())?;
            if next.order() == series.last().unwrap().order() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().is_trivial())
    }

    /// Whether a normal subgroup is solvable.
    pub fn is_solvable_normal(&self, n: &Subgroup) -> Result<bool> {
        let mut cur = n.clone();
        loop {
            if cur.is_trivial() {
                return Ok(true);
            }
            let next = self.derived_of(&cur)?;
            if next.order() == cur.order() {
                return Ok(false);
            }
            cur = next;
        }
    }

    /// Class fusion into `G/N`.
    pub fn fusion(&self, n: &Subgroup) -> Result<Fusion> {
        let root = fuse(self, n.mask()?)?;
        let cl = self.conjugacy_classes()?;
        let mut total = vec![0u64; cl.len()];
        for (c, &r) in root.iter().enumerate() {
            total[r] += cl[c].size;
        }
        let nn = n.order() as u64;
        let quotient_class_size = root.iter().map(|&r| total[r] / nn).collect();
        let num_classes = root.iter().enumerate().filter(|&(c, &r)| c == r).count();
        Ok(Fusion {
            root,
            quotient_class_size,
            quotient_order: self.order() / n.order(),
            num_classes,
        })
    }

    /// `k(G/N)` from class fusion.
    pub fn quotient_class_count(&self, n: &Subgroup) -> Result<usize> {
        Ok(self.fusion(n)?.num_classes)
    }

    /// `Z_1 ≤ Z_2 ≤ ...` until it stabilizes; `Z_0 = 1` is not included.
    pub fn upper_central_series(&self) -> Result<Vec<Subgroup>> {
        let mut series: Vec<Subgroup> = Vec::new();
        let mut prev = self.trivial_subgroup()?;
        loop {
            let f = self.fusion(&prev)?;
            let mask = self.mask_from((0..f.root.len()).filter(|&c| f.quotient_class_size[c] == 1))?;
            let next = Subgroup::from_class_mask(self, &mask)?;
            if next.order() == prev.order() {
                return Ok(series);
            }
            series.push(next.clone());
            prev = next;
        }
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(match self.upper_central_series()?.last() {
            Some(z) => z.order() == self.order(),
            None => self.order() == 1,
        })
    }

    /// Every normal subgroup, sorted by order then element set.
    pub fn normal_subgroups(&self) -> Result<&[Subgroup]> {
        self.normals
            .get_or_init(|| self.compute_normal_subgroups())
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn compute_normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let k = self.num_classes()?;
        let budget = self.limits().lattice;
        let closures: Vec<FixedBitSet> = (0..k)
            .map(|c| close_classes(self, &self.mask_from([c])?))
            .collect::<Result<_>>()?;
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let trivial = self.mask_from([0])?;
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(a) = queue.pop() {
            for (c, cc) in closures.iter().enumerate() {
                if a.contains(c) {
                    continue;
                }
                let j = self.join_masks(&a, cc)?;
                if !seen.contains(&j) {
                    if seen.len() >= budget {
                        return Err(Error::Budget(format!(
                            "more than {budget} normal subgroups"
                        )));
                    }
                    seen.insert(j.clone());
                    queue.push(j);
                }
            }
        }
        let mut out = seen
            .into_iter()
            .map(|m| Subgroup::from_class_mask(self, &m))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        Ok(out)
    }

    /// Minimal normal subgroups: the minimal closures of single classes.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let k = self.num_classes()?;
        let mut closures: Vec<FixedBitSet> = Vec::new();
        for c in 1..k {
            let m = close_classes(self, &self.mask_from([c])?)?;
            if !closures.contains(&m) {
                closures.push(m);
            }
        }
        let minimal: Vec<&FixedBitSet> = closures
            .iter()
            .filter(|m| {
                !closures
                    .iter()
                    .any(|o| o != *m && o.is_subset(m))
            })
            .collect();
        let mut out = minimal
            .into_iter()
            .map(|m| Subgroup::from_class_mask(self, m))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        Ok(out)
    }

    /// True iff no normal subgroup lies strictly between `N` and `M`.
    pub fn is_chief_factor(&self, m: &Subgroup, n: &Subgroup) -> Result<bool> {
        let (mm, nm) = (m.mask()?, n.mask()?);
        if !nm.is_subset(mm) {
            return Err(Error::Precondition("N is not contained in M".into()));
        }
        if mm == nm {
            return Ok(false);
        }
        for c in mm.ones().filter(|&c| !nm.contains(c)) {
            let closure = close_classes(self, &self.mask_from([c])?)?;
            if &self.join_masks(nm, &closure)? != mm {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Normal subgroup of order `|G|_{p'}`, if one exists. It is the set of
    /// `p'`-elements whenever it exists.
    pub fn normal_p_complement(&self, p: u64) -> Result<Option<Subgroup>> {
        let w = self.whole()?;
        self.normal_p_complement_in(&w, p)
    }

    /// Normal `p`-complement of a normal subgroup `M`. Such a complement is
    /// characteristic in `M`, so it is a union of `G`-classes.
    pub fn normal_p_complement_in(&self, m: &Subgroup, p: u64) -> Result<Option<Subgroup>> {
        let cl = self.conjugacy_classes()?;
        let target = arith::p_part(m.order(), p).1;
        let mask = self.mask_from(
            m.mask()?
                .ones()
                .filter(|&c| cl[c].order % p != 0),
        )?;
        let size: u128 = mask.ones().map(|c| cl[c].size as u128).sum();
        if size != target {
            return Ok(None);
        }
        let closed = close_classes(self, &mask)?;
        if closed != mask {
            return Ok(None);
        }
        Ok(Some(Subgroup::from_class_mask(self, &mask)?))
    }

    pub fn has_normal_p_complement(&self, p: u64) -> Result<bool> {
        Ok(self.normal_p_complement(p)?.is_some())
    }

    /// `G/N` as a permutation group with the projection map.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        n.mask()?;
        let size = self.size()?;
        let index = size / n.order() as usize;
        // right cosets Nx, numbered in order of their smallest element
        let mut coset_of = vec![u32::MAX; size];
        let mut reps: Vec<Elem> = Vec::with_capacity(index);
        for x in 0..size as Elem {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &y in n.elements() {
                coset_of[self.mul(y, x)? as usize] = id;
            }
        }
        let gen_ids = self.generator_ids()?;
        let (group, images_of_reps, coset_action) = if index <= MAX_COSET_DEGREE {
            let act = |x: Elem| -> Result<Vec<Point>> {
                reps.iter()
                    .map(|&r| Ok(coset_of[self.mul(r, x)? as usize]))
                    .collect()
            };
            let gens = gen_ids
                .iter()
                .map(|&s| Permutation::from_images(act(s)?))
                .collect::<Result<Vec<_>>>()?;
            let q = PermGroup::with_limits(index.max(1), gens, *self.limits())?;
            let imgs = reps.iter().map(|&r| act(r)).collect::<Result<Vec<_>>>()?;
            (q, imgs, true)
        } else {
            let (q, imgs) = self.block_quotient(n, &reps)?;
            (q, imgs, false)
        };
        if group.order() as usize != index {
            return Err(Error::Internal(format!(
                "quotient has order {} instead of {index}",
                group.order()
            )));
        }
        let t = group.elems()?;
        let rep_image: Vec<Elem> = images_of_reps
            .iter()
            .map(|im| t.index_of_images(im))
            .collect();
        let projection = coset_of.iter().map(|&c| rep_image[c as usize]).collect();
        Ok(Quotient {
            group,
            projection,
            coset_action,
        })
    }

    /// Action on the orbits of `N`, which form a block system. Used when the
    /// coset action would be too large; requires the action to be faithful
    /// on `G/N`.
    fn block_quotient(&self, n: &Subgroup, reps: &[Elem]) -> Result<(PermGroup, Vec<Vec<Point>>)> {
        let deg = self.degree();
        let ngens = n.generators(self)?;
        let mut block = vec![u32::MAX; deg];
        let mut count = 0u32;
        for start in 0..deg {
            if block[start] != u32::MAX {
                continue;
            }
            block[start] = count;
            let mut stack = vec![start as Point];
            while let Some(p) = stack.pop() {
                for s in &ngens {
                    let q = s.apply(p);
                    if block[q as usize] == u32::MAX {
                        block[q as usize] = count;
                        stack.push(q);
                    }
                }
            }
            count += 1;
        }
        let mut first = vec![0 as Point; count as usize];
        for p in (0..deg).rev() {
            first[block[p] as usize] = p as Point;
        }
        let act = |g: &Permutation| -> Vec<Point> {
            first.iter().map(|&p| block[g.apply(p) as usize]).collect()
        };
        let gens = self
            .generators()
            .iter()
            .map(|g| Permutation::from_images(act(g)))
            .collect::<Result<Vec<_>>>()?;
        let q = PermGroup::with_limits(count as usize, gens, *self.limits())?;
        if q.order() != self.order() / n.order() {
            return Err(Error::Budget(format!(
                "index {} exceeds the coset-action limit and the block action is not faithful",
                self.order() / n.order()
            )));
        }
        let imgs = reps
            .iter()
            .map(|&r| Ok(act(&self.element(r)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok((q, imgs))
    }
}

/// Free-function forms of the structural queries.
pub fn center(g: &PermGroup) -> Result<Subgroup> {
    g.center()
}

pub fn derived_subgroup(g: &PermGroup) -> Result<Subgroup> {
    g.derived_subgroup()
}

pub fn derived_series(g: &PermGroup) -> Result<Vec<Subgroup>> {
    g.derived_series()
}

pub fn upper_central_series(g: &PermGroup) -> Result<Vec<Subgroup>> {
    g.upper_central_series()
}

pub fn normal_closure(g: &PermGroup, s: &[Permutation]) -> Result<Subgroup> {
    g.normal_closure(s)
}

pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<Subgroup>> {
    Ok(g.normal_subgroups()?.to_vec())
}

pub fn quotient(g: &PermGroup, n: &Subgroup) -> Result<Quotient> {
    g.quotient(n)
}

pub fn is_chief_factor(g: &PermGroup, m: &Subgroup, n: &Subgroup) -> Result<bool> {
    g.is_chief_factor(m, n)
}

pub fn has_normal_p_complement(m: &PermGroup, p: u64) -> Result<bool> {
    m.has_normal_p_complement(p)
}

pub fn group_exponent(g: &PermGroup) -> Result<u64> {
    g.exponent()
}
