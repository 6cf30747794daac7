//! Subgroups of a materialized host group.
//!
//! A [`Subgroup`] stores its sorted element ids. Normal subgroups also carry
//! the mask of host classes they are the union of. Subgroups do not borrow
//! their host; operations that need it take the host as an argument.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<Elem>,
    classes: Option<FixedBitSet>,
}

impl Subgroup {
    pub fn trivial(host: &PermGroup) -> Result<Self> {
        Self::from_class_mask(host, &Self::mask_of(host, &[0])?)
    }

    pub fn whole(host: &PermGroup) -> Result<Self> {
        let k = host.num_classes()?;
        let mut mask = FixedBitSet::with_capacity(k);
        mask.insert_range(..);
        Self::from_class_mask(host, &mask)
    }

    fn mask_of(host: &PermGroup, classes: &[usize]) -> Result<FixedBitSet> {
        let mut m = FixedBitSet::with_capacity(host.num_classes()?);
        for &c in classes {
            m.insert(c);
        }
        Ok(m)
    }

    /// Normal subgroup that is the union of the classes in `mask`. The mask
    /// must already be closed.
    pub(crate) fn from_class_mask(host: &PermGroup, mask: &FixedBitSet) -> Result<Self> {
        let mut elements = Vec::new();
        for c in mask.ones() {
            elements.extend_from_slice(host.class_members(c)?);
        }
        elements.sort_unstable();
        Ok(Subgroup {
            elements,
            classes: Some(mask.clone()),
        })
    }

    /// Subgroup from a sorted, closed element list; normality is detected.
    pub(crate) fn from_sorted_elements(host: &PermGroup, elements: Vec<Elem>) -> Result<Self> {
        let k = host.num_classes()?;
        let mut mask = FixedBitSet::with_capacity(k);
        let mut count = 0u64;
        let mut seen = FixedBitSet::with_capacity(k);
        for &x in &elements {
            let c = host.class_of(x)?;
            if !seen.contains(c) {
                seen.insert(c);
                count += host.conjugacy_classes()?[c].size;
                mask.insert(c);
            }
        }
        let classes = (count == elements.len() as u64).then_some(mask);
        Ok(Subgroup { elements, classes })
    }

    /// Subgroup generated by the given element ids.
    pub fn generated_by(host: &PermGroup, gens: &[Elem]) -> Result<Self> {
        let elements = generate(host, gens, &[0])?;
        Self::from_sorted_elements(host, elements)
    }

    /// Subgroup generated by permutations of the host.
    pub fn generated_by_perms(host: &PermGroup, gens: &[Permutation]) -> Result<Self> {
        let ids = gens.iter().map(|g| host.id_of(g)).collect::<Result<Vec<_>>>()?;
        Self::generated_by(host, &ids)
    }

    pub fn order(&self) -> u128 {
        self.elements.len() as u128
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.classes.is_some()
    }

    /// Host classes contained in this subgroup (normal subgroups only).
    pub fn class_mask(&self) -> Option<&FixedBitSet> {
        self.classes.as_ref()
    }

    pub(crate) fn mask(&self) -> Result<&FixedBitSet> {
        self.classes
            .as_ref()
            .ok_or_else(|| Error::Precondition("subgroup is not normal in its host".into()))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        match (&self.classes, &other.classes) {
            (Some(a), Some(b)) => a.is_subset(b),
            _ => self.elements.iter().all(|&x| other.contains(x)),
        }
    }

    /// Intersection with another subgroup of the same host.
    pub fn intersection(&self, host: &PermGroup, other: &Subgroup) -> Result<Subgroup> {
        let elements: Vec<Elem> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_sorted_elements(host, elements)
    }

    /// Small generating set: each generator is the first element not in the
    /// span of the previous ones.
    pub fn generator_ids(&self, host: &PermGroup) -> Result<Vec<Elem>> {
        let n = host.order() as usize;
        let mut span = FixedBitSet::with_capacity(n);
        span.insert(0);
        let mut current = vec![0];
        let mut gens = Vec::new();
        for &x in &self.elements {
            if span.contains(x as usize) {
                continue;
            }
            gens.push(x);
            current = extend(host, &gens, current, &mut span)?;
            if current.len() == self.elements.len() {
                break;
            }
        }
        Ok(gens)
    }

    pub fn generators(&self, host: &PermGroup) -> Result<Vec<Permutation>> {
        self.generator_ids(host)?
            .into_iter()
            .map(|x| host.element(x))
            .collect()
    }

    /// Standalone permutation group on the host's points.
    pub fn to_group(&self, host: &PermGroup) -> Result<PermGroup> {
        PermGroup::with_limits(host.degree(), self.generators(host)?, *host.limits())
    }

    pub fn permutations(&self, host: &PermGroup) -> Result<Vec<Permutation>> {
        self.elements.iter().map(|&x| host.element(x)).collect()
    }
}

/// Closure of `start` under right multiplication by `gens`, sorted.
pub(crate) fn generate(host: &PermGroup, gens: &[Elem], start: &[Elem]) -> Result<Vec<Elem>> {
    let n = host.order() as usize;
    let mut span = FixedBitSet::with_capacity(n);
    for &x in start {
        span.insert(x as usize);
    }
    let mut out = extend(host, gens, start.to_vec(), &mut span)?;
    out.sort_unstable();
    Ok(out)
}

fn extend(
    host: &PermGroup,
    gens: &[Elem],
    mut elems: Vec<Elem>,
    span: &mut FixedBitSet,
) -> Result<Vec<Elem>> {
    let mut i = 0;
    while i < elems.len() {
        let h = elems[i];
        for &s in gens {
            let y = host.mul(h, s)?;
            if !span.contains(y as usize) {
                span.insert(y as usize);
                elems.push(y);
            }
        }
        i += 1;
    }
    Ok(elems)
}
