//! Frobenius, Frobenius–Wielandt, 2-Frobenius and extraspecial recognition.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{image_subgroup, is_abelian_subgroup};
use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};
use crate::subgroup::Subgroup;

/// Whether `G` is Frobenius with kernel `N`: `N` proper, nontrivial and
/// normal, `gcd(|N|, |G:N|) = 1`, and `C_G(x) ≤ N` for `1 ≠ x ∈ N`.
pub fn is_frobenius(g: &PermGroup, n: &Subgroup) -> Result<bool> {
    let Some(mask) = n.class_mask() else {
        return Ok(false);
    };
    if n.is_trivial() || n.order() == g.order() {
        return Ok(false);
    }
    if arith::gcd(n.order(), g.order() / n.order()) != 1 {
        return Ok(false);
    }
    let cl = g.conjugacy_classes()?;
    for c in mask.ones().filter(|&c| c != 0) {
        if n.order() % cl[c].centralizer_order != 0 {
            return Ok(false);
        }
        if g.centralizer_ids(cl[c].rep)?.iter().any(|&y| !n.contains(y)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the subgroup `H` of `G` is Frobenius with kernel `N ≤ H`.
pub fn frobenius_in(g: &PermGroup, h: &Subgroup, n: &Subgroup) -> Result<bool> {
    if h.order() == g.order() {
        return is_frobenius(g, n);
    }
    if n.is_trivial() || n.order() >= h.order() || !n.is_subgroup_of(h) {
        return Ok(false);
    }
    if arith::gcd(n.order(), h.order() / n.order()) != 1 {
        return Ok(false);
    }
    let gens = h.generator_ids(g)?;
    for &s in &gens {
        for &x in n.elements() {
            if !n.contains(g.conj(x, s)?) {
                return Ok(false);
            }
        }
    }
    // one representative per H-orbit on N \ {1}
    let mut seen: HashSet<Elem> = HashSet::new();
    for &x in &n.elements()[1..] {
        if !seen.insert(x) {
            continue;
        }
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &s in &gens {
                let z = g.conj(y, s)?;
                if seen.insert(z) {
                    stack.push(z);
                }
            }
        }
        for &y in h.elements() {
            if !n.contains(y) && g.mul(x, y)? == g.mul(y, x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Frobenius kernel, if `G` is a Frobenius group.
pub fn frobenius_kernel(g: &PermGroup) -> Result<Option<Subgroup>> {
    for n in g.normal_subgroups()? {
        if is_frobenius(g, n)? {
            return Ok(Some(n.clone()));
        }
    }
    Ok(None)
}

/// `Some((p, m))` if `h` is elementary abelian of order `p^m`, `m ≥ 1`.
pub fn is_elementary_abelian(g: &PermGroup, h: &Subgroup) -> Result<Option<(u64, u32)>> {
    let Some((p, m)) = arith::prime_power(h.order()) else {
        return Ok(None);
    };
    for &x in h.elements() {
        if g.pow(x, p)? != 0 {
            return Ok(None);
        }
    }
    if !is_abelian_subgroup(g, h)? {
        return Ok(None);
    }
    Ok(Some((p, m)))
}

/// Kernel `N` and its order `p^m` when `G` is a Frobenius group with
/// `|G:N| = |N| - 1`.
pub fn is_doubly_transitive_frobenius(g: &PermGroup) -> Result<Option<(Subgroup, u64, u32)>> {
    let Some(n) = frobenius_kernel(g)? else {
        return Ok(None);
    };
    if g.order() / n.order() != n.order() - 1 {
        return Ok(None);
    }
    match is_elementary_abelian(g, &n)? {
        Some((p, m)) => Ok(Some((n, p, m))),
        None => Err(Error::Falsified(format!(
            "doubly transitive Frobenius kernel of order {} is not elementary abelian",
            n.order()
        ))),
    }
}

/// `Some((p, m, exponent))` if `|G| = p^(1+2m)` and `Z(G) = G'` has order
/// `p` with `G/Z(G)` elementary abelian.
pub fn is_extraspecial(g: &PermGroup) -> Result<Option<(u64, u32, u64)>> {
    let Some((p, a)) = arith::prime_power(g.order()) else {
        return Ok(None);
    };
    if a < 3 || a % 2 == 0 {
        return Ok(None);
    }
    let z = g.center()?;
    if z.order() != p as u128 {
        return Ok(None);
    }
    let d = g.derived_subgroup()?;
    if d != z {
        return Ok(None);
    }
    for cl in g.conjugacy_classes()? {
        if !z.contains(g.pow(cl.rep, p)?) {
            return Ok(None);
        }
    }
    Ok(Some((p, (a - 1) / 2, g.exponent()?)))
}

/// Outcome of the bounded Frobenius–Wielandt kernel search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FwVerdict {
    Verified { h_order: u128, l_order: u128 },
    NotFound,
}

/// Literal test of the triple `(G, H, L)`: `L ◁ H < G` and
/// `H ∩ H^x ≤ L` for `x ∉ H`. On success returns the kernel
/// `G \ ⋃_x (H \ L)^x`.
pub fn is_frobenius_wielandt_triple(
    g: &PermGroup,
    h: &Subgroup,
    l: &Subgroup,
) -> Result<Option<Subgroup>> {
    let w = g.whole()?;
    fw_triple_in(g, &w, h, l)
}

fn fw_triple_in(g: &PermGroup, m: &Subgroup, h: &Subgroup, l: &Subgroup) -> Result<Option<Subgroup>> {
    if !(l.is_subgroup_of(h) && l.order() < h.order() && h.is_subgroup_of(m) && h.order() < m.order()) {
        return Err(Error::Precondition("need L < H < G".into()));
    }
    for s in h.generator_ids(g)? {
        for &x in l.elements() {
            if !l.contains(g.conj(x, s)?) {
                return Err(Error::Precondition("L is not normal in H".into()));
            }
        }
    }
    let size = g.order() as usize;
    let mut marked = FixedBitSet::with_capacity(size);
    let mut reps = Vec::new();
    for &x in m.elements() {
        if marked.contains(x as usize) {
            continue;
        }
        reps.push(x);
        for &y in h.elements() {
            marked.insert(g.mul(y, x)? as usize);
        }
    }
    // reps[0] = 1 spans H itself
    for &x in &reps[1..] {
        for &y in h.elements() {
            let c = g.conj(y, x)?;
            if h.contains(c) && !l.contains(c) {
                return Ok(None);
            }
        }
    }
    let mut covered = FixedBitSet::with_capacity(size);
    for &x in &reps {
        for &y in h.elements() {
            if !l.contains(y) {
                covered.insert(g.conj(y, x)? as usize);
            }
        }
    }
    let kernel: Vec<Elem> = m
        .elements()
        .iter()
        .copied()
        .filter(|&x| !covered.contains(x as usize))
        .collect();
    let k = Subgroup::from_sorted_elements(g, kernel)?;
    let meet = k.intersection(g, h)?;
    let index = m.order() / h.order();
    let ok = meet.elements() == l.elements()
        && k.order() * h.order() / meet.order() == m.order()
        && arith::gcd(index, h.order() / l.order()) == 1
        && super::subgroup_closed(g, &k)?;
    if !ok {
        return Err(Error::Falsified(format!(
            "Frobenius-Wielandt kernel of order {} fails the product or coprimality conditions",
            k.order()
        )));
    }
    Ok(Some(k))
}

/// Bounded search for a Frobenius–Wielandt triple `(M, H, L)` with kernel
/// `N`. Candidate `H` are generated by one or two elements of `M` with
/// `L = H ∩ N`; exhaustion of the search reports [`FwVerdict::NotFound`].
pub fn is_frobenius_wielandt_with_kernel(g: &PermGroup, m: &Subgroup, n: &Subgroup) -> Result<FwVerdict> {
    let budget = g.limits().fw_order;
    if m.order() > budget {
        return Err(Error::Budget(format!(
            "order {} exceeds the Frobenius-Wielandt search limit {budget}",
            m.order()
        )));
    }
    if !n.is_subgroup_of(m) || n.order() >= m.order() {
        return Err(Error::Precondition("need N < M".into()));
    }
    let t = m.order() / n.order();
    let try_h = |h: &[Elem]| -> Result<Option<FwVerdict>> {
        let ho = h.len() as u128;
        if ho >= m.order() || m.order() % ho != 0 {
            return Ok(None);
        }
        let l: Vec<Elem> = h.iter().copied().filter(|&x| n.contains(x)).collect();
        let lo = l.len() as u128;
        if ho / lo != t || ho % lo != 0 || arith::gcd(n.order() / lo, t) != 1 {
            return Ok(None);
        }
        let hs = Subgroup::from_sorted_elements(g, h.to_vec())?;
        let ls = Subgroup::from_sorted_elements(g, l)?;
        Ok(match fw_triple_in(g, m, &hs, &ls)? {
            Some(k) if k.elements() == n.elements() => Some(FwVerdict::Verified {
                h_order: ho,
                l_order: lo,
            }),
            _ => None,
        })
    };
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut cyclic: Vec<(Elem, Vec<Elem>)> = Vec::new();
    for &a in m.elements() {
        if n.contains(a) {
            continue;
        }
        let h = span(g, &[a], usize::MAX)?.expect("uncapped");
        if seen.insert(h.clone()) {
            if let Some(v) = try_h(&h)? {
                return Ok(v);
            }
            cyclic.push((a, h));
        }
    }
    const PAIR_BUDGET: usize = 200_000;
    let cap = (m.order() / 2) as usize;
    let mut tries = 0;
    for (a, c) in &cyclic {
        let a = *a;
        for &b in m.elements() {
            if c.binary_search(&b).is_ok() {
                continue;
            }
            tries += 1;
            if tries > PAIR_BUDGET {
                return Ok(FwVerdict::NotFound);
            }
            let Some(h) = span(g, &[a, b], cap)? else {
                continue;
            };
            if seen.insert(h.clone()) {
                if let Some(v) = try_h(&h)? {
                    return Ok(v);
                }
            }
        }
    }
    Ok(FwVerdict::NotFound)
}

/// Sorted subgroup generated by `gens`, or `None` once it exceeds `cap`.
pub(crate) fn span(g: &PermGroup, gens: &[Elem], cap: usize) -> Result<Option<Vec<Elem>>> {
    let mut set: HashSet<Elem> = HashSet::from([0]);
    let mut out = vec![0];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &s in gens {
            let y = g.mul(x, s)?;
            if set.insert(y) {
                if out.len() == cap {
                    return Ok(None);
                }
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    Ok(Some(out))
}

/// `G` is 2-Frobenius over `K`: `G'` is Frobenius with kernel `K` and `G/K`
/// is Frobenius with kernel `G'/K`.
pub fn is_two_frobenius(g: &PermGroup, k: &Subgroup) -> Result<bool> {
    if !k.is_normal() || k.is_trivial() {
        return Ok(false);
    }
    let d = g.derived_subgroup()?;
    if !k.is_subgroup_of(&d) || k.order() == d.order() {
        return Ok(false);
    }
    if !frobenius_in(g, &d, k)? {
        return Ok(false);
    }
    let q = g.quotient(k)?;
    let dk = image_subgroup(&q, &d)?;
    is_frobenius(&q.group, &dk)
}
