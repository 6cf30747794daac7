//! Camina pairs.

use super::outcome::require_agreement;
use super::{table, TheoremCheckOutcome, Verdict};
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};
use crate::subgroup::Subgroup;

/// Largest order for the brute-force commutator condition.
const BRUTE_FORCE_ORDER: u128 = 1000;

fn require_proper(g: &PermGroup, n: &Subgroup) -> Result<()> {
    if !n.is_normal() || n.is_trivial() || n.order() == g.order() {
        return Err(Error::Precondition("need a proper nontrivial normal subgroup".into()));
    }
    Ok(())
}

/// Centralizer equality `|C_G(x)| = |C_{G/N}(xN)|` outside `N`.
fn path_centralizers(g: &PermGroup, n: &Subgroup) -> Result<bool> {
    let f = g.fusion(n)?;
    let cl = g.conjugacy_classes()?;
    let mask = n.class_mask().unwrap();
    Ok((0..cl.len())
        .filter(|&c| !mask.contains(c))
        .all(|c| cl[c].centralizer_order == f.centralizer_order(c)))
}

/// Every character over `N` vanishes outside `N`.
fn path_table(g: &PermGroup, n: &Subgroup) -> Result<Verdict> {
    let t = match table(g)? {
        Ok(t) => t,
        Err(_) => return Ok(Verdict::Skipped),
    };
    let mask = n.class_mask().unwrap();
    let (_, over) = t.irr_over(n)?;
    Ok(Verdict::from_bool(over.iter().all(|&i| {
        (0..t.num_classes())
            .filter(|&c| !mask.contains(c))
            .all(|c| t.irreducibles[i].value(c).is_zero())
    })))
}

/// Whether `(G, N)` is a Camina pair, decided by centralizer orders and,
/// when the table is available, by vanishing of `Irr(G|N)` off `N`.
pub fn is_camina_pair(g: &PermGroup, n: &Subgroup) -> Result<bool> {
    require_proper(g, n)?;
    let a = path_centralizers(g, n)?;
    let b = path_table(g, n)?;
    require_agreement("camina pair", &[("centralizers", Verdict::from_bool(a)), ("characters", b)])?;
    Ok(a)
}

/// All five equivalent Camina conditions. The commutator condition is
/// checked by brute force on small groups only.
pub fn camina_outcome(g: &PermGroup, n: &Subgroup) -> Result<TheoremCheckOutcome> {
    require_proper(g, n)?;
    let mut o = TheoremCheckOutcome::new("lem2.3");
    o.set("|N|", n.order());
    let cl = g.conjugacy_classes()?;
    let mask = n.class_mask().unwrap();
    let outside: Vec<usize> = (0..cl.len()).filter(|&c| !mask.contains(c)).collect();

    // (1) xN ⊆ x^G
    let mut v1 = true;
    for &c in &outside {
        for &z in n.elements() {
            v1 &= g.class_of(g.mul(cl[c].rep, z)?)? == c;
        }
    }
    let v2 = path_centralizers(g, n)?;
    // (3) classes outside N that fuse in G/N coincide
    let f = g.fusion(n)?;
    let v3 = outside
        .iter()
        .all(|&c| outside.iter().all(|&d| f.root[c] != f.root[d] || c == d));
    let v4 = if g.order() <= BRUTE_FORCE_ORDER {
        let mut ok = true;
        for &c in &outside {
            let x = cl[c].rep;
            let mut hit: Vec<Elem> = (0..g.order() as Elem)
                .map(|y| g.commutator(x, y))
                .collect::<Result<_>>()?;
            hit.sort_unstable();
            hit.dedup();
            ok &= n.elements().iter().all(|z| hit.binary_search(z).is_ok());
        }
        Verdict::from_bool(ok)
    } else {
        Verdict::Skipped
    };
    let v5 = path_table(g, n)?;
    let all = [
        ("(1)", Verdict::from_bool(v1)),
        ("(2)", Verdict::from_bool(v2)),
        ("(3)", Verdict::from_bool(v3)),
        ("(4)", v4),
        ("(5)", v5),
    ];
    require_agreement("lem2.3", &all)?;
    for (name, v) in all {
        o.condition(name, v);
    }
    Ok(o)
}

/// For every proper nontrivial normal `N` and irreducible `χ`: `χ` is a
/// Gagola character with `N` the unique minimal normal subgroup iff
/// `(G, N)` is a Camina pair with `Irr(G|N) = {χ}`.
pub fn lemma_2_4_outcome(g: &PermGroup) -> Result<TheoremCheckOutcome> {
    let mut o = TheoremCheckOutcome::new("lem2.4");
    let t = match table(g)? {
        Ok(t) => t,
        Err(reason) => {
            o.condition("(1) <=> (2)", Verdict::Skipped);
            o.set("skipped", reason);
            return Ok(o);
        }
    };
    let minimal = g.minimal_normal_subgroups()?;
    let gagola: Vec<bool> = t
        .irreducibles
        .iter()
        .map(|chi| !chi.is_linear() && chi.values.iter().filter(|v| !v.is_zero()).count() == 2)
        .collect();
    let mut pairs = 0;
    let mut count = 0;
    for n in g.normal_subgroups()? {
        if n.is_trivial() || n.order() == g.order() {
            continue;
        }
        let camina = is_camina_pair(g, n)?;
        let (_, over) = t.irr_over(n)?;
        for (i, &gag) in gagola.iter().enumerate() {
            let lhs = gag && minimal.len() == 1 && minimal[0] == *n;
            let rhs = camina && over == [i];
            if lhs != rhs {
                return Err(Error::disagreement(
                    "lem2.4",
                    format!("|N| = {}, chi = {i}: (1) = {lhs}, (2) = {rhs}", n.order()),
                ));
            }
            pairs += 1;
            count += lhs as usize;
        }
    }
    o.condition("(1) <=> (2)", Verdict::True);
    o.set("pairs checked", pairs);
    o.set("pairs satisfying both", count);
    Ok(o)
}
