//! Groups whose central quotient is a doubly transitive Frobenius group.

use super::frobenius::span;
use super::{central_gagola, is_doubly_transitive_frobenius, is_extraspecial, TheoremCheckOutcome};
use crate::arith;
use crate::construct::{make, Complement, FamilySpec};
use crate::error::Result;
use crate::group::{Elem, PermGroup};
use crate::subgroup::Subgroup;

/// A complement to a normal Hall subgroup `N`: a subgroup of order
/// `|G:N|`, generated by a `|N|'`-element of largest order and one more
/// `|N|'`-element.
pub fn find_complement(g: &PermGroup, n: &Subgroup) -> Result<Option<Subgroup>> {
    let t = g.order() / n.order();
    if arith::gcd(n.order(), t) != 1 {
        return Ok(None);
    }
    if t == 1 {
        return Ok(Some(g.trivial_subgroup()?));
    }
    let cl = g.conjugacy_classes()?;
    let coprime = |o: u64| arith::gcd(o as u128, n.order()) == 1;
    let Some(first) = (0..cl.len())
        .filter(|&c| coprime(cl[c].order))
        .max_by_key(|&c| (cl[c].order, std::cmp::Reverse(c)))
    else {
        return Ok(None);
    };
    let a = cl[first].rep;
    let h = span(g, &[a], usize::MAX)?.expect("uncapped");
    if h.len() as u128 == t {
        return Ok(Some(Subgroup::from_sorted_elements(g, h)?));
    }
    for b in 0..g.order() as Elem {
        if h.binary_search(&b).is_ok() || !coprime(cl[g.class_of(b)?].order) {
            continue;
        }
        if let Some(x) = span(g, &[a, b], t as usize)? {
            if x.len() as u128 == t {
                return Ok(Some(Subgroup::from_sorted_elements(g, x)?));
            }
        }
    }
    Ok(None)
}

/// Shared premise: a character vanishing on all but one noncentral class,
/// `G/Z` doubly transitive Frobenius with kernel `N/Z`, and `|Z| = p`.
/// Returns `(N, p, m)` with `|N/Z| = p^m`.
fn premise(g: &PermGroup, o: &mut TheoremCheckOutcome) -> Result<Option<(Subgroup, u64, u32)>> {
    let w = if g.is_abelian() { None } else { central_gagola(g)? };
    let has = o.hypothesis("nonlinear character vanishing on all but one noncentral class", w.is_some());
    if let Some(w) = &w {
        for c in w.conditions.iter().chain(&w.clauses) {
            o.verdict(&format!("thm4.1 {}", c.name), c.verdict, c.note.clone());
        }
    }
    if !has {
        return Ok(None);
    }
    let z = g.center()?;
    let q = g.quotient(&z)?;
    let dt = is_doubly_transitive_frobenius(&q.group)?;
    if !o.hypothesis("G/Z(G) doubly transitive Frobenius", dt.is_some()) {
        return Ok(None);
    }
    let (nz, p, m) = dt.unwrap();
    let n_elems: Vec<Elem> = (0..g.order() as Elem).filter(|&x| nz.contains(q.image(x))).collect();
    let n = Subgroup::from_sorted_elements(g, n_elems)?;
    o.set("p", p);
    o.set("|N/Z|", format!("{p}^{m}"));
    o.set("|Z(G)|", z.order());
    if !o.hypothesis("|Z(G)| = p", z.order() == p as u128) {
        return Ok(None);
    }
    Ok(Some((n, p, m)))
}

/// `|Sp_2a(p)| = p^(a^2) ∏ (p^(2i) - 1)`.
fn symplectic_order(a: u32, p: u64) -> u128 {
    let p = p as u128;
    let mut o = p.pow(a * a);
    for i in 1..=a {
        o *= p.pow(2 * i) - 1;
    }
    o
}

/// The semidirect-product structure: `G = N ⋊ X` with either `N ≅ Q8`
/// and `G ≅ SL_2(3)`, or `N` extraspecial of exponent `p` and `X` a
/// `p'`-group centralizing `Z(N)` whose order divides `|Sp_2a(p)|`.
pub fn check_thm_6_1(g: &PermGroup) -> Result<TheoremCheckOutcome> {
    let mut o = TheoremCheckOutcome::new("thm6.1");
    let Some((n, p, _)) = premise(g, &mut o)? else {
        return Ok(o);
    };
    o.set("|N|", n.order());
    let x = find_complement(g, &n)?;
    o.check("G = N x| X", x.is_some());
    let Some(x) = x else {
        return Ok(o);
    };
    o.set("|X|", x.order());
    let ng = n.to_group(g)?;
    if p == 2 {
        let involutions = (0..ng.order() as Elem)
            .filter(|&y| ng.elem_order(y).map(|o| o == 2).unwrap_or(false))
            .count();
        o.check("(a) N = Q8", n.order() == 8 && !ng.is_abelian() && involutions == 1);
        o.check("(a) |X| = 3", x.order() == 3);
        let sl = make(&FamilySpec::Sl2 { p: 3 })?;
        o.check(
            "(a) G = SL_2(3)",
            g.order() == 24 && g.class_signature()? == sl.class_signature()?,
        );
    } else {
        let es = is_extraspecial(&ng)?;
        let a = es.map(|(_, m, _)| m).unwrap_or(0);
        o.check(
            "(b) N extraspecial of exponent p",
            matches!(es, Some((q, _, e)) if q == p && e == p),
        );
        o.check("(b) X is a p'-group", x.order() % p as u128 != 0);
        let zn: Vec<Elem> = {
            let gens = n.generator_ids(g)?;
            let mut v = Vec::new();
            for &y in n.elements() {
                let mut central = true;
                for &s in &gens {
                    central &= g.mul(y, s)? == g.mul(s, y)?;
                }
                if central {
                    v.push(y);
                }
            }
            v
        };
        let mut centralizes = true;
        for s in x.generator_ids(g)? {
            for &y in &zn {
                centralizes &= g.mul(y, s)? == g.mul(s, y)?;
            }
        }
        o.check("(b) X centralizes Z(N)", centralizes);
        o.check(
            "(b) |X| divides |Sp_2a(p)|",
            a > 0 && symplectic_order(a, p) % x.order() == 0,
        );
        o.set("a", a);
    }
    Ok(o)
}

/// With `|N/Z| = p^2`, `G` is one of the four listed groups, compared by
/// order and class signature.
pub fn check_thm_6_2(g: &PermGroup) -> Result<TheoremCheckOutcome> {
    let mut o = TheoremCheckOutcome::new("thm6.2");
    let Some((_, _, m)) = premise(g, &mut o)? else {
        return Ok(o);
    };
    if !o.hypothesis("|N/Z(G)| = p^2", m == 2) {
        return Ok(o);
    }
    let candidates = [
        ("SL_2(3)", FamilySpec::Sl2 { p: 3 }, 24u128),
        ("E_3 x| Q8", FamilySpec::EspSdp { p: 3, x: Complement::Q8 }, 216),
        ("E_5 x| SL_2(3)", FamilySpec::EspSdp { p: 5, x: Complement::Sl2_3 }, 3000),
        ("E_11 x| SL_2(5)", FamilySpec::EspSdp { p: 11, x: Complement::Sl2_5 }, 159720),
    ];
    let mut matched = None;
    for (name, spec, order) in candidates {
        if g.order() != order {
            continue;
        }
        let reference = make(&spec)?;
        if reference.class_signature()? == g.class_signature()? {
            matched = Some(name);
        }
    }
    if let Some(name) = matched {
        o.set("G", name);
    }
    o.check("G is one of SL_2(3), E_3 x| Q8, E_5 x| SL_2(3), E_11 x| SL_2(5)", matched.is_some());
    Ok(o)
}
