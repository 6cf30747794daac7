//! Gagola groups: a nonlinear irreducible character vanishing on all but
//! two classes.

use super::outcome::require_agreement;
use super::{is_camina_pair, is_elementary_abelian, table, TheoremCheckOutcome, Verdict};
use crate::error::{Error, Result};
use crate::group::{Elem, PermGroup};
use crate::subgroup::Subgroup;

#[derive(Clone, Debug)]
pub struct GagolaWitness {
    /// The unique minimal normal subgroup.
    pub m: Subgroup,
    /// Row of the Gagola character; `None` when the table is over budget.
    pub chi: Option<usize>,
    /// The class `M \ {1}`.
    pub class_index: usize,
    pub g: Elem,
    pub p: u64,
    /// The structural consequences and the Camina-pair characterization.
    pub outcome: TheoremCheckOutcome,
}

/// Character-free route: a minimal normal `M` with `M \ {1}` one class and
/// `k(G) - k(G/M) = 1`.
fn path_classes(g: &PermGroup) -> Result<Option<(Subgroup, usize)>> {
    let k = g.num_classes()?;
    for m in g.minimal_normal_subgroups()? {
        let classes: Vec<usize> = m.class_mask().unwrap().ones().collect();
        if classes.len() != 2 {
            continue;
        }
        if k - g.quotient_class_count(&m)? == 1 {
            return Ok(Some((m, classes[1])));
        }
    }
    Ok(None)
}

/// Table route: a nonlinear row nonzero on exactly two classes.
fn path_table(g: &PermGroup) -> Result<std::result::Result<Option<usize>, String>> {
    Ok(match table(g)? {
        Ok(t) => Ok((0..t.irreducibles.len()).find(|&i| {
            let chi = &t.irreducibles[i];
            !chi.is_linear() && chi.values.iter().filter(|v| !v.is_zero()).count() == 2
        })),
        Err(reason) => Err(reason),
    })
}

/// Finds a Gagola character by both routes, requires them to agree, and
/// verifies the structural consequences on success.
pub fn gagola_witness(g: &PermGroup) -> Result<Option<GagolaWitness>> {
    if g.order() <= 2 {
        return Ok(None);
    }
    let a = path_classes(g)?;
    let b = path_table(g)?;
    if let Ok(b) = &b {
        require_agreement(
            "gagola",
            &[
                ("classes", Verdict::from_bool(a.is_some())),
                ("characters", Verdict::from_bool(b.is_some())),
            ],
        )?;
    }
    let Some((m, c)) = a else {
        return Ok(None);
    };
    let mut o = TheoremCheckOutcome::new("thm2.2");
    let cl = g.conjugacy_classes()?;
    o.set("|M|", m.order());
    o.set("class", c);

    let minimal = g.minimal_normal_subgroups()?;
    o.check("(c) unique minimal normal subgroup", minimal.len() == 1 && minimal[0] == m);
    let ea = is_elementary_abelian(g, &m)?;
    o.check("(d) M elementary abelian", ea.is_some());
    let p = ea.map(|(p, _)| p).unwrap_or(0);
    o.set("p", p);
    o.check(
        "(f) M \\ {1} is one class",
        g.class_members(c)?.len() as u128 == m.order() - 1,
    );
    o.check("(G, M) Camina pair", is_camina_pair(g, &m)?);

    let chi = match (table(g)?, b) {
        (Ok(t), Ok(Some(i))) => {
            let row = &t.irreducibles[i];
            let nonzero: Vec<usize> = (0..cl.len()).filter(|&k| !row.value(k).is_zero()).collect();
            if nonzero != [0, c] {
                return Err(Error::disagreement(
                    "gagola",
                    format!("character {i} is nonzero on classes {nonzero:?}, expected [0, {c}]"),
                ));
            }
            let count = t
                .irreducibles
                .iter()
                .filter(|r| r.values.iter().filter(|v| !v.is_zero()).count() == 2 && !r.is_linear())
                .count();
            o.check("(a) chi is the unique such character", count == 1);
            let faithful: Vec<usize> = (0..t.irreducibles.len()).filter(|&j| t.is_faithful(j)).collect();
            o.check("(b) chi is the unique faithful character", faithful == [i]);
            o.check("(e) chi vanishes off M and not on M", m.class_mask().unwrap().ones().eq(nonzero.iter().copied()));
            let (_, over) = t.irr_over(&m)?;
            o.check("Irr(G|M) = {chi}", over == [i]);
            o.set("chi", i);
            o.set("chi(1)", row.degree());
            Some(i)
        }
        (_, Err(reason)) | (Err(reason), _) => {
            for name in ["(a)", "(b)", "(e)", "Irr(G|M) = {chi}"] {
                o.skip(name, reason.clone());
            }
            None
        }
        (Ok(_), Ok(None)) => unreachable!("paths agreed"),
    };
    Ok(Some(GagolaWitness {
        m,
        chi,
        class_index: c,
        g: cl[c].rep,
        p,
        outcome: o,
    }))
}
