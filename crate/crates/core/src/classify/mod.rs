//! Deciders for difference classes, Gagola groups, Camina pairs and the
//! related vanishing conditions.
//!
//! Wherever an equivalence gives two independent routes to the same fact,
//! both are computed: a character-free route from conjugacy data and the
//! normal lattice, and a route through the character table. The two must
//! agree, and a mismatch is reported as [`Error::Disagreement`]. Table
//! routes are skipped when the table is over budget.

mod camina;
mod central;
mod census;
mod diffclass;
mod frobenius;
mod gagola;
mod outcome;
mod report;
mod sdp;
mod verify;

pub use camina::{camina_outcome, is_camina_pair, lemma_2_4_outcome};
pub use census::{census_line, scan_directory, CensusFailure, CensusLine, CensusReport};
pub use central::{
    central_gagola, check_lemma_5_1, check_thm_2quo, check_thm_2frob, direct_decomposition,
    near_camina_element, near_camina_witnesses,
};
pub use diffclass::{
    check_cor_p_groups, check_degenerate, check_hypothesis1, check_thm_standard_conj,
    check_thm_standard_res, difference_classes, DifferenceClassWitness,
};
pub use frobenius::{
    frobenius_in, frobenius_kernel, is_doubly_transitive_frobenius, is_elementary_abelian,
    is_extraspecial, is_frobenius, is_frobenius_wielandt_triple,
    is_frobenius_wielandt_with_kernel, is_two_frobenius, FwVerdict,
};
pub use gagola::{gagola_witness, GagolaWitness};
pub use outcome::{Clause, TheoremCheckOutcome, Verdict};
pub use report::{scan_group, ClassificationReport, DifferenceSummary, GagolaSummary};
pub use sdp::{check_thm_6_1, check_thm_6_2, find_complement};
pub use verify::{verify, Verification, THEOREM_IDS};


use crate::arith;
use crate::chartab::CharacterTable;
use crate::error::Result;
use crate::group::{Elem, PermGroup};
use crate::normal::Quotient;
use crate::subgroup::Subgroup;

/// The character table, or the reason it is unavailable. Only budget
/// failures turn into a reason; other errors propagate.
pub(crate) fn table(g: &PermGroup) -> Result<std::result::Result<&CharacterTable, String>> {
    match g.character_table() {
        Ok(t) => Ok(Ok(t)),
        Err(e) if e.is_budget() => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

/// Classes of `M` outside `N`, both normal.
pub(crate) fn class_difference(m: &Subgroup, n: &Subgroup) -> Result<Vec<usize>> {
    let (mm, nm) = (m.mask()?, n.mask()?);
    Ok(mm.ones().filter(|&c| !nm.contains(c)).collect())
}

/// `|C_G(x)|` by scanning every element.
pub(crate) fn explicit_centralizer_order(g: &PermGroup, x: Elem) -> Result<u128> {
    Ok(g.centralizer_ids(x)?.len() as u128)
}

/// Whether the generators of `h` commute pairwise.
pub(crate) fn is_abelian_subgroup(g: &PermGroup, h: &Subgroup) -> Result<bool> {
    let gens = h.generator_ids(g)?;
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if g.mul(a, b)? != g.mul(b, a)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Image of a subgroup in a quotient.
pub(crate) fn image_subgroup(q: &Quotient, h: &Subgroup) -> Result<Subgroup> {
    let mut v: Vec<Elem> = h.elements().iter().map(|&x| q.image(x)).collect();
    v.sort_unstable();
    v.dedup();
    Subgroup::from_sorted_elements(&q.group, v)
}

/// Normal subgroups strictly containing `k` that are minimal with that
/// property.
pub(crate) fn minimal_above(g: &PermGroup, k: &Subgroup) -> Result<Vec<Subgroup>> {
    let km = k.mask()?;
    let above: Vec<&Subgroup> = g
        .normal_subgroups()?
        .iter()
        .filter(|s| s.order() > k.order() && km.is_subset(s.class_mask().unwrap()))
        .collect();
    Ok(above
        .iter()
        .filter(|s| {
            !above
                .iter()
                .any(|o| o.order() < s.order() && o.is_subgroup_of(s))
        })
        .map(|s| (*s).clone())
        .collect())
}

/// Whether the abelian group `G/G'` is cyclic.
pub(crate) fn abelianization_cyclic(g: &PermGroup) -> Result<bool> {
    let d = g.derived_subgroup()?;
    if d.order() == g.order() {
        return Ok(true);
    }
    let q = g.quotient(&d)?;
    Ok(q.group.exponent()? as u128 == q.group.order())
}

/// Whether the element set of `k` is closed under multiplication.
pub(crate) fn subgroup_closed(g: &PermGroup, k: &Subgroup) -> Result<bool> {
    let gens = k.generator_ids(g)?;
    Ok(frobenius::span(g, &gens, k.elements().len() + 1)?.as_deref() == Some(k.elements()))
}

pub(crate) fn is_p_power(n: u128, p: u64) -> bool {
    arith::is_power_of(n, p)
}
