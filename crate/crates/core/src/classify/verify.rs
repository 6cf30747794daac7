//! Dispatch of a single theorem check by identifier.

use serde::Serialize;

use super::{
    camina_outcome, central_gagola, check_cor_p_groups, check_degenerate, check_hypothesis1,
    check_lemma_5_1, check_thm_2frob, check_thm_2quo, check_thm_6_1, check_thm_6_2,
    check_thm_standard_conj, check_thm_standard_res, class_difference, difference_classes,
    gagola_witness, lemma_2_4_outcome, near_camina_witnesses, TheoremCheckOutcome,
};
use crate::arith;
use crate::error::{Error, Result};
use crate::group::PermGroup;

pub const THEOREM_IDS: [&str; 14] = [
    "thm3.2", "thm3.4", "cor3.5", "prop3.10", "thm3.11", "thm4.1", "thm4.2", "thm4.7", "thm4.8",
    "thm6.1", "thm6.2", "lem2.3", "lem2.4", "lem5.1",
];

/// Outcomes of one theorem on one group.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub theorem: String,
    /// Number of inputs the theorem was evaluated on.
    pub evaluated: usize,
    pub outcomes: Vec<TheoremCheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verification {
    pub fn falsified(&self) -> bool {
        self.outcomes.iter().any(|o| o.falsified())
    }

    pub fn skipped(&self) -> Vec<String> {
        self.outcomes.iter().flat_map(|o| o.skipped()).collect()
    }
}

/// Evaluates theorem `id` on every admissible input inside `g`.
pub fn verify(g: &PermGroup, id: &str) -> Result<Verification> {
    let mut outcomes = Vec::new();
    let mut evaluated = 0;
    let mut note = None;
    match id {
        "thm3.2" => {
            let normals = g.normal_subgroups()?;
            for m in normals {
                for n in normals {
                    if n.order() >= m.order() || !n.is_subgroup_of(m) {
                        continue;
                    }
                    for c in class_difference(m, n)? {
                        let o = check_thm_standard_conj(g, m, n, c)?;
                        evaluated += 1;
                        if o.holds {
                            outcomes.push(o);
                        }
                    }
                }
            }
        }
        "thm3.4" | "cor3.5" | "thm3.11" => {
            for w in difference_classes(g)? {
                evaluated += 1;
                let o = match id {
                    "thm3.4" => check_thm_standard_res(g, &w)?,
                    "cor3.5" => {
                        if arith::prime_power(g.order()).is_none() {
                            note = Some("G is not a p-group".into());
                            break;
                        }
                        check_cor_p_groups(g, &w)?
                    }
                    _ => check_hypothesis1(g, &w.m, &w.n, w.class_index)?,
                };
                outcomes.push(o);
            }
        }
        "prop3.10" => {
            for n in g.normal_subgroups()? {
                if n.order() * 2 == g.order() {
                    evaluated += 1;
                    outcomes.push(check_degenerate(g, n)?);
                }
            }
        }
        "thm4.1" => {
            evaluated = 1;
            outcomes.extend(central_gagola(g)?);
        }
        "thm4.2" => {
            evaluated = 1;
            outcomes = near_camina_witnesses(g)?;
        }
        "thm4.7" => {
            evaluated = 1;
            outcomes.push(check_thm_2quo(g)?);
        }
        "thm4.8" => {
            evaluated = 1;
            outcomes.push(check_thm_2frob(g)?);
        }
        "thm6.1" => {
            evaluated = 1;
            outcomes.push(check_thm_6_1(g)?);
        }
        "thm6.2" => {
            evaluated = 1;
            outcomes.push(check_thm_6_2(g)?);
        }
        "lem2.3" => {
            for n in g.normal_subgroups()? {
                if !n.is_trivial() && n.order() < g.order() {
                    evaluated += 1;
                    outcomes.push(camina_outcome(g, n)?);
                }
            }
        }
        "lem2.4" => {
            evaluated = 1;
            if let Some(w) = gagola_witness(g)? {
                outcomes.push(w.outcome);
            }
            outcomes.push(lemma_2_4_outcome(g)?);
        }
        "lem5.1" => {
            evaluated = 1;
            outcomes.push(check_lemma_5_1(g)?);
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown theorem id {other:?}; expected one of {}",
                THEOREM_IDS.join(", ")
            )))
        }
    }
    if outcomes.iter().all(|o| !o.applicable) && note.is_none() {
        note = Some("no witness".into());
    }
    Ok(Verification {
        theorem: id.to_string(),
        evaluated,
        outcomes,
        note,
    })
}
