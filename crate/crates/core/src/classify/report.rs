//! Full per-group classification report.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::{
    check_cor_p_groups, check_hypothesis1, check_thm_standard_res, central_gagola,
    difference_classes, frobenius_kernel, gagola_witness, is_camina_pair,
    is_doubly_transitive_frobenius, is_extraspecial, near_camina_witnesses, TheoremCheckOutcome,
    Verdict,
};
use crate::arith;
use crate::error::Result;
use crate::group::PermGroup;

#[derive(Clone, Debug, Serialize)]
pub struct DifferenceSummary {
    pub m_order: u128,
    pub n_order: u128,
    pub class: usize,
    pub class_size: u64,
    pub element_order: u64,
    pub p: u64,
    pub conditions: [Verdict; 4],
}

#[derive(Clone, Debug, Serialize)]
pub struct GagolaSummary {
    pub m_order: u128,
    pub class: usize,
    pub p: u64,
    pub chi: Option<usize>,
    pub chi_degree: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub order: u128,
    pub degree: usize,
    pub num_classes: Option<usize>,
    pub center_order: Option<u128>,
    pub derived_order: Option<u128>,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub normal_subgroup_orders: Vec<u128>,
    pub difference_classes: Vec<DifferenceSummary>,
    pub gagola: Option<GagolaSummary>,
    /// Orders of the `N` with `(G, N)` a Camina pair.
    pub camina_pairs: Vec<u128>,
    pub camina_center: Option<bool>,
    pub central_gagola: Option<TheoremCheckOutcome>,
    pub near_camina: Vec<TheoremCheckOutcome>,
    pub frobenius_kernel_order: Option<u128>,
    pub doubly_transitive_frobenius: Option<(u64, u32)>,
    pub extraspecial: Option<(u64, u32, u64)>,
    pub outcomes: Vec<TheoremCheckOutcome>,
    pub skipped: Vec<String>,
    pub falsified: Vec<String>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Key-value text: a short summary, then every field in declaration
    /// order with nested lists indented.
    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        let _ = writeln!(s, "Gagola: {}", yn(self.gagola.is_some()));
        let _ = writeln!(s, "central Gagola: {}", yn(self.central_gagola.is_some()));
        let _ = writeln!(s, "near Camina: {}", yn(!self.near_camina.is_empty()));
        let _ = writeln!(s, "difference classes: {}", self.difference_classes.len());
        let value = serde_json::to_value(self).expect("report serializes");
        write_value(&mut s, &value, 0);
        s
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(x) => Some(x.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")
        )),
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        _ => None,
    }
}

fn write_value(s: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar(x) {
                    Some(t) => {
                        let _ = writeln!(s, "{pad}{k}: {t}");
                    }
                    None => {
                        let _ = writeln!(s, "{pad}{k}:");
                        write_value(s, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(t) => {
                        let _ = writeln!(s, "{pad}- {t}");
                    }
                    None => {
                        let _ = writeln!(s, "{pad}-");
                        write_value(s, x, depth + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(s, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Budget errors become a skipped marker; everything else propagates.
fn section<T>(skipped: &mut Vec<String>, name: &str, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_budget() => {
            skipped.push(format!("{name}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Runs every decider on `g` and assembles one report. Cross-path
/// disagreements abort with an error.
pub fn scan_group(g: &PermGroup) -> Result<ClassificationReport> {
    let mut skipped = Vec::new();
    let mut r = ClassificationReport {
        order: g.order(),
        degree: g.degree(),
        num_classes: None,
        center_order: None,
        derived_order: None,
        solvable: None,
        nilpotent: None,
        normal_subgroup_orders: Vec::new(),
        difference_classes: Vec::new(),
        gagola: None,
        camina_pairs: Vec::new(),
        camina_center: None,
        central_gagola: None,
        near_camina: Vec::new(),
        frobenius_kernel_order: None,
        doubly_transitive_frobenius: None,
        extraspecial: None,
        outcomes: Vec::new(),
        skipped: Vec::new(),
        falsified: Vec::new(),
    };
    r.num_classes = section(&mut skipped, "classes", g.num_classes())?;
    if r.num_classes.is_none() {
        r.skipped = skipped;
        return Ok(r);
    }
    r.center_order = section(&mut skipped, "center", g.center().map(|z| z.order()))?;
    r.derived_order = section(&mut skipped, "derived subgroup", g.derived_subgroup().map(|d| d.order()))?;
    r.solvable = section(&mut skipped, "solvability", g.is_solvable())?;
    r.nilpotent = section(&mut skipped, "nilpotency", g.is_nilpotent())?;
    let normals = section(&mut skipped, "normal subgroups", g.normal_subgroups().map(|n| n.to_vec()))?;
    let mut outcomes = Vec::new();
    if let Some(normals) = &normals {
        r.normal_subgroup_orders = normals.iter().map(|n| n.order()).collect();
        if let Some(ws) = section(&mut skipped, "difference classes", difference_classes(g))? {
            for w in &ws {
                r.difference_classes.push(DifferenceSummary {
                    m_order: w.m.order(),
                    n_order: w.n.order(),
                    class: w.class_index,
                    class_size: w.class.size,
                    element_order: w.class.order,
                    p: w.p,
                    conditions: w.checks,
                });
                outcomes.push(check_thm_standard_res(g, w)?);
                if arith::prime_power(g.order()).is_some() {
                    outcomes.push(check_cor_p_groups(g, w)?);
                }
                let h1 = check_hypothesis1(g, &w.m, &w.n, w.class_index)?;
                if h1.applicable {
                    outcomes.push(h1);
                }
            }
        }
        for n in normals {
            if n.is_trivial() || n.order() == g.order() {
                continue;
            }
            if let Some(true) = section(&mut skipped, "camina pairs", is_camina_pair(g, n))? {
                r.camina_pairs.push(n.order());
            }
        }
        let z = g.center()?;
        if !z.is_trivial() && z.order() < g.order() {
            r.camina_center = section(&mut skipped, "camina center", is_camina_pair(g, &z))?;
        }
    }
    if let Some(w) = section(&mut skipped, "gagola", gagola_witness(g))? {
        if let Some(w) = w {
            r.gagola = Some(GagolaSummary {
                m_order: w.m.order(),
                class: w.class_index,
                p: w.p,
                chi: w.chi,
                chi_degree: w
                    .chi
                    .and_then(|i| g.character_table().ok().map(|t| t.irreducibles[i].degree())),
            });
            outcomes.push(w.outcome);
        }
    }
    r.central_gagola = section(&mut skipped, "central gagola", central_gagola(g))?.flatten();
    r.near_camina = section(&mut skipped, "near camina", near_camina_witnesses(g))?.unwrap_or_default();
    if let Some(k) = section(&mut skipped, "frobenius", frobenius_kernel(g))? {
        r.frobenius_kernel_order = k.map(|k| k.order());
    }
    if let Some(d) = section(&mut skipped, "doubly transitive frobenius", is_doubly_transitive_frobenius(g))? {
        r.doubly_transitive_frobenius = d.map(|(_, p, m)| (p, m));
    }
    r.extraspecial = section(&mut skipped, "extraspecial", is_extraspecial(g))?.flatten();

    let all = outcomes.iter().chain(&r.central_gagola).chain(&r.near_camina);
    let mut falsified = Vec::new();
    for o in all {
        skipped.extend(o.skipped());
        if o.falsified() {
            falsified.extend(o.failed_clauses());
        }
    }
    r.outcomes = outcomes;
    r.skipped = skipped;
    r.falsified = falsified;
    Ok(r)
}
