//! Light-weight census over a directory of `.pgrp` files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::{central_gagola, gagola_witness, is_camina_pair};
use crate::error::Result;
use crate::group::PermGroup;
use crate::pgrp;

/// One group of a census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusLine {
    pub file: String,
    pub order: u128,
    pub gagola: bool,
    /// `None` when `Z(G)` is trivial or the whole group.
    pub camina_center: Option<bool>,
    pub central_gagola: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusReport {
    pub lines: Vec<CensusLine>,
    /// Files that could not be read or parsed, with the reason.
    pub unreadable: Vec<(String, String)>,
    /// Files whose analysis failed.
    pub failed: Vec<CensusFailure>,
    pub gagola_by_order: BTreeMap<u128, usize>,
    pub camina_center_count: usize,
    pub central_gagola_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusFailure {
    pub file: String,
    pub message: String,
    /// True when only a budget was exceeded; otherwise a checker found a
    /// disagreement or falsified clause.
    pub budget: bool,
}

/// The three census facts for one group.
pub fn census_line(file: &str, g: &PermGroup) -> Result<CensusLine> {
    let gagola = gagola_witness(g)?.is_some();
    let z = g.center()?;
    let camina_center = if z.is_trivial() || z.order() == g.order() {
        None
    } else {
        Some(is_camina_pair(g, &z)?)
    };
    let central = central_gagola(g)?.is_some();
    Ok(CensusLine {
        file: file.to_string(),
        order: g.order(),
        gagola,
        camina_center,
        central_gagola: central,
    })
}

enum Entry {
    Line(CensusLine),
    Unreadable(String, String),
    Failed(CensusFailure),
}

/// Scans every `*.pgrp` file in `dir` in filename order. Files are
/// processed in parallel; the output order does not depend on scheduling.
pub fn scan_directory(dir: &Path) -> Result<CensusReport> {
    let mut files: Vec<(String, std::path::PathBuf)> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "pgrp"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), p))
        .collect();
    files.sort();
    let entries: Vec<Entry> = files
        .par_iter()
        .map(|(name, path)| match pgrp::read(path) {
            Err(e) => Entry::Unreadable(name.clone(), e.to_string()),
            Ok(g) => match census_line(name, &g) {
                Ok(l) => Entry::Line(l),
                Err(e) => Entry::Failed(CensusFailure {
                    file: name.clone(),
                    message: e.to_string(),
                    budget: e.is_budget(),
                }),
            },
        })
        .collect();
    let mut r = CensusReport::default();
    for e in entries {
        match e {
            Entry::Line(l) => {
                if l.gagola {
                    *r.gagola_by_order.entry(l.order).or_default() += 1;
                }
                r.camina_center_count += (l.camina_center == Some(true)) as usize;
                r.central_gagola_count += l.central_gagola as usize;
                r.lines.push(l);
            }
            Entry::Unreadable(f, m) => r.unreadable.push((f, m)),
            Entry::Failed(f) => r.failed.push(f),
        }
    }
    Ok(r)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl CensusReport {
    /// Plain-text rendering: one line per group, then the aggregates.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(
                s,
                "{}\torder={}\tgagola={}\tcamina_center={}\tcentral_gagola={}",
                l.file,
                l.order,
                yes(l.gagola),
                l.camina_center.map_or("n/a", yes),
                yes(l.central_gagola)
            );
        }
        for (f, m) in &self.unreadable {
            let _ = writeln!(s, "unreadable\t{f}\t{m}");
        }
        for f in &self.failed {
            let _ = writeln!(s, "failed\t{}\t{}", f.file, f.message);
        }
        let _ = writeln!(s, "groups\t{}", self.lines.len());
        let orders: std::collections::BTreeSet<u128> = self.lines.iter().map(|l| l.order).collect();
        for o in orders {
            let _ = writeln!(
                s,
                "gagola groups of order {o}\t{}",
                self.gagola_by_order.get(&o).copied().unwrap_or(0)
            );
        }
        let _ = writeln!(s, "camina pairs (G, Z(G))\t{}", self.camina_center_count);
        let _ = writeln!(s, "groups with a central-vanishing character\t{}", self.central_gagola_count);
        s
    }

    /// True when some file hit a disagreement or falsified clause.
    pub fn has_bug(&self) -> bool {
        self.failed.iter().any(|f| !f.budget)
    }

    pub fn gagola_count(&self, order: u128) -> usize {
        self.gagola_by_order.get(&order).copied().unwrap_or(0)
    }
}
