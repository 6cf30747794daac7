//! Deterministic Schreier–Sims stabilizer chain with element addressing.
//!
//! Every element `g` factors uniquely as `u_{b-1} ... u_1 u_0` where `u_k` is
//! a coset representative at level `k` (applied last for `k = 0`). The digits
//! of that factorization give a dense index `0..|G|`, which the rest of the
//! crate uses as the element encoding for materialized groups. Index 0 is the
//! identity.

use crate::perm::{Permutation, Point};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: Point,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<Point>,
    /// point -> position in `orbit`, or `NONE`
    pub pos: Vec<u32>,
    /// `reps[i]` maps `base` to `orbit[i]`
    pub reps: Vec<Permutation>,
    pub inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(base: Point, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: vec![NONE; degree],
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.orbit.clear();
        self.reps.clear();
        self.inv_reps.clear();
        self.pos.iter_mut().for_each(|p| *p = NONE);
        self.orbit.push(self.base);
        self.pos[self.base as usize] = 0;
        self.reps.push(id.clone());
        self.inv_reps.push(id);
        let mut i = 0;
        while i < self.orbit.len() {
            let pt = self.orbit[i];
            for s in &self.gens {
                let img = s.apply(pt);
                if self.pos[img as usize] == NONE {
                    self.pos[img as usize] = self.orbit.len() as u32;
                    self.orbit.push(img);
                    let rep = self.reps[i].then(s);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
    /// `strides[k]` = product of orbit lengths of levels deeper than `k`
    pub strides: Vec<u128>,
    pub order: u128,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            strides: Vec::new(),
            order: 1,
        };
        if let Some(first) = gens.first() {
            let mut level = Level::new(first.first_moved().unwrap(), degree);
            level.gens = gens.clone();
            level.rebuild(degree);
            chain.levels.push(level);
            chain.schreier_sims();
        }
        chain.finish();
        chain
    }

    fn finish(&mut self) {
        let b = self.levels.len();
        self.strides = vec![1; b];
        for k in (0..b.saturating_sub(1)).rev() {
            self.strides[k] = self.strides[k + 1] * self.levels[k + 1].orbit.len() as u128;
        }
        self.order = self
            .levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product();
    }

    /// Strips `g` through levels `from..`; returns the residue and the level at
    /// which stripping stopped (`levels.len()` if it went all the way).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for k in from..self.levels.len() {
            let level = &self.levels[k];
            let img = h.apply(level.base);
            let j = level.pos[img as usize];
            if j == NONE {
                return (h, k);
            }
            h = h.then(&level.inv_reps[j as usize]);
        }
        (h, self.levels.len())
    }

    /// Deterministic Schreier–Sims: every Schreier generator at every level
    /// must strip to the identity through the levels below it.
    fn schreier_sims(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut restart_at = None;
            'scan: for oi in 0..self.levels[lvl].orbit.len() {
                for si in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let s = &level.gens[si];
                    let img = s.apply(level.orbit[oi]);
                    let j = level.pos[img as usize] as usize;
                    let schreier = level.reps[oi].then(s).then(&level.inv_reps[j]);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stop) = self.strip(&schreier, lvl + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if stop == self.levels.len() {
                        let base = residue.first_moved().unwrap();
                        self.levels.push(Level::new(base, degree));
                    }
                    for l in lvl + 1..=stop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild(degree);
                    }
                    restart_at = Some(stop);
                    break 'scan;
                }
            }
            match restart_at {
                Some(stop) => i = stop as isize,
                None => i -= 1,
            }
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g, 0).0.is_identity()
    }

    pub fn base_len(&self) -> usize {
        self.levels.len()
    }

    /// Strong generators (union over levels, deduplicated, in level order).
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}

/// Chain of the normal closure of `gens` under conjugation by `host_gens`.
/// Conjugates that are not yet members are appended to `gens`.
pub(crate) fn normal_closure_chain(
    degree: usize,
    gens: &mut Vec<Permutation>,
    host_gens: &[Permutation],
) -> StabChain {
    loop {
        let chain = StabChain::new(degree, gens);
        let mut added = false;
        let mut i = 0;
        while i < gens.len() {
            for s in host_gens {
                let c = gens[i].conjugate_by(s);
                if !chain.contains(&c) && !gens.contains(&c) {
                    gens.push(c);
                    added = true;
                }
            }
            i += 1;
            if added {
                break;
            }
        }
        if !added {
            return chain;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let cyc: Vec<Point> = (0..n as Point).collect();
            let gens = vec![perm(n, &[&[0, 1]]), perm(n, &[&cyc])];
            let chain = StabChain::new(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order, fact);
        }
    }
}
