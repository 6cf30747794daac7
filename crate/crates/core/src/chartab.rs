//! Character tables by the Dixon–Schneider method.
//!
//! The class algebra is split over `F_l` for a prime `l ≡ 1 (mod e)` by
//! refining common eigenspaces of the class matrices. Each one-dimensional
//! eigenspace gives a central character, from which the degree and the
//! values mod `l` follow; eigenvalue multiplicities of `ρ(g)` recovered by a
//! discrete Fourier transform over `⟨g⟩` lift the values to `Z[ζ_e]`.
//! Orthogonality is then verified exactly before the table is returned.

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::classes::{class_matrix, ConjClass};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::modp::Fp;
use crate::subgroup::Subgroup;

/// An irreducible character; `values[c]` is its value on class `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Cyclotomic>,
    degree: u64,
}

impl Character {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Classes where the character is zero.
    pub fn vanishing_classes(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&c| self.values[c].is_zero())
            .collect()
    }

    /// Whether all listed classes share one value.
    pub fn is_constant_on(&self, classes: &[usize]) -> Result<bool> {
        let (&first, rest) = classes
            .split_first()
            .ok_or_else(|| Error::Precondition("empty class set".into()))?;
        Ok(rest.iter().all(|&c| self.values[c] == self.values[first]))
    }

    /// Classes in the kernel: value equal to the degree.
    pub fn kernel_classes(&self) -> FixedBitSet {
        let d = Cyclotomic::from_integer(self.degree as i64);
        let mut m = FixedBitSet::with_capacity(self.values.len());
        for (c, v) in self.values.iter().enumerate() {
            if *v == d {
                m.insert(c);
            }
        }
        m
    }
}

/// Exact character table with class metadata.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: u128,
    pub exponent: u64,
    pub dixon_prime: u64,
    pub classes: Vec<ConjClass>,
    pub irreducibles: Vec<Character>,
    /// `power_map[c][r]` is the class of `g_c^r`, `r < order(g_c)`.
    pub power_map: Vec<Vec<usize>>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree).collect()
    }

    /// `Σ_c |C| χ(c) conj(ψ(c)) / |G|`.
    pub fn inner_product(&self, chi: &[Cyclotomic], psi: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (c, cl) in self.classes.iter().enumerate() {
            let term = &chi[c] * &psi[c].conjugate();
            acc = &acc + &term.scale(&num_rational::BigRational::from_integer(cl.size.into()));
        }
        let n = num_rational::BigRational::from_integer((self.order as i64).into());
        acc.scale(&n.recip())
    }

    pub fn kernel_of(&self, g: &PermGroup, chi: usize) -> Result<Subgroup> {
        Subgroup::from_class_mask(g, &self.irreducibles[chi].kernel_classes())
    }

    pub fn is_faithful(&self, chi: usize) -> bool {
        self.irreducibles[chi].kernel_classes().count_ones(..) == 1
    }

    /// Splits row indices into those with `N ≤ ker χ` (inflations from
    /// `G/N`) and those over `N`.
    pub fn irr_over(&self, n: &Subgroup) -> Result<(Vec<usize>, Vec<usize>)> {
        let mask = n.mask()?;
        let (mut infl, mut over) = (Vec::new(), Vec::new());
        for (i, chi) in self.irreducibles.iter().enumerate() {
            if mask.is_subset(&chi.kernel_classes()) {
                infl.push(i);
            } else {
                over.push(i);
            }
        }
        Ok((infl, over))
    }
}

/// The Dixon prime: smallest prime `l ≡ 1 (mod e)` with `l ≥ 2⌈√n⌉ + 1`.
pub fn dixon_prime(order: u128, exponent: u64) -> u64 {
    let r = arith::isqrt(order);
    let ceil = if r * r == order { r } else { r + 1 };
    let start = 2 * ceil as u64 + 1;
    let e = exponent.max(1);
    let mut l = start + (e - (start - 1) % e) % e;
    while !arith::is_prime(l) {
        l += e;
    }
    l
}

/// Computes (and caches) the character table of `g`.
pub fn character_table(g: &PermGroup) -> Result<&CharacterTable> {
    g.character_table()
}

pub(crate) fn compute_table(g: &PermGroup) -> Result<CharacterTable> {
    let lim = g.limits();
    if g.order() > lim.table_order {
        return Err(Error::Budget(format!(
            "order {} exceeds the character-table limit {}",
            g.order(),
            lim.table_order
        )));
    }
    let classes = g.conjugacy_classes()?.to_vec();
    let k = classes.len();
    if k > lim.table_classes {
        return Err(Error::Budget(format!(
            "{k} classes exceed the character-table limit {}",
            lim.table_classes
        )));
    }
    let n = g.order();
    let e = g.exponent()?;
    let l = dixon_prime(n, e);
    let f = Fp { l };
    let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
    let inverse: Vec<usize> = g.class_data()?.inverse.clone();

    let omegas = split_class_algebra(g, f, &sizes)?;

    // power maps
    let power_map: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            (0..c.order)
                .map(|r| g.class_of(g.pow(c.rep, r)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let z = f.pow(arith::primitive_root(l), (l - 1) / e);
    let nl = (n % l as u128) as u64;
    let mut rows: Vec<(u64, Vec<Vec<i64>>)> = Vec::with_capacity(k);
    for w in &omegas {
        // Σ ω_c ω_c' / h_c = |G| / χ(1)^2
        let mut s = 0;
        for c in 0..k {
            s = f.add(s, f.mul(f.mul(w[c], w[inverse[c]]), f.inv(sizes[c] % l)));
        }
        let d2 = f.mul(nl, f.inv(s));
        let d = (1..=arith::isqrt(n) as u64)
            .find(|&d| d * d % l == d2 && n % d as u128 == 0)
            .ok_or_else(|| Error::Internal("no admissible character degree".into()))?;
        let vals: Vec<u64> = (0..k)
            .map(|c| f.mul(f.mul(w[c], d % l), f.inv(sizes[c] % l)))
            .collect();
        // eigenvalue multiplicities of ρ(g_c) give a long vector in Z[x]/(x^e - 1)
        let mut longs = Vec::with_capacity(k);
        for c in 0..k {
            let o = classes[c].order;
            let zo = f.pow(z, e / o);
            let oinv = f.inv(o % l);
            let mut long = vec![0i64; e as usize];
            let mut total = 0u64;
            for m in 0..o {
                let mut mu = 0;
                for r in 0..o {
                    let root = f.pow(zo, (o - (r * m) % o) % o);
                    mu = f.add(mu, f.mul(vals[power_map[c][r as usize]], root));
                }
                let mu = f.mul(mu, oinv);
                if mu > d {
                    return Err(Error::Internal(format!(
                        "eigenvalue multiplicity {mu} exceeds degree {d}"
                    )));
                }
                total += mu;
                long[(m * (e / o)) as usize] = mu as i64;
            }
            if total != d {
                return Err(Error::Internal("multiplicities do not sum to the degree".into()));
            }
            longs.push(long);
        }
        rows.push((d, longs));
    }

    verify_orthogonality(e, n, &sizes, &inverse, &rows)?;

    let mut irreducibles: Vec<Character> = rows
        .into_iter()
        .map(|(d, longs)| Character {
            degree: d,
            values: longs.iter().map(|v| Cyclotomic::from_int_long(e, v)).collect(),
        })
        .collect();
    let one = Cyclotomic::one();
    irreducibles.sort_by(|a, b| {
        let ta = a.values.iter().all(|v| *v == one);
        let tb = b.values.iter().all(|v| *v == one);
        tb.cmp(&ta)
            .then(a.degree.cmp(&b.degree))
            .then_with(|| a.values.cmp(&b.values))
    });
    Ok(CharacterTable {
        order: n,
        exponent: e,
        dixon_prime: l,
        classes,
        irreducibles,
        power_map,
    })
}

/// Returns the central characters `ω` mod `l` (normalized to `ω_1 = 1`), one
/// per irreducible, in the order the refinement produces them.
fn split_class_algebra(g: &PermGroup, f: Fp, sizes: &[u64]) -> Result<Vec<Vec<u64>>> {
    let k = sizes.len();
    let l = f.l;
    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&c| (sizes[c], c));
    // each space is an RREF basis with its pivot columns
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![(identity, (0..k).collect())];
    for &j in &order {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let m: Vec<u64> = class_matrix(g, j)?.into_iter().map(|x| x % l).collect();
        let mut next = Vec::with_capacity(spaces.len());
        for (basis, pivots) in spaces {
            if basis.len() == 1 {
                next.push((basis, pivots));
                continue;
            }
            let d = basis.len();
            // images M_j b_s and their coordinates R[t][s] = (M_j b_s)[P[t]]
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..k)
                        .map(|i| {
                            let row = &m[i * k..(i + 1) * k];
                            row.iter()
                                .zip(b)
                                .fold(0, |acc, (&a, &x)| f.add(acc, f.mul(a, x)))
                        })
                        .collect()
                })
                .collect();
            let r: Vec<Vec<u64>> = (0..d)
                .map(|t| (0..d).map(|s| images[s][pivots[t]]).collect())
                .collect();
            let poly = f.charpoly(&r);
            let mut covered = 0;
            for lambda in f.roots(&poly) {
                let shifted: Vec<Vec<u64>> = r
                    .iter()
                    .enumerate()
                    .map(|(t, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(s, &x)| if s == t { f.sub(x, lambda) } else { x })
                            .collect()
                    })
                    .collect();
                let null = f.null_space(&shifted);
                covered += null.len();
                let mut sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0; k];
                        for (s, &cf) in coords.iter().enumerate() {
                            if cf != 0 {
                                for (x, &y) in v.iter_mut().zip(&basis[s]) {
                                    *x = f.add(*x, f.mul(cf, y));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                let piv = f.rref(&mut sub, k);
                next.push((sub, piv));
            }
            if covered != d {
                return Err(Error::Internal(
                    "class matrix is not diagonalizable over the Dixon prime field".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|(b, _)| b.len() != 1) {
        return Err(Error::Internal("eigenspace refinement did not separate all characters".into()));
    }
    spaces
        .into_iter()
        .map(|(mut b, _)| {
            let v = b.pop().unwrap();
            if v[0] == 0 {
                return Err(Error::Internal("central character vanishes at the identity".into()));
            }
            let inv = f.inv(v[0]);
            Ok(v.into_iter().map(|x| f.mul(x, inv)).collect())
        })
        .collect()
}

/// Reduces a long vector of `Z[x]/(x^e - 1)` modulo `Φ_e` and tests whether
/// the result is the integer `target`.
fn equals_integer(e: u64, long: &[i128], target: i128) -> bool {
    let phi = crate::cyclo::cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    let mut v = long.to_vec();
    for m in (deg..v.len()).rev() {
        let c = v[m];
        if c == 0 {
            continue;
        }
        v[m] = 0;
        // x^m = x^(m-deg) x^deg and x^deg = -(Φ_e - x^deg)
        for (t, &p) in phi.iter().enumerate().take(deg) {
            v[m - deg + t] -= c * p as i128;
        }
    }
    v[0] == target && v[1..].iter().all(|&x| x == 0)
}

/// Exact row and column orthogonality over `Z[ζ_e]`.
fn verify_orthogonality(
    e: u64,
    n: u128,
    sizes: &[u64],
    inverse: &[usize],
    rows: &[(u64, Vec<Vec<i64>>)],
) -> Result<()> {
    let k = sizes.len();
    let eu = e as usize;
    let sparse: Vec<Vec<Vec<(usize, i128)>>> = rows
        .iter()
        .map(|(_, longs)| {
            longs
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(m, &c)| (m, c as i128))
                        .collect()
                })
                .collect()
        })
        .collect();
    // conj(χ(g)) = χ(g^-1)
    let mut acc = vec![0i128; eu];
    for a in 0..k {
        for b in a..k {
            acc.iter_mut().for_each(|x| *x = 0);
            for c in 0..k {
                let h = sizes[c] as i128;
                for &(m1, c1) in &sparse[a][c] {
                    for &(m2, c2) in &sparse[b][inverse[c]] {
                        acc[(m1 + m2) % eu] += h * c1 * c2;
                    }
                }
            }
            let target = if a == b { n as i128 } else { 0 };
            if !equals_integer(e, &acc, target) {
                return Err(Error::Internal(format!(
                    "row orthogonality fails for rows {a} and {b}"
                )));
            }
        }
    }
    for c in 0..k {
        for d in c..k {
            acc.iter_mut().for_each(|x| *x = 0);
            for row in &sparse {
                for &(m1, c1) in &row[c] {
                    for &(m2, c2) in &row[inverse[d]] {
                        acc[(m1 + m2) % eu] += c1 * c2;
                    }
                }
            }
            let target = if c == d { (n / sizes[c] as u128) as i128 } else { 0 };
            if !equals_integer(e, &acc, target) {
                return Err(Error::Internal(format!(
                    "column orthogonality fails for classes {c} and {d}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_primes() {
        assert_eq!(dixon_prime(8, 4), 13);
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(1, 1), 3);
    }
}
