//! Deterministic constructors for the group families used throughout.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use std::collections::HashSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

/// Complement `X ≤ SL_2(p)` for the semidirect products `E ⋊ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complement {
    Q8,
    Sl2_3,
    Sl2_5,
    /// User-supplied generators `[a, b, c, d]` for rows `(a b)`, `(c d)`.
    Matrices(Vec<[u64; 4]>),
}

/// A group family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic { n: u64 },
    ElementaryAbelian { p: u64, k: u32 },
    /// Dihedral group of the given order (`2n`), acting on `n` points.
    Dihedral { order: u64 },
    GeneralizedQuaternion { order: u64 },
    Semidihedral { order: u64 },
    /// Extraspecial group of order `p^(1+2m)`; `plus` is the `D8∘...∘D8`
    /// type for `p = 2` and exponent `p` for odd `p`.
    Extraspecial { p: u64, m: u32, plus: bool },
    Heisenberg { p: u64 },
    DirectProduct(Vec<FamilySpec>),
    Agl1 { q: u64 },
    Sl2 { p: u64 },
    EspSdp { p: u64, x: Complement },
    Symmetric { n: u64 },
    Alternating { n: u64 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Cyclic { n } => write!(f, "cyclic {n}"),
            ElementaryAbelian { p, k } => write!(f, "elementary_abelian {p} {k}"),
            Dihedral { order } => write!(f, "dihedral {order}"),
            GeneralizedQuaternion { order } => write!(f, "generalized_quaternion {order}"),
            Semidihedral { order } => write!(f, "semidihedral {order}"),
            Extraspecial { p, m, plus } => {
                write!(f, "extraspecial {p} {m} {}", if *plus { "plus" } else { "minus" })
            }
            Heisenberg { p } => write!(f, "heisenberg {p}"),
            DirectProduct(parts) => {
                write!(f, "direct_product")?;
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x")?;
                    }
                    write!(f, " {s}")?;
                }
                Ok(())
            }
            Agl1 { q } => write!(f, "agl1 {q}"),
            Sl2 { p } => write!(f, "sl2 {p}"),
            EspSdp { p, x } => {
                write!(f, "esp_sdp {p} ")?;
                match x {
                    Complement::Q8 => write!(f, "q8"),
                    Complement::Sl2_3 => write!(f, "sl2_3"),
                    Complement::Sl2_5 => write!(f, "sl2_5"),
                    Complement::Matrices(ms) => {
                        let parts: Vec<String> = ms
                            .iter()
                            .map(|m| format!("{},{},{},{}", m[0], m[1], m[2], m[3]))
                            .collect();
                        write!(f, "{}", parts.join(" "))
                    }
                }
            }
            Symmetric { n } => write!(f, "symmetric {n}"),
            Alternating { n } => write!(f, "alternating {n}"),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Unsupported(msg.into())
}

fn num<T: FromStr>(tok: Option<&&str>, what: &str) -> Result<T> {
    tok.ok_or_else(|| bad(format!("missing parameter {what}")))?
        .parse()
        .map_err(|_| bad(format!("parameter {what} is not a number")))
}

impl FamilySpec {
    /// Parses whitespace-separated tokens, e.g. `["dihedral", "8"]` or
    /// `["direct_product", "dihedral", "8", "x", "cyclic", "3"]`.
    pub fn parse_tokens(tokens: &[&str]) -> Result<Self> {
        use FamilySpec::*;
        let (&name, rest) = tokens
            .split_first()
            .ok_or_else(|| bad("empty family specification"))?;
        let arity = |n: usize| -> Result<()> {
            if rest.len() == n {
                Ok(())
            } else {
                Err(bad(format!("{name} takes {n} parameter(s), got {}", rest.len())))
            }
        };
        let spec = match name {
            "cyclic" => {
                arity(1)?;
                Cyclic { n: num(rest.first(), "n")? }
            }
            "elementary_abelian" => {
                arity(2)?;
                ElementaryAbelian {
                    p: num(rest.first(), "p")?,
                    k: num(rest.get(1), "k")?,
                }
            }
            "dihedral" => {
                arity(1)?;
                Dihedral { order: num(rest.first(), "order")? }
            }
            "generalized_quaternion" | "quaternion" => {
                arity(1)?;
                GeneralizedQuaternion { order: num(rest.first(), "order")? }
            }
            "semidihedral" => {
                arity(1)?;
                Semidihedral { order: num(rest.first(), "order")? }
            }
            "extraspecial" => {
                arity(3)?;
                let plus = match rest[2] {
                    "plus" | "+" => true,
                    "minus" | "-" => false,
                    s => return Err(bad(format!("extraspecial sign must be plus or minus, got {s}"))),
                };
                Extraspecial {
                    p: num(rest.first(), "p")?,
                    m: num(rest.get(1), "m")?,
                    plus,
                }
            }
            "heisenberg" => {
                arity(1)?;
                Heisenberg { p: num(rest.first(), "p")? }
            }
            "agl1" => {
                arity(1)?;
                Agl1 { q: num(rest.first(), "q")? }
            }
            "sl2" => {
                arity(1)?;
                Sl2 { p: num(rest.first(), "p")? }
            }
            "symmetric" => {
                arity(1)?;
                Symmetric { n: num(rest.first(), "n")? }
            }
            "alternating" => {
                arity(1)?;
                Alternating { n: num(rest.first(), "n")? }
            }
            "esp_sdp" => {
                if rest.len() < 2 {
                    return Err(bad("esp_sdp takes p and a complement"));
                }
                let p = num(rest.first(), "p")?;
                let x = match rest[1].to_ascii_lowercase().as_str() {
                    "q8" => Complement::Q8,
                    "sl2_3" | "sl2(3)" => Complement::Sl2_3,
                    "sl2_5" | "sl2(5)" => Complement::Sl2_5,
                    _ => {
                        let ms = rest[1..]
                            .iter()
                            .map(|m| {
                                let v: Vec<u64> = m
                                    .split(',')
                                    .map(|x| x.trim().parse().map_err(|_| bad(format!("bad matrix {m}"))))
                                    .collect::<Result<_>>()?;
                                <[u64; 4]>::try_from(v).map_err(|_| bad(format!("matrix {m} needs 4 entries")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Complement::Matrices(ms)
                    }
                };
                if !matches!(x, Complement::Matrices(_)) && rest.len() != 2 {
                    return Err(bad("esp_sdp takes p and one named complement"));
                }
                EspSdp { p, x }
            }
            "direct_product" => {
                let parts = rest
                    .split(|t| *t == "x")
                    .map(Self::parse_tokens)
                    .collect::<Result<Vec<_>>>()?;
                if parts.len() < 2 {
                    return Err(bad("direct_product needs at least two factors separated by x"));
                }
                DirectProduct(parts)
            }
            other => return Err(bad(format!("unknown family {other}"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        Self::parse_tokens(&toks)
    }
}

fn perm(images: Vec<Point>) -> Permutation {
    Permutation::from_images(images).expect("constructor produced a bijection")
}

fn cycle(degree: usize, pts: &[Point]) -> Permutation {
    Permutation::from_cycles(degree, &[pts]).expect("valid cycle")
}

fn require_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(bad(format!("{p} is not prime")))
    }
}

/// Builds the group described by `spec`.
pub fn make(spec: &FamilySpec) -> Result<PermGroup> {
    use FamilySpec::*;
    let (degree, gens, expected) = match spec {
        Cyclic { n } => {
            if *n == 0 {
                return Err(bad("cyclic order must be positive"));
            }
            let pts: Vec<Point> = (0..*n as Point).collect();
            (*n as usize, vec![cycle(*n as usize, &pts)], *n as u128)
        }
        ElementaryAbelian { p, k } => {
            require_prime(*p)?;
            let deg = (*p as usize) * (*k as usize).max(1);
            let gens = (0..*k as usize)
                .map(|b| {
                    let pts: Vec<Point> = (0..*p as usize).map(|i| (b * *p as usize + i) as Point).collect();
                    cycle(deg, &pts)
                })
                .collect();
            (deg, gens, (*p as u128).pow(*k))
        }
        Dihedral { order } => return dihedral(*order),
        GeneralizedQuaternion { order } => {
            let m = metacyclic_half(*order, 8)?;
            let g = metacyclic(m, m - 1, m / 2);
            (g.0, g.1, *order as u128)
        }
        Semidihedral { order } => {
            let m = metacyclic_half(*order, 16)?;
            let g = metacyclic(m, m / 2 - 1, 0);
            (g.0, g.1, *order as u128)
        }
        Extraspecial { p, m, plus } => {
            require_prime(*p)?;
            if *m == 0 {
                return Err(bad("extraspecial needs m >= 1"));
            }
            let g = vc_group(*p, *m as usize, extraspecial_form(*p, *plus));
            (g.0, g.1, (*p as u128).pow(2 * m + 1))
        }
        Heisenberg { p } => {
            require_prime(*p)?;
            // upper unitriangular model: β((x, y), (x', y')) = x y'
            let g = vc_group(*p, 1, Box::new(|v: &[u64], w: &[u64], p: u64| v[0] * w[1] % p));
            (g.0, g.1, (*p as u128).pow(3))
        }
        DirectProduct(parts) => {
            let groups = parts.iter().map(make).collect::<Result<Vec<_>>>()?;
            let mut acc = groups[0].clone();
            for g in &groups[1..] {
                acc = direct_product(&acc, g)?;
            }
            return Ok(acc);
        }
        Agl1 { q } => return agl1(*q),
        Sl2 { p } => {
            require_prime(*p)?;
            let gens = vec![[1, 1, 0, 1], [0, 1, p - 1, 0]];
            let (deg, perms) = matrices_on_vectors(*p, &gens);
            (deg, perms, (*p as u128) * ((*p as u128).pow(2) - 1))
        }
        EspSdp { p, x } => return esp_sdp(*p, x),
        Symmetric { n } => {
            let n = *n as usize;
            if n < 2 {
                (n.max(1), vec![], 1)
            } else {
                let pts: Vec<Point> = (0..n as Point).collect();
                let fact: u128 = (1..=n as u128).product();
                (n, vec![cycle(n, &[0, 1]), cycle(n, &pts)], fact)
            }
        }
        Alternating { n } => {
            let n = *n as usize;
            if n < 3 {
                (n.max(1), vec![], 1)
            } else {
                let long: Vec<Point> = if n % 2 == 1 {
                    (0..n as Point).collect()
                } else {
                    (1..n as Point).collect()
                };
                let fact: u128 = (1..=n as u128).product();
                (n, vec![cycle(n, &[0, 1, 2]), cycle(n, &long)], fact / 2)
            }
        }
    };
    let g = PermGroup::new(degree, gens)?;
    if g.order() != expected {
        return Err(Error::Internal(format!(
            "{spec} has order {} instead of {expected}",
            g.order()
        )));
    }
    Ok(g)
}

fn dihedral(order: u64) -> Result<PermGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(bad(format!("dihedral order must be even and positive, got {order}")));
    }
    let gens = match order {
        2 => vec![cycle(2, &[0, 1])],
        4 => vec![
            perm(vec![1, 0, 3, 2]),
            perm(vec![2, 3, 0, 1]),
        ],
        _ => {
            let n = (order / 2) as Point;
            let rot: Vec<Point> = (0..n).collect();
            let refl = perm((0..n).map(|i| (n - i) % n).collect());
            vec![cycle(n as usize, &rot), refl]
        }
    };
    let deg = gens[0].degree();
    let g = PermGroup::new(deg, gens)?;
    debug_assert_eq!(g.order(), order as u128);
    Ok(g)
}

fn metacyclic_half(order: u64, min: u64) -> Result<u64> {
    if order < min || !order.is_power_of_two() {
        return Err(bad(format!("order must be a power of two at least {min}, got {order}")));
    }
    Ok(order / 2)
}

/// Regular representation of `⟨a, b | a^m, b^2 = a^s, a^b = a^r⟩` on the
/// elements `a^i b^j`, numbered `i + m j`.
fn metacyclic(m: u64, r: u64, s: u64) -> (usize, Vec<Permutation>) {
    let n = 2 * m;
    let mul = |(i, j): (u64, u64), (k, l): (u64, u64)| -> (u64, u64) {
        // b^j a^k = a^(k r^j) b^j
        let k2 = if j == 1 { k * r % m } else { k };
        let mut e = (i + k2) % m;
        let mut f = j + l;
        if f == 2 {
            f = 0;
            e = (e + s) % m;
        }
        (e, f)
    };
    let act = |g: (u64, u64)| -> Permutation {
        perm((0..n)
            .map(|x| {
                let (e, f) = mul((x % m, x / m), g);
                (e + m * f) as Point
            })
            .collect())
    };
    (n as usize, vec![act((1, 0)), act((0, 1))])
}

type Form = Box<dyn Fn(&[u64], &[u64], u64) -> u64 + Send + Sync>;

/// Cocycle for the extraspecial groups in the `(v, c)` model.
fn extraspecial_form(p: u64, plus: bool) -> Form {
    if p == 2 {
        // D8 pairs: x y'; the minus type swaps the first pair for Q8: x y' + x x' + y y'
        Box::new(move |v: &[u64], w: &[u64], _| {
            let mut s = 0;
            for i in 0..v.len() / 2 {
                let (x, y, x2, y2) = (v[2 * i], v[2 * i + 1], w[2 * i], w[2 * i + 1]);
                s += x * y2;
                if i == 0 && !plus {
                    s += x * x2 + y * y2;
                }
            }
            s % 2
        })
    } else {
        // symplectic form; the minus type adds a carry on the first coordinate,
        // turning that generator into an element of order p^2
        Box::new(move |v: &[u64], w: &[u64], p| {
            let mut s = 0;
            for i in 0..v.len() / 2 {
                let (x, y, x2, y2) = (v[2 * i], v[2 * i + 1], w[2 * i], w[2 * i + 1]);
                s += x * y2 + (p - y) * x2;
            }
            if !plus && v[0] + w[0] >= p {
                s += 1;
            }
            s % p
        })
    }
}

/// Group on `F_p^(2m) × F_p` with `(v,c)(w,d) = (v+w, c+d+β(v,w))`, acting on
/// its own elements by right multiplication.
fn vc_group(p: u64, m: usize, beta: Form) -> (usize, Vec<Permutation>) {
    let dim = 2 * m;
    let deg = (p as usize).pow(dim as u32 + 1);
    let decode = |x: usize| -> (Vec<u64>, u64) {
        let mut v = Vec::with_capacity(dim);
        let mut r = x;
        for _ in 0..dim {
            v.push((r % p as usize) as u64);
            r /= p as usize;
        }
        (v, r as u64)
    };
    let encode = |v: &[u64], c: u64| -> usize {
        let mut x = c as usize;
        for &a in v.iter().rev() {
            x = x * p as usize + a as usize;
        }
        x
    };
    let mut gens = Vec::new();
    for b in 0..dim {
        let mut w = vec![0; dim];
        w[b] = 1;
        let images = (0..deg)
            .map(|x| {
                let (v, c) = decode(x);
                let sum: Vec<u64> = v.iter().zip(&w).map(|(a, b)| (a + b) % p).collect();
                encode(&sum, (c + beta(&v, &w, p)) % p) as Point
            })
            .collect();
        gens.push(perm(images));
    }
    (deg, gens)
}

/// Action of 2×2 matrices over `F_p` on the nonzero row vectors `v ↦ vM`;
/// vector `(a, b)` is point `a p + b - 1`.
fn matrices_on_vectors(p: u64, mats: &[[u64; 4]]) -> (usize, Vec<Permutation>) {
    let deg = (p * p - 1) as usize;
    let gens = mats
        .iter()
        .map(|mt| {
            perm((1..p * p)
                .map(|x| {
                    let (a, b) = (x / p, x % p);
                    let a2 = (a * mt[0] + b * mt[2]) % p;
                    let b2 = (a * mt[1] + b * mt[3]) % p;
                    (a2 * p + b2 - 1) as Point
                })
                .collect())
        })
        .collect();
    (deg, gens)
}

/// `G × H` acting on the disjoint union of the point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let deg = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.shifted(0, deg)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), deg)));
    let g = PermGroup::with_limits(deg, gens, *a.limits())?;
    debug_assert_eq!(g.order(), a.order() * b.order());
    Ok(g)
}

/// Small finite field `F_q`, elements encoded as base-`p` digit strings.
struct SmallField {
    p: u64,
    k: u32,
    q: u64,
    /// reduction polynomial's low coefficients: x^k = Σ red[i] x^i
    red: Vec<u64>,
}

impl SmallField {
    fn new(q: u64) -> Result<Self> {
        let (p, k) = arith::prime_power(q as u128).ok_or_else(|| bad(format!("{q} is not a prime power")))?;
        let mut f = SmallField { p, k, q, red: vec![0; k as usize] };
        if k == 1 {
            return Ok(f);
        }
        // smallest monic irreducible: no roots is enough for k <= 3; test by
        // checking that x generates a field (every nonzero element invertible)
        for code in 0..p.pow(k) {
            f.red = f.digits(code);
            if f.is_field() {
                return Ok(f);
            }
        }
        Err(Error::Internal(format!("no irreducible polynomial of degree {k} over F_{p}")))
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return a * b % self.p;
        }
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            prod[d] = 0;
            for i in 0..k {
                prod[d - k + i] = (prod[d - k + i] + c * self.red[i]) % self.p;
            }
        }
        self.undigits(&prod[..k])
    }

    fn is_field(&self) -> bool {
        (1..self.q).all(|a| (1..self.q).any(|b| self.mul(a, b) == 1))
    }

    fn primitive_element(&self) -> u64 {
        (2..self.q.max(3))
            .find(|&w| {
                let mut x = 1;
                for i in 1..self.q {
                    x = self.mul(x, w);
                    if x == 1 {
                        return i == self.q - 1;
                    }
                }
                false
            })
            .unwrap_or(1)
    }
}

fn agl1(q: u64) -> Result<PermGroup> {
    if q < 2 {
        return Err(bad("agl1 needs q >= 2"));
    }
    let f = SmallField::new(q)?;
    let w = f.primitive_element();
    let translate = perm((0..q).map(|x| f.add(x, 1) as Point).collect());
    let mut gens = vec![translate];
    if q > 2 {
        gens.push(perm((0..q).map(|x| f.mul(x, w) as Point).collect()));
    }
    let g = PermGroup::new(q as usize, gens)?;
    if g.order() != (q * (q - 1)) as u128 {
        return Err(Error::Internal(format!("agl1({q}) has order {}", g.order())));
    }
    Ok(g)
}

type Mat = [u64; 4];

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    [
        (a[0] * b[0] + a[1] * b[2]) % p,
        (a[0] * b[1] + a[1] * b[3]) % p,
        (a[2] * b[0] + a[3] * b[2]) % p,
        (a[2] * b[1] + a[3] * b[3]) % p,
    ]
}

/// Closure of the matrix group generated by `gens`, or `None` once it
/// exceeds `cap` elements.
fn matrix_closure(gens: &[Mat], p: u64, cap: usize) -> Option<Vec<Mat>> {
    let id = [1, 0, 0, 1];
    let mut seen: HashSet<Mat> = HashSet::from([id]);
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let x = mat_mul(&elems[i], g, p);
            if seen.insert(x) {
                elems.push(x);
                if elems.len() > cap {
                    return None;
                }
            }
        }
        i += 1;
    }
    Some(elems)
}

/// First pair of `SL_2(p)` matrices, in row-major enumeration order, that
/// generates a subgroup of the given order with a unique involution.
pub fn find_sl2_subgroup(p: u64, order: usize) -> Result<[Mat; 2]> {
    let mut sl2 = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        sl2.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let minus_id = [p - 1, 0, 0, p - 1];
    for (i, a) in sl2.iter().enumerate() {
        for b in &sl2[i + 1..] {
            let Some(elems) = matrix_closure(&[*a, *b], p, order) else {
                continue;
            };
            if elems.len() != order {
                continue;
            }
            let involutions = elems
                .iter()
                .filter(|m| **m != [1, 0, 0, 1] && mat_mul(m, m, p) == [1, 0, 0, 1])
                .count();
            if involutions == 1 && elems.contains(&minus_id) {
                return Ok([*a, *b]);
            }
        }
    }
    Err(Error::Internal(format!(
        "no subgroup of order {order} with a unique involution in SL2({p})"
    )))
}

/// Generators of a copy of `SL_2(5)` inside `SL_2(11)`.
pub fn embed_sl2_5_in_sl2_11() -> [Mat; 2] {
    static CELL: OnceLock<[Mat; 2]> = OnceLock::new();
    *CELL.get_or_init(|| find_sl2_subgroup(11, 120).expect("SL2(11) contains SL2(5)"))
}

fn named_complement(p: u64, x: &Complement) -> Result<Vec<Mat>> {
    static Q8: OnceLock<[Mat; 2]> = OnceLock::new();
    static SL2_3: OnceLock<[Mat; 2]> = OnceLock::new();
    let check = |want: u64, name: &str| -> Result<()> {
        if p == want {
            Ok(())
        } else {
            Err(bad(format!("{name} is supported with p = {want}, got p = {p}")))
        }
    };
    Ok(match x {
        Complement::Q8 => {
            check(3, "q8")?;
            Q8.get_or_init(|| find_sl2_subgroup(3, 8).expect("SL2(3) contains Q8")).to_vec()
        }
        Complement::Sl2_3 => {
            check(5, "sl2_3")?;
            SL2_3
                .get_or_init(|| find_sl2_subgroup(5, 24).expect("SL2(5) contains SL2(3)"))
                .to_vec()
        }
        Complement::Sl2_5 => {
            check(11, "sl2_5")?;
            embed_sl2_5_in_sl2_11().to_vec()
        }
        Complement::Matrices(ms) => {
            for m in ms {
                if m.iter().any(|&x| x >= p) {
                    return Err(bad(format!("matrix entries must be reduced mod {p}")));
                }
                if (m[0] * m[3] + p * p - m[1] * m[2]) % p != 1 {
                    return Err(bad(format!("matrix {m:?} does not have determinant 1")));
                }
            }
            ms.clone()
        }
    })
}

/// `E ⋊ X` with `E` extraspecial of order `p^3` and exponent `p`, `X ≤ SL_2(p)`
/// acting by `(v, c) ↦ (vM, c)`, on the `p^3` elements of `E`.
fn esp_sdp(p: u64, x: &Complement) -> Result<PermGroup> {
    if p == 2 || !arith::is_prime(p) {
        return Err(bad("esp_sdp needs an odd prime"));
    }
    let mats = named_complement(p, x)?;
    let x_order = matrix_closure(&mats, p, 1 << 20)
        .ok_or_else(|| bad("complement too large"))?
        .len() as u128;
    let beta = extraspecial_form(p, true);
    let (deg, mut gens) = vc_group(p, 1, beta);
    let pp = p as usize;
    for m in &mats {
        let images = (0..deg)
            .map(|pt| {
                let (x0, x1, c) = (pt % pp, (pt / pp) % pp, pt / (pp * pp));
                let (a, b) = (x0 as u64, x1 as u64);
                let y0 = (a * m[0] + b * m[2]) % p;
                let y1 = (a * m[1] + b * m[3]) % p;
                (y0 as usize + pp * (y1 as usize + pp * c)) as Point
            })
            .collect();
        gens.push(perm(images));
    }
    let g = PermGroup::new(deg, gens)?;
    let expected = (p as u128).pow(3) * x_order;
    if g.order() != expected {
        return Err(Error::Internal(format!(
            "E{p} ⋊ X has order {} instead of {expected}; the action is not faithful",
            g.order()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> u128 {
        make(&s.parse().unwrap()).unwrap().order()
    }

    #[test]
    fn orders() {
        assert_eq!(order("cyclic 12"), 12);
        assert_eq!(order("cyclic 1"), 1);
        assert_eq!(order("elementary_abelian 2 3"), 8);
        assert_eq!(order("dihedral 4"), 4);
        assert_eq!(order("dihedral 8"), 8);
        assert_eq!(order("dihedral 10"), 10);
        assert_eq!(order("generalized_quaternion 8"), 8);
        assert_eq!(order("generalized_quaternion 16"), 16);
        assert_eq!(order("semidihedral 16"), 16);
        assert_eq!(order("extraspecial 2 2 minus"), 32);
        assert_eq!(order("extraspecial 2 2 plus"), 32);
        assert_eq!(order("extraspecial 3 1 minus"), 27);
        assert_eq!(order("heisenberg 5"), 125);
        assert_eq!(order("agl1 5"), 20);
        assert_eq!(order("agl1 4"), 12);
        assert_eq!(order("agl1 9"), 72);
        assert_eq!(order("sl2 3"), 24);
        assert_eq!(order("sl2 5"), 120);
        assert_eq!(order("symmetric 4"), 24);
        assert_eq!(order("alternating 5"), 60);
        assert_eq!(order("alternating 4"), 12);
        assert_eq!(order("direct_product dihedral 8 x cyclic 3"), 24);
        assert_eq!(order("esp_sdp 3 q8"), 216);
    }

    #[test]
    fn round_trip_spec_strings() {
        for s in [
            "cyclic 6",
            "extraspecial 2 2 minus",
            "direct_product dihedral 8 x cyclic 3",
            "esp_sdp 5 sl2_3",
            "esp_sdp 3 0,1,2,0 1,1,0,1",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("dihedral".parse::<FamilySpec>().is_err());
        assert!("esp_sdp 5 q8".parse::<FamilySpec>().map(|s| make(&s)).unwrap().is_err());
        assert!("esp_sdp 3 1,1,1,1".parse::<FamilySpec>().map(|s| make(&s)).unwrap().is_err());
    }
}
