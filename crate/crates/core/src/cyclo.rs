//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! A value is stored in the power basis `1, ζ, ..., ζ^(φ(e)-1)` after reduction
//! modulo the cyclotomic polynomial `Φ_e`. Binary operations lift both
//! operands to the lcm of their conductors.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Reduction data for one conductor.
#[derive(Debug)]
struct Field {
    phi: usize,
    /// `red[m]` = coefficients of `x^m mod Φ_e`, for `0 <= m < e`.
    red: Vec<Vec<i64>>,
}

fn field(e: u64) -> Arc<Field> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&e) {
        return f.clone();
    }
    let phi_poly = cyclotomic_polynomial(e);
    let phi = phi_poly.len() - 1;
    let e_us = e as usize;
    let mut red: Vec<Vec<i64>> = Vec::with_capacity(e_us);
    for m in 0..e_us {
        if m < phi {
            let mut v = vec![0; phi];
            v[m] = 1;
            red.push(v);
        } else {
            // x * red[m-1], then subtract top * Φ_e
            let prev = &red[m - 1];
            let top = prev[phi - 1];
            let mut v = vec![0; phi];
            for t in (1..phi).rev() {
                v[t] = prev[t - 1];
            }
            for t in 0..phi {
                v[t] -= top * phi_poly[t];
            }
            red.push(v);
        }
    }
    let f = Arc::new(Field { phi, red });
    cache.write().unwrap().entry(e).or_insert(f).clone()
}

/// Coefficients (low degree first) of the `e`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(e: u64) -> Vec<i64> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&e) {
        return p.clone();
    }
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in arith::divisors(e) {
        if d == e {
            continue;
        }
        num = div_monic(&num, &cyclotomic_polynomial(d));
    }
    cache.write().unwrap().insert(e, num.clone());
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn reduce(e: u64, long: Vec<BigRational>) -> Vec<BigRational> {
    let f = field(e);
    let mut out: Vec<BigRational> = vec![BigRational::zero(); f.phi];
    for (m, c) in long.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if m < f.phi {
            out[m] += c;
        } else {
            for (t, &r) in f.red[m].iter().enumerate() {
                if r != 0 {
                    out[t] += &c * BigInt::from(r);
                }
            }
        }
    }
    out
}

/// An element of `Q(ζ_e)` in canonical power-basis form.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(e: u64, k: i64) -> Self {
        assert!(e >= 1, "conductor must be positive");
        let m = k.rem_euclid(e as i64) as usize;
        let mut long = vec![BigRational::zero(); e as usize];
        long[m] = BigRational::one();
        Self::from_long(e, long)
    }

    /// Builds `Σ long[m] ζ_e^m` for `m < e`.
    pub fn from_long(e: u64, long: Vec<BigRational>) -> Self {
        assert_eq!(long.len(), e as usize);
        Cyclotomic {
            conductor: e,
            coeffs: reduce(e, long),
        }
    }

    /// Builds `Σ long[m] ζ_e^m` from integer coefficients.
    pub fn from_int_long(e: u64, long: &[i64]) -> Self {
        Self::from_long(
            e,
            long.iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Same value written over `Q(ζ_E)` for a multiple `E` of the conductor.
    pub fn lift(&self, big: u64) -> Self {
        assert!(big % self.conductor == 0, "conductor must divide the target");
        if big == self.conductor {
            return self.clone();
        }
        let step = (big / self.conductor) as usize;
        let mut long = vec![BigRational::zero(); big as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            long[i * step] = c.clone();
        }
        Self::from_long(big, long)
    }

    /// Same value written over the subfield `Q(ζ_e)`, if it lies there.
    pub fn restrict(&self, e: u64) -> Option<Self> {
        if self.conductor % e != 0 {
            return None;
        }
        let phi_small = field(e).phi;
        let rows = self.coeffs.len();
        // columns: lifted basis vectors, then the target
        let mut m: Vec<Vec<BigRational>> = vec![Vec::with_capacity(phi_small + 1); rows];
        for i in 0..phi_small {
            let col = Cyclotomic::root_of_unity(e, i as i64).lift(self.conductor);
            for (r, c) in col.coeffs.into_iter().enumerate() {
                m[r].push(c);
            }
        }
        for (r, c) in self.coeffs.iter().enumerate() {
            m[r].push(c.clone());
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..phi_small {
            let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=phi_small {
                        let d = &f * &m[row][c];
                        m[r][c] -= d;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if m[row..].iter().any(|r| !r[phi_small].is_zero()) {
            return None;
        }
        let mut coeffs = vec![BigRational::zero(); phi_small];
        for (r, &c) in pivots.iter().enumerate() {
            coeffs[c] = m[r][phi_small].clone();
        }
        Some(Cyclotomic {
            conductor: e,
            coeffs,
        })
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let e = arith::lcm(a.conductor, b.conductor);
        (a.lift(e), b.lift(e))
    }

    /// Image under `ζ ↦ ζ^k` for `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.conductor;
        let mut long = vec![BigRational::zero(); e as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let m = (i as i64 * k).rem_euclid(e as i64) as usize;
            long[m] += c;
        }
        Self::from_long(e, long)
    }

    /// Complex conjugate.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    pub fn abs_squared(&self) -> Self {
        self * &self.conjugate()
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational_integer(&self) -> Option<BigInt> {
        self.is_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Integer value as `i64` if this is a small rational integer.
    pub fn as_i64(&self) -> Option<i64> {
        self.is_rational_integer().and_then(|n| n.to_i64())
    }

    /// Multiplicative inverse via the product of the other Galois conjugates.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        let e = self.conductor as i64;
        let mut others = Cyclotomic::one();
        for k in 2..e.max(2) {
            if k.gcd(&e) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (&others * self)
            .is_rational()
            .expect("field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    /// Approximate complex value `(re, im)`.
    pub fn approx(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * i as f64 / e;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }

    /// Decimal approximation with six places.
    pub fn approx_string(&self) -> String {
        let (re, im) = self.approx();
        let re = if re.abs() < 5e-7 { 0.0 } else { re };
        let im = if im.abs() < 5e-7 { 0.0 } else { im };
        if im == 0.0 {
            format!("{re:.6}")
        } else if im < 0.0 {
            format!("{re:.6}-{:.6}i", -im)
        } else {
            format!("{re:.6}+{im:.6}i")
        }
    }

    /// The positive square root of `q = p^a`.
    pub fn sqrt_of_ppower(q: u64, p: u64) -> Result<Self> {
        if !arith::is_prime(p) || !arith::is_power_of(q as u128, p) {
            return Err(Error::Precondition(format!("{q} is not a power of the prime {p}")));
        }
        let mut a = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            a += 1;
        }
        let half = Cyclotomic::from_integer(p.pow(a / 2) as i64);
        if a % 2 == 0 {
            return Ok(half);
        }
        Ok(&half * &Self::sqrt_prime(p))
    }

    fn sqrt_prime(p: u64) -> Self {
        if p == 2 {
            return &Self::root_of_unity(8, 1) + &Self::root_of_unity(8, -1);
        }
        // quadratic Gauss sum: √p if p ≡ 1 (mod 4), i√p if p ≡ 3 (mod 4)
        let mut long = vec![0i64; p as usize];
        for k in 1..p {
            long[k as usize] = if arith::pow_mod(k, (p - 1) / 2, p) == 1 { 1 } else { -1 };
        }
        let gauss = Self::from_int_long(p, &long);
        if p % 4 == 1 {
            gauss
        } else {
            -(&Self::root_of_unity(4, 1) * &gauss)
        }
    }

    fn cmp_same(a: &Self, b: &Self) -> Ordering {
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on coefficients at the common conductor. This is an
/// encoding order used for deterministic sorting, not a field order.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.conductor == other.conductor {
            return Self::cmp_same(self, other);
        }
        let (a, b) = Self::common(self, other);
        Self::cmp_same(&a, &b)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        let e = a.conductor;
        let mut long = vec![BigRational::zero(); e as usize];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    long[(i + j) % e as usize] += x * y;
                }
            }
        }
        Cyclotomic::from_long(e, long)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `c0 + c1*z(e)^1 + ...`, zero terms omitted.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z({})^{i}", self.conductor)?;
            } else {
                write!(f, "{mag}*z({})^{i}", self.conductor)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
