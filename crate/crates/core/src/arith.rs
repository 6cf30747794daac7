//! Small integer helpers: primality, factorization, p-parts.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Split `n` into its `p`-part and `p'`-part: `(n_p, n_{p'})` with `n_p * n_{p'} = n`.
pub fn p_part(n: u128, p: u64) -> (u128, u128) {
    assert!(n >= 1, "p_part of zero");
    let p = p as u128;
    let mut np = 1u128;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        np *= p;
    }
    (np, rest)
}

/// If `n = p^a` with `a >= 1`, returns `(p, a)`.
pub fn prime_power(n: u128) -> Option<(u64, u32)> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn is_power_of(n: u128, p: u64) -> bool {
    n >= 1 && p_part(n, p).1 == 1
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs = prime_divisors((p - 1) as u128);
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime has a primitive root")
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n as u128)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_parts() {
        assert_eq!(p_part(24, 2), (8, 3));
        assert_eq!(p_part(24, 5), (1, 24));
        assert_eq!(p_part(159720, 11), (1331, 120));
        assert_eq!(p_part(1, 7), (1, 1));
    }

    #[test]
    fn factoring_and_powers() {
        assert_eq!(factorize(159720), vec![(2, 3), (3, 1), (5, 1), (11, 3)]);
        assert_eq!(prime_power(128), Some((2, 7)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(is_power_of(1, 3));
        assert!(!is_power_of(6, 3));
    }

    #[test]
    fn roots_and_totients() {
        assert_eq!(primitive_root(13), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(totient(660), 160);
        assert_eq!(totient(1), 1);
        assert_eq!(isqrt(8), 2);
        assert_eq!(isqrt(9), 3);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
