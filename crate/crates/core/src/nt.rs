//! Small integer number theory used across the crate. Inputs are desk-scale,
//! so trial division is enough everywhere.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo a prime `p`.
pub fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

/// Least `k >= 1` with `a^k = 1 (mod n)`, or `None` when `gcd(a, n) != 1`.
pub fn order_mod(a: u64, n: u64) -> Option<u64> {
    if n < 2 || gcd(a % n, n) != 1 {
        return None;
    }
    let mut k = 1u64;
    let mut x = a % n;
    while x != 1 {
        x = x * (a % n) % n;
        k += 1;
    }
    Some(k)
}

pub fn is_primitive_root(b: u64, p: u64) -> bool {
    p >= 2 && !b.is_multiple_of(p) && order_mod(b, p) == Some(p - 1)
}

pub fn smallest_primitive_root(p: u64) -> Option<u64> {
    (1..p).find(|&b| is_primitive_root(b, p))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
