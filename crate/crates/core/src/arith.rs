//! Word-sized modular arithmetic: powering, inverses, CRT, multiplicative
//! orders, primitive roots, square roots mod p, Cornacchia, and a
//! deterministic primality test / factorizer for `u64`.

use crate::error::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Reduces a signed integer into `0..m`.
#[inline]
pub fn rem_euclid(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Modular inverse, or `None` when `gcd(a, m) != 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(rem_euclid(old_s, m))
}

/// Combines `x ≡ r1 (mod m1)` and `x ≡ r2 (mod m2)` for coprime moduli.
/// Returns the residue modulo `m1 * m2`.
pub fn crt(r1: u64, m1: u64, r2: u64, m2: u64) -> Option<u64> {
    let m = m1 as u128 * m2 as u128;
    if m > u64::MAX as u128 {
        return None;
    }
    let inv = inv_mod(m1 % m2, m2)?;
    // x = r1 + m1 * ((r2 - r1) * inv mod m2)
    let diff = rem_euclid(r2 as i128 - r1 as i128, m2);
    let k = mul_mod(diff, inv, m2);
    Some(((r1 % m1) as u128 + m1 as u128 * k as u128) as u64 % m as u64)
}

/// 2-adic valuation. `n` must be nonzero.
pub fn two_adic_valuation(n: u64) -> u32 {
    n.trailing_zeros()
}

/// Euler's totient from a factorization given as `(prime, exponent)` pairs.
pub fn totient_from(factors: &[(u64, u32)]) -> u64 {
    factors
        .iter()
        .map(|&(l, e)| (l - 1) * l.pow(e - 1))
        .product()
}

/// Multiplicative order of `a` modulo `m`, or `None` if `a` is not a unit.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let phi = totient_from(&factor_pairs(m).ok()?);
    let mut order = phi;
    for (l, _) in factor_pairs(phi).ok()? {
        while order % l == 0 && pow_mod(a, order / l, m) == 1 {
            order /= l;
        }
    }
    Some(order)
}

/// Whether `g` generates `(Z/pZ)*`, given the distinct prime factors of `p - 1`.
pub fn is_generator(g: u64, p: u64, p_minus_1_primes: &[u64]) -> bool {
    let g = g % p;
    g != 0 && p_minus_1_primes.iter().all(|&l| pow_mod(g, (p - 1) / l, p) != 1)
}

/// The smallest primitive root modulo the prime `p`.
pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if p == 2 {
        return Ok(1);
    }
    let primes = distinct_prime_factors(p - 1)?;
    (2..p)
        .find(|&g| is_generator(g, p, &primes))
        .ok_or(Error::Input(format!("{p} has no primitive root")))
}

pub fn distinct_prime_factors(n: u64) -> Result<Vec<u64>> {
    Ok(factor_pairs(n)?.into_iter().map(|(l, _)| l).collect())
}

/// Legendre symbol `(a/p)` for an odd prime `p`, as -1, 0 or 1.
pub fn legendre(a: u64, p: u64) -> i32 {
    match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Tonelli-Shanks square root modulo an odd prime.
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if legendre(a, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let s = two_adic_valuation(p - 1);
    let q = (p - 1) >> s;
    let z = (2..p).find(|&z| legendre(z, p) == -1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Cornacchia: nonnegative `(x, y)` with `x² + d·y² = p` for a prime `p`.
pub fn cornacchia(d: u64, p: u64) -> Option<(u64, u64)> {
    if p == 2 && d == 1 {
        return Some((1, 1));
    }
    let neg_d = p - d % p;
    let mut r0 = sqrt_mod_prime(neg_d, p)?;
    if r0 <= p / 2 {
        r0 = p - r0;
    }
    let (mut a, mut b) = (p, r0);
    let bound = isqrt(p);
    while b > bound {
        (a, b) = (b, a % b);
    }
    let rest = p - b * b;
    if rest % d != 0 {
        return None;
    }
    let y2 = rest / d;
    let y = isqrt(y2);
    (y * y == y2).then_some((b, y))
}

pub fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x > 0 && x.checked_mul(x).map_or(true, |v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

/// Hensel-lifts a simple root `x0` of `f` modulo `l` to a root modulo `l^e`.
///
/// `f` and `df` evaluate the polynomial and its derivative modulo the given
/// modulus. Fails if the derivative vanishes at `x0` mod `l`.
pub fn hensel_lift(
    x0: u64,
    l: u64,
    e: u32,
    f: impl Fn(u64, u64) -> u64,
    df: impl Fn(u64, u64) -> u64,
) -> Option<u64> {
    let inv = inv_mod(df(x0 % l, l), l)?;
    let mut x = x0 % l;
    if f(x, l) != 0 {
        return None;
    }
    let mut modulus = l;
    for _ in 1..e {
        let next = modulus * l;
        // f(x) = modulus·t (mod next); x += modulus·s with t + s·f'(x0) ≡ 0 (mod l).
        let t = f(x, next) / modulus;
        let s = (l - mul_mod(t % l, inv, l)) % l;
        x += modulus * s;
        modulus = next;
    }
    Some(x)
}

const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = two_adic_valuation(n - 1);
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let (mut x, mut g, mut ys) = (0u64, 1u64, 0u64);
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn factor_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            out.push(p);
            factor_into(n / p, out);
            return;
        }
    }
    let d = (1..)
        .find_map(|c| pollard_brent(n, c))
        .expect("pollard rho finds a factor of a composite");
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factors with multiplicity, ascending. Defined for `2 <= n < 2^63`.
pub fn factorize(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::Input(format!("cannot factor {n}")));
    }
    if n >= 1 << 63 {
        return Err(Error::Input(format!("{n} exceeds the supported range 2^63")));
    }
    let mut out = Vec::new();
    factor_into(n, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// Factorization as ascending `(prime, exponent)` pairs.
pub fn factor_pairs(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 1 {
        return Ok(Vec::new());
    }
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for l in factorize(n)? {
        match pairs.last_mut() {
            Some((last, e)) if *last == l => *e += 1,
            _ => pairs.push((l, 1)),
        }
    }
    Ok(pairs)
}
