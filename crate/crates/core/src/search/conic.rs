use serde::Serialize;

use crate::arith::{crt, factor_pairs, gcd};
use crate::error::{Error, Result};

/// A point (z1, z2) modulo 12q for the Eisenstein class z1 + z2·ζ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConicSolution {
    pub q: u64,
    pub z1: u64,
    pub z2: u64,
}

fn conic(z1: u128, z2: u128, m: u128) -> u64 {
    ((z1 * z1 + z1 * z2 + z2 * z2 + 2 * z1 + z2 + 37) % m) as u64
}

/// The lexicographically first (Z1, Z2) over F_ℓ on
/// Z1² + Z1Z2 + Z2² + 2Z1 + Z2 + 37 = 0 with 2Z1 + Z2 + 37 ≠ 0 and a
/// nonvanishing partial derivative.
pub fn conic_point_mod(l: u64) -> Option<(u64, u64)> {
    let lw = l as u128;
    (0..l)
        .flat_map(|a| (0..l).map(move |b| (a, b)))
        .find(|&(a, b)| {
            let (a, b) = (a as u128, b as u128);
            conic(a, b, lw) == 0
                && (2 * a + b + 37) % lw != 0
                && ((2 * a + b + 2) % lw != 0 || (a + 2 * b + 1) % lw != 0)
        })
}

fn lift(l: u64, e: u32, (a, b): (u64, u64)) -> Option<(u64, u64)> {
    let lw = l as u128;
    if (2 * a as u128 + b as u128 + 2) % lw != 0 {
        let z1 = crate::arith::hensel_lift(
            a,
            l,
            e,
            |x, m| conic(x as u128, b as u128, m as u128),
            |x, m| ((2 * x as u128 + b as u128 + 2) % m as u128) as u64,
        )?;
        Some((z1, b))
    } else {
        let z2 = crate::arith::hensel_lift(
            b,
            l,
            e,
            |y, m| conic(a as u128, y as u128, m as u128),
            |y, m| ((a as u128 + 2 * y as u128 + 1) % m as u128) as u64,
        )?;
        Some((a, z2))
    }
}

/// A solution modulo 12q for q a product of primes ≡ 1 (mod 6): lifted
/// points modulo each prime power, combined by CRT together with
/// z1 ≡ 5, z2 ≡ 6 (mod 12).
pub fn conic_solve(q: u64) -> Result<ConicSolution> {
    if q < 7 {
        return Err(Error::Input(format!("q = {q} is not a product of primes = 1 mod 6")));
    }
    let factors = factor_pairs(q)?;
    if let Some((l, _)) = factors.iter().find(|(l, _)| l % 6 != 1) {
        return Err(Error::Input(format!("q = {q} has the prime factor {l}, which is not 1 mod 6")));
    }
    let (mut z1, mut z2, mut m) = (5u64, 6u64, 12u64);
    for (l, e) in factors {
        let pt = conic_point_mod(l).ok_or_else(|| Error::Invariant(format!("no smooth conic point mod {l}")))?;
        let (a, b) = lift(l, e, pt).ok_or_else(|| Error::Invariant(format!("Hensel lifting failed mod {l}^{e}")))?;
        let le = l.pow(e);
        z1 = crt(z1, m, a, le).expect("coprime moduli");
        z2 = crt(z2, m, b, le).expect("coprime moduli");
        m *= le;
    }
    let sol = ConicSolution { q, z1, z2 };
    check_conic_invariants(q, z1 as i64, z2 as i64).map_err(Error::Invariant)?;
    Ok(sol)
}

/// Conditions (i)-(iv) on z1 + z2·ζ; on failure the message names the first
/// one violated.
pub fn check_conic_invariants(q: u64, z1: i64, z2: i64) -> std::result::Result<(), String> {
    let (z1, z2, qi) = (z1 as i128, z2 as i128, q as i128);
    if z1.rem_euclid(2) != 1 || z2.rem_euclid(4) != 2 {
        return Err(format!("(i): z1 = {z1} must be odd and z2 = {z2} must be 2 mod 4"));
    }
    let h = z2 / 2;
    if (z1 + h).rem_euclid(3) != 2 || h.rem_euclid(3) != 0 {
        return Err(format!("(ii): z1 + z2/2 must be -1 mod 3 and z2/2 must be 0 mod 3 for ({z1}, {z2})"));
    }
    let n = z1 * z1 + z1 * z2 + z2 * z2;
    if gcd(n.rem_euclid(12 * qi) as u64, 12 * q) != 1 {
        return Err(format!("(iii): norm {n} shares a factor with {}", 12 * q));
    }
    let num = 2 * n + 2 + 4 * z1 + 2 * z2;
    if num.rem_euclid(36) != 0 || (num / 36 + 2).rem_euclid(qi) != 0 {
        return Err(format!("(iv): ({num})/36 is not an integer = -2 mod {q}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_field_points() {
        assert_eq!(conic_point_mod(13), Some((0, 1)));
        assert_eq!(conic(0, 14, 19), 0);
        assert_ne!((2 * 0 + 14 + 37) % 19, 0);
        assert_eq!(conic_point_mod(19), Some((0, 4)));
    }

    #[test]
    fn solutions_pass_invariants() {
        for q in [7u64, 13, 19, 31, 37, 49, 91, 169, 247, 7 * 13 * 19] {
            let s = conic_solve(q).unwrap();
            assert!(s.z1 < 12 * q && s.z2 < 12 * q);
            assert_eq!(check_conic_invariants(q, s.z1 as i64, s.z2 as i64), Ok(()));
        }
        assert_eq!(check_conic_invariants(247, 2717, 1002), Ok(()));
        assert!(check_conic_invariants(247, 2717, 1003).is_err());
    }

    #[test]
    fn rejects_other_primes() {
        for q in [5u64, 11, 35, 3 * 7, 1] {
            assert!(conic_solve(q).is_err(), "{q}");
        }
    }
}
