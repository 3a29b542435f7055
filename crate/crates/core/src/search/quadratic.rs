use std::fmt;

use serde::Serialize;

use super::canonical;
use crate::arith::{crt, distinct_prime_factors, gcd, is_generator, is_prime, isqrt, mul_mod, pow_mod, rem_euclid};
use crate::charsums::{closed_form_n6, closed_form_q5, closed_form_q7};
use crate::error::{Error, Result};
use crate::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadRing {
    /// Z[i]
    Gaussian,
    /// Z[ζ] with ζ a primitive sixth root of unity.
    Eisenstein,
}

/// c + d·i or c + d·ζ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticRingElt<T> {
    pub ring: QuadRing,
    pub c: T,
    pub d: T,
}

impl<T: Coeff> QuadraticRingElt<T> {
    pub fn new(ring: QuadRing, c: T, d: T) -> Self {
        QuadraticRingElt { ring, c, d }
    }

    pub fn norm(&self) -> T {
        let (c, d) = (self.c.clone(), self.d.clone());
        match self.ring {
            QuadRing::Gaussian => c.clone() * c + d.clone() * d,
            QuadRing::Eisenstein => c.clone() * c.clone() + c * d.clone() + d.clone() * d,
        }
    }

    pub fn conj(&self) -> Self {
        match self.ring {
            QuadRing::Gaussian => Self::new(self.ring, self.c.clone(), -self.d.clone()),
            // conj(ζ) = 1 − ζ
            QuadRing::Eisenstein => Self::new(self.ring, self.c.clone() + self.d.clone(), -self.d.clone()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "mixed quadratic rings");
        let (a, b, c, d) = (self.c.clone(), self.d.clone(), other.c.clone(), other.d.clone());
        match self.ring {
            QuadRing::Gaussian => Self::new(
                self.ring,
                a.clone() * c.clone() - b.clone() * d.clone(),
                a * d + b * c,
            ),
            // ζ² = ζ − 1
            QuadRing::Eisenstein => {
                let bd = b.clone() * d.clone();
                Self::new(self.ring, a.clone() * c.clone() - bd.clone(), a * d + b * c + bd)
            }
        }
    }

    /// Both coordinates agree modulo `m`.
    pub fn congruent_mod(&self, other: &Self, m: &T) -> bool {
        self.ring == other.ring
            && (self.c.clone() - other.c.clone()).is_multiple_of(m)
            && (self.d.clone() - other.d.clone()).is_multiple_of(m)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for QuadraticRingElt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.ring {
            QuadRing::Gaussian => "i",
            QuadRing::Eisenstein => "z",
        };
        if self.d.is_negative() {
            write!(f, "{}-{}{unit}", self.c, -self.d.clone())
        } else {
            write!(f, "{}+{}{unit}", self.c, self.d)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub pi: QuadraticRingElt<i64>,
    pub p: u64,
}

/// Every π ≡ z (mod m) with prime norm at most `norm_max`, ordered by norm
/// and then by (c, d).
pub fn scan_quadratic_primes(z: &QuadraticRingElt<i64>, m: u64, norm_max: u64) -> Result<Vec<ScanHit>> {
    if m == 0 {
        return Err(Error::Input("modulus must be positive".into()));
    }
    let zn = z.norm().unsigned_abs();
    if gcd(zn, m) != 1 {
        return Err(Error::Input(format!("class {z} has norm {zn}, not coprime to {m}")));
    }
    let mi = m as i64;
    let first = |r: i64, lo: i64| lo + (r - lo).rem_euclid(mi);
    let root = isqrt(norm_max) as i64;
    let d_max = match z.ring {
        QuadRing::Gaussian => root,
        // |d|·√3/2 ≤ √N
        QuadRing::Eisenstein => isqrt(4 * norm_max / 3) as i64 + 1,
    };
    let mut hits = Vec::new();
    let mut d = first(z.d, -d_max);
    while d <= d_max {
        // c (Gaussian) or c + d/2 (Eisenstein) lies in [−√N, √N].
        let (c_lo, c_hi) = match z.ring {
            QuadRing::Gaussian => (-root, root),
            QuadRing::Eisenstein => (-root - d.abs() / 2 - 1, root - d / 2 + 1),
        };
        let mut c = first(z.c, c_lo);
        while c <= c_hi {
            let pi = QuadraticRingElt::new(z.ring, c, d);
            let n = pi.norm();
            if n > 0 && (n as u64) <= norm_max && is_prime(n as u64) {
                hits.push(ScanHit { pi, p: n as u64 });
            }
            c += mi;
        }
        d += mi;
    }
    hits.sort_by_key(|h| (h.p, h.pi.c, h.pi.d));
    Ok(hits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assembly {
    pub q: u64,
    pub p: u64,
    pub x: i64,
    pub y: i64,
    pub alpha: u64,
    pub beta: u64,
    /// The CRT combination of α and β.
    pub a: u64,
    /// The smallest generator of ⟨a⟩.
    pub canonical_a: u64,
    pub predicted_count: u64,
}

fn first_generator(p: u64, ok: impl Fn(u64) -> bool) -> Result<u64> {
    let primes = distinct_prime_factors(p - 1)?;
    (2..p)
        .find(|&g| is_generator(g, p, &primes) && ok(g))
        .ok_or_else(|| Error::Invariant(format!("no generator mod {p} satisfies the branch congruence")))
}

fn finish(q: u64, p: u64, x: i64, y: i64, alpha: u64, beta: u64, predicted: u64) -> Result<Assembly> {
    if (predicted + 2) % q != 0 {
        return Err(Error::CongruenceFails {
            lambda: predicted,
            q,
            residue: predicted % q,
        });
    }
    let a = crt(alpha, p, beta, q).ok_or_else(|| Error::Input(format!("p = {p} and q = {q} are not coprime")))?;
    Ok(Assembly {
        q,
        p,
        x,
        y,
        alpha,
        beta,
        a,
        canonical_a: canonical(a, p, q),
        predicted_count: predicted,
    })
}

/// p = N(π), α with y ≡ x·α^{(p−1)/4} (mod p), β = 2, for π = x + y·i with
/// x ≡ 1 and y ≡ 2 (mod 4).
pub fn assemble_from_gaussian(pi: &QuadraticRingElt<i64>) -> Result<Assembly> {
    if pi.ring != QuadRing::Gaussian {
        return Err(Error::Input(format!("{pi} is not a Gaussian integer")));
    }
    let (x, y) = (pi.c, pi.d);
    if x.rem_euclid(4) != 1 || y.rem_euclid(4) != 2 {
        return Err(Error::Precondition(format!("{pi} needs x = 1 and y = 2 mod 4")));
    }
    let p = pi.norm() as u64;
    if !is_prime(p) || p % 5 == 0 {
        return Err(Error::Precondition(format!("norm {p} of {pi} is not a prime other than 5")));
    }
    let (xm, ym) = (rem_euclid(x as i128, p), rem_euclid(y as i128, p));
    let alpha = first_generator(p, |g| ym == mul_mod(xm, pow_mod(g, (p - 1) / 4, p), p))?;
    let predicted = closed_form_q5(p, x, y, 2)?;
    finish(5, p, x, y, alpha, 2, predicted)
}

/// The β used for Eisenstein assembly: 3 for q = 7, else the least β with
/// β² = β − 1 (mod q).
pub fn eisenstein_beta(q: u64) -> Result<u64> {
    if q == 7 {
        return Ok(3);
    }
    if q <= 7 || !distinct_prime_factors(q)?.iter().all(|l| l % 6 == 1) {
        return Err(Error::Input(format!("q = {q} is not 7 or a product of primes = 1 mod 6 above 7")));
    }
    (2..q)
        .find(|&b| (b * b) % q == (b + q - 1) % q)
        .ok_or_else(|| Error::Invariant(format!("no sixth root of unity mod {q}")))
}

/// π = c + dζ ↦ x = c + d/2, y = d/2; α with 3y ≡ (2α^{(p−1)/3} + 1)x
/// (mod p); β from [`eisenstein_beta`].
pub fn assemble_from_eisenstein(pi: &QuadraticRingElt<i64>, q: u64) -> Result<Assembly> {
    if pi.ring != QuadRing::Eisenstein {
        return Err(Error::Input(format!("{pi} is not an Eisenstein integer")));
    }
    if pi.d % 2 != 0 {
        return Err(Error::Precondition(format!("{pi} has odd ζ-coordinate")));
    }
    let beta = eisenstein_beta(q)?;
    let (x, y) = (pi.c + pi.d / 2, pi.d / 2);
    let p = pi.norm() as u64;
    if !is_prime(p) || p % 12 != 7 || q % p == 0 {
        return Err(Error::Precondition(format!("norm {p} of {pi} is not a prime = 7 mod 12 coprime to {q}")));
    }
    if x.rem_euclid(3) != 2 {
        return Err(Error::Precondition(format!("x = {x} is not -1 mod 3")));
    }
    let (xm, ym) = (rem_euclid(x as i128, p), rem_euclid(y as i128, p));
    let alpha = first_generator(p, |g| {
        let w = (2 * pow_mod(g, (p - 1) / 3, p) + 1) % p;
        mul_mod(3, ym, p) == mul_mod(w, xm, p)
    })?;
    let predicted = if q == 7 { closed_form_q7(p, x, y, 3)? } else { closed_form_n6(p, x, y)? };
    finish(q, p, x, y, alpha, beta, predicted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QuadElt;
    use proptest::prelude::*;

    #[test]
    fn gaussian_example() {
        let hits = scan_quadratic_primes(&QuadElt::new(QuadRing::Gaussian, 5, 6), 20, 500).unwrap();
        let hit = hits.iter().find(|h| h.p == 421).expect("421 in the class");
        assert_eq!((hit.pi.c, hit.pi.d), (-15, -14));
        let asm = assemble_from_gaussian(&hit.pi).unwrap();
        assert_eq!((asm.alpha, asm.a, asm.predicted_count), (2, 2, 63));
    }

    #[test]
    fn eisenstein_examples() {
        let hits = scan_quadratic_primes(&QuadElt::new(QuadRing::Eisenstein, 3, 10), 84, 200).unwrap();
        assert!(hits.iter().any(|h| (h.pi.c, h.pi.d, h.p) == (3, 10, 139)));
        let asm = assemble_from_eisenstein(&QuadElt::new(QuadRing::Eisenstein, 3, 10), 7).unwrap();
        assert_eq!((asm.p, asm.a, asm.canonical_a, asm.predicted_count), (139, 836, 26, 26));

        let pi = QuadElt::new(QuadRing::Eisenstein, 2717 - 2964, 1002);
        let asm = assemble_from_eisenstein(&pi, 247).unwrap();
        assert_eq!((asm.p, asm.x, asm.y), (817519, 254, 501));
        assert_eq!((asm.alpha, asm.beta, asm.a, asm.predicted_count), (15, 69, 22890547, 45446));
    }

    #[test]
    fn scan_rejects_shared_factors() {
        assert!(scan_quadratic_primes(&QuadElt::new(QuadRing::Gaussian, 1, 0), 2, 100).is_ok());
        assert!(scan_quadratic_primes(&QuadElt::new(QuadRing::Gaussian, 2, 0), 2, 100).is_err());
        assert!(scan_quadratic_primes(&QuadElt::new(QuadRing::Eisenstein, 3, 0), 12, 100).is_err());
    }

    #[test]
    fn scan_is_complete() {
        // Brute force over a generous box.
        for (ring, z, m) in [(QuadRing::Gaussian, (5i64, 6i64), 20u64), (QuadRing::Eisenstein, (3, 10), 84)] {
            let z = QuadElt::new(ring, z.0, z.1);
            let hits = scan_quadratic_primes(&z, m, 3000).unwrap();
            let mut brute = Vec::new();
            for d in -80i64..=80 {
                for c in -80i64..=80 {
                    let pi = QuadElt::new(ring, c, d);
                    let n = pi.norm() as u64;
                    if pi.congruent_mod(&z, &(m as i64)) && n <= 3000 && is_prime(n) {
                        brute.push((n, c, d));
                    }
                }
            }
            brute.sort();
            let got: Vec<_> = hits.iter().map(|h| (h.p, h.pi.c, h.pi.d)).collect();
            assert_eq!(got, brute);
        }
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(gauss: bool, a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in -1000i64..1000) {
            let ring = if gauss { QuadRing::Gaussian } else { QuadRing::Eisenstein };
            let (x, y) = (QuadElt::new(ring, a, b), QuadElt::new(ring, c, d));
            prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
            prop_assert_eq!(x.mul(&x.conj()), QuadElt::new(ring, x.norm(), 0));
        }
    }
}
