use num_bigint::BigInt;
use serde::Serialize;

use super::CyclotomicInt;
use crate::arith::{distinct_prime_factors, gcd, is_generator, is_prime, multiplicative_order, pow_mod};
use crate::cayley::{gen_set, CayleySpec};
use crate::error::{Error, Result};
use crate::Coeff;

/// Characters of order `n` mod `p` built from a generator `g`:
/// χ(g^k) = ζ_n^k.
#[derive(Debug, Clone)]
pub struct CharContext {
    pub p: u64,
    pub n: u64,
    pub g: u64,
    dlog: Vec<u32>,
    /// pairs[u·n + v] = #{c ∉ {0,1} : dlog(c) ≡ u, dlog(1−c) ≡ v (mod n)}.
    pairs: Vec<u64>,
}

impl CharContext {
    pub fn new(p: u64, n: u64, g: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::Input(format!("p = {p} is not an odd prime below 2^32")));
        }
        if n == 0 || (p - 1) % n != 0 {
            return Err(Error::Input(format!("character order {n} does not divide p-1 = {}", p - 1)));
        }
        if !is_generator(g, p, &distinct_prime_factors(p - 1)?) {
            return Err(Error::Input(format!("{g} does not generate (Z/{p}Z)*")));
        }
        let mut dlog = vec![0u32; p as usize];
        let mut x = 1u64;
        for k in 0..p - 1 {
            dlog[x as usize] = k as u32;
            x = x * (g % p) % p;
        }
        let nu = n as usize;
        let mut pairs = vec![0u64; nu * nu];
        for c in 2..p {
            let u = dlog[c as usize] as usize % nu;
            let v = dlog[(p + 1 - c) as usize] as usize % nu;
            pairs[u * nu + v] += 1;
        }
        Ok(CharContext { p, n, g: g % p, dlog, pairs })
    }

    /// Exponent k with χ(c) = ζ_n^k, or `None` for c ≡ 0.
    pub fn chi_exponent(&self, c: u64) -> Option<u64> {
        let c = c % self.p;
        (c != 0).then(|| self.dlog[c as usize] as u64 % self.n)
    }

    /// J(χ^i, χ^j) = Σ_{c+d=1} χ^i(c)·χ^j(d), with χ^0(0) = 1.
    pub fn jacobi_sum<T: Coeff>(&self, i: u64, j: u64) -> CyclotomicInt<T> {
        let n = self.n as usize;
        let (i, j) = (i as usize % n, j as usize % n);
        let mut counts = vec![0u64; n];
        for u in 0..n {
            for v in 0..n {
                let m = self.pairs[u * n + v];
                if m != 0 {
                    counts[(i * u + j * v) % n] += m;
                }
            }
        }
        // c = 0 and c = 1 contribute only through trivial characters.
        counts[0] += (i == 0) as u64 + (j == 0) as u64;
        CyclotomicInt::from_exponent_counts(self.n, counts.into_iter().map(|c| T::from(c as i64)).collect())
    }
}

/// The image of `a mod q` and the set B = {b ∈ ⟨β⟩ : b − 1 ∈ ⟨β⟩}.
#[derive(Debug, Clone, Serialize)]
pub struct BetaData {
    pub q: u64,
    pub beta: u64,
    pub n: u64,
    /// log[x] = j with β^j = x, for x in ⟨β⟩.
    #[serde(skip)]
    log: Vec<Option<u32>>,
    pub b_set: Vec<u64>,
}

impl BetaData {
    pub fn new(q: u64, beta: u64) -> Result<Self> {
        let beta = beta % q;
        let n = multiplicative_order(beta, q).ok_or_else(|| Error::Input(format!("{beta} is not a unit mod {q}")))?;
        if n % 2 != 0 || pow_mod(beta, n / 2, q) != q - 1 {
            return Err(Error::Precondition(format!("beta = {beta} has no power equal to -1 mod {q}")));
        }
        let mut log = vec![None; q as usize];
        let mut x = 1u64;
        for j in 0..n {
            log[x as usize] = Some(j as u32);
            x = x * beta % q;
        }
        let mut b_set: Vec<u64> = (0..q)
            .filter(|&b| log[b as usize].is_some() && log[((b + q - 1) % q) as usize].is_some())
            .collect();
        b_set.sort_unstable();
        Ok(BetaData { q, beta, n, log, b_set })
    }

    /// j with ψ(x) = ζ_n^j.
    pub fn psi_exponent(&self, x: u64) -> Option<u64> {
        self.log[(x % self.q) as usize].map(u64::from)
    }

    /// c_{i,j} = Σ_{b∈B} ψ(b)^{−i} ψ(1−b)^{−j}.
    pub fn coefficient<T: Coeff>(&self, i: u64, j: u64) -> CyclotomicInt<T> {
        let n = self.n;
        let mut counts = vec![T::zero(); n as usize];
        for &b in &self.b_set {
            let eb = self.psi_exponent(b).unwrap();
            let e1b = self.psi_exponent(self.q + 1 - b).unwrap();
            let e = (n * n * 2 - (i % n) * eb - (j % n) * e1b) % n;
            counts[e as usize] = counts[e as usize].clone() + T::one();
        }
        CyclotomicInt::from_exponent_counts(n, counts)
    }
}

/// |S_pq(a) ∩ (S_pq(a) + 1)| by set membership.
pub fn count_direct(p: u64, q: u64, a: u64) -> Result<u64> {
    let spec = CayleySpec::new(p, q, a)?;
    Ok(gen_set(spec.modulus(), spec.a)?.shift_intersection() as u64)
}

/// |S ∩ (S+1)| through the Jacobi-sum formula, evaluated exactly with
/// coefficients in `T`.
pub fn count_jacobi_with<T: Coeff>(p: u64, q: u64, a: u64) -> Result<u64> {
    let spec = CayleySpec::new(p, q, a)?;
    let bd = BetaData::new(q, spec.a % q)?;
    if bd.b_set.is_empty() {
        return Ok(0);
    }
    let n = bd.n;
    let ctx = CharContext::new(p, n, spec.a % p)?;
    let mut total = CyclotomicInt::from_integer(n, T::from(((p + 1) * bd.b_set.len() as u64) as i64));
    for i in 1..n {
        for j in (i..n).take_while(|&j| i + j < n) {
            let w = &bd.coefficient::<T>(i, j) * &ctx.jacobi_sum::<T>(i, j);
            let term = &w + &w.conj();
            total = if i == j { &total + &term } else { &(&total + &term) + &term };
        }
    }
    let value = total
        .as_integer()
        .ok_or_else(|| Error::Invariant(format!("formula value {total:?} is not a rational integer")))?;
    let n2 = T::from((n * n) as i64);
    if !(value.clone() % n2.clone()).is_zero() || value < T::zero() {
        return Err(Error::Invariant(format!("formula value {value:?} is negative or not divisible by n^2")));
    }
    (value / n2)
        .to_u64()
        .ok_or_else(|| Error::Invariant("count does not fit in u64".into()))
}

pub fn count_jacobi(p: u64, q: u64, a: u64) -> Result<u64> {
    count_jacobi_with::<BigInt>(p, q, a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mod6Prediction {
    pub delta: u8,
    pub epsilon: u8,
    pub residue: u8,
}

/// δ = [2 ∈ S], ε = [some element of S of order 6 lies in S + 1], and the
/// predicted residue 3δ + 2ε of the count mod 6.
pub fn mod6_predict(p: u64, q: u64, a: u64) -> Result<Mod6Prediction> {
    let spec = CayleySpec::new(p, q, a)?;
    let n = spec.modulus();
    let s = gen_set(n, spec.a)?;
    let ord = p - 1;
    let delta = s.contains(2) as u8;
    let epsilon = s
        .elements
        .iter()
        .enumerate()
        .any(|(j, &x)| ord / gcd(j as u64, ord) == 6 && s.contains((x + n - 1) % n)) as u8;
    Ok(Mod6Prediction {
        delta,
        epsilon,
        residue: (3 * delta + 2 * epsilon) % 6,
    })
}

/// Whether q has a Fermat prime factor ≥ 5 and a prime factor ≡ 3 (mod 4),
/// which forces the count to vanish.
pub fn fermat_vanishing(q: u64) -> Result<bool> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::Input(format!("q = {q} is not an odd integer >= 3")));
    }
    let primes = distinct_prime_factors(q)?;
    let fermat = |l: u64| l >= 5 && (l - 1).is_power_of_two() && (l - 1).trailing_zeros().is_power_of_two();
    Ok(primes.iter().any(|&l| fermat(l)) && primes.iter().any(|&l| l % 4 == 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cyclotomic64;

    #[test]
    fn direct_counts() {
        assert_eq!(count_direct(13, 5, 2).unwrap(), 3);
        assert_eq!(count_direct(421, 5, 2).unwrap(), 63);
        assert_eq!(count_direct(7, 3, 17).unwrap(), 2);
        assert!(count_direct(13, 5, 3).is_err());
    }

    #[test]
    fn jacobi_counts() {
        assert_eq!(count_jacobi(13, 5, 2).unwrap(), 3);
        assert_eq!(count_jacobi_with::<i64>(421, 5, 2).unwrap(), 63);
        assert_eq!(count_jacobi_with::<i128>(139, 7, 26).unwrap(), 26);
        for p in [7u64, 11, 19, 23, 31, 43, 47] {
            let a = crate::search::find_a(p, 3, None).unwrap()[0];
            assert_eq!(count_jacobi(p, 3, a).unwrap(), (p + 1) / 4, "p = {p}");
        }
    }

    #[test]
    fn beta_sets() {
        assert_eq!(BetaData::new(5, 2).unwrap().b_set, vec![2, 3, 4]);
        assert_eq!(BetaData::new(7, 3).unwrap().b_set, vec![2, 3, 4, 5, 6]);
        let b = BetaData::new(247, 69).unwrap();
        assert_eq!(b.n, 6);
        assert_eq!(b.b_set, vec![69, 247 + 1 - 69]);
        assert!(BetaData::new(5, 1).is_err());
        // ⟨−1⟩ = {1, 4} mod 5 contains no two consecutive residues.
        assert!(BetaData::new(5, 4).unwrap().b_set.is_empty());
        assert_eq!(BetaData::new(17, 3).unwrap().b_set, (2..17).collect::<Vec<u64>>());
    }

    #[test]
    fn trivial_character_rules() {
        let ctx = CharContext::new(13, 4, 2).unwrap();
        assert_eq!(ctx.jacobi_sum::<i64>(0, 0).as_integer(), Some(13));
        for i in 1..4 {
            assert!(ctx.jacobi_sum::<i64>(i, 0).is_zero());
            assert!(ctx.jacobi_sum::<i64>(0, i).is_zero());
            // J(χ^i, χ^{-i}) = −χ^i(−1)
            let chi_minus_one = Cyclotomic64::root(4, (i * ctx.chi_exponent(12).unwrap()) as i64);
            assert_eq!(ctx.jacobi_sum::<i64>(i, 4 - i), -chi_minus_one);
        }
    }

    #[test]
    fn mod6_on_smallest_case() {
        let m = mod6_predict(13, 5, 2).unwrap();
        assert_eq!((m.delta, m.epsilon, m.residue), (1, 0, 3));
    }

    #[test]
    fn fermat_cases() {
        for q in [35, 55, 95, 115, 119] {
            assert!(fermat_vanishing(q).unwrap(), "{q}");
        }
        for q in [5, 7, 17, 21, 25, 13 * 17] {
            assert!(!fermat_vanishing(q).unwrap(), "{q}");
        }
    }
}
