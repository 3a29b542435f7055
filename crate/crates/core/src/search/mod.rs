//! Admissible (p, q) pairs, canonical generators, the table search, prime
//! scans in the Gaussian and Eisenstein integers, and the conic solver.

mod conic;
mod quadratic;

use rayon::prelude::*;
use serde::Serialize;

pub use crate::arith::{factorize, is_prime};
pub use conic::{check_conic_invariants, conic_solve, ConicSolution};
pub use quadratic::{
    assemble_from_eisenstein, assemble_from_gaussian, scan_quadratic_primes, Assembly, QuadRing, QuadraticRingElt,
    ScanHit,
};

use crate::arith::{crt, factor_pairs, gcd, isqrt, mul_mod, pow_mod, smallest_primitive_root, two_adic_valuation};
use crate::charsums::{closed_form, count_direct, ClosedFormBranch};
use crate::error::{Error, Result};
use crate::feasibility::NeumaierParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePowerFactor {
    pub prime: u64,
    pub exponent: u32,
    /// 2-adic valuation of ℓ − 1.
    pub two_valuation: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissiblePQ {
    pub p: u64,
    pub q: u64,
    /// 2-adic valuation of p − 1.
    pub r: u32,
    pub factors: Vec<PrimePowerFactor>,
}

fn check_pq(p: u64, q: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Input(format!("p = {p} is not an odd prime")));
    }
    if q < 3 || q % 2 == 0 {
        return Err(Error::Input(format!("q = {q} is not an odd integer >= 3")));
    }
    if q % p == 0 {
        return Err(Error::Input(format!("p = {p} divides q = {q}")));
    }
    Ok(())
}

/// Present iff 2^r divides ℓ − 1 for every prime ℓ | q, where 2^r ∥ p − 1.
pub fn admissible(p: u64, q: u64) -> Result<Option<AdmissiblePQ>> {
    check_pq(p, q)?;
    let r = two_adic_valuation(p - 1);
    let factors: Vec<PrimePowerFactor> = factor_pairs(q)?
        .into_iter()
        .map(|(prime, exponent)| PrimePowerFactor {
            prime,
            exponent,
            two_valuation: two_adic_valuation(prime - 1),
        })
        .collect();
    Ok(factors.iter().all(|f| f.two_valuation >= r).then_some(AdmissiblePQ { p, q, r, factors }))
}

/// The smallest integer representative of a generator of ⟨a⟩ ⊂ (Z/pqZ)*,
/// where `a` has order p − 1.
pub fn canonical(a: u64, p: u64, q: u64) -> u64 {
    let n = p * q;
    let a = a % n;
    let mut best = a;
    let mut x = a;
    for i in 2..p - 1 {
        x = mul_mod(x, a, n);
        if x < best && gcd(i, p - 1) == 1 {
            best = x;
        }
    }
    best
}

/// Canonical generators `a` with a ≡ α (mod p) for the smallest primitive
/// root α and β = a mod q satisfying β^{(p−1)/2} ≡ −1 (mod q), one per
/// subgroup, ascending. With `beta` given, only that β is tried.
pub fn find_a(p: u64, q: u64, beta: Option<u64>) -> Result<Vec<u64>> {
    check_pq(p, q)?;
    let alpha = smallest_primitive_root(p)?;
    let half = (p - 1) / 2;
    let betas: Vec<u64> = match beta {
        Some(b) => vec![b % q],
        None => (1..q).collect(),
    };
    let mut out: Vec<u64> = betas
        .into_iter()
        .filter(|&b| gcd(b, q) == 1 && pow_mod(b, half, q) == q - 1)
        .map(|b| canonical(crt(alpha, p, b, q).expect("p and q are coprime"), p, q))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    Direct,
    Closed(ClosedFormBranch),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    pub q: u64,
    pub p: u64,
    pub a: u64,
    pub t: u64,
    pub lambda: u64,
    pub params: NeumaierParams,
    pub method: CountMethod,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchOutcome {
    pub rows: Vec<SearchRow>,
    /// Set when the search is provably empty.
    pub empty_reason: Option<String>,
}

/// |S ∩ (S+1)| by a closed form where one applies, else directly.
pub fn count_best(p: u64, q: u64, a: u64) -> Result<(u64, CountMethod)> {
    match closed_form(p, q, a)? {
        Some(c) => Ok((c.value, CountMethod::Closed(c.branch))),
        None => Ok((count_direct(p, q, a)?, CountMethod::Direct)),
    }
}

fn rows_for_prime(q: u64, p: u64) -> Result<Vec<SearchRow>> {
    if admissible(p, q)?.is_none() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    for a in find_a(p, q, None)? {
        let (lambda, method) = count_best(p, q, a)?;
        if (lambda + 2) % q != 0 {
            continue;
        }
        let t = (lambda + 2) / q;
        rows.push(SearchRow {
            q,
            p,
            a,
            t,
            lambda,
            params: NeumaierParams::new(t * p * q, p + lambda, lambda, 1, lambda + 2),
            method,
        });
    }
    Ok(rows)
}

/// All (p, a) with p ≤ p_max prime for which |S ∩ (S+1)| ≡ −2 (mod q),
/// ordered by (p, t, a).
pub fn search_triples(q: u64, p_max: u64) -> Result<SearchOutcome> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::Input(format!("q = {q} is not an odd integer >= 3")));
    }
    let primes: Vec<u64> = (3..=p_max).filter(|&p| q % p != 0 && is_prime(p)).collect();
    let per_prime: Vec<Vec<SearchRow>> = primes.par_iter().map(|&p| rows_for_prime(q, p)).collect::<Result<_>>()?;
    let mut rows: Vec<SearchRow> = per_prime.into_iter().flatten().collect();
    rows.sort_by_key(|r| (r.p, r.t, r.a));
    let empty_reason = (q % 3 == 0).then(|| {
        format!("q = {q} is a multiple of 3: the count is never -2 mod 3, so no triple exists")
    });
    if empty_reason.is_some() && !rows.is_empty() {
        return Err(Error::Invariant(format!("q = {q} produced rows despite 3 | q")));
    }
    Ok(SearchOutcome { rows, empty_reason })
}

/// p ≥ 18(q−2) + 8√(18(q−2)+16) + 31, decided in exact integer arithmetic.
pub fn above_strictness_bound(p: u64, q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let base = 18 * (q as u128 - 2);
    let (p, lin, rad) = (p as u128, base + 31, base + 16);
    p >= lin && (p - lin) * (p - lin) >= 64 * rad
}

/// The least p meeting [`above_strictness_bound`].
pub fn strictness_bound(q: u64) -> u64 {
    let base = 18 * (q - 2);
    let guess = base + 31 + 8 * (isqrt(base + 16) + 1);
    (base + 31..=guess).find(|&p| above_strictness_bound(p, q)).unwrap_or(guess)
}
