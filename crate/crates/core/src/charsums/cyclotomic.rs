use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::Coeff;

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_n = (x^n − 1) / ∏_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let den = cyclotomic_polynomial(d);
        let dd = den.len() - 1;
        let mut quot = vec![0i64; num.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = num[i + dd];
            quot[i] = c;
            for (k, &b) in den.iter().enumerate() {
                num[i + k] -= c * b;
            }
        }
        debug_assert!(num.iter().all(|&c| c == 0));
        num = quot;
    }
    let phi = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, phi.clone());
    phi
}

/// An element of Z[ζ_n] in the power basis 1, ζ, …, ζ^{φ(n)−1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt<T> {
    n: u64,
    coeffs: Vec<T>,
}

fn reduce<T: Coeff>(n: u64, mut v: Vec<T>) -> Vec<T> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for d in (deg..v.len()).rev() {
        if v[d].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[d], T::zero());
        for (k, &b) in phi[..deg].iter().enumerate() {
            if b != 0 {
                v[d - deg + k] = v[d - deg + k].clone() - c.clone() * T::from(b);
            }
        }
    }
    v.resize(deg, T::zero());
    v
}

impl<T: Coeff> CyclotomicInt<T> {
    pub fn zero(n: u64) -> Self {
        let deg = cyclotomic_polynomial(n).len() - 1;
        CyclotomicInt {
            n,
            coeffs: vec![T::zero(); deg],
        }
    }

    pub fn from_integer(n: u64, c: T) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    pub fn one(n: u64) -> Self {
        Self::from_integer(n, T::one())
    }

    /// ζ_n^j for any integer j.
    pub fn root(n: u64, j: i64) -> Self {
        let mut counts = vec![T::zero(); n as usize];
        counts[j.rem_euclid(n as i64) as usize] = T::one();
        Self::from_exponent_counts(n, counts)
    }

    /// Σ_j counts[j]·ζ_n^j, where `counts` has length n.
    pub fn from_exponent_counts(n: u64, counts: Vec<T>) -> Self {
        assert_eq!(counts.len() as u64, n, "exponent vector length must equal the order");
        CyclotomicInt {
            n,
            coeffs: reduce(n, counts),
        }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<T> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut counts = vec![T::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            counts[(n - j) % n] = c.clone();
        }
        Self::from_exponent_counts(self.n, counts)
    }

    pub fn scale(&self, c: &T) -> Self {
        CyclotomicInt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// z·z̄, a totally real element; an integer for abelian norms such as |J|².
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.n, other.n, "mixed cyclotomic orders {} and {}", self.n, other.n);
    }
}

impl<T: Coeff> Add<&CyclotomicInt<T>> for &CyclotomicInt<T> {
    type Output = CyclotomicInt<T>;
    fn add(self, rhs: &CyclotomicInt<T>) -> CyclotomicInt<T> {
        self.check_order(rhs);
        CyclotomicInt {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Coeff> Sub<&CyclotomicInt<T>> for &CyclotomicInt<T> {
    type Output = CyclotomicInt<T>;
    fn sub(self, rhs: &CyclotomicInt<T>) -> CyclotomicInt<T> {
        self.check_order(rhs);
        CyclotomicInt {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Coeff> Mul<&CyclotomicInt<T>> for &CyclotomicInt<T> {
    type Output = CyclotomicInt<T>;
    fn mul(self, rhs: &CyclotomicInt<T>) -> CyclotomicInt<T> {
        self.check_order(rhs);
        let d = self.coeffs.len();
        let mut prod = vec![T::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
            }
        }
        CyclotomicInt {
            n: self.n,
            coeffs: reduce(self.n, prod),
        }
    }
}

impl<T: Coeff> Neg for &CyclotomicInt<T> {
    type Output = CyclotomicInt<T>;
    fn neg(self) -> CyclotomicInt<T> {
        self.scale(&-T::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<T: Coeff> $tr for CyclotomicInt<T> {
            type Output = CyclotomicInt<T>;
            fn $f(self, rhs: Self) -> Self {
                (&self).$f(&rhs)
            }
        }
        impl<T: Coeff> $tr<&CyclotomicInt<T>> for CyclotomicInt<T> {
            type Output = CyclotomicInt<T>;
            fn $f(self, rhs: &Self) -> Self {
                (&self).$f(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Coeff> Neg for CyclotomicInt<T> {
    type Output = CyclotomicInt<T>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for CyclotomicInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => c.to_string(),
                1 => format!("{c}*z{}", self.n),
                _ => format!("{c}*z{}^{j}", self.n),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl<T: Coeff> fmt::Debug for CyclotomicInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[z{}]{:?}", self.n, self.coeffs)
    }
}
