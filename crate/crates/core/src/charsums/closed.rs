use serde::Serialize;

use super::character::BetaData;
use crate::arith::{cornacchia, distinct_prime_factors, legendre, mul_mod, pow_mod, rem_euclid};
use crate::cayley::CayleySpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadForm {
    /// X² + Y²
    SumOfTwoSquares,
    /// X² + 3Y²
    XSquarePlus3YSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadDecomp {
    pub form: QuadForm,
    pub p: u64,
    pub x: i64,
    pub y: i64,
}

/// The representation of `p` by `form`, normalised relative to the generator `g`:
/// X²+Y²: x ≡ −(2/p) (mod 4), y ≡ x·g^{(p−1)/4} (mod p);
/// X²+3Y²: x ≡ −1 (mod 3), 3y ≡ (2g^{(p−1)/3} + 1)x (mod p).
pub fn quad_decomp(p: u64, form: QuadForm, g: u64) -> Result<QuadDecomp> {
    let (d, m) = match form {
        QuadForm::SumOfTwoSquares => (1, 4),
        QuadForm::XSquarePlus3YSquare => (3, 3),
    };
    if p < 5 || p % m != 1 {
        return Err(Error::Precondition(format!("p = {p} is not 1 mod {m}")));
    }
    let (x0, y0) = cornacchia(d, p).ok_or_else(|| Error::Precondition(format!("{p} is not x^2 + {d}y^2")))?;
    let (x0, y0) = (x0 as i64, y0 as i64);
    let mut candidates = vec![(x0, y0)];
    if d == 1 {
        candidates.push((y0, x0));
    }
    let root = pow_mod(g, (p - 1) / m, p);
    let ok = |x: i64, y: i64| -> bool {
        let (xm, ym) = (rem_euclid(x as i128, p), rem_euclid(y as i128, p));
        match form {
            QuadForm::SumOfTwoSquares => {
                x.rem_euclid(4) == (-legendre(2, p) as i64).rem_euclid(4) && ym == mul_mod(xm, root, p)
            }
            QuadForm::XSquarePlus3YSquare => {
                x.rem_euclid(3) == 2 && mul_mod(3, ym, p) == mul_mod((2 * root + 1) % p, xm, p)
            }
        }
    };
    let hits: Vec<(i64, i64)> = candidates
        .into_iter()
        .flat_map(|(x, y)| [(x, y), (-x, y), (x, -y), (-x, -y)])
        .filter(|&(x, y)| ok(x, y))
        .collect();
    match hits.as_slice() {
        [(x, y)] => Ok(QuadDecomp { form, p, x: *x, y: *y }),
        _ => Err(Error::Precondition(format!(
            "{} normalised representations of {p} for g = {g}; is g a generator?",
            hits.len()
        ))),
    }
}

/// (r, s, u, v) with 4p = r² + 3s² = u² + 3v², by the class of y mod 3.
pub fn rsuv_split(x: i64, y: i64) -> (i64, i64, i64, i64) {
    let out = match y.rem_euclid(3) {
        0 => (2 * x, 2 * y, 2 * x, 2 * y),
        1 => (-x + 3 * y, -x - y, -x - 3 * y, x - y),
        _ => (-x - 3 * y, x - y, -x + 3 * y, -x - y),
    };
    let four_p = 4 * (x * x + 3 * y * y);
    let (r, s, u, v) = out;
    assert_eq!(r * r + 3 * s * s, four_p, "r^2 + 3s^2 != 4p for ({x}, {y})");
    assert_eq!(u * u + 3 * v * v, four_p, "u^2 + 3v^2 != 4p for ({x}, {y})");
    out
}

fn exact_quotient(num: i64, den: i64, what: &str) -> Result<u64> {
    if num < 0 || num % den != 0 {
        return Err(Error::Precondition(format!("{what}: {num}/{den} is not a nonnegative integer")));
    }
    Ok((num / den) as u64)
}

/// 3(p + 1 + 2x ± 4y)/16 for q = 5, with +4y when β = 2 and −4y when β = −2.
pub fn closed_form_q5(p: u64, x: i64, y: i64, beta: u64) -> Result<u64> {
    if p % 8 != 5 {
        return Err(Error::Precondition(format!("p = {p} is not 5 mod 8")));
    }
    let sign = match beta % 5 {
        2 => 1,
        3 => -1,
        b => return Err(Error::Precondition(format!("beta = {b} is not +-2 mod 5"))),
    };
    exact_quotient(3 * (p as i64 + 1 + 2 * x + sign * 4 * y), 16, "q=5 closed form")
}

/// The q = 7 formula for β = 3. For β = −2 the same formula applies with y
/// replaced by −y.
pub fn closed_form_q7(p: u64, x: i64, y: i64, beta: u64) -> Result<u64> {
    if p % 12 != 7 {
        return Err(Error::Precondition(format!("p = {p} is not 7 mod 12")));
    }
    let y = match beta % 7 {
        3 => y,
        5 => -y,
        b => return Err(Error::Precondition(format!("beta = {b} is not 3 or -2 mod 7"))),
    };
    let p = p as i64;
    let num = match y.rem_euclid(3) {
        0 => 5 * p + 5 + 10 * x + 36 * y,
        1 => 5 * p + 5 + 40 * x + 60 * y,
        _ => 5 * p + 5 + 22 * x + 12 * y,
    };
    exact_quotient(num, 36, "q=7 closed form")
}

/// The formula for q > 7 built from primes ≡ 1 (mod 6), with β² = β − 1.
pub fn closed_form_n6(p: u64, x: i64, y: i64) -> Result<u64> {
    if p % 12 != 7 {
        return Err(Error::Precondition(format!("p = {p} is not 7 mod 12")));
    }
    let p = p as i64;
    let num = match y.rem_euclid(3) {
        0 => 2 * p + 2 + 4 * x,
        1 => 2 * p + 2 + 16 * x + 24 * y,
        _ => 2 * p + 2 + 16 * x - 24 * y,
    };
    exact_quotient(num, 36, "order-6 closed form")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormBranch {
    EmptyB,
    Q3,
    Q5BetaPlus2,
    Q5BetaMinus2,
    Q7Beta3,
    Q7BetaMinus2,
    Order6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedFormValue {
    pub value: u64,
    pub branch: ClosedFormBranch,
    pub decomp: Option<QuadDecomp>,
}

/// Picks the closed form matching β = a mod q, if one exists.
pub fn closed_form(p: u64, q: u64, a: u64) -> Result<Option<ClosedFormValue>> {
    let spec = CayleySpec::new(p, q, a)?;
    let (alpha, beta) = (spec.a % p, spec.a % q);
    let bd = BetaData::new(q, beta)?;
    let plain = |value, branch| Ok(Some(ClosedFormValue { value, branch, decomp: None }));
    if bd.b_set.is_empty() {
        return plain(0, ClosedFormBranch::EmptyB);
    }
    if q == 3 {
        return plain((p + 1) / 4, ClosedFormBranch::Q3);
    }
    let with = |value, branch, decomp| Ok(Some(ClosedFormValue { value, branch, decomp: Some(decomp) }));
    if q == 5 && (beta == 2 || beta == 3) {
        let d = quad_decomp(p, QuadForm::SumOfTwoSquares, alpha)?;
        let branch = if beta == 2 { ClosedFormBranch::Q5BetaPlus2 } else { ClosedFormBranch::Q5BetaMinus2 };
        return with(closed_form_q5(p, d.x, d.y, beta)?, branch, d);
    }
    if q == 7 && (beta == 3 || beta == 5) {
        let d = quad_decomp(p, QuadForm::XSquarePlus3YSquare, alpha)?;
        let branch = if beta == 3 { ClosedFormBranch::Q7Beta3 } else { ClosedFormBranch::Q7BetaMinus2 };
        return with(closed_form_q7(p, d.x, d.y, beta)?, branch, d);
    }
    let order6_q = q > 7 && distinct_prime_factors(q)?.iter().all(|l| l % 6 == 1);
    if order6_q && (beta * beta) % q == (beta + q - 1) % q {
        let d = quad_decomp(p, QuadForm::XSquarePlus3YSquare, alpha)?;
        return with(closed_form_n6(p, d.x, d.y)?, ClosedFormBranch::Order6, d);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompositions() {
        let d = quad_decomp(421, QuadForm::SumOfTwoSquares, 2).unwrap();
        assert_eq!((d.x, d.y), (-15, -14));
        let d = quad_decomp(139, QuadForm::XSquarePlus3YSquare, 2).unwrap();
        assert_eq!((d.x, d.y), (8, 5));
        let d = quad_decomp(817519, QuadForm::XSquarePlus3YSquare, 15).unwrap();
        assert_eq!((d.x, d.y), (254, 501));
        assert!(quad_decomp(19, QuadForm::SumOfTwoSquares, 2).is_err());
        // 3 is not a generator mod 13, so no normalisation is unique.
        assert!(quad_decomp(13, QuadForm::SumOfTwoSquares, 3).is_err());
    }

    #[test]
    fn p13_normalisation() {
        // All representations of 13 as x² + y², filtered by the congruences.
        let d = quad_decomp(13, QuadForm::SumOfTwoSquares, 2).unwrap();
        assert_eq!((d.x, d.y), (-3, 2));
        assert_eq!(closed_form_q5(13, d.x, d.y, 2).unwrap(), 3);
    }

    #[test]
    fn rsuv_examples() {
        assert_eq!(rsuv_split(8, 5), (-23, 3, 7, -13));
        assert_eq!(rsuv_split(2, 3), (4, 6, 4, 6));
        assert_eq!(rsuv_split(-1, 1), (4, 0, -2, -2));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_q5(421, -15, -14, 2).unwrap(), 63);
        assert_eq!(closed_form_q7(139, 8, 5, 3).unwrap(), 26);
        assert_eq!(closed_form_n6(817519, 254, 501).unwrap(), 45446);
        assert!(closed_form_q5(13, 3, -2, 2).is_err());
    }

    #[test]
    fn n6_branches_swap_under_y_sign() {
        for (x, y) in [(8i64, 5i64), (-1, 4), (5, 7), (2, 1)] {
            let p = 1000003u64; // only the residue mod 12 matters here
            let a = closed_form_n6(p, x, y).ok();
            let b = closed_form_n6(p, x, -y).ok();
            assert_eq!(a, b, "({x}, {y})");
        }
    }

    #[test]
    fn dispatcher() {
        let c = closed_form(421, 5, 2).unwrap().unwrap();
        assert_eq!((c.value, c.branch), (63, ClosedFormBranch::Q5BetaPlus2));
        let c = closed_form(139, 7, 836).unwrap().unwrap();
        assert_eq!((c.value, c.branch), (26, ClosedFormBranch::Q7Beta3));
        // 26 generates the same subgroup as 836 but is −2 mod 7.
        let c = closed_form(139, 7, 26).unwrap().unwrap();
        assert_eq!((c.value, c.branch), (26, ClosedFormBranch::Q7BetaMinus2));
        let c = closed_form(13, 5, 2).unwrap().unwrap();
        assert_eq!((c.value, c.branch), (3, ClosedFormBranch::Q5BetaPlus2));
        let c = closed_form(817519, 247, 22890547).unwrap().unwrap();
        assert_eq!((c.value, c.branch), (45446, ClosedFormBranch::Order6));
        // β = −1 leaves B empty; β of order 10 mod 11 has no closed form.
        for a in crate::search::find_a(31, 11, None).unwrap() {
            let c = closed_form(31, 11, a).unwrap();
            if a % 11 == 10 {
                assert_eq!(c.unwrap().branch, ClosedFormBranch::EmptyB);
            } else {
                assert!(c.is_none(), "a = {a}");
            }
        }
    }
}
