use super::closed::{quad_decomp, rsuv_split, QuadForm};
use super::CyclotomicInt;
use crate::error::{Error, Result};
use crate::Coeff;

fn int<T: Coeff>(n: u64, c: i64) -> CyclotomicInt<T> {
    CyclotomicInt::from_integer(n, T::from(c))
}

fn sign<T: Coeff>(z: &CyclotomicInt<T>, odd: bool) -> CyclotomicInt<T> {
    if odd {
        -z
    } else {
        z.clone()
    }
}

/// `a + b·i√3` in Z[ζ_6] with `i√3 = 2ζ − 1`, for `a + b` even after halving
/// when `half` is set.
fn eisenstein<T: Coeff>(a: i64, b: i64, half: bool) -> Result<CyclotomicInt<T>> {
    // a + b(2ζ − 1) = (a − b) + 2bζ
    let (c0, c1) = (a - b, 2 * b);
    let (c0, c1) = if half {
        if c0 % 2 != 0 {
            return Err(Error::Invariant(format!("({a} + {b}·i√3)/2 is not integral")));
        }
        (c0 / 2, c1 / 2)
    } else {
        (c0, c1)
    };
    Ok(CyclotomicInt::from_exponent_counts(
        6,
        [c0, c1, 0, 0, 0, 0].into_iter().map(T::from).collect(),
    ))
}

/// J(χ, χ) for the quadratic character, as a 1×1 table.
pub fn jacobi_table_order2<T: Coeff>(p: u64) -> Vec<Vec<CyclotomicInt<T>>> {
    let s = if ((p + 1) / 2) % 2 == 0 { 1 } else { -1 };
    vec![vec![int(2, s)]]
}

/// J(χ^i, χ^j) for 1 ≤ i, j ≤ 3, χ of order 4 with χ(g) = i.
pub fn jacobi_table_order4<T: Coeff>(p: u64, g: u64) -> Result<Vec<Vec<CyclotomicInt<T>>>> {
    let d = quad_decomp(p, QuadForm::SumOfTwoSquares, g)?;
    let f_odd = ((p - 1) / 4) % 2 == 1;
    let x = &int::<T>(4, d.x) + &CyclotomicInt::root(4, 1).scale(&T::from(d.y));
    let xb = x.conj();
    let m1 = int::<T>(4, -1);
    let e = |odd| sign(&int::<T>(4, 1), odd);
    Ok(vec![
        vec![sign(&x, f_odd), x.clone(), e(!f_odd)],
        vec![x.clone(), m1, xb.clone()],
        vec![e(!f_odd), xb.clone(), sign(&xb, f_odd)],
    ])
}

/// J(χ^i, χ^j) for 1 ≤ i, j ≤ 5, χ of order 6 with χ(g) = ζ_6.
pub fn jacobi_table_order6<T: Coeff>(p: u64, g: u64) -> Result<Vec<Vec<CyclotomicInt<T>>>> {
    let d = quad_decomp(p, QuadForm::XSquarePlus3YSquare, g)?;
    let (r, s, u, v) = rsuv_split(d.x, d.y);
    let f_odd = ((p - 1) / 6) % 2 == 1;
    let x = eisenstein::<T>(d.x, d.y, false)?;
    let uu = eisenstein::<T>(u, v, true)?;
    let rr = eisenstein::<T>(r, s, true)?;
    let (xb, ub, rb) = (x.conj(), uu.conj(), rr.conj());
    let m1 = int::<T>(6, -1);
    let e = |odd| sign(&int::<T>(6, 1), odd);
    let sx = sign(&x, f_odd);
    let sxb = sign(&xb, f_odd);
    Ok(vec![
        vec![sign(&uu, f_odd), x.clone(), sx.clone(), uu.clone(), e(!f_odd)],
        vec![x.clone(), rr, x.clone(), m1.clone(), ub.clone()],
        vec![sx, x.clone(), e(!f_odd), xb.clone(), sxb.clone()],
        vec![uu, m1, xb.clone(), rb, xb.clone()],
        vec![e(!f_odd), ub.clone(), sxb, xb, sign(&ub, f_odd)],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsums::CharContext;
    use crate::Cyclotomic64;

    fn against_context(table: &[Vec<Cyclotomic64>], ctx: &CharContext) {
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let (i, j) = (i as u64 + 1, j as u64 + 1);
                assert_eq!(
                    *entry,
                    ctx.jacobi_sum::<i64>(i, j),
                    "p = {}, g = {}, (i, j) = ({i}, {j})",
                    ctx.p,
                    ctx.g
                );
            }
        }
    }

    #[test]
    fn order2() {
        for p in [3u64, 5, 7, 11, 13, 101, 103] {
            let ctx = CharContext::new(p, 2, crate::arith::smallest_primitive_root(p).unwrap()).unwrap();
            against_context(&jacobi_table_order2(p), &ctx);
        }
    }

    #[test]
    fn order4_matches_direct_sums() {
        for p in [5u64, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 421] {
            let g = crate::arith::smallest_primitive_root(p).unwrap();
            let ctx = CharContext::new(p, 4, g).unwrap();
            against_context(&jacobi_table_order4(p, g).unwrap(), &ctx);
        }
    }

    #[test]
    fn order6_matches_direct_sums() {
        for p in [7u64, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 139, 151] {
            let g = crate::arith::smallest_primitive_root(p).unwrap();
            let ctx = CharContext::new(p, 6, g).unwrap();
            against_context(&jacobi_table_order6(p, g).unwrap(), &ctx);
        }
    }
}
