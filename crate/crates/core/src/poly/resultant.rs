//! Exact resultants and discriminants.
//!
//! Two independent routes are kept: a subresultant pseudo-remainder sequence
//! (the workhorse for larger degrees) and fraction-free Bareiss elimination on
//! the Sylvester matrix (the small-degree default and the cross-check).

use super::IntPoly;
use crate::error::{domain, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Degree above which the PRS route takes over from the Sylvester determinant.
const SYLVESTER_DEGREE_LIMIT: usize = 8;

/// Resultant of two nonzero integer polynomials.
///
/// Convention: `Res(f, g) = lc(f)^{deg g} * prod g(alpha)` over the roots of
/// `f`, so `Res(x-2, x-3) = -1`.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return domain("resultant of the zero polynomial");
    }
    if f.deg().max(g.deg()) <= SYLVESTER_DEGREE_LIMIT {
        resultant_sylvester(f, g)
    } else {
        resultant_prs(f, g)
    }
}

/// Resultant via fraction-free Bareiss elimination on the Sylvester matrix.
pub fn resultant_sylvester(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return domain("resultant of the zero polynomial");
    }
    let m = f.deg();
    let n = g.deg();
    if m == 0 {
        return Ok(f.leading_coeff().pow(n as u32));
    }
    if n == 0 {
        return Ok(g.leading_coeff().pow(m as u32));
    }
    let size = m + n;
    // Sylvester matrix: n rows of f's coefficients, m rows of g's,
    // descending-degree layout.
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    Ok(bareiss_determinant(mat))
}

/// Fraction-free determinant of a square matrix (Bareiss elimination).
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev; // exact by Bareiss' identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Resultant via the subresultant pseudo-remainder sequence.
pub fn resultant_prs(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return domain("resultant of the zero polynomial");
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    if a.deg() < b.deg() {
        if (a.deg() * b.deg()) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return Ok(sign * b.leading_coeff().pow(a.deg() as u32));
    }
    // Strip contents; fold them back in as cont(a)^deg(b) * cont(b)^deg(a).
    let ca = a.content().abs();
    let cb = b.content().abs();
    let a_neg = a.leading_coeff().is_negative();
    let b_neg = b.leading_coeff().is_negative();
    a = a.primitive_part();
    b = b.primitive_part();
    // sign contribution of the removed signs: (-1)^(deg b) for a's sign etc.
    if a_neg && b.deg() % 2 == 1 {
        sign = -sign;
    }
    if b_neg && a.deg() % 2 == 1 {
        sign = -sign;
    }
    let scale = ca.pow(b.deg() as u32) * cb.pow(a.deg() as u32);

    let mut g_coef = BigInt::one();
    let mut h_coef = BigInt::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b)?;
        if r.is_zero() {
            // common factor of positive degree
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &g_coef * h_coef.pow(delta);
        b = IntPoly::new(r.coeffs().iter().map(|c| c / &divisor).collect());
        debug_assert_eq!(b.mul(&IntPoly::constant(divisor.clone())), r, "inexact subresultant divide");
        g_coef = a.leading_coeff();
        h_coef = if delta == 0 {
            h_coef
        } else {
            // h <- g^delta / h^(delta-1), exact in the subresultant theory
            let num = g_coef.pow(delta);
            let den = h_coef.pow(delta - 1);
            &num / &den
        };
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg() as u32;
    let num = b.leading_coeff().pow(da);
    let den = h_coef.pow(da.saturating_sub(1));
    Ok(sign * scale * (&num / &den))
}

/// Discriminant of a nonconstant polynomial:
/// `(-1)^{d(d-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    match f.degree() {
        None | Some(0) => return domain("discriminant of a constant polynomial"),
        Some(_) => {}
    }
    let d = f.deg();
    if d == 1 {
        return Ok(BigInt::one());
    }
    let fp = f.derivative();
    if fp.is_zero() {
        // only in characteristic 0 when f is constant, unreachable here
        return domain("zero derivative");
    }
    let res = resultant(f, &fp)?;
    let lc = f.leading_coeff();
    let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(&signed / &lc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn resultant_examples() {
        // Res(x-2, x-3) = -1
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), BigInt::from(-1));
        // Res(x^2-1, x^2-4) = 9
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap(), BigInt::from(9));
        // Res(x^2+x+1, 2x+1) = 3 (2x2 Sylvester determinant oracle below)
        let f = p(&[1, 1, 1]);
        let fp = f.derivative();
        assert_eq!(resultant(&f, &fp).unwrap(), BigInt::from(3));
        // brute-force 3x3 Sylvester determinant for the same pair:
        // | 1 1 1 |
        // | 2 1 0 |
        // | 0 2 1 |
        let det = 1 * (1 * 1 - 0 * 2) - 1 * (2 * 1 - 0 * 0) + 1 * (2 * 2 - 1 * 0);
        assert_eq!(det, 3);
    }

    #[test]
    fn resultant_with_constants() {
        assert_eq!(resultant(&p(&[5]), &p(&[1, 2, 3])).unwrap(), BigInt::from(25));
        assert_eq!(resultant(&p(&[1, 2, 3]), &p(&[5])).unwrap(), BigInt::from(25));
        assert!(resultant(&IntPoly::zero(), &p(&[1])).is_err());
    }

    #[test]
    fn resultant_of_common_factor_is_zero() {
        let f = p(&[1, 1]).mul(&p(&[1, 0, 1]));
        let g = p(&[1, 1]).mul(&p(&[-3, 1]));
        assert_eq!(resultant_prs(&f, &g).unwrap(), BigInt::zero());
        assert_eq!(resultant_sylvester(&f, &g).unwrap(), BigInt::zero());
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> IntPoly {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
        IntPoly::from_i64(&coeffs)
    }

    #[test]
    fn prs_agrees_with_sylvester() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut tested = 0;
        while tested < 400 {
            let f = random_poly(&mut rng, 9);
            let g = random_poly(&mut rng, 9);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let a = resultant_prs(&f, &g).unwrap();
            let b = resultant_sylvester(&f, &g).unwrap();
            assert_eq!(a, b, "PRS vs Sylvester disagree on f={f}, g={g}");
            tested += 1;
        }
    }

    #[test]
    fn resultant_symmetry_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut tested = 0;
        while tested < 200 {
            let f = random_poly(&mut rng, 6);
            let g = random_poly(&mut rng, 6);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let fg = resultant(&f, &g).unwrap();
            let gf = resultant(&g, &f).unwrap();
            let expected = if (f.deg() * g.deg()) % 2 == 1 { -gf.clone() } else { gf.clone() };
            assert_eq!(fg, expected, "symmetry fails on f={f}, g={g}");
            tested += 1;
        }
    }

    #[test]
    fn discriminant_examples() {
        // quadratic: a^2 - 4b
        for (a, b) in [(1i64, 1i64), (4, 2), (-5, 5), (0, -7), (3, 2)] {
            let f = p(&[b, a, 1]);
            assert_eq!(discriminant(&f).unwrap(), BigInt::from(a * a - 4 * b));
        }
        assert_eq!(discriminant(&p(&[1, 1, 1])).unwrap(), BigInt::from(-3));
        assert_eq!(discriminant(&p(&[2, 0, 4, 0, 1])).unwrap(), BigInt::from(2048));
        assert!(discriminant(&p(&[3])).is_err());
    }

    #[test]
    fn discriminant_random_quadratics() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let a = rng.gen_range(-600i64..=600);
            let b = rng.gen_range(-600i64..=600);
            let f = p(&[b, a, 1]);
            assert_eq!(discriminant(&f).unwrap(), BigInt::from(a * a - 4 * b));
        }
    }

    #[test]
    fn discriminant_nonmonic_scaling() {
        // disc(ax^2+bx+c) = b^2-4ac
        let f = p(&[5, -3, 2]);
        assert_eq!(discriminant(&f).unwrap(), BigInt::from(9 - 40));
    }

    #[test]
    fn prs_handles_large_degree() {
        // degree above the Sylvester cutoff: check against Bareiss explicitly
        let f = p(&[1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1]); // x^10 - x^5 + 1
        let g = f.derivative();
        assert_eq!(resultant_prs(&f, &g).unwrap(), resultant_sylvester(&f, &g).unwrap());
    }
}
