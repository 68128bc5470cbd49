//! Cyclotomic polynomials by exact division:
//! `Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d`.

use super::IntPoly;
use crate::error::{domain, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;

fn x_pow_minus_one(n: u64) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); n as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[n as usize] = BigInt::one();
    IntPoly::new(coeffs)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn cyclotomic_memo(n: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        IntPoly::from_i64(&[-1, 1])
    } else {
        let mut num = x_pow_minus_one(n);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_memo(d, memo);
            num = num.exact_div(&phi_d).expect("cyclotomic division is exact");
        }
        num
    };
    memo.insert(n, result.clone());
    result
}

/// The `N`-th cyclotomic polynomial, for `N >= 1`.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n < 1 {
        return domain("cyclotomic index must be at least 1");
    }
    let mut memo = HashMap::new();
    Ok(cyclotomic_memo(n, &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integers::euler_phi;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(9).unwrap(), p(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(
            cyclotomic(36).unwrap(),
            p(&[1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1])
        );
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn degree_is_phi() {
        for n in 1..=200u64 {
            assert_eq!(cyclotomic(n).unwrap().deg() as u64, euler_phi(n), "N = {n}");
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=200u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d).unwrap());
            }
            assert_eq!(prod, x_pow_minus_one(n), "N = {n}");
        }
    }
}
