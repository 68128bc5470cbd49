//! Exact dense polynomial arithmetic over the integers and rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty list. Everything here has degree at most
//! a few hundred, so dense representation and schoolbook multiplication are
//! the right tools.

mod cyclotomic;
mod resultant;

pub use cyclotomic::cyclotomic;
pub use resultant::{discriminant, resultant, resultant_prs, resultant_sylvester};

use crate::error::{domain, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// The trinomial `x^{2n} + a x^n + b`.
    pub fn power_trinomial(n: u64, a: &BigInt, b: &BigInt) -> Self {
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); 2 * n + 1];
        coeffs[0] = b.clone();
        coeffs[n] += a;
        coeffs[2 * n] += BigInt::one();
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a known-nonzero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient; zero polynomial yields 0.
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder for a divisor with invertible (unit) leading
    /// coefficient; errors when the division would leave the integers.
    pub fn divrem_by_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return domain("division by the zero polynomial");
        }
        let lc = divisor.leading_coeff();
        if !(lc.is_one() || lc == BigInt::from(-1)) {
            return domain("divrem_by_monic requires a unit leading coefficient");
        }
        let d = divisor.deg();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = if lc.is_one() { rem[rem.len() - 1].clone() } else { -rem[rem.len() - 1].clone() };
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let idx = k + i;
                    let t = c * &factor;
                    rem[idx] -= t;
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact division; errors if `divisor` does not divide `self` in `Z[x]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return domain("division by the zero polynomial");
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.deg() < divisor.deg() {
            return domain("exact division with nonzero remainder");
        }
        let d = divisor.deg();
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let (q, r) = rem[rem.len() - 1].div_rem(&lc);
            if !r.is_zero() {
                return domain("exact division with nonzero remainder");
            }
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = c * &q;
                    rem[k + i] -= t;
                }
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return domain("exact division with nonzero remainder");
        }
        Ok(IntPoly::new(quot))
    }

    /// Pseudo-remainder: the `R` in `lc(g)^{deg f - deg g + 1} f = q g + R`.
    pub fn pseudo_rem(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return domain("pseudo-remainder by the zero polynomial");
        }
        if self.is_zero() || self.deg() < g.deg() {
            let e = self
                .degree()
                .map_or(g.deg() as i64 + 1, |df| g.deg() as i64 - df as i64 + 1)
                .max(0) as u32;
            // lc^e * f with no reduction steps needed
            return Ok(self.scale(&g.leading_coeff().pow(e)));
        }
        let delta = self.deg() - g.deg();
        let lc = g.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut steps_left = delta + 1;
        while rem.len() > g.deg() && !rem.is_empty() {
            let k = rem.len() - 1 - g.deg();
            let top = rem[rem.len() - 1].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (i, c) in g.coeffs.iter().enumerate() {
                let t = c * &top;
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            steps_left -= 1;
        }
        // pad the multiplier so exactly lc^{delta+1} was applied
        let mut out = IntPoly::new(rem);
        if steps_left > 0 {
            out = out.scale(&lc.pow(steps_left as u32));
        }
        Ok(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `g(x^k)` for `k >= 1`.
    pub fn compose_power(&self, k: u64) -> Result<Self> {
        if k < 1 {
            return domain("compose_power requires k >= 1");
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let k = k as usize;
        let mut out = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Ok(IntPoly::new(out))
    }

    /// Substitutes another polynomial: `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Content: gcd of the coefficients, with the sign of the leading
    /// coefficient; content of the zero polynomial is 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigUint::zero();
        for c in &self.coeffs {
            g = g.gcd(c.magnitude());
        }
        let g = BigInt::from(g);
        if self.leading_coeff().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Primitive part: `self / content`, normalized to positive leading
    /// coefficient. Zero maps to zero.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Upper bound on `|coefficient|` of every monic integer factor: the
    /// Mignotte-style bound `2^deg * ceil(l2-norm)`.
    pub fn mignotte_bound(&self) -> BigUint {
        assert!(!self.is_zero(), "mignotte bound of the zero polynomial");
        let norm_sq: BigUint = self
            .coeffs
            .iter()
            .map(|c| c.magnitude() * c.magnitude())
            .sum();
        let norm = norm_sq.sqrt() + BigUint::one();
        norm << self.deg()
    }

    /// Squared l2 norm of the coefficient vector.
    pub fn norm_sq(&self) -> BigUint {
        self.coeffs.iter().map(|c| c.magnitude() * c.magnitude()).sum()
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dense polynomial with exact rational coefficients, same canonical form as
/// [`IntPoly`]. Used for arithmetic in stem fields `Q[x]/(f)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RatPoly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn neg(&self) -> Self {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Division with remainder over the rationals; divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.deg();
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let q = rem[rem.len() - 1].clone() / lc.clone();
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = c * &q;
                    rem[k + i] -= t;
                }
            }
            rem.pop();
            quot[k] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Monic rescaling of a nonzero polynomial.
    pub fn to_monic(&self) -> Self {
        let lc = self.leading_coeff();
        assert!(!lc.is_zero());
        self.scale(&lc.recip())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Converts to an integer polynomial; errors if any denominator is not 1.
    pub fn to_int(&self) -> Result<IntPoly> {
        if !self.is_integral() {
            return domain("polynomial has non-integer coefficients");
        }
        Ok(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() { -c.clone() } else { c.clone() };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn multiply_example() {
        // (x^2+x+1)(x^2-x+1) = x^4+x^2+1
        assert_eq!(p(&[1, 1, 1]).mul(&p(&[1, -1, 1])), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn derivative_example() {
        assert_eq!(p(&[2, 0, 4, 0, 1]).derivative(), p(&[0, 8, 0, 4]));
    }

    #[test]
    fn evaluate_example() {
        assert_eq!(p(&[1, 1, 1]).eval(&BigInt::from(2)), BigInt::from(7));
    }

    #[test]
    fn exact_division() {
        let f = p(&[1, 2, 1]); // (x+1)^2
        let g = p(&[1, 1]);
        assert_eq!(f.exact_div(&g).unwrap(), g);
        assert!(p(&[1, 1, 1]).exact_div(&g).is_err());
        // non-monic exact divisor
        let h = p(&[2, 4]).mul(&p(&[3, 1]));
        assert_eq!(h.exact_div(&p(&[2, 4])).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        // lc(g)^{deg f - deg g + 1} f = q g + R
        let f = p(&[1, -3, 0, 2, 1]);
        let g = p(&[2, 0, 3]);
        let r = f.pseudo_rem(&g).unwrap();
        let e = (f.deg() - g.deg() + 1) as u32;
        let scaled = f.scale(&g.leading_coeff().pow(e));
        let diff = scaled.sub(&r);
        // diff must be divisible by g
        assert_eq!(diff.exact_div(&g).unwrap().mul(&g), diff);
        assert!(r.degree().map_or(true, |d| d < g.deg()));
    }

    #[test]
    fn compose_power_examples() {
        assert_eq!(p(&[1, 1, 1]).compose_power(3).unwrap(), p(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(p(&[1, -1, 1]).compose_power(2).unwrap(), p(&[1, 0, -1, 0, 1]));
        let f = p(&[3, 1, 4]);
        assert_eq!(f.compose_power(1).unwrap(), f);
        assert!(f.compose_power(0).is_err());
    }

    #[test]
    fn compose_power_is_multiplicative() {
        let g = p(&[2, -1, 0, 5]);
        for j in 1..=4u64 {
            for k in 1..=4u64 {
                assert_eq!(
                    g.compose_power(j * k).unwrap(),
                    g.compose_power(j).unwrap().compose_power(k).unwrap()
                );
            }
        }
    }

    #[test]
    fn power_trinomial_shape() {
        let f = IntPoly::power_trinomial(2, &BigInt::from(4), &BigInt::from(2));
        assert_eq!(f, p(&[2, 0, 4, 0, 1]));
        let g = IntPoly::power_trinomial(1, &BigInt::from(-1), &BigInt::from(1));
        assert_eq!(g, p(&[1, -1, 1]));
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p(&[-6, -12, -18]);
        assert_eq!(f.content(), BigInt::from(-6));
        assert_eq!(f.primitive_part(), p(&[1, 2, 3]));
        assert!(IntPoly::zero().content().is_zero());
    }

    #[test]
    fn mignotte_bound_examples() {
        let b1 = p(&[-1, 0, 1]).mignotte_bound();
        assert!(b1 >= BigUint::from(1u32));
        let b2 = p(&[1, 0, 1, 0, 1]).mignotte_bound();
        assert!(b2 >= BigUint::from(1u32));
        let b3 = p(&[2, 0, 4, 0, 1]).mignotte_bound();
        assert!(b3 >= BigUint::from(4u32));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[2, 0, -4, 0, 1]).to_string(), "x^4 - 4*x^2 + 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn rational_divrem() {
        let f = p(&[1, 1, 1]).to_rational();
        let g = p(&[1, 2]).to_rational();
        let (q, r) = f.divrem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree().map_or(true, |d| d < g.deg()));
    }
}
