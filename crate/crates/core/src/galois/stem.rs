//! Exact arithmetic in a stem field `K = Q[x]/(f)` and in `K[y]`.
//!
//! Elements of `K` are rational polynomials in the generator `theta`, reduced
//! below `deg f`. The second-level polynomials over `K` exist for one job:
//! extracting linear factors of `f` over `K` by gcd computations.

use crate::error::{domain, Error, Result};
use crate::poly::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The stem field `Q[x]/(f)` for a monic `f` of positive degree. Callers are
/// responsible for irreducibility where field axioms matter (inverses of
/// nonzero elements).
#[derive(Debug, Clone)]
pub struct NumberField {
    modulus: RatPoly,
    modulus_z: IntPoly,
    degree: usize,
}

impl NumberField {
    pub fn new(f: &IntPoly) -> Result<Self> {
        if !f.is_monic() {
            return domain("stem field requires a monic modulus");
        }
        if f.deg() < 1 {
            return domain("stem field requires positive degree");
        }
        Ok(NumberField { modulus: f.to_rational(), modulus_z: f.clone(), degree: f.deg() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The defining monic integer polynomial.
    pub fn modulus_int(&self) -> &IntPoly {
        &self.modulus_z
    }

    /// The generator `theta` (the class of x).
    pub fn theta(&self) -> RatPoly {
        if self.degree == 1 {
            // x = -c in Q[x]/(x + c)
            RatPoly::constant(-self.modulus.coeff(0))
        } else {
            RatPoly::x()
        }
    }

    pub fn reduce(&self, a: &RatPoly) -> RatPoly {
        if a.degree().map_or(true, |d| d < self.degree) {
            return a.clone();
        }
        a.divrem(&self.modulus).1
    }

    pub fn add(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        a.add(b)
    }

    pub fn sub(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        a.sub(b)
    }

    pub fn mul(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        self.reduce(&a.mul(b))
    }

    /// Substitutes `inner` for the variable of `outer`, reduced mod `f`.
    /// This is how an automorphism `theta -> inner` acts on the element
    /// `outer(theta)`.
    pub fn substitute(&self, outer: &RatPoly, inner: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in outer.coeffs().iter().rev() {
            acc = self.reduce(&acc.mul(inner)).add(&RatPoly::constant(c.clone()));
        }
        self.reduce(&acc)
    }

    /// Same, with an integer outer polynomial.
    pub fn substitute_int(&self, outer: &IntPoly, inner: &RatPoly) -> RatPoly {
        self.substitute(&outer.to_rational(), inner)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm; errors on
    /// zero or (for a reducible modulus) on zero divisors.
    pub fn inverse(&self, a: &RatPoly) -> Result<RatPoly> {
        let a = self.reduce(a);
        if a.is_zero() {
            return domain("inverse of zero in the stem field");
        }
        let mut r0 = self.modulus.clone();
        let mut r1 = a;
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        if r0.degree() != Some(0) {
            return Err(Error::Domain(
                "element is a zero divisor; the modulus is not irreducible".into(),
            ));
        }
        let scale = r0.leading_coeff().recip();
        Ok(self.reduce(&t0.scale(&scale)))
    }
}

/// A polynomial in `y` with coefficients in `K`, canonical (no trailing zero
/// coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct KPoly {
    coeffs: Vec<RatPoly>,
}

impl KPoly {
    pub fn new(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
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

    pub fn coeff(&self, k: usize) -> RatPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn leading_coeff(&self) -> RatPoly {
        self.coeffs.last().cloned().unwrap_or_else(RatPoly::zero)
    }

    /// Embeds a rational polynomial in `y` with constant coefficients.
    pub fn from_rat_poly(f: &RatPoly) -> Self {
        KPoly::new(f.coeffs().iter().map(|c| RatPoly::constant(c.clone())).collect())
    }

    pub fn from_int_poly(f: &IntPoly) -> Self {
        KPoly::new(
            f.coeffs()
                .iter()
                .map(|c| RatPoly::constant(BigRational::from_integer(c.clone())))
                .collect(),
        )
    }

    /// `f(y + c)` for an integer polynomial `f` and a field element `c`.
    pub fn taylor_shift(f: &IntPoly, c: &RatPoly, field: &NumberField) -> Self {
        if f.is_zero() {
            return KPoly::zero();
        }
        let d = f.deg();
        // powers of c, reduced
        let mut powers: Vec<RatPoly> = Vec::with_capacity(d + 1);
        powers.push(RatPoly::one());
        for _ in 1..=d {
            let next = field.mul(powers.last().unwrap(), c);
            powers.push(next);
        }
        // binomial triangle
        let mut binom = vec![vec![BigInt::one()]];
        for j in 1..=d {
            let prev = &binom[j - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..j {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            binom.push(row);
        }
        let mut out = vec![RatPoly::zero(); d + 1];
        for (j, fj) in f.coeffs().iter().enumerate() {
            if fj.is_zero() {
                continue;
            }
            for k in 0..=j {
                // coefficient of y^k gains binom(j,k) * f_j * c^(j-k)
                let scalar = BigRational::from_integer(&binom[j][k] * fj);
                let term = powers[j - k].scale(&scalar);
                out[k] = out[k].add(&term);
            }
        }
        KPoly::new(out)
    }

    pub fn mul_coeff(&self, c: &RatPoly, field: &NumberField) -> Self {
        KPoly::new(self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    /// Division with remainder in `K[y]`; the divisor's leading coefficient
    /// must be invertible.
    pub fn divrem(&self, divisor: &Self, field: &NumberField) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return domain("division by the zero polynomial over K");
        }
        let d = divisor.deg();
        let lc_inv = field.inverse(&divisor.leading_coeff())?;
        let mut rem: Vec<RatPoly> = self.coeffs.clone();
        let mut quot = vec![RatPoly::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let q = field.mul(rem.last().unwrap(), &lc_inv);
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = field.mul(c, &q);
                    rem[k + i] = rem[k + i].sub(&t);
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = q;
            if rem.len() <= d {
                break;
            }
        }
        Ok((KPoly::new(quot), KPoly::new(rem)))
    }

    /// Monic gcd in `K[y]`.
    ///
    /// Internally runs on a common-denominator representation (integer
    /// numerators, one denominator per polynomial) with monic normalization
    /// after every remainder; naive rational Euclid squares coefficient
    /// sizes per step and is orders of magnitude slower.
    pub fn gcd(&self, other: &Self, field: &NumberField) -> Result<Self> {
        let mut a = FastKPoly::from_kpoly(self, field).into_monic(field)?;
        let mut b = FastKPoly::from_kpoly(other, field).into_monic(field)?;
        while !b.is_zero() {
            let r = a.rem_by_monic(&b);
            a = b;
            b = r.into_monic(field)?;
        }
        Ok(a.to_kpoly())
    }
}

/// Euclid workhorse: a polynomial over `K` held as integer-polynomial
/// numerators with one shared positive denominator, so multiplications stay
/// inside `Z[x]` (the field modulus is monic) and rational reductions happen
/// once per step instead of once per coefficient operation.
struct FastKPoly {
    nums: Vec<IntPoly>,
    den: BigInt,
    modulus: IntPoly,
}

impl FastKPoly {
    fn from_kpoly(p: &KPoly, field: &NumberField) -> Self {
        let modulus = field.modulus_int().clone();
        let mut den = BigInt::one();
        for c in &p.coeffs {
            for q in c.coeffs() {
                den = num_integer::lcm(den, q.denom().clone());
            }
        }
        let nums = p
            .coeffs
            .iter()
            .map(|c| {
                IntPoly::new(
                    c.coeffs()
                        .iter()
                        .map(|q| q.numer() * (&den / q.denom()))
                        .collect(),
                )
            })
            .collect();
        FastKPoly { nums, den, modulus }
    }

    fn to_kpoly(&self) -> KPoly {
        KPoly::new(
            self.nums
                .iter()
                .map(|n| {
                    RatPoly::new(
                        n.coeffs()
                            .iter()
                            .map(|c| BigRational::new(c.clone(), self.den.clone()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.nums.is_empty()
    }

    fn trim(&mut self) {
        while self.nums.last().map_or(false, |n| n.is_zero()) {
            self.nums.pop();
        }
    }

    /// Divides out the gcd of all numerator contents and the denominator,
    /// and makes the denominator positive.
    fn reduce(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for n in &self.nums {
            for c in n.coeffs() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() && !g.is_zero() {
            for n in self.nums.iter_mut() {
                *n = IntPoly::new(n.coeffs().iter().map(|c| c / &g).collect());
            }
            self.den = &self.den / &g;
        }
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for n in self.nums.iter_mut() {
                *n = n.neg();
            }
        }
    }

    /// Rescales to a monic leading coefficient. After this, the leading
    /// numerator is the constant `den`, so the leading coefficient in `K`
    /// is exactly 1.
    fn into_monic(mut self, field: &NumberField) -> Result<Self> {
        self.trim();
        if self.is_zero() {
            return Ok(self);
        }
        self.reduce();
        let lead = self.nums.last().unwrap().clone();
        if lead.degree() == Some(0) {
            // constant lead c/den: multiplying by den/c leaves nums/c
            self.den = lead.coeff(0);
            self.reduce();
            return Ok(self);
        }
        // integer Bezout data for the lead element: u * lead = d0 (mod f)
        let inv = field.inverse(&RatPoly::new(
            lead.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        ))?;
        let mut d0 = BigInt::one();
        for q in inv.coeffs() {
            d0 = num_integer::lcm(d0, q.denom().clone());
        }
        let u = IntPoly::new(inv.coeffs().iter().map(|q| q.numer() * (&d0 / q.denom())).collect());
        // (nums/den) * (den * u/d0) = nums * u / d0: the old den cancels
        let modulus = self.modulus.clone();
        let nums = self
            .nums
            .iter()
            .map(|n| n.mul(&u).divrem_by_monic(&modulus).expect("monic modulus").1)
            .collect();
        let mut out = FastKPoly { nums, den: d0, modulus };
        out.trim();
        out.reduce();
        debug_assert!(
            out.nums.last().map_or(false, |n| n.degree() == Some(0) && n.coeff(0) == out.den),
            "monic normalization must leave leading coefficient 1"
        );
        Ok(out)
    }

    /// Remainder of `self` by a monic divisor (leading numerator equals the
    /// divisor's denominator, i.e. leading coefficient 1 in `K`).
    fn rem_by_monic(&self, divisor: &FastKPoly) -> Self {
        let d = divisor.nums.len() - 1;
        let modulus = self.modulus.clone();
        let mut nums: Vec<IntPoly> = self.nums.clone();
        let mut den = self.den.clone();
        while nums.len() > d {
            let top = nums.last().unwrap().clone();
            if !top.is_zero() {
                let k = nums.len() - 1 - d;
                // A <- A - (top/den) * y^k * B over the common denominator
                // den * B.den: scale A's numerators by B.den, then subtract
                // top * m_i; the lead cancels since m_d = B.den.
                for n in nums.iter_mut() {
                    *n = n.scale(&divisor.den);
                }
                den *= &divisor.den;
                for (i, m) in divisor.nums.iter().enumerate() {
                    let t = top.mul(m).divrem_by_monic(&modulus).expect("monic modulus").1;
                    nums[k + i] = nums[k + i].sub(&t);
                }
                debug_assert!(nums.last().unwrap().is_zero());
            }
            nums.pop();
            while nums.last().map_or(false, |n| n.is_zero()) {
                nums.pop();
            }
        }
        let mut out = FastKPoly { nums, den, modulus };
        out.trim();
        out.reduce();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn field_arithmetic_in_q_i() {
        // K = Q[x]/(x^2+1)
        let field = NumberField::new(&ip(&[1, 0, 1])).unwrap();
        let theta = field.theta();
        // theta^2 = -1
        let sq = field.mul(&theta, &theta);
        assert_eq!(sq, RatPoly::constant(rat(-1)));
        // (1 + theta)^-1 = (1 - theta)/2
        let one_plus = RatPoly::new(vec![rat(1), rat(1)]);
        let inv = field.inverse(&one_plus).unwrap();
        assert_eq!(field.mul(&one_plus, &inv), RatPoly::one());
        assert_eq!(inv, RatPoly::new(vec![rat(1) / rat(2), rat(-1) / rat(2)]));
        assert!(field.inverse(&RatPoly::zero()).is_err());
    }

    #[test]
    fn substitution_acts_like_automorphism() {
        // K = Q[x]/(x^2+x+1); the conjugate of theta is -theta-1
        let field = NumberField::new(&ip(&[1, 1, 1])).unwrap();
        let conj = RatPoly::new(vec![rat(-1), rat(-1)]);
        // applying the conjugation twice returns theta
        let twice = field.substitute(&conj, &conj);
        assert_eq!(twice, field.theta());
        // f(conj) = 0 in K
        let image = field.substitute_int(&ip(&[1, 1, 1]), &conj);
        assert!(image.is_zero());
    }

    #[test]
    fn kpoly_gcd_extracts_linear_factor() {
        // over K = Q[x]/(x^2+1): gcd(y^2+1, y - theta) = y - theta
        let field = NumberField::new(&ip(&[1, 0, 1])).unwrap();
        let f = KPoly::from_int_poly(&ip(&[1, 0, 1]));
        let lin = KPoly::new(vec![field.theta().neg(), RatPoly::one()]);
        let g = f.gcd(&lin, &field).unwrap();
        assert_eq!(g.deg(), 1);
        assert_eq!(g.coeff(0), field.theta().neg());
    }

    #[test]
    fn taylor_shift_matches_direct_expansion() {
        // integer shift: f(y + 2) computable both ways
        let field = NumberField::new(&ip(&[1, 0, 1])).unwrap();
        let f = ip(&[1, -3, 0, 1]);
        let shifted = KPoly::taylor_shift(&f, &RatPoly::constant(rat(2)), &field);
        let direct = f.compose(&ip(&[2, 1]));
        for k in 0..=3 {
            assert_eq!(
                shifted.coeff(k),
                RatPoly::constant(BigRational::from_integer(direct.coeff(k)))
            );
        }
        // field-element shift: evaluate both sides at y = 0: f(c)
        let c = RatPoly::new(vec![rat(1), rat(2)]); // 1 + 2 theta
        let shifted = KPoly::taylor_shift(&f, &c, &field);
        let expect = field.substitute_int(&f, &c);
        assert_eq!(shifted.coeff(0), expect);
    }

    #[test]
    fn divrem_over_k() {
        let field = NumberField::new(&ip(&[1, 1, 1])).unwrap();
        // (y - theta)(y + theta + 1) = y^2 + y - theta^2 - theta = y^2 + y + 1...
        let a = KPoly::new(vec![field.theta().neg(), RatPoly::one()]);
        let b = KPoly::new(vec![field.theta().add(&RatPoly::one()), RatPoly::one()]);
        let prod_direct = {
            // schoolbook product of the two linear polynomials
            let c0 = field.mul(&a.coeff(0), &b.coeff(0));
            let c1 = field.add(
                &field.mul(&a.coeff(0), &b.coeff(1)),
                &field.mul(&a.coeff(1), &b.coeff(0)),
            );
            KPoly::new(vec![c0, c1, RatPoly::one()])
        };
        let (q, r) = prod_direct.divrem(&a, &field).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, b);
    }
}
