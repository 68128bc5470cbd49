//! Complete factorization of polynomials over prime fields `F_p`.
//!
//! Pipeline: squarefree decomposition (char-p aware), distinct-degree
//! splitting, then randomized equal-degree splitting driven by an explicit
//! seed. The output is canonically sorted, so callers see seed-independent
//! results. `p = 2` uses the additive-trace variant of equal-degree
//! splitting.

use crate::error::{domain, Error, Result};
use crate::integers::is_prime_u64;
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Dense polynomial over `F_p` with coefficients reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powm(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(p >= 2);
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        ModPoly::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return domain(format!("modulus mismatch: {} vs {}", self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n).map(|i| addm(self.coeff(i), other.coeff(i), self.p)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n).map(|i| subm(self.coeff(i), other.coeff(i), self.p)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = addm(out[i + j], mulm(a, b, self.p), self.p);
            }
        }
        ModPoly::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        ModPoly::new(self.p, self.coeffs.iter().map(|&a| mulm(a, c, self.p)).collect())
    }

    /// Monic rescaling of a nonzero polynomial.
    pub fn to_monic(&self) -> Self {
        assert!(!self.is_zero());
        let inv = invm(self.leading_coeff(), self.p);
        self.scale(inv)
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        debug_assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let d = divisor.deg();
        let lc_inv = invm(divisor.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let q = mulm(rem[rem.len() - 1], lc_inv, p);
            if q != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = subm(rem[k + i], mulm(c, q, p), p);
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
            quot[k] = q;
            if rem.len() <= d {
                break;
            }
        }
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.to_monic()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, (i as u64) % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = ModPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// `self^e mod modulus` with an arbitrary-precision exponent.
    pub fn pow_mod_big(&self, e: &num_bigint::BigUint, modulus: &Self) -> Self {
        let mut acc = ModPoly::one(self.p);
        let mut base = self.rem(modulus);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }

    /// Interprets coefficients at indices divisible by p as a p-th root
    /// (valid over the prime field, where Frobenius fixes constants).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let coeffs: Vec<u64> = self.coeffs.iter().step_by(p).copied().collect();
        ModPoly::new(self.p, coeffs)
    }

    /// Lifts to `Z[x]` with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lifts to `Z[x]` with coefficients in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self) -> IntPoly {
        let half = self.p / 2;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.p)
    }
}

/// Coefficientwise reduction of an integer polynomial mod a prime.
pub fn reduce_mod_p(f: &IntPoly, p: u64) -> Result<ModPoly> {
    if !is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    let big_p = BigInt::from(p);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&big_p);
            debug_assert!(!r.is_negative());
            r.to_u64().expect("residue fits in u64")
        })
        .collect();
    Ok(ModPoly::new(p, coeffs))
}

/// Squarefree decomposition over `F_p`, handling p-th power collapse.
/// Returns monic parts with their multiplicities; the product of
/// `part^mult` times the leading unit reconstructs the input.
pub fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    assert!(!f.is_zero());
    let f = f.to_monic();
    let mut out: Vec<(ModPoly, u32)> = Vec::new();
    sff_into(&f, 1, &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn sff_into(f: &ModPoly, scale: u32, out: &mut Vec<(ModPoly, u32)>) {
    if f.is_constant() {
        return;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = u(x^p); recurse on the p-th root with multiplicities scaled by p
        let u = f.pth_root();
        sff_into(&u, scale * f.p as u32, out);
        return;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.divrem(&c).0;
    let mut i: u32 = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if !z.is_constant() {
            out.push((z.to_monic(), i * scale));
        }
        w = y;
        c = c.divrem(&w).0;
        i += 1;
    }
    if !c.is_constant() {
        let u = c.pth_root();
        sff_into(&u, scale * f.p as u32, out);
    }
}

/// Distinct-degree decomposition of a squarefree monic polynomial: returns
/// `(product of all irreducible factors of degree d, d)` pairs.
pub fn distinct_degree_decomposition(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    assert!(f.is_monic());
    let p = f.p;
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut h = ModPoly::x(p); // x^(p^i) mod f, maintained incrementally
    let mut i = 0usize;
    while f.deg() >= 2 * (i + 1) {
        i += 1;
        h = h.pow_mod(p, &f);
        let g = h.sub(&ModPoly::x(p)).gcd(&f);
        if !g.is_constant() {
            out.push((g.clone(), i));
            f = f.divrem(&g).0;
            h = h.rem(&f);
        }
    }
    if !f.is_constant() {
        let d = f.deg();
        out.push((f, d));
    }
    out
}

/// Multiset of irreducible factor degrees of a squarefree monic polynomial,
/// ascending. Cheap: no equal-degree splitting involved.
pub fn squarefree_factor_degrees(f: &ModPoly) -> Vec<usize> {
    let mut degrees = Vec::new();
    for (g, d) in distinct_degree_decomposition(f) {
        for _ in 0..g.deg() / d {
            degrees.push(d);
        }
    }
    degrees.sort_unstable();
    degrees
}

/// Equal-degree splitting: factors a monic squarefree product of irreducibles
/// all of degree `d` into those irreducibles (Cantor-Zassenhaus; additive
/// trace variant for p = 2).
fn equal_degree_split(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let p = f.p;
    let splitter = loop {
        let t = random_poly(p, f.deg(), rng);
        if t.is_constant() {
            continue;
        }
        let g = if p == 2 {
            // trace map over F_{2^d}: t + t^2 + t^4 + ... + t^(2^(d-1))
            let mut acc = t.clone().rem(f);
            let mut term = t.clone().rem(f);
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                acc = acc.add(&term);
            }
            acc.gcd(f)
        } else {
            // t^((p^d - 1)/2) - 1
            let exp = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            let te = t.pow_mod_big(&exp, f);
            te.sub(&ModPoly::one(p)).gcd(f)
        };
        if !g.is_constant() && g.deg() < f.deg() {
            break g;
        }
    };
    let cofactor = f.divrem(&splitter).0;
    equal_degree_split(&splitter, d, rng, out);
    equal_degree_split(&cofactor, d, rng, out);
}

fn random_poly(p: u64, max_deg: usize, rng: &mut ChaCha8Rng) -> ModPoly {
    let deg = rng.gen_range(1..=max_deg.max(1));
    let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
    ModPoly::new(p, coeffs)
}

/// Complete factorization over `F_p`. Returns the leading unit and the monic
/// irreducible factors with multiplicities, canonically sorted (hence
/// seed-independent).
pub fn factor_mod_p(f: &ModPoly, seed: u64) -> Result<(u64, Vec<(ModPoly, u32)>)> {
    if f.is_zero() {
        return domain("cannot factor the zero polynomial");
    }
    let unit = f.leading_coeff();
    if f.is_constant() {
        return Ok((unit, Vec::new()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(ModPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for (prod, d) in distinct_degree_decomposition(&part) {
            let mut irreducibles = Vec::new();
            equal_degree_split(&prod, d, &mut rng, &mut irreducibles);
            for g in irreducibles {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((unit, factors))
}

/// Monic gcd of two polynomials over the same prime field.
pub fn gcd_mod_p(f: &ModPoly, g: &ModPoly) -> Result<ModPoly> {
    f.check_same_modulus(g)?;
    Ok(f.gcd(g))
}

/// True when the monic squarefree `f` is irreducible over `F_p` (used as a
/// self-test; full callers get this from `factor_mod_p`).
pub fn is_irreducible_mod_p(f: &ModPoly) -> bool {
    if f.is_constant() {
        return false;
    }
    let degrees = match squarefree_decomposition(f).as_slice() {
        [(g, 1)] if g.deg() == f.deg() => squarefree_factor_degrees(g),
        _ => return false,
    };
    degrees == [f.deg()]
}

#[allow(dead_code)]
pub(crate) fn error_is_domain(e: &Error) -> bool {
    matches!(e, Error::Domain(_))
}
