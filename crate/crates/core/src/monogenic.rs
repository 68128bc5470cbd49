//! Trinomial invariants, the closed-form discriminant, Dedekind's index
//! criterion, and the monogenicity oracle.
//!
//! A monic irreducible `f` is monogenic exactly when its index is 1, i.e. no
//! prime divides `[Z_K : Z[theta]]`. Only divisibility is ever decided here;
//! the field discriminant itself is never computed.

use crate::error::{domain, Error, Result};
use crate::integers::{factor_integer, is_squarefree, split_2_3, FactoredInteger};
use crate::modp::{factor_mod_p, reduce_mod_p, ModPoly};
use crate::poly::{discriminant, IntPoly};
use crate::zfactor::is_irreducible_over_q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const DEDEKIND_SEED: u64 = 0x6465_646b;

/// The trinomial `F_{n,a,b}(x) = x^(2n) + a x^n + b` with its derived
/// invariants. Construction enforces `n >= 1` and `ab != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trinomial {
    n: u64,
    a: BigInt,
    b: BigInt,
    r: u32,
    s: u32,
    m: u64,
    w: BigInt,
}

impl Trinomial {
    pub fn new(n: u64, a: BigInt, b: BigInt) -> Result<Self> {
        if n < 1 {
            return domain("trinomial requires n >= 1");
        }
        if a.is_zero() || b.is_zero() {
            return domain("trinomial requires a != 0 and b != 0");
        }
        let (r, s, m) = split_2_3(n);
        let disc_quad = &a * &a - BigInt::from(4) * &b;
        let g = if a.is_even() { BigInt::from(4) } else { BigInt::one() };
        let (w, rem) = disc_quad.div_rem(&g);
        // a even forces a^2 - 4b divisible by 4
        assert!(rem.is_zero(), "W integrality is guaranteed by construction");
        Ok(Trinomial { n, a, b, r, s, m, w })
    }

    pub fn from_i64(n: u64, a: i64, b: i64) -> Result<Self> {
        Trinomial::new(n, BigInt::from(a), BigInt::from(b))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// 2-adic valuation of `n`.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// 3-adic valuation of `n`.
    pub fn s(&self) -> u32 {
        self.s
    }

    /// The part of `n` coprime to 6.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// `W = (a^2 - 4b) / gcd(2, a)^2`.
    pub fn w(&self) -> &BigInt {
        &self.w
    }

    /// `a^2 - 4b`, the discriminant of the underlying quadratic.
    pub fn quadratic_discriminant(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(4) * &self.b
    }

    /// Product of the distinct primes dividing `n`; 1 for `n = 1`.
    pub fn rad_n(&self) -> u64 {
        let mut rad = 1u64;
        let mut m = self.n;
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                rad *= p;
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            rad *= m;
        }
        rad
    }

    /// `k = n / rad(n)`.
    pub fn k(&self) -> u64 {
        self.n / self.rad_n()
    }

    /// The defining polynomial `x^(2n) + a x^n + b`.
    pub fn polynomial(&self) -> IntPoly {
        IntPoly::power_trinomial(self.n, &self.a, &self.b)
    }

    /// The radical trinomial `F_{rad(n),a,b}`.
    pub fn radical_trinomial(&self) -> Trinomial {
        Trinomial::new(self.rad_n(), self.a.clone(), self.b.clone())
            .expect("radical of a valid trinomial is valid")
    }
}

/// Which computation paths produced a discriminant value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComputedBy {
    ClosedForm,
    Resultant,
    BothAgree,
}

/// Discriminant of a trinomial with its factored magnitude.
#[derive(Debug, Clone)]
pub struct DiscriminantReport {
    pub value: BigInt,
    /// Factored `|value|`; `None` exactly when the discriminant is 0
    /// (`a^2 = 4b`, the degenerate perfect-square case).
    pub magnitude_factored: Option<FactoredInteger>,
    pub computed_by: ComputedBy,
}

/// Degree bound up to which the resultant route cross-checks the closed form.
const DISCRIMINANT_CROSS_CHECK_DEGREE: u64 = 16;

/// Discriminant of `F_{n,a,b}` in closed form:
/// `n^(2n) * b^(n-1) * (a^2-4b)^n`, cross-checked against the resultant
/// convention `(-1)^(d(d-1)/2) Res(f, f')` whenever the degree is small
/// enough for both paths to run.
pub fn trinomial_discriminant(t: &Trinomial) -> Result<DiscriminantReport> {
    let n = t.n();
    let quad = t.quadratic_discriminant();
    let value = BigInt::from(n).pow(2 * n as u32)
        * t.b().pow(n as u32 - 1)
        * quad.pow(n as u32);
    let mut computed_by = ComputedBy::ClosedForm;
    if 2 * n <= DISCRIMINANT_CROSS_CHECK_DEGREE {
        let by_resultant = discriminant(&t.polynomial())?;
        if by_resultant != value {
            return Err(Error::Internal(format!(
                "discriminant routes disagree for (n,a,b) = ({}, {}, {}): closed form {value}, resultant {by_resultant}",
                n, t.a(), t.b()
            )));
        }
        computed_by = ComputedBy::BothAgree;
    }
    // factoring only touches n, b, a^2-4b, never the assembled product
    let magnitude_factored = if value.is_zero() {
        None
    } else {
        let mut factors = std::collections::BTreeMap::<num_bigint::BigUint, u32>::new();
        let mut absorb = |f: &FactoredInteger, scale: u32| {
            for (p, e) in f.factors() {
                *factors.entry(p.clone()).or_insert(0) += e * scale;
            }
        };
        if n > 1 {
            absorb(&factor_integer(&BigInt::from(n))?, 2 * n as u32);
            absorb(&factor_integer(t.b())?, n as u32 - 1);
        }
        absorb(&factor_integer(&quad)?, n as u32);
        let sign = if value.is_negative() {
            crate::integers::Sign::Negative
        } else {
            crate::integers::Sign::Positive
        };
        Some(FactoredInteger::new(sign, factors.into_iter().collect())?)
    };
    Ok(DiscriminantReport { value, magnitude_factored, computed_by })
}

/// Outcome of Dedekind's criterion at one prime, with the intermediate data
/// needed to replay the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindVerdict {
    pub prime: u64,
    pub divides_index: bool,
    /// Factorization of `f` mod p: monic irreducible factors with
    /// multiplicities.
    pub factorization: Vec<(ModPoly, u32)>,
    /// The product `g * h` of the canonical lifts, over `Z`.
    pub lifted_product: IntPoly,
    /// `T = ((g*h - f)/p) mod p`.
    pub residue: ModPoly,
    /// `gcd(T, gcd(g, h))` mod p; nonconstant exactly when p divides the
    /// index.
    pub final_gcd: ModPoly,
}

impl DedekindVerdict {
    /// Recomputes the verdict from the stored factorization and residue.
    pub fn replay(&self) -> bool {
        let p = self.residue.modulus();
        let mut g_bar = ModPoly::one(p);
        let mut h_bar = ModPoly::one(p);
        for (factor, e) in &self.factorization {
            g_bar = g_bar.mul(factor);
            for _ in 1..*e {
                h_bar = h_bar.mul(factor);
            }
        }
        let gcd_gh = g_bar.gcd(&h_bar);
        !self.residue.gcd(&gcd_gh).is_constant()
    }
}

/// Dedekind's criterion: does `p` divide the index `[Z_K : Z[theta]]` of the
/// monic irreducible `f`?
///
/// Factor `f = prod g_i^{e_i}` mod p, set `g = prod g_i` and `h = f/g`, lift
/// both to `Z[x]` with coefficients in `[0, p)`, and let
/// `T = (g*h - f)/p`. Then p divides the index iff
/// `gcd(T mod p, gcd(g, h) mod p)` is nonconstant.
pub fn dedekind_divides_index(f: &IntPoly, p: u64) -> Result<DedekindVerdict> {
    if !f.is_monic() {
        return domain("Dedekind's criterion requires a monic polynomial");
    }
    let f_bar = reduce_mod_p(f, p)?; // also validates primality of p
    if f_bar.degree() != f.degree() {
        return Err(Error::Internal("monic polynomial degenerated mod p".into()));
    }
    let (_, factorization) = factor_mod_p(&f_bar, DEDEKIND_SEED)?;
    let mut g_bar = ModPoly::one(p);
    let mut h_bar = ModPoly::one(p);
    for (factor, e) in &factorization {
        g_bar = g_bar.mul(factor);
        for _ in 1..*e {
            h_bar = h_bar.mul(factor);
        }
    }
    let g = g_bar.lift();
    let h = h_bar.lift();
    let gh = g.mul(&h);
    let t_num = gh.sub(f);
    let big_p = BigInt::from(p);
    let t = IntPoly::new(
        t_num
            .coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&big_p);
                debug_assert!(r.is_zero(), "g*h = f mod p by construction");
                q
            })
            .collect(),
    );
    let t_bar = reduce_mod_p(&t, p)?;
    let gcd_gh = g_bar.gcd(&h_bar);
    let final_gcd = t_bar.gcd(&gcd_gh);
    Ok(DedekindVerdict {
        prime: p,
        divides_index: !final_gcd.is_constant(),
        factorization,
        lifted_product: gh,
        residue: t_bar,
        final_gcd,
    })
}

/// Monogenicity of a monic irreducible polynomial, decided through index
/// divisibility: every prime whose square divides the discriminant is tested
/// with Dedekind's criterion. The certificate lists every tested prime.
pub fn is_monogenic(f: &IntPoly) -> Result<(bool, Vec<DedekindVerdict>)> {
    if !f.is_monic() {
        return domain("monogenicity is defined for monic polynomials");
    }
    if !is_irreducible_over_q(f)? {
        return domain("monogenicity is defined for irreducible polynomials");
    }
    if f.deg() == 1 {
        return Ok((true, Vec::new()));
    }
    let disc = discriminant(f)?;
    let factored = factor_integer(&disc).map_err(|e| match e {
        Error::Budget(msg) => Error::Budget(format!("discriminant not factorable: {msg}")),
        other => other,
    })?;
    let candidates: Vec<u64> = factored
        .factors()
        .iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| {
            p.to_u64()
                .ok_or_else(|| Error::Budget(format!("prime {p} too large for Dedekind testing")))
        })
        .collect::<Result<_>>()?;
    verdicts_over(f, &candidates)
}

/// Monogenicity of an irreducible trinomial, with candidate primes taken from
/// the closed-form discriminant support `n * b * (a^2 - 4b)` so the full
/// discriminant is never factored. The caller vouches for irreducibility.
pub fn is_monogenic_trinomial_unchecked(t: &Trinomial) -> Result<(bool, Vec<DedekindVerdict>)> {
    let n = t.n();
    let quad = t.quadratic_discriminant();
    // multiplicity of p in the discriminant:
    //   2n*v_p(n) + (n-1)*v_p(b) + n*v_p(a^2-4b)
    let mut mult = std::collections::BTreeMap::<num_bigint::BigUint, u64>::new();
    let mut absorb = |f: &FactoredInteger, scale: u64| {
        for (p, e) in f.factors() {
            *mult.entry(p.clone()).or_insert(0) += *e as u64 * scale;
        }
    };
    if n > 1 {
        absorb(&factor_integer(&BigInt::from(n))?, 2 * n);
        absorb(&factor_integer(t.b())?, n - 1);
    }
    absorb(&factor_integer(&quad)?, n);
    let candidates: Vec<u64> = mult
        .into_iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| {
            p.to_u64()
                .ok_or_else(|| Error::Budget(format!("prime {p} too large for Dedekind testing")))
        })
        .collect::<Result<_>>()?;
    verdicts_over(&t.polynomial(), &candidates)
}

/// `is_monogenic` specialized to trinomials, including the irreducibility
/// check.
pub fn is_monogenic_trinomial(t: &Trinomial) -> Result<(bool, Vec<DedekindVerdict>)> {
    if !is_irreducible_over_q(&t.polynomial())? {
        return domain("monogenicity is defined for irreducible polynomials");
    }
    is_monogenic_trinomial_unchecked(t)
}

fn verdicts_over(f: &IntPoly, primes: &[u64]) -> Result<(bool, Vec<DedekindVerdict>)> {
    let mut verdicts = Vec::with_capacity(primes.len());
    let mut monogenic = true;
    for &p in primes {
        let v = dedekind_divides_index(f, p)?;
        monogenic &= !v.divides_index;
        verdicts.push(v);
    }
    Ok((monogenic, verdicts))
}

/// Why the power-compositional monogenicity test accepted or rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KkrReason {
    /// All three conditions hold.
    AllConditionsHold,
    /// Condition 1 fails: `b` is not squarefree.
    BNotSquarefree,
    /// Condition 2 fails: this prime divisor of `k` divides the index.
    IndexDivisibleAt(u64),
    /// Condition 3 fails: the radical trinomial is not monogenic.
    RadicalNotMonogenic,
}

/// Monogenicity of `F_{n,a,b}` for `n = 2^r 3^s` outside `{1,2,3,6}`, decided
/// through the power-compositional reduction `F_{n,a,b}(x) =
/// F_{rad(n),a,b}(x^k)` with `k = n/rad(n) > 1`. Requires the trinomial to be
/// irreducible. The reported reason is the first failing condition:
/// (1) `b` squarefree, (2) no prime divisor of `k` divides the index,
/// (3) the radical trinomial is monogenic.
pub fn kkr_monogenic(t: &Trinomial) -> Result<(bool, KkrReason)> {
    if t.m() != 1 || matches!(t.n(), 1 | 2 | 3 | 6) {
        return domain("power-compositional test requires n = 2^r 3^s outside {1, 2, 3, 6}");
    }
    let k = t.k();
    debug_assert!(k > 1);
    if !is_irreducible_over_q(&t.polynomial())? {
        return domain("power-compositional test requires an irreducible trinomial");
    }
    if !is_squarefree(t.b()) {
        return Ok((false, KkrReason::BNotSquarefree));
    }
    let f = t.polynomial();
    let mut qs: Vec<u64> = Vec::new();
    if k % 2 == 0 {
        qs.push(2);
    }
    if k % 3 == 0 {
        qs.push(3);
    }
    for q in qs {
        if dedekind_divides_index(&f, q)?.divides_index {
            return Ok((false, KkrReason::IndexDivisibleAt(q)));
        }
    }
    let radical = t.radical_trinomial();
    let (radical_monogenic, _) = is_monogenic_trinomial_unchecked(&radical)?;
    if !radical_monogenic {
        return Ok((false, KkrReason::RadicalNotMonogenic));
    }
    Ok((true, KkrReason::AllConditionsHold))
}
