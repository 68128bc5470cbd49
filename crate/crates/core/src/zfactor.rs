//! Exact factorization of integer polynomials.
//!
//! Pipeline: content extraction, squarefree decomposition over `Z`, reduction
//! mod a well-chosen small prime, complete factorization over `F_p`,
//! multifactor Hensel lifting past twice the Mignotte bound, then subset
//! recombination with early-abort tests. Recombination is exponential in the
//! modular factor count; a hard trial cap turns pathological inputs into a
//! budget error instead of a hang.

use crate::error::{budget, domain, Result};
use crate::integers::PrimeStream;
use crate::modp::{factor_mod_p, gcd_mod_p, reduce_mod_p, squarefree_factor_degrees, ModPoly};
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const GOOD_PRIME_CANDIDATES: usize = 10;
const GCD_MODULAR_PROBES: usize = 25;
const MAX_RECOMBINATION_TRIALS: u64 = 1 << 22;
const FACTOR_SEED: u64 = 0x7a61_7373;

/// A complete factorization over `Z`: `content * prod factor_i^{mult_i}`
/// with primitive irreducible factors of positive leading coefficient,
/// canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl ZFactorization {
    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Gcd in `Z[x]`, normalized to positive leading coefficient.
///
/// The degree-0 fast path is certified modulo small primes; otherwise a
/// primitive pseudo-remainder sequence runs.
pub fn gcd_z(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return normalize_sign(g);
    }
    if g.is_zero() {
        return normalize_sign(f);
    }
    let content_gcd = f.content().gcd(&g.content());
    let mut a = f.primitive_part();
    let mut b = g.primitive_part();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return IntPoly::constant(content_gcd);
    }
    // A constant gcd mod any prime not dividing both leading coefficients
    // certifies coprimality of the primitive parts.
    let lc_prod = a.leading_coeff() * b.leading_coeff();
    let mut probes = 0;
    for p in PrimeStream::new() {
        if probes >= GCD_MODULAR_PROBES {
            break;
        }
        if (&lc_prod % BigInt::from(p)).is_zero() {
            continue;
        }
        probes += 1;
        let (am, bm) = (
            reduce_mod_p(&a, p).expect("prime from stream"),
            reduce_mod_p(&b, p).expect("prime from stream"),
        );
        if gcd_mod_p(&am, &bm).expect("same modulus").is_constant() {
            return IntPoly::constant(content_gcd);
        }
    }
    // primitive PRS
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).expect("nonzero divisor");
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part().scale(&content_gcd)
}

fn normalize_sign(f: &IntPoly) -> IntPoly {
    if f.leading_coeff().is_negative() {
        f.neg()
    } else {
        f.clone()
    }
}

/// Canonical factor order: degree-major, then coefficient-lexicographic.
fn canonical_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.coeffs().len().cmp(&b.coeffs().len()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Squarefree decomposition over `Z` of a primitive polynomial with positive
/// leading coefficient: returns `(part, multiplicity)` pairs whose product of
/// powers reconstructs the input.
fn squarefree_parts(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    debug_assert!(f.content().is_one());
    let mut out = Vec::new();
    let mut g = gcd_z(f, &f.derivative());
    let mut s = f.exact_div(&g).expect("gcd divides");
    let mut k = 1u32;
    while g.deg() >= 1 {
        let s_next = gcd_z(&s, &g);
        if s.deg() > s_next.deg() {
            out.push((s.exact_div(&s_next).expect("gcd divides"), k));
        }
        g = g.exact_div(&s_next).expect("gcd divides");
        s = s_next;
        k += 1;
    }
    if s.deg() >= 1 {
        out.push((s, k));
    }
    out
}

/// Picks a prime not dividing `lc(g)` with `g` squarefree mod p, minimizing
/// the modular factor count over the first few candidates. Returns the prime
/// and its factor count.
fn choose_prime(g: &IntPoly) -> (u64, usize) {
    let lc = g.leading_coeff();
    let mut best: Option<(u64, usize)> = None;
    let mut seen = 0;
    for p in PrimeStream::new() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gm = reduce_mod_p(g, p).expect("prime from stream").to_monic();
        if !gm.gcd(&gm.derivative()).is_constant() {
            continue; // p divides the discriminant
        }
        let count = squarefree_factor_degrees(&gm).len();
        if best.map_or(true, |(_, c)| count < c) {
            best = Some((p, count));
        }
        seen += 1;
        if seen >= GOOD_PRIME_CANDIDATES || count == 1 {
            break;
        }
    }
    best.expect("a squarefree integer polynomial is squarefree mod almost all primes")
}

// --- arithmetic on integer polynomials with coefficients reduced mod m ---

fn poly_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    poly_mod(&a.mul(b), m)
}

/// Division with remainder mod `m` by a monic divisor, so no inversions are
/// needed.
fn divrem_monic_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(b.is_monic());
    let d = b.deg();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(d)];
    while rem.len() > d {
        let k = rem.len() - 1 - d;
        let q = rem[rem.len() - 1].mod_floor(m);
        if !q.is_zero() {
            for (i, c) in b.coeffs().iter().enumerate() {
                let t = (&rem[k + i] - c * &q).mod_floor(m);
                rem[k + i] = t;
            }
        }
        rem.pop();
        while rem.last().map_or(false, |c| c.mod_floor(m).is_zero()) {
            rem.pop();
        }
        quot[k] = q;
    }
    (poly_mod(&IntPoly::new(quot), m), poly_mod(&IntPoly::new(rem), m))
}

/// Coefficients mapped to the symmetric range `(-m/2, m/2]`.
fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// One quadratic Hensel step: given `f = g h (mod m)` with `h` monic and
/// Bezout data `s g + t h = 1 (mod m)`, produce the same data mod `m^2`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = poly_mod(&f.sub(&g.mul(h)), m2);
    let (q, r) = divrem_monic_mod(&s.mul(&e), h, m2);
    let g1 = poly_mod(&g.add(&t.mul(&e)).add(&q.mul(g)), m2);
    let h1 = poly_mod(&h.add(&r), m2);
    let b = poly_mod(&s.mul(&g1).add(&t.mul(&h1)).sub(&IntPoly::one()), m2);
    let (c, d) = divrem_monic_mod(&s.mul(&b), &h1, m2);
    let s1 = poly_mod(&s.sub(&d), m2);
    let t1 = poly_mod(&t.sub(&t.mul(&b)).sub(&c.mul(&g1)), m2);
    (g1, h1, s1, t1)
}

/// Extended Euclid over `F_p`: returns `(s, t)` with `s u + t v = 1`.
fn bezout_mod_p(u: &ModPoly, v: &ModPoly) -> (ModPoly, ModPoly) {
    let p = u.modulus();
    let mut r0 = u.clone();
    let mut r1 = v.clone();
    let mut s0 = ModPoly::one(p);
    let mut s1 = ModPoly::zero(p);
    let mut t0 = ModPoly::zero(p);
    let mut t1 = ModPoly::one(p);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    assert!(r0.is_constant() && !r0.is_zero(), "bezout of non-coprime polynomials");
    let inv = ModPoly::one(p).divrem(&r0).0.leading_coeff();
    (s0.scale(inv), t0.scale(inv))
}

/// Lifts the monic factorization `target = prod factors (mod p)` to
/// `mod big_mod`, where `big_mod = p^(2^levels)`. `target` must be monic and
/// reduced mod `big_mod`.
fn lift_tree(
    target: &IntPoly,
    factors: &[ModPoly],
    p: u64,
    big_mod: &BigInt,
    levels: u32,
) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![target.clone()];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[ModPoly]| -> ModPoly { fs.iter().fold(ModPoly::one(p), |acc, f| acc.mul(f)) };
    let u0 = prod(left);
    let v0 = prod(right);
    let (s0, t0) = bezout_mod_p(&u0, &v0);
    let mut g = u0.lift();
    let mut h = v0.lift();
    let mut s = s0.lift();
    let mut t = t0.lift();
    let mut m = BigInt::from(p);
    for _ in 0..levels {
        let m2 = &m * &m;
        let f_here = poly_mod(target, &m2);
        let (g1, h1, s1, t1) = hensel_step(&f_here, &g, &h, &s, &t, &m2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    debug_assert_eq!(poly_mod(&g.mul(&h), big_mod), poly_mod(target, big_mod));
    let mut out = lift_tree(&poly_mod(&g, big_mod), left, p, big_mod, levels);
    out.extend(lift_tree(&poly_mod(&h, big_mod), right, p, big_mod, levels));
    out
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient into primitive irreducibles.
fn factor_squarefree_primitive(g: &IntPoly) -> Result<Vec<IntPoly>> {
    debug_assert!(g.content().is_one());
    if g.deg() == 1 {
        return Ok(vec![g.clone()]);
    }
    let (p, count) = choose_prime(g);
    if count == 1 {
        return Ok(vec![g.clone()]);
    }
    let gm = reduce_mod_p(g, p)?.to_monic();
    let (_, modular) = factor_mod_p(&gm, FACTOR_SEED)?;
    let modular: Vec<ModPoly> = modular.into_iter().map(|(f, _)| f).collect();

    // big_mod = p^(2^levels) > 2 * |lc| * Mignotte bound
    let lc = g.leading_coeff().abs();
    let needed = BigInt::from(2) * &lc * BigInt::from(g.mignotte_bound()) + 1;
    let mut big_mod = BigInt::from(p);
    let mut levels = 0u32;
    while big_mod < needed {
        big_mod = &big_mod * &big_mod;
        levels += 1;
    }
    // monic image of g mod big_mod
    let lc_inv = mod_inverse(&g.leading_coeff(), &big_mod)?;
    let target = poly_mod(&g.scale(&lc_inv), &big_mod);
    let mut active = lift_tree(&target, &modular, p, &big_mod, levels);
    active.sort_by(|a, b| canonical_order(a, b));

    // subset recombination
    let mut result: Vec<IntPoly> = Vec::new();
    let mut remaining = g.clone();
    let mut trials: u64 = 0;
    let mut card = 1usize;
    'outer: loop {
        if 2 * card > active.len() {
            break;
        }
        let mut combo: Vec<usize> = (0..card).collect();
        loop {
            trials += 1;
            if trials > MAX_RECOMBINATION_TRIALS {
                return budget("factor recombination exceeded the subset trial cap");
            }
            if let Some(found) = try_subset(&remaining, &active, &combo, &big_mod) {
                remaining = remaining.exact_div(&found).expect("verified divisor");
                result.push(found);
                // drop the used modular factors and restart this cardinality
                for &i in combo.iter().rev() {
                    active.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut combo, active.len()) {
                break;
            }
        }
        card += 1;
    }
    if remaining.deg() >= 1 {
        result.push(remaining.primitive_part());
    }
    result.sort_by(|a, b| canonical_order(a, b));
    Ok(result)
}

/// Tests one subset of lifted factors; returns the primitive true factor if
/// the subset corresponds to one.
fn try_subset(
    remaining: &IntPoly,
    active: &[IntPoly],
    combo: &[usize],
    big_mod: &BigInt,
) -> Option<IntPoly> {
    let lc = remaining.leading_coeff();
    // early abort: the candidate's constant term must divide lc * remaining(0)
    let g0 = remaining.coeff(0);
    if !g0.is_zero() {
        let mut t = lc.clone();
        for &i in combo {
            t = (t * active[i].coeff(0)).mod_floor(big_mod);
        }
        let t = symmetric(&IntPoly::constant(t), big_mod).coeff(0);
        if !t.is_zero() && !(&lc * &g0).mod_floor(&t.abs()).is_zero() {
            return None;
        }
    }
    let mut cand = IntPoly::constant(lc);
    for &i in combo {
        cand = mul_mod(&cand, &active[i], big_mod);
    }
    let cand = symmetric(&cand, big_mod);
    if cand.is_zero() {
        return None;
    }
    let h = cand.primitive_part();
    if h.deg() == 0 {
        return None;
    }
    match remaining.exact_div(&h) {
        Ok(_) => Some(h),
        Err(_) => None,
    }
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return domain(format!("{a} is not invertible mod {m}"));
    }
    Ok(e.x.mod_floor(m))
}

/// Factors a nonzero integer polynomial into its content and primitive
/// irreducible factors with multiplicities.
pub fn factor_over_z(f: &IntPoly) -> Result<ZFactorization> {
    if f.is_zero() {
        return domain("cannot factor the zero polynomial");
    }
    let content = f.content();
    let pp = f.primitive_part();
    if pp.deg() == 0 {
        return Ok(ZFactorization { content, factors: Vec::new() });
    }
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_parts(&pp) {
        for irr in factor_squarefree_primitive(&part)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| canonical_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(ZFactorization { content, factors })
}

/// True iff `factor_over_z` yields a single factor with multiplicity 1 and
/// unit content. Constants are not irreducible.
pub fn is_irreducible_over_q(f: &IntPoly) -> Result<bool> {
    if f.degree().map_or(true, |d| d == 0) {
        return Ok(false);
    }
    let z = factor_over_z(f)?;
    Ok(z.content.magnitude().is_one() && z.factors.len() == 1 && z.factors[0].1 == 1)
}
