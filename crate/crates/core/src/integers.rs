//! Arbitrary-precision integer utilities: factorization, squarefree testing,
//! the radical, and nonnegative residues.
//!
//! Factorization here is deliberately small-scale: every integer this crate
//! factors is an input coefficient or a divisor of `n`, `b`, or `a^2 - 4b`.
//! Trial division up to a fixed bound followed by a seeded Brent rho covers
//! that range with room to spare.

use crate::error::{budget, domain, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;
const RHO_STEP_BUDGET: u64 = 50_000_000;

/// Sign of a nonzero integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Positive,
}

/// A nonzero integer in fully factored form: `sign * prod p_i^{e_i}` with the
/// primes strictly ascending. Zero is unrepresentable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    sign: Sign,
    factors: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    /// Builds a factored integer, validating ordering, primality of every
    /// listed prime, and positivity of exponents.
    pub fn new(sign: Sign, factors: Vec<(BigUint, u32)>) -> Result<Self> {
        for window in factors.windows(2) {
            if window[0].0 >= window[1].0 {
                return domain("factor list must have strictly ascending primes");
            }
        }
        for (p, e) in &factors {
            if *e == 0 {
                return domain("exponents must be at least 1");
            }
            if !is_prime(p) {
                return domain(format!("{p} is not prime"));
            }
        }
        Ok(FactoredInteger { sign, factors })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The `(prime, exponent)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Reconstructs the integer this factorization represents.
    pub fn value(&self) -> BigInt {
        let mut magnitude = BigUint::one();
        for (p, e) in &self.factors {
            magnitude *= p.pow(*e);
        }
        match self.sign {
            Sign::Positive => BigInt::from(magnitude),
            Sign::Negative => -BigInt::from(magnitude),
        }
    }

    /// Exponent of `p` in the factorization (0 when `p` does not divide it).
    pub fn multiplicity(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// True when every exponent is 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (p, _)| acc * p)
    }

    /// The distinct primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Deterministic Miller-Rabin primality test.
///
/// The witness set `{2,3,5,7,11,13,17,19,23,29,31,37}` is exact below
/// 3.3 * 10^24, which covers everything this artifact factors; beyond that it
/// is a fixed-base strong probable-prime test.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for w in WITNESSES {
        if *n == BigUint::from(w) {
            return true;
        }
        if (n % BigUint::from(w)).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for w in WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `is_prime` for machine-sized values.
pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of composite
/// odd `n`, or a budget error if the step budget runs out.
fn brent_rho(n: &BigUint, rng: &mut ChaCha8Rng) -> Result<BigUint> {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return Ok(two);
    }
    let mut steps: u64 = 0;
    loop {
        let c = BigUint::from(rng.gen_range(1u64..=u64::MAX)) % n;
        if c.is_zero() {
            continue;
        }
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(rng.gen_range(0u64..=u64::MAX)) % n;
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x >= y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                // cycle without a factor; restart with a new constant
                d = n.clone();
                break;
            }
            d = diff.gcd(n);
            steps += 1;
            if steps > RHO_STEP_BUDGET {
                return budget(format!("factorization of {n} exceeded the rho step budget"));
            }
        }
        if d != *n {
            return Ok(d);
        }
    }
}

fn factor_magnitude(mut m: BigUint) -> Result<Vec<(BigUint, u32)>> {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();

    // Trial division by 2, 3, then the 6k +/- 1 wheel up to the bound.
    let try_divisor = |d: u64, m: &mut BigUint, factors: &mut Vec<(BigUint, u32)>| {
        let big_d = BigUint::from(d);
        let mut e = 0u32;
        while (&*m % &big_d).is_zero() {
            *m /= &big_d;
            e += 1;
        }
        if e > 0 {
            factors.push((big_d, e));
        }
    };
    try_divisor(2, &mut m, &mut factors);
    try_divisor(3, &mut m, &mut factors);
    let mut d = 5u64;
    while d <= TRIAL_DIVISION_BOUND {
        if BigUint::from(d) * BigUint::from(d) > m {
            break;
        }
        try_divisor(d, &mut m, &mut factors);
        try_divisor(d + 2, &mut m, &mut factors);
        d += 6;
    }

    // Whatever remains is either 1, prime, or a composite with all prime
    // factors above the trial bound; split the latter recursively.
    if !m.is_one() {
        let mut stack = vec![m];
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f_6e74_7269);
        let mut large: Vec<BigUint> = Vec::new();
        while let Some(v) = stack.pop() {
            if is_prime(&v) {
                large.push(v);
            } else {
                let f = brent_rho(&v, &mut rng)?;
                let q = &v / &f;
                stack.push(f);
                stack.push(q);
            }
        }
        large.sort();
        let mut i = 0;
        while i < large.len() {
            let mut e = 1u32;
            while i + 1 < large.len() && large[i + 1] == large[i] {
                e += 1;
                i += 1;
            }
            factors.push((large[i].clone(), e));
            i += 1;
        }
    }

    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(factors)
}

/// Factors a nonzero integer into `sign * prod p_i^{e_i}`.
///
/// Deterministic: the rho stage is driven by a fixed internal seed and the
/// output is canonically ordered.
pub fn factor_integer(m: &BigInt) -> Result<FactoredInteger> {
    if m.is_zero() {
        return domain("cannot factor 0");
    }
    let sign = if m.is_negative() { Sign::Negative } else { Sign::Positive };
    let factors = factor_magnitude(m.magnitude().clone())?;
    Ok(FactoredInteger { sign, factors })
}

/// True iff no prime square divides `m`. By convention `is_squarefree(0)` is
/// false (every square divides 0) and `is_squarefree(+-1)` is true.
pub fn is_squarefree(m: &BigInt) -> bool {
    if m.is_zero() {
        return false;
    }
    if m.magnitude().is_one() {
        return true;
    }
    match factor_integer(m) {
        Ok(f) => f.is_squarefree(),
        Err(_) => unreachable!("factor_integer only fails on 0 or budget"),
    }
}

/// Product of the distinct primes dividing `m >= 1`; `radical(1) = 1` (the
/// empty product).
pub fn radical(m: &BigInt) -> Result<BigInt> {
    if !m.is_positive() {
        return domain("radical requires a positive integer");
    }
    Ok(BigInt::from(factor_integer(m)?.radical()))
}

/// The unique representative of `r` modulo `m` in `[0, m)`, for `m >= 2`.
pub fn mmod(r: &BigInt, m: &BigInt) -> Result<BigInt> {
    if *m < BigInt::from(2) {
        return domain("mmod modulus must be at least 2");
    }
    Ok(r.mod_floor(m))
}

/// `mmod` for machine-sized values; panics only if `m < 2`.
pub fn mmod_i64(r: i64, m: i64) -> i64 {
    assert!(m >= 2, "mmod modulus must be at least 2");
    r.rem_euclid(m)
}

/// 2-adic and 3-adic valuations of `n >= 1`, plus the cofactor coprime to 6.
pub fn split_2_3(n: u64) -> (u32, u32, u64) {
    assert!(n >= 1);
    let mut m = n;
    let mut r = 0u32;
    while m % 2 == 0 {
        m /= 2;
        r += 1;
    }
    let mut s = 0u32;
    while m % 3 == 0 {
        m /= 3;
        s += 1;
    }
    (r, s, m)
}

/// True when `m` is a perfect square (0 and 1 included); negative inputs are
/// never squares.
pub fn is_perfect_square(m: &BigInt) -> bool {
    if m.is_negative() {
        return false;
    }
    let root = m.magnitude().sqrt();
    &root * &root == *m.magnitude()
}

/// Euler's totient for machine-sized `n >= 1`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

/// Ascending prime iterator used by prime scans.
pub struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream { next: 2 }
    }
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let mut candidate = self.next;
        while !is_prime_u64(candidate) {
            candidate += 1;
        }
        self.next = candidate + 1;
        Some(candidate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn fi(m: i64) -> FactoredInteger {
        factor_integer(&big(m)).unwrap()
    }

    #[test]
    fn factor_small_values() {
        let f = fi(12);
        assert_eq!(f.sign(), Sign::Positive);
        assert_eq!(
            f.factors(),
            &[(BigUint::from(2u32), 2), (BigUint::from(3u32), 1)]
        );
        let f = fi(-45);
        assert_eq!(f.sign(), Sign::Negative);
        assert_eq!(
            f.factors(),
            &[(BigUint::from(3u32), 2), (BigUint::from(5u32), 1)]
        );
    }

    #[test]
    fn factor_power_of_two() {
        // oracle: repeated trial division by 2
        let mut m = 2048i64;
        let mut e = 0;
        while m % 2 == 0 {
            m /= 2;
            e += 1;
        }
        assert_eq!((m, e), (1, 11));
        let f = fi(2048);
        assert_eq!(f.factors(), &[(BigUint::from(2u32), 11)]);
    }

    #[test]
    fn factor_zero_is_rejected() {
        assert!(matches!(factor_integer(&BigInt::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn factor_units() {
        let f = fi(1);
        assert!(f.factors().is_empty());
        assert_eq!(f.value(), big(1));
        let f = fi(-1);
        assert_eq!(f.value(), big(-1));
    }

    #[test]
    fn factor_reconstructs() {
        for m in -300i64..=300 {
            if m == 0 {
                continue;
            }
            assert_eq!(fi(m).value(), big(m), "m = {m}");
        }
        // past the trial bound: force the rho stage
        let n = BigInt::from(1_000_003i64) * BigInt::from(1_000_033i64);
        assert_eq!(factor_integer(&n).unwrap().value(), n);
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&big(-3)));
        assert!(!is_squarefree(&big(0)));
        assert!(!is_squarefree(&big(12)));
        assert!(is_squarefree(&big(1)));
        assert!(is_squarefree(&big(-1)));
    }

    #[test]
    fn squarefree_matches_exponents() {
        for m in -200i64..=200 {
            if m == 0 || m == 1 || m == -1 {
                continue;
            }
            assert_eq!(is_squarefree(&big(m)), fi(m).is_squarefree(), "m = {m}");
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(&big(12)).unwrap(), big(6));
        assert_eq!(radical(&big(8)).unwrap(), big(2));
        assert_eq!(radical(&big(1)).unwrap(), big(1));
        assert!(radical(&big(0)).is_err());
        assert!(radical(&big(-4)).is_err());
    }

    #[test]
    fn radical_divides_and_is_idempotent() {
        for m in 1i64..=500 {
            let r = radical(&big(m)).unwrap();
            assert!(big(m).mod_floor(&r).is_zero(), "radical({m}) must divide {m}");
            assert_eq!(radical(&r).unwrap(), r, "radical idempotence at {m}");
        }
    }

    #[test]
    fn mmod_examples() {
        assert_eq!(mmod(&big(-5), &big(4)).unwrap(), big(3));
        assert_eq!(mmod(&big(7), &big(4)).unwrap(), big(3));
        assert_eq!(mmod(&big(8), &big(4)).unwrap(), big(0));
        assert!(mmod(&big(1), &big(1)).is_err());
    }

    #[test]
    fn mmod_properties() {
        for r in -50i64..=50 {
            for m in 2i64..=12 {
                let z = mmod(&big(r), &big(m)).unwrap();
                assert!(z >= big(0) && z < big(m));
                assert!((big(r) - &z).mod_floor(&big(m)).is_zero());
                assert_eq!(mmod(&z, &big(m)).unwrap(), z);
            }
        }
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_003));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(is_prime(&(BigUint::from(2u32).pow(61) - BigUint::one()))); // Mersenne
    }

    #[test]
    fn split_and_phi() {
        assert_eq!(split_2_3(96), (5, 1, 1));
        assert_eq!(split_2_3(1), (0, 0, 1));
        assert_eq!(split_2_3(70), (1, 0, 35));
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(24), 8);
        assert_eq!(euler_phi(576), 192);
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&big(0)));
        assert!(is_perfect_square(&big(1)));
        assert!(is_perfect_square(&big(144)));
        assert!(!is_perfect_square(&big(-4)));
        assert!(!is_perfect_square(&big(2)));
    }

    #[test]
    fn prime_stream_starts_correctly() {
        let ps: Vec<u64> = PrimeStream::new().take(8).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn invalid_factored_integer_is_rejected() {
        // unordered primes
        assert!(FactoredInteger::new(
            Sign::Positive,
            vec![(BigUint::from(3u32), 1), (BigUint::from(2u32), 1)]
        )
        .is_err());
        // composite entry
        assert!(FactoredInteger::new(Sign::Positive, vec![(BigUint::from(4u32), 1)]).is_err());
        // zero exponent
        assert!(FactoredInteger::new(Sign::Positive, vec![(BigUint::from(2u32), 0)]).is_err());
    }
}
