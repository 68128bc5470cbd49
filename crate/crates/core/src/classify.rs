//! The classification of abelian monogenic trinomials as fast integer
//! predicates: membership in one of seven pairwise-disjoint parameter sets,
//! the structural filter on `n`, and the degree-2/4/6/12 base-case tests.
//!
//! `classify` runs on integer arithmetic alone (valuations, squarefree
//! checks, congruences, a perfect-square test) and never touches polynomial
//! factorization. `base_case_predicate` mirrors the degree-wise statements,
//! which are conditioned on irreducibility, so it does invoke the exact
//! factorization oracle.

use crate::error::{domain, Result};
use crate::group::GroupStructure;
use crate::integers::{is_perfect_square, is_squarefree, mmod, split_2_3};
use crate::monogenic::Trinomial;
use crate::poly::IntPoly;
use crate::zfactor::is_irreducible_over_q;
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;

/// Which sub-condition disqualified a triple (diagnostic detail for
/// `Rejection::FailsItemConditions`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailedCondition {
    /// n = 1: `W` is not squarefree.
    QuadraticWNotSquarefree,
    /// n = 1: `a^2 - 4b` is a perfect square, so the quadratic splits.
    QuadraticSplits,
    /// n = 1 with even `a`: `(a mod 4, b mod 4)` outside the allowed set.
    QuadraticCongruence,
    /// n = 2: not one of the three special quartic triples and `b != 1`.
    QuarticNoMatch,
    /// n = 2, b = 1: `a mod 4` outside `{0, 3}`.
    QuarticAMod4,
    /// n = 2, b = 1, `a mod 4` fine but `W` not squarefree.
    QuarticWNotSquarefree,
    /// n = 2^r with r >= 2: `(a, b)` is not `(-1, 1)`.
    TwoPowerNotMinusOneOne,
    /// n = 3^s with s >= 1: `(a, b)` is not `(+-1, 1)`.
    ThreePowerNotUnitPair,
    /// n = 2^r 3^s with r, s >= 1: `(a, b)` is not `(-1, 1)`.
    MixedNotMinusOneOne,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            FailedCondition::QuadraticWNotSquarefree => "W is not squarefree",
            FailedCondition::QuadraticSplits => "a^2 - 4b is a perfect square",
            FailedCondition::QuadraticCongruence => {
                "(a mod 4, b mod 4) not in {(0,1),(0,2),(2,2),(2,3)}"
            }
            FailedCondition::QuarticNoMatch => {
                "not one of (2,4,2), (2,-4,2), (2,-5,5) and b != 1"
            }
            FailedCondition::QuarticAMod4 => "a mod 4 not in {0, 3}",
            FailedCondition::QuarticWNotSquarefree => "W is not squarefree",
            FailedCondition::TwoPowerNotMinusOneOne => "(a, b) != (-1, 1)",
            FailedCondition::ThreePowerNotUnitPair => "(a, b) not in {(1,1), (-1,1)}",
            FailedCondition::MixedNotMinusOneOne => "(a, b) != (-1, 1)",
        };
        write!(f, "{text}")
    }
}

/// Why a triple is outside the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "code")]
pub enum Rejection {
    /// `n` has a prime factor at least 5, so the group cannot be abelian.
    NHasPrimeFactorGe5 { prime: u64 },
    /// `n` has the right shape but the item conditions fail.
    FailsItemConditions { detail: FailedCondition },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NHasPrimeFactorGe5 { prime } => {
                write!(f, "n has prime factor {prime} >= 5")
            }
            Rejection::FailsItemConditions { detail } => write!(f, "{detail}"),
        }
    }
}

/// Verdict of the classification: membership in one of the seven sets (with
/// the group in invariant-factor form) or a diagnosed rejection.
#[derive(Debug, Clone, PartialEq)]
pub enum Classification {
    Member { item: u8, group: GroupStructure, r: u32, s: u32 },
    Rejected { reason: Rejection },
}

impl Classification {
    pub fn is_member(&self) -> bool {
        matches!(self, Classification::Member { .. })
    }

    pub fn group(&self) -> Option<&GroupStructure> {
        match self {
            Classification::Member { group, .. } => Some(group),
            Classification::Rejected { .. } => None,
        }
    }
}

/// True iff `n >= 1` has no prime factor at least 5 (the structural filter:
/// abelian Galois groups force `n = 2^r 3^s`).
pub fn lemma_n_filter(n: u64) -> Result<bool> {
    if n < 1 {
        return domain("n must be at least 1");
    }
    Ok(split_2_3(n).2 == 1)
}

fn smallest_large_prime_factor(m: u64) -> u64 {
    let mut m = m;
    let mut p = 5u64;
    loop {
        if p * p > m {
            return m;
        }
        if m % p == 0 {
            return p;
        }
        while m % p == 0 {
            m /= p;
        }
        p += 2;
    }
}

fn mmod4(x: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    mmod(x, &BigInt::from(4)).expect("modulus 4").to_i64().expect("residue < 4")
}

fn is(x: &BigInt, v: i64) -> bool {
    *x == BigInt::from(v)
}

/// The conditions of set (1): quadratics. `W` squarefree, the quadratic does
/// not split, and for even `a` the congruence pair is one of the four
/// allowed ones. (For even `a`, the congruences already exclude the split
/// case `W = 1`; the perfect-square test is what excludes it for odd `a`.)
fn item1(t: &Trinomial) -> std::result::Result<(), FailedCondition> {
    if !is_squarefree(t.w()) {
        return Err(FailedCondition::QuadraticWNotSquarefree);
    }
    if is_perfect_square(&t.quadratic_discriminant()) {
        return Err(FailedCondition::QuadraticSplits);
    }
    if t.a().bit(0) {
        return Ok(()); // odd a: no congruence condition
    }
    let pair = (mmod4(t.a()), mmod4(t.b()));
    if matches!(pair, (0, 1) | (0, 2) | (2, 2) | (2, 3)) {
        Ok(())
    } else {
        Err(FailedCondition::QuadraticCongruence)
    }
}

/// Items applicable at n = 2: the three special quartic triples (item 2) or
/// the `b = 1` family (item 3).
fn item2or3(t: &Trinomial) -> std::result::Result<u8, FailedCondition> {
    let (a, b) = (t.a(), t.b());
    if ((is(a, 4) || is(a, -4)) && is(b, 2)) || (is(a, -5) && is(b, 5)) {
        return Ok(2);
    }
    if !is(b, 1) {
        return Err(FailedCondition::QuarticNoMatch);
    }
    if !matches!(mmod4(a), 0 | 3) {
        return Err(FailedCondition::QuarticAMod4);
    }
    if !is_squarefree(t.w()) {
        return Err(FailedCondition::QuarticWNotSquarefree);
    }
    Ok(3)
}

/// Group attached to each item, normalized to invariant factors by merging
/// the displayed cyclic product (never hard-coded).
fn item_group(item: u8, r: u32, s: u32) -> GroupStructure {
    let displayed: Vec<u64> = match item {
        1 => vec![2],
        2 => vec![4],
        3 => vec![2, 2],
        4 => vec![2, 2, 1u64 << (r - 1)],
        5 | 6 => vec![2 * 3u64.pow(s)],
        7 => vec![2, 2, 1u64 << (r - 1), 3u64.pow(s)],
        _ => unreachable!("items are 1..=7"),
    };
    GroupStructure::from_cyclic_product(&displayed)
}

/// Decides membership of `(n, a, b)` in the seven pairwise-disjoint sets of
/// abelian monogenic trinomials. Purely integer arithmetic.
pub fn classify(n: u64, a: &BigInt, b: &BigInt) -> Result<Classification> {
    let t = Trinomial::new(n, a.clone(), b.clone())?;
    classify_trinomial(&t)
}

/// `classify` on an already-constructed trinomial.
pub fn classify_trinomial(t: &Trinomial) -> Result<Classification> {
    let (r, s, m) = (t.r(), t.s(), t.m());
    if m != 1 {
        return Ok(Classification::Rejected {
            reason: Rejection::NHasPrimeFactorGe5 { prime: smallest_large_prime_factor(m) },
        });
    }
    let member = |item: u8| Classification::Member { item, group: item_group(item, r, s), r, s };
    let rejected = |detail: FailedCondition| Classification::Rejected {
        reason: Rejection::FailsItemConditions { detail },
    };
    let minus_one_one = is(t.a(), -1) && is(t.b(), 1);
    Ok(match (r, s) {
        (0, 0) => match item1(t) {
            Ok(()) => member(1),
            Err(detail) => rejected(detail),
        },
        (1, 0) => match item2or3(t) {
            Ok(item) => member(item),
            Err(detail) => rejected(detail),
        },
        (_, 0) => {
            // r >= 2
            if minus_one_one {
                member(4)
            } else {
                rejected(FailedCondition::TwoPowerNotMinusOneOne)
            }
        }
        (0, _) => {
            // s >= 1
            if is(t.b(), 1) && is(t.a(), 1) {
                member(5)
            } else if minus_one_one {
                member(6)
            } else {
                rejected(FailedCondition::ThreePowerNotUnitPair)
            }
        }
        (_, _) => {
            // r >= 1 and s >= 1
            if minus_one_one {
                member(7)
            } else {
                rejected(FailedCondition::MixedNotMinusOneOne)
            }
        }
    })
}

/// All items whose sets contain the triple; used to test the pairwise
/// disjointness of the seven sets independently of the decision chain in
/// `classify`.
pub fn matching_items(n: u64, a: &BigInt, b: &BigInt) -> Result<Vec<u8>> {
    let t = Trinomial::new(n, a.clone(), b.clone())?;
    let (r, s, m) = (t.r(), t.s(), t.m());
    if m != 1 {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let minus_one_one = is(t.a(), -1) && is(t.b(), 1);
    if t.n() == 1 && item1(&t).is_ok() {
        items.push(1);
    }
    if t.n() == 2 {
        if let Ok(item) = item2or3(&t) {
            items.push(item);
        }
    }
    if r >= 2 && s == 0 && minus_one_one {
        items.push(4);
    }
    if r == 0 && s >= 1 && is(t.a(), 1) && is(t.b(), 1) {
        items.push(5);
    }
    if r == 0 && s >= 1 && minus_one_one {
        items.push(6);
    }
    if r >= 1 && s >= 1 && minus_one_one {
        items.push(7);
    }
    Ok(items)
}

/// The degree-wise characterization for `d` in `{1, 2, 3, 6}`: irreducibility
/// plus the stated conditions; returns the Galois group on acceptance.
pub fn base_case_predicate(
    d: u64,
    a: &BigInt,
    b: &BigInt,
) -> Result<(bool, Option<GroupStructure>)> {
    if !matches!(d, 1 | 2 | 3 | 6) {
        return domain("base cases are d in {1, 2, 3, 6}");
    }
    let t = Trinomial::new(d, a.clone(), b.clone())?;
    let f = IntPoly::power_trinomial(d, a, b);
    if !is_irreducible_over_q(&f)? {
        return Ok((false, None));
    }
    let accept = match d {
        1 => item1(&t).is_ok(), // the split sub-check cannot fire here
        2 => item2or3(&t).is_ok(),
        3 => is(b, 1) && (is(a, 1) || is(a, -1)),
        6 => is(b, 1) && is(a, -1),
        _ => unreachable!(),
    };
    if !accept {
        return Ok((false, None));
    }
    let group = match d {
        1 => GroupStructure::from_cyclic_product(&[2]),
        2 => {
            if item2or3(&t) == Ok(2) {
                GroupStructure::from_cyclic_product(&[4])
            } else {
                GroupStructure::from_cyclic_product(&[2, 2])
            }
        }
        3 => GroupStructure::from_cyclic_product(&[6]),
        6 => GroupStructure::from_cyclic_product(&[2, 6]),
        _ => unreachable!(),
    };
    Ok((true, Some(group)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::unit_group_invariant_factors;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn run(n: u64, a: i64, b: i64) -> Classification {
        classify(n, &big(a), &big(b)).unwrap()
    }

    fn assert_member(c: &Classification, item: u8, group: &[u64]) {
        match c {
            Classification::Member { item: i, group: g, .. } => {
                assert_eq!(*i, item);
                assert_eq!(g.invariant_factors(), group);
            }
            Classification::Rejected { reason } => panic!("expected member, got {reason}"),
        }
    }

    #[test]
    fn lemma_filter() {
        assert!(lemma_n_filter(12).unwrap());
        assert!(!lemma_n_filter(10).unwrap());
        assert!(lemma_n_filter(1).unwrap());
        assert!(lemma_n_filter(0).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_member(&run(2, -5, 5), 2, &[4]);
        assert_member(&run(8, -1, 1), 4, &[2, 2, 4]);
        assert!(matches!(
            run(5, 1, 1),
            Classification::Rejected { reason: Rejection::NHasPrimeFactorGe5 { prime: 5 } }
        ));
        assert!(matches!(
            run(2, 6, 1),
            Classification::Rejected {
                reason: Rejection::FailsItemConditions { detail: FailedCondition::QuarticAMod4 }
            }
        ));
        assert!(matches!(
            run(1, 2, 1),
            Classification::Rejected {
                reason: Rejection::FailsItemConditions {
                    detail: FailedCondition::QuadraticWNotSquarefree
                }
            }
        ));
    }

    #[test]
    fn classify_more_members() {
        assert_member(&run(1, 2, 3), 1, &[2]);
        assert_member(&run(1, -1, 1), 1, &[2]);
        assert_member(&run(2, 4, 2), 2, &[4]);
        assert_member(&run(2, -4, 2), 2, &[4]);
        assert_member(&run(2, -1, 1), 3, &[2, 2]);
        assert_member(&run(2, 4, 1), 3, &[2, 2]);
        assert_member(&run(4, -1, 1), 4, &[2, 2, 2]);
        assert_member(&run(3, 1, 1), 5, &[6]);
        assert_member(&run(9, 1, 1), 5, &[18]);
        assert_member(&run(3, -1, 1), 6, &[6]);
        assert_member(&run(6, -1, 1), 7, &[2, 6]);
        assert_member(&run(12, -1, 1), 7, &[2, 2, 6]);
    }

    #[test]
    fn quadratic_split_family_is_rejected() {
        // odd a with a^2 - 4b = 1: W = 1 is squarefree but the quadratic
        // splits, e.g. x^2+3x+2 = (x+1)(x+2)
        for a in [3i64, 5, 7, -3, -5, -7] {
            let b = (a * a - 1) / 4;
            let c = run(1, a, b);
            assert!(
                matches!(
                    c,
                    Classification::Rejected {
                        reason: Rejection::FailsItemConditions {
                            detail: FailedCondition::QuadraticSplits
                        }
                    }
                ),
                "(1,{a},{b}) must be rejected"
            );
        }
    }

    #[test]
    fn disjointness_scan() {
        // every 2^r 3^s shaped n up to 64, coefficients up to 64
        let ns = [1u64, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27, 32, 36, 48, 54, 64];
        for &n in &ns {
            for a in -64i64..=64 {
                for b in -64i64..=64 {
                    if a == 0 || b == 0 {
                        continue;
                    }
                    let items = matching_items(n, &big(a), &big(b)).unwrap();
                    assert!(items.len() <= 1, "({n},{a},{b}) matches items {items:?}");
                    // the decision chain agrees with the independent scan
                    let c = run(n, a, b);
                    match items.first() {
                        Some(&item) => match &c {
                            Classification::Member { item: got, .. } => {
                                assert_eq!(*got, item, "({n},{a},{b})")
                            }
                            _ => panic!("({n},{a},{b}) should be a member of item {item}"),
                        },
                        None => assert!(!c.is_member(), "({n},{a},{b})"),
                    }
                }
            }
        }
    }

    #[test]
    fn base_case_examples() {
        let (ok, g) = base_case_predicate(1, &big(2), &big(3)).unwrap();
        assert!(ok);
        assert_eq!(g.unwrap().invariant_factors(), &[2]);
        let (ok, g) = base_case_predicate(2, &big(4), &big(2)).unwrap();
        assert!(ok);
        assert_eq!(g.unwrap().invariant_factors(), &[4]);
        // x^12 + x^6 + 1 is reducible: not abelian monogenic
        let (ok, g) = base_case_predicate(6, &big(1), &big(1)).unwrap();
        assert!(!ok);
        assert!(g.is_none());
        assert!(base_case_predicate(4, &big(1), &big(1)).is_err());
    }

    #[test]
    fn classify_agrees_with_base_cases() {
        for d in [1u64, 2, 3, 6] {
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    if a == 0 || b == 0 {
                        continue;
                    }
                    let c = run(d, a, b);
                    let (ok, group) = base_case_predicate(d, &big(a), &big(b)).unwrap();
                    assert_eq!(c.is_member(), ok, "(d,a,b) = ({d},{a},{b})");
                    if ok {
                        assert_eq!(c.group(), group.as_ref(), "(d,a,b) = ({d},{a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn member_groups_match_unit_groups_on_cyclotomic_items() {
        // items 4-7 are cyclotomic: Phi_N with the matching N
        let cases: [(u64, i64, i64, u64); 6] = [
            (4, -1, 1, 24),
            (8, -1, 1, 48),
            (3, 1, 1, 9),
            (3, -1, 1, 18),
            (6, -1, 1, 36),
            (12, -1, 1, 72),
        ];
        for (n, a, b, cyc) in cases {
            let c = run(n, a, b);
            let units = unit_group_invariant_factors(cyc).unwrap();
            assert_eq!(c.group().unwrap(), &units, "(n,a,b)=({n},{a},{b}), N={cyc}");
        }
    }

    #[test]
    fn member_group_order_is_twice_n() {
        let members: [(u64, i64, i64); 8] = [
            (1, 1, 1),
            (2, 4, 2),
            (2, -1, 1),
            (4, -1, 1),
            (8, -1, 1),
            (9, 1, 1),
            (6, -1, 1),
            (24, -1, 1),
        ];
        for (n, a, b) in members {
            let c = run(n, a, b);
            let g = c.group().expect("member");
            assert_eq!(g.order(), 2 * n, "(n,a,b)=({n},{a},{b})");
        }
    }
}
