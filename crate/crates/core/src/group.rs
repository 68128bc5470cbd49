//! Finite abelian group structure in invariant-factor form.

use crate::error::{domain, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A finite abelian group presented by its invariant factors
/// `d_1 | d_2 | ... | d_t`, each at least 2. The trivial group is the empty
/// chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GroupStructure {
    invariant_factors: Vec<u64>,
}

impl GroupStructure {
    /// Validates the divisibility chain.
    pub fn new(invariant_factors: Vec<u64>) -> Result<Self> {
        for w in invariant_factors.windows(2) {
            if w[1] % w[0] != 0 {
                return domain(format!(
                    "invariant factors must form a divisibility chain: {} does not divide {}",
                    w[0], w[1]
                ));
            }
        }
        if invariant_factors.iter().any(|&d| d < 2) {
            return domain("invariant factors must be at least 2");
        }
        Ok(GroupStructure { invariant_factors })
    }

    pub fn trivial() -> Self {
        GroupStructure { invariant_factors: Vec::new() }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Builds the invariant-factor form from a multiset of cyclic orders
    /// (a direct product `prod C_{m_i}`, trivial factors allowed).
    pub fn from_cyclic_product(orders: &[u64]) -> Self {
        // split each C_m into prime-power elementary divisors
        let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &m in orders {
            let mut m = m;
            let mut p = 2u64;
            while p * p <= m {
                if m % p == 0 {
                    let mut e = 0u32;
                    while m % p == 0 {
                        m /= p;
                        e += 1;
                    }
                    per_prime.entry(p).or_default().push(e);
                }
                p += 1;
            }
            if m > 1 {
                per_prime.entry(m).or_default().push(1);
            }
        }
        Self::from_prime_partitions(per_prime)
    }

    fn from_prime_partitions(mut per_prime: BTreeMap<u64, Vec<u32>>) -> Self {
        let width = per_prime.values().map(|v| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for (p, exps) in per_prime.iter_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a)); // descending
            for (slot, &e) in exps.iter().enumerate() {
                factors[slot] *= p.pow(e);
            }
        }
        // slot 0 holds the largest factor; ascending chain wanted
        factors.reverse();
        factors.retain(|&d| d > 1);
        GroupStructure { invariant_factors: factors }
    }

    /// Recovers the group from the multiset of orders of all its elements.
    ///
    /// For each prime p, the counts `N_j = #{x : x^(p^j) = 1}` determine the
    /// p-part: `log_p N_j - log_p N_{j-1}` is the number of cyclic components
    /// of order at least `p^j`, i.e. the conjugate partition.
    pub fn from_element_orders(orders: &[u64]) -> Result<Self> {
        let n = orders.len() as u64;
        if n == 0 {
            return domain("order census of an empty group");
        }
        if orders.iter().filter(|&&o| o == 1).count() != 1 {
            return domain("group must contain exactly one identity element");
        }
        let mut primes: Vec<u64> = Vec::new();
        {
            let mut m = n;
            let mut p = 2u64;
            while p * p <= m {
                if m % p == 0 {
                    primes.push(p);
                    while m % p == 0 {
                        m /= p;
                    }
                }
                p += 1;
            }
            if m > 1 {
                primes.push(m);
            }
        }
        let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &p in &primes {
            // conjugate partition m_j = #{components with exponent >= j}
            let mut conjugate: Vec<u32> = Vec::new();
            let mut prev_log = 0u32;
            let mut pj = 1u64;
            loop {
                pj = pj.checked_mul(p).expect("group order overflow");
                let count = orders
                    .iter()
                    .filter(|&&o| {
                        // order divides p^j  <=>  o is a p-power dividing p^j
                        pj % o == 0
                    })
                    .count() as u64;
                let log = ilog(count, p)
                    .ok_or_else(|| crate::error::Error::Domain(format!(
                        "census count {count} is not a power of {p}; not an abelian group"
                    )))?;
                let m_j = log - prev_log;
                if m_j == 0 {
                    break;
                }
                conjugate.push(m_j);
                prev_log = log;
            }
            // transpose the conjugate partition back into exponents
            let mut exps: Vec<u32> = Vec::new();
            for (j, &count) in conjugate.iter().enumerate() {
                let next = conjugate.get(j + 1).copied().unwrap_or(0);
                for _ in 0..(count - next) {
                    exps.push(j as u32 + 1);
                }
            }
            if !exps.is_empty() {
                per_prime.insert(p, exps);
            }
        }
        let g = Self::from_prime_partitions(per_prime);
        if g.order() != n {
            return domain(format!(
                "census inconsistent: reconstructed order {} from {} elements",
                g.order(),
                n
            ));
        }
        Ok(g)
    }
}

fn ilog(mut n: u64, p: u64) -> Option<u32> {
    let mut e = 0u32;
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        e += 1;
    }
    if n == 1 {
        Some(e)
    } else {
        None
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "C1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("C{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_chain_is_enforced() {
        assert!(GroupStructure::new(vec![2, 4]).is_ok());
        assert!(GroupStructure::new(vec![2, 3]).is_err());
        assert!(GroupStructure::new(vec![1, 2]).is_err());
        assert!(GroupStructure::new(vec![]).is_ok());
    }

    #[test]
    fn cyclic_product_normalization() {
        // C2 x C2 x C2 stays as is
        assert_eq!(
            GroupStructure::from_cyclic_product(&[2, 2, 2]).invariant_factors(),
            &[2, 2, 2]
        );
        // C2 x C2 x C3 = C2 x C6
        assert_eq!(GroupStructure::from_cyclic_product(&[2, 2, 3]).invariant_factors(), &[2, 6]);
        // C2 x C3 = C6
        assert_eq!(GroupStructure::from_cyclic_product(&[2, 3]).invariant_factors(), &[6]);
        // C4 x C6 = C2 x C12
        assert_eq!(GroupStructure::from_cyclic_product(&[4, 6]).invariant_factors(), &[2, 12]);
        // trivial factors drop out
        assert_eq!(GroupStructure::from_cyclic_product(&[1, 1, 5]).invariant_factors(), &[5]);
        assert!(GroupStructure::from_cyclic_product(&[]).invariant_factors().is_empty());
    }

    #[test]
    fn census_of_small_groups() {
        // C4: orders 1,4,2,4
        let g = GroupStructure::from_element_orders(&[1, 4, 2, 4]).unwrap();
        assert_eq!(g.invariant_factors(), &[4]);
        // C2 x C2: orders 1,2,2,2
        let g = GroupStructure::from_element_orders(&[1, 2, 2, 2]).unwrap();
        assert_eq!(g.invariant_factors(), &[2, 2]);
        // C6: orders 1,6,3,2,3,6
        let g = GroupStructure::from_element_orders(&[1, 6, 3, 2, 3, 6]).unwrap();
        assert_eq!(g.invariant_factors(), &[6]);
        // trivial group
        let g = GroupStructure::from_element_orders(&[1]).unwrap();
        assert!(g.invariant_factors().is_empty());
    }

    #[test]
    fn census_roundtrips_products() {
        // enumerate element orders of a direct product directly
        fn orders_of(factors: &[u64]) -> Vec<u64> {
            let mut orders = vec![];
            let total: u64 = factors.iter().product();
            let mut idx = vec![0u64; factors.len()];
            for _ in 0..total {
                let o = idx
                    .iter()
                    .zip(factors)
                    .map(|(&i, &m)| {
                        let g = num_integer::gcd(i, m);
                        m / g.max(1)
                    })
                    .fold(1u64, num_integer::lcm);
                orders.push(o.max(1));
                // increment mixed-radix counter
                for k in 0..factors.len() {
                    idx[k] += 1;
                    if idx[k] < factors[k] {
                        break;
                    }
                    idx[k] = 0;
                }
            }
            orders
        }
        for factors in [vec![2u64, 4], vec![3, 9], vec![2, 2, 8], vec![12], vec![2, 6], vec![2, 2, 2]] {
            let orders = orders_of(&factors);
            let g = GroupStructure::from_element_orders(&orders).unwrap();
            let want = GroupStructure::from_cyclic_product(&factors);
            assert_eq!(g, want, "census mismatch for product {factors:?}");
        }
    }

    #[test]
    fn census_rejects_nongroup_data() {
        assert!(GroupStructure::from_element_orders(&[]).is_err());
        assert!(GroupStructure::from_element_orders(&[1, 1, 2, 2]).is_err());
        // S3 order census (1,2,2,2,3,3) is not an abelian census
        assert!(GroupStructure::from_element_orders(&[1, 2, 2, 2, 3, 3]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GroupStructure::new(vec![2, 6]).unwrap().to_string(), "C2 x C6");
        assert_eq!(GroupStructure::trivial().to_string(), "C1");
    }
}
