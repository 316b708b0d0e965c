use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::Group;

/// Largest `|G|ⁿ` enumerated tuple by tuple.
pub const LITERAL_LIMIT: u128 = 100_000_000;

fn tuple_space(g: &Group, n: usize) -> Option<u128> {
    (g.order() as u128).checked_pow(n as u32)
}

pub fn literal_feasible(g: &Group, n: usize) -> bool {
    tuple_space(g, n).is_some_and(|s| s <= LITERAL_LIMIT)
}

/// Counts n-tuples with `g₁ᵏ⋯gₙᵏ = 1` by visiting every tuple.
pub fn literal_tuple_count(g: &Group, n: usize, k: u64) -> Result<BigInt> {
    if !literal_feasible(g, n) {
        return Err(Error::SizeGuard(format!(
            "|G|^n = {}^{n} exceeds {LITERAL_LIMIT} tuples",
            g.order()
        )));
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let powers = g.power_map(k);

    fn walk(g: &Group, powers: &[usize], prefix: usize, remaining: usize) -> u64 {
        if remaining == 0 {
            return u64::from(prefix == 0);
        }
        powers
            .iter()
            .map(|&p| walk(g, powers, g.product(prefix, p), remaining - 1))
            .sum()
    }

    let total: u64 = powers
        .par_iter()
        .map(|&p| walk(g, &powers, p, n - 1))
        .sum();
    Ok(BigInt::from(total))
}

/// Literal enumeration when `|G|ⁿ ≤ 10⁸`, otherwise propagation of the
/// distribution of partial products over all elements. Never consults
/// conjugacy classes.
pub fn naive_tuple_count(g: &Group, n: usize, k: u64) -> Result<BigInt> {
    if literal_feasible(g, n) {
        return literal_tuple_count(g, n, k);
    }
    let powers = g.power_map(k);
    let mut dist = vec![BigInt::zero(); g.order()];
    dist[0] = BigInt::from(1);
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); g.order()];
        for (x, count) in dist.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &p in &powers {
                next[g.product(x, p)] += count;
            }
        }
        dist = next;
    }
    Ok(dist.swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_group, parse_group_spec, SpecFormat};

    fn group(text: &str) -> Group {
        enumerate_group(&parse_group_spec(text, SpecFormat::Preset).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(naive_tuple_count(&group("cyclic:2"), 3, 2).unwrap(), BigInt::from(8));
        assert_eq!(naive_tuple_count(&group("symmetric:3"), 2, 2).unwrap(), BigInt::from(18));
        assert_eq!(naive_tuple_count(&group("quaternion:8"), 2, 2).unwrap(), BigInt::from(40));
    }

    #[test]
    fn literal_guard_and_fallback_agree() {
        let g = group("alternating:5");
        assert!(literal_tuple_count(&g, 5, 2).is_err());
        assert!(!literal_feasible(&g, 5));
        let s3 = naive_tuple_count(&g, 3, 2).unwrap();
        assert_eq!(literal_tuple_count(&g, 3, 2).unwrap(), s3);
    }

    #[test]
    fn first_power_counts_tuples_with_trivial_product() {
        // #{(g1..gn) : g1⋯gn = 1} = |G|^(n-1)
        let g = group("symmetric:3");
        assert_eq!(literal_tuple_count(&g, 3, 1).unwrap(), BigInt::from(36));
    }
}
