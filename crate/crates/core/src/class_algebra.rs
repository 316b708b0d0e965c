//! Exact arithmetic in the center of the group algebra.
//!
//! Central elements are stored in the class-sum basis with integer
//! coefficients. The element `T_k = Σ_g gᵏ` has identity coefficient #{g : gᵏ = 1},
//! and the identity coefficient of `T_kⁿ` is the number of n-tuples whose
//! k-th powers multiply to the identity.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{ClassData, Group};

/// An element of the center, `Σ_C coeffs[C] · Ĉ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralVector {
    pub coeffs: Vec<BigInt>,
}

impl CentralVector {
    /// The identity element `1 = Ĉ₀`.
    pub fn unit(num_classes: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); num_classes];
        coeffs[0] = BigInt::one();
        CentralVector { coeffs }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        CentralVector {
            coeffs: values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the identity class.
    pub fn identity_coeff(&self) -> &BigInt {
        &self.coeffs[0]
    }
}

/// Class multiplication constants `a(C, D, E) = #{(x, y) ∈ C × D : xy = z}`
/// for a fixed `z ∈ E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    num_classes: usize,
    data: Vec<BigInt>,
}

impl StructureTensor {
    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    #[inline]
    pub fn get(&self, c: usize, d: usize, e: usize) -> &BigInt {
        let k = self.num_classes;
        &self.data[(c * k + d) * k + e]
    }

    fn from_rows(num_classes: usize, rows: Vec<Vec<u64>>) -> Self {
        let data = rows
            .into_iter()
            .flat_map(|row| row.into_iter().map(BigInt::from))
            .collect();
        StructureTensor { num_classes, data }
    }
}

/// `v(z) = #{h : hᵏ = z}` for every element `z`.
pub fn element_power_counts(g: &Group, k: u64) -> Vec<u64> {
    let mut v = vec![0u64; g.order()];
    for h in 0..g.order() {
        v[g.power(h, k)] += 1;
    }
    v
}

/// `Σ_h hᵏ` in the class-sum basis: coefficient of `Ĉ` is `#{h : hᵏ = reps(C)}`.
pub fn power_distribution(g: &Group, cd: &ClassData, k: u64) -> CentralVector {
    let v = element_power_counts(g, k);
    CentralVector {
        coeffs: cd.reps.iter().map(|&r| BigInt::from(v[r])).collect(),
    }
}

/// Counts every product `xy` with `x ∈ C`, `y ∈ D` by the class it lands in,
/// then divides the raw count for class `E` by `|E|`.
pub fn structure_constants(g: &Group, cd: &ClassData) -> Result<StructureTensor> {
    let k = cd.num_classes;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|c| (0..k).map(move |d| (c, d))).collect();
    let rows = pairs
        .par_iter()
        .map(|&(c, d)| {
            let mut raw = vec![0u64; k];
            if g.has_table() {
                for &x in &cd.members[c] {
                    for &y in &cd.members[d] {
                        raw[cd.class_of[g.product(x, y)]] += 1;
                    }
                }
            } else {
                let mut scratch = g.element(0).clone();
                for &x in &cd.members[c] {
                    let px = g.element(x);
                    for &y in &cd.members[d] {
                        px.then_into(g.element(y), &mut scratch);
                        let z = g.index_of(&scratch).expect("group is closed under products");
                        raw[cd.class_of[z]] += 1;
                    }
                }
            }
            raw.iter()
                .zip(&cd.sizes)
                .map(|(&count, &size)| {
                    if count % size as u64 == 0 {
                        Ok(count / size as u64)
                    } else {
                        Err(Error::inconsistent(format!(
                            "{count} products of classes {c} and {d} land in class of size {size}"
                        )))
                    }
                })
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StructureTensor::from_rows(k, rows))
}

/// Same constants computed by fixing `z = reps(E)` and counting `x ∈ C`
/// with `x⁻¹z ∈ D`. Costs `k·|G|` products instead of `|G|²`.
pub fn structure_constants_by_target(g: &Group, cd: &ClassData) -> StructureTensor {
    let k = cd.num_classes;
    let rows: Vec<Vec<u64>> = (0..k)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut counts = vec![vec![0u64; k]; k];
            for (e, &z) in cd.reps.iter().enumerate() {
                for &x in &cd.members[c] {
                    let y = g.product(g.inverse(x), z);
                    counts[cd.class_of[y]][e] += 1;
                }
            }
            counts
        })
        .collect();
    StructureTensor::from_rows(k, rows)
}

/// One multiplication in the center:
/// `result(E) = Σ_{C,D} u(C)·w(D)·a(C,D,E)`.
pub fn central_product(u: &CentralVector, w: &CentralVector, t: &StructureTensor) -> CentralVector {
    let k = t.num_classes();
    assert_eq!(u.len(), k, "left factor has wrong dimension");
    assert_eq!(w.len(), k, "right factor has wrong dimension");
    let mut out = vec![BigInt::zero(); k];
    for (c, uc) in u.coeffs.iter().enumerate() {
        if uc.is_zero() {
            continue;
        }
        for (d, wd) in w.coeffs.iter().enumerate() {
            if wd.is_zero() {
                continue;
            }
            let prod = uc * wd;
            for (e, slot) in out.iter_mut().enumerate() {
                let a = t.get(c, d, e);
                if !a.is_zero() {
                    *slot += &prod * a;
                }
            }
        }
    }
    CentralVector { coeffs: out }
}

/// How [`solution_count_sequence`] evaluates `s_k(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Repeated multiplication by `T_k` in the class algebra.
    ClassAlgebra,
    /// Repeated convolution of the element-level power-count function.
    ElementDp,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::ClassAlgebra, Strategy::ElementDp];

    pub fn as_str(&self) -> &'static str {
        match self {
            Strategy::ClassAlgebra => "class_algebra",
            Strategy::ElementDp => "element_dp",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "class_algebra" | "class-algebra" => Ok(Strategy::ClassAlgebra),
            "element_dp" | "element-dp" => Ok(Strategy::ElementDp),
            other => Err(Error::parse(0, format!("unknown strategy `{other}`"))),
        }
    }
}

/// `s_k(1), …, s_k(N)` where `s_k(n) = #{(g₁,…,gₙ) : g₁ᵏ⋯gₙᵏ = 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCounts {
    pub k: u64,
    pub values: Vec<BigInt>,
}

impl SolutionCounts {
    /// `s_k(n)` for `n ≥ 1`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    pub(crate) fn require(&self, n: usize) -> Result<&BigInt> {
        self.get(n).ok_or(Error::InsufficientSequence {
            needed: n,
            have: self.values.len(),
        })
    }
}

/// Identity coefficients of `T, T², …, T^max_n` for a precomputed tensor.
pub fn solution_counts_from_tensor(
    t: &StructureTensor,
    power_vector: &CentralVector,
    k: u64,
    max_n: usize,
) -> SolutionCounts {
    let mut values = Vec::with_capacity(max_n);
    let mut acc = power_vector.clone();
    for n in 1..=max_n {
        if n > 1 {
            acc = central_product(&acc, power_vector, t);
        }
        values.push(acc.identity_coeff().clone());
    }
    SolutionCounts { k, values }
}

fn element_dp(g: &Group, k: u64, max_n: usize) -> SolutionCounts {
    let v = element_power_counts(g, k);
    let support: Vec<(usize, u64)> = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(z, &c)| (z, c))
        .collect();
    let mut f: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
    let mut values = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        if n > 1 {
            // f_n(h·y) += f_{n-1}(h)·v(y)
            let mut next = vec![BigInt::zero(); g.order()];
            for (h, fh) in f.iter().enumerate() {
                if fh.is_zero() {
                    continue;
                }
                for &(y, vy) in &support {
                    next[g.product(h, y)] += fh * vy;
                }
            }
            f = next;
        }
        values.push(f[0].clone());
    }
    SolutionCounts { k, values }
}

pub fn solution_count_sequence(
    g: &Group,
    cd: &ClassData,
    k: u64,
    max_n: usize,
    strategy: Strategy,
) -> Result<SolutionCounts> {
    if k == 0 {
        return Err(Error::InvalidParameter("power k must be at least 1".into()));
    }
    match strategy {
        Strategy::ClassAlgebra => {
            let t = structure_constants(g, cd)?;
            let pv = power_distribution(g, cd, k);
            Ok(solution_counts_from_tensor(&t, &pv, k, max_n))
        }
        Strategy::ElementDp => Ok(element_dp(g, k, max_n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};

    fn setup(text: &str) -> (Group, ClassData) {
        let g = enumerate_group(&parse_group_spec(text, SpecFormat::Preset).unwrap()).unwrap();
        let cd = conjugacy_classes(&g);
        (g, cd)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Class index of the class of `x` where `x` is picked by a predicate.
    fn class_where(g: &Group, cd: &ClassData, pred: impl Fn(usize) -> bool) -> usize {
        cd.class_of[(0..g.order()).find(|&x| pred(x)).unwrap()]
    }

    #[test]
    fn power_distribution_examples() {
        let (g, cd) = setup("cyclic:2");
        assert_eq!(power_distribution(&g, &cd, 2).coeffs, ints(&[2, 0]));

        // S3 classes come out as (identity, transpositions, 3-cycles)
        let (g, cd) = setup("symmetric:3");
        assert_eq!(g.element_order(cd.reps[1]), 2);
        assert_eq!(power_distribution(&g, &cd, 2).coeffs, ints(&[4, 0, 1]));

        let (g, cd) = setup("quaternion:8");
        let t = power_distribution(&g, &cd, 2);
        let minus_one = class_where(&g, &cd, |x| x != 0 && g.element_order(x) == 2);
        assert_eq!(t.coeffs[0], BigInt::from(2));
        assert_eq!(t.coeffs[minus_one], BigInt::from(6));
        let total: BigInt = t.coeffs.iter().sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn power_distribution_weighted_total_is_order() {
        for name in ["symmetric:4", "sl23", "alternating:5", "dihedral:5"] {
            let (g, cd) = setup(name);
            for k in 1..=6 {
                let t = power_distribution(&g, &cd, k);
                let total: BigInt = t
                    .coeffs
                    .iter()
                    .zip(&cd.sizes)
                    .map(|(c, &s)| c * BigInt::from(s))
                    .sum();
                assert_eq!(total, BigInt::from(g.order()));
            }
        }
    }

    #[test]
    fn s3_three_cycle_constants() {
        let (g, cd) = setup("symmetric:3");
        let t = structure_constants(&g, &cd).unwrap();
        let three = class_where(&g, &cd, |x| g.element_order(x) == 3);
        let two = class_where(&g, &cd, |x| g.element_order(x) == 2);
        assert_eq!(*t.get(three, three, 0), BigInt::from(2));
        assert_eq!(*t.get(three, three, three), BigInt::from(1));
        assert_eq!(*t.get(three, three, two), BigInt::from(0));
    }

    #[test]
    fn identity_and_c2_constants() {
        let (g, cd) = setup("cyclic:2");
        let t = structure_constants(&g, &cd).unwrap();
        assert_eq!(*t.get(0, 0, 0), BigInt::one());
        assert_eq!(*t.get(0, 0, 1), BigInt::zero());
        assert_eq!(*t.get(1, 1, 0), BigInt::one());
    }

    #[test]
    fn both_tensor_routes_agree_and_sum_correctly() {
        for name in ["symmetric:4", "sl23", "quaternion:8", "dihedral:5", "alternating:5"] {
            let (g, cd) = setup(name);
            let t = structure_constants(&g, &cd).unwrap();
            assert_eq!(t, structure_constants_by_target(&g, &cd), "{name}");
            let k = cd.num_classes;
            for c in 0..k {
                for d in 0..k {
                    let total: BigInt = (0..k).map(|e| t.get(c, d, e) * BigInt::from(cd.sizes[e])).sum();
                    assert_eq!(total, BigInt::from(cd.sizes[c] * cd.sizes[d]));
                }
            }
        }
    }

    #[test]
    fn central_product_examples() {
        let (g, cd) = setup("symmetric:3");
        let t = structure_constants(&g, &cd).unwrap();
        let pv = power_distribution(&g, &cd, 2);
        assert_eq!(central_product(&pv, &pv, &t).coeffs, ints(&[18, 0, 9]));
        assert_eq!(central_product(&pv, &CentralVector::unit(3), &t), pv);

        let (g, cd) = setup("quaternion:8");
        let t = structure_constants(&g, &cd).unwrap();
        let pv = power_distribution(&g, &cd, 2);
        let sq = central_product(&pv, &pv, &t);
        let minus_one = class_where(&g, &cd, |x| x != 0 && g.element_order(x) == 2);
        assert_eq!(sq.coeffs[0], BigInt::from(40));
        assert_eq!(sq.coeffs[minus_one], BigInt::from(24));
        assert_eq!(sq.coeffs.iter().sum::<BigInt>(), BigInt::from(64));
    }

    #[test]
    fn sequence_examples() {
        for strategy in Strategy::ALL {
            let (g, cd) = setup("cyclic:2");
            let s = solution_count_sequence(&g, &cd, 2, 4, strategy).unwrap();
            assert_eq!(s.values, ints(&[2, 4, 8, 16]));

            let (g, cd) = setup("symmetric:3");
            let s = solution_count_sequence(&g, &cd, 2, 4, strategy).unwrap();
            assert_eq!(s.values, ints(&[4, 18, 90, 486]));

            let (g, cd) = setup("quaternion:8");
            let s = solution_count_sequence(&g, &cd, 2, 6, strategy).unwrap();
            assert_eq!(s.values, ints(&[2, 40, 224, 2176, 15872, 133120]));
        }
    }

    #[test]
    fn k_zero_is_rejected() {
        let (g, cd) = setup("cyclic:2");
        assert!(solution_count_sequence(&g, &cd, 0, 3, Strategy::ElementDp).is_err());
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.as_str().parse::<Strategy>().unwrap(), s);
        }
    }
}
