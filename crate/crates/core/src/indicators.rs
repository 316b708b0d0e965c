//! Indicator counts, the `s(n)·|G| < s(n+1)` test for quaternionic
//! characters, the limit identity and higher indicators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::class_algebra::{solution_count_sequence, SolutionCounts, Strategy};
use crate::error::{Error, Result};
use crate::group::{squares_subgroup_index, ClassData, Group};
use crate::oracle::fixture::{fixture_indicators, match_classes, CharacterTableFixture};
use crate::recovery::IndicatorMultiset;

/// Counts of irreducible characters by Frobenius–Schur indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndicatorSummary {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
    pub k_r: usize,
    pub k_total: usize,
}

pub fn indicator_summary(im: &IndicatorMultiset, cd: &ClassData) -> Result<IndicatorSummary> {
    if im.len() != cd.num_real_classes {
        return Err(Error::inconsistent(format!(
            "multiset has {} entries but there are {} real classes",
            im.len(),
            cd.num_real_classes
        )));
    }
    Ok(IndicatorSummary {
        plus: im.count_positive(),
        minus: im.count_negative(),
        zero: cd.num_classes - cd.num_real_classes,
        k_r: cd.num_real_classes,
        k_total: cd.num_classes,
    })
}

/// An odd `n` with `s(n)·|G| < s(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeWitness {
    pub n: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// `max(k_r + 2, 16)`.
pub fn default_scan_bound(k_r: usize) -> usize {
    (k_r + 2).max(16)
}

/// Scans odd `3 ≤ n ≤ max_n` for the first `s(n)·|G| < s(n+1)`.
///
/// `n = 1` is skipped: `s(1)` is `Σ 1/aᵢ` rather than a power sum, and the
/// comparison there only says `s(1) < k_r`. Finding none does not rule out
/// characters with indicator −1.
pub fn detect_negative_indicator(
    sc: &SolutionCounts,
    order: u64,
    max_n: usize,
) -> Result<Option<NegativeWitness>> {
    sc.require(max_n + 1)?;
    let order = BigInt::from(order);
    for n in (3..=max_n).step_by(2) {
        let lhs = sc.require(n)? * &order;
        let rhs = sc.require(n + 1)?.clone();
        if lhs < rhs {
            return Ok(Some(NegativeWitness { n, lhs, rhs }));
        }
    }
    Ok(None)
}

/// First `n` with `s(n+1) > |G|·s(n)`, if any, over the computed range.
pub fn first_increase(sc: &SolutionCounts, order: u64) -> Option<usize> {
    let order = BigInt::from(order);
    (1..sc.max_n()).find(|&n| sc.values[n] > &sc.values[n - 1] * &order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitReport {
    /// Recovered entries equal to 1.
    pub ones: usize,
    /// `[G : ⟨g² : g ∈ G⟩]`.
    pub squares_index: usize,
    pub passed: bool,
}

/// `#{entries = 1} = [G : N]`, the exact form of `s(n)/|G|^(n−1) → |G/N|`.
pub fn verify_limit_identity(im: &IndicatorMultiset, g: &Group) -> LimitReport {
    let ones = im.count_equal(1);
    let squares_index = squares_subgroup_index(g);
    LimitReport {
        ones,
        squares_index,
        passed: ones == squares_index,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherIndicatorReport {
    pub k: u64,
    pub counts: SolutionCounts,
    /// `s_k(n)/|G|^(n−1)` for `n = 1..=max_n`.
    pub ratios: Vec<BigRational>,
    /// `ε_k(χ)` per fixture character, when a fixture was given.
    pub indicators: Option<Vec<BigRational>>,
    /// `Σ_χ ε_k(χ)ⁿ / χ(1)^(n−2)` for `n = 1..=max_n`.
    pub character_side: Option<Vec<BigRational>>,
}

impl HigherIndicatorReport {
    /// `None` without a fixture, otherwise whether both sides agree for all n.
    pub fn passed(&self) -> Option<bool> {
        self.character_side.as_ref().map(|c| *c == self.ratios)
    }
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let r = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        r.recip()
    } else {
        r
    }
}

/// Computes `s_k(n)` and, given a character table, checks
/// `s_k(n)/|G|^(n−1) = Σ_χ ε_k(χ)ⁿ / χ(1)^(n−2)` for `n = 1..=max_n`.
pub fn higher_indicator_check(
    g: &Group,
    cd: &ClassData,
    k: u64,
    max_n: usize,
    fixture: Option<&CharacterTableFixture>,
) -> Result<HigherIndicatorReport> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("higher indicators need k >= 2, got {k}")));
    }
    let counts = solution_count_sequence(g, cd, k, max_n, Strategy::ClassAlgebra)?;
    let order = BigInt::from(g.order());
    let mut ratios = Vec::with_capacity(max_n);
    let mut denom = BigInt::one();
    for s in &counts.values {
        ratios.push(BigRational::new(s.clone(), denom.clone()));
        denom *= &order;
    }

    let (indicators, character_side) = match fixture {
        None => (None, None),
        Some(fx) => {
            let cols = match_classes(fx, g, cd)?;
            let eps = fixture_indicators(fx, &cols, g, cd, k)?;
            let degrees = fx.degrees();
            let side = (1..=max_n as i64)
                .map(|n| {
                    eps.iter()
                        .zip(&degrees)
                        .filter(|(e, _)| !e.is_zero())
                        .map(|(e, d)| rational_pow(e, n) * rational_pow(d, 2 - n))
                        .fold(BigRational::zero(), |acc, x| acc + x)
                })
                .collect();
            (Some(eps), Some(side))
        }
    };
    Ok(HigherIndicatorReport {
        k,
        counts,
        ratios,
        indicators,
        character_side,
    })
}
