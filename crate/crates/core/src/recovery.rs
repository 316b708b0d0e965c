//! Recovery of the multiset `{χ(1)ε(χ) : χ real}` from solution counts.
//!
//! With `aᵢ = ε(χᵢ)/χᵢ(1)` over the real irreducible characters, the counts
//! give power sums `p(m) = Σ aᵢᵐ = s(m+2)/|G|^(m+1)` and `ρ₋₁ = Σ aᵢ⁻¹ = s(1)`.
//! Newton's identities turn the power sums into elementary symmetric
//! functions, and `σ_top · ρ₋₁ = σ_(top-1)` supplies the last one without
//! needing `s(k_r + 2)`. The roots of `Π(X − aᵢ)` are then read off as
//! rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::class_algebra::{solution_count_sequence, SolutionCounts, Strategy};
use crate::error::{Error, Result};
use crate::group::{ClassData, Group};

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Power sums `p(0..)` of the `aᵢ` together with `ρ₋₁ = Σ aᵢ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub p: Vec<BigRational>,
    pub rho_minus_1: BigRational,
    pub k_r: usize,
}

fn power_sums(sc: &SolutionCounts, order: u64, k_r: usize, count: usize) -> Result<PowerSums> {
    let needed = count + 1;
    if sc.max_n() < needed.max(2) {
        return Err(Error::InsufficientSequence {
            needed: needed.max(2),
            have: sc.max_n(),
        });
    }
    let order_int = BigInt::from(order);
    let s2 = sc.require(2)?;
    if !s2.is_multiple_of(&order_int) {
        return Err(Error::inconsistent(format!(
            "s(2) = {s2} is not divisible by |G| = {order}"
        )));
    }
    if *s2 != &order_int * BigInt::from(k_r) {
        return Err(Error::inconsistent(format!(
            "s(2) = {s2} but |G|·k_r = {}",
            &order_int * BigInt::from(k_r)
        )));
    }
    let mut p = Vec::with_capacity(count);
    let mut denom = order_int.clone();
    for m in 0..count {
        p.push(BigRational::new(sc.require(m + 2)?.clone(), denom.clone()));
        denom *= &order_int;
    }
    Ok(PowerSums {
        p,
        rho_minus_1: rat(sc.require(1)?.clone()),
        k_r,
    })
}

/// `p(m) = s(m+2)/|G|^(m+1)` for `m = 0, …, k_r − 1` and `ρ₋₁ = s(1)`.
/// Needs `s(1), …, s(k_r + 1)`.
pub fn power_sums_from_counts(sc: &SolutionCounts, order: u64, k_r: usize) -> Result<PowerSums> {
    power_sums(sc, order, k_r, k_r)
}

/// Like [`power_sums_from_counts`] but also includes `p(k_r)`, which needs
/// `s(k_r + 2)`. Used to check the `ρ₋₁` shortcut against Newton's identities.
pub fn power_sums_with_top(sc: &SolutionCounts, order: u64, k_r: usize) -> Result<PowerSums> {
    power_sums(sc, order, k_r, k_r + 1)
}

/// `σ₀, …, σ_upto` from `p(1), …, p(upto)` via
/// `k·σ_k = Σ_{i=1..k} (−1)^(i−1) σ_(k−i) p(i)`.
pub fn elementary_from_power_sums(p: &[BigRational], upto: usize) -> Vec<BigRational> {
    assert!(p.len() > upto || upto == 0, "need p(1..={upto})");
    let mut sigma = Vec::with_capacity(upto + 1);
    sigma.push(BigRational::one());
    for k in 1..=upto {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &sigma[k - i] * &p[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        sigma.push(acc / rat(k as u64));
    }
    sigma
}

/// A monic polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    pub coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// `X^n − σ₁X^(n−1) + σ₂X^(n−2) − … ± σₙ` from `σ₀ = 1, σ₁, …, σₙ`.
    pub fn from_elementary(sigma: &[BigRational]) -> Self {
        let n = sigma.len() - 1;
        let coeffs = (0..=n)
            .map(|k| {
                let s = sigma[n - k].clone();
                if (n - k) % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        RationalPolynomial { coeffs }
    }

    pub fn from_roots(roots: &[BigRational]) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for r in roots {
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        RationalPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Divides by `(X − root)`, returning the quotient and the remainder.
    pub fn deflate(&self, root: &BigRational) -> (RationalPolynomial, BigRational) {
        let n = self.degree();
        let mut quotient = vec![BigRational::zero(); n];
        let mut carry = BigRational::zero();
        for k in (0..=n).rev() {
            let value = &self.coeffs[k] + &carry * root;
            if k == 0 {
                return (RationalPolynomial { coeffs: quotient }, value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Multiplies through by the lcm of the denominators.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * rat(lcm.clone())).to_integer())
            .collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Girard–Newton for `σ₁, …, σ_(k_r−1)`, then `σ_(k_r) = σ_(k_r−1)/ρ₋₁`.
pub fn newton_elementary(ps: &PowerSums) -> Result<RationalPolynomial> {
    let n = ps.k_r;
    if n == 0 {
        return Err(Error::inconsistent("k_r = 0: no real classes"));
    }
    if ps.p.len() < n {
        return Err(Error::InsufficientSequence {
            needed: n + 1,
            have: ps.p.len() + 1,
        });
    }
    if ps.rho_minus_1.is_zero() {
        return Err(Error::inconsistent("ρ₋₁ = s(1) is zero"));
    }
    let mut sigma = elementary_from_power_sums(&ps.p, n - 1);
    let top = &sigma[n - 1] / &ps.rho_minus_1;
    if top.is_zero() {
        return Err(Error::inconsistent("constant term of the polynomial is zero"));
    }
    sigma.push(top);
    Ok(RationalPolynomial::from_elementary(&sigma))
}

/// Girard–Newton all the way to `σ_(k_r)`, using `p(k_r)` instead of `ρ₋₁`.
pub fn newton_elementary_long(ps: &PowerSums) -> Result<RationalPolynomial> {
    let n = ps.k_r;
    if ps.p.len() <= n {
        return Err(Error::InsufficientSequence {
            needed: n + 2,
            have: ps.p.len() + 1,
        });
    }
    let sigma = elementary_from_power_sums(&ps.p, n);
    if sigma[n].is_zero() {
        return Err(Error::inconsistent("constant term of the polynomial is zero"));
    }
    Ok(RationalPolynomial::from_elementary(&sigma))
}

/// Positive divisors of `n` in increasing order, by trial division.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64().filter(|&v| v <= 1 << 48).ok_or_else(|| {
        Error::inconsistent(format!("{n} too large for rational root search"))
    })?;
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            low.push(BigInt::from(d));
            if d * d != small {
                high.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Deflates by every hit from `candidates`, in order, with full multiplicity.
fn deflate_all(
    mut poly: RationalPolynomial,
    candidates: impl IntoIterator<Item = BigRational>,
    roots: &mut Vec<BigRational>,
) -> RationalPolynomial {
    for c in candidates {
        if poly.degree() == 0 {
            break;
        }
        loop {
            let (q, r) = poly.deflate(&c);
            if !r.is_zero() {
                break;
            }
            roots.push(c.clone());
            poly = q;
            if poly.degree() == 0 {
                break;
            }
        }
    }
    poly
}

fn signed_pairs(values: impl IntoIterator<Item = BigRational>) -> Vec<BigRational> {
    values.into_iter().flat_map(|v| [v.clone(), -v]).collect()
}

/// All roots of a monic polynomial that splits over the rationals.
///
/// Tries `±1/d` for each divisor `d` of `order` first, in decreasing
/// absolute value with the positive sign first; any remaining factor goes
/// through the general rational root theorem. A factor that still does
/// not split is an error.
pub fn extract_rational_roots(poly: &RationalPolynomial, order: u64) -> Result<Vec<BigRational>> {
    if poly.coeffs.last().is_none_or(|c| !c.is_one()) {
        return Err(Error::inconsistent("polynomial is not monic"));
    }
    if poly.degree() > 0 && poly.coeffs[0].is_zero() {
        return Err(Error::inconsistent("polynomial has zero constant term"));
    }
    let mut roots = Vec::with_capacity(poly.degree());
    let unit_fractions = divisors(&BigInt::from(order))?
        .into_iter()
        .map(|d| BigRational::new(BigInt::one(), d));
    let rest = deflate_all(poly.clone(), signed_pairs(unit_fractions), &mut roots);
    if rest.degree() == 0 {
        return Ok(roots);
    }

    let ints = rest.integer_coeffs();
    let lead = ints.last().expect("nonempty").clone();
    let constant = ints[0].clone();
    let mut candidates = Vec::new();
    for p in divisors(&constant)? {
        for q in divisors(&lead)? {
            candidates.push(BigRational::new(p.clone(), q));
        }
    }
    candidates.sort_by(|a, b| b.abs().cmp(&a.abs()));
    candidates.dedup();
    let rest = deflate_all(rest, signed_pairs(candidates), &mut roots);
    if rest.degree() == 0 {
        Ok(roots)
    } else {
        Err(Error::inconsistent(format!(
            "polynomial does not split over the rationals; leftover factor {rest}"
        )))
    }
}

/// The recovered multiset `{χ(1)ε(χ)}`, sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorMultiset {
    entries: Vec<BigInt>,
}

impl IndicatorMultiset {
    pub fn new(mut entries: Vec<BigInt>) -> Self {
        entries.sort_by(|a, b| b.cmp(a));
        IndicatorMultiset { entries }
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count_equal(&self, value: i64) -> usize {
        let v = BigInt::from(value);
        self.entries.iter().filter(|e| **e == v).count()
    }

    pub fn count_positive(&self) -> usize {
        self.entries.iter().filter(|e| e.is_positive()).count()
    }

    pub fn count_negative(&self) -> usize {
        self.entries.iter().filter(|e| e.is_negative()).count()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn sum_of_squares(&self) -> BigInt {
        self.entries.iter().map(|e| e * e).sum()
    }
}

impl fmt::Display for IndicatorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(BigInt::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Every stage of a recovery, for reporting.
#[derive(Clone, Debug)]
pub struct Recovery {
    pub order: u64,
    pub k_r: usize,
    pub counts: SolutionCounts,
    pub power_sums: PowerSums,
    pub polynomial: RationalPolynomial,
    pub roots: Vec<BigRational>,
    pub multiset: IndicatorMultiset,
}

/// Recovers the multiset from `s(1), …, s(k_r + 1)` and `|G|` alone, with
/// `k_r = s(2)/|G|`.
pub fn recover_from_counts(sc: &SolutionCounts, order: u64) -> Result<Recovery> {
    let s2 = sc.require(2)?;
    let (k_r, rem) = s2.div_rem(&BigInt::from(order));
    if !rem.is_zero() {
        return Err(Error::inconsistent(format!(
            "s(2) = {s2} is not divisible by |G| = {order}"
        )));
    }
    let k_r = k_r
        .to_usize()
        .ok_or_else(|| Error::inconsistent("k_r does not fit in usize"))?;
    let power_sums = power_sums_from_counts(sc, order, k_r)?;
    let polynomial = newton_elementary(&power_sums)?;
    let roots = extract_rational_roots(&polynomial, order)?;
    let entries = roots
        .iter()
        .map(|a| {
            let inv = a.recip();
            if inv.is_integer() {
                Ok(inv.to_integer())
            } else {
                Err(Error::inconsistent(format!("reciprocal of root {a} is not an integer")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Recovery {
        order,
        k_r,
        counts: sc.clone(),
        power_sums,
        polynomial,
        roots,
        multiset: IndicatorMultiset::new(entries),
    })
}

/// End to end: computes `s(1..=k_r+1)` in the class algebra and recovers.
pub fn recover(g: &Group, cd: &ClassData) -> Result<Recovery> {
    let sc = solution_count_sequence(g, cd, 2, cd.num_real_classes + 1, Strategy::ClassAlgebra)?;
    let rec = recover_from_counts(&sc, g.order() as u64)?;
    if rec.multiset.len() != cd.num_real_classes {
        return Err(Error::inconsistent(format!(
            "recovered {} entries but the group has {} real classes",
            rec.multiset.len(),
            cd.num_real_classes
        )));
    }
    Ok(rec)
}

pub fn recover_indicator_multiset(g: &Group, cd: &ClassData) -> Result<IndicatorMultiset> {
    recover(g, cd).map(|r| r.multiset)
}
