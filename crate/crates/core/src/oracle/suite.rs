//! Every cross-check for a list of groups, collected into one report.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::bijection::{verify_bijection, BIJECTION_LIMIT};
use super::fixture::{fixture, fixture_for_preset, indicator_multiset_from_fixture, CharacterTableFixture};
use super::naive::{literal_feasible, literal_tuple_count};
use super::report::VerificationReport;
use crate::class_algebra::{solution_count_sequence, SolutionCounts, Strategy};
use crate::error::Result;
use crate::group::{conjugacy_classes, enumerate_group, parse_group_spec, ClassData, Group, SpecFormat};
use crate::indicators::{default_scan_bound, detect_negative_indicator, first_increase, verify_limit_identity};
use crate::recovery::{
    newton_elementary, newton_elementary_long, power_sums_with_top, recover_from_counts, IndicatorMultiset,
};

const AXIOM_SAMPLES: usize = 2000;
const AXIOM_SEED: u64 = 0x5eed;

/// `|G|^(n−1) Σ_a a^(n−2)` over `a = 1/m` for the entries `m`.
fn resynthesize(im: &IndicatorMultiset, order: u64, n: usize) -> BigRational {
    let order = BigInt::from(order);
    let sum = im
        .entries()
        .iter()
        .map(|m| {
            let a = BigRational::new(BigInt::one(), m.clone());
            if n == 1 {
                a.recip()
            } else {
                num_traits::pow(a, n - 2)
            }
        })
        .fold(BigRational::zero(), |acc, x| acc + x);
    sum * BigRational::from_integer(num_traits::pow(order, n - 1))
}

fn record_err<T>(report: &mut VerificationReport, label: &str, name: &str, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            report.record(label, name, false, e.to_string());
            None
        }
    }
}

fn strategy_checks(report: &mut VerificationReport, label: &str, g: &Group, reference: &SolutionCounts, upto: usize) {
    let dp = solution_count_sequence(g, &conjugacy_classes(g), 2, upto, Strategy::ElementDp);
    if let Some(dp) = record_err(report, label, "strategies: class_algebra = element_dp", dp) {
        let mismatch = (1..=upto).find(|&n| dp.get(n) != reference.get(n));
        report.record(
            label,
            "strategies: class_algebra = element_dp",
            mismatch.is_none(),
            match mismatch {
                None => format!("n <= {upto}"),
                Some(n) => format!("n = {n}: {:?} vs {:?}", reference.get(n), dp.get(n)),
            },
        );
    }
    let feasible: Vec<usize> = (1..=upto).filter(|&n| literal_feasible(g, n)).collect();
    if feasible.is_empty() {
        return;
    }
    let mut mismatch = None;
    for &n in &feasible {
        match literal_tuple_count(g, n, 2) {
            Ok(v) if Some(&v) == reference.get(n) => {}
            Ok(v) => {
                mismatch = Some(format!("n = {n}: literal {v} vs {:?}", reference.get(n)));
                break;
            }
            Err(e) => {
                mismatch = Some(e.to_string());
                break;
            }
        }
    }
    report.record(
        label,
        "strategies: class_algebra = literal count",
        mismatch.is_none(),
        mismatch.unwrap_or_else(|| format!("n <= {}", feasible.last().unwrap())),
    );
}

fn recovery_checks(
    report: &mut VerificationReport,
    label: &str,
    g: &Group,
    cd: &ClassData,
    counts: &SolutionCounts,
) -> Option<IndicatorMultiset> {
    let order = g.order() as u64;
    let rec = record_err(report, label, "recovery", recover_from_counts(counts, order))?;
    let im = rec.multiset;
    report.record(
        label,
        "recovery: cardinality = k_r",
        im.len() == cd.num_real_classes,
        format!("{} entries, k_r = {}", im.len(), cd.num_real_classes),
    );
    let s1 = counts.get(1).cloned().unwrap_or_default();
    report.record(label, "recovery: sum = s(1)", im.sum() == s1, format!("sum {} vs s(1) {s1}", im.sum()));
    let sq = im.sum_of_squares();
    let all_real = cd.num_real_classes == cd.num_classes;
    let bound_ok = sq <= BigInt::from(order) && (sq == BigInt::from(order)) == all_real;
    report.record(
        label,
        "recovery: sum of squares <= |G|, equality iff all classes real",
        bound_ok,
        format!("{sq} vs {order}, all real: {all_real}"),
    );
    let bad_divisor = im.entries().iter().find(|m| !BigInt::from(order).is_multiple_of(&m.abs()));
    report.record(
        label,
        "recovery: |entry| divides |G|",
        bad_divisor.is_none(),
        bad_divisor.map_or(String::new(), |m| format!("{m} does not divide {order}")),
    );
    report.record(
        label,
        "recovery: trivial character present",
        im.count_equal(1) >= 1,
        format!("{} entries equal to 1", im.count_equal(1)),
    );
    let bad_n = (1..=counts.max_n())
        .find(|&n| resynthesize(&im, order, n) != BigRational::from_integer(counts.get(n).unwrap().clone()));
    report.record(
        label,
        "recovery: multiset reproduces s(n)",
        bad_n.is_none(),
        match bad_n {
            None => format!("n <= {}", counts.max_n()),
            Some(n) => format!("n = {n}: {} vs {}", resynthesize(&im, order, n), counts.get(n).unwrap()),
        },
    );
    Some(im)
}

/// Runs every check on an enumerated group. Errors become failed checks.
pub fn verify_group(
    label: &str,
    g: &Group,
    cd: &ClassData,
    fx: Option<&CharacterTableFixture>,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let order = g.order() as u64;
    let k_r = cd.num_real_classes;

    let axioms = g.check_axioms(AXIOM_SAMPLES, AXIOM_SEED);
    report.record(label, "group axioms", axioms.is_ok(), axioms.err().unwrap_or_default());

    let scan = default_scan_bound(k_r);
    let counts = solution_count_sequence(g, cd, 2, scan + 1, Strategy::ClassAlgebra);
    let Some(counts) = record_err(&mut report, label, "solution counts", counts) else {
        return report;
    };

    strategy_checks(&mut report, label, g, &counts, k_r + 2);

    let s2 = counts.get(2).unwrap();
    let expected = BigInt::from(order) * BigInt::from(k_r);
    report.record(label, "s(2) = |G|*k_r", *s2 == expected, format!("{s2} vs {expected}"));

    let im = recovery_checks(&mut report, label, g, cd, &counts);

    if let Some(fx) = fx {
        let valid = fx.validate();
        report.record(label, "fixture: orthogonality", valid.is_ok(), valid.err().map(|e| e.to_string()).unwrap_or_default());
        let expected = indicator_multiset_from_fixture(fx, g, cd);
        if let (Some(expected), Some(im)) = (record_err(&mut report, label, "fixture: multiset", expected), &im) {
            report.record(
                label,
                "fixture: multiset",
                *im == expected,
                format!("recovered {{{im}}}, fixture {{{expected}}}"),
            );
        }
    }

    if g.order() <= BIJECTION_LIMIT {
        if let Some(r) = record_err(&mut report, label, "bijection", verify_bijection(g, cd)) {
            report.extend(r);
        }
    }

    if let Some(im) = &im {
        let limit = verify_limit_identity(im, g);
        report.record(
            label,
            "limit identity: #{entries = 1} = [G : N]",
            limit.passed,
            format!("{} vs {}", limit.ones, limit.squares_index),
        );

        let witness = detect_negative_indicator(&counts, order, scan);
        if let Some(witness) = record_err(&mut report, label, "monotonicity", witness) {
            let negatives = im.count_negative();
            let increase = first_increase(&counts, order);
            // a witness forces a negative entry; no negative entry forces monotone decrease
            let consistent = (witness.is_none() || negatives > 0) && (negatives > 0 || increase.is_none());
            report.record(
                label,
                "monotonicity: witness agrees with recovered signs",
                consistent,
                format!(
                    "witness {}, first increase {:?}, negative entries {negatives}",
                    witness.map_or("none".to_string(), |w| format!("n = {}", w.n)),
                    increase
                ),
            );
        }
    }

    let paths = power_sums_with_top(&counts, order, k_r)
        .and_then(|ps| Ok((newton_elementary(&ps)?, newton_elementary_long(&ps)?)));
    if let Some((short, long)) = record_err(&mut report, label, "shortcut = long path", paths) {
        report.record(label, "shortcut = long path", short == long, format!("{short} vs {long}"));
    }
    report
}

fn verify_preset(name: &str) -> Result<VerificationReport> {
    let g = enumerate_group(&parse_group_spec(name, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);
    let fx = fixture_for_preset(name).map(fixture).transpose()?;
    Ok(verify_group(name, &g, &cd, fx.as_ref()))
}

/// Checks each preset in parallel; the report keeps input order.
pub fn run_verification_suite(names: &[&str]) -> Result<VerificationReport> {
    let reports: Vec<Result<VerificationReport>> = names.par_iter().map(|n| verify_preset(n)).collect();
    let mut out = VerificationReport::new();
    for r in reports {
        out.extend(r?);
    }
    Ok(out)
}
