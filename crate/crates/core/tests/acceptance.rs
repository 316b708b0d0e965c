//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All comparisons are exact; the only tolerances are
//! the wall-clock budgets below.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use fsikit::class_algebra::{solution_count_sequence, SolutionCounts, Strategy};
use fsikit::group::{
    conjugacy_classes, enumerate_group, parse_group_spec, psu33, squares_subgroup_index, ClassData, Group,
    SpecFormat, STANDARD_PRESETS,
};
use fsikit::indicators::{default_scan_bound, detect_negative_indicator, higher_indicator_check, verify_limit_identity};
use fsikit::oracle::naive::{literal_feasible, literal_tuple_count};
use fsikit::oracle::{fixture, fixture_indicator_multiset, fixture_names, fixture_preset, verify_bijection};
use fsikit::recovery::{
    newton_elementary, newton_elementary_long, power_sums_with_top, recover, recover_indicator_multiset,
    IndicatorMultiset,
};

const BUDGET_IDENTITY: Duration = Duration::from_secs(5);
const BUDGET_FIXTURES: Duration = Duration::from_secs(5);
const BUDGET_STRATEGIES: Duration = Duration::from_secs(60);
const BUDGET_PSU33: Duration = Duration::from_secs(600);
const BIJECTION_MAX_ORDER: usize = 48;
const HIGHER_K: u64 = 3;
const HIGHER_MAX_N: usize = 6;
const PSU33_MAX_N: usize = 8;

type Outcome = Result<String, String>;

fn load(preset: &str) -> (Group, ClassData) {
    let g = enumerate_group(&parse_group_spec(preset, SpecFormat::Preset).expect("preset parses")).expect("enumerates");
    let cd = conjugacy_classes(&g);
    (g, cd)
}

fn presets() -> Vec<(&'static str, Group, ClassData)> {
    STANDARD_PRESETS
        .iter()
        .map(|&p| {
            let (g, cd) = load(p);
            (p, g, cd)
        })
        .collect()
}

fn counts(g: &Group, cd: &ClassData, max_n: usize) -> SolutionCounts {
    solution_count_sequence(g, cd, 2, max_n, Strategy::ClassAlgebra).expect("counts")
}

fn within(budget: Duration, start: Instant, detail: String) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed <= budget {
        Ok(format!("{detail}; {elapsed:.2?} of {budget:?}"))
    } else {
        Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
    }
}

fn s2_identity() -> Outcome {
    let start = Instant::now();
    let groups = presets();
    for (name, g, cd) in &groups {
        let s2 = counts(g, cd, 2).values[1].clone();
        let expected = BigInt::from(g.order()) * BigInt::from(cd.num_real_classes);
        if s2 != expected {
            return Err(format!("{name}: s(2) = {s2}, |G|*k_r = {expected}"));
        }
    }
    within(BUDGET_IDENTITY, start, format!("{} presets", groups.len()))
}

fn fixture_multisets() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for name in fixture_names() {
        let (g, cd) = load(fixture_preset(name).unwrap());
        let recovered = recover_indicator_multiset(&g, &cd).map_err(|e| format!("{name}: {e}"))?;
        let expected = fixture_indicator_multiset(name).map_err(|e| format!("{name}: {e}"))?;
        if recovered != expected {
            return Err(format!("{name}: recovered {{{recovered}}}, fixture {{{expected}}}"));
        }
        let pinned = match name {
            "S3" => Some(IndicatorMultiset::from_i64s(&[1, 1, 2])),
            "Q8" => Some(IndicatorMultiset::from_i64s(&[1, 1, 1, 1, -2])),
            _ => None,
        };
        if pinned.is_some_and(|p| p != recovered) {
            return Err(format!("{name}: recovered {{{recovered}}}"));
        }
        if name == "SL(2,3)" && recovered.count_equal(-2) == 0 {
            return Err(format!("SL(2,3): {{{recovered}}} has no -2"));
        }
        n += 1;
    }
    if n != 13 {
        return Err(format!("expected 13 fixtures, found {n}"));
    }
    within(BUDGET_FIXTURES, start, format!("{n} fixtures"))
}

fn strategy_equivalence() -> Outcome {
    let start = Instant::now();
    let mut literal = 0;
    for (name, g, cd) in presets() {
        let upto = cd.num_real_classes + 2;
        let a = counts(&g, &cd, upto);
        let b = solution_count_sequence(&g, &cd, 2, upto, Strategy::ElementDp).unwrap();
        if a != b {
            return Err(format!("{name}: class_algebra {:?} vs element_dp {:?}", a.values, b.values));
        }
        for n in (1..=upto).filter(|&n| literal_feasible(&g, n)) {
            let c = literal_tuple_count(&g, n, 2).unwrap();
            if Some(&c) != a.get(n) {
                return Err(format!("{name}: n = {n}, literal {c} vs {:?}", a.get(n)));
            }
            literal += 1;
        }
    }
    within(BUDGET_STRATEGIES, start, format!("{} presets, {literal} literal counts", STANDARD_PRESETS.len()))
}

fn negative_criterion() -> Outcome {
    let (g, cd) = load("quaternion:8");
    let sc = counts(&g, &cd, 6);
    let w = detect_negative_indicator(&sc, 8, 5).map_err(|e| e.to_string())?;
    match &w {
        Some(w) if w.n == 3 && w.lhs == BigInt::from(1792) && w.rhs == BigInt::from(2176) => {}
        other => return Err(format!("Q8 witness {other:?}")),
    }

    let start = Instant::now();
    let g = psu33().map_err(|e| e.to_string())?;
    let cd = conjugacy_classes(&g);
    let sc = counts(&g, &cd, PSU33_MAX_N);
    let w = detect_negative_indicator(&sc, g.order() as u64, PSU33_MAX_N - 1).map_err(|e| e.to_string())?;
    match w {
        Some(w) if w.n == 5 => within(
            BUDGET_PSU33,
            start,
            format!("Q8 n=3 1792 < 2176; PSU(3,3) n=5 {} < {}", w.lhs, w.rhs),
        ),
        other => Err(format!("PSU(3,3) witness {other:?}")),
    }
}

fn bijection() -> Outcome {
    let mut n = 0;
    for (name, g, cd) in presets().into_iter().filter(|(_, g, _)| g.order() <= BIJECTION_MAX_ORDER) {
        let report = verify_bijection(&g, &cd).map_err(|e| format!("{name}: {e}"))?;
        if !report.passed() {
            return Err(format!("{name}:\n{report}"));
        }
        let s2 = counts(&g, &cd, 2).values[1].clone();
        let expected = format!("|A| = {s2}, |B| = {s2}, |G|*k_r = {s2}");
        if report.checks.last().map(|c| c.detail.as_str()) != Some(expected.as_str()) {
            return Err(format!("{name}: cardinalities differ from s(2) = {s2}"));
        }
        n += 1;
    }
    Ok(format!("{n} groups with |G| <= {BIJECTION_MAX_ORDER}"))
}

fn limit_identity() -> Outcome {
    for (name, g, cd) in presets() {
        let im = recover_indicator_multiset(&g, &cd).map_err(|e| format!("{name}: {e}"))?;
        let r = verify_limit_identity(&im, &g);
        if !r.passed || r.squares_index != squares_subgroup_index(&g) {
            return Err(format!("{name}: {} ones, index {}", r.ones, r.squares_index));
        }
    }
    Ok(format!("{} presets", STANDARD_PRESETS.len()))
}

fn shortcut() -> Outcome {
    for (name, g, cd) in presets() {
        let k_r = cd.num_real_classes;
        let sc = counts(&g, &cd, k_r + 2);
        let ps = power_sums_with_top(&sc, g.order() as u64, k_r).map_err(|e| format!("{name}: {e}"))?;
        let short = newton_elementary(&ps).map_err(|e| format!("{name}: {e}"))?;
        let long = newton_elementary_long(&ps).map_err(|e| format!("{name}: {e}"))?;
        if short != long {
            return Err(format!("{name}: {short} vs {long}"));
        }
    }
    Ok(format!("{} presets", STANDARD_PRESETS.len()))
}

fn higher_indicators() -> Outcome {
    for name in ["C2", "C3", "S3", "Q8"] {
        let (g, cd) = load(fixture_preset(name).unwrap());
        let fx = fixture(name).map_err(|e| e.to_string())?;
        let r = higher_indicator_check(&g, &cd, HIGHER_K, HIGHER_MAX_N, Some(&fx)).map_err(|e| format!("{name}: {e}"))?;
        if r.passed() != Some(true) {
            return Err(format!("{name}: {:?} vs {:?}", r.ratios, r.character_side));
        }
    }
    Ok(format!("k = {HIGHER_K}, n <= {HIGHER_MAX_N} on C2, C3, S3, Q8"))
}

fn monotonicity() -> Outcome {
    let mut checked = 0;
    for (name, g, cd) in presets() {
        let rec = recover(&g, &cd).map_err(|e| format!("{name}: {e}"))?;
        if rec.multiset.count_negative() > 0 {
            continue;
        }
        let sc = counts(&g, &cd, default_scan_bound(cd.num_real_classes) + 1);
        let order = BigInt::from(g.order());
        for n in 1..sc.max_n() {
            let (s, next) = (sc.get(n).unwrap(), sc.get(n + 1).unwrap());
            if *next > s * &order || s.is_zero() {
                return Err(format!("{name}: s({}) = {next} > |G|*s({n}) = {}", n + 1, s * &order));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} presets without negative entries"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 s(2) = |G|*k_r on every preset", s2_identity),
        ("2 recovered multiset = character table multiset", fixture_multisets),
        ("3 class_algebra = element_dp = literal, n <= k_r+2", strategy_equivalence),
        ("4 negative-indicator witnesses Q8 n=3, PSU(3,3) n=5", negative_criterion),
        ("5 bijection between A and B", bijection),
        ("6 #{entries = 1} = [G : <g^2>]", limit_identity),
        ("7 shortcut sigma_k_r = long path", shortcut),
        ("8 higher indicator identity", higher_indicators),
        ("9 s(n+1) <= |G|*s(n) without negative entries", monotonicity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS  {name}  ({detail})"),
            Ok(Err(detail)) => {
                failed += 1;
                println!("FAIL  {name}  ({detail})");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  {name}  (panicked)");
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
