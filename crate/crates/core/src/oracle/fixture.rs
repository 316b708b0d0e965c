//! Hand-transcribed character tables, validated on load, and evaluation of
//! (higher) Frobenius–Schur indicators from them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, enumerate_group, parse_group_spec, ClassData, Group, SpecFormat};
use crate::recovery::IndicatorMultiset;

/// Embedded fixture files, by fixture name.
const FIXTURE_FILES: &[(&str, &str, &str)] = &[
    ("C1", "cyclic:1", include_str!("../../data/fixtures/c1.tbl")),
    ("C2", "cyclic:2", include_str!("../../data/fixtures/c2.tbl")),
    ("C3", "cyclic:3", include_str!("../../data/fixtures/c3.tbl")),
    ("C4", "cyclic:4", include_str!("../../data/fixtures/c4.tbl")),
    ("C2xC2", "elementary_abelian_2:2", include_str!("../../data/fixtures/c2xc2.tbl")),
    ("S3", "symmetric:3", include_str!("../../data/fixtures/s3.tbl")),
    ("D4", "dihedral:4", include_str!("../../data/fixtures/d4.tbl")),
    ("Q8", "quaternion:8", include_str!("../../data/fixtures/q8.tbl")),
    ("A4", "alternating:4", include_str!("../../data/fixtures/a4.tbl")),
    ("S4", "symmetric:4", include_str!("../../data/fixtures/s4.tbl")),
    ("SL(2,3)", "sl23", include_str!("../../data/fixtures/sl23.tbl")),
    ("C5", "cyclic:5", include_str!("../../data/fixtures/c5.tbl")),
    ("D5", "dihedral:5", include_str!("../../data/fixtures/d5.tbl")),
];

/// Names of all embedded fixtures.
pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURE_FILES.iter().map(|(name, _, _)| *name)
}

/// The preset string of the group a fixture describes.
pub fn fixture_preset(name: &str) -> Option<&'static str> {
    FIXTURE_FILES
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, preset, _)| *preset)
}

/// The fixture name for a preset string, if one is embedded.
pub fn fixture_for_preset(preset: &str) -> Option<&'static str> {
    FIXTURE_FILES
        .iter()
        .find(|(_, p, _)| *p == preset)
        .map(|(name, _, _)| *name)
}

/// A character table with class sizes, representative orders and the
/// squaring power map. Rows are characters, columns are classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTableFixture {
    pub name: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub rep_orders: Vec<u64>,
    pub square_map: Vec<usize>,
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTableFixture {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    /// Parses the text format and validates the table.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("").trim();
            (!l.is_empty()).then_some((i + 1, l))
        });
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| Error::Fixture(format!("missing {what} line")))
        };

        let (line_no, header) = next("header")?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let [name, order, k] = head[..] else {
            return Err(Error::parse(line_no, "expected `name order num_classes`"));
        };
        let order: u64 = order
            .parse()
            .map_err(|_| Error::parse(line_no, "bad group order"))?;
        let k: usize = k
            .parse()
            .map_err(|_| Error::parse(line_no, "bad class count"))?;

        fn ints<T: std::str::FromStr>(line_no: usize, line: &str, k: usize, what: &str) -> Result<Vec<T>> {
            let v = line
                .split_whitespace()
                .map(|t| t.parse::<T>().map_err(|_| Error::parse(line_no, format!("bad {what} entry `{t}`"))))
                .collect::<Result<Vec<T>>>()?;
            if v.len() != k {
                return Err(Error::parse(line_no, format!("expected {k} {what} entries, got {}", v.len())));
            }
            Ok(v)
        }

        let (l, line) = next("class sizes")?;
        let class_sizes = ints::<u64>(l, line, k, "class size")?;
        let (l, line) = next("representative orders")?;
        let rep_orders = ints::<u64>(l, line, k, "element order")?;
        let (l, line) = next("power map")?;
        let square_map = ints::<usize>(l, line, k, "power map")?;
        let mut values = Vec::with_capacity(k);
        for _ in 0..k {
            let (l, line) = next("character row")?;
            let row = line
                .split_whitespace()
                .map(Cyclotomic::parse)
                .collect::<Result<Vec<_>>>()?;
            if row.len() != k {
                return Err(Error::parse(l, format!("expected {k} character values, got {}", row.len())));
            }
            values.push(row);
        }
        if let Some((l, _)) = lines.next() {
            return Err(Error::parse(l, "unexpected trailing line"));
        }
        let fixture = CharacterTableFixture {
            name: name.to_string(),
            order,
            class_sizes,
            rep_orders,
            square_map,
            values,
        };
        fixture.validate()?;
        Ok(fixture)
    }

    /// Class sizes sum to the order, `Σ χ(1)² = |G|`, and the rows are
    /// orthonormal: `Σ_C |C| χ(C) conj(ψ(C)) = |G|·[χ = ψ]`.
    pub fn validate(&self) -> Result<()> {
        let k = self.num_classes();
        let fail = |msg: String| Err(Error::Fixture(format!("{}: {msg}", self.name)));
        if self.values.len() != k || self.values.iter().any(|r| r.len() != k) {
            return fail("table is not square".into());
        }
        if self.class_sizes.iter().sum::<u64>() != self.order {
            return fail("class sizes do not sum to the order".into());
        }
        if self.square_map.iter().any(|&c| c >= k) {
            return fail("power map index out of range".into());
        }
        let mut degree_sq = BigRational::zero();
        for row in &self.values {
            let Some(d) = row[0].to_rational() else {
                return fail("character degree is not rational".into());
            };
            degree_sq += &d * &d;
        }
        if degree_sq != BigRational::from_integer(BigInt::from(self.order)) {
            return fail(format!("sum of squared degrees is {degree_sq}, not {}", self.order));
        }
        for (i, chi) in self.values.iter().enumerate() {
            for (j, psi) in self.values.iter().enumerate() {
                let mut acc = Cyclotomic::zero();
                for c in 0..k {
                    let term = (&chi[c] * &psi[c].conj())
                        .scale(&BigRational::from_integer(BigInt::from(self.class_sizes[c])));
                    acc = &acc + &term;
                }
                let expected = if i == j { self.order as i64 } else { 0 };
                if acc != Cyclotomic::from_integer(expected) {
                    return fail(format!("rows {i} and {j} are not orthogonal (inner product {acc})"));
                }
            }
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .map(|row| row[0].to_rational().expect("validated"))
            .collect()
    }
}

pub fn fixture(name: &str) -> Result<CharacterTableFixture> {
    let (_, _, text) = FIXTURE_FILES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    CharacterTableFixture::parse(text)
}

/// `column_of[c]` is the fixture column aligned with computed class `c`.
///
/// Classes are matched on (element order, class size); ties are resolved by
/// requiring the squaring map of the group to agree with the fixture's
/// power map. Any remaining ambiguity is between classes exchanged by a
/// Galois or outer automorphism, which leaves indicators unchanged; the
/// first consistent assignment in index order is returned.
pub fn match_classes(fx: &CharacterTableFixture, g: &Group, cd: &ClassData) -> Result<Vec<usize>> {
    let k = cd.num_classes;
    if fx.order != g.order() as u64 || fx.num_classes() != k {
        return Err(Error::Fixture(format!(
            "fixture {} (order {}, {} classes) does not fit group of order {} with {k} classes",
            fx.name,
            fx.order,
            fx.num_classes(),
            g.order()
        )));
    }
    let signature: Vec<(u64, u64)> = (0..k)
        .map(|c| (g.element_order(cd.reps[c]) as u64, cd.sizes[c] as u64))
        .collect();
    let squares = cd.power_classes(g, 2);

    fn search(
        c: usize,
        fx: &CharacterTableFixture,
        signature: &[(u64, u64)],
        squares: &[usize],
        column_of: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = signature.len();
        if c == k {
            return (0..k).all(|c| column_of[squares[c]] == fx.square_map[column_of[c]]);
        }
        for col in 0..k {
            if used[col] || (fx.rep_orders[col], fx.class_sizes[col]) != signature[c] {
                continue;
            }
            column_of[c] = col;
            // prune with every square relation already decided
            let consistent = (0..=c).all(|d| {
                squares[d] > c || column_of[squares[d]] == fx.square_map[column_of[d]]
            });
            if consistent {
                used[col] = true;
                if search(c + 1, fx, signature, squares, column_of, used) {
                    return true;
                }
                used[col] = false;
            }
        }
        false
    }

    let mut column_of = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if search(0, fx, &signature, &squares, &mut column_of, &mut used) {
        Ok(column_of)
    } else {
        Err(Error::Fixture(format!(
            "could not match the classes of fixture {} to the group",
            fx.name
        )))
    }
}

/// `ε_k(χ) = (1/|G|) Σ_g χ(gᵏ)` for every fixture character, evaluated
/// with the k-th power map of the actual group.
pub fn fixture_indicators(
    fx: &CharacterTableFixture,
    column_of: &[usize],
    g: &Group,
    cd: &ClassData,
    k: u64,
) -> Result<Vec<BigRational>> {
    let powers = cd.power_classes(g, k);
    let inv_order = BigRational::new(BigInt::one(), BigInt::from(g.order()));
    fx.values
        .iter()
        .enumerate()
        .map(|(row, chi)| {
            let mut acc = Cyclotomic::zero();
            for c in 0..cd.num_classes {
                let value = &chi[column_of[powers[c]]];
                acc = &acc + &value.scale(&BigRational::from_integer(BigInt::from(cd.sizes[c])));
            }
            let eps = acc
                .scale(&inv_order)
                .to_rational()
                .filter(BigRational::is_integer)
                .ok_or_else(|| {
                    Error::Fixture(format!(
                        "{}: indicator of character {row} for k = {k} is not an integer",
                        fx.name
                    ))
                })?;
            Ok(eps)
        })
        .collect()
}

/// `{χ(1)ε(χ) : ε(χ) ≠ 0}` from an already matched fixture.
pub fn indicator_multiset_from_fixture(
    fx: &CharacterTableFixture,
    g: &Group,
    cd: &ClassData,
) -> Result<IndicatorMultiset> {
    let column_of = match_classes(fx, g, cd)?;
    let eps = fixture_indicators(fx, &column_of, g, cd, 2)?;
    let entries = fx
        .degrees()
        .iter()
        .zip(&eps)
        .filter(|(_, e)| !e.is_zero())
        .map(|(d, e)| (d * e).to_integer())
        .collect();
    Ok(IndicatorMultiset::new(entries))
}

/// Loads the named fixture, enumerates its group and evaluates the
/// Frobenius–Schur indicator of every character.
pub fn fixture_indicator_multiset(name: &str) -> Result<IndicatorMultiset> {
    let fx = fixture(name)?;
    let preset = fixture_preset(name).ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    let g = enumerate_group(&parse_group_spec(preset, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);
    indicator_multiset_from_fixture(&fx, &g, &cd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load_and_validate() {
        for name in fixture_names() {
            let fx = fixture(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(fx.name, name);
        }
        assert_eq!(fixture_names().count(), 13);
    }

    #[test]
    fn fixture_multiset_examples() {
        assert_eq!(fixture_indicator_multiset("Q8").unwrap(), IndicatorMultiset::from_i64s(&[1, 1, 1, 1, -2]));
        assert_eq!(fixture_indicator_multiset("S3").unwrap(), IndicatorMultiset::from_i64s(&[1, 1, 2]));
        assert_eq!(fixture_indicator_multiset("C3").unwrap(), IndicatorMultiset::from_i64s(&[1]));
        assert_eq!(fixture_indicator_multiset("SL(2,3)").unwrap(), IndicatorMultiset::from_i64s(&[3, 1, -2]));
        assert_eq!(fixture_indicator_multiset("D5").unwrap(), IndicatorMultiset::from_i64s(&[2, 2, 1, 1]));
        assert_eq!(fixture_indicator_multiset("A4").unwrap(), IndicatorMultiset::from_i64s(&[3, 1]));
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(fixture_indicator_multiset("M24"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn transcription_errors_fail_loudly() {
        let text = include_str!("../../data/fixtures/s3.tbl").replace("2 0 -1", "2 0 1");
        assert!(matches!(CharacterTableFixture::parse(&text), Err(Error::Fixture(_))));
        let text = include_str!("../../data/fixtures/s3.tbl").replace("1 3 2", "1 3 3");
        assert!(CharacterTableFixture::parse(&text).is_err());
    }

    #[test]
    fn mismatched_group_is_rejected() {
        let fx = fixture("D4").unwrap();
        let g = enumerate_group(&parse_group_spec("quaternion:8", SpecFormat::Preset).unwrap()).unwrap();
        let cd = conjugacy_classes(&g);
        // same table, different element orders
        assert!(matches!(match_classes(&fx, &g, &cd), Err(Error::Fixture(_))));
        let fx = fixture("S3").unwrap();
        assert!(match_classes(&fx, &g, &cd).is_err());
    }

    #[test]
    fn higher_indicator_of_c3_is_one() {
        let fx = fixture("C3").unwrap();
        let g = enumerate_group(&parse_group_spec("cyclic:3", SpecFormat::Preset).unwrap()).unwrap();
        let cd = conjugacy_classes(&g);
        let cols = match_classes(&fx, &g, &cd).unwrap();
        let eps3 = fixture_indicators(&fx, &cols, &g, &cd, 3).unwrap();
        assert!(eps3.iter().all(|e| e.is_one()));
    }
}
