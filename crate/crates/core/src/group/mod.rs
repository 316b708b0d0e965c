//! Finite permutation groups: enumeration, conjugacy classes, real classes
//! and the subgroup generated by squares.

mod classes;
mod perm;
mod preset;
mod spec;

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use classes::{conjugacy_classes, squares_subgroup_index, ClassData};
pub use perm::Permutation;
pub use preset::{preset, PRESET_NAMES, STANDARD_PRESETS};
pub use spec::{parse_group_spec, GroupSource, GroupSpec, SpecFormat};

use crate::error::{Error, Result};

/// Default bound on the number of elements [`enumerate_group`] will produce.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Largest order for which the full product table is stored.
pub const TABLE_LIMIT: usize = 4096;

/// Two generators of PSU(3,3) on the 28 isotropic points of the unitary
/// plane over GF(9), in the `.gens` format.
pub const PSU33_GENS: &str = include_str!("../../data/psu33.gens");

pub const PSU33_ORDER: usize = 6048;

/// Enumerates the embedded PSU(3,3) generators and checks the order.
pub fn psu33() -> Result<Group> {
    let spec = parse_group_spec(PSU33_GENS, SpecFormat::Gens)?.named("PSU(3,3)");
    let g = enumerate_group(&spec)?;
    if g.order() != PSU33_ORDER {
        return Err(Error::inconsistent(format!(
            "PSU(3,3) generators give order {}, expected {PSU33_ORDER}",
            g.order()
        )));
    }
    Ok(g)
}

/// A finite group with all elements enumerated. Element `0` is the identity.
///
/// Products follow left-to-right permutation composition:
/// `product(i, j)` applies element `i` first, then element `j`.
#[derive(Clone)]
pub struct Group {
    name: Option<String>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    generators: Vec<usize>,
    inverses: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("degree", &self.degree())
            .finish()
    }
}

pub fn enumerate_group(spec: &GroupSpec) -> Result<Group> {
    enumerate_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

/// Breadth-first closure from the identity, multiplying each discovered
/// element by the generators in input order.
pub fn enumerate_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<Group> {
    let (degree, gens, expected) = match &spec.source {
        GroupSource::Generators { degree, generators } => (*degree, generators.clone(), None),
        GroupSource::Table(table) => {
            // right regular action: x -> x·j
            let n = table.len();
            let gens = (0..n)
                .map(|j| Permutation::new(table.iter().map(|row| row[j]).collect()))
                .collect::<Result<Vec<_>>>()?;
            (n, gens, Some(n))
        }
    };
    let limit = expected.map_or(cap, |n| n.min(cap));

    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut lookup = HashMap::new();
    lookup.insert(identity, 0u32);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = elements[x].then(g);
            if !lookup.contains_key(&y) {
                if elements.len() >= limit {
                    return Err(match expected {
                        Some(n) if n < cap => Error::InvalidTable(
                            "right translations generate more than `order` elements; \
                             the table is not associative"
                                .into(),
                        ),
                        _ => Error::OrderCapExceeded { cap },
                    });
                }
                lookup.insert(y.clone(), elements.len() as u32);
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }

    let generators = gens.iter().map(|g| lookup[g] as usize).collect();
    let inverses = elements.iter().map(|e| lookup[&e.inverse()]).collect();
    let mut group = Group {
        name: spec.name.clone(),
        elements,
        lookup,
        generators,
        inverses,
        table: None,
    };
    if group.order() <= TABLE_LIMIT {
        group.table = Some(group.build_table());
    }

    if let (GroupSource::Table(table), Some(n)) = (&spec.source, expected) {
        if group.order() != n {
            return Err(Error::InvalidTable(format!(
                "table describes {} elements but its translations generate {}",
                n,
                group.order()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if group.product(i, j) != v as usize {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails at row {i}, column {j}"
                    )));
                }
            }
        }
    }
    Ok(group)
}

impl Group {
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Indices of the generators used for enumeration, in input order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).map(|&i| i as usize)
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.lookup[&self.elements[i].then(&self.elements[j])] as usize,
        }
    }

    #[inline]
    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.product(self.product(self.inverse(g), x), g)
    }

    pub fn power(&self, x: usize, k: u64) -> usize {
        let mut result = 0;
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.product(result, base);
            }
            base = self.product(base, base);
            e >>= 1;
        }
        result
    }

    /// The map `h ↦ hᵏ` over all element indices.
    pub fn power_map(&self, k: u64) -> Vec<usize> {
        (0..self.order()).map(|h| self.power(h, k)).collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != 0 {
            y = self.product(y, x);
            n += 1;
        }
        n
    }

    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let rows: Vec<Vec<u32>> = self
            .elements
            .par_iter()
            .map(|a| {
                let mut scratch = a.clone();
                self.elements
                    .iter()
                    .map(|b| {
                        a.then_into(b, &mut scratch);
                        self.lookup[&scratch]
                    })
                    .collect()
            })
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend(row);
        }
        table
    }

    /// Checks the Latin-square property of the product table, the identity
    /// and inverse axioms, and associativity on all triples when the order
    /// is at most 24, otherwise on `samples` seeded random triples.
    pub fn check_axioms(&self, samples: usize, seed: u64) -> std::result::Result<(), String> {
        let n = self.order();
        for i in 0..n {
            if self.product(0, i) != i || self.product(i, 0) != i {
                return Err(format!("identity axiom fails at element {i}"));
            }
            if self.product(i, self.inverse(i)) != 0 || self.product(self.inverse(i), i) != 0 {
                return Err(format!("inverse axiom fails at element {i}"));
            }
        }
        if n <= TABLE_LIMIT {
            let mut row_seen = vec![usize::MAX; n];
            let mut col_seen = vec![usize::MAX; n];
            for i in 0..n {
                for j in 0..n {
                    let r = self.product(i, j);
                    let c = self.product(j, i);
                    if row_seen[r] == i || col_seen[c] == i {
                        return Err(format!("Latin square property fails in row/column {i}"));
                    }
                    row_seen[r] = i;
                    col_seen[c] = i;
                }
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            if self.product(self.product(a, b), c) == self.product(a, self.product(b, c)) {
                Ok(())
            } else {
                Err(format!("associativity fails on ({a}, {b}, {c})"))
            }
        };
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }
}
