use std::fmt;
use std::str::FromStr;

use super::perm::Permutation;
use super::preset;
use crate::error::{Error, Result};

/// How a group description is written down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecFormat {
    /// Line 1 is the degree, then one generator per line as 0-based images.
    Gens,
    /// Line 1 is the order, then `order` rows of 0-based product indices.
    MultTable,
    /// `name[:param[:param…]]`, see [`preset`](super::preset()).
    Preset,
}

impl FromStr for SpecFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gens" => Ok(SpecFormat::Gens),
            "multtable" => Ok(SpecFormat::MultTable),
            "preset" => Ok(SpecFormat::Preset),
            other => Err(Error::parse(0, format!("unknown input format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Generators {
        degree: usize,
        generators: Vec<Permutation>,
    },
    /// Row-major multiplication table, `table[i][j] = i·j`, identity at 0.
    Table(Vec<Vec<u32>>),
}

/// A validated description of a finite group, not yet enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub source: GroupSource,
}

impl GroupSpec {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator of degree {} in a spec of degree {degree}",
                bad.degree()
            )));
        }
        Ok(GroupSpec {
            name: None,
            source: GroupSource::Generators { degree, generators },
        })
    }

    pub fn from_table(table: Vec<Vec<u32>>) -> Result<Self> {
        validate_table(&table)?;
        Ok(GroupSpec {
            name: None,
            source: GroupSource::Table(table),
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn num_generators(&self) -> usize {
        match &self.source {
            GroupSource::Generators { generators, .. } => generators.len(),
            GroupSource::Table(t) => t.len(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => f.write_str(n),
            None => match &self.source {
                GroupSource::Generators { degree, generators } => write!(
                    f,
                    "<{} generators on {degree} points>",
                    generators.len()
                ),
                GroupSource::Table(t) => write!(f, "<table of order {}>", t.len()),
            },
        }
    }
}

fn validate_table(table: &[Vec<u32>]) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(Error::InvalidTable("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidTable(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v as usize >= n) {
            return Err(Error::InvalidTable(format!("index {bad} out of range in row {i}")));
        }
    }
    for i in 0..n {
        if table[0][i] as usize != i || table[i][0] as usize != i {
            return Err(Error::InvalidTable(
                "row 0 and column 0 must be the identity".into(),
            ));
        }
    }
    let mut seen = vec![0usize; n];
    for (i, row) in table.iter().enumerate() {
        for &v in row {
            if seen[v as usize] == i + 1 {
                return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
            }
            seen[v as usize] = i + 1;
        }
    }
    let mut seen = vec![0usize; n];
    for j in 0..n {
        for row in table {
            let v = row[j] as usize;
            if seen[v] == j + 1 {
                return Err(Error::InvalidTable(format!("column {j} is not a permutation")));
            }
            seen[v] = j + 1;
        }
    }
    Ok(())
}

/// Yields `(line_number, content)` with comments and blank lines removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_row(line_no: usize, line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::parse(line_no, format!("expected a 0-based index, got `{tok}`")))
        })
        .collect()
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, what: &str) -> Result<usize> {
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing {what} line")))?;
    line.parse::<usize>()
        .map_err(|_| Error::parse(line_no, format!("expected {what}, got `{line}`")))
}

pub fn parse_group_spec(text: &str, format: SpecFormat) -> Result<GroupSpec> {
    match format {
        SpecFormat::Gens => {
            let mut lines = content_lines(text);
            let degree = parse_header(&mut lines, "degree")?;
            if degree == 0 {
                return Err(Error::parse(1, "degree must be positive"));
            }
            let mut generators = Vec::new();
            for (line_no, line) in lines {
                let row = parse_row(line_no, line)?;
                if row.len() != degree {
                    return Err(Error::parse(
                        line_no,
                        format!(
                            "ragged permutation line: {} images for degree {degree}",
                            row.len()
                        ),
                    ));
                }
                generators.push(Permutation::new(row)?);
            }
            GroupSpec::from_generators(degree, generators)
        }
        SpecFormat::MultTable => {
            let mut lines = content_lines(text);
            let order = parse_header(&mut lines, "order")?;
            let mut table = Vec::with_capacity(order);
            for (line_no, line) in lines {
                table.push(parse_row(line_no, line)?);
            }
            if table.len() != order {
                return Err(Error::InvalidTable(format!(
                    "expected {order} rows, found {}",
                    table.len()
                )));
            }
            GroupSpec::from_table(table)
        }
        SpecFormat::Preset => {
            let text = text.trim();
            let mut parts = text.split(':');
            let name = parts.next().unwrap_or_default();
            let params = parts
                .map(|p| {
                    p.parse::<u64>()
                        .map_err(|_| Error::InvalidParameter(format!("`{p}` in `{text}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            preset::preset(name, &params)
        }
    }
}
