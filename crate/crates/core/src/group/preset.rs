//! Named groups with small faithful permutation actions.

use super::perm::Permutation;
use super::spec::GroupSpec;
use crate::error::{Error, Result};

/// Names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &[
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion",
    "dicyclic",
    "sl23",
    "elementary_abelian_2",
];

/// The preset groups used by the verification suite, written as
/// `name[:param]` strings.
pub const STANDARD_PRESETS: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "cyclic:9",
    "cyclic:10",
    "cyclic:11",
    "cyclic:12",
    "elementary_abelian_2:2",
    "symmetric:3",
    "symmetric:4",
    "alternating:4",
    "alternating:5",
    "dihedral:4",
    "dihedral:5",
    "quaternion:8",
    "sl23",
];

fn single_param(name: &str, params: &[u64]) -> Result<usize> {
    match params {
        [n] => usize::try_from(*n)
            .map_err(|_| Error::InvalidParameter(format!("{name}: parameter too large"))),
        _ => Err(Error::InvalidParameter(format!(
            "{name} takes exactly one parameter, got {}",
            params.len()
        ))),
    }
}

fn no_params(name: &str, params: &[u64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} takes no parameters")))
    }
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    let pts: Vec<u32> = points.into_iter().map(|p| p as u32).collect();
    if pts.len() < 2 {
        return Ok(Permutation::identity(degree));
    }
    Permutation::from_cycles(degree, &[&pts])
}

fn from_map(degree: usize, f: impl Fn(usize) -> usize) -> Result<Permutation> {
    Permutation::new((0..degree).map(|i| f(i) as u32).collect())
}

/// Generators for the named group. Parameters follow the name after colons
/// in the textual form, e.g. `dihedral:4` is the dihedral group of order 8.
pub fn preset(name: &str, params: &[u64]) -> Result<GroupSpec> {
    let label = if params.is_empty() {
        name.to_string()
    } else {
        let ps: Vec<String> = params.iter().map(u64::to_string).collect();
        format!("{name}:{}", ps.join(":"))
    };
    let (degree, gens) = match name {
        "cyclic" => {
            let n = single_param(name, params)?;
            if n == 0 {
                return Err(Error::InvalidParameter("cyclic:0".into()));
            }
            (n, vec![cycle(n, 0..n)?])
        }
        "dihedral" => {
            let n = single_param(name, params)?;
            match n {
                0 => return Err(Error::InvalidParameter("dihedral:0".into())),
                1 => (2, vec![cycle(2, [0, 1])?]),
                2 => (
                    4,
                    vec![
                        Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
                        Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
                    ],
                ),
                _ => (
                    n,
                    vec![cycle(n, 0..n)?, from_map(n, |i| (n - i) % n)?],
                ),
            }
        }
        "symmetric" => {
            let n = single_param(name, params)?;
            if n == 0 {
                return Err(Error::InvalidParameter("symmetric:0".into()));
            }
            if n == 1 {
                (1, vec![])
            } else {
                (n, vec![cycle(n, [0, 1])?, cycle(n, 0..n)?])
            }
        }
        "alternating" => {
            let n = single_param(name, params)?;
            match n {
                0 => return Err(Error::InvalidParameter("alternating:0".into())),
                1 | 2 => (n, vec![]),
                3 => (3, vec![cycle(3, 0..3)?]),
                _ if n % 2 == 1 => (n, vec![cycle(n, 0..3)?, cycle(n, 0..n)?]),
                _ => (n, vec![cycle(n, 0..3)?, cycle(n, 1..n)?]),
            }
        }
        "quaternion" => {
            let order = single_param(name, params)?;
            if order < 8 || !order.is_power_of_two() {
                return Err(Error::InvalidParameter(format!(
                    "quaternion order must be a power of two >= 8, got {order}"
                )));
            }
            dicyclic(order / 4)?
        }
        "dicyclic" => {
            let n = single_param(name, params)?;
            if n == 0 {
                return Err(Error::InvalidParameter("dicyclic:0".into()));
            }
            dicyclic(n)?
        }
        "sl23" => {
            no_params(name, params)?;
            sl23()?
        }
        "elementary_abelian_2" => {
            let r = single_param(name, params)?;
            if r == 0 {
                (1, vec![])
            } else {
                let gens = (0..r)
                    .map(|i| cycle(2 * r, [2 * i, 2 * i + 1]))
                    .collect::<Result<Vec<_>>>()?;
                (2 * r, gens)
            }
        }
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(GroupSpec::from_generators(degree, gens)?.named(label))
}

/// Right regular action of `Dic_n = <a, x | a^2n, x^2 = a^n, x^-1 a x = a^-1>`
/// on its `4n` elements `a^i x^j`, indexed `i + 2n·j`.
fn dicyclic(n: usize) -> Result<(usize, Vec<Permutation>)> {
    let m = 2 * n;
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        if j == 0 {
            ((i + k) % m, l)
        } else {
            let i2 = (i + m - k) % m;
            if l == 0 {
                (i2, 1)
            } else {
                ((i2 + n) % m, 0)
            }
        }
    };
    let decode = |p: usize| (p % m, p / m);
    let encode = |(i, j): (usize, usize)| i + m * j;
    let degree = 2 * m;
    let a = from_map(degree, |p| encode(mul(decode(p), (1, 0))))?;
    let x = from_map(degree, |p| encode(mul(decode(p), (0, 1))))?;
    Ok((degree, vec![a, x]))
}

/// SL(2,3) acting on the eight nonzero column vectors of GF(3)^2.
fn sl23() -> Result<(usize, Vec<Permutation>)> {
    let index = |a: usize, b: usize| 3 * a + b - 1;
    let act = |m: [[usize; 2]; 2]| {
        from_map(8, move |p| {
            let (a, b) = ((p + 1) / 3, (p + 1) % 3);
            let a2 = (m[0][0] * a + m[0][1] * b) % 3;
            let b2 = (m[1][0] * a + m[1][1] * b) % 3;
            index(a2, b2)
        })
    };
    Ok((8, vec![act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_group;

    fn order(name: &str, params: &[u64]) -> usize {
        enumerate_group(&preset(name, params).unwrap()).unwrap().order()
    }

    #[test]
    fn preset_orders() {
        assert_eq!(order("cyclic", &[1]), 1);
        assert_eq!(order("cyclic", &[12]), 12);
        assert_eq!(order("dihedral", &[1]), 2);
        assert_eq!(order("dihedral", &[2]), 4);
        assert_eq!(order("dihedral", &[4]), 8);
        assert_eq!(order("dihedral", &[5]), 10);
        assert_eq!(order("symmetric", &[1]), 1);
        assert_eq!(order("symmetric", &[2]), 2);
        assert_eq!(order("symmetric", &[3]), 6);
        assert_eq!(order("symmetric", &[4]), 24);
        assert_eq!(order("alternating", &[3]), 3);
        assert_eq!(order("alternating", &[4]), 12);
        assert_eq!(order("alternating", &[5]), 60);
        assert_eq!(order("alternating", &[6]), 360);
        assert_eq!(order("quaternion", &[8]), 8);
        assert_eq!(order("quaternion", &[16]), 16);
        assert_eq!(order("dicyclic", &[3]), 12);
        assert_eq!(order("sl23", &[]), 24);
        assert_eq!(order("elementary_abelian_2", &[2]), 4);
        assert_eq!(order("elementary_abelian_2", &[3]), 8);
    }

    #[test]
    fn quaternion_is_a_regular_action_of_degree_8() {
        let spec = preset("quaternion", &[8]).unwrap();
        match spec.source {
            crate::group::GroupSource::Generators { degree, .. } => assert_eq!(degree, 8),
            _ => panic!("expected generators"),
        }
    }

    #[test]
    fn bad_presets() {
        assert!(matches!(preset("foo", &[]), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("cyclic", &[]), Err(Error::InvalidParameter(_))));
        assert!(matches!(preset("cyclic", &[0]), Err(Error::InvalidParameter(_))));
        assert!(matches!(preset("quaternion", &[12]), Err(Error::InvalidParameter(_))));
        assert!(matches!(preset("sl23", &[2]), Err(Error::InvalidParameter(_))));
    }
}
