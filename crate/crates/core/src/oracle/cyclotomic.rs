//! Exact arithmetic in the cyclotomic field Q(ζ₆₀), enough for character
//! values of the fixture groups (roots of unity of order 1, 2, 3, 4, 5, 6,
//! 10, 12, 15, 20, 30 and 60).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Order of the ambient root of unity.
pub const LEVEL: usize = 60;

/// Integer coefficients of the n-th cyclotomic polynomial, lowest first.
fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // Φ_n = (xⁿ − 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d);
        num = exact_div(&num, &phi_d);
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        // den is monic
        let c = rem[i + dn];
        q[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn modulus() -> &'static [i64] {
    static PHI: OnceLock<Vec<i64>> = OnceLock::new();
    PHI.get_or_init(|| cyclotomic_polynomial(LEVEL))
}

fn degree() -> usize {
    modulus().len() - 1
}

/// An element of Q(ζ₆₀) in the power basis `1, ζ, …, ζ^(φ(60)−1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    fn reduce(mut raw: Vec<BigRational>) -> Self {
        let phi = modulus();
        let d = phi.len() - 1;
        for top in (d..raw.len()).rev() {
            let c = std::mem::take(&mut raw[top]);
            if c.is_zero() {
                continue;
            }
            for (j, &pc) in phi.iter().enumerate().take(d) {
                raw[top - d + j] -= &c * BigRational::from_integer(BigInt::from(pc));
            }
        }
        raw.resize(d, BigRational::zero());
        Cyclotomic { coeffs: raw }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            coeffs: vec![BigRational::zero(); degree()],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = q;
        c
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `exp(2πi·k/n)` for `n` dividing [`LEVEL`].
    pub fn root_of_unity(n: usize, k: i64) -> Result<Self> {
        if n == 0 || !LEVEL.is_multiple_of(n) {
            return Err(Error::Fixture(format!(
                "root of unity of order {n} is outside Q(ζ{LEVEL})"
            )));
        }
        let e = (k.rem_euclid(n as i64) as usize) * (LEVEL / n);
        let mut raw = vec![BigRational::zero(); LEVEL];
        raw[e] = BigRational::one();
        Ok(Self::reduce(raw))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let mut raw = vec![BigRational::zero(); LEVEL];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(LEVEL - j) % LEVEL] += c;
        }
        Self::reduce(raw)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::from_integer(1);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Parses sums such as `-1`, `1/2`, `z3`, `-z3^2`, `2*z5+z5^4`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Fixture(format!("bad character value `{text}`: {why}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') && !s[..i].ends_with('^') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);

        let mut total = Self::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coef, root) = match body.find('z') {
                None => (body, None),
                Some(pos) => {
                    let coef = body[..pos].trim_end_matches('*');
                    (coef, Some(&body[pos + 1..]))
                }
            };
            let coef = if coef.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coef).ok_or_else(|| bad("coefficient"))?
            };
            let value = match root {
                None => Self::from_integer(1),
                Some(r) => {
                    let (n, e) = match r.split_once('^') {
                        Some((n, e)) => (n, e),
                        None => (r, "1"),
                    };
                    let n: usize = n.parse().map_err(|_| bad("root order"))?;
                    let e: i64 = e.parse().map_err(|_| bad("exponent"))?;
                    Self::root_of_unity(n, e)?
                }
            };
            let value = value.scale(&coef);
            total = if neg { &total - &value } else { &total + &value };
        }
        Ok(total)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let d = self.coeffs.len();
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(raw)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => c.to_string(),
                _ => format!("{c}*z{LEVEL}^{j}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
