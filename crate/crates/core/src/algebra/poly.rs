use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact Laurent polynomial in `q` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality. Arithmetic is checked and panics on `i64` overflow.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `coeff · q^exp`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = checked_add(*entry, coeff);
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending order of exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| checked_add(acc, c))
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: i64) -> Self {
        LaurentPoly { terms: self.terms.range(..=max_degree).map(|(&e, &c)| (e, c)).collect() }
    }

    /// Product with all terms above `max_degree` discarded. Both factors must
    /// have nonnegative exponents for the truncation to be exact.
    pub fn mul_truncated(&self, other: &Self, max_degree: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            if ea > max_degree {
                break;
            }
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e > max_degree {
                    break;
                }
                out.add_term(e, checked_mul(ca, cb));
            }
        }
        out
    }

    /// `p(q) ↦ p(q⁻¹)`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// `p(q) ↦ q^k · p(q)`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Coefficient-wise `self ≤ other`.
    pub fn is_dominated_by(&self, other: &Self) -> bool {
        self.terms.keys().chain(other.terms.keys()).all(|&e| self.coeff(e) <= other.coeff(e))
    }
}

/// `(q)_n = (1−q)(1−q²)···(1−qⁿ)`, with `(q)_0 = 1`.
pub fn q_pochhammer(n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 1..=i64::from(n) {
        acc = &acc * &LaurentPoly::from_terms([(0, 1), (i, -1)]);
    }
    acc
}

/// `1/(q)_n` as a power series truncated at degree `max_degree`.
///
/// The coefficient of `q^d` counts partitions of `d` into parts of size at most `n`.
pub fn series_inverse_pochhammer(n: u32, max_degree: u32) -> LaurentPoly {
    let d = max_degree as usize;
    let mut counts = vec![0i64; d + 1];
    counts[0] = 1;
    for part in 1..=(n as usize).min(d) {
        for total in part..=d {
            counts[total] = checked_add(counts[total], counts[total - part]);
        }
    }
    LaurentPoly::from_terms(counts.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, checked_mul(ca, cb));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Ascending powers, e.g. `1 - q + 2q^3`. The zero polynomial prints as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

/// Inverse of the `Display` rendering. Whitespace is ignored and repeated
/// exponents are summed, so `"q + q"` parses as `2q`.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "polynomial", input: s.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        if compact == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && !(bytes[end] == b'-' && bytes[end - 1] != b'^') {
                end += 1;
            }
            let term = &compact[start..end];
            let (sign, body) = match term.as_bytes()[0] {
                b'+' => (1, &term[1..]),
                b'-' => (-1, &term[1..]),
                _ => (1, term),
            };
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<i64>().map_err(|_| err())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { body[..pos].parse::<i64>().map_err(|_| err())? };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse::<i64>().map_err(|_| err())?
                    };
                    (c, e)
                }
            };
            out.add_term(exp, sign * coeff);
            start = end;
        }
        Ok(out)
    }
}

/// Serialized as a map from decimal exponent strings to coefficients.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        for (e, c) in raw {
            let exp = e.parse::<i64>().map_err(de::Error::custom)?;
            out.add_term(exp, c);
        }
        Ok(out)
    }
}
