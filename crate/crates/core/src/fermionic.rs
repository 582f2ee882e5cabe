//! Bethe-ansatz q-multiplicities `M_{λ,μ}(q)`.
//!
//! For dominant `λ, μ` with `μ − λ = k₁α₁ + k₂α₂`, the polynomial is a sum
//! over string configurations `m^a_i` (with `Σ_i i·m^a_i = k_a`) of
//!
//! ```text
//! q^{c(m)} · Π_{a,i} [P^a_i + m^a_i choose m^a_i]_q
//! ```
//!
//! where `P^a_i` is the vacancy number and `c(m)` the charge, both built
//! from the matrix `Φ^{a,b}_{i,j}`. The binomial is the Gaussian
//! coefficient `(q)_{P+m} / ((q)_P (q)_m)`; a configuration with a negative
//! vacancy at an occupied position contributes nothing, while vacancies at
//! unoccupied positions are unconstrained.

use std::fmt;

use serde::Serialize;

use crate::algebra::{pairing, LaurentPoly, Weight};
use crate::error::{Error, Result};

/// Squared lengths of the simple roots, `α₁² = 1`, `α₂² = 2`.
const ROOT_LEN2: [i64; 2] = [1, 2];
/// `(α_a, α_b)`.
const ROOT_FORM: [[i64; 2]; 2] = [[1, -1], [-1, 2]];

/// String numbers `m^a_i` for the two colors `a = 1, 2`.
///
/// Stored in multiplicity form: `strings[a-1][i-1] = m^a_i`. Trailing zeros
/// are trimmed so equal configurations compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Configuration {
    strings: [Vec<u32>; 2],
}

impl Configuration {
    pub fn empty() -> Self {
        Configuration::default()
    }

    /// Builds a configuration from `(a, i, m^a_i)` triples.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize, u32)>>(entries: I) -> Result<Self> {
        let mut cfg = Configuration::empty();
        for (a, i, m) in entries {
            if !(1..=2).contains(&a) {
                return Err(Error::RootIndex(a));
            }
            assert!(i >= 1, "string lengths start at 1");
            let row = &mut cfg.strings[a - 1];
            if row.len() < i {
                row.resize(i, 0);
            }
            row[i - 1] += m;
        }
        cfg.trim();
        Ok(cfg)
    }

    fn from_rows(first: Vec<u32>, second: Vec<u32>) -> Self {
        let mut cfg = Configuration { strings: [first, second] };
        cfg.trim();
        cfg
    }

    fn trim(&mut self) {
        for row in &mut self.strings {
            while row.last() == Some(&0) {
                row.pop();
            }
        }
    }

    /// `m^a_i`; zero outside the support.
    pub fn get(&self, a: usize, i: usize) -> u32 {
        self.strings[a - 1].get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `Σ_i i·m^a_i`.
    pub fn total_length(&self, a: usize) -> u64 {
        self.strings[a - 1].iter().enumerate().map(|(i, &m)| (i as u64 + 1) * u64::from(m)).sum()
    }

    /// Longest string length of color `a` (0 if there are none).
    pub fn max_length(&self, a: usize) -> usize {
        self.strings[a - 1].len()
    }

    /// Nonzero `(a, i, m^a_i)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.strings
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().enumerate().filter(|(_, &m)| m > 0).map(move |(i, &m)| (a + 1, i + 1, m)))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (a, i, m)) in self.entries().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "m{a}_{i}={m}")?;
        }
        f.write_str("}")
    }
}

/// `Φ^{a,b}_{i,j} = 2(α_a,α_b)/(α_a²α_b²) · min{iα_a², jα_b²}`.
pub fn phi(a: usize, i: usize, b: usize, j: usize) -> i64 {
    assert!((1..=2).contains(&a) && (1..=2).contains(&b), "root index out of range");
    assert!(i >= 1 && j >= 1, "string lengths start at 1");
    let (la, lb) = (ROOT_LEN2[a - 1], ROOT_LEN2[b - 1]);
    let num = 2 * ROOT_FORM[a - 1][b - 1] * (i as i64 * la).min(j as i64 * lb);
    let den = la * lb;
    debug_assert_eq!(num % den, 0);
    num / den
}

/// Vacancy number `P^a_i = (α_a^∨, μ) − Σ_{b,j} Φ^{a,b}_{i,j} m^b_j`. May be negative.
pub fn vacancy(a: usize, i: usize, cfg: &Configuration, mu: &Weight) -> Result<i64> {
    let base = pairing(a, mu)?;
    let sum: i64 = cfg.entries().map(|(b, j, m)| phi(a, i, b, j) * i64::from(m)).sum();
    Ok(base - sum)
}

/// Charge `c(m) = ½ Σ Φ^{a,b}_{i,j} m^a_i m^b_j`.
pub fn charge(cfg: &Configuration) -> Result<i64> {
    let entries: Vec<_> = cfg.entries().collect();
    let mut twice = 0i64;
    for &(a, i, ma) in &entries {
        for &(b, j, mb) in &entries {
            twice += phi(a, i, b, j) * i64::from(ma) * i64::from(mb);
        }
    }
    if twice % 2 != 0 {
        return Err(Error::HalfIntegerCharge(twice));
    }
    Ok(twice / 2)
}

/// Gaussian binomial `[P+m choose m]_q`.
///
/// Equals 1 when `m = 0` (whatever `P` is) and 0 when `P < 0 < m`.
pub fn q_binomial(p: i64, m: u32) -> LaurentPoly {
    if m == 0 {
        return LaurentPoly::one();
    }
    if p < 0 {
        return LaurentPoly::zero();
    }
    gaussian(p as u64 + u64::from(m), u64::from(m))
}

/// `[n choose k]_q` by the q-Pascal rule `[n,k] = [n−1,k−1] + q^k [n−1,k]`.
fn gaussian(n: u64, k: u64) -> LaurentPoly {
    let k = k.min(n - k) as usize;
    // row[j] = [r choose j] for the current r
    let mut row = vec![LaurentPoly::one()];
    for r in 1..=n as usize {
        let mut next = Vec::with_capacity((r + 1).min(k + 1));
        for j in 0..=r.min(k) {
            let mut v = if j > 0 { row[j - 1].clone() } else { LaurentPoly::zero() };
            if j < row.len() {
                v += &row[j].shift(j as i64);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Partitions of `n` as multiplicity vectors (`v[i-1]` = number of parts equal
/// to `i`), listed in lexicographic order of their nonincreasing part sequences.
fn partitions(n: u64) -> Vec<Vec<u32>> {
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in 1..=max_part.min(remaining) {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut seqs = Vec::new();
    rec(n, n, &mut Vec::new(), &mut seqs);
    seqs.into_iter()
        .map(|parts| {
            let mut mult = vec![0u32; parts.first().copied().unwrap_or(0) as usize];
            for p in parts {
                mult[p as usize - 1] += 1;
            }
            mult
        })
        .collect()
}

/// `(k₁, k₂)` with `μ − λ = k₁α₁ + k₂α₂`, when both are nonnegative integers.
pub fn root_gap(lambda: &Weight, mu: &Weight) -> Option<(u64, u64)> {
    let (k1, k2) = (*mu - *lambda).root_coordinates()?;
    (k1 >= 0 && k2 >= 0).then_some((k1 as u64, k2 as u64))
}

/// All configurations summed over for the pair `(λ, μ)`:
/// (partitions of `k₁`) × (partitions of `k₂`), first factor outermost.
pub fn enumerate_configs(lambda: &Weight, mu: &Weight) -> Vec<Configuration> {
    let Some((k1, k2)) = root_gap(lambda, mu) else {
        return Vec::new();
    };
    let (p1, p2) = (partitions(k1), partitions(k2));
    let mut out = Vec::with_capacity(p1.len() * p2.len());
    for a in &p1 {
        for b in &p2 {
            out.push(Configuration::from_rows(a.clone(), b.clone()));
        }
    }
    out
}

/// The summand of a single configuration, or `None` when some occupied
/// position has a negative vacancy.
pub fn configuration_term(cfg: &Configuration, mu: &Weight) -> Result<Option<LaurentPoly>> {
    let mut term = LaurentPoly::monomial(1, charge(cfg)?);
    for (a, i, m) in cfg.entries() {
        let p = vacancy(a, i, cfg, mu)?;
        if p < 0 {
            return Ok(None);
        }
        term = &term * &q_binomial(p, m);
    }
    Ok(Some(term))
}

/// `M_{λ,μ}(q)`.
pub fn fermionic_m(lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(*w));
        }
    }
    let mut total = LaurentPoly::zero();
    for cfg in enumerate_configs(lambda, mu) {
        if let Some(term) = configuration_term(&cfg, mu)? {
            total += &term;
        }
    }
    Ok(total)
}

/// `M_{λ,μ}` at `q = 1`: the tensor-product multiplicity predicted by the Bethe count.
pub fn classical_m(lambda: &Weight, mu: &Weight) -> Result<u64> {
    let v = fermionic_m(lambda, mu)?.eval_one();
    u64::try_from(v).map_err(|_| Error::Inconsistent(format!("negative Bethe count {v} for ({lambda}; {mu})")))
}
