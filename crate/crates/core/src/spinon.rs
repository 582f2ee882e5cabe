//! Spinon-type character formulas for level-`k` modules of the affine algebra.
//!
//! The graded C₂-content of the module with ground space `V(target)` is
//! assembled as
//!
//! ```text
//! Σ_{n,m ≥ 0}  P_{n,m}(q) / ((q)_n (q)_m) · [4ⁿ ⊗ 5ᵐ]
//! ```
//!
//! where `P_{n,m}` is the coefficient of `target` in the level-`k` restricted
//! table and `[4ⁿ ⊗ 5ᵐ]` is the unrestricted table, read as a C₂-module whose
//! component `V(λ)` carries the polynomial grading. Every product is taken
//! in power series truncated at the requested depth.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{label, series_inverse_pochhammer, weyl_dim, LaurentPoly, Weight};
use crate::error::{Error, Result};
use crate::fusion::{q_cg, FusionLevel};

/// Per-depth multisets of C₂ irreducibles, depths `0..=cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDecomposition {
    pub depths: Vec<BTreeMap<Weight, u64>>,
}

impl GradedDecomposition {
    pub fn new(cutoff: usize) -> Self {
        GradedDecomposition { depths: vec![BTreeMap::new(); cutoff + 1] }
    }

    /// Builds a decomposition from signed accumulators, rejecting negative
    /// multiplicities and dropping zeros.
    pub fn from_signed(signed: Vec<BTreeMap<Weight, i64>>) -> Result<Self> {
        let mut depths = Vec::with_capacity(signed.len());
        for (depth, layer) in signed.into_iter().enumerate() {
            let mut clean = BTreeMap::new();
            for (weight, mult) in layer {
                match mult {
                    0 => {}
                    m if m < 0 => return Err(Error::NegativeMultiplicity { depth, weight, mult: m }),
                    m => {
                        clean.insert(weight, m as u64);
                    }
                }
            }
            depths.push(clean);
        }
        Ok(GradedDecomposition { depths })
    }

    pub fn cutoff(&self) -> usize {
        self.depths.len() - 1
    }

    pub fn multiplicity(&self, depth: usize, w: &Weight) -> u64 {
        self.depths.get(depth).and_then(|l| l.get(w)).copied().unwrap_or(0)
    }

    /// Total dimension at each depth.
    pub fn dimensions(&self) -> Vec<u64> {
        self.depths
            .iter()
            .map(|layer| layer.iter().map(|(w, m)| m * crate::algebra::weyl_dim(w).unwrap()).sum())
            .collect()
    }

    /// Keeps depths `0..=cutoff`.
    pub fn truncated(&self, cutoff: usize) -> Self {
        GradedDecomposition { depths: self.depths.iter().take(cutoff + 1).cloned().collect() }
    }
}

/// One line per depth: `d: label×mult + …`, irreducibles by ascending
/// dimension; an empty depth prints as `d: 0`.
impl fmt::Display for GradedDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, layer) in self.depths.iter().enumerate() {
            write!(f, "{d}: ")?;
            if layer.is_empty() {
                f.write_str("0")?;
            }
            let mut entries: Vec<_> = layer.iter().collect();
            entries.sort_by_key(|(w, _)| (weyl_dim(w).unwrap_or(0), **w));
            for (i, (w, m)) in entries.into_iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "{}×{m}", label(w))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthDifference {
    pub depth: usize,
    pub weight: Weight,
    pub left: u64,
    pub right: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecompositionDiff {
    pub differences: Vec<DepthDifference>,
}

impl DecompositionDiff {
    pub fn is_empty(&self) -> bool {
        self.differences.is_empty()
    }
}

impl fmt::Display for DecompositionDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.differences {
            writeln!(f, "depth {}: {} has {} vs {}", d.depth, label(&d.weight), d.left, d.right)?;
        }
        Ok(())
    }
}

pub fn compare_decompositions(x: &GradedDecomposition, y: &GradedDecomposition) -> Result<DecompositionDiff> {
    if x.cutoff() != y.cutoff() {
        return Err(Error::CutoffMismatch(x.cutoff(), y.cutoff()));
    }
    let mut differences = Vec::new();
    for (depth, (lx, ly)) in x.depths.iter().zip(&y.depths).enumerate() {
        let weights: std::collections::BTreeSet<_> = lx.keys().chain(ly.keys()).collect();
        for w in weights {
            let (a, b) = (lx.get(w).copied().unwrap_or(0), ly.get(w).copied().unwrap_or(0));
            if a != b {
                differences.push(DepthDifference { depth, weight: *w, left: a, right: b });
            }
        }
    }
    Ok(DecompositionDiff { differences })
}

fn check_target(target: &Weight, level: u32) -> Result<()> {
    if !target.is_dominant() {
        return Err(Error::NotDominant(*target));
    }
    if target.level() > i64::from(level) {
        return Err(Error::LevelTooHigh { weight: *target, level: target.level(), bound: level });
    }
    Ok(())
}

/// `P_{n,m}(q)`: the coefficient of `target` in `[4ⁿ ⊗ 5ᵐ]^{(level)}`.
pub fn restricted_coefficient(n: usize, m: usize, target: &Weight, level: u32) -> Result<LaurentPoly> {
    check_target(target, level)?;
    Ok(q_cg(n, m, FusionLevel::Restricted(level)).get(target))
}

/// Contribution of one `(n, m)` term, added into `acc`. Returns whether the
/// prefactor `P_{n,m}` has any term of degree at most `depth`.
fn add_particle_term(
    n: usize,
    m: usize,
    target: &Weight,
    level: u32,
    depth: usize,
    acc: &mut [BTreeMap<Weight, i64>],
) -> Result<bool> {
    let cut = depth as i64;
    let prefactor = restricted_coefficient(n, m, target, level)?.truncate(cut);
    if prefactor.is_zero() {
        return Ok(false);
    }
    let series = prefactor
        .mul_truncated(&series_inverse_pochhammer(n as u32, depth as u32), cut)
        .mul_truncated(&series_inverse_pochhammer(m as u32, depth as u32), cut);
    for (lambda, poly) in q_cg(n, m, FusionLevel::Unrestricted).entries {
        for (e, c) in series.mul_truncated(&poly, cut).terms() {
            *acc[e as usize].entry(lambda).or_insert(0) += c;
        }
    }
    Ok(true)
}

/// Does any `(n, m)` with `n + m = shell` reach `target` with energy at most `depth`?
fn shell_reaches(shell: usize, target: &Weight, level: u32, depth: usize) -> Result<bool> {
    for m in 0..=shell {
        let p = restricted_coefficient(shell - m, m, target, level)?;
        if p.min_degree().is_some_and(|d| d <= depth as i64) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Graded decomposition of the level-`level` module with ground space
/// `V(target)`, through depth `depth`.
///
/// Particle shells `n + m = s` are summed in increasing `s`. Once some shell
/// has contributed, the sum stops after two consecutive shells contribute
/// nothing at degree `≤ depth`; the following shell is then checked as well
/// and a contribution there is reported as an error.
pub fn spinon_character(target: &Weight, level: u32, depth: usize) -> Result<GradedDecomposition> {
    check_target(target, level)?;
    let mut acc = vec![BTreeMap::new(); depth + 1];
    let max_shell = 4 * (depth + target.level() as usize) + 8;
    let mut seen = false;
    let mut empty_run = 0;
    let mut shell = 0;
    loop {
        if shell > max_shell {
            return Err(Error::Truncation(format!("no stopping point found up to {max_shell} particles")));
        }
        let mut contributed = false;
        for m in 0..=shell {
            contributed |= add_particle_term(shell - m, m, target, level, depth, &mut acc)?;
        }
        if contributed {
            seen = true;
            empty_run = 0;
        } else if seen {
            empty_run += 1;
        }
        if empty_run == 2 {
            if shell_reaches(shell + 1, target, level, depth)? {
                return Err(Error::Truncation(format!(
                    "shell {} contributes below depth {depth} after two empty shells",
                    shell + 1
                )));
            }
            break;
        }
        shell += 1;
    }
    GradedDecomposition::from_signed(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m1: i64, m2: i64) -> Weight {
        Weight::new(m1, m2)
    }

    fn layer(items: &[(Weight, u64)]) -> BTreeMap<Weight, u64> {
        items.iter().copied().collect()
    }

    #[test]
    fn restricted_coefficient_examples() {
        assert_eq!(restricted_coefficient(2, 0, &w(0, 0), 1).unwrap(), "q".parse().unwrap());
        assert_eq!(restricted_coefficient(0, 2, &w(0, 0), 1).unwrap(), "q^2".parse().unwrap());
        assert!(restricted_coefficient(1, 0, &w(0, 1), 1).unwrap().is_zero());
        assert!(matches!(restricted_coefficient(1, 0, &w(2, 0), 1), Err(Error::LevelTooHigh { .. })));
        assert!(matches!(restricted_coefficient(1, 0, &w(-1, 0), 1), Err(Error::NotDominant(_))));
    }

    #[test]
    fn vacuum_through_depth_three() {
        let got = spinon_character(&w(0, 0), 1, 3).unwrap();
        let expected = GradedDecomposition {
            depths: vec![
                layer(&[(w(0, 0), 1)]),
                layer(&[(w(2, 0), 1)]),
                layer(&[(w(0, 0), 1), (w(0, 1), 1), (w(2, 0), 1), (w(0, 2), 1)]),
                layer(&[(w(0, 0), 1), (w(0, 1), 1), (w(2, 0), 3), (w(0, 2), 1), (w(2, 1), 1)]),
            ],
        };
        assert_eq!(got, expected);
    }

    #[test]
    fn two_particle_terms_of_the_vacuum() {
        // 1 + q/(q)_2 [4²] + q²/(q)_2 [5²], through depth 2
        let mut acc = vec![BTreeMap::new(); 3];
        *acc[0].entry(w(0, 0)).or_insert(0) += 1;
        assert!(add_particle_term(2, 0, &w(0, 0), 1, 2, &mut acc).unwrap());
        assert!(add_particle_term(0, 2, &w(0, 0), 1, 2, &mut acc).unwrap());
        assert!(!add_particle_term(1, 1, &w(0, 0), 1, 2, &mut acc).unwrap());
        let got = GradedDecomposition::from_signed(acc).unwrap();
        assert_eq!(got, spinon_character(&w(0, 0), 1, 2).unwrap());
    }

    #[test]
    fn depth_zero_is_the_ground_space() {
        for (target, k) in [(w(0, 0), 1), (w(1, 0), 1), (w(0, 1), 1), (w(1, 1), 2), (w(2, 1), 3)] {
            let got = spinon_character(&target, k, 0).unwrap();
            assert_eq!(got.depths, vec![layer(&[(target, 1)])], "{target} at level {k}");
        }
    }

    #[test]
    fn display_format() {
        let got = spinon_character(&w(0, 0), 1, 2).unwrap();
        assert_eq!(got.to_string(), "0: 1×1\n1: 10×1\n2: 1×1 + 5×1 + 10×1 + 14×1\n");
    }

    #[test]
    fn compare_reports_differences() {
        let a = spinon_character(&w(0, 0), 1, 2).unwrap();
        assert!(compare_decompositions(&a, &a).unwrap().is_empty());
        let mut b = a.clone();
        b.depths[2].insert(w(0, 1), 2);
        let diff = compare_decompositions(&a, &b).unwrap();
        assert_eq!(diff.differences, vec![DepthDifference { depth: 2, weight: w(0, 1), left: 1, right: 2 }]);
        assert_eq!(compare_decompositions(&a, &a.truncated(1)), Err(Error::CutoffMismatch(2, 1)));
    }

    #[test]
    fn negative_multiplicities_rejected() {
        let mut signed = vec![BTreeMap::new()];
        signed[0].insert(w(1, 0), -1);
        assert!(matches!(GradedDecomposition::from_signed(signed), Err(Error::NegativeMultiplicity { .. })));
    }
}
