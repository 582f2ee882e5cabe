//! Brute-force reference computations. None of the main routines touch the
//! path or Bethe-ansatz constructions.
//!
//! * Weight multiplicities of finite irreducibles by Freudenthal's recursion.
//! * Tensor-product multiplicities by multiplying characters and peeling off
//!   the highest remaining dominant weight.
//! * Graded branching of integrable highest-weight modules of the affine
//!   algebra into finite irreducibles, from the Weyl–Kac character formula.
//!
//! For the affine computation the Weyl–Kac numerator is summed over
//! `W ⋉ t_M`, where `M` is the lattice spanned by the long roots
//! (`2α₁` and `α₂`), and multiplied by the inverse of the part of the
//! denominator that is invariant under the finite Weyl group:
//!
//! ```text
//! Π_{n≥1} (1 − qⁿ)^{-2} Π_{α root} (1 − qⁿ e^α)^{-1}
//! ```
//!
//! The result is anti-invariant under the shifted action of the finite Weyl
//! group, so the multiplicity of `V(λ)` at depth `d` is simply the
//! coefficient of `q^d e^λ` for dominant `λ`.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::{weyl_dim, Weight};
use crate::crystal::Letter;
use crate::error::{Error, Result};
use crate::spinon::GradedDecomposition;

/// Largest depth [`affine_graded_branching`] accepts.
pub const MAX_AFFINE_DEPTH: usize = 6;

/// Dual Coxeter number of C₂.
const DUAL_COXETER: i64 = 3;

/// Formal character: weight → multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub mults: BTreeMap<Weight, i64>,
}

impl CharacterTable {
    pub fn get(&self, w: &Weight) -> i64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.mults.values().sum()
    }

    fn add(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.mults.entry(w).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.mults.remove(&w);
        }
    }

    /// Character of the tensor product.
    pub fn product(&self, other: &CharacterTable) -> CharacterTable {
        let mut out = CharacterTable::default();
        for (a, ca) in &self.mults {
            for (b, cb) in &other.mults {
                out.add(*a + *b, ca * cb);
            }
        }
        out
    }

    pub fn is_weyl_invariant(&self) -> bool {
        self.mults.iter().all(|(w, &c)| w.weyl_orbit_signed().iter().all(|(image, _)| self.get(image) == c))
    }
}

/// Weight multiplicities of `V(λ)` by Freudenthal's formula.
pub fn irrep_character(lambda: &Weight) -> Result<CharacterTable> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(*lambda));
    }
    let rho = Weight::RHO;
    let top = (*lambda + rho).inner2(&(*lambda + rho));
    let (a1, a2) = (Weight::simple_root(1)?, Weight::simple_root(2)?);
    // every weight is λ − c1·α₁ − c2·α₂ with 0 ≤ c1 ≤ 2(m1+m2), 0 ≤ c2 ≤ m1+2m2
    let (max1, max2) = (2 * lambda.level(), lambda.m1 + 2 * lambda.m2);
    let mut mults: HashMap<Weight, i64> = HashMap::new();
    mults.insert(*lambda, 1);
    for height in 1..=(max1 + max2) {
        for c1 in 0..=height.min(max1) {
            let c2 = height - c1;
            if c2 > max2 {
                continue;
            }
            let mu = *lambda - a1 * c1 - a2 * c2;
            let denom = top - (mu + rho).inner2(&(mu + rho));
            let mut numer = 0i64;
            for alpha in Weight::positive_roots() {
                let mut j = 1;
                loop {
                    let shifted = mu + alpha * j;
                    match (*lambda - shifted).root_coordinates() {
                        Some((s1, s2)) if s1 >= 0 && s2 >= 0 => {}
                        _ => break,
                    }
                    if let Some(&m) = mults.get(&shifted) {
                        numer += 2 * m * shifted.inner2(&alpha);
                    }
                    j += 1;
                }
            }
            if denom <= 0 {
                if numer != 0 {
                    return Err(Error::Inconsistent(format!("Freudenthal recursion at {mu} in V({lambda})")));
                }
                continue;
            }
            if numer % denom != 0 {
                return Err(Error::Inconsistent(format!("non-integral multiplicity at {mu} in V({lambda})")));
            }
            let m = numer / denom;
            if m != 0 {
                mults.insert(mu, m);
            }
        }
    }
    Ok(CharacterTable { mults: mults.into_iter().collect() })
}

/// Character of the crystal of a letter type: each letter contributes its weight.
fn letter_character(letters: &[Letter]) -> CharacterTable {
    let mut out = CharacterTable::default();
    for l in letters {
        out.add(l.weight(), 1);
    }
    out
}

/// Character of `4^{⊗n} ⊗ 5^{⊗m}`, from the weights of the 4- and 5-dimensional modules.
pub fn tensor_character(n: usize, m: usize) -> Result<CharacterTable> {
    let four = irrep_character(&Weight::LAMBDA1)?;
    let five = irrep_character(&Weight::LAMBDA2)?;
    let mut acc = CharacterTable::default();
    acc.add(Weight::ZERO, 1);
    for _ in 0..n {
        acc = acc.product(&four);
    }
    for _ in 0..m {
        acc = acc.product(&five);
    }
    Ok(acc)
}

/// Splits a Weyl-invariant character into irreducibles by repeatedly
/// removing the character of its highest dominant weight.
pub fn decompose(character: &CharacterTable) -> Result<BTreeMap<Weight, u64>> {
    let mut rest = character.clone();
    let mut cache: HashMap<Weight, CharacterTable> = HashMap::new();
    let mut out = BTreeMap::new();
    // 2m1 + 3m2 is the doubled (w, ρ), strictly positive on positive roots
    let height = |w: &Weight| 2 * w.m1 + 3 * w.m2;
    while let Some((&top, &c)) = rest.mults.iter().max_by_key(|(w, _)| (height(w), w.m2)) {
        if !top.is_dominant() || c < 0 {
            return Err(Error::Inconsistent(format!("peeling reached {top} with coefficient {c}")));
        }
        let character = match cache.entry(top) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(irrep_character(&top)?),
        };
        for (w, m) in &character.mults {
            rest.add(*w, -c * m);
        }
        out.insert(top, c as u64);
    }
    Ok(out)
}

/// Multiplicity of `V(λ)` in `4^{⊗n} ⊗ 5^{⊗m}`.
pub fn tensor_multiplicity(lambda: &Weight, n: usize, m: usize) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(*lambda));
    }
    Ok(tensor_decomposition(n, m)?.get(lambda).copied().unwrap_or(0))
}

/// Full decomposition of `4^{⊗n} ⊗ 5^{⊗m}`.
pub fn tensor_decomposition(n: usize, m: usize) -> Result<BTreeMap<Weight, u64>> {
    decompose(&tensor_character(n, m)?)
}

/// Character of the 4-dimensional module read off the crystal letters; used
/// to cross-check [`irrep_character`].
pub fn crystal_character_b4() -> CharacterTable {
    letter_character(&Letter::B4)
}

/// Same as [`crystal_character_b4`] for the 5-dimensional module.
pub fn crystal_character_b5() -> CharacterTable {
    letter_character(&Letter::B5)
}

/// Graded decomposition, depths `0..=depth`, of the level-`level` integrable
/// module of the affine algebra whose depth-zero space is `V(target)`.
pub fn affine_graded_branching(target: &Weight, level: u32, depth: usize) -> Result<GradedDecomposition> {
    if !target.is_dominant() {
        return Err(Error::NotDominant(*target));
    }
    if target.level() > i64::from(level) {
        return Err(Error::LevelTooHigh { weight: *target, level: target.level(), bound: level });
    }
    if depth > MAX_AFFINE_DEPTH {
        return Err(Error::ResourceCutoff { requested: depth, limit: MAX_AFFINE_DEPTH });
    }
    let numerator = weyl_kac_numerator(target, level, depth)?;
    let invariant = invariant_denominator_inverse(depth);

    let mut acc: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); depth + 1];
    for &(d0, w0, sign) in &numerator {
        for (d1, layer) in invariant.iter().enumerate().take(depth + 1 - d0) {
            for (w1, c) in layer {
                let w = w0 + *w1;
                if w.is_dominant() {
                    *acc[d0 + d1].entry(w).or_insert(0) += sign * c;
                }
            }
        }
    }
    let out = GradedDecomposition::from_signed(acc)?;
    let ground: BTreeMap<Weight, u64> = [(*target, 1)].into_iter().collect();
    if out.depths[0] != ground {
        return Err(Error::Inconsistent(format!("depth 0 of the affine module is {:?}", out.depths[0])));
    }
    Ok(out)
}

/// Terms `(depth, finite weight, sign)` of `Σ_w ε(w) e^{w(Λ+ρ)−ρ}` with
/// depth at most `max_depth`.
fn weyl_kac_numerator(target: &Weight, level: u32, max_depth: usize) -> Result<Vec<(usize, Weight, i64)>> {
    let h = i64::from(level) + DUAL_COXETER;
    let shifted = *target + Weight::RHO;
    let long = [Weight::simple_root(1)? * 2, Weight::simple_root(2)?];
    // On the boundary of the box |a|,|b| ≤ r we have |β|² ≥ r², and the depth
    // is at least h|β|²/2 − |Λ+ρ||β|; grow r until that exceeds max_depth.
    let norm = ((shifted.inner2(&shifted) as f64) / 2.0).sqrt();
    let mut r = 1i64;
    while (h as f64) * (r * r) as f64 / 2.0 - norm * r as f64 <= max_depth as f64 + 1.0 {
        r += 1;
    }
    let mut terms = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let beta = long[0] * a + long[1] * b;
            for (image, sign) in shifted.weyl_orbit_signed() {
                // 4·depth = 2·2(u(Λ+ρ), β) + h·2|β|²
                let four_depth = 2 * image.inner2(&beta) + h * beta.inner2(&beta);
                if four_depth % 4 != 0 {
                    return Err(Error::Inconsistent(format!("fractional depth for translation {beta}")));
                }
                let d = four_depth / 4;
                if d < 0 {
                    return Err(Error::Inconsistent(format!("negative depth {d} for translation {beta}")));
                }
                if d as usize <= max_depth {
                    terms.push((d as usize, image + beta * h - Weight::RHO, sign));
                }
            }
        }
    }
    Ok(terms)
}

/// `Π_{n=1}^{D} (1 − qⁿ)^{-2} Π_α (1 − qⁿ e^α)^{-1}` truncated at `q^D`, as
/// one weight table per depth.
fn invariant_denominator_inverse(max_depth: usize) -> Vec<HashMap<Weight, i64>> {
    let mut series: Vec<HashMap<Weight, i64>> = vec![HashMap::new(); max_depth + 1];
    series[0].insert(Weight::ZERO, 1);
    let mut factors = vec![Weight::ZERO, Weight::ZERO];
    factors.extend(Weight::roots());
    for n in 1..=max_depth {
        for &alpha in &factors {
            // multiply by 1/(1 − qⁿ e^α): ascending in-place update
            for d in n..=max_depth {
                let (lower, upper) = series.split_at_mut(d);
                for (w, c) in &lower[d - n] {
                    *upper[0].entry(*w + alpha).or_insert(0) += c;
                }
            }
        }
    }
    series
}

/// Sum of `weyl_dim` over a decomposition, weighted by multiplicity.
pub fn decomposition_dimension(decomposition: &BTreeMap<Weight, u64>) -> u64 {
    decomposition.iter().map(|(w, m)| m * weyl_dim(w).unwrap()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m1: i64, m2: i64) -> Weight {
        Weight::new(m1, m2)
    }

    #[test]
    fn fundamental_characters() {
        let four = irrep_character(&w(1, 0)).unwrap();
        assert_eq!(four.mults.len(), 4);
        assert!(four.mults.values().all(|&m| m == 1));
        assert_eq!(four, crystal_character_b4());

        let five = irrep_character(&w(0, 1)).unwrap();
        assert_eq!(five.mults.len(), 5);
        assert_eq!(five.get(&Weight::ZERO), 1);
        assert_eq!(five, crystal_character_b5());

        assert_eq!(irrep_character(&w(2, 0)).unwrap().total(), 10);
        // adjoint: 8 roots plus a two-dimensional zero weight space
        assert_eq!(irrep_character(&w(2, 0)).unwrap().get(&Weight::ZERO), 2);
        assert!(irrep_character(&w(0, -1)).is_err());
    }

    #[test]
    fn characters_have_weyl_dimension() {
        for level in 0..=6 {
            for m1 in 0..=level {
                let lam = w(m1, level - m1);
                let ch = irrep_character(&lam).unwrap();
                assert_eq!(ch.total() as u64, weyl_dim(&lam).unwrap(), "{lam}");
                assert!(ch.is_weyl_invariant(), "{lam}");
                assert!(ch.mults.values().all(|&m| m > 0));
            }
        }
    }

    #[test]
    fn small_tensor_multiplicities() {
        assert_eq!(tensor_multiplicity(&w(2, 0), 2, 0).unwrap(), 1);
        assert_eq!(tensor_multiplicity(&w(0, 0), 2, 0).unwrap(), 1);
        assert_eq!(tensor_multiplicity(&w(1, 0), 1, 3).unwrap(), 4);
        let d = tensor_decomposition(1, 1).unwrap();
        assert_eq!(d, [(w(1, 0), 1), (w(1, 1), 1)].into_iter().collect());
        assert_eq!(decomposition_dimension(&tensor_decomposition(2, 2).unwrap()), 400);
    }

    #[test]
    fn vacuum_module_low_depths() {
        let got = affine_graded_branching(&w(0, 0), 1, 1).unwrap();
        assert_eq!(got.depths[0], [(w(0, 0), 1)].into_iter().collect());
        assert_eq!(got.depths[1], [(w(2, 0), 1)].into_iter().collect());
    }

    #[test]
    fn ground_space_for_any_target() {
        for (target, k) in [(w(0, 0), 2), (w(1, 0), 1), (w(0, 1), 1), (w(1, 2), 3)] {
            let got = affine_graded_branching(&target, k, 0).unwrap();
            assert_eq!(got.depths, vec![[(target, 1)].into_iter().collect()]);
        }
    }

    #[test]
    fn oracle_limits() {
        assert!(matches!(affine_graded_branching(&w(0, 0), 1, 7), Err(Error::ResourceCutoff { .. })));
        assert!(matches!(affine_graded_branching(&w(2, 0), 1, 1), Err(Error::LevelTooHigh { .. })));
    }
}
