//! Fusion paths and the crystal-side q-Clebsch–Gordan rules.
//!
//! A path starts at the trivial weight and adds one letter weight per step.
//! A step `μ → μ + wt(p)` is admissible at level `k` when the result is
//! dominant, has level at most `k`, and, for the zero-weight letter `c`,
//! the current weight has `m1 ≥ 1`. The unrestricted rule drops the level
//! bound and reproduces the ordinary Clebsch–Gordan decomposition.
//!
//! The table `[4ⁿ ⊗ 5ᵐ]` maps each endpoint `λ` to `Σ q^{energy(path)}` over
//! the admissible paths ending at `λ`. Unless stated otherwise the letters
//! of a path are ordered with all B5 letters first, then all B4 letters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{LaurentPoly, Weight};
use crate::crystal::{append_index, type_sequence_string, CrystalType, Letter, Word};
use crate::error::{Error, Result};
use crate::fermionic::fermionic_m;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FusionLevel {
    Restricted(u32),
    Unrestricted,
}

impl FusionLevel {
    pub fn admits(&self, w: &Weight) -> bool {
        match self {
            FusionLevel::Restricted(k) => w.level() <= i64::from(*k),
            FusionLevel::Unrestricted => true,
        }
    }
}

impl fmt::Display for FusionLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FusionLevel::Restricted(k) => write!(f, "{k}"),
            FusionLevel::Unrestricted => f.write_str("inf"),
        }
    }
}

/// Parses a positive integer or `inf`.
impl FromStr for FusionLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(FusionLevel::Unrestricted);
        }
        match s.parse::<u32>() {
            Ok(k) if k >= 1 => Ok(FusionLevel::Restricted(k)),
            _ => Err(Error::Parse { what: "fusion level", input: s.to_string() }),
        }
    }
}

impl Serialize for FusionLevel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One fusion step from `mu` by the letter `p`, or `None` if inadmissible.
pub fn fusion_step(mu: &Weight, p: Letter, level: FusionLevel) -> Option<Weight> {
    let next = *mu + p.weight();
    if !next.is_dominant() || !level.admits(&next) {
        return None;
    }
    if p == Letter::C && mu.m1 < 1 {
        return None;
    }
    Some(next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    pub word: Word,
    pub nodes: Vec<Weight>,
    pub energy: u32,
}

impl Path {
    pub fn endpoint(&self) -> Weight {
        *self.nodes.last().expect("a path has at least its starting node")
    }
}

/// The canonical factor order for `4ⁿ ⊗ 5ᵐ`: `m` B5 factors, then `n` B4 factors.
pub fn canonical_types(n: usize, m: usize) -> Vec<CrystalType> {
    let mut types = vec![CrystalType::B5; m];
    types.extend(std::iter::repeat_n(CrystalType::B4, n));
    types
}

/// Depth-first walk over admissible paths with the given factor order,
/// calling `visit` on every complete path. Letters are tried in the
/// crystal order, and energies are accumulated one appended letter at a time.
fn walk<F>(types: &[CrystalType], level: FusionLevel, mut visit: F)
where
    F: FnMut(&[Letter], &[Weight], u32),
{
    fn rec<F: FnMut(&[Letter], &[Weight], u32)>(
        types: &[CrystalType],
        level: FusionLevel,
        letters: &mut Vec<Letter>,
        nodes: &mut Vec<Weight>,
        energy: u32,
        visit: &mut F,
    ) {
        let depth = letters.len();
        if depth == types.len() {
            visit(letters, nodes, energy);
            return;
        }
        let here = nodes[depth];
        for &p in types[depth].letters() {
            if let Some(next) = fusion_step(&here, p, level) {
                let gained = append_index(letters, p);
                letters.push(p);
                nodes.push(next);
                rec(types, level, letters, nodes, energy + gained, visit);
                letters.pop();
                nodes.pop();
            }
        }
    }
    let mut letters = Vec::with_capacity(types.len());
    let mut nodes = vec![Weight::ZERO];
    rec(types, level, &mut letters, &mut nodes, 0, &mut visit);
}

/// All admissible paths with factor order `types`, optionally ending at
/// `end`, sorted by (endpoint, energy, word).
pub fn enumerate_paths_with_types(types: &[CrystalType], level: FusionLevel, end: Option<Weight>) -> Vec<Path> {
    let mut out = Vec::new();
    walk(types, level, |letters, nodes, energy| {
        let last = *nodes.last().unwrap();
        if end.is_none_or(|e| e == last) {
            out.push(Path { word: Word::new(letters.to_vec()), nodes: nodes.to_vec(), energy });
        }
    });
    out.sort_by(|a, b| (a.endpoint(), a.energy, &a.word).cmp(&(b.endpoint(), b.energy, &b.word)));
    out
}

/// Paths in `4ⁿ ⊗ 5ᵐ` in the canonical order.
pub fn enumerate_paths(n: usize, m: usize, level: FusionLevel, end: Option<Weight>) -> Vec<Path> {
    enumerate_paths_with_types(&canonical_types(n, m), level, end)
}

/// Endpoint-to-polynomial table of a q-Clebsch–Gordan rule. Zero
/// polynomials are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QcgTable {
    pub entries: BTreeMap<Weight, LaurentPoly>,
}

impl QcgTable {
    pub fn get(&self, w: &Weight) -> LaurentPoly {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    fn add(&mut self, w: Weight, p: &LaurentPoly) {
        let slot = self.entries.entry(w).or_default();
        *slot += p;
        if slot.is_zero() {
            self.entries.remove(&w);
        }
    }

    /// `Σ_λ value_λ(1) · dim V(λ)`.
    pub fn dimension_at_one(&self) -> u64 {
        self.entries
            .iter()
            .map(|(w, p)| p.eval_one() as u64 * crate::algebra::weyl_dim(w).expect("endpoints are dominant"))
            .sum()
    }
}

/// `[types]^{(level)}` for an arbitrary factor order.
pub fn q_cg_with_types(types: &[CrystalType], level: FusionLevel) -> QcgTable {
    let mut counts: BTreeMap<(Weight, u32), i64> = BTreeMap::new();
    walk(types, level, |_, nodes, energy| {
        *counts.entry((*nodes.last().unwrap(), energy)).or_insert(0) += 1;
    });
    let mut table = QcgTable::default();
    for ((w, e), c) in counts {
        table.add(w, &LaurentPoly::monomial(c, i64::from(e)));
    }
    table
}

/// `[4ⁿ ⊗ 5ᵐ]^{(level)}` in the canonical order.
pub fn q_cg(n: usize, m: usize, level: FusionLevel) -> QcgTable {
    q_cg_with_types(&canonical_types(n, m), level)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderInvarianceReport {
    pub orderings: Vec<String>,
    pub tables: Vec<QcgTable>,
    pub all_equal: bool,
}

/// Recomputes the table for each factor order and reports whether they agree.
pub fn check_order_invariance(
    n: usize,
    m: usize,
    level: FusionLevel,
    orderings: &[Vec<CrystalType>],
) -> Result<OrderInvarianceReport> {
    let expected = canonical_types(n, m);
    let count = |ts: &[CrystalType]| ts.iter().filter(|&&t| t == CrystalType::B4).count();
    let mut tables = Vec::with_capacity(orderings.len());
    for ord in orderings {
        if ord.len() != expected.len() || count(ord) != n {
            return Err(Error::IncompatibleTypes {
                from: type_sequence_string(&expected),
                to: type_sequence_string(ord),
            });
        }
        tables.push(q_cg_with_types(ord, level));
    }
    let all_equal = tables.windows(2).all(|w| w[0] == w[1]);
    Ok(OrderInvarianceReport {
        orderings: orderings.iter().map(|o| type_sequence_string(o)).collect(),
        tables,
        all_equal,
    })
}

/// Every distinct arrangement of `n` B4 and `m` B5 factors.
pub fn all_orderings(n: usize, m: usize) -> Vec<Vec<CrystalType>> {
    fn rec(n: usize, m: usize, cur: &mut Vec<CrystalType>, out: &mut Vec<Vec<CrystalType>>) {
        if n == 0 && m == 0 {
            out.push(cur.clone());
            return;
        }
        if m > 0 {
            cur.push(CrystalType::B5);
            rec(n, m - 1, cur, out);
            cur.pop();
        }
        if n > 0 {
            cur.push(CrystalType::B4);
            rec(n - 1, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

/// How the two sides of a comparison were found to agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Exact,
    /// Equal after `q ↦ q⁻¹` and a global power of `q`.
    Inverted {
        shift: i64,
    },
    /// Equal up to a global power of `q`.
    Shifted {
        shift: i64,
    },
    Different,
}

/// Compares two polynomials exactly, then up to the two normalizations.
pub fn compare_up_to_normalization(crystal: &LaurentPoly, fermionic: &LaurentPoly) -> Agreement {
    if crystal == fermionic {
        return Agreement::Exact;
    }
    let (Some(c0), Some(f0)) = (crystal.min_degree(), fermionic.min_degree()) else {
        return Agreement::Different;
    };
    let shift = f0 - c0;
    if crystal.shift(shift) == *fermionic {
        return Agreement::Shifted { shift };
    }
    let inv = crystal.invert_variable();
    let shift = f0 - inv.min_degree().unwrap();
    if inv.shift(shift) == *fermionic {
        return Agreement::Inverted { shift };
    }
    Agreement::Different
}

#[derive(Clone, Debug, Serialize)]
pub struct Conjecture1Case {
    pub n: usize,
    pub m: usize,
    pub lambda: Weight,
    pub crystal: LaurentPoly,
    pub fermionic: LaurentPoly,
    pub agreement: Agreement,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conjecture1Report {
    pub max_particles: usize,
    pub cases: Vec<Conjecture1Case>,
    /// Cases where at least one side is a nonzero polynomial.
    pub nontrivial: usize,
    pub exact: usize,
    pub normalized: usize,
    pub different: usize,
    pub all_exact: bool,
}

/// Compares the unrestricted crystal tables with the Bethe-ansatz polynomials
/// for every `4ⁿ ⊗ 5ᵐ` with `1 ≤ n + m ≤ max_particles` and every dominant
/// `λ` of level at most `n + m`.
pub fn conjecture1_check(max_particles: usize) -> Result<Conjecture1Report> {
    let mut cases = Vec::new();
    for total in 1..=max_particles {
        for m in 0..=total {
            let n = total - m;
            let mu = Weight::new(n as i64, m as i64);
            let table = q_cg(n, m, FusionLevel::Unrestricted);
            for level in 0..=mu.level() {
                for m1 in 0..=level {
                    let lambda = Weight::new(m1, level - m1);
                    let crystal = table.get(&lambda);
                    let fermionic = fermionic_m(&lambda, &mu)?;
                    let agreement = compare_up_to_normalization(&crystal, &fermionic);
                    cases.push(Conjecture1Case { n, m, lambda, crystal, fermionic, agreement });
                }
            }
            for lambda in table.entries.keys() {
                if lambda.level() > mu.level() {
                    return Err(Error::Inconsistent(format!("path endpoint {lambda} above level of {mu}")));
                }
            }
        }
    }
    let nontrivial = cases.iter().filter(|c| !c.crystal.is_zero() || !c.fermionic.is_zero()).count();
    let exact = cases.iter().filter(|c| c.agreement == Agreement::Exact).count();
    let different = cases.iter().filter(|c| c.agreement == Agreement::Different).count();
    let normalized = cases.len() - exact - different;
    Ok(Conjecture1Report {
        max_particles,
        nontrivial,
        exact,
        normalized,
        different,
        all_exact: exact == cases.len(),
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::parse_type_sequence;

    fn w(m1: i64, m2: i64) -> Weight {
        Weight::new(m1, m2)
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    const K1: FusionLevel = FusionLevel::Restricted(1);
    const INF: FusionLevel = FusionLevel::Unrestricted;

    #[test]
    fn step_examples() {
        assert_eq!(fusion_step(&w(1, 0), Letter::Two, K1), Some(w(0, 1)));
        assert_eq!(fusion_step(&w(0, 0), Letter::C, K1), None);
        assert_eq!(fusion_step(&w(0, 0), Letter::C, INF), None);
        assert_eq!(fusion_step(&w(1, 0), Letter::C, INF), Some(w(1, 0)));
        assert_eq!(fusion_step(&w(0, 0), Letter::Four, INF), None);
        assert_eq!(fusion_step(&w(1, 0), Letter::One, K1), None);
        assert_eq!(fusion_step(&w(1, 0), Letter::One, INF), Some(w(2, 0)));
    }

    #[test]
    fn level_one_rules_are_exactly_the_listed_arrows() {
        let nodes = [w(0, 0), w(1, 0), w(0, 1)];
        let mut arrows = Vec::new();
        for from in nodes {
            for p in Letter::ALL {
                if let Some(to) = fusion_step(&from, p, K1) {
                    arrows.push((from, p.symbol(), to));
                }
            }
        }
        let expected = vec![
            (w(0, 0), '1', w(1, 0)),
            (w(0, 0), 'a', w(0, 1)),
            (w(1, 0), '2', w(0, 1)),
            (w(1, 0), '4', w(0, 0)),
            (w(1, 0), 'c', w(1, 0)),
            (w(0, 1), '3', w(1, 0)),
            (w(0, 1), 'e', w(0, 0)),
        ];
        assert_eq!(arrows, expected);
    }

    #[test]
    fn level_three_loops_sit_where_m1_is_positive() {
        for level in 0..=3 {
            for m1 in 0..=level {
                let node = w(m1, level - m1);
                let looped = fusion_step(&node, Letter::C, FusionLevel::Restricted(3)).is_some();
                assert_eq!(looped, m1 >= 1, "{node}");
            }
        }
    }

    #[test]
    fn path_examples() {
        let paths = enumerate_paths(3, 2, K1, Some(w(1, 0)));
        let got: Vec<(String, u32)> = paths.iter().map(|p| (p.word.to_string(), p.energy)).collect();
        assert_eq!(got, vec![("ae141".to_string(), 7), ("ae123".to_string(), 8)]);
        assert_eq!(paths[0].nodes, vec![w(0, 0), w(0, 1), w(0, 0), w(1, 0), w(0, 0), w(1, 0)]);

        let empty = enumerate_paths(0, 0, K1, Some(Weight::ZERO));
        assert_eq!(empty.len(), 1);
        assert!(empty[0].word.is_empty());
        assert_eq!(empty[0].energy, 0);

        let six: Vec<(String, u32)> =
            enumerate_paths(6, 0, K1, Some(Weight::ZERO)).iter().map(|p| (p.word.to_string(), p.energy)).collect();
        assert_eq!(
            six,
            vec![("141414".into(), 9), ("141234".into(), 11), ("123234".into(), 12), ("123414".into(), 13)]
        );
    }

    #[test]
    fn path_energies_match_word_energy() {
        for path in enumerate_paths(3, 3, INF, None) {
            assert_eq!(path.energy, crate::crystal::energy(&path.word));
            assert_eq!(path.nodes.len(), path.word.len() + 1);
            assert_eq!(path.endpoint(), path.word.weight());
        }
    }

    #[test]
    fn table_examples() {
        let t = q_cg(2, 0, K1);
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.get(&w(0, 0)), p("q"));
        assert_eq!(t.get(&w(0, 1)), p("q"));

        let t = q_cg(2, 0, INF);
        assert_eq!(t.entries.len(), 3);
        assert_eq!(t.get(&w(2, 0)), LaurentPoly::one());

        let t = q_cg(0, 4, K1);
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(&w(0, 0)), p("q^8"));

        let t = q_cg(1, 3, INF);
        assert_eq!(t.get(&w(1, 0)), p("q^3 + q^4 + q^5 + q^6"));
        assert_eq!(t.get(&w(1, 1)), p("q^2 + 2q^3 + 2q^4 + q^5"));
        assert_eq!(t.get(&w(3, 0)), p("q^2 + q^3 + q^4"));
        assert_eq!(t.get(&w(1, 2)), p("q + q^2 + q^3"));
        assert_eq!(t.get(&w(3, 1)), p("q + q^2"));
        assert_eq!(t.get(&w(1, 3)), LaurentPoly::one());
    }

    #[test]
    fn order_invariance_examples() {
        let ords = vec![parse_type_sequence("54454").unwrap(), parse_type_sequence("55444").unwrap()];
        assert!(check_order_invariance(3, 2, K1, &ords).unwrap().all_equal);
        assert!(check_order_invariance(1, 0, K1, &[parse_type_sequence("4").unwrap()]).unwrap().all_equal);
        let every = all_orderings(2, 2);
        assert_eq!(every.len(), 6);
        assert!(check_order_invariance(2, 2, INF, &every).unwrap().all_equal);
        assert!(check_order_invariance(2, 2, INF, &[parse_type_sequence("445").unwrap()]).is_err());
    }

    #[test]
    fn conjecture1_small() {
        let report = conjecture1_check(3).unwrap();
        assert!(report.all_exact, "{:?}", report.cases.iter().find(|c| c.agreement != Agreement::Exact));
        let case = report.cases.iter().find(|c| c.n == 2 && c.m == 0 && c.lambda == Weight::ZERO).unwrap();
        assert_eq!(case.crystal, p("q"));
        let case = report.cases.iter().find(|c| c.n == 3 && c.m == 0 && c.lambda == w(1, 0)).unwrap();
        assert_eq!(case.fermionic, p("q + q^2 + q^3"));
        let case = report.cases.iter().find(|c| c.n == 3 && c.m == 0 && c.lambda == w(0, 0)).unwrap();
        assert!(case.crystal.is_zero() && case.fermionic.is_zero());
    }

    #[test]
    fn normalization_variants() {
        let a = p("q + 2q^2");
        assert_eq!(compare_up_to_normalization(&a, &a), Agreement::Exact);
        assert_eq!(compare_up_to_normalization(&a, &p("q^3 + 2q^4")), Agreement::Shifted { shift: 2 });
        assert_eq!(compare_up_to_normalization(&a, &p("2q + q^2")), Agreement::Inverted { shift: 3 });
        assert_eq!(compare_up_to_normalization(&a, &p("q")), Agreement::Different);
        assert_eq!(compare_up_to_normalization(&LaurentPoly::zero(), &a), Agreement::Different);
    }

    #[test]
    fn level_parsing() {
        assert_eq!("inf".parse::<FusionLevel>().unwrap(), INF);
        assert_eq!("3".parse::<FusionLevel>().unwrap(), FusionLevel::Restricted(3));
        assert!("0".parse::<FusionLevel>().is_err());
        assert!("x".parse::<FusionLevel>().is_err());
    }
}
