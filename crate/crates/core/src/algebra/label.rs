use std::fmt;

use serde::Serialize;

use super::Weight;
use crate::error::{Error, Result};

/// Dimension of the irreducible C₂-module with highest weight `w`.
pub fn weyl_dim(w: &Weight) -> Result<u64> {
    if !w.is_dominant() {
        return Err(Error::NotDominant(*w));
    }
    let (a, b) = (w.m1 as u64, w.m2 as u64);
    Ok((a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6)
}

/// Named irreducibles of the low-lying chart, levels 0 through 5.
/// A trailing `a` marks the second weight sharing a dimension.
const CHART: [(i64, i64, &str); 21] = [
    (0, 0, "1"),
    (1, 0, "4"),
    (0, 1, "5"),
    (2, 0, "10"),
    (1, 1, "16"),
    (0, 2, "14"),
    (3, 0, "20"),
    (2, 1, "35"),
    (1, 2, "40"),
    (0, 3, "30"),
    (4, 0, "35a"),
    (3, 1, "64"),
    (2, 2, "81"),
    (1, 3, "80"),
    (0, 4, "55"),
    (5, 0, "56"),
    (4, 1, "105"),
    (3, 2, "140"),
    (2, 3, "154"),
    (1, 4, "140a"),
    (0, 5, "91"),
];

/// A printable name for an irreducible: its dimension, plus a suffix when
/// the dimension alone is ambiguous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepLabel {
    pub weight: Weight,
    pub dimension: u64,
    pub suffix: Option<String>,
}

impl IrrepLabel {
    pub fn of(weight: &Weight) -> Result<Self> {
        let dimension = weyl_dim(weight)?;
        if let Some(&(_, _, name)) = CHART.iter().find(|c| c.0 == weight.m1 && c.1 == weight.m2) {
            let suffix = name.strip_prefix(&dimension.to_string()).filter(|s| !s.is_empty());
            return Ok(IrrepLabel { weight: *weight, dimension, suffix: suffix.map(str::to_string) });
        }
        let suffix = if weights_of_dimension(dimension).len() > 1 { Some(format!("[{weight}]")) } else { None };
        Ok(IrrepLabel { weight: *weight, dimension, suffix })
    }

    /// Inverse of `Display`: `"35a"`, `"10"`, or `"<dim>[m1,m2]"`.
    pub fn parse(label: &str) -> Result<Weight> {
        let unknown = || Error::UnknownLabel(label.to_string());
        if let Some(&(m1, m2, _)) = CHART.iter().find(|c| c.2 == label) {
            return Ok(Weight::new(m1, m2));
        }
        if let Some((dim, rest)) = label.split_once('[') {
            let w: Weight = rest.strip_suffix(']').ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
            if w.is_dominant() && weyl_dim(&w)?.to_string() == dim {
                return Ok(w);
            }
            return Err(unknown());
        }
        let dim: u64 = label.parse().map_err(|_| unknown())?;
        match weights_of_dimension(dim).as_slice() {
            [w] => Ok(*w),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dimension, self.suffix.as_deref().unwrap_or(""))
    }
}

/// Label string of a dominant weight.
pub fn label(weight: &Weight) -> String {
    IrrepLabel::of(weight).map(|l| l.to_string()).unwrap_or_else(|_| format!("[{weight}]"))
}

/// Every dominant weight whose irreducible has dimension `dim`.
fn weights_of_dimension(dim: u64) -> Vec<Weight> {
    let mut found = Vec::new();
    let mut level: i64 = 0;
    // The smallest dimension at level L is (L+1)(L+2)(L+3)/6, reached at L·Λ₁.
    loop {
        let l = level as u64;
        if (l + 1) * (l + 2) * (l + 3) / 6 > dim {
            break;
        }
        for m1 in 0..=level {
            let w = Weight::new(m1, level - m1);
            if weyl_dim(&w).unwrap() == dim {
                found.push(w);
            }
        }
        level += 1;
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dim(&Weight::LAMBDA1).unwrap(), 4);
        assert_eq!(weyl_dim(&Weight::ZERO).unwrap(), 1);
        assert_eq!(weyl_dim(&Weight::new(2, 1)).unwrap(), 35);
        assert_eq!(weyl_dim(&Weight::new(4, 0)).unwrap(), 35);
        assert_eq!(weyl_dim(&Weight::new(-1, 0)), Err(Error::NotDominant(Weight::new(-1, 0))));
    }

    #[test]
    fn chart_labels_match_dimensions() {
        for (m1, m2, name) in CHART {
            let w = Weight::new(m1, m2);
            let dim = weyl_dim(&w).unwrap();
            assert!(name.starts_with(&dim.to_string()), "{name} vs {dim}");
            assert_eq!(label(&w), name);
            assert_eq!(IrrepLabel::parse(name).unwrap(), w);
        }
    }

    #[test]
    fn collisions_are_disambiguated() {
        assert_eq!(label(&Weight::new(4, 0)), "35a");
        assert_eq!(label(&Weight::new(2, 1)), "35");
        assert_eq!(label(&Weight::new(1, 4)), "140a");
        // Beyond the chart, each label still names exactly one weight.
        for level in 6..12 {
            for m1 in 0..=level {
                let w = Weight::new(m1, level - m1);
                let name = label(&w);
                assert_eq!(IrrepLabel::parse(&name).unwrap(), w, "{name}");
            }
        }
    }

    #[test]
    fn unknown_labels_rejected() {
        assert!(IrrepLabel::parse("35b").is_err());
        assert!(IrrepLabel::parse("2").is_err());
        assert!(IrrepLabel::parse("10[1,1]").is_err());
    }
}
