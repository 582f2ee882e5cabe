use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weight of C₂ written in the fundamental-weight basis, `m1·Λ₁ + m2·Λ₂`.
///
/// With the normalization where the long roots have squared length 2, the
/// simple roots are `α₁ = 2Λ₁ − Λ₂` (short) and `α₂ = −2Λ₁ + 2Λ₂` (long).
/// In the planar picture of the representation chart the weight sits at
/// `(x, y) = (m2, m1 + m2)`, so the level is the height `y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub m1: i64,
    pub m2: i64,
}

/// Twice the invariant form on the fundamental weights:
/// `(Λ₁,Λ₁) = 1/2`, `(Λ₁,Λ₂) = 1/2`, `(Λ₂,Λ₂) = 1`.
const GRAM2: [[i64; 2]; 2] = [[1, 1], [1, 2]];

impl Weight {
    pub const ZERO: Weight = Weight { m1: 0, m2: 0 };
    pub const LAMBDA1: Weight = Weight { m1: 1, m2: 0 };
    pub const LAMBDA2: Weight = Weight { m1: 0, m2: 1 };
    /// Half the sum of positive roots, `Λ₁ + Λ₂`.
    pub const RHO: Weight = Weight { m1: 1, m2: 1 };

    pub const fn new(m1: i64, m2: i64) -> Self {
        Weight { m1, m2 }
    }

    pub fn is_dominant(&self) -> bool {
        self.m1 >= 0 && self.m2 >= 0
    }

    /// `m1 + m2`; the level of the smallest affine module containing `V(self)`.
    pub fn level(&self) -> i64 {
        self.m1 + self.m2
    }

    /// Coordinates in the representation-chart picture.
    pub fn chart_coords(&self) -> (i64, i64) {
        (self.m2, self.m1 + self.m2)
    }

    /// The simple root `α_a` for `a ∈ {1, 2}`.
    pub fn simple_root(a: usize) -> Result<Weight> {
        match a {
            1 => Ok(Weight::new(2, -1)),
            2 => Ok(Weight::new(-2, 2)),
            _ => Err(Error::RootIndex(a)),
        }
    }

    /// The four positive roots: `α₁, α₂, α₁+α₂, 2α₁+α₂`.
    pub fn positive_roots() -> [Weight; 4] {
        [Weight::new(2, -1), Weight::new(-2, 2), Weight::new(0, 1), Weight::new(2, 0)]
    }

    /// All eight roots.
    pub fn roots() -> [Weight; 8] {
        let p = Self::positive_roots();
        [p[0], p[1], p[2], p[3], -p[0], -p[1], -p[2], -p[3]]
    }

    /// Twice the invariant inner product. Always an integer on the weight lattice.
    pub fn inner2(&self, other: &Weight) -> i64 {
        let a = [self.m1, self.m2];
        let b = [other.m1, other.m2];
        let mut s = 0;
        for i in 0..2 {
            for j in 0..2 {
                s += a[i] * GRAM2[i][j] * b[j];
            }
        }
        s
    }

    /// Write `self` as `k1·α₁ + k2·α₂` if it lies in the root lattice.
    pub fn root_coordinates(&self) -> Option<(i64, i64)> {
        // m1 = 2k1 - 2k2, m2 = -k1 + 2k2
        let k1 = self.m1 + self.m2;
        let twice_k2 = self.m1 + 2 * self.m2;
        if twice_k2 % 2 != 0 {
            return None;
        }
        Some((k1, twice_k2 / 2))
    }

    /// Simple reflection `s_a`.
    pub fn reflect(&self, a: usize) -> Weight {
        match a {
            1 => *self - Weight::new(2, -1) * self.m1,
            2 => *self - Weight::new(-2, 2) * self.m2,
            _ => panic!("simple reflection index {a} out of range"),
        }
    }

    /// The eight Weyl-group images of `self` paired with the sign of the group element.
    ///
    /// Elements are listed in a fixed order, so the same index refers to the
    /// same group element for every input weight.
    pub fn weyl_orbit_signed(&self) -> [(Weight, i64); 8] {
        // Reduced words for the dihedral group of order 8.
        const WORDS: [&[usize]; 8] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1], &[2, 1, 2], &[1, 2, 1, 2]];
        let mut out = [(Weight::ZERO, 0); 8];
        for (slot, word) in out.iter_mut().zip(WORDS) {
            let mut w = *self;
            // apply the rightmost generator first
            for &a in word.iter().rev() {
                w = w.reflect(a);
            }
            let sign = if word.len() % 2 == 0 { 1 } else { -1 };
            *slot = (w, sign);
        }
        out
    }

    /// The dominant representative of the Weyl orbit.
    pub fn dominant_conjugate(&self) -> Weight {
        let mut w = *self;
        loop {
            if w.m1 < 0 {
                w = w.reflect(1);
            } else if w.m2 < 0 {
                w = w.reflect(2);
            } else {
                return w;
            }
        }
    }
}

/// `(α_a^∨, w)`: the `a`-th fundamental-basis coefficient of `w`.
pub fn pairing(a: usize, w: &Weight) -> Result<i64> {
    match a {
        1 => Ok(w.m1),
        2 => Ok(w.m2),
        _ => Err(Error::RootIndex(a)),
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.m1 + rhs.m1, self.m2 + rhs.m2)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.m1 += rhs.m1;
        self.m2 += rhs.m2;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.m1 - rhs.m1, self.m2 - rhs.m2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.m1, -self.m2)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight::new(self.m1 * k, self.m2 * k)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m1, self.m2)
    }
}

/// Parses `"m1,m2"`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "weight", input: s.to_string() };
        let (a, b) = s.split_once(',').ok_or_else(err)?;
        let m1 = a.trim().parse().map_err(|_| err())?;
        let m2 = b.trim().parse().map_err(|_| err())?;
        Ok(Weight::new(m1, m2))
    }
}

/// Serialized as the `"m1,m2"` string, so weights can key JSON objects.
impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
