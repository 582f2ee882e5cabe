//! Crystals of the 4- and 5-dimensional C₂-modules and the statistics on
//! words built from them.
//!
//! ```text
//! B4:  1 -1-> 2 -2-> 3 -1-> 4
//! B5:  a -2-> b -1-> c -1-> d -2-> e
//! ```
//!
//! A word `p₁p₂…p_m` is an element of the tensor product of the crystals of
//! its letters. The energy of a word is the sum over letters of an index,
//! obtained by carrying the letter to the front with the combinatorial R
//! and adding up the local energy `H` of every exchange.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::Weight;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrystalType {
    B4,
    B5,
}

impl CrystalType {
    pub fn letters(self) -> &'static [Letter] {
        match self {
            CrystalType::B4 => &Letter::B4,
            CrystalType::B5 => &Letter::B5,
        }
    }

    /// `'4'` or `'5'`, the dimension of the module.
    pub fn digit(self) -> char {
        match self {
            CrystalType::B4 => '4',
            CrystalType::B5 => '5',
        }
    }
}

/// Parses a type sequence such as `"54454"`.
pub fn parse_type_sequence(s: &str) -> Result<Vec<CrystalType>> {
    s.chars()
        .map(|c| match c {
            '4' => Ok(CrystalType::B4),
            '5' => Ok(CrystalType::B5),
            _ => Err(Error::Parse { what: "type sequence", input: s.to_string() }),
        })
        .collect()
}

pub fn type_sequence_string(types: &[CrystalType]) -> String {
    types.iter().map(|t| t.digit()).collect()
}

/// A crystal letter. The derived order is `1 < 2 < 3 < 4 < a < … < e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    One,
    Two,
    Three,
    Four,
    A,
    B,
    C,
    D,
    E,
}

use Letter::*;

impl Letter {
    pub const B4: [Letter; 4] = [One, Two, Three, Four];
    pub const B5: [Letter; 5] = [A, B, C, D, E];
    pub const ALL: [Letter; 9] = [One, Two, Three, Four, A, B, C, D, E];

    pub fn crystal_type(self) -> CrystalType {
        match self {
            One | Two | Three | Four => CrystalType::B4,
            _ => CrystalType::B5,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            One => '1',
            Two => '2',
            Three => '3',
            Four => '4',
            A => 'a',
            B => 'b',
            C => 'c',
            D => 'd',
            E => 'e',
        }
    }

    pub fn from_symbol(c: char) -> Result<Letter> {
        Letter::ALL.into_iter().find(|l| l.symbol() == c).ok_or(Error::InvalidLetter(c))
    }

    pub fn weight(self) -> Weight {
        match self {
            One => Weight::new(1, 0),
            Two => Weight::new(-1, 1),
            Three => Weight::new(1, -1),
            Four => Weight::new(-1, 0),
            A => Weight::new(0, 1),
            B => Weight::new(2, -1),
            C => Weight::new(0, 0),
            D => Weight::new(-2, 1),
            E => Weight::new(0, -1),
        }
    }

    /// Single-letter lowering operator `f_i`.
    pub fn f(self, i: usize) -> Option<Letter> {
        match (i, self) {
            (1, One) => Some(Two),
            (2, Two) => Some(Three),
            (1, Three) => Some(Four),
            (2, A) => Some(B),
            (1, B) => Some(C),
            (1, C) => Some(D),
            (2, D) => Some(E),
            _ => None,
        }
    }

    /// Single-letter raising operator `e_i`.
    pub fn e(self, i: usize) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| l.f(i) == Some(self))
    }

    /// `φ_i`: how many times `f_i` applies.
    pub fn phi(self, i: usize) -> usize {
        std::iter::successors(self.f(i), |l| l.f(i)).count()
    }

    /// `ε_i`: how many times `e_i` applies.
    pub fn epsilon(self, i: usize) -> usize {
        std::iter::successors(self.e(i), |l| l.e(i)).count()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A sequence of letters. Prints as the bare concatenation of symbols; the
/// empty word prints as `φ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn type_sequence(&self) -> Vec<CrystalType> {
        self.0.iter().map(|l| l.crystal_type()).collect()
    }

    pub fn weight(&self) -> Weight {
        self.0.iter().fold(Weight::ZERO, |acc, l| acc + l.weight())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("φ");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "φ" {
            return Ok(Word::default());
        }
        s.chars().map(Letter::from_symbol).collect::<Result<Vec<_>>>().map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Index of the letter acted on by `f_i` (or `e_i` when `raise`), by the
/// signature rule: write `−^{ε_i} +^{φ_i}` for every letter left to right,
/// cancel adjacent `+−` pairs, then `f_i` hits the leftmost surviving `+`
/// and `e_i` the rightmost surviving `−`.
fn signature_target(i: usize, w: &Word, raise: bool) -> Option<usize> {
    // unmatched '+' positions, as a stack
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (pos, l) in w.0.iter().enumerate() {
        for _ in 0..l.epsilon(i) {
            if plus.pop().is_none() {
                minus.push(pos);
            }
        }
        for _ in 0..l.phi(i) {
            plus.push(pos);
        }
    }
    if raise {
        minus.last().copied()
    } else {
        plus.first().copied()
    }
}

/// Kashiwara lowering operator `f_i` on a word; `None` if it vanishes.
pub fn kashiwara_f(i: usize, w: &Word) -> Option<Word> {
    let pos = signature_target(i, w, false)?;
    let mut out = w.clone();
    out.0[pos] = w.0[pos].f(i)?;
    Some(out)
}

/// Kashiwara raising operator `e_i` on a word; `None` if it vanishes.
pub fn kashiwara_e(i: usize, w: &Word) -> Option<Word> {
    let pos = signature_target(i, w, true)?;
    let mut out = w.clone();
    out.0[pos] = w.0[pos].e(i)?;
    Some(out)
}

/// Combinatorial R for `B5 ⊗ B4 → B4 ⊗ B5`, rows indexed by the B5 letter
/// and columns by the B4 letter.
const R54: [[(Letter, Letter); 4]; 5] = [
    [(One, A), (Two, A), (One, C), (One, D)],
    [(One, B), (Three, A), (Three, B), (One, E)],
    [(Two, B), (Four, A), (Four, B), (Two, E)],
    [(Two, C), (Two, D), (Four, C), (Four, D)],
    [(Three, C), (Three, D), (Three, E), (Four, E)],
];

fn b4_index(l: Letter) -> usize {
    l as usize
}

fn b5_index(l: Letter) -> usize {
    l as usize - 4
}

/// The crystal isomorphism `B ⊗ B′ → B′ ⊗ B` on the pair `(x, y)`.
///
/// Same-type pairs are returned unchanged.
pub fn iso(x: Letter, y: Letter) -> (Letter, Letter) {
    match (x.crystal_type(), y.crystal_type()) {
        (CrystalType::B5, CrystalType::B4) => R54[b5_index(x)][b4_index(y)],
        (CrystalType::B4, CrystalType::B5) => {
            for (u, row) in Letter::B5.iter().zip(R54.iter()) {
                for (j, image) in Letter::B4.iter().zip(row.iter()) {
                    if *image == (x, y) {
                        return (*u, *j);
                    }
                }
            }
            unreachable!("combinatorial R table is a bijection")
        }
        _ => (x, y),
    }
}

/// Local energy `H(x, y)` for the adjacent pair `x y`.
pub fn energy_h(x: Letter, y: Letter) -> u32 {
    let pair = [x.symbol(), y.symbol()].iter().collect::<String>();
    let pair = pair.as_str();
    match (x.crystal_type(), y.crystal_type()) {
        (CrystalType::B4, CrystalType::B4) => match pair {
            "12" | "13" | "23" | "24" | "34" | "14" => 1,
            _ => 0,
        },
        (CrystalType::B5, CrystalType::B5) => match pair {
            "ae" => 2,
            "ab" | "ac" | "ad" | "bc" | "bd" | "be" | "cc" | "cd" | "ce" | "de" => 1,
            _ => 0,
        },
        (CrystalType::B5, CrystalType::B4) => match pair {
            "a3" | "a4" | "b4" | "c4" => 1,
            _ => 0,
        },
        (CrystalType::B4, CrystalType::B5) => match pair {
            "1c" | "1d" | "1e" | "2e" => 1,
            _ => 0,
        },
    }
}

/// The energies picked up while the letter at `pos` (1-based) is carried to
/// the front of the word, one entry per exchange, nearest neighbour first.
pub fn index_summands(w: &Word, pos: usize) -> Result<Vec<u32>> {
    if pos == 0 || pos > w.len() {
        return Err(Error::PositionOutOfRange { pos, len: w.len() });
    }
    Ok(carry_to_front(&w.0[..pos - 1], w.0[pos - 1]).collect())
}

fn carry_to_front(prefix: &[Letter], tracked: Letter) -> impl Iterator<Item = u32> + '_ {
    let mut token = tracked;
    prefix.iter().rev().map(move |&x| {
        let h = energy_h(x, token);
        token = iso(x, token).0;
        h
    })
}

/// `ind(p_pos)`: the sum of [`index_summands`].
pub fn index(w: &Word, pos: usize) -> Result<u32> {
    Ok(index_summands(w, pos)?.iter().sum())
}

/// Index of a letter appended to `prefix`.
pub fn append_index(prefix: &[Letter], letter: Letter) -> u32 {
    carry_to_front(prefix, letter).sum()
}

/// Word energy: the sum of the indices of all its letters.
pub fn energy(w: &Word) -> u32 {
    (0..w.len()).map(|k| append_index(&w.0[..k], w.0[k])).sum()
}

/// Maps `w` to the tensor factor order `target` by adjacent R moves.
///
/// Schedule: scan left to right; at the first position whose type differs
/// from the target, bubble the nearest letter of the wanted type leftward.
pub fn reorder(w: &Word, target: &[CrystalType]) -> Result<Word> {
    let current = w.type_sequence();
    let count = |ts: &[CrystalType]| ts.iter().filter(|&&t| t == CrystalType::B4).count();
    if target.len() != current.len() || count(target) != count(&current) {
        return Err(Error::IncompatibleTypes {
            from: type_sequence_string(&current),
            to: type_sequence_string(target),
        });
    }
    let mut letters = w.0.clone();
    for j in 0..letters.len() {
        if letters[j].crystal_type() == target[j] {
            continue;
        }
        let k = (j + 1..letters.len()).find(|&k| letters[k].crystal_type() == target[j]).expect("type counts agree");
        for s in (j..k).rev() {
            let (l, r) = iso(letters[s], letters[s + 1]);
            letters[s] = l;
            letters[s + 1] = r;
        }
    }
    Ok(Word(letters))
}
