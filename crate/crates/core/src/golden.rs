//! Regression data shipped with the crate and the checks that replay it.
//!
//! Files live in `golden/` next to the crate manifest; `QCG_GOLDEN_DIR`
//! points the loaders elsewhere. Lines starting with `#` and blank lines are
//! ignored, fields are tab-separated.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use serde::Serialize;

use crate::algebra::{label, IrrepLabel, LaurentPoly, Weight};
use crate::crystal::Word;
use crate::error::{Error, Result};
use crate::fusion::{enumerate_paths, q_cg, FusionLevel};
use crate::spinon::{compare_decompositions, spinon_character, GradedDecomposition};

pub const PATHS_FILE: &str = "restricted_paths.txt";
pub const UNRESTRICTED_FILE: &str = "unrestricted_tables.txt";
pub const LEVEL1_FILE: &str = "level1_tables.txt";
pub const VACUUM_FILE: &str = "vacuum_level1.txt";

/// Largest particle number covered by the path tables.
pub const PATH_TABLE_PARTICLES: usize = 6;

pub fn golden_dir() -> PathBuf {
    match std::env::var_os("QCG_GOLDEN_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden"),
    }
}

pub fn load(file: &str) -> Result<String> {
    let path = golden_dir().join(file);
    std::fs::read_to_string(&path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

/// Outcome of replaying one golden file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Tables (or path groups) replayed.
    pub tables: usize,
    /// Individual entries compared.
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i + 1, l.split('\t').map(str::trim).collect()))
}

fn bad_line(what: &'static str, lineno: usize, line: &[&str]) -> Error {
    Error::Parse { what, input: format!("line {lineno}: {}", line.join("\t")) }
}

/// Particle content written as `4^n 5^m`.
pub fn parse_content(s: &str) -> Result<(usize, usize)> {
    let err = || Error::Parse { what: "particle content", input: s.to_string() };
    let mut parts = s.split_whitespace();
    let mut field = |base: &str| -> Result<usize> {
        parts.next().and_then(|p| p.strip_prefix(base)).and_then(|p| p.parse().ok()).ok_or_else(err)
    };
    let n = field("4^")?;
    let m = field("5^")?;
    if parts.next().is_some() {
        return Err(err());
    }
    Ok((n, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEntry {
    pub content: (usize, usize),
    pub word: Word,
    pub energy: u32,
}

pub fn parse_paths(text: &str) -> Result<Vec<PathEntry>> {
    data_lines(text)
        .map(|(no, f)| {
            let [content, word, energy] = f[..] else {
                return Err(bad_line("path entry", no, &f));
            };
            Ok(PathEntry {
                content: parse_content(content)?,
                word: word.parse()?,
                energy: energy.parse().map_err(|_| bad_line("path energy", no, &f))?,
            })
        })
        .collect()
}

/// Compares the level-1 paths against `entries`, for every content with at
/// most [`PATH_TABLE_PARTICLES`] particles and every level-1 endpoint.
/// Contents absent from `entries` must have no paths.
pub fn check_paths(entries: &[PathEntry]) -> CheckReport {
    let mut report = CheckReport { name: "restricted paths".into(), ..Default::default() };
    type Key = ((usize, usize), Weight);
    let mut expected: BTreeMap<Key, BTreeSet<(String, u32)>> = BTreeMap::new();
    for e in entries {
        expected.entry((e.content, e.word.weight())).or_default().insert((e.word.to_string(), e.energy));
    }
    let level = FusionLevel::Restricted(1);
    for total in 0..=PATH_TABLE_PARTICLES {
        for n in 0..=total {
            let m = total - n;
            for end in [Weight::ZERO, Weight::LAMBDA1, Weight::LAMBDA2] {
                let got: BTreeSet<(String, u32)> = enumerate_paths(n, m, level, Some(end))
                    .into_iter()
                    .map(|p| (p.word.to_string(), p.energy))
                    .collect();
                let want = expected.remove(&((n, m), end)).unwrap_or_default();
                if !want.is_empty() {
                    report.tables += 1;
                }
                report.checked += want.len().max(got.len());
                for (w, e) in want.difference(&got) {
                    report.failures.push(format!("4^{n} 5^{m} -> {}: missing {w} (energy {e})", label(&end)));
                }
                for (w, e) in got.difference(&want) {
                    report.failures.push(format!("4^{n} 5^{m} -> {}: unexpected {w} (energy {e})", label(&end)));
                }
            }
        }
    }
    for ((content, end), words) in expected {
        report.failures.push(format!(
            "4^{} 5^{} -> {}: outside the checked range ({} entries)",
            content.0,
            content.1,
            label(&end),
            words.len()
        ));
    }
    report
}

/// One `n m level` block of a polynomial table file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub n: usize,
    pub m: usize,
    pub level: FusionLevel,
    pub entries: BTreeMap<Weight, LaurentPoly>,
}

pub fn parse_tables(text: &str) -> Result<Vec<GoldenTable>> {
    let mut tables: Vec<GoldenTable> = Vec::new();
    let mut last_key: Option<(usize, usize, FusionLevel)> = None;
    for (no, f) in data_lines(text) {
        let [key, name, poly] = f[..] else {
            return Err(bad_line("table entry", no, &f));
        };
        let k: Vec<&str> = key.split_whitespace().collect();
        let [n, m, level] = k[..] else {
            return Err(bad_line("table key", no, &f));
        };
        let n: usize = n.parse().map_err(|_| bad_line("particle number", no, &f))?;
        let m: usize = m.parse().map_err(|_| bad_line("particle number", no, &f))?;
        let level: FusionLevel = level.parse()?;
        let weight = IrrepLabel::parse(name)?;
        let poly: LaurentPoly = poly.parse()?;
        let key = (n, m, level);
        if last_key != Some(key) {
            tables.push(GoldenTable { n, m, level, entries: BTreeMap::new() });
            last_key = Some(key);
        }
        let table = tables.last_mut().expect("pushed above");
        if table.entries.insert(weight, poly).is_some() {
            return Err(bad_line("table entry (duplicate label)", no, &f));
        }
    }
    Ok(tables)
}

/// Every golden table must equal the computed table exactly, including the
/// set of endpoints.
pub fn check_tables(name: &str, tables: &[GoldenTable]) -> CheckReport {
    let mut report = CheckReport { name: name.into(), ..Default::default() };
    for t in tables {
        report.tables += 1;
        let got = q_cg(t.n, t.m, t.level);
        let bracket = format!("[4^{} 5^{}] level {}", t.n, t.m, t.level);
        let endpoints: BTreeSet<&Weight> = got.entries.keys().chain(t.entries.keys()).collect();
        for w in endpoints {
            report.checked += 1;
            let (have, want) = (got.get(w), t.entries.get(w).cloned().unwrap_or_default());
            if have != want {
                report.failures.push(format!("{bracket} {}: expected {want}, computed {have}", label(w)));
            }
        }
    }
    report
}

/// Golden graded decomposition: `(target, level, data)`.
pub fn parse_decomposition(text: &str) -> Result<(Weight, u32, GradedDecomposition)> {
    let mut header: Option<(Weight, u32)> = None;
    let mut depths: Vec<BTreeMap<Weight, u64>> = Vec::new();
    for (no, f) in data_lines(text) {
        let [key, name, mult] = f[..] else {
            return Err(bad_line("decomposition entry", no, &f));
        };
        let k: Vec<&str> = key.split_whitespace().collect();
        let [target, level, depth] = k[..] else {
            return Err(bad_line("decomposition key", no, &f));
        };
        let target = IrrepLabel::parse(target)?;
        let level: u32 = level.parse().map_err(|_| bad_line("level", no, &f))?;
        let depth: usize = depth.parse().map_err(|_| bad_line("depth", no, &f))?;
        if *header.get_or_insert((target, level)) != (target, level) {
            return Err(bad_line("decomposition entry (second module)", no, &f));
        }
        if depths.len() <= depth {
            depths.resize(depth + 1, BTreeMap::new());
        }
        let mult: u64 = mult.parse().map_err(|_| bad_line("multiplicity", no, &f))?;
        depths[depth].insert(IrrepLabel::parse(name)?, mult);
    }
    let (target, level) = header.ok_or(Error::Parse { what: "graded decomposition", input: String::new() })?;
    Ok((target, level, GradedDecomposition { depths }))
}

pub fn check_decomposition(target: &Weight, level: u32, expected: &GradedDecomposition) -> Result<CheckReport> {
    let got = spinon_character(target, level, expected.cutoff())?;
    let diff = compare_decompositions(expected, &got)?;
    Ok(CheckReport {
        name: "spinon character".into(),
        tables: expected.depths.len(),
        checked: expected.depths.iter().map(BTreeMap::len).sum(),
        failures: diff.to_string().lines().map(str::to_string).collect(),
    })
}

pub fn check_restricted_paths() -> Result<CheckReport> {
    Ok(check_paths(&parse_paths(&load(PATHS_FILE)?)?))
}

pub fn check_unrestricted_tables() -> Result<CheckReport> {
    Ok(check_tables("unrestricted tables", &parse_tables(&load(UNRESTRICTED_FILE)?)?))
}

pub fn check_level1_tables() -> Result<CheckReport> {
    Ok(check_tables("level-1 tables", &parse_tables(&load(LEVEL1_FILE)?)?))
}

pub fn check_vacuum() -> Result<CheckReport> {
    let (target, level, expected) = parse_decomposition(&load(VACUUM_FILE)?)?;
    check_decomposition(&target, level, &expected)
}
