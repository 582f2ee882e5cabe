//! Crystal graphs of the fundamental modules and their two-fold tensor
//! products, as drawn edge by edge, against the signature rule.

use std::collections::BTreeSet;

use qcg::algebra::pairing;
use qcg::crystal::{kashiwara_e, kashiwara_f, Letter, Word};

type Edges = BTreeSet<(String, usize, String)>;

fn parse_edges(spec: &[(usize, &str)]) -> Edges {
    let mut out = Edges::new();
    for (i, list) in spec {
        for edge in list.split_whitespace() {
            let (from, to) = edge.split_once('>').unwrap();
            out.insert((from.to_string(), *i, to.to_string()));
        }
    }
    out
}

fn computed_edges(first: &[Letter], second: Option<&[Letter]>) -> Edges {
    let words: Vec<Word> = match second {
        None => first.iter().map(|&l| Word::new(vec![l])).collect(),
        Some(second) => first.iter().flat_map(|&x| second.iter().map(move |&y| Word::new(vec![x, y]))).collect(),
    };
    let mut out = Edges::new();
    for w in &words {
        for i in 1..=2 {
            if let Some(v) = kashiwara_f(i, w) {
                assert_eq!(kashiwara_e(i, &v).as_ref(), Some(w), "e_{i} does not undo f_{i} on {w}");
                out.insert((w.to_string(), i, v.to_string()));
            }
        }
    }
    out
}

/// `(ε_i, φ_i)` of a word, by walking the i-string.
fn string_lengths(i: usize, w: &Word) -> (usize, usize) {
    let walk = |step: fn(usize, &Word) -> Option<Word>| {
        let mut cur = w.clone();
        let mut n = 0;
        while let Some(next) = step(i, &cur) {
            cur = next;
            n += 1;
        }
        n
    };
    (walk(kashiwara_e), walk(kashiwara_f))
}

#[test]
fn string_lengths_match_weights() {
    for first in [&Letter::B4[..], &Letter::B5[..]] {
        for second in [&Letter::B4[..], &Letter::B5[..]] {
            for &x in first {
                for &y in second {
                    let w = Word::new(vec![x, y]);
                    for i in 1..=2 {
                        let (eps, phi) = string_lengths(i, &w);
                        assert_eq!(phi as i64 - eps as i64, pairing(i, &w.weight()).unwrap(), "{w}");
                    }
                }
            }
        }
    }
}

#[test]
fn single_letters() {
    let four = parse_edges(&[(1, "1>2 3>4"), (2, "2>3")]);
    let five = parse_edges(&[(1, "b>c c>d"), (2, "a>b d>e")]);
    assert_eq!(computed_edges(&Letter::B4, None), four);
    assert_eq!(computed_edges(&Letter::B5, None), five);
}

#[test]
fn four_times_four() {
    let drawn = parse_edges(&[
        (1, "11>21 31>41 21>22 41>42 13>23 33>43 23>24 43>44"),
        (2, "21>31 22>32 12>13 32>33 42>43 24>34"),
    ]);
    assert_eq!(computed_edges(&Letter::B4, Some(&Letter::B4)), drawn);
}

#[test]
fn five_times_five() {
    let drawn = parse_edges(&[
        (1, "ba>ca ca>da bb>cb cb>db ab>ac db>dc eb>ec bc>cc ac>ad cc>cd dc>dd ec>ed be>ce ce>de"),
        (2, "aa>ba da>ea ba>bb ea>eb ac>bc ad>bd dd>ed bd>be cd>ce ed>ee"),
    ]);
    // The drawing leaves out two 2-arrows. Both are forced: ca and dc have
    // ε₂ = 0 and weight pairing 1 with the second coroot, so φ₂ = 1.
    let forced = parse_edges(&[(2, "ca>cb dc>ec")]);
    let computed = computed_edges(&Letter::B5, Some(&Letter::B5));
    assert_eq!(computed, drawn.union(&forced).cloned().collect());
    for (from, i, _) in &forced {
        let w: Word = from.parse().unwrap();
        assert_eq!(string_lengths(*i, &w), (0, 1));
    }
}

#[test]
fn four_times_five() {
    let drawn = parse_edges(&[
        (1, "1a>2a 3a>4a 1b>2b 3b>4b 2b>2c 4b>4c 1c>1d 2c>2d 3c>3d 4c>4d 1e>2e 3e>4e"),
        (2, "2a>3a 1a>1b 3a>3b 4a>4b 2c>3c 2d>3d 1d>1e 3d>3e 4d>4e"),
    ]);
    assert_eq!(computed_edges(&Letter::B4, Some(&Letter::B5)), drawn);
}

#[test]
fn five_times_four() {
    let drawn = parse_edges(&[
        (1, "b1>c1 c1>d1 a1>a2 d1>d2 e1>e2 b2>c2 b3>c3 c3>d3 a3>a4 d3>d4 e3>e4 b4>c4"),
        (2, "a1>b1 d1>e1 a2>b2 d2>e2 b2>b3 c2>c3 e2>e3 a4>b4 d4>e4"),
    ]);
    assert_eq!(computed_edges(&Letter::B5, Some(&Letter::B4)), drawn);
}
