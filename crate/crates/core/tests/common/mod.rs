//! Strategies, fixtures and property checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cremona::homaloidal::{enumerate_types, HomaloidalType};
use cremona::lattice::{LatticeClass, PointLabel};
use cremona::monomial::{
    conjugate_to_ordered, ell, factor_word, gl2_length, is_ordered, IntMatrix2, LrWord,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;
use proptest::test_runner::{Config, TestCaseError};

/// Cases per property suite.
pub const CASES: u32 = 10_000;

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

const LABELS: u32 = 12;

fn labels() -> Vec<u32> {
    (0..LABELS).collect()
}

/// A class with degree and multiplicities of moderate size on a few labels.
pub fn small_class() -> impl Strategy<Value = LatticeClass> {
    (
        -40i64..=40,
        prop::collection::vec(-15i64..=15, LABELS as usize),
    )
        .prop_map(|(d, ms)| {
            LatticeClass::new(
                d,
                ms.into_iter()
                    .enumerate()
                    .map(|(i, m)| (PointLabel(i as u32), m)),
            )
            .unwrap()
        })
}

#[derive(Clone, Debug)]
pub enum Move {
    Sigma(PointLabel, PointLabel, PointLabel),
    Iota(PointLabel, BTreeSet<PointLabel>),
}

impl Move {
    pub fn apply(&self, a: &LatticeClass) -> cremona::Result<LatticeClass> {
        match self {
            Move::Sigma(p, q, r) => a.apply_sigma(*p, *q, *r),
            Move::Iota(q, delta) => a.apply_iota(*q, delta),
        }
    }
}

pub fn weyl_move() -> impl Strategy<Value = Move> {
    let sigma = subsequence(labels(), 3)
        .prop_shuffle()
        .prop_map(|v| Move::Sigma(PointLabel(v[0]), PointLabel(v[1]), PointLabel(v[2])));
    let iota = (0..LABELS, subsequence(labels(), 0..LABELS as usize)).prop_map(|(q, mut delta)| {
        delta.retain(|&p| p != q);
        if delta.len() % 2 == 1 {
            delta.pop();
        }
        Move::Iota(PointLabel(q), delta.into_iter().map(PointLabel).collect())
    });
    prop_oneof![sigma, iota]
}

/// A proper type reached from the class of a line by random quadratic reflections.
pub fn proper_type() -> impl Strategy<Value = HomaloidalType> {
    prop::collection::vec(subsequence((0..14u32).collect::<Vec<_>>(), 3), 1..=7).prop_map(|steps| {
        let mut a = LatticeClass::line();
        for s in steps {
            a = a
                .apply_sigma(PointLabel(s[0]), PointLabel(s[1]), PointLabel(s[2]))
                .unwrap();
        }
        HomaloidalType::from_lattice_class(&a).unwrap()
    })
}

pub fn exps(max_len: usize, max_exp: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1..=max_exp, 0..=max_len)
}

/// Products of random generators of `GL2(Z)` and their inverses.
pub fn unimodular() -> impl Strategy<Value = IntMatrix2> {
    let gens = [
        IntMatrix2::L,
        IntMatrix2::R,
        IntMatrix2::l_pow(-1),
        IntMatrix2::r_pow(-1),
        IntMatrix2::TAU,
        IntMatrix2::NU,
        IntMatrix2::new(-1, 0, 0, -1),
    ];
    prop::collection::vec(0..gens.len(), 0..=16).prop_map(move |idx| {
        idx.into_iter().fold(IntMatrix2::IDENTITY, |m, i| {
            m.checked_mul(&gens[i]).unwrap()
        })
    })
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

pub fn check_weyl_move(a: &LatticeClass, b: &LatticeClass, mv: &Move) -> Result<(), TestCaseError> {
    let (ia, ib) = (mv.apply(a).unwrap(), mv.apply(b).unwrap());
    prop_assert_eq!(ia.intersect(&ib).unwrap(), a.intersect(b).unwrap());
    prop_assert_eq!(ia.canonical().unwrap(), a.canonical().unwrap());
    prop_assert_eq!(&mv.apply(&ia).unwrap(), a);
    prop_assert_eq!(ia.satisfies_noether(), a.satisfies_noether());
    if let Move::Iota(q, _) = mv {
        let fixed = LatticeClass::line()
            .checked_add(&LatticeClass::exceptional(*q).checked_scale(-1).unwrap())
            .unwrap();
        prop_assert_eq!(mv.apply(&fixed).unwrap(), fixed);
    }
    // Linearity.
    let sum = a.checked_add(b).unwrap();
    prop_assert_eq!(mv.apply(&sum).unwrap(), ia.checked_add(&ib).unwrap());
    Ok(())
}

pub fn check_s_independence(t: &HomaloidalType) -> Result<(), TestCaseError> {
    if t.is_identity() {
        return Ok(());
    }
    let s = t.s_set();
    prop_assert!(!s.is_empty(), "empty admissible set for {}", t);
    let first = t.predecessor_with(s[0]).unwrap();
    for &x in &s[1..] {
        prop_assert_eq!(
            &t.predecessor_with(x).unwrap(),
            &first,
            "index {} of {}",
            x,
            t
        );
    }
    prop_assert!(first.degree() < t.degree());
    Ok(())
}

pub fn check_comult_monotone(t: &HomaloidalType) -> Result<(), TestCaseError> {
    let chain = t.chain().unwrap();
    for w in chain.windows(2) {
        prop_assert!(w[1].comult() <= w[0].comult(), "{} -> {}", w[0], w[1]);
        prop_assert!(w[1].degree() < w[0].degree());
    }
    Ok(())
}

pub fn check_castelnuovo_agreement(t: &HomaloidalType) -> Result<(), TestCaseError> {
    if !t.is_identity() {
        prop_assert!(t.castelnuovo_predecessor().unwrap().degree() < t.degree());
    }
    prop_assert_eq!(
        t.castelnuovo_length().unwrap(),
        t.length().unwrap(),
        "{}",
        t
    );
    Ok(())
}

/// `((r + 1) / 2)^l >= d`, `5 l^2 >= d` when `r <= 9`, and `r <= 2d - 1` with
/// equality exactly for de Jonquieres types, where `r` counts base points.
pub fn check_length_bounds(t: &HomaloidalType) -> Result<(), TestCaseError> {
    let d = t.degree();
    if d < 2 {
        return Ok(());
    }
    let l = t.length().unwrap();
    let r = t.mults().len() as i64;
    let lhs = BigInt::from(r + 1).pow(l);
    let rhs = BigInt::from(d) * BigInt::from(2).pow(l);
    prop_assert!(lhs >= rhs, "log bound fails for {}", t);
    if r <= 9 {
        prop_assert!(
            5 * i64::from(l) * i64::from(l) >= d,
            "square-root bound fails for {}",
            t
        );
    }
    prop_assert!(r < 2 * d, "too many base points in {}", t);
    prop_assert_eq!(r == 2 * d - 1, t.is_jonquieres(), "{}", t);
    prop_assert_eq!(t.is_jonquieres(), l <= 1, "{}", t);
    prop_assert_eq!(t.is_jonquieres(), t.comult() == 1, "{}", t);
    Ok(())
}

pub fn word(e: Vec<u64>) -> LrWord {
    LrWord::new(e).unwrap()
}

pub fn check_ell_first_entry(mut s: Vec<u64>, first: u64) -> Result<(), TestCaseError> {
    if s.is_empty() {
        return Ok(());
    }
    let before = ell(&word(s.clone()));
    s[0] = first;
    prop_assert_eq!(ell(&word(s)), before);
    Ok(())
}

pub fn check_ell_additivity(s: Vec<u64>, t: Vec<u64>) -> Result<(), TestCaseError> {
    if t.len() < 2 || t[0] < 2 {
        return Ok(());
    }
    let joined: Vec<u64> = s.iter().chain(&t).copied().collect();
    prop_assert_eq!(ell(&word(joined)), ell(&word(s)) + ell(&word(t)));
    Ok(())
}

pub fn check_round_trip(e: Vec<u64>) -> Result<(), TestCaseError> {
    let w = word(e);
    let m = w.matrix().unwrap();
    let f = factor_word(&m).unwrap();
    prop_assert_eq!(&f.word, &w);
    prop_assert!(!f.flipped);
    if !w.is_empty() {
        let g = factor_word(&m.tau_flip()).unwrap();
        prop_assert_eq!(&g.word, &w);
        prop_assert!(g.flipped);
    }
    Ok(())
}

pub fn check_witnesses(m: &IntMatrix2) -> Result<(), TestCaseError> {
    let g = gl2_length(m).unwrap();
    prop_assert!(g.witness.verify(m).unwrap(), "witness for {}", m);
    prop_assert_eq!(g.witness.sign.abs(), 1);
    let group = cremona::monomial::sym3();
    prop_assert!(group.contains(&g.witness.left) && group.contains(&g.witness.right));
    if m.det().unwrap() == 1 && m.trace().unwrap().abs() >= 3 {
        let n = if m.trace().unwrap() > 0 {
            *m
        } else {
            m.checked_neg().unwrap()
        };
        let oc = conjugate_to_ordered(&n).unwrap();
        let c = oc.conjugator;
        let w = oc.word.matrix().unwrap();
        prop_assert_eq!(
            c.checked_mul(&n)
                .unwrap()
                .checked_mul(&c.inverse().unwrap())
                .unwrap(),
            w
        );
        prop_assert!(is_ordered(&w));
        prop_assert_eq!(oc.word.len() % 2, 0);
    }
    Ok(())
}

/// Every proper type of degree at most `max_degree`, in enumeration order.
pub fn types_up_to(max_degree: i64) -> Vec<HomaloidalType> {
    (1..=max_degree)
        .flat_map(|d| enumerate_types(d).unwrap())
        .collect()
}

/// Every unimodular matrix with entries in `-bound..=bound`.
pub fn unimodular_sweep(bound: i64) -> Vec<IntMatrix2> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if (a * d - b * c).abs() == 1 {
                        out.push(IntMatrix2::new(a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// Every word ending in `R` whose matrix has all entries at most `bound`.
pub fn words_with_entries_up_to(bound: i64) -> Vec<Vec<u64>> {
    fn rec(prefix: &mut Vec<u64>, m: IntMatrix2, bound: i64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let letter = if prefix.len() % 2 == 0 {
            IntMatrix2::R
        } else {
            IntMatrix2::L
        };
        let mut cur = m;
        for s in 1.. {
            cur = letter.checked_mul(&cur).unwrap();
            if cur.a.max(cur.b).max(cur.c).max(cur.d) > bound {
                break;
            }
            prefix.push(s);
            rec(prefix, cur, bound, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), IntMatrix2::IDENTITY, bound, &mut out);
    out
}

/// One row of the reference length table.
#[derive(Clone, Debug)]
pub struct FixtureRow {
    pub label: String,
    pub homaloidal_type: HomaloidalType,
    pub length: u32,
    pub predecessor: Option<String>,
    pub castelnuovo: Option<String>,
}

pub fn length_table_fixture() -> Vec<FixtureRow> {
    let text = include_str!("../data/length_table_12.txt");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            let label = f[0].to_string();
            let degree: i64 = label.split('.').next().unwrap().parse().unwrap();
            let text = if f[1] == "-" {
                format!("({degree})")
            } else {
                format!("({degree}; {})", f[1])
            };
            let opt = |s: &str| (s != "-").then(|| s.to_string());
            FixtureRow {
                label,
                homaloidal_type: HomaloidalType::parse(&text).unwrap(),
                length: f[2].parse().unwrap(),
                predecessor: opt(f[3]),
                castelnuovo: opt(f[4]),
            }
        })
        .collect()
}

/// Reference chains, each as its list of types.
pub fn chain_fixture() -> Vec<Vec<HomaloidalType>> {
    include_str!("../data/chains.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            l.split("->")
                .map(|t| HomaloidalType::parse(t.trim()).unwrap())
                .collect()
        })
        .collect()
}

/// `d(n)` for `n = -1, 0, 1, ...`: `d(-1) = 0`, `d(0) = 1`, `d(n) = 3 d(n-1) - d(n-2)`.
pub fn d_sequence(max_n: usize) -> Vec<BigInt> {
    let mut d = vec![BigInt::from(0), BigInt::from(1)];
    while d.len() < max_n + 2 {
        let k = d.len();
        let next = BigInt::from(3) * &d[k - 1] - &d[k - 2];
        d.push(next);
    }
    d
}
