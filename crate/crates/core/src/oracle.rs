//! Brute-force cross-checks for the closed-form algorithms.
//!
//! Each check works directly on lattice classes or letter strings and never
//! calls the predecessor formula or the length recursion it validates.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::homaloidal::{enumerate_types, HomaloidalType};
use crate::lattice::{LatticeClass, PointLabel};
use crate::monomial::{ell, LrWord};

/// Largest number of base points accepted by [`brute_predecessor`].
pub const MAX_BRUTE_POINTS: usize = 16;

/// Limits for [`bounded_bfs_length`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// States of larger degree are discarded.
    pub max_degree: i64,
    /// Largest number of moves explored.
    pub max_depth: u32,
    /// Points outside the current base locus that a single move may use.
    pub max_fresh_points: u32,
}

impl SearchBudget {
    pub fn new(max_degree: i64, max_depth: u32) -> Self {
        SearchBudget {
            max_degree,
            max_depth,
            max_fresh_points: 0,
        }
    }
}

/// All involutions of least resulting degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrutePredecessor {
    pub min_degree: i64,
    /// Every `(q, delta)` reaching `min_degree`.
    pub moves: Vec<(PointLabel, BTreeSet<PointLabel>)>,
}

fn materialize(t: &HomaloidalType) -> LatticeClass {
    let pairs = t
        .mults()
        .iter()
        .enumerate()
        .map(|(i, &m)| (PointLabel(i as u32), m));
    LatticeClass::new(t.degree(), pairs).expect("distinct labels")
}

/// Minimizes the degree of `iota(q, delta)` over every base point `q` and every
/// even subset `delta` of the other base points.
pub fn brute_predecessor(t: &HomaloidalType) -> Result<BrutePredecessor> {
    if t.is_identity() {
        return Err(Error::DegreeOne);
    }
    let a = materialize(t);
    let points: Vec<PointLabel> = a.base_points().into_iter().collect();
    if points.len() > MAX_BRUTE_POINTS {
        return Err(Error::BudgetExceeded);
    }
    let mut best = BrutePredecessor {
        min_degree: i64::MAX,
        moves: Vec::new(),
    };
    for &q in &points {
        let others: Vec<PointLabel> = points.iter().copied().filter(|&p| p != q).collect();
        for mask in 0u32..1 << others.len() {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            let delta: BTreeSet<PointLabel> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let deg = a.apply_iota(q, &delta)?.degree();
            if deg < best.min_degree {
                best = BrutePredecessor {
                    min_degree: deg,
                    moves: Vec::new(),
                };
            }
            if deg == best.min_degree {
                best.moves.push((q, delta));
            }
        }
    }
    Ok(best)
}

/// Outcome of [`bounded_bfs_length`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfsLength {
    Found(u32),
    Inconclusive,
}

/// A class up to relabelling: degree and sorted nonzero multiplicities.
type State = (i64, Vec<i64>);

/// Shortest number of involutions carrying `t` to the class of a line.
///
/// States are taken up to relabelling of points, since the effect of a move on
/// the multiset of multiplicities only depends on the multiplicities involved.
pub fn bounded_bfs_length(t: &HomaloidalType, budget: SearchBudget) -> BfsLength {
    let start: State = (t.degree(), t.mults().to_vec());
    let goal: State = (1, Vec::new());
    let mut seen: HashSet<State> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    for depth in 0..=budget.max_depth {
        if frontier.contains(&goal) {
            return BfsLength::Found(depth);
        }
        if depth == budget.max_depth {
            break;
        }
        let mut next = Vec::new();
        for state in &frontier {
            for image in moves(state, budget.max_fresh_points) {
                if image.0 <= budget.max_degree && seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    BfsLength::Inconclusive
}

/// Images of a state under every involution with `|delta| >= 2`, one per
/// choice of multiplicities.
fn moves(state: &State, fresh: u32) -> Vec<State> {
    let (degree, mults) = state;
    let mut groups: BTreeMap<i64, Vec<PointLabel>> = BTreeMap::new();
    for (i, &m) in mults.iter().enumerate() {
        groups.entry(m).or_default().push(PointLabel(i as u32));
    }
    let fresh_labels: Vec<PointLabel> = (0..fresh)
        .map(|i| PointLabel(mults.len() as u32 + i))
        .collect();
    let class = LatticeClass::new(
        *degree,
        mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (PointLabel(i as u32), m)),
    )
    .expect("distinct labels");
    let mut centres: Vec<(PointLabel, Option<i64>)> =
        groups.iter().map(|(&m, ps)| (ps[0], Some(m))).collect();
    if let Some(&f) = fresh_labels.first() {
        centres.push((f, None));
    }
    let values: Vec<(i64, Vec<PointLabel>)> = groups.into_iter().collect();
    let mut out = Vec::new();
    for (q, q_value) in centres {
        let fresh_left = fresh_labels.len() - usize::from(q_value.is_none());
        let fresh_pool: Vec<PointLabel> =
            fresh_labels.iter().copied().filter(|&p| p != q).collect();
        // Available labels per multiplicity value, excluding the centre.
        let pools: Vec<Vec<PointLabel>> = values
            .iter()
            .map(|(_, ps)| ps.iter().copied().filter(|&p| p != q).collect())
            .collect();
        let mut counts = vec![0usize; pools.len()];
        loop {
            for f in 0..=fresh_left {
                let total: usize = counts.iter().sum::<usize>() + f;
                if total >= 2 && total % 2 == 0 {
                    let mut delta: BTreeSet<PointLabel> = BTreeSet::new();
                    for (pool, &k) in pools.iter().zip(&counts) {
                        delta.extend(pool.iter().take(k));
                    }
                    delta.extend(fresh_pool.iter().take(f));
                    if let Ok(img) = class.apply_iota(q, &delta) {
                        out.push((img.degree(), img.sorted_mults()));
                    }
                }
            }
            // Odometer over the per-value counts.
            let mut i = 0;
            while i < counts.len() && counts[i] == pools[i].len() {
                counts[i] = 0;
                i += 1;
            }
            if i == counts.len() {
                break;
            }
            counts[i] += 1;
        }
    }
    out
}

/// Fewest pieces cutting the letter string of `word` into segments of the
/// forms `R^k`, `L^k`, `L R^k` and `R L^k`.
pub fn segment_min_cut(word: &LrWord) -> u64 {
    // Letters left to right; `true` is `R`. Block i (0-based) is R when i is even.
    let letters: Vec<bool> = word
        .exps()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, &s)| std::iter::repeat_n(i % 2 == 0, s as usize))
        .collect();
    let valid = |seg: &[bool]| {
        let (first, rest) = (seg[0], &seg[1..]);
        rest.iter().all(|&x| x == first) || (!rest.is_empty() && rest.iter().all(|&x| x != first))
    };
    let n = letters.len();
    let mut best = vec![u64::MAX; n + 1];
    best[0] = 0;
    for i in 1..=n {
        for j in 0..i {
            if best[j] != u64::MAX && valid(&letters[j..i]) {
                best[i] = best[i].min(best[j] + 1);
            }
        }
    }
    best[n]
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn types_up_to(max_degree: i64) -> Result<Vec<HomaloidalType>> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend(enumerate_types(d)?);
    }
    Ok(out)
}

/// Compares the degree of every greedy predecessor with [`brute_predecessor`].
pub fn verify_predecessors(max_degree: i64) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for t in types_up_to(max_degree)?.iter().filter(|t| !t.is_identity()) {
        let fast = t.predecessor()?.degree();
        let brute = brute_predecessor(t)?.min_degree;
        report.checked += 1;
        if fast != brute {
            report.failures.push(format!(
                "{t}: predecessor degree {fast}, brute force {brute}"
            ));
        }
    }
    Ok(report)
}

/// Compares every length with [`bounded_bfs_length`] under a generous budget.
///
/// A search result shorter than the computed length is a failure, as is a
/// longer one. An inconclusive search is also reported.
pub fn verify_lengths(max_degree: i64, max_fresh_points: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for t in types_up_to(max_degree)? {
        let len = t.length()?;
        let budget = SearchBudget {
            max_degree: 2 * t.degree(),
            max_depth: 8,
            max_fresh_points,
        };
        report.checked += 1;
        match bounded_bfs_length(&t, budget) {
            BfsLength::Found(n) if n == len => {}
            BfsLength::Found(n) => report
                .failures
                .push(format!("{t}: length {len}, search found {n}")),
            BfsLength::Inconclusive => report.failures.push(format!("{t}: search inconclusive")),
        }
    }
    Ok(report)
}

/// Calls `f` on every word whose exponents sum to at most `max_sum`.
pub fn for_each_word(max_sum: u64, mut f: impl FnMut(&LrWord)) {
    fn rec(prefix: &mut Vec<u64>, left: u64, f: &mut dyn FnMut(&LrWord)) {
        f(&LrWord::new(prefix.clone()).expect("positive exponents"));
        for s in 1..=left {
            prefix.push(s);
            rec(prefix, left - s, f);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), max_sum, &mut f);
}

/// Compares [`ell`] with [`segment_min_cut`] on every word with exponent sum at most `max_sum`.
pub fn verify_words(max_sum: u64) -> VerifyReport {
    let mut report = VerifyReport::default();
    for_each_word(max_sum, |w| {
        report.checked += 1;
        let (fast, cut) = (ell(w), segment_min_cut(w));
        if fast != cut {
            report
                .failures
                .push(format!("{w}: ell {fast}, segmentation {cut}"));
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> HomaloidalType {
        HomaloidalType::parse(text).unwrap()
    }

    fn w(e: &[u64]) -> LrWord {
        LrWord::new(e.to_vec()).unwrap()
    }

    #[test]
    fn brute_predecessor_examples() {
        assert_eq!(
            brute_predecessor(&t("(4; 2^3, 1^3)")).unwrap().min_degree,
            2
        );
        assert_eq!(brute_predecessor(&t("(2; 1^3)")).unwrap().min_degree, 1);
        assert_eq!(
            brute_predecessor(&t("(5; 3, 2^3, 1^3)"))
                .unwrap()
                .min_degree,
            2
        );
        assert_eq!(brute_predecessor(&t("(1)")), Err(Error::DegreeOne));
    }

    #[test]
    fn brute_predecessor_centres_at_heaviest_points() {
        let b = brute_predecessor(&t("(4; 2^3, 1^3)")).unwrap();
        assert!(b.moves.iter().all(|(q, _)| q.0 < 3));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(
            bounded_bfs_length(&t("(4; 2^3, 1^3)"), SearchBudget::new(6, 4)),
            BfsLength::Found(2)
        );
        assert_eq!(
            bounded_bfs_length(&t("(1)"), SearchBudget::new(1, 0)),
            BfsLength::Found(0)
        );
        assert_eq!(
            bounded_bfs_length(&t("(7; 3^4, 2^3)"), SearchBudget::new(9, 5)),
            BfsLength::Found(3)
        );
        assert_eq!(
            bounded_bfs_length(&t("(7; 3^4, 2^3)"), SearchBudget::new(9, 2)),
            BfsLength::Inconclusive
        );
    }

    #[test]
    fn bfs_with_fresh_points() {
        let budget = SearchBudget {
            max_degree: 10,
            max_depth: 4,
            max_fresh_points: 1,
        };
        assert_eq!(
            bounded_bfs_length(&t("(5; 2^6)"), budget),
            BfsLength::Found(2)
        );
    }

    #[test]
    fn segmentation_examples() {
        assert_eq!(segment_min_cut(&w(&[5, 1])), 1);
        assert_eq!(segment_min_cut(&w(&[])), 0);
        assert_eq!(segment_min_cut(&w(&[3, 5, 7, 1])), 3);
    }

    #[test]
    fn word_sweep_counts_compositions() {
        let mut n = 0;
        for_each_word(5, |_| n += 1);
        // Compositions of 0..=5: 1 + 1 + 2 + 4 + 8 + 16.
        assert_eq!(n, 32);
    }
}
