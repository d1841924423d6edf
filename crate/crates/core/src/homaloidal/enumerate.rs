//! Enumeration of proper homaloidal types of a given degree and the length table.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{hudson_test, HomaloidalType};
use crate::error::{Error, Result};
use crate::notation::RawClass;

/// Largest degree accepted by the enumerator.
pub const MAX_ENUMERATION_DEGREE: i64 = 100;

/// Reachability of square sums: `get(c, s)` holds the values `sum x^2` over
/// multisets of parts `1..=c` with `sum x = s`.
struct SquareSums {
    words: usize,
    sum_max: usize,
    bits: Vec<u64>,
}

impl SquareSums {
    fn new(part_max: usize, sum_max: usize, square_max: usize) -> Self {
        let words = square_max / 64 + 1;
        let mut t = SquareSums {
            words,
            sum_max,
            bits: vec![0; (part_max + 1) * (sum_max + 1) * words],
        };
        t.row_mut(0, 0)[0] = 1;
        for c in 1..=part_max {
            for s in 0..=sum_max {
                let mut row = t.row(c - 1, s).to_vec();
                if s >= c {
                    let prev = t.row(c, s - c).to_vec();
                    shift_or(&mut row, &prev, c * c);
                }
                t.row_mut(c, s).copy_from_slice(&row);
            }
        }
        t
    }

    fn index(&self, c: usize, s: usize) -> usize {
        (c * (self.sum_max + 1) + s) * self.words
    }

    fn row(&self, c: usize, s: usize) -> &[u64] {
        let i = self.index(c, s);
        &self.bits[i..i + self.words]
    }

    fn row_mut(&mut self, c: usize, s: usize) -> &mut [u64] {
        let i = self.index(c, s);
        &mut self.bits[i..i + self.words]
    }

    fn contains(&self, c: usize, s: usize, q: usize) -> bool {
        q / 64 < self.words && self.row(c, s)[q / 64] >> (q % 64) & 1 == 1
    }
}

/// `dst |= src << shift`, truncated to the length of `dst`.
fn shift_or(dst: &mut [u64], src: &[u64], shift: usize) {
    let (w, b) = (shift / 64, shift % 64);
    for i in (w..dst.len()).rev() {
        let j = i - w;
        let mut v = src[j] << b;
        if b > 0 && j > 0 {
            v |= src[j - 1] >> (64 - b);
        }
        dst[i] |= v;
    }
}

/// All proper homaloidal types of degree `d`, in decreasing lexicographic order
/// of multiplicities. The de Jonquieres type comes first.
pub fn enumerate_types(d: i64) -> Result<Vec<HomaloidalType>> {
    if d < 1 {
        return Err(Error::NonPositiveDegree);
    }
    if d > MAX_ENUMERATION_DEGREE {
        return Err(Error::BudgetExceeded);
    }
    if d == 1 {
        return Ok(vec![HomaloidalType::identity()]);
    }
    let du = d as usize;
    let sum = 3 * (du - 1);
    let squares = du * du - 1;
    let table = SquareSums::new(du - 1, sum, squares);
    let groups: Vec<Vec<HomaloidalType>> = (1..du)
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|m0| {
            let mut found = Vec::new();
            if m0 <= sum && m0 * m0 <= squares {
                let mut prefix = vec![m0 as i64];
                let cap = m0.min(du - m0);
                search(
                    &table,
                    d,
                    cap,
                    sum - m0,
                    squares - m0 * m0,
                    &mut prefix,
                    &mut found,
                );
            }
            found
        })
        .collect();
    Ok(groups.into_iter().flatten().collect())
}

/// Depth-first search over non-increasing parts, pruned by the reachability table.
fn search(
    table: &SquareSums,
    d: i64,
    cap: usize,
    sum: usize,
    squares: usize,
    prefix: &mut Vec<i64>,
    out: &mut Vec<HomaloidalType>,
) {
    if sum == 0 {
        if squares == 0 {
            let raw = RawClass {
                degree: d,
                mults: prefix.clone(),
            };
            if hudson_test(&raw).map(|o| o.proper).unwrap_or(false) {
                out.push(HomaloidalType::from_proper(d, prefix.iter().copied()));
            }
        }
        return;
    }
    for m in (1..=cap.min(sum)).rev() {
        if m * m > squares || !table.contains(m, sum - m, squares - m * m) {
            continue;
        }
        prefix.push(m as i64);
        search(table, d, m, sum - m, squares - m * m, prefix, out);
        prefix.pop();
    }
}

/// Labels in the usual numbering: `d` for the de Jonquieres type and `d.i`
/// for the remaining types of degree `d` in enumeration order.
pub fn label_types(types: &[HomaloidalType]) -> Vec<String> {
    let mut next: HashMap<i64, usize> = HashMap::new();
    types
        .iter()
        .map(|t| {
            if t.is_jonquieres() {
                t.degree().to_string()
            } else {
                let i = next.entry(t.degree()).or_insert(0);
                *i += 1;
                format!("{}.{}", t.degree(), i)
            }
        })
        .collect()
}

/// One row of the length table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub homaloidal_type: HomaloidalType,
    pub length: u32,
    /// Label of the greedy predecessor, absent for `(1)`.
    pub predecessor: Option<String>,
    /// Label of the Castelnuovo predecessor, present only when it differs.
    pub castelnuovo: Option<String>,
}

/// Length table of every proper type with degree at most `max_degree`.
pub fn length_table(max_degree: i64) -> Result<Vec<TableRow>> {
    let mut types = Vec::new();
    for d in 1..=max_degree {
        types.extend(enumerate_types(d)?);
    }
    let labels = label_types(&types);
    let by_type: HashMap<&HomaloidalType, &str> = types
        .iter()
        .zip(labels.iter().map(String::as_str))
        .collect();
    let mut rows: Vec<TableRow> = Vec::with_capacity(types.len());
    let mut lengths: HashMap<&HomaloidalType, u32> = HashMap::new();
    for (t, label) in types.iter().zip(&labels) {
        let (length, predecessor, castelnuovo) = if t.is_identity() {
            (0, None, None)
        } else {
            let pr = t.predecessor()?;
            let cast = t.castelnuovo_predecessor()?;
            let name = |x: &HomaloidalType| {
                by_type
                    .get(x)
                    .map(|s| s.to_string())
                    .ok_or(Error::NotProper)
            };
            let length = lengths.get(&pr).copied().ok_or(Error::NotProper)? + 1;
            let cast_label = if cast == pr { None } else { Some(name(&cast)?) };
            (length, Some(name(&pr)?), cast_label)
        };
        lengths.insert(t, length);
        rows.push(TableRow {
            label: label.clone(),
            homaloidal_type: t.clone(),
            length,
            predecessor,
            castelnuovo,
        });
    }
    Ok(rows)
}
