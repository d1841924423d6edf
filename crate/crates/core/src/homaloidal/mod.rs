//! Homaloidal types, their greedy predecessors and lengths.
//!
//! A homaloidal type `(d; m0, ..., m_r)` records the degree and base point
//! multiplicities of a plane Cremona map. Each proper type other than `(1)`
//! has a predecessor of strictly smaller degree, obtained by a single de
//! Jonquieres involution, and the length of a type is the number of such steps
//! needed to reach `(1)`.

mod enumerate;
mod hudson;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{add, mul, sub, Error, Result};
use crate::lattice::{noether_holds, LatticeClass, PointLabel};
use crate::notation::{write_class, RawClass};

pub use enumerate::{enumerate_types, label_types, length_table, TableRow};
pub use hudson::{hudson_test, HudsonOutcome};

/// A validated proper homaloidal type.
///
/// Multiplicities are positive and sorted non-increasingly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomaloidalType {
    degree: i64,
    mults: Vec<i64>,
}

impl HomaloidalType {
    /// Validates a raw class: positive entries, Noether equalities, Hudson's test.
    pub fn new(raw: &RawClass) -> Result<Self> {
        let raw = RawClass::new(raw.degree, raw.mults.iter().copied());
        if raw.degree < 1 {
            return Err(Error::NonPositiveDegree);
        }
        if raw.mults.iter().any(|&m| m < 0) {
            return Err(Error::NonPositiveMultiplicity);
        }
        if !noether_holds(raw.degree, raw.mults.iter().copied()) {
            let sum = raw
                .mults
                .iter()
                .try_fold(0i64, |a, &m| a.checked_add(m))
                .unwrap_or(i64::MAX);
            let sum_sq = raw
                .mults
                .iter()
                .try_fold(0i64, |a, &m| a.checked_add(m.checked_mul(m)?))
                .unwrap_or(i64::MAX);
            return Err(Error::Noether {
                degree: raw.degree,
                sum,
                sum_sq,
            });
        }
        if !hudson_test(&raw)?.proper {
            return Err(Error::NotProper);
        }
        Ok(HomaloidalType {
            degree: raw.degree,
            mults: raw.mults,
        })
    }

    /// Parses and validates text such as `(5; 3, 2^3, 1^3)`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(&crate::notation::parse_class(text)?)
    }

    /// Builds a type from parts already known to be proper; used for Weyl images.
    pub(crate) fn from_proper(degree: i64, mults: impl IntoIterator<Item = i64>) -> Self {
        let raw = RawClass::new(degree, mults);
        debug_assert!(raw.mults.iter().all(|&m| m > 0));
        HomaloidalType {
            degree: raw.degree,
            mults: raw.mults,
        }
    }

    /// The type `(1)` of a projective transformation.
    pub fn identity() -> Self {
        HomaloidalType {
            degree: 1,
            mults: Vec::new(),
        }
    }

    /// The de Jonquieres type `(d; d-1, 1^(2d-2))`.
    pub fn jonquieres(degree: i64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::NonPositiveDegree);
        }
        if degree == 1 {
            return Ok(Self::identity());
        }
        let ones = usize::try_from(2 * (degree - 1)).map_err(|_| Error::Overflow)?;
        let mut mults = vec![degree - 1];
        mults.extend(std::iter::repeat_n(1, ones));
        Ok(HomaloidalType { degree, mults })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Multiplicities, sorted non-increasingly.
    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn to_raw(&self) -> RawClass {
        RawClass {
            degree: self.degree,
            mults: self.mults.clone(),
        }
    }

    /// The class with base points labelled `0, 1, ...` in multiplicity order.
    pub fn to_lattice_class(&self) -> LatticeClass {
        let pairs = self
            .mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (PointLabel(i as u32), m));
        LatticeClass::new(self.degree, pairs).expect("labels are distinct")
    }

    /// Reads the type of a lattice class, validating it.
    pub fn from_lattice_class(class: &LatticeClass) -> Result<Self> {
        Self::new(&RawClass::new(class.degree(), class.iter().map(|(_, m)| m)))
    }

    pub fn is_identity(&self) -> bool {
        self.degree == 1
    }

    /// Whether this is `(1)` or a de Jonquieres type `(d; d-1, 1^(2d-2))`.
    pub fn is_jonquieres(&self) -> bool {
        self.degree == 1
            || (self.mults.first() == Some(&(self.degree - 1))
                && self.mults.len() as i64 == 2 * self.degree - 1
                && self.mults[1..].iter().all(|&m| m == 1))
    }

    /// Degree minus the largest multiplicity.
    pub fn comult(&self) -> i64 {
        self.degree - self.mults.first().copied().unwrap_or(0)
    }

    fn m(&self, i: usize) -> i64 {
        self.mults.get(i).copied().unwrap_or(0)
    }

    /// The admissible step indices `s`, in increasing order.
    ///
    /// `s` is admissible when `m0 + m(2s-1) + m(2s) >= d >= m0 + m(2s+1) + m(2s+2)`,
    /// with `m(i) = 0` past the last base point and `1 <= s <= r/2`.
    pub fn s_set(&self) -> Vec<usize> {
        let r = self.mults.len().saturating_sub(1);
        let (d, m0) = (self.degree, self.m(0));
        (1..=r / 2)
            .filter(|&s| {
                m0 + self.m(2 * s - 1) + self.m(2 * s) >= d
                    && d >= m0 + self.m(2 * s + 1) + self.m(2 * s + 2)
            })
            .collect()
    }

    /// The greedy predecessor, using the smallest admissible step index.
    pub fn predecessor(&self) -> Result<Self> {
        if self.is_identity() {
            return Err(Error::DegreeOne);
        }
        let s = *self.s_set().first().ok_or(Error::NoAdmissibleIndex)?;
        self.predecessor_with(s)
    }

    /// The predecessor for a given admissible step index `s`.
    ///
    /// This applies the involution centred at the largest multiplicity that
    /// exchanges the next `2s` points.
    pub fn predecessor_with(&self, s: usize) -> Result<Self> {
        if self.is_identity() {
            return Err(Error::DegreeOne);
        }
        if !self.s_set().contains(&s) {
            return Err(Error::InadmissibleIndex(s));
        }
        let (d, m0) = (self.degree, self.m(0));
        let mut eps = 0i64;
        for i in 1..=s {
            eps = add(
                eps,
                sub(add(add(m0, self.m(2 * i - 1))?, self.m(2 * i))?, d)?,
            )?;
        }
        let mut next = Vec::with_capacity(self.mults.len());
        next.push(sub(m0, eps)?);
        for i in 1..=2 * s {
            next.push(sub(sub(d, m0)?, self.m(i))?);
        }
        next.extend(self.mults.iter().skip(2 * s + 1).copied());
        Ok(Self::from_proper(sub(d, eps)?, next))
    }

    /// Predecessor by the involution centred at a point of largest multiplicity
    /// that exchanges the points `q` with `m_p + 2 m_q > d`, dropping one of
    /// least multiplicity when there is an odd number of them.
    pub fn castelnuovo_predecessor(&self) -> Result<Self> {
        if self.is_identity() {
            return Err(Error::DegreeOne);
        }
        let (d, m0) = (self.degree, self.m(0));
        let mut count = 0;
        for &mq in &self.mults[1..] {
            if add(m0, mul(2, mq)?)? > d {
                count += 1;
            } else {
                break;
            }
        }
        // Sorted order puts the least multiplicities of the set at the end.
        count -= count % 2;
        let delta: BTreeSet<PointLabel> = (1..=count as u32).map(PointLabel).collect();
        let image = self.to_lattice_class().apply_iota(PointLabel(0), &delta)?;
        Ok(Self::from_proper(
            image.degree(),
            image.iter().map(|(_, m)| m),
        ))
    }

    /// The chain of greedy predecessors from this type down to `(1)`, inclusive.
    pub fn chain(&self) -> Result<Vec<Self>> {
        let mut out = vec![self.clone()];
        while !out.last().expect("nonempty").is_identity() {
            let next = out.last().expect("nonempty").predecessor()?;
            out.push(next);
        }
        Ok(out)
    }

    /// Number of predecessor steps needed to reach `(1)`.
    pub fn length(&self) -> Result<u32> {
        let mut cur = self.clone();
        let mut n = 0u32;
        while !cur.is_identity() {
            cur = cur.predecessor()?;
            n += 1;
        }
        Ok(n)
    }

    /// Number of Castelnuovo predecessor steps needed to reach `(1)`.
    pub fn castelnuovo_length(&self) -> Result<u32> {
        let mut cur = self.clone();
        let mut n = 0u32;
        while !cur.is_identity() {
            cur = cur.castelnuovo_predecessor()?;
            n += 1;
        }
        Ok(n)
    }

    /// Distance from the identity in the Wright complex, twice the length.
    pub fn wright_distance(&self) -> Result<u64> {
        Ok(2 * u64::from(self.length()?))
    }
}

impl fmt::Display for HomaloidalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_class(f, self.degree, &self.mults)
    }
}

impl std::str::FromStr for HomaloidalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
