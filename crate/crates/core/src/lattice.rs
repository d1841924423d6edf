//! The Picard-Manin lattice of the plane.
//!
//! A class is written `d*e0 - sum m_q * e_q`, where `e0` is the pullback of a
//! line and `e_q` the exceptional class over the point `q`. The intersection
//! form has signature `(1, n)`: `e0.e0 = 1`, `e_q.e_q = -1`, and distinct
//! generators are orthogonal. The canonical class is `-3*e0 + sum e_q`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{add, mul, sub, Error, Result};

/// Opaque label of a point that may be blown up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointLabel(pub u32);

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

/// A lattice element with finitely many nonzero multiplicities.
///
/// Only nonzero multiplicities are stored, so two classes are equal exactly
/// when they have the same degree and the same nonzero multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticeClass {
    degree: i64,
    mults: BTreeMap<PointLabel, i64>,
}

impl LatticeClass {
    /// Builds `degree*e0 - sum m_q * e_q`. Zero multiplicities are dropped.
    pub fn new(degree: i64, mults: impl IntoIterator<Item = (PointLabel, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, m) in mults {
            if map.insert(label, m).is_some() {
                return Err(Error::DuplicateLabel(label.0));
            }
        }
        map.retain(|_, m| *m != 0);
        Ok(LatticeClass { degree, mults: map })
    }

    /// The class `e0` of a line.
    pub fn line() -> Self {
        LatticeClass {
            degree: 1,
            mults: BTreeMap::new(),
        }
    }

    /// The exceptional class `e_q`, whose multiplicity at `q` is `-1`.
    pub fn exceptional(q: PointLabel) -> Self {
        LatticeClass {
            degree: 0,
            mults: BTreeMap::from([(q, -1)]),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Multiplicity at `q`, zero when `q` is not a base point.
    pub fn mult(&self, q: PointLabel) -> i64 {
        self.mults.get(&q).copied().unwrap_or(0)
    }

    /// Nonzero multiplicities in label order.
    pub fn iter(&self) -> impl Iterator<Item = (PointLabel, i64)> + '_ {
        self.mults.iter().map(|(&q, &m)| (q, m))
    }

    /// Labels with nonzero multiplicity.
    pub fn base_points(&self) -> BTreeSet<PointLabel> {
        self.mults.keys().copied().collect()
    }

    /// Multiplicities sorted non-increasingly.
    pub fn sorted_mults(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.mults.values().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Sum of two classes.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.degree = add(self.degree, other.degree)?;
        for (q, m) in other.iter() {
            let v = add(out.mult(q), m)?;
            out.set(q, v);
        }
        Ok(out)
    }

    /// Integer multiple of a class.
    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let mut out = LatticeClass {
            degree: mul(self.degree, k)?,
            mults: BTreeMap::new(),
        };
        for (q, m) in self.iter() {
            out.set(q, mul(m, k)?);
        }
        Ok(out)
    }

    /// The intersection form `d_a d_b - sum m_q(a) m_q(b)`.
    pub fn intersect(&self, other: &Self) -> Result<i64> {
        let mut acc = mul(self.degree, other.degree)?;
        for (q, m) in self.iter() {
            acc = sub(acc, mul(m, other.mult(q))?)?;
        }
        Ok(acc)
    }

    /// Intersection with the canonical class, `-3d + sum m_q`.
    pub fn canonical(&self) -> Result<i64> {
        let mut acc = mul(-3, self.degree)?;
        for (_, m) in self.iter() {
            acc = add(acc, m)?;
        }
        Ok(acc)
    }

    /// `d` minus the largest multiplicity, where an empty support counts as zero.
    pub fn comult(&self) -> Result<i64> {
        let top = self.mults.values().copied().max().unwrap_or(0).max(0);
        sub(self.degree, top)
    }

    /// Whether `sum m = 3(d - 1)` and `sum m^2 = d^2 - 1`.
    pub fn satisfies_noether(&self) -> bool {
        noether_holds(self.degree, self.mults.values().copied())
    }

    /// The quadratic reflection at three distinct points.
    pub fn apply_sigma(&self, p1: PointLabel, p2: PointLabel, p3: PointLabel) -> Result<Self> {
        if p1 == p2 || p1 == p3 || p2 == p3 {
            return Err(Error::SigmaPoints);
        }
        let (m1, m2, m3) = (self.mult(p1), self.mult(p2), self.mult(p3));
        let d = self.degree;
        let mut out = self.clone();
        out.degree = sub(sub(sub(mul(2, d)?, m1)?, m2)?, m3)?;
        out.set(p1, sub(sub(d, m2)?, m3)?);
        out.set(p2, sub(sub(d, m1)?, m3)?);
        out.set(p3, sub(sub(d, m1)?, m2)?);
        Ok(out)
    }

    /// The de Jonquieres involution centred at `q` exchanging the `2n` points of `delta`.
    ///
    /// An empty `delta` gives the identity.
    pub fn apply_iota(&self, q: PointLabel, delta: &BTreeSet<PointLabel>) -> Result<Self> {
        if delta.contains(&q) {
            return Err(Error::CenterInSet(q.0));
        }
        if delta.len() % 2 != 0 {
            return Err(Error::OddSet(delta.len()));
        }
        let n = i64::try_from(delta.len() / 2).map_err(|_| Error::Overflow)?;
        let d = self.degree;
        let mq = self.mult(q);
        let mut sum = 0i64;
        for &r in delta {
            sum = add(sum, self.mult(r))?;
        }
        let mut out = self.clone();
        out.degree = sub(sub(mul(d, add(n, 1)?)?, mul(n, mq)?)?, sum)?;
        let new_q = sub(sub(mul(d, n)?, mul(sub(n, 1)?, mq)?)?, sum)?;
        for &r in delta {
            out.set(r, sub(sub(d, mq)?, self.mult(r))?);
        }
        out.set(q, new_q);
        Ok(out)
    }

    fn set(&mut self, q: PointLabel, m: i64) {
        if m == 0 {
            self.mults.remove(&q);
        } else {
            self.mults.insert(q, m);
        }
    }
}

/// Checks both Noether equalities with overflow treated as failure.
pub(crate) fn noether_holds(degree: i64, mults: impl IntoIterator<Item = i64>) -> bool {
    let check = || -> Result<bool> {
        let (mut s, mut s2) = (0i64, 0i64);
        for m in mults {
            s = add(s, m)?;
            s2 = add(s2, mul(m, m)?)?;
        }
        Ok(s == mul(3, sub(degree, 1)?)? && s2 == sub(mul(degree, degree)?, 1)?)
    };
    check().unwrap_or(false)
}
