//! Monomial maps of the plane and the words in `L` and `R` describing them.
//!
//! The matrix `[[a,b],[c,d]]` stands for the map `[x^a y^b : x^c y^d : 1]`.
//! Inside `SL2(Z)` with non-negative entries every element is a unique word in
//! `L = [[1,0],[1,1]]` and `R = [[1,1],[0,1]]`, and the length of such a
//! word in the Cremona group is computed by [`ell`].

mod dynamics;

use std::fmt;

use crate::error::{add, mul, Error, Result};

pub use dynamics::{
    conjugate_to_ordered, degree_matrix_power, dynamical_length, monomial_degree, DegreeMatrix,
    OrderedConjugate,
};

/// An integer `2x2` matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub const IDENTITY: Self = Self::new(1, 0, 0, 1);
    pub const L: Self = Self::new(1, 0, 1, 1);
    pub const R: Self = Self::new(1, 1, 0, 1);
    pub const TAU: Self = Self::new(0, 1, 1, 0);
    pub const NU: Self = Self::new(1, -1, 0, -1);

    /// `L^k` for any integer `k`.
    pub fn l_pow(k: i64) -> Self {
        Self::new(1, 0, k, 1)
    }

    /// `R^k` for any integer `k`.
    pub fn r_pow(k: i64) -> Self {
        Self::new(1, k, 0, 1)
    }

    /// Determinant, computed without intermediate overflow.
    pub fn det(&self) -> Result<i64> {
        let wide =
            i128::from(self.a) * i128::from(self.d) - i128::from(self.b) * i128::from(self.c);
        i64::try_from(wide).map_err(|_| Error::Overflow)
    }

    pub fn trace(&self) -> Result<i64> {
        add(self.a, self.d)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(
            add(mul(self.a, o.a)?, mul(self.b, o.c)?)?,
            add(mul(self.a, o.b)?, mul(self.b, o.d)?)?,
            add(mul(self.c, o.a)?, mul(self.d, o.c)?)?,
            add(mul(self.c, o.b)?, mul(self.d, o.d)?)?,
        ))
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let n = |x: i64| x.checked_neg().ok_or(Error::Overflow);
        Ok(Self::new(n(self.a)?, n(self.b)?, n(self.c)?, n(self.d)?))
    }

    /// Inverse of a matrix with determinant `+1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det()?;
        if det.abs() != 1 {
            return Err(Error::Determinant(det, "+1 or -1"));
        }
        let n = |x: i64| x.checked_neg().ok_or(Error::Overflow);
        Ok(Self::new(
            mul(det, self.d)?,
            mul(det, n(self.b)?)?,
            mul(det, n(self.c)?)?,
            mul(det, self.a)?,
        ))
    }

    /// Conjugation by `tau`, which exchanges `L` and `R`.
    pub fn tau_flip(&self) -> Self {
        Self::new(self.d, self.c, self.b, self.a)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a >= 0 && self.b >= 0 && self.c >= 0 && self.d >= 0
    }

    /// Rightmost letter is `R`: `a <= b` and `c <= d`.
    fn in_s_r(&self) -> bool {
        self.a <= self.b && self.c <= self.d
    }

    /// Rightmost letter is `L`: `a >= b` and `c >= d`.
    fn in_s_l(&self) -> bool {
        self.a >= self.b && self.c >= self.d
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// A word `... L^s2 R^s1` given by its positive exponents, rightmost block first.
///
/// Odd positions are `R` blocks and even positions are `L` blocks. The empty
/// word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LrWord(Vec<u64>);

impl LrWord {
    pub fn new(exps: Vec<u64>) -> Result<Self> {
        if exps.contains(&0) {
            return Err(Error::ZeroExponent);
        }
        Ok(LrWord(exps))
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of letters.
    pub fn letter_count(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The matrix `M(s1, ..., sn) = X_n ... X_1`.
    pub fn matrix(&self) -> Result<IntMatrix2> {
        let mut m = IntMatrix2::IDENTITY;
        for (i, &s) in self.0.iter().enumerate() {
            let s = i64::try_from(s).map_err(|_| Error::Overflow)?;
            let x = if i % 2 == 0 {
                IntMatrix2::r_pow(s)
            } else {
                IntMatrix2::l_pow(s)
            };
            m = x.checked_mul(&m)?;
        }
        Ok(m)
    }
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The six matrices of the group generated by `tau` and `nu`, in a fixed order.
pub fn sym3() -> [IntMatrix2; 6] {
    let mut out = vec![IntMatrix2::IDENTITY];
    let mut i = 0;
    while i < out.len() {
        for g in [IntMatrix2::TAU, IntMatrix2::NU] {
            let p = out[i].checked_mul(&g).expect("small entries");
            if !out.contains(&p) {
                out.push(p);
            }
        }
        i += 1;
    }
    out.try_into().expect("the group has six elements")
}

/// A factorization `M = W` or `M = tau W tau` with `W` a word ending in `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub word: LrWord,
    /// Whether `M` was conjugated by `tau` before factoring.
    pub flipped: bool,
}

/// Block decomposition of a non-negative matrix of determinant one, rightmost
/// block first. `true` marks an `R` block.
pub(crate) fn blocks(m: &IntMatrix2) -> Result<Vec<(bool, u64)>> {
    if !m.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let det = m.det()?;
    if det != 1 {
        return Err(Error::Determinant(det, "1"));
    }
    let mut m = *m;
    let mut out = Vec::new();
    while m != IntMatrix2::IDENTITY {
        // With determinant one and non-negative entries, a >= 1 and d >= 1.
        if m.in_s_r() {
            let k = if m.c == 0 {
                m.b / m.a
            } else {
                (m.b / m.a).min(m.d / m.c)
            };
            m = m.checked_mul(&IntMatrix2::r_pow(-k))?;
            out.push((true, k as u64));
        } else if m.in_s_l() {
            let k = if m.b == 0 {
                m.c / m.d
            } else {
                (m.a / m.b).min(m.c / m.d)
            };
            m = m.checked_mul(&IntMatrix2::l_pow(-k))?;
            out.push((false, k as u64));
        } else {
            unreachable!("non-negative unimodular matrices lie in S_R or S_L");
        }
    }
    Ok(out)
}

/// Factors a non-negative matrix of determinant one into `L` and `R` blocks.
///
/// When the rightmost letter is `L` the matrix is conjugated by `tau` first,
/// so that the stored word always ends in `R`.
pub fn factor_word(m: &IntMatrix2) -> Result<Factorization> {
    let bl = blocks(m)?;
    let flipped = matches!(bl.first(), Some((false, _)));
    let exps = bl.into_iter().map(|(_, k)| k).collect();
    Ok(Factorization {
        word: LrWord(exps),
        flipped,
    })
}

/// The length in the Cremona group of `M(s1, ..., sn)`.
pub fn ell(word: &LrWord) -> u64 {
    // The recursion only reads s2 onwards, so dropping s1 and lowering s2 by
    // one never needs the lowered value.
    let s = word.exps();
    let mut start = 0;
    let mut acc = 0;
    loop {
        match s.len() - start {
            0 => return acc,
            1 => return acc + 1,
            2 => return acc + if s[start + 1] == 1 { 1 } else { 2 },
            _ => {
                start += if s[start + 1] >= 2 { 1 } else { 2 };
                acc += 1;
            }
        }
    }
}

/// Certificate that `sign * left * M * right` equals the matrix of `word`,
/// with `left` and `right` in the group returned by [`sym3`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationWitness {
    pub sign: i64,
    pub left: IntMatrix2,
    pub right: IntMatrix2,
    pub word: LrWord,
}

impl NormalizationWitness {
    /// Checks the identity by multiplication.
    pub fn verify(&self, m: &IntMatrix2) -> Result<bool> {
        let mut p = self.left.checked_mul(m)?.checked_mul(&self.right)?;
        if self.sign < 0 {
            p = p.checked_neg()?;
        }
        Ok(p == self.word.matrix()?)
    }
}

/// Length of a monomial map together with the normalization used to compute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl2Length {
    pub length: u64,
    pub witness: NormalizationWitness,
}

/// Length in the Cremona group of the monomial map of `M`.
///
/// Elements of the group generated by `tau` and `nu` are linear and have
/// length zero. Their negatives are quadratic maps and have length one. Any
/// other `M` is brought to a non-negative matrix of determinant one by
/// multiplying with elements of that group on both sides, possibly with a sign.
pub fn gl2_length(m: &IntMatrix2) -> Result<Gl2Length> {
    let det = m.det()?;
    if det.abs() != 1 {
        return Err(Error::Determinant(det, "+1 or -1"));
    }
    let group = sym3();
    let empty = LrWord::default();
    if group.contains(m) {
        let witness = NormalizationWitness {
            sign: 1,
            left: m.inverse()?,
            right: IntMatrix2::IDENTITY,
            word: empty,
        };
        return Ok(Gl2Length { length: 0, witness });
    }
    let neg = m.checked_neg()?;
    if group.contains(&neg) {
        let witness = NormalizationWitness {
            sign: -1,
            left: neg.inverse()?,
            right: IntMatrix2::IDENTITY,
            word: empty,
        };
        return Ok(Gl2Length { length: 1, witness });
    }
    for sign in [1i64, -1] {
        let base = if sign > 0 { *m } else { neg };
        for left in group {
            for right in group {
                let cand = left.checked_mul(&base)?.checked_mul(&right)?;
                if cand == IntMatrix2::IDENTITY || !cand.is_nonnegative() || cand.det()? != 1 {
                    continue;
                }
                let f = factor_word(&cand)?;
                let (left, right) = if f.flipped {
                    (
                        IntMatrix2::TAU.checked_mul(&left)?,
                        right.checked_mul(&IntMatrix2::TAU)?,
                    )
                } else {
                    (left, right)
                };
                let length = ell(&f.word);
                let witness = NormalizationWitness {
                    sign,
                    left,
                    right,
                    word: f.word,
                };
                return Ok(Gl2Length { length, witness });
            }
        }
    }
    unreachable!("every unimodular matrix normalizes to a non-negative one")
}

/// Whether `0 <= a <= b <= d` and `0 <= a <= c <= d`.
pub fn is_ordered(m: &IntMatrix2) -> bool {
    0 <= m.a && m.a <= m.b && m.b <= m.d && m.a <= m.c && m.c <= m.d
}

/// Exponents `(s1, ..., sn)` of an ordered matrix of determinant one.
///
/// The length `n` is even, `d/c = [s1; s2, ..., sn]` and
/// `b/a = [s1; s2, ..., s(n-1)]`.
pub fn ordered_to_cf(m: &IntMatrix2) -> Result<LrWord> {
    let det = m.det()?;
    if det != 1 {
        return Err(Error::Determinant(det, "1"));
    }
    if !is_ordered(m) {
        return Err(Error::NotOrdered);
    }
    let f = factor_word(m)?;
    debug_assert!(!f.flipped && f.word.len() % 2 == 0);
    Ok(f.word)
}

/// The matrix `L^sn ... R^s1` of an even-length tuple of positive exponents.
pub fn cf_to_word(exps: &[u64]) -> Result<IntMatrix2> {
    if exps.is_empty() || exps.len() % 2 != 0 {
        return Err(Error::OddWord);
    }
    LrWord::new(exps.to_vec())?.matrix()
}
