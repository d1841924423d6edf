//! Conjugacy to ordered matrices, dynamical length, degrees.

use num_bigint::BigInt;
use num_rational::Ratio;

use super::{blocks, ell, IntMatrix2, LrWord};
use crate::error::{add, Error, Result};

/// Result of [`conjugate_to_ordered`]: `conjugator * M * conjugator^-1 = word.matrix()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedConjugate {
    pub word: LrWord,
    pub conjugator: IntMatrix2,
}

/// `P = [[0,1],[-1,0]]`, which sends an eigenvector slope `x` to `-1/x`.
const P: IntMatrix2 = IntMatrix2::new(0, 1, -1, 0);

/// `floor((p + e * sqrt(disc)) / q)` for a non-square `disc > 0`, `q != 0`, `e = +-1`.
fn floor_quadratic(p: i128, e: i128, disc: i128, q: i128) -> i128 {
    let (p, e, q) = if q < 0 { (-p, -e, -q) } else { (p, e, q) };
    let s = disc.isqrt();
    // sqrt(disc) lies strictly between s and s + 1.
    let lo = if e > 0 { p + s } else { p - s - 1 };
    lo.div_euclid(q)
}

/// Floors of `k * x`, `k` in `{1, 2}`, for both eigenvector slopes `x` of `m`.
///
/// Slopes `x` with `m (1, x)^T` proportional to `(1, x)^T` solve
/// `b x^2 + (a - d) x - c = 0`, whose discriminant is `trace^2 - 4`.
fn slope_floors(m: &IntMatrix2, k: i128) -> (i128, i128) {
    let (a, b, d) = (m.a as i128, m.b as i128, m.d as i128);
    let disc = (a + d) * (a + d) - 4;
    let (p, q) = (d - a, 2 * b / k);
    (
        floor_quadratic(p, -1, disc, q),
        floor_quadratic(p, 1, disc, q),
    )
}

struct Conjugation {
    m: IntMatrix2,
    conj: IntMatrix2,
}

impl Conjugation {
    /// Replaces `M` by `X M X^-1` and records `X`.
    fn by(&mut self, x: IntMatrix2) -> Result<()> {
        self.m = x.checked_mul(&self.m)?.checked_mul(&x.inverse()?)?;
        self.conj = x.checked_mul(&self.conj)?;
        Ok(())
    }

    fn shift(&mut self, k: i128) -> Result<()> {
        let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
        self.by(IntMatrix2::l_pow(k.checked_neg().ok_or(Error::Overflow)?))
    }
}

/// Conjugates `M` with determinant one and trace at least three to an ordered matrix.
///
/// The returned word has even length, with an `L` block on the left and an
/// `R` block on the right. The conjugator is checked by multiplication before returning.
pub fn conjugate_to_ordered(m: &IntMatrix2) -> Result<OrderedConjugate> {
    let det = m.det()?;
    if det != 1 {
        return Err(Error::Determinant(det, "1"));
    }
    let t = m.trace()?;
    if t < 3 {
        return Err(Error::SmallTrace(t));
    }
    let mut st = Conjugation {
        m: *m,
        conj: IntMatrix2::IDENTITY,
    };
    loop {
        // b and c are nonzero since the trace is not 2.
        if (st.m.b > 0) == (st.m.c > 0) {
            // Slopes of opposite signs: all entries share the sign of b.
            if st.m.b < 0 {
                st.by(P)?;
            }
            break;
        }
        let (f1, f2) = slope_floors(&st.m, 1);
        if f1 != f2 {
            st.shift(f1.max(f2))?;
            continue;
        }
        // Both slopes in (n, n + 1): move them into (0, 1), then into
        // (-1/2, 0) if neither is below 1/2, and invert.
        st.shift(f1)?;
        let (g1, g2) = slope_floors(&st.m, 2);
        if g1 >= 1 && g2 >= 1 {
            st.shift(1)?;
        }
        st.by(P)?;
    }
    let mut bl = blocks(&st.m)?;
    let leftmost = |bl: &[(bool, u64)]| -> Result<IntMatrix2> {
        let &(is_r, k) = bl.last().expect("trace above two");
        let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
        Ok(if is_r {
            IntMatrix2::r_pow(k)
        } else {
            IntMatrix2::l_pow(k)
        })
    };
    // Moving the leftmost block X to the right end is conjugation by X^-1.
    if bl.len() % 2 == 1 {
        let x = leftmost(&bl)?;
        st.by(x.inverse()?)?;
        let (_, k) = bl.pop().expect("nonempty");
        bl[0].1 += k;
    }
    if !bl[0].0 {
        let x = leftmost(&bl)?;
        st.by(x.inverse()?)?;
        let last = bl.pop().expect("nonempty");
        bl.insert(0, last);
    }
    let word = LrWord::new(bl.into_iter().map(|(_, k)| k).collect())?;
    let check = st.conj.checked_mul(m)?.checked_mul(&st.conj.inverse()?)?;
    assert_eq!(
        check,
        word.matrix()?,
        "conjugator must carry M to its ordered form"
    );
    Ok(OrderedConjugate {
        word,
        conjugator: st.conj,
    })
}

/// Dynamical length of the monomial map of `M`, as an exact rational.
pub fn dynamical_length(m: &IntMatrix2) -> Result<Ratio<i64>> {
    match m.det()? {
        -1 => Ok(dynamical_length(&m.checked_mul(m)?)? / 2),
        1 => {
            let t = m.trace()?;
            if t.abs() <= 2 {
                return Ok(Ratio::from_integer(0));
            }
            let n = if t > 0 { *m } else { m.checked_neg()? };
            let s = conjugate_to_ordered(&n)?.word.exps().to_vec();
            let value = match s.iter().position(|&x| x >= 2) {
                // (LR)^k
                None => s.len() as u64 / 2,
                Some(i) => {
                    let rotated: Vec<u64> = s[i..].iter().chain(&s[..i]).copied().collect();
                    ell(&LrWord::new(rotated)?)
                }
            };
            Ok(Ratio::from_integer(
                i64::try_from(value).map_err(|_| Error::Overflow)?,
            ))
        }
        det => Err(Error::Determinant(det, "+1 or -1")),
    }
}

/// Degree `max(a + b, c + d)` of the monomial map of a non-negative matrix of determinant one.
pub fn monomial_degree(m: &IntMatrix2) -> Result<i64> {
    if !m.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let det = m.det()?;
    if det != 1 {
        return Err(Error::Determinant(det, "1"));
    }
    Ok(add(m.a, m.b)?.max(add(m.c, m.d)?))
}

/// The two fixed `4x4` matrices governing degree growth of iterated compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMatrix {
    A,
    B,
}

impl DegreeMatrix {
    pub fn entries(self) -> [[i64; 4]; 4] {
        match self {
            DegreeMatrix::A => [[3, 2, 1, 1], [0, 0, 0, 0], [-1, -1, 0, 0], [0, 0, 0, 0]],
            DegreeMatrix::B => [[3, 1, 1, 2], [-1, 0, -1, -1], [-1, 0, 0, -1], [0, 0, 0, 0]],
        }
    }
}

/// Exact `n`-th power of a degree matrix.
pub fn degree_matrix_power(which: DegreeMatrix, n: u32) -> [[BigInt; 4]; 4] {
    let base = which.entries().map(|row| row.map(BigInt::from));
    let mut acc: [[BigInt; 4]; 4] =
        std::array::from_fn(|i| std::array::from_fn(|j| BigInt::from(u8::from(i == j))));
    for _ in 0..n {
        acc = std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| &acc[i][k] * &base[k][j]).sum())
        });
    }
    acc
}
