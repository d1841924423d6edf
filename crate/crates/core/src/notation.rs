//! Text notation for classes of the form `(d; m1^e1, m2^e2, ...)`.
//!
//! Whitespace is ignored, `^e` repeats a multiplicity `e` times, and the
//! class of a line is written `(1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{IntMatrix2, LrWord};

/// A degree with a multiset of multiplicities, not yet validated.
///
/// Multiplicities are kept sorted non-increasingly with zeros removed, so the
/// value does not depend on the order in which points were listed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawClass {
    pub degree: i64,
    pub mults: Vec<i64>,
}

impl RawClass {
    pub fn new(degree: i64, mults: impl IntoIterator<Item = i64>) -> Self {
        let mut mults: Vec<i64> = mults.into_iter().filter(|&m| m != 0).collect();
        mults.sort_unstable_by(|a, b| b.cmp(a));
        RawClass { degree, mults }
    }
}

impl fmt::Display for RawClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_class(f, self.degree, &self.mults)
    }
}

/// Parses `(d; m1^e1, ...)` into a sorted raw class.
pub fn parse_class(text: &str) -> Result<RawClass> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parentheses around {text:?}")))?;
    let (deg, rest) = match inner.split_once(';') {
        Some((d, r)) => (d, r),
        None => (inner, ""),
    };
    let degree = parse_int(deg)?;
    let mut mults = Vec::new();
    for item in rest.split(',').filter(|t| !t.is_empty()) {
        let (m, e) = match item.split_once('^') {
            Some((m, e)) => (parse_int(m)?, parse_int(e)?),
            None => (parse_int(item)?, 1),
        };
        if e < 1 {
            return Err(Error::Parse(format!(
                "exponent must be positive in {item:?}"
            )));
        }
        let e = usize::try_from(e)
            .map_err(|_| Error::Parse(format!("exponent too large in {item:?}")))?;
        if e > 1 << 20 {
            return Err(Error::Parse(format!("exponent too large in {item:?}")));
        }
        mults.extend(std::iter::repeat_n(m, e));
    }
    Ok(RawClass::new(degree, mults))
}

/// Parses a matrix written `[[a,b],[c,d]]`.
pub fn parse_matrix(text: &str) -> Result<IntMatrix2> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("expected [[a,b],[c,d]], got {text:?}"));
    let inner = s
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(bad)?;
    let (top, bottom) = inner.split_once("],[").ok_or_else(bad)?;
    let row = |r: &str| -> Result<(i64, i64)> {
        let (x, y) = r.split_once(',').ok_or_else(bad)?;
        Ok((parse_int(x)?, parse_int(y)?))
    };
    let ((a, b), (c, d)) = (row(top)?, row(bottom)?);
    Ok(IntMatrix2::new(a, b, c, d))
}

/// Parses comma-separated positive exponents such as `3,5,7,1`.
pub fn parse_word(text: &str) -> Result<LrWord> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(&s);
    let mut exps = Vec::new();
    for item in s.split(',').filter(|t| !t.is_empty()) {
        let v = item
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("invalid exponent {item:?}")))?;
        if v == 0 {
            return Err(Error::Parse("exponents must be positive".into()));
        }
        exps.push(v);
    }
    LrWord::new(exps)
}

/// Parses either a matrix or a word, returning the matrix.
pub fn parse_matrix_or_word(text: &str) -> Result<IntMatrix2> {
    if text.trim_start().starts_with('[') {
        parse_matrix(text)
    } else {
        parse_word(text)?.matrix()
    }
}

fn parse_int(t: &str) -> Result<i64> {
    t.parse::<i64>()
        .map_err(|_| Error::Parse(format!("invalid integer {t:?}")))
}

/// Writes `(d; m1^e1, ...)` with runs of equal values grouped.
pub(crate) fn write_class(f: &mut impl fmt::Write, degree: i64, mults: &[i64]) -> fmt::Result {
    write!(f, "({degree}")?;
    let mut sep = "; ";
    let mut i = 0;
    while i < mults.len() {
        let m = mults[i];
        let run = mults[i..].iter().take_while(|&&x| x == m).count();
        if run == 1 {
            write!(f, "{sep}{m}")?;
        } else {
            write!(f, "{sep}{m}^{run}")?;
        }
        sep = ", ";
        i += run;
    }
    write!(f, ")")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grouped_and_spaced_input() {
        let c = parse_class(" ( 5 ; 3 , 2^3,1 ^ 3 ) ").unwrap();
        assert_eq!(c, RawClass::new(5, [3, 2, 2, 2, 1, 1, 1]));
        assert_eq!(c.to_string(), "(5; 3, 2^3, 1^3)");
    }

    #[test]
    fn parses_identity_and_negatives() {
        assert_eq!(parse_class("(1)").unwrap(), RawClass::new(1, []));
        assert_eq!(parse_class("(1)").unwrap().to_string(), "(1)");
        let c = parse_class("(-7; -2^12)").unwrap();
        assert_eq!(c.mults.len(), 12);
        assert_eq!(c.to_string(), "(-7; -2^12)");
    }

    #[test]
    fn sorts_and_drops_zeros() {
        assert_eq!(
            parse_class("(3; 0, 1, 2, 0, 1^3)").unwrap().to_string(),
            "(3; 2, 1^4)"
        );
    }

    #[test]
    fn parses_matrices_and_words() {
        assert_eq!(
            parse_matrix("[[36, 115], [41, 131]]").unwrap(),
            IntMatrix2::new(36, 115, 41, 131)
        );
        assert_eq!(
            parse_matrix("[[0,-1],[1,0]]").unwrap(),
            IntMatrix2::new(0, -1, 1, 0)
        );
        assert_eq!(parse_word("3,5,7,1").unwrap().exps(), &[3, 5, 7, 1]);
        assert_eq!(parse_word("(5, 1)").unwrap().exps(), &[5, 1]);
        assert_eq!(
            parse_matrix_or_word("5,1").unwrap(),
            IntMatrix2::new(1, 5, 1, 6)
        );
        for bad in ["[[1,2],[3]]", "[1,2,3,4]", "[[a,b],[c,d]]"] {
            assert!(matches!(parse_matrix(bad), Err(Error::Parse(_))), "{bad}");
        }
        assert!(matches!(parse_word("1,0"), Err(Error::Parse(_))));
        assert!(matches!(parse_word("1,-2"), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "5; 3",
            "(x; 1)",
            "(5; 2^0)",
            "(5; 2^)",
            "(5; ^2)",
            "(5; 1,,)x",
        ] {
            assert!(matches!(parse_class(bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
