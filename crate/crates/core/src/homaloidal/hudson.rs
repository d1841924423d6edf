//! Hudson's test for properness of a homaloidal type.

use crate::error::{add, mul, sub, Result};
use crate::lattice::noether_holds;
use crate::notation::RawClass;

/// Outcome of Hudson's test together with every class visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HudsonOutcome {
    pub proper: bool,
    /// The input followed by each quadratic step, ending at the deciding class.
    pub trace: Vec<RawClass>,
}

/// Decides whether a class satisfying the Noether equalities is proper.
///
/// Repeatedly applies the quadratic reflection at the three largest
/// multiplicities. The class is proper when this reaches `(1)` and improper as
/// soon as the degree drops below one or a multiplicity turns negative. A class
/// violating the Noether equalities is rejected at once.
pub fn hudson_test(class: &RawClass) -> Result<HudsonOutcome> {
    let mut cur = RawClass::new(class.degree, class.mults.iter().copied());
    let mut trace = vec![cur.clone()];
    if !noether_holds(cur.degree, cur.mults.iter().copied()) {
        return Ok(HudsonOutcome {
            proper: false,
            trace,
        });
    }
    loop {
        if cur.degree == 1 && cur.mults.is_empty() {
            return Ok(HudsonOutcome {
                proper: true,
                trace,
            });
        }
        if cur.degree < 1 || cur.mults.iter().any(|&m| m < 0) {
            return Ok(HudsonOutcome {
                proper: false,
                trace,
            });
        }
        let next = sigma_top(&cur)?;
        // The Noether inequality makes the degree drop; stop if it does not.
        let stalled = next.degree >= cur.degree;
        trace.push(next.clone());
        if stalled {
            return Ok(HudsonOutcome {
                proper: false,
                trace,
            });
        }
        cur = next;
    }
}

/// The quadratic reflection at the three largest multiplicities of a sorted class.
fn sigma_top(c: &RawClass) -> Result<RawClass> {
    let m = |i: usize| c.mults.get(i).copied().unwrap_or(0);
    let (a, b, e) = (m(0), m(1), m(2));
    let d = c.degree;
    let degree = sub(sub(sub(mul(2, d)?, a)?, b)?, e)?;
    let top = [
        sub(d, add(b, e)?)?,
        sub(d, add(a, e)?)?,
        sub(d, add(a, b)?)?,
    ];
    let rest = c.mults.iter().skip(3).copied();
    Ok(RawClass::new(degree, top.into_iter().chain(rest)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_class;

    fn run(text: &str) -> HudsonOutcome {
        hudson_test(&parse_class(text).unwrap()).unwrap()
    }

    #[test]
    fn accepts_standard_types() {
        for t in [
            "(1)",
            "(2; 1^3)",
            "(4; 2^3, 1^3)",
            "(7; 3^4, 2^3)",
            "(17; 6^8)",
        ] {
            assert!(run(t).proper, "{t}");
        }
    }

    #[test]
    fn trace_of_a_proper_type_ends_at_the_line() {
        let out = run("(5; 2^6)");
        assert_eq!(out.trace.last().unwrap().to_string(), "(1)");
        assert_eq!(out.trace.first().unwrap().to_string(), "(5; 2^6)");
    }

    #[test]
    fn rejects_negative_degree() {
        let out = run("(-7; -2^12)");
        assert!(!out.proper);
        assert_eq!(out.trace.len(), 1);
    }

    #[test]
    fn rejects_negative_multiplicity() {
        let out = run("(3; -1, 1^7)");
        assert!(!out.proper);
        assert_eq!(out.trace.len(), 1);
    }

    #[test]
    fn rejects_after_one_step() {
        let out = run("(7; 4^2, 3, 1^7)");
        assert!(!out.proper);
        let shown: Vec<String> = out.trace.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["(7; 4^2, 3, 1^7)", "(3; 1^7, -1)"]);
    }

    #[test]
    fn rejects_noether_violations() {
        assert!(!run("(3; 1^3)").proper);
    }
}
