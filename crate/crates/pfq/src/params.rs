//! Parameter vectors of the generalized hypergeometric function, with an
//! optional split into a fixed block and a block that parameter shifts act on.

use crate::error::{Error, Result};
use rug::Rational;

/// Upper and lower parameter vectors, all exact rationals. An optional split
/// partitions `upper` into `(a1, a2)` and `lower` into `(b1, b2)`; shifts
/// apply to the `a2`/`b2` block only. Without a split the whole vectors are
/// treated as the shifted block.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperParams {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    /// `(p1, q1)`: lengths of the fixed prefix blocks.
    split: Option<(usize, usize)>,
}

impl HyperParams {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<Self> {
        validate_lower(&lower)?;
        Ok(Self { upper, lower, split: None })
    }

    /// Split form. `a2` must be nonempty.
    pub fn with_split(
        a1: Vec<Rational>,
        a2: Vec<Rational>,
        b1: Vec<Rational>,
        b2: Vec<Rational>,
    ) -> Result<Self> {
        if a2.is_empty() {
            return Err(Error::Dimension("the shifted upper block a2 must be nonempty".into()));
        }
        let split = (a1.len(), b1.len());
        let upper: Vec<Rational> = a1.into_iter().chain(a2).collect();
        let lower: Vec<Rational> = b1.into_iter().chain(b2).collect();
        validate_lower(&lower)?;
        Ok(Self { upper, lower, split: Some(split) })
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn is_split(&self) -> bool {
        self.split.is_some()
    }

    /// Fixed upper block (empty when unsplit).
    pub fn a1(&self) -> &[Rational] {
        let (p1, _) = self.split.unwrap_or((0, 0));
        &self.upper[..p1]
    }

    /// Shifted upper block (everything when unsplit).
    pub fn a2(&self) -> &[Rational] {
        let (p1, _) = self.split.unwrap_or((0, 0));
        &self.upper[p1..]
    }

    pub fn b1(&self) -> &[Rational] {
        let (_, q1) = self.split.unwrap_or((0, 0));
        &self.lower[..q1]
    }

    pub fn b2(&self) -> &[Rational] {
        let (_, q1) = self.split.unwrap_or((0, 0));
        &self.lower[q1..]
    }

    /// Every parameter shifted by `delta` (the k-fold derivative identity
    /// shifts all parameters at once).
    pub fn shift_all(&self, delta: &Rational) -> Result<Self> {
        let upper = self.upper.iter().map(|a| (a + delta).into()).collect();
        let lower: Vec<Rational> = self.lower.iter().map(|b| (b + delta).into()).collect();
        validate_lower(&lower)?;
        Ok(Self { upper, lower, split: self.split })
    }

    /// Only the shifted block moved by `mu`; the fixed block stays.
    pub fn shift_tail(&self, mu: &Rational) -> Result<Self> {
        let (p1, q1) = self.split.unwrap_or((0, 0));
        let upper = self
            .upper
            .iter()
            .enumerate()
            .map(|(i, a)| if i < p1 { a.clone() } else { (a + mu).into() })
            .collect();
        let lower: Vec<Rational> = self
            .lower
            .iter()
            .enumerate()
            .map(|(j, b)| if j < q1 { b.clone() } else { (b + mu).into() })
            .collect();
        validate_lower(&lower)?;
        Ok(Self { upper, lower, split: self.split })
    }

    /// Smallest entry across both vectors, if any.
    pub fn min_entry(&self) -> Option<&Rational> {
        self.upper.iter().chain(self.lower.iter()).min()
    }
}

fn validate_lower(lower: &[Rational]) -> Result<()> {
    for b in lower {
        if b.is_integer() && *b <= 0 {
            return Err(Error::Pole(format!("lower parameter {b} is a non-positive integer")));
        }
    }
    Ok(())
}

/// Parse a single rational from `"p/q"` or integer form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    t.parse::<Rational>()
        .map_err(|e| Error::Config(format!("bad rational {t:?}: {e}")))
}

/// Parse a comma-separated rational vector; empty or blank input is an empty
/// vector.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(parse_rational).collect()
}

/// Render a rational vector back to the `"p/q"` comma form.
pub fn format_rational_list(v: &[Rational]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rejects_nonpositive_integer_lower() {
        assert!(HyperParams::new(vec![], vec![r("0")]).is_err());
        assert!(HyperParams::new(vec![], vec![r("-3")]).is_err());
        assert!(HyperParams::new(vec![], vec![r("-1/2")]).is_ok());
    }

    #[test]
    fn split_requires_nonempty_a2() {
        assert!(HyperParams::with_split(vec![r("1")], vec![], vec![], vec![]).is_err());
        let p = HyperParams::with_split(vec![r("5")], vec![r("1")], vec![], vec![r("2")]).unwrap();
        assert_eq!(p.a1(), &[r("5")]);
        assert_eq!(p.a2(), &[r("1")]);
        assert_eq!(p.b1(), &[] as &[Rational]);
        assert_eq!(p.b2(), &[r("2")]);
    }

    #[test]
    fn shift_tail_moves_only_the_tail() {
        let p = HyperParams::with_split(vec![r("5")], vec![r("1")], vec![], vec![r("2")]).unwrap();
        let s = p.shift_tail(&r("1/2")).unwrap();
        assert_eq!(s.a1(), &[r("5")]);
        assert_eq!(s.a2(), &[r("3/2")]);
        assert_eq!(s.b2(), &[r("5/2")]);
    }

    #[test]
    fn shift_all_catches_new_poles() {
        let p = HyperParams::new(vec![r("1")], vec![r("-1/2")]).unwrap();
        assert!(p.shift_all(&r("1")).is_ok());
        let p = HyperParams::new(vec![r("1")], vec![r("-2")]);
        assert!(p.is_err());
    }

    #[test]
    fn parses_rationals_and_lists() {
        assert_eq!(r("3/2"), Rational::from((3, 2)));
        assert_eq!(r("-7"), Rational::from(-7));
        let v = parse_rational_list("1, 3/2 ,2").unwrap();
        assert_eq!(v.len(), 3);
        assert!(parse_rational_list("").unwrap().is_empty());
        assert!(parse_rational_list("1,,2").is_err());
        assert_eq!(format_rational_list(&v), "1,3/2,2");
    }
}
