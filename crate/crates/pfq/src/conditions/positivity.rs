//! The four checkable positivity cases for the fixed parameter block
//! `(a1, b1)`: they certify that `x -> pFq(a1; b1; x t)` stays nonnegative on
//! the range the integral representations need.

use super::muntz::{muntz_nonneg, MUNTZ_DEFAULT_GRID};
use crate::error::{Error, Result};
use crate::precision::PrecisionCtx;
use rug::{Float, Integer, Rational};

/// Default horizon for the term-by-term positivity check in case A.
pub const POSITIVITY_HORIZON: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem2Case {
    A,
    B,
    C,
    D,
}

impl std::str::FromStr for Theorem2Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "D" => Ok(Self::D),
            other => Err(Error::Config(format!("unknown case {other:?}"))),
        }
    }
}

impl std::fmt::Display for Theorem2Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// Whether the stated hypothesis set of the given case holds for `(a1, b1)`
/// at argument `x`, with the default positivity horizon.
pub fn theorem2_case(
    case: Theorem2Case,
    a1: &[Rational],
    b1: &[Rational],
    x: &Float,
    ctx: &PrecisionCtx,
) -> Result<bool> {
    theorem2_case_with_horizon(case, a1, b1, x, POSITIVITY_HORIZON, ctx)
}

pub fn theorem2_case_with_horizon(
    case: Theorem2Case,
    a1: &[Rational],
    b1: &[Rational],
    x: &Float,
    horizon: u32,
    ctx: &PrecisionCtx,
) -> Result<bool> {
    let p1 = a1.len();
    let q1 = b1.len();
    match case {
        Theorem2Case::A => {
            if p1 > q1 + 1 {
                return Err(Error::Dimension(format!("case A needs p1 <= q1 + 1, got {p1}/{q1}")));
            }
            let range_ok = if p1 == q1 + 1 {
                *x >= 0 && *x < 1
            } else {
                *x >= 0
            };
            if !range_ok {
                return Ok(false);
            }
            Ok(ratio_sequence_positive(a1, b1, horizon))
        }
        Theorem2Case::B => {
            if p1 != q1 + 1 || p1 < 1 {
                return Err(Error::Dimension(format!("case B needs p1 = q1 + 1 >= 1, got {p1}/{q1}")));
            }
            if !(*x < 1) {
                return Ok(false);
            }
            // drop one instance of the largest element
            let max = a1.iter().max().unwrap();
            let pos = a1.iter().position(|v| v == max).unwrap();
            let mut rest: Vec<Rational> = a1.to_vec();
            rest.remove(pos);
            if rest.iter().any(|v| *v <= 0) || b1.iter().any(|v| *v <= 0) {
                return Ok(false);
            }
            Ok(muntz_nonneg(&rest, b1, MUNTZ_DEFAULT_GRID, ctx)?.is_nonneg())
        }
        Theorem2Case::C => {
            if p1 != q1 {
                return Err(Error::Dimension(format!("case C needs p1 = q1, got {p1}/{q1}")));
            }
            if a1.iter().any(|v| *v <= 0) || b1.iter().any(|v| *v <= 0) {
                return Ok(false);
            }
            Ok(muntz_nonneg(a1, b1, MUNTZ_DEFAULT_GRID, ctx)?.is_nonneg())
        }
        Theorem2Case::D => {
            if p1 + 1 != q1 || p1 < 1 {
                return Err(Error::Dimension(format!("case D needs p1 = q1 - 1 >= 1, got {p1}/{q1}")));
            }
            if a1.iter().any(|v| *v <= 0) || b1.iter().any(|v| *v <= 0) {
                return Ok(false);
            }
            // augmented upper vector (a1, 3/2), paired against b1 over all
            // index choices (k, s)
            let mut hat_a: Vec<Rational> = a1.to_vec();
            hat_a.push(Rational::from((3, 2)));
            let one = Rational::from(1);
            for (k, ak) in hat_a.iter().enumerate() {
                for (s, bs) in b1.iter().enumerate() {
                    let cap = one.clone().min(Rational::from(bs - &one));
                    if *ak > cap {
                        continue;
                    }
                    let mut ra: Vec<Rational> = hat_a.clone();
                    ra.remove(k);
                    let mut rb: Vec<Rational> = b1.to_vec();
                    rb.remove(s);
                    if muntz_nonneg(&ra, &rb, MUNTZ_DEFAULT_GRID, ctx)?.is_nonneg() {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
    }
}

/// Positivity of the term sequence `(a1)_n / (b1)_n`.
///
/// Certificates, in order: all entries positive; a floor-pairing between the
/// negative entries of both vectors (equal floor multisets of non-integers,
/// which fixes the sign pattern of every factor pair). Otherwise the ratio is
/// checked exactly up to `max(horizon, n0)` where `n0 = ceil(-min entry) + 1`;
/// beyond `n0` every new factor is positive, so whenever `n0 <= horizon` the
/// scan is itself a certificate.
fn ratio_sequence_positive(a1: &[Rational], b1: &[Rational], horizon: u32) -> bool {
    // non-positive-integer entries kill positivity outright: a zero factor
    // on top, a pole below
    for v in a1 {
        if v.is_integer() && *v <= 0 {
            return false;
        }
    }
    for v in b1 {
        if v.is_integer() && *v <= 0 {
            return false;
        }
    }

    if a1.iter().all(|v| *v > 0) && b1.iter().all(|v| *v > 0) {
        return true;
    }

    let neg_floors = |v: &[Rational]| -> Vec<Integer> {
        let mut fl: Vec<Integer> = v
            .iter()
            .filter(|e| **e < 0)
            .map(|e| e.clone().floor().into_numer_denom().0)
            .collect();
        fl.sort();
        fl
    };
    if neg_floors(a1) == neg_floors(b1)
        && a1.iter().filter(|e| **e < 0).count() == b1.iter().filter(|e| **e < 0).count()
    {
        return true;
    }

    // exact scan
    let min_entry = a1.iter().chain(b1.iter()).min();
    let n0 = match min_entry {
        Some(m) if *m < 0 => {
            let ceil_neg = Rational::from(-m.clone()).ceil();
            ceil_neg.numer().to_u32().unwrap_or(u32::MAX).saturating_add(1)
        }
        _ => 1,
    };
    let n_max = horizon.max(n0.min(10_000));
    let mut ratio = Rational::from(1);
    for n in 0..n_max {
        let mut factor = Rational::from(1);
        for a in a1 {
            factor *= Rational::from(a + n);
        }
        for b in b1 {
            let f = Rational::from(b + n);
            if f == 0 {
                return false;
            }
            factor /= f;
        }
        ratio *= factor;
        if ratio <= 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::parse_rational_list;

    fn v(s: &str) -> Vec<Rational> {
        parse_rational_list(s).unwrap()
    }

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::default()
    }

    #[test]
    fn case_c_empty_block() {
        // p1 = q1 = 0: the fixed block contributes exp, always nonnegative
        let c = ctx();
        assert!(theorem2_case(Theorem2Case::C, &[], &[], &c.float_from(-3), &c).unwrap());
    }

    #[test]
    fn case_a_positive_params() {
        let c = ctx();
        assert!(theorem2_case(Theorem2Case::A, &v("1"), &v("2"), &c.float_from(1), &c).unwrap());
        // negative x fails the range requirement
        assert!(!theorem2_case(Theorem2Case::A, &v("1"), &v("2"), &c.float_from(-1), &c).unwrap());
    }

    #[test]
    fn case_a_floor_pairing() {
        let c = ctx();
        // same unit interval: (-3/2)_n and (-5/4)_n share sign patterns
        assert!(
            theorem2_case(Theorem2Case::A, &v("-3/2,1"), &v("-5/4,2"), &c.float_from(2), &c)
                .unwrap()
        );
        // mismatched floors: ratio goes negative
        assert!(
            !theorem2_case(Theorem2Case::A, &v("-1/2,1"), &v("-5/4,2"), &c.float_from(2), &c)
                .unwrap()
        );
    }

    #[test]
    fn case_b_lone_sigma() {
        // a1 = (5) with empty remainder: hypothesis holds for any x < 1
        let c = ctx();
        assert!(theorem2_case(Theorem2Case::B, &v("5"), &[], &c.float_from(0.5), &c).unwrap());
        assert!(!theorem2_case(Theorem2Case::B, &v("5"), &[], &c.float_from(1), &c).unwrap());
        assert!(theorem2_case(Theorem2Case::B, &v("-7"), &[], &c.float_from(-10), &c).unwrap());
    }

    #[test]
    fn case_c_with_muntz() {
        let c = ctx();
        assert!(theorem2_case(Theorem2Case::C, &v("1,2"), &v("2,3"), &c.float_from(-2), &c).unwrap());
        assert!(!theorem2_case(Theorem2Case::C, &v("2"), &v("1"), &c.float_from(0), &c).unwrap());
    }

    #[test]
    fn case_d_pairing() {
        let c = ctx();
        // a1=(1/2), b1=(2,3/2): hat_a=(1/2,3/2); k=0 with s=0: 1/2 <= min(1, 1),
        // remaining v_{(3/2),(3/2)} = 0
        assert!(theorem2_case(Theorem2Case::D, &v("1/2"), &v("2,3/2"), &c.float_from(-4), &c).unwrap());
        // no pair qualifies when every lower entry is below 1
        assert!(!theorem2_case(Theorem2Case::D, &v("1/2"), &v("3/4,1/2"), &c.float_from(0), &c).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let c = ctx();
        assert!(theorem2_case(Theorem2Case::B, &v("1"), &v("2"), &c.float_zero(), &c).is_err());
        assert!(theorem2_case(Theorem2Case::C, &v("1"), &[], &c.float_zero(), &c).is_err());
        assert!(theorem2_case(Theorem2Case::D, &v("1"), &v("2"), &c.float_zero(), &c).is_err());
        assert!(theorem2_case(Theorem2Case::A, &v("1,2,3"), &v("1"), &c.float_zero(), &c).is_err());
    }
}
