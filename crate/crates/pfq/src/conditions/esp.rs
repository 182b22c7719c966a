//! Elementary symmetric polynomials, the two monotonicity chains they
//! control, and the rational function `R(x) = prod(a_k + x) / prod(b_k + x)`.

use crate::error::{Error, Result};
use crate::precision::{finite, PrecisionCtx};
use rug::{Float, Rational};

/// Exact `e_m` via the one-pass product recurrence; `e_0 = 1`, and `m` beyond
/// the vector length gives 0.
pub fn esp(values: &[Rational], m: usize) -> Rational {
    if m > values.len() {
        return Rational::new();
    }
    let mut e = vec![Rational::new(); m + 1];
    e[0] = Rational::from(1);
    for v in values {
        let top = m.min(values.len());
        for j in (1..=top).rev() {
            let add = Rational::from(&e[j - 1] * v);
            e[j] += add;
        }
    }
    e.pop().unwrap()
}

/// Result of an exact chain verification. `ratios` lists the chain members
/// left to right; `first_failing_index` is the left member of the first
/// violated adjacent pair.
#[derive(Debug, Clone, PartialEq)]
pub struct EspChainVerdict {
    pub holds: bool,
    pub first_failing_index: Option<usize>,
    pub ratios: Vec<Rational>,
}

fn validate_positive(v: &[Rational]) -> Result<()> {
    for e in v {
        if *e <= 0 {
            return Err(Error::Domain(format!("entry {e} is not positive")));
        }
    }
    Ok(())
}

/// Chain members `e_{d+j}(big) / e_j(small)` for `j = |small| .. 0`, where
/// `d = |big| - |small|`; the chain holds when they are nondecreasing.
fn chain(big: &[Rational], small: &[Rational]) -> EspChainVerdict {
    let d = big.len() - small.len();
    let ratios: Vec<Rational> = (0..=small.len())
        .rev()
        .map(|j| {
            let num = esp(big, d + j);
            let den = esp(small, j);
            num / den
        })
        .collect();
    let mut first_failing_index = None;
    for i in 0..ratios.len().saturating_sub(1) {
        if ratios[i] > ratios[i + 1] {
            first_failing_index = Some(i);
            break;
        }
    }
    EspChainVerdict { holds: first_failing_index.is_none(), first_failing_index, ratios }
}

/// The increasing-direction chain; requires `|a| >= |b|`, positive entries.
pub fn esp_chain_incr(a: &[Rational], b: &[Rational]) -> Result<EspChainVerdict> {
    if a.len() < b.len() {
        return Err(Error::Dimension(format!(
            "increasing chain needs p >= q, got p = {}, q = {}",
            a.len(),
            b.len()
        )));
    }
    validate_positive(a)?;
    validate_positive(b)?;
    Ok(chain(a, b))
}

/// The decreasing-direction chain; requires `|a| <= |b|`, positive entries.
pub fn esp_chain_decr(a: &[Rational], b: &[Rational]) -> Result<EspChainVerdict> {
    if a.len() > b.len() {
        return Err(Error::Dimension(format!(
            "decreasing chain needs p <= q, got p = {}, q = {}",
            a.len(),
            b.len()
        )));
    }
    validate_positive(a)?;
    validate_positive(b)?;
    Ok(chain(b, a))
}

/// `prod(a_k + x) / prod(b_k + x)` at a floating point.
pub fn rpq_eval(a: &[Rational], b: &[Rational], x: &Float, ctx: &PrecisionCtx) -> Result<Float> {
    let prec = ctx.prec();
    let mut num = Float::with_val(prec, 1);
    for ak in a {
        num *= ctx.float_from_rational(ak) + x;
    }
    let mut den = Float::with_val(prec, 1);
    for bk in b {
        let f = ctx.float_from_rational(bk) + x;
        if f.is_zero() {
            return Err(Error::Domain(format!("denominator factor {bk} + x vanishes")));
        }
        den *= f;
    }
    finite(num / den, "rational-function evaluation")
}

/// Exact-rational variant for property checks.
pub fn rpq_eval_exact(a: &[Rational], b: &[Rational], x: &Rational) -> Result<Rational> {
    let mut num = Rational::from(1);
    for ak in a {
        num *= Rational::from(ak + x);
    }
    let mut den = Rational::from(1);
    for bk in b {
        let f = Rational::from(bk + x);
        if f == 0 {
            return Err(Error::Domain(format!("denominator factor {bk} + x vanishes")));
        }
        den *= f;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::parse_rational_list;

    fn v(s: &str) -> Vec<Rational> {
        parse_rational_list(s).unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn esp_examples() {
        assert_eq!(esp(&v("1,2,3"), 2), r("11"));
        assert_eq!(esp(&v("7,9"), 0), r("1"));
        assert_eq!(esp(&v("1,2,3"), 3), r("6"));
        assert_eq!(esp(&v("1,2"), 3), r("0"));
        assert_eq!(esp(&[], 0), r("1"));
    }

    #[test]
    fn chain_examples() {
        // a=(1), b=(2): increasing chain holds with ratios [1/2, 1]
        let inc = esp_chain_incr(&v("1"), &v("2")).unwrap();
        assert!(inc.holds);
        assert_eq!(inc.ratios, vec![r("1/2"), r("1")]);

        // decreasing chain for the same pair fails at index 0
        let dec = esp_chain_decr(&v("1"), &v("2")).unwrap();
        assert!(!dec.holds);
        assert_eq!(dec.first_failing_index, Some(0));
        assert_eq!(dec.ratios, vec![r("2"), r("1")]);

        // a=(2), b=(1): decreasing chain holds
        assert!(esp_chain_decr(&v("2"), &v("1")).unwrap().holds);

        assert!(matches!(esp_chain_incr(&v("1"), &v("1,2")), Err(Error::Dimension(_))));
        assert!(matches!(esp_chain_decr(&v("1,2"), &v("1")), Err(Error::Dimension(_))));
    }

    #[test]
    fn rational_function_values() {
        let c = PrecisionCtx::default();
        let half = rpq_eval(&v("1"), &v("2"), &c.float_from(1e-30), &c).unwrap();
        assert!((half.to_f64() - 0.5).abs() < 1e-12);
        let one = rpq_eval(&v("5/2,3"), &v("5/2,3"), &c.float_from(17), &c).unwrap();
        assert_eq!(one, c.float_from(1));
        let limit = rpq_eval(&v("1"), &v("2"), &c.float_from(1e12), &c).unwrap();
        assert!((limit.to_f64() - 1.0).abs() < 1e-11);
        assert_eq!(rpq_eval_exact(&v("1"), &v("2"), &r("3")).unwrap(), r("4/5"));
    }
}
