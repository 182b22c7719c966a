//! The power-sum difference `v(t) = sum_k (t^{a_k} - t^{b_k})` on [0,1] and a
//! certified-heuristic check of its nonnegativity.

use crate::error::{Error, Result};
use crate::precision::{finite, PrecisionCtx};
use rug::ops::{CompleteRound, Pow};
use rug::{Float, Rational};

/// Default Chebyshev grid size for [`muntz_nonneg`].
pub const MUNTZ_DEFAULT_GRID: usize = 4097;

/// Violations must undershoot `-10^-MUNTZ_STRICT_TOL_POW10` to count.
pub const MUNTZ_STRICT_TOL_POW10: u32 = 30;

/// Outcome of the nonnegativity check. `Inconclusive` means the refined
/// minimum landed inside `[-strict_tol, 0)`, too close to zero to call.
#[derive(Debug, Clone, PartialEq)]
pub enum MuntzVerdict {
    VerifiedNonneg,
    Violation { witness_t: Float, witness_value: Float },
    Inconclusive { min_value: Float },
}

impl MuntzVerdict {
    pub fn is_nonneg(&self) -> bool {
        matches!(self, MuntzVerdict::VerifiedNonneg)
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, MuntzVerdict::Violation { .. })
    }
}

fn validate(a: &[Rational], b: &[Rational]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "exponent vectors differ in length: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    for e in a.iter().chain(b.iter()) {
        if *e <= 0 {
            return Err(Error::Domain(format!("exponent {e} is not positive")));
        }
    }
    Ok(())
}

/// Evaluate `v(t)` at `t` in [0,1] (`t = 0` taken as the limit, which is 0
/// for positive exponents).
pub fn muntz_value(a: &[Rational], b: &[Rational], t: &Float, ctx: &PrecisionCtx) -> Result<Float> {
    validate(a, b)?;
    if *t < 0 || *t > 1 {
        return Err(Error::Domain(format!("t = {} outside [0,1]", t.to_f64())));
    }
    Ok(value_unchecked(a, b, t, ctx))
}

fn value_unchecked(a: &[Rational], b: &[Rational], t: &Float, ctx: &PrecisionCtx) -> Float {
    let prec = ctx.prec();
    let mut v = Float::new(prec);
    for (ak, bk) in a.iter().zip(b.iter()) {
        v += t.clone().pow(ctx.float_from_rational(ak));
        v -= t.clone().pow(ctx.float_from_rational(bk));
    }
    v
}

/// Grid-plus-refinement nonnegativity check: evaluate on a Chebyshev-spaced
/// grid, refine every interior local minimum by golden-section search down to
/// bracket width 1e-20, then classify against the strict tolerance.
pub fn muntz_nonneg(
    a: &[Rational],
    b: &[Rational],
    grid_size: usize,
    ctx: &PrecisionCtx,
) -> Result<MuntzVerdict> {
    validate(a, b)?;
    if a.is_empty() {
        return Ok(MuntzVerdict::VerifiedNonneg);
    }
    let n = grid_size.max(17);
    let prec = ctx.prec();

    // Chebyshev-Lobatto points mapped to [0,1], ascending
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    let mut ts = Vec::with_capacity(n);
    let mut vs = Vec::with_capacity(n);
    for i in 0..n {
        let theta = pi.clone() * Float::with_val(prec, i as u32) / (n as u32 - 1);
        let t = (Float::with_val(prec, 1) - theta.cos()) / 2u32;
        let v = value_unchecked(a, b, &t, ctx);
        ts.push(t);
        vs.push(v);
    }

    let width_tol = Float::with_val(prec, 10).pow(-20);
    let mut min_t = ts[0].clone();
    let mut min_v = vs[0].clone();
    for i in 0..n {
        if vs[i] < min_v {
            min_v = vs[i].clone();
            min_t = ts[i].clone();
        }
        let is_local_min = i > 0
            && i + 1 < n
            && vs[i] <= vs[i - 1]
            && vs[i] <= vs[i + 1];
        if is_local_min {
            let (rt, rv) = golden_min(a, b, &ts[i - 1], &ts[i + 1], &width_tol, ctx);
            if rv < min_v {
                min_v = rv;
                min_t = rt;
            }
        }
    }

    let strict_tol = Float::with_val(prec, 10).pow(-(MUNTZ_STRICT_TOL_POW10 as i32));
    if min_v < -strict_tol.clone() {
        Ok(MuntzVerdict::Violation {
            witness_t: finite(min_t, "muntz witness")?,
            witness_value: finite(min_v, "muntz witness value")?,
        })
    } else if min_v < 0 {
        Ok(MuntzVerdict::Inconclusive { min_value: min_v })
    } else {
        Ok(MuntzVerdict::VerifiedNonneg)
    }
}

fn golden_min(
    a: &[Rational],
    b: &[Rational],
    lo: &Float,
    hi: &Float,
    width_tol: &Float,
    ctx: &PrecisionCtx,
) -> (Float, Float) {
    let prec = ctx.prec();
    // inv golden ratio and its square
    let phi = (Float::with_val(prec, 5).sqrt() - 1u32) / 2u32;
    let phi2 = (3u32 - Float::with_val(prec, 5).sqrt()) / 2u32;

    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let mut h = (&hi - &lo).complete(prec);
    let mut c = lo.clone() + phi2.clone() * &h;
    let mut d = lo.clone() + phi.clone() * &h;
    let mut fc = value_unchecked(a, b, &c, ctx);
    let mut fd = value_unchecked(a, b, &d, ctx);

    while h > *width_tol {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            h = (&hi - &lo).complete(prec);
            c = lo.clone() + phi2.clone() * &h;
            fc = value_unchecked(a, b, &c, ctx);
        } else {
            lo = c;
            c = d;
            fc = fd;
            h = (&hi - &lo).complete(prec);
            d = lo.clone() + phi.clone() * &h;
            fd = value_unchecked(a, b, &d, ctx);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
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
    fn pointwise_values() {
        let c = ctx();
        // equal vectors: identically zero
        let z = muntz_value(&v("1,3/2"), &v("1,3/2"), &c.float_from(0.37), &c).unwrap();
        assert!(z.is_zero());
        // t - t^2 at 1/2 = 1/4
        let q = muntz_value(&v("1"), &v("2"), &c.float_from(0.5), &c).unwrap();
        assert_eq!(q, c.float_from(0.25));
        // all terms vanish at t = 1
        let one = muntz_value(&v("2,7/2"), &v("3,4"), &c.float_from(1), &c).unwrap();
        assert!(one.is_zero());
        // t = 0 is the zero limit
        let nil = muntz_value(&v("1/2"), &v("2"), &c.float_zero(), &c).unwrap();
        assert!(nil.is_zero());
    }

    #[test]
    fn dimension_and_domain_errors() {
        let c = ctx();
        assert!(matches!(
            muntz_value(&v("1"), &v("1,2"), &c.float_from(0.5), &c),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            muntz_value(&v("-1"), &v("2"), &c.float_from(0.5), &c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            muntz_value(&v("1"), &v("2"), &c.float_from(1.5), &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn verdicts() {
        let c = ctx();
        // t + t^2 - t^2 - t^3 = t - t^3 >= 0
        let ok = muntz_nonneg(&v("1,2"), &v("2,3"), 257, &c).unwrap();
        assert!(ok.is_nonneg());

        // t^2 - t < 0 inside, minimum -1/4 near t = 1/2
        match muntz_nonneg(&v("2"), &v("1"), 257, &c).unwrap() {
            MuntzVerdict::Violation { witness_t, witness_value } => {
                assert!((witness_t.to_f64() - 0.5).abs() < 1e-6);
                assert!((witness_value.to_f64() + 0.25).abs() < 1e-10);
            }
            other => panic!("expected violation, got {other:?}"),
        }

        // identical vectors: identically zero
        assert!(muntz_nonneg(&v("1,2"), &v("1,2"), 257, &c).unwrap().is_nonneg());
    }
}
