//! High-precision floating evaluation of the hypergeometric series, its
//! gamma-weighted shifted form and derivatives via the contiguous-shift
//! identity.

use crate::error::{Error, Result};
use crate::params::HyperParams;
use crate::precision::{finite, PrecisionCtx};
use crate::series::pochhammer_vec;
use rug::ops::CompleteRound;
use rug::{Float, Rational};

/// Series evaluation over float parameter vectors. The stopping rule: three
/// consecutive terms below `eps * |partial sum|` (or below the absolute floor
/// `eps^2 * max |partial sum|`, which covers sums that cancel to ~0), gated on
/// the term index exceeding `ceil(-min parameter) + 5` so sign-oscillating
/// prefixes cannot trigger an early exit. A vanishing upper factor terminates
/// the series exactly.
fn sum_series(upper: &[Float], lower: &[Float], x: &Float, ctx: &PrecisionCtx) -> Result<Float> {
    let prec = ctx.prec();
    let min_entry = upper
        .iter()
        .chain(lower.iter())
        .min_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let gate = match min_entry {
        Some(m) if m.is_sign_negative() => {
            let c = (-m.clone()).ceil().to_f64();
            c.max(0.0) as usize + 5
        }
        _ => 5,
    };

    let mut sum = Float::new(prec);
    let mut sum_peak = Float::new(prec);
    let mut term = Float::with_val(prec, 1);
    let mut consecutive = 0usize;

    for n in 0..ctx.max_terms() {
        sum += &term;
        let abs_sum = sum.clone().abs();
        if abs_sum > sum_peak {
            sum_peak = abs_sum.clone();
        }

        // next term: term * prod(a+n)/prod(b+n) / (n+1) * x
        let mut num = Float::with_val(prec, 1);
        for a in upper {
            num *= (a + n as u32).complete(prec);
        }
        if num.is_zero() {
            // terminating series: every later term vanishes exactly
            return finite(sum, "series");
        }
        let mut den = Float::with_val(prec, n as u32 + 1);
        for b in lower {
            let f = (b + n as u32).complete(prec);
            if f.is_zero() {
                return Err(Error::Pole(format!(
                    "lower parameter hits zero at series order {n}"
                )));
            }
            den *= f;
        }
        term *= num;
        term /= den;
        term *= x;

        let abs_term = term.clone().abs();
        let rel_bound = (ctx.eps() * &abs_sum).complete(prec);
        let floor_bound = (ctx.eps() * ctx.eps()).complete(prec) * &sum_peak;
        if abs_term < rel_bound || abs_term < floor_bound {
            consecutive += 1;
        } else {
            consecutive = 0;
        }
        if consecutive >= 3 && n + 1 > gate {
            return finite(sum, "series");
        }
    }
    Err(Error::Convergence { terms: ctx.max_terms() })
}

fn check_domain(p: usize, q: usize, x: &Float) -> Result<()> {
    if p > q + 1 {
        return Err(Error::Domain(format!("p = {p} exceeds q + 1 = {}", q + 1)));
    }
    if p == q + 1 {
        let ax = x.clone().abs();
        if ax >= 1 {
            return Err(Error::Domain(format!(
                "p = q + 1 requires |x| < 1, got x = {}",
                x.to_f64()
            )));
        }
    }
    Ok(())
}

fn to_floats(v: &[Rational], ctx: &PrecisionCtx) -> Vec<Float> {
    v.iter().map(|r| ctx.float_from_rational(r)).collect()
}

/// Evaluate the hypergeometric series at `x`.
pub fn eval_pfq(params: &HyperParams, x: &Float, ctx: &PrecisionCtx) -> Result<Float> {
    check_domain(params.p(), params.q(), x)?;
    let upper = to_floats(params.upper(), ctx);
    let lower = to_floats(params.lower(), ctx);
    sum_series(&upper, &lower, x, ctx)
}

/// The gamma-weighted shifted function
/// `Gamma(a2+mu)/Gamma(b2+mu) * pFq(a1, a2+mu; b1, b2+mu; x)`,
/// with the gamma ratio computed as a difference of log-gammas.
pub fn eval_shifted(params: &HyperParams, mu: &Float, x: &Float, ctx: &PrecisionCtx) -> Result<Float> {
    check_domain(params.p(), params.q(), x)?;
    let prec = ctx.prec();

    let mut upper = to_floats(params.a1(), ctx);
    let mut lower = to_floats(params.b1(), ctx);
    let mut log_pre = Float::new(prec);
    for a in params.a2() {
        let shifted = ctx.float_from_rational(a) + mu;
        if !(shifted > 0u32) {
            return Err(Error::Domain(format!("a2 entry {a} + mu is not positive")));
        }
        log_pre += shifted.clone().ln_gamma();
        upper.push(shifted);
    }
    for b in params.b2() {
        let shifted = ctx.float_from_rational(b) + mu;
        if !(shifted > 0u32) {
            return Err(Error::Domain(format!("b2 entry {b} + mu is not positive")));
        }
        log_pre -= shifted.clone().ln_gamma();
        lower.push(shifted);
    }

    let series = sum_series(&upper, &lower, x, ctx)?;
    finite(log_pre.exp() * series, "gamma-weighted evaluation")
}

/// k-th derivative via k-fold `d/dx pFq(a;b;x) = (prod a / prod b) pFq(a+1;b+1;x)`,
/// i.e. a single evaluation at parameters shifted by k with the exact rational
/// prefactor `(a)_k / (b)_k`.
pub fn derivative_pfq(params: &HyperParams, x: &Float, k: u32, ctx: &PrecisionCtx) -> Result<Float> {
    if k == 0 {
        return eval_pfq(params, x, ctx);
    }
    let mut prefactor = pochhammer_vec(params.upper(), k);
    if prefactor == 0 {
        // the function is a polynomial of degree < k
        return Ok(ctx.float_zero());
    }
    let den = pochhammer_vec(params.lower(), k);
    if den == 0 {
        return Err(Error::Pole(format!("lower Pochhammer vanished while shifting by {k}")));
    }
    prefactor /= den;
    let shifted = params.shift_all(&Rational::from(k))?;
    let value = eval_pfq(&shifted, x, ctx)?;
    finite(value * ctx.float_from_rational(&prefactor), "derivative")
}

// derivative of (a)_k/(b)_k needed nowhere; higher derivatives reuse the table
// built by the caller (see laguerre::derivative_table).

/// Derivative values `f^(0) .. f^(max_order)` at `x`, computed once each.
pub fn derivative_table(
    params: &HyperParams,
    x: &Float,
    max_order: u32,
    ctx: &PrecisionCtx,
) -> Result<Vec<Float>> {
    (0..=max_order).map(|k| derivative_pfq(params, x, k, ctx)).collect()
}

/// Convenience: pochhammer re-exported check for terminating polynomials.
pub fn is_terminating(params: &HyperParams) -> Option<u32> {
    params
        .upper()
        .iter()
        .filter(|a| a.is_integer() && **a <= 0)
        .map(|a| {
            let i = a.numer().to_i32_wrapping();
            (-i) as u32
        })
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::parse_rational_list;

    fn params(upper: &str, lower: &str) -> HyperParams {
        HyperParams::new(
            parse_rational_list(upper).unwrap(),
            parse_rational_list(lower).unwrap(),
        )
        .unwrap()
    }

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::default()
    }

    fn assert_close(got: &Float, want: &Float, rel: f64, ctx: &PrecisionCtx) {
        let scale = want.clone().abs().max(&ctx.float_from(1));
        let diff = (got.clone() - want).abs();
        assert!(
            diff <= scale * ctx.float_from(rel),
            "got {got}\nwant {want}"
        );
    }

    #[test]
    fn exp_at_one() {
        let c = ctx();
        let got = eval_pfq(&params("", ""), &c.float_from(1), &c).unwrap();
        let want = c.float_from(1).exp();
        assert_close(&got, &want, 1e-29, &c);
    }

    #[test]
    fn geometric_series() {
        let c = ctx();
        let got = eval_pfq(&params("1", ""), &c.float_from(0.5), &c).unwrap();
        assert_close(&got, &c.float_from(2), 1e-29, &c);
    }

    #[test]
    fn kummer_value() {
        // 1F1(1;2;1) = e - 1
        let c = ctx();
        let got = eval_pfq(&params("1", "2"), &c.float_from(1), &c).unwrap();
        let want = c.float_from(1).exp() - 1u32;
        assert_close(&got, &want, 1e-29, &c);
    }

    #[test]
    fn domain_errors() {
        let c = ctx();
        assert!(matches!(
            eval_pfq(&params("1,2", ""), &c.float_from(0.5), &c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eval_pfq(&params("1", ""), &c.float_from(1), &c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eval_pfq(&params("1,2", "3"), &c.float_from(-1), &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn terminating_polynomial() {
        let c = ctx();
        // 1F1(-2;1;x) = 1 - 2x + x^2/2
        let x = c.float_from(3);
        let got = eval_pfq(&params("-2", "1"), &x, &c).unwrap();
        let want = c.float_from(1) - c.float_from(6) + c.float_from(4.5);
        assert_close(&got, &want, 1e-29, &c);
    }

    #[test]
    fn cancellation_to_zero() {
        // 1F1(2;1;-1) = (1+x)e^x at x=-1, i.e. exactly 0
        let c = ctx();
        let got = eval_pfq(&params("2", "1"), &c.float_from(-1), &c).unwrap();
        assert!(got.clone().abs() < c.float_from(1e-35), "got {got}");
    }

    #[test]
    fn shifted_reduces_to_exp_for_empty_params() {
        let c = ctx();
        let p = params("", "");
        let x = c.float_from(0.7);
        let want = x.clone().exp();
        for mu in [0.0, 7.3] {
            let got = eval_shifted(&p, &c.float_from(mu), &x, &c).unwrap();
            assert_close(&got, &want, 1e-29, &c);
        }
    }

    #[test]
    fn shifted_collapses_when_blocks_match() {
        let c = ctx();
        let p = params("3", "3");
        let x = c.float_from(-2);
        let got = eval_shifted(&p, &c.float_from(0.6), &x, &c).unwrap();
        assert_close(&got, &x.clone().exp(), 1e-29, &c);
    }

    #[test]
    fn shifted_matches_prefactor_times_series() {
        let c = ctx();
        let p = params("1", "2");
        let x = c.float_from(1);
        let got = eval_shifted(&p, &c.float_zero(), &x, &c).unwrap();
        // Gamma(1)/Gamma(2) = 1, series = e - 1
        let want = c.float_from(1).exp() - 1u32;
        assert_close(&got, &want, 1e-29, &c);
    }

    #[test]
    fn shifted_rejects_nonpositive_gamma_argument() {
        let c = ctx();
        let p = params("-2/3", "2");
        assert!(matches!(
            eval_shifted(&p, &c.float_zero(), &c.float_from(0.5), &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn derivative_examples() {
        let c = ctx();
        let zero = c.float_zero();
        // exp: every derivative at 0 is 1
        for k in [0u32, 1, 4] {
            let got = derivative_pfq(&params("", ""), &zero, k, &c).unwrap();
            assert_close(&got, &c.float_from(1), 1e-45, &c);
        }
        // d/dx (1-x)^{-1} at 0 = 1
        let got = derivative_pfq(&params("1", ""), &zero, 1, &c).unwrap();
        assert_close(&got, &c.float_from(1), 1e-45, &c);
        // second derivative of 1F1(1;2;x) at 0: (1)_2/(2)_2 = 1/3
        let got = derivative_pfq(&params("1", "2"), &zero, 2, &c).unwrap();
        let want = c.float_from_rational(&"1/3".parse().unwrap());
        assert_close(&got, &want, 1e-45, &c);
    }

    #[test]
    fn derivative_of_low_degree_polynomial_vanishes() {
        let c = ctx();
        let got = derivative_pfq(&params("-2", "1"), &c.float_from(0.3), 3, &c).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let c = ctx();
        let p = params("1", "2");
        let x = c.float_from(0.4);
        let h = c.float_from(1e-15);
        let up = eval_pfq(&p, &(x.clone() + &h), &c).unwrap();
        let down = eval_pfq(&p, &(x.clone() - &h), &c).unwrap();
        let fd = (up - down) / (c.float_from(2) * &h);
        let got = derivative_pfq(&p, &x, 1, &c).unwrap();
        assert_close(&got, &fd, 1e-10, &c);
    }
}
