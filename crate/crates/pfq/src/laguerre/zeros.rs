//! Zero location for entire hypergeometric functions (`p <= q`): roots of an
//! adaptively truncated Taylor polynomial, each polished by Newton iteration
//! on the full series and accepted only on a residual test.

use super::{lp_membership, matched_zero_count};
use crate::error::{Error, Result};
use crate::eval::is_terminating;
use crate::params::HyperParams;
use crate::precision::PrecisionCtx;
use rug::ops::{CompleteRound, Pow};
use rug::{Complex, Float, Rational};

/// Search controls for [`find_zeros`].
#[derive(Debug, Clone)]
pub struct ZeroSearch {
    /// How many smallest-modulus zeros to aim for when the total count is
    /// infinite (`p < q`). For `p = q` members the full finite set is found.
    pub budget: usize,
    /// Hard cap on the truncation degree.
    pub degree_cap: usize,
    /// Force at least this truncation degree (used by stability checks).
    pub min_degree: Option<usize>,
    /// Give up growing the search disk beyond this radius.
    pub radius_cap: f64,
}

impl Default for ZeroSearch {
    fn default() -> Self {
        Self { budget: 8, degree_cap: 400, min_degree: None, radius_cap: 1e6 }
    }
}

/// Zeros sorted by modulus (ties by imaginary part), their full-series Newton
/// residuals, the truncation degree used, and any candidates discarded by the
/// residual test.
#[derive(Debug, Clone)]
pub struct ZeroSet {
    pub zeros: Vec<Complex>,
    pub residuals: Vec<Float>,
    pub truncation_degree: usize,
    pub rejected: Vec<(Complex, Float)>,
}

/// Outcome of the real-negativity check, with the first offending zero.
#[derive(Debug, Clone)]
pub struct RealNegVerdict {
    pub all_real_negative: bool,
    pub witness: Option<Complex>,
}

/// True iff every zero has `|imag| <= tol * max(1, |z|)` and negative real
/// part.
pub fn check_zeros_real_negative(zeros: &ZeroSet, tol: &Float, ctx: &PrecisionCtx) -> RealNegVerdict {
    for z in &zeros.zeros {
        let mag = cabs(z, ctx.prec());
        let bound = (tol * &mag.max(&ctx.float_from(1))).complete(ctx.prec());
        if z.imag().clone().abs() > bound || !(*z.real() < 0) {
            return RealNegVerdict { all_real_negative: false, witness: Some(z.clone()) };
        }
    }
    RealNegVerdict { all_real_negative: true, witness: None }
}

fn cabs(z: &Complex, prec: u32) -> Float {
    Float::with_val(prec, z.clone().abs().real())
}

/// Locate zeros of the entire function. Preconditions: `p <= q`, and either
/// `p < q` or the integer-difference membership holds (the finite-zero-count
/// case). The search disk grows until enough roots of the truncated
/// polynomial lie well inside it; every candidate is Newton-polished on the
/// full series and must pass `|f(z)| < 1e-30 * max(1, |f'(z)| |z|)`.
pub fn find_zeros(params: &HyperParams, ctx: &PrecisionCtx, search: &ZeroSearch) -> Result<ZeroSet> {
    let p = params.p();
    let q = params.q();
    if p > q {
        return Err(Error::Domain(format!("zero search needs p <= q, got p = {p}, q = {q}")));
    }
    let lp = lp_membership(params);
    if p == q && !lp.member {
        return Err(Error::Domain(
            "for p = q the integer-difference membership is required".into(),
        ));
    }

    let target = if p == q {
        let count = matched_zero_count(&lp).unwrap_or(0);
        if count == 0 {
            // no zeros at all (the function is exp times a positive constant)
            return Ok(ZeroSet {
                zeros: Vec::new(),
                residuals: Vec::new(),
                truncation_degree: 0,
                rejected: Vec::new(),
            });
        }
        count as usize
    } else {
        search.budget.max(1)
    };

    // terminating series: the function is exactly its polynomial
    if let Some(degree) = is_terminating(params) {
        let coeffs = float_coeffs(params, degree as usize, ctx)?;
        let roots = aberth(&coeffs, ctx);
        return refine_and_collect(params, roots, degree as usize, None, ctx);
    }

    let prec = ctx.prec();
    let mut radius = Float::with_val(prec, 4);
    loop {
        let degree = match pick_degree(params, &radius, search, ctx)? {
            Some(d) => d,
            None => {
                return Err(Error::Truncation(format!(
                    "no admissible truncation degree <= {} for radius {}",
                    search.degree_cap,
                    radius.to_f64()
                )))
            }
        };
        let coeffs = float_coeffs(params, degree, ctx)?;
        let roots = aberth(&coeffs, ctx);
        let half = (&radius / 2u32).complete(prec);
        let inside: Vec<Complex> =
            roots.into_iter().filter(|z| cabs(z, prec) <= half).collect();

        if inside.len() >= target {
            return refine_and_collect(params, inside, degree, Some(target), ctx);
        }
        radius *= 2u32;
        if radius.to_f64() > search.radius_cap {
            if p == q {
                return Err(Error::Truncation(format!(
                    "found {} of {} zeros within the radius cap",
                    inside.len(),
                    target
                )));
            }
            if inside.is_empty() {
                return Err(Error::Truncation("no zeros located within the radius cap".into()));
            }
            return refine_and_collect(params, inside, degree, None, ctx);
        }
    }
}

/// Roots of the degree-`degree` truncated Taylor polynomial, Newton-polished
/// against the full series. Exposed for truncation-stability diagnostics.
pub fn truncated_roots(
    params: &HyperParams,
    degree: usize,
    keep_within: f64,
    ctx: &PrecisionCtx,
) -> Result<ZeroSet> {
    let coeffs = float_coeffs(params, degree, ctx)?;
    let prec = ctx.prec();
    let bound = Float::with_val(prec, keep_within);
    let roots: Vec<Complex> = aberth(&coeffs, ctx)
        .into_iter()
        .filter(|z| cabs(z, prec) <= bound)
        .collect();
    refine_and_collect(params, roots, degree, None, ctx)
}

/// Truncation degree such that the dropped tail on the disk of `radius` is
/// below `10^-(digits-10)`: past the magnitude peak, with the term ratio
/// under 1/2 (so the tail is within 2x of its first term) and the term itself
/// below threshold.
fn pick_degree(
    params: &HyperParams,
    radius: &Float,
    search: &ZeroSearch,
    ctx: &PrecisionCtx,
) -> Result<Option<usize>> {
    let prec = ctx.prec();
    let threshold = Float::with_val(prec, 10).pow(-((ctx.digits() as i32) - 10));
    let floor = search.min_degree.unwrap_or(0);

    let mut term = Float::with_val(prec, 1);
    for n in 0..search.degree_cap {
        let mut num = Rational::from(1);
        for a in params.upper() {
            num *= Rational::from(a + n as u32);
        }
        let mut den = Rational::from(n as u32 + 1);
        for b in params.lower() {
            den *= Rational::from(b + n as u32);
        }
        let ratio = (ctx.float_from_rational(&num) / ctx.float_from_rational(&den) * radius)
            .abs();
        let next = (&term * &ratio).complete(prec);
        if n >= floor && ratio < 0.5 && next < threshold {
            return Ok(Some((n + 1).max(2)));
        }
        term = next;
    }
    Ok(None)
}

fn float_coeffs(params: &HyperParams, degree: usize, ctx: &PrecisionCtx) -> Result<Vec<Float>> {
    let series = crate::series::hyper_series(params, degree)?;
    Ok(series.coeffs().iter().map(|c| ctx.float_from_rational(c)).collect())
}

/// Aberth-Ehrlich simultaneous iteration at working precision.
fn aberth(coeffs: &[Float], ctx: &PrecisionCtx) -> Vec<Complex> {
    let prec = ctx.prec() + 64;
    let mut top = coeffs.len();
    while top > 1 && coeffs[top - 1].is_zero() {
        top -= 1;
    }
    let n = top - 1;
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<Float> = coeffs[..top].iter().map(|v| Float::with_val(prec, v)).collect();

    // initial guesses on a circle scaled by the geometric mean of root moduli
    let r0 = {
        let lead = c[n].clone().abs();
        let base = (Float::with_val(prec, 1) / lead).root(n as u32);
        base.max(&Float::with_val(prec, 0.5))
    };
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    let mut roots: Vec<Complex> = (0..n)
        .map(|k| {
            let theta = (2u32 * pi.clone() * Float::with_val(prec, k as u32)
                + Float::with_val(prec, 0.7))
                / Float::with_val(prec, n as u32);
            Complex::with_val(prec, (theta.clone().cos() * &r0, theta.sin() * &r0))
        })
        .collect();

    let stop = Float::with_val(prec, 2).pow(-((ctx.prec() as i32) - 8));
    for _ in 0..400 {
        let mut max_rel_step = Float::new(prec);
        for k in 0..n {
            let (pv, dv) = horner(&c, &roots[k], prec);
            if pv.is_zero() {
                continue;
            }
            let w = if dv.is_zero() {
                // nudge off a critical point
                Complex::with_val(prec, (1e-8, 1e-8))
            } else {
                pv / dv
            };
            let mut inv_sum = Complex::new(prec);
            for j in 0..n {
                if j != k {
                    let diff = (&roots[k] - &roots[j]).complete((prec, prec));
                    if !diff.is_zero() {
                        inv_sum += Complex::with_val(prec, 1) / diff;
                    }
                }
            }
            let denom = Complex::with_val(prec, 1) - (&w * &inv_sum).complete((prec, prec));
            let step = if denom.is_zero() { w } else { w / denom };
            let rel = cabs(&step, prec) / cabs(&roots[k], prec).max(&Float::with_val(prec, 1));
            if rel > max_rel_step {
                max_rel_step = rel;
            }
            roots[k] -= step;
        }
        if max_rel_step < stop {
            break;
        }
    }
    roots
}

/// Polynomial value and derivative at `z` by a joint Horner pass.
fn horner(coeffs: &[Float], z: &Complex, prec: u32) -> (Complex, Complex) {
    let n = coeffs.len() - 1;
    let mut b = Complex::with_val(prec, (&coeffs[n], &Float::new(prec)));
    let mut d = Complex::new(prec);
    for i in (0..n).rev() {
        d = d * z + &b;
        b = b * z + Complex::with_val(prec, (&coeffs[i], &Float::new(prec)));
    }
    (b, d)
}

/// Full-series value and derivative at a complex point, summed until the
/// terms are negligible against the largest partials.
fn series_value_derivative(
    params: &HyperParams,
    z: &Complex,
    ctx: &PrecisionCtx,
) -> Result<(Complex, Complex)> {
    let prec = ctx.prec() + 64;
    let mut f = Complex::new(prec);
    let mut df = Complex::new(prec);
    let mut term = Complex::with_val(prec, 1); // c_n z^n
    let mut coeff = Rational::from(1);
    let mut zpow_prev = Complex::with_val(prec, 1); // z^{n-1}
    let tiny = Float::with_val(prec, 2).pow(-(prec as i32 - 24));
    let mut peak_f = Float::new(prec);
    let mut peak_df = Float::new(prec);
    let mut quiet = 0;

    for n in 0..ctx.max_terms() {
        f += &term;
        if n >= 1 {
            let dterm = (&zpow_prev * Float::with_val(prec, n as u32)).complete((prec, prec))
                * Complex::with_val(prec, (&ctx.float_from_rational(&coeff), &Float::new(prec)));
            df += dterm;
            zpow_prev = (&zpow_prev * z).complete((prec, prec));
        }
        peak_f = peak_f.max(&cabs(&f, prec));
        peak_df = peak_df.max(&cabs(&df, prec));

        let mut num = Rational::from(1);
        for a in params.upper() {
            num *= Rational::from(a + n as u32);
        }
        if num == 0 {
            return Ok((f, df)); // polynomial: done exactly
        }
        let mut den = Rational::from(n as u32 + 1);
        for b in params.lower() {
            den *= Rational::from(b + n as u32);
        }
        coeff *= &num;
        coeff /= &den;
        let ratio = ctx.float_from_rational(&Rational::from(num / den));
        term = term * z
            * Complex::with_val(prec, (&Float::with_val(prec, ratio), &Float::new(prec)));

        let t = cabs(&term, prec);
        if n > 8
            && t < (&tiny * &peak_f).complete(prec)
            && t < (&tiny * &peak_df.clone().max(&Float::with_val(prec, 1))).complete(prec)
        {
            quiet += 1;
            if quiet >= 3 {
                return Ok((f, df));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Convergence { terms: ctx.max_terms() })
}

fn refine_and_collect(
    params: &HyperParams,
    candidates: Vec<Complex>,
    degree: usize,
    keep_smallest: Option<usize>,
    ctx: &PrecisionCtx,
) -> Result<ZeroSet> {
    let prec = ctx.prec();
    let newton_stop = Float::with_val(prec, 2).pow(-((prec as i32) - 16));
    let residual_tol = Float::with_val(prec, 10).pow(-30);

    let mut accepted: Vec<(Complex, Float)> = Vec::new();
    let mut rejected = Vec::new();

    'cand: for start in candidates {
        let mut z = Complex::with_val(prec, &start);
        let mut fz = Complex::new(prec);
        let mut dz = Complex::new(prec);
        for _ in 0..80 {
            let (f, d) = series_value_derivative(params, &z, ctx)?;
            fz = Complex::with_val(prec, &f);
            dz = Complex::with_val(prec, &d);
            if dz.is_zero() {
                break;
            }
            let step = (&fz / &dz).complete((prec, prec));
            let rel = cabs(&step, prec) / cabs(&z, prec).max(&Float::with_val(prec, 1));
            z -= step;
            if rel < newton_stop {
                let (f, d) = series_value_derivative(params, &z, ctx)?;
                fz = Complex::with_val(prec, &f);
                dz = Complex::with_val(prec, &d);
                break;
            }
        }

        let residual = cabs(&fz, prec);
        let scale = (cabs(&dz, prec) * cabs(&z, prec)).max(&Float::with_val(prec, 1));
        if residual >= Float::with_val(prec, &residual_tol * &scale) {
            rejected.push((z, residual));
            continue;
        }

        // merge with an already-accepted zero if indistinguishable
        let merge_tol = Float::with_val(prec, 10).pow(-((ctx.digits() as i32) - 15));
        for (w, _) in &accepted {
            let dist = cabs(&(&z - w).complete((prec, prec)), prec);
            let bound = (&merge_tol * &cabs(w, prec).max(&Float::with_val(prec, 1))).complete(prec);
            if dist < bound {
                continue 'cand;
            }
        }
        accepted.push((z, residual));
    }

    // deterministic order: by modulus, ties by imaginary part
    accepted.sort_by(|(a, _), (b, _)| {
        let ma = cabs(a, prec);
        let mb = cabs(b, prec);
        ma.partial_cmp(&mb)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.imag().partial_cmp(b.imag()).unwrap_or(std::cmp::Ordering::Equal))
    });
    if let Some(k) = keep_smallest {
        accepted.truncate(k);
    }

    let (zeros, residuals) = accepted.into_iter().unzip();
    Ok(ZeroSet { zeros, residuals, truncation_degree: degree, rejected })
}
