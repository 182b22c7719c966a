//! The generalized Turanian `f(mu+alpha)f(mu+beta) - f(mu)f(mu+alpha+beta)`
//! built from the gamma-weighted shifted hypergeometric function: floating
//! evaluation for arbitrary shifts, exact rational power-series coefficients
//! for integer `alpha` (two independent routes), and verifiers for the
//! two-sided bound and the coefficient-sign claims.

use crate::conditions::{
    esp_chain_decr, esp_chain_incr, muntz_nonneg, rpq_eval_exact, theorem2_case, EspChainVerdict,
    MuntzVerdict, Theorem2Case, MUNTZ_DEFAULT_GRID,
};
use crate::error::{Error, Result};
use crate::eval::eval_shifted;
use crate::params::{format_rational_list, HyperParams};
use crate::precision::{finite, PrecisionCtx};
use crate::series::{exact_product_series, hyper_series, pochhammer, ExactSeries};
use rug::ops::CompleteRound;
use rug::{Float, Integer, Rational};

/// The nonnegative shift triple `(mu, alpha, beta)`. The exact coefficient
/// path additionally needs `alpha` to be a positive integer.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftSpec {
    mu: Rational,
    alpha: Rational,
    beta: Rational,
}

impl ShiftSpec {
    pub fn new(mu: Rational, alpha: Rational, beta: Rational) -> Result<Self> {
        for (name, v) in [("mu", &mu), ("alpha", &alpha), ("beta", &beta)] {
            if *v < 0 {
                return Err(Error::Domain(format!("shift {name} = {v} must be nonnegative")));
            }
        }
        Ok(Self { mu, alpha, beta })
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `alpha` as a positive integer, when it is one.
    pub fn integer_alpha(&self) -> Option<u32> {
        if self.alpha.is_integer() && self.alpha > 0 {
            self.alpha.numer().to_u32()
        } else {
            None
        }
    }

    pub fn swapped(&self) -> Self {
        Self { mu: self.mu.clone(), alpha: self.beta.clone(), beta: self.alpha.clone() }
    }
}

/// `f(mu+alpha)f(mu+beta) - f(mu)f(mu+alpha+beta)` at `x`, floating.
pub fn delta_f(
    params: &HyperParams,
    shifts: &ShiftSpec,
    x: &Float,
    ctx: &PrecisionCtx,
) -> Result<Float> {
    let prec = ctx.prec();
    let at = |nu: Rational| -> Result<Float> {
        eval_shifted(params, &ctx.float_from_rational(&nu), x, ctx)
    };
    let f_a = at(Rational::from(&shifts.mu + &shifts.alpha))?;
    let f_b = at(Rational::from(&shifts.mu + &shifts.beta))?;
    let f_0 = at(shifts.mu.clone())?;
    let f_ab = at(Rational::from(&shifts.mu + &shifts.alpha) + &shifts.beta)?;
    finite(
        Float::with_val(prec, &f_a * &f_b) - Float::with_val(prec, &f_0 * &f_ab),
        "turanian",
    )
}

/// The positive factor `Gamma(a+mu)/Gamma(b+mu) * Gamma(a+mu+beta)/Gamma(b+mu+beta)`
/// divided out of the Turanian so that the series coefficients are rational.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingFactor {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub mu: Rational,
    pub beta: Rational,
}

impl std::fmt::Display for ScalingFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "G({a};{mu})*G({a};{mb})/(G({b};{mu})*G({b};{mb})) with G(v;s) = prod Gamma(v_k+s)",
            a = format_rational_list(&self.upper),
            b = format_rational_list(&self.lower),
            mu = self.mu,
            mb = Rational::from(&self.mu + &self.beta),
        )
    }
}

/// Exact rational coefficients of the Turanian divided by the (positive)
/// scaling factor; their signs agree with the unscaled coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledTuranian {
    pub coeffs: ExactSeries,
    pub scaling: ScalingFactor,
}

fn require_all_shifted(params: &HyperParams) -> Result<()> {
    if !params.a1().is_empty() || !params.b1().is_empty() {
        return Err(Error::Domain(
            "exact coefficients require every parameter to be shifted (no fixed block)".into(),
        ));
    }
    Ok(())
}

fn require_positive_scaling(params: &HyperParams, mu: &Rational) -> Result<()> {
    for v in params.upper().iter().chain(params.lower().iter()) {
        if Rational::from(v + mu) <= 0 {
            return Err(Error::Domain(format!(
                "scaling factor not provably positive: {v} + {mu} <= 0"
            )));
        }
    }
    Ok(())
}

fn shifted_params(params: &HyperParams, nu: &Rational) -> Result<HyperParams> {
    HyperParams::new(
        params.upper().iter().map(|a| Rational::from(a + nu)).collect(),
        params.lower().iter().map(|b| Rational::from(b + nu)).collect(),
    )
}

/// Vector Pochhammer ratio `(a+nu)_alpha / (b+nu)_alpha`.
fn poch_ratio(params: &HyperParams, nu: &Rational, alpha: u32) -> Result<Rational> {
    let mut num = Rational::from(1);
    for a in params.upper() {
        num *= pochhammer(&Rational::from(a + nu), alpha);
    }
    let mut den = Rational::from(1);
    for b in params.lower() {
        let f = pochhammer(&Rational::from(b + nu), alpha);
        if f == 0 {
            return Err(Error::Pole(format!("({b} + {nu})_{alpha} vanished")));
        }
        den *= f;
    }
    Ok(num / den)
}

/// Exact coefficients via truncated Cauchy products:
/// `T = (a+mu)_alpha/(b+mu)_alpha F(mu+alpha)F(mu+beta)
///      - (a+mu+beta)_alpha/(b+mu+beta)_alpha F(mu)F(mu+alpha+beta)`
/// where `F` is the bare hypergeometric series of the shifted parameters.
pub fn delta_coeffs_exact(
    params: &HyperParams,
    shifts: &ShiftSpec,
    order: usize,
) -> Result<ScaledTuranian> {
    require_all_shifted(params)?;
    require_positive_scaling(params, &shifts.mu)?;
    let alpha = shifts
        .integer_alpha()
        .ok_or_else(|| Error::Domain(format!(
            "exact coefficients need a positive integer alpha, got {}",
            shifts.alpha
        )))?;

    let mu = &shifts.mu;
    let beta = &shifts.beta;
    let mu_beta = Rational::from(mu + beta);
    let mu_alpha = Rational::from(mu + &shifts.alpha);
    let mu_all = Rational::from(&mu_alpha + beta);

    let f_alpha = hyper_series(&shifted_params(params, &mu_alpha)?, order)?;
    let f_beta = hyper_series(&shifted_params(params, &mu_beta)?, order)?;
    let f_base = hyper_series(&shifted_params(params, mu)?, order)?;
    let f_all = hyper_series(&shifted_params(params, &mu_all)?, order)?;

    let r1 = poch_ratio(params, mu, alpha)?;
    let r2 = poch_ratio(params, &mu_beta, alpha)?;

    let first = exact_product_series(&f_alpha, &f_beta).scale(&r1);
    let second = exact_product_series(&f_base, &f_all).scale(&r2);
    let coeffs = first.sub(&second);

    Ok(ScaledTuranian {
        coeffs,
        scaling: ScalingFactor {
            upper: params.upper().to_vec(),
            lower: params.lower().to_vec(),
            mu: mu.clone(),
            beta: beta.clone(),
        },
    })
}

/// Independent route for `alpha = 1`: the binomial Gauss-paired sum with each
/// bracket factored through products of the rational function
/// `R(x) = prod(a_k+x)/prod(b_k+x)`. Oracles [`delta_coeffs_exact`].
pub fn delta_coeffs_pairing(
    params: &HyperParams,
    mu: &Rational,
    beta: &Rational,
    order: usize,
) -> Result<ExactSeries> {
    require_all_shifted(params)?;
    let shifts = ShiftSpec::new(mu.clone(), Rational::from(1), beta.clone())?;
    require_positive_scaling(params, &shifts.mu)?;

    let a = params.upper();
    let b = params.lower();
    let mu_beta = Rational::from(mu + beta);

    let mut coeffs = Vec::with_capacity(order + 1);
    let mut m_factorial = Integer::from(1);
    for m in 1..=(order as u32 + 1) {
        m_factorial *= m;
        let mut sum = Rational::new();
        for k in 0..=(m / 2) {
            if m == 2 * k {
                // the unpaired middle term carries the factor m - 2k = 0
                continue;
            }
            // common factor (a+mu)_k (a+mu+beta)_k / ((b+mu)_k (b+mu+beta)_k)
            let mut common = Rational::from(1);
            for ai in a {
                common *= pochhammer(&Rational::from(ai + mu), k);
                common *= pochhammer(&Rational::from(ai + &mu_beta), k);
            }
            for bi in b {
                let f1 = pochhammer(&Rational::from(bi + mu), k);
                let f2 = pochhammer(&Rational::from(bi + &mu_beta), k);
                if f1 == 0 || f2 == 0 {
                    return Err(Error::Pole(format!("lower Pochhammer vanished at k = {k}")));
                }
                common /= f1;
                common /= f2;
            }

            // prod_{j=k}^{m-k-1} R(mu+j) - prod R(mu+beta+j)
            let mut prod_mu = Rational::from(1);
            let mut prod_mu_beta = Rational::from(1);
            for j in k..(m - k) {
                prod_mu *= rpq_eval_exact(a, b, &Rational::from(mu + j))?;
                prod_mu_beta *= rpq_eval_exact(a, b, &Rational::from(&mu_beta + j))?;
            }

            let binom = Rational::from(Integer::from(m).binomial(k));
            let weight = binom * Rational::from(m - 2 * k);
            sum += weight * common * (prod_mu - prod_mu_beta);
        }
        coeffs.push(sum / Rational::from(&m_factorial));
    }
    ExactSeries::new(coeffs)
}

/// Floating coefficients of the (unscaled) Turanian for arbitrary real
/// shifts, with per-order magnitude scales for tolerance decisions. Supports
/// split parameters: the fixed block contributes an exact rational factor per
/// order, the shifted block a gamma ratio.
#[derive(Debug, Clone)]
pub struct FloatCoeffs {
    pub coeffs: Vec<Float>,
    /// Sum of absolute values of the convolution terms per order.
    pub scales: Vec<Float>,
}

pub fn delta_coeffs_float(
    params: &HyperParams,
    shifts: &ShiftSpec,
    order: usize,
    ctx: &PrecisionCtx,
) -> Result<FloatCoeffs> {
    for v in params.a2().iter().chain(params.b2().iter()) {
        if Rational::from(v + &shifts.mu) <= 0 {
            return Err(Error::Domain(format!("{v} + mu must be positive")));
        }
    }
    let prec = ctx.prec();

    // fixed-block factor (a1)_n / ((b1)_n n!) as exact rationals
    let mut fixed = Vec::with_capacity(order + 1);
    let mut c = Rational::from(1);
    fixed.push(c.clone());
    for n in 0..order as u32 {
        let mut num = Rational::from(1);
        for a in params.a1() {
            num *= Rational::from(a + n);
        }
        let mut den = Rational::from(n + 1);
        for b in params.b1() {
            let f = Rational::from(b + n);
            if f == 0 {
                return Err(Error::Pole(format!("fixed lower parameter {b} hits zero")));
            }
            den *= f;
        }
        c *= num;
        c /= den;
        fixed.push(c.clone());
    }

    // gamma part per shift: prod Gamma(a2+nu+n) / prod Gamma(b2+nu+n)
    let table = |nu: Rational| -> Vec<Float> {
        (0..=order)
            .map(|n| {
                let mut lg = Float::new(prec);
                for a in params.a2() {
                    let arg = ctx.float_from_rational(&Rational::from(a + &nu)) + n as u32;
                    lg += arg.ln_gamma();
                }
                for b in params.b2() {
                    let arg = ctx.float_from_rational(&Rational::from(b + &nu)) + n as u32;
                    lg -= arg.ln_gamma();
                }
                lg.exp() * ctx.float_from_rational(&fixed[n])
            })
            .collect()
    };

    let g_alpha = table(Rational::from(&shifts.mu + &shifts.alpha));
    let g_beta = table(Rational::from(&shifts.mu + &shifts.beta));
    let g_base = table(shifts.mu.clone());
    let g_all = table(Rational::from(&shifts.mu + &shifts.alpha) + &shifts.beta);

    let mut coeffs = Vec::with_capacity(order + 1);
    let mut scales = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut d = Float::new(prec);
        let mut s = Float::new(prec);
        for k in 0..=m {
            let t1 = (&g_alpha[k] * &g_beta[m - k]).complete(prec);
            let t2 = (&g_base[k] * &g_all[m - k]).complete(prec);
            s += t1.clone().abs() + t2.clone().abs();
            d += t1 - t2;
        }
        coeffs.push(finite(d, "float coefficient")?);
        scales.push(s);
    }
    Ok(FloatCoeffs { coeffs, scales })
}

/// Which sign a theorem predicts for the Turanian and its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictedSign {
    NonNegative,
    NonPositive,
}

impl PredictedSign {
    /// `value` violates the prediction beyond `margin`.
    pub fn violated(&self, value: &Float, margin: &Float) -> bool {
        match self {
            PredictedSign::NonNegative => value.clone() < -margin.clone(),
            PredictedSign::NonPositive => value.clone() > margin.clone(),
        }
    }

    pub fn violated_exact(&self, value: &Rational) -> bool {
        match self {
            PredictedSign::NonNegative => *value < 0,
            PredictedSign::NonPositive => *value > 0,
        }
    }
}

impl std::fmt::Display for PredictedSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PredictedSign::NonNegative => write!(f, ">=0"),
            PredictedSign::NonPositive => write!(f, "<=0"),
        }
    }
}

/// Outcome of the two-sided bound check
/// `0 <= f(mu)f(mu+alpha+beta) - f(mu+alpha)f(mu+beta) <= f(mu)^2 / 4`.
#[derive(Debug, Clone)]
pub struct Theorem1Verdict {
    pub holds: bool,
    pub lower_holds: bool,
    /// Present only when `p2 = q2` (the upper bound needs it).
    pub upper_holds: Option<bool>,
    pub neg_delta: Float,
    pub f_mu_squared: Float,
    /// `(-Delta) / f(mu)^2`, recorded so the sharpness of the 1/4 constant
    /// can be studied across runs.
    pub observed_ratio: Float,
    pub case_used: Theorem2Case,
    pub muntz_subset: Vec<Rational>,
}

fn subsets_of_size(v: &[Rational], k: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let n = v.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| v[i].clone()).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Check the hypotheses of the two-sided bound, then evaluate both sides.
pub fn verify_theorem1(
    params: &HyperParams,
    shifts: &ShiftSpec,
    x: &Float,
    ctx: &PrecisionCtx,
) -> Result<Theorem1Verdict> {
    let p1 = params.a1().len();
    let q1 = params.b1().len();
    let p2 = params.a2().len();
    let q2 = params.b2().len();

    if p2 == 0 {
        return Err(Error::Hypothesis("the shifted block a2 must be nonempty".into()));
    }
    if p1 > q1 + 1 {
        return Err(Error::Hypothesis(format!("p1 = {p1} exceeds q1 + 1 = {}", q1 + 1)));
    }
    if q2 > p2 {
        return Err(Error::Hypothesis(format!("q2 = {q2} exceeds p2 = {p2}")));
    }
    if params.p() > params.q() + 1 {
        return Err(Error::Hypothesis(format!(
            "p = {} exceeds q + 1 = {}",
            params.p(),
            params.q() + 1
        )));
    }
    if params.p() == params.q() + 1 && !(x.clone().abs() < 1) {
        return Err(Error::Hypothesis("p = q + 1 requires |x| < 1".into()));
    }
    if params.a2().iter().any(|v| *v <= 0) {
        return Err(Error::Hypothesis("a2 must be positive".into()));
    }

    // some subset a2' of size q2 with v_{a2',b2} >= 0 on [0,1]
    let mut muntz_subset = None;
    for cand in subsets_of_size(params.a2(), q2) {
        if cand.iter().any(|v| *v <= 0) || params.b2().iter().any(|v| *v <= 0) {
            continue;
        }
        if let MuntzVerdict::VerifiedNonneg = muntz_nonneg(&cand, params.b2(), MUNTZ_DEFAULT_GRID, ctx)? {
            muntz_subset = Some(cand);
            break;
        }
    }
    let muntz_subset = muntz_subset.ok_or_else(|| {
        Error::Hypothesis("no q2-subset a2' of a2 has v_{a2',b2} >= 0 on [0,1]".into())
    })?;

    // positivity of the fixed block via any matching case
    let mut case_used = None;
    for case in [Theorem2Case::A, Theorem2Case::B, Theorem2Case::C, Theorem2Case::D] {
        match theorem2_case(case, params.a1(), params.b1(), x, ctx) {
            Ok(true) => {
                case_used = Some(case);
                break;
            }
            Ok(false) => {}
            Err(Error::Dimension(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let case_used = case_used.ok_or_else(|| {
        Error::Hypothesis("no positivity case certifies the fixed block at this x".into())
    })?;

    let prec = ctx.prec();
    let at = |nu: Rational| eval_shifted(params, &ctx.float_from_rational(&nu), x, ctx);
    let f_mu = at(shifts.mu.clone())?;
    let f_a = at(Rational::from(&shifts.mu + &shifts.alpha))?;
    let f_b = at(Rational::from(&shifts.mu + &shifts.beta))?;
    let f_ab = at(Rational::from(&shifts.mu + &shifts.alpha) + &shifts.beta)?;

    let prod_outer = Float::with_val(prec, &f_mu * &f_ab);
    let prod_inner = Float::with_val(prec, &f_a * &f_b);
    let neg_delta = finite(prod_outer.clone() - &prod_inner, "turanian")?;
    let f_mu_squared = Float::with_val(prec, &f_mu * &f_mu);

    let scale = prod_outer.clone().abs().max(&prod_inner.clone().abs()).max(&f_mu_squared);
    let tol = Float::with_val(prec, 10) * ctx.eps() * &scale;

    let lower_holds = neg_delta >= -tol.clone();
    let upper_holds = if p2 == q2 {
        let bound = f_mu_squared.clone() / 4u32 + &tol;
        Some(neg_delta <= bound)
    } else {
        None
    };
    let observed_ratio = if f_mu_squared.is_zero() {
        ctx.float_zero()
    } else {
        Float::with_val(prec, &neg_delta / &f_mu_squared)
    };

    Ok(Theorem1Verdict {
        holds: lower_holds && upper_holds.unwrap_or(true),
        lower_holds,
        upper_holds,
        neg_delta,
        f_mu_squared,
        observed_ratio,
        case_used,
        muntz_subset,
    })
}

/// Outcome of the coefficient-sign and grid-sign verification.
#[derive(Debug, Clone)]
pub struct Theorem3Verdict {
    pub holds: bool,
    pub predicted: PredictedSign,
    pub chain: EspChainVerdict,
    /// False when `alpha > beta + 1`, where the coefficient claim is not made.
    pub coeffs_checked: bool,
    pub coeffs_ok: bool,
    pub first_coeff_violation: Option<(usize, Rational)>,
    pub grid_ok: bool,
    pub first_grid_violation: Option<(Rational, Float)>,
}

/// Pick the applicable chain and predicted sign for the vector shapes.
pub fn predicted_sign(params: &HyperParams) -> Result<(PredictedSign, EspChainVerdict)> {
    let p = params.p();
    let q = params.q();
    if p <= q {
        let decr = esp_chain_decr(params.upper(), params.lower())?;
        if decr.holds {
            return Ok((PredictedSign::NonNegative, decr));
        }
    }
    if p >= q {
        let incr = esp_chain_incr(params.upper(), params.lower())?;
        if incr.holds {
            return Ok((PredictedSign::NonPositive, incr));
        }
    }
    Err(Error::Hypothesis(
        "neither symmetric-polynomial chain holds for these parameters".into(),
    ))
}

/// Exact coefficient signs for `m <= order` plus the Turanian sign on an
/// x-grid, against the chain-predicted direction.
pub fn verify_theorem3(
    params: &HyperParams,
    shifts: &ShiftSpec,
    order: usize,
    x_grid: &[Rational],
    ctx: &PrecisionCtx,
) -> Result<Theorem3Verdict> {
    require_all_shifted(params)?;
    if shifts.integer_alpha().is_none() {
        return Err(Error::Hypothesis(format!(
            "alpha must be a positive integer, got {}",
            shifts.alpha
        )));
    }
    let (predicted, chain) = predicted_sign(params)?;

    let coeffs_checked = shifts.alpha <= Rational::from(&shifts.beta + &Rational::from(1));
    let mut coeffs_ok = true;
    let mut first_coeff_violation = None;
    if coeffs_checked {
        let scaled = delta_coeffs_exact(params, shifts, order)?;
        for (m, c) in scaled.coeffs.coeffs().iter().enumerate() {
            if predicted.violated_exact(c) {
                coeffs_ok = false;
                first_coeff_violation = Some((m, c.clone()));
                break;
            }
        }
    }

    let mut grid_ok = true;
    let mut first_grid_violation = None;
    let prec = ctx.prec();
    for x in x_grid {
        if *x < 0 {
            return Err(Error::Hypothesis(format!("grid point {x} is negative")));
        }
        let xf = ctx.float_from_rational(x);
        let d = delta_f(params, shifts, &xf, ctx)?;
        let scale = {
            let f0 = eval_shifted(params, &ctx.float_from_rational(&shifts.mu), &xf, ctx)?;
            Float::with_val(prec, &f0 * &f0).abs().max(&d.clone().abs())
        };
        let margin = Float::with_val(prec, 10) * ctx.eps() * scale;
        if predicted.violated(&d, &margin) {
            grid_ok = false;
            first_grid_violation = Some((x.clone(), d));
            break;
        }
    }

    Ok(Theorem3Verdict {
        holds: (!coeffs_checked || coeffs_ok) && grid_ok,
        predicted,
        chain,
        coeffs_checked,
        coeffs_ok,
        first_coeff_violation,
        grid_ok,
        first_grid_violation,
    })
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

    fn shifts(mu: &str, alpha: &str, beta: &str) -> ShiftSpec {
        ShiftSpec::new(mu.parse().unwrap(), alpha.parse().unwrap(), beta.parse().unwrap()).unwrap()
    }

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::default()
    }

    #[test]
    fn shift_spec_rejects_negative() {
        assert!(ShiftSpec::new(
            "-1/2".parse().unwrap(),
            "1".parse().unwrap(),
            "0".parse().unwrap()
        )
        .is_err());
        assert_eq!(shifts("0", "2", "1").integer_alpha(), Some(2));
        assert_eq!(shifts("0", "1/2", "1").integer_alpha(), None);
    }

    #[test]
    fn turanian_vanishes_for_exp() {
        let c = ctx();
        let d = delta_f(&params("", ""), &shifts("1/3", "2/5", "3"), &c.float_from(1.7), &c)
            .unwrap();
        assert!(d.clone().abs() < c.float_from(1e-40), "got {d}");
    }

    #[test]
    fn turanian_vanishes_for_alpha_zero() {
        let c = ctx();
        let d = delta_f(&params("1", "2"), &shifts("1/2", "0", "2"), &c.float_from(1), &c).unwrap();
        assert!(d.clone().abs() < c.float_from(1e-40), "got {d}");
    }

    #[test]
    fn turanian_sign_for_increasing_chain() {
        // a=(1), b=(2): increasing chain holds, so Delta <= 0
        let c = ctx();
        let d = delta_f(&params("1", "2"), &shifts("0", "1", "1"), &c.float_from(1), &c).unwrap();
        assert!(d <= 0, "got {d}");
    }

    #[test]
    fn exact_coeffs_first_value() {
        // a=(1), b=(2), mu=0, alpha=beta=1: leading scaled coefficient -1/6
        let t = delta_coeffs_exact(&params("1", "2"), &shifts("0", "1", "1"), 5).unwrap();
        assert_eq!(*t.coeffs.coeff(0), "-1/6".parse::<Rational>().unwrap());
    }

    #[test]
    fn exact_coeffs_vanish_for_equal_vectors() {
        let t = delta_coeffs_exact(&params("2/3,4", "2/3,4"), &shifts("1/2", "2", "1"), 8).unwrap();
        assert!(t.coeffs.coeffs().iter().all(|c| *c == 0));
    }

    #[test]
    fn exact_coeffs_vanish_for_empty_params() {
        let t = delta_coeffs_exact(&params("", ""), &shifts("1", "3", "2"), 6).unwrap();
        assert!(t.coeffs.coeffs().iter().all(|c| *c == 0));
    }

    #[test]
    fn exact_requires_integer_alpha_and_positive_scaling() {
        assert!(matches!(
            delta_coeffs_exact(&params("1", "2"), &shifts("0", "1/2", "1"), 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            delta_coeffs_exact(&params("-3/2", "2"), &shifts("0", "1", "1"), 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pairing_route_first_value() {
        let s = delta_coeffs_pairing(
            &params("1", "2"),
            &"0".parse().unwrap(),
            &"1".parse().unwrap(),
            5,
        )
        .unwrap();
        assert_eq!(*s.coeff(0), "-1/6".parse::<Rational>().unwrap());
    }

    #[test]
    fn pairing_route_zero_for_equal_vectors() {
        let s = delta_coeffs_pairing(
            &params("3,1/2", "3,1/2"),
            &"1/4".parse().unwrap(),
            &"2".parse().unwrap(),
            6,
        )
        .unwrap();
        assert!(s.coeffs().iter().all(|c| *c == 0));
    }

    #[test]
    fn pairing_matches_exact_route() {
        for (u, l, mu, beta) in [
            ("1", "2", "0", "1"),
            ("1", "2", "1/2", "3"),
            ("2", "1", "0", "1"),
            ("1,2", "2,3", "1/3", "2"),
            ("5/2", "1/2,2", "1", "1/2"),
        ] {
            let p = params(u, l);
            let sh = shifts(mu, "1", beta);
            let exact = delta_coeffs_exact(&p, &sh, 16).unwrap();
            let paired =
                delta_coeffs_pairing(&p, &mu.parse().unwrap(), &beta.parse().unwrap(), 16).unwrap();
            assert_eq!(exact.coeffs.coeffs(), paired.coeffs(), "family {u};{l} mu={mu} beta={beta}");
        }
    }

    #[test]
    fn float_coeffs_track_exact_scaled() {
        // compare sign and ratio: float (unscaled) = exact (scaled) * positive factor
        let c = ctx();
        let p = params("1", "2");
        let sh = shifts("1/2", "1", "2");
        let exact = delta_coeffs_exact(&p, &sh, 10).unwrap();
        let float = delta_coeffs_float(&p, &sh, 10, &c).unwrap();
        for m in 0..=10 {
            let e = exact.coeffs.coeff(m);
            let f = &float.coeffs[m];
            if *e == 0 {
                assert!(f.clone().abs() < c.float_from(1e-40));
            } else {
                assert_eq!(*e < 0, *f < 0, "sign mismatch at order {m}");
            }
        }
    }

    #[test]
    fn theorem3_incr_family() {
        let c = ctx();
        let grid: Vec<Rational> = ["0", "1/2", "1", "2"].iter().map(|s| s.parse().unwrap()).collect();
        let v = verify_theorem3(&params("1", "2"), &shifts("1/2", "1", "3"), 30, &grid, &c).unwrap();
        assert_eq!(v.predicted, PredictedSign::NonPositive);
        assert!(v.coeffs_checked && v.coeffs_ok && v.grid_ok && v.holds);
    }

    #[test]
    fn theorem3_decr_family() {
        let c = ctx();
        let grid: Vec<Rational> = ["0", "1", "3"].iter().map(|s| s.parse().unwrap()).collect();
        let v = verify_theorem3(&params("2", "1"), &shifts("0", "1", "1"), 30, &grid, &c).unwrap();
        assert_eq!(v.predicted, PredictedSign::NonNegative);
        assert!(v.holds);
    }

    #[test]
    fn theorem3_rejects_fractional_alpha() {
        let c = ctx();
        assert!(matches!(
            verify_theorem3(&params("1", "2"), &shifts("0", "1/2", "1"), 10, &[], &c),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn theorem1_on_equal_length_family() {
        // qFq form of the log-convexity families: both bounds apply
        let c = ctx();
        let p = HyperParams::with_split(
            vec![],
            parse_rational_list("1,2").unwrap(),
            vec![],
            parse_rational_list("2,3").unwrap(),
        )
        .unwrap();
        let v = verify_theorem1(&p, &shifts("1/2", "2/3", "5/4"), &c.float_from(-2), &c).unwrap();
        assert!(v.lower_holds);
        assert_eq!(v.upper_holds, Some(true));
        assert!(v.holds);
        assert_eq!(v.case_used, Theorem2Case::C);
    }

    #[test]
    fn theorem1_rejects_empty_shifted_block() {
        let c = ctx();
        let p = params("", "");
        assert!(matches!(
            verify_theorem1(&p, &shifts("0", "1", "1"), &c.float_from(0.5), &c),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn theorem1_alpha_to_zero_tightens_lower_bound() {
        let c = ctx();
        let p = HyperParams::with_split(
            vec![],
            parse_rational_list("1").unwrap(),
            vec![],
            parse_rational_list("2").unwrap(),
        )
        .unwrap();
        let v = verify_theorem1(&p, &shifts("1/2", "0", "1"), &c.float_from(0.3), &c).unwrap();
        assert!(v.lower_holds);
        assert!(v.neg_delta.clone().abs() < c.float_from(1e-40));
    }

    #[test]
    fn subset_enumeration() {
        let v: Vec<Rational> = parse_rational_list("1,2,3").unwrap();
        let subs = subsets_of_size(&v, 2);
        assert_eq!(subs.len(), 3);
        let all = subsets_of_size(&v, 3);
        assert_eq!(all.len(), 1);
        let none = subsets_of_size(&v, 0);
        assert_eq!(none.len(), 1);
        assert!(none[0].is_empty());
    }
}
