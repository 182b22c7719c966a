//! Working-precision context for all floating evaluations.

use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Float, Rational};

/// Decimal digits of working precision, target relative error and a cap on
/// series terms. Everything floating in this crate derives its MPFR precision
/// from one of these.
#[derive(Debug, Clone)]
pub struct PrecisionCtx {
    digits: u32,
    eps: Float,
    max_terms: usize,
}

impl Default for PrecisionCtx {
    /// 50 digits, eps = 1e-30, at most 100_000 series terms.
    fn default() -> Self {
        Self::new(50, 30, 100_000).expect("default context is valid")
    }
}

impl PrecisionCtx {
    /// `eps = 10^-eps_pow10`. Requires `digits >= 15`, `eps_pow10 >= 1`,
    /// `max_terms >= 100`.
    pub fn new(digits: u32, eps_pow10: u32, max_terms: usize) -> Result<Self> {
        if digits < 15 {
            return Err(Error::Config(format!("digits must be >= 15, got {digits}")));
        }
        if eps_pow10 < 1 {
            return Err(Error::Config("eps must lie in (0,1)".into()));
        }
        if max_terms < 100 {
            return Err(Error::Config(format!(
                "max_terms must be >= 100, got {max_terms}"
            )));
        }
        let prec = Self::bits_for(digits);
        let eps = Float::with_val(prec, 10).pow(-(eps_pow10 as i32));
        Ok(Self { digits, eps, max_terms })
    }

    /// Working digits with the default eps exponent `digits - 20` (so the
    /// spec default 50 digits pairs with eps = 1e-30), floored at 1e-15.
    pub fn with_digits(digits: u32) -> Result<Self> {
        let pow = digits.saturating_sub(20).max(15);
        Self::new(digits, pow, 100_000)
    }

    fn bits_for(digits: u32) -> u32 {
        // log2(10) = 3.3219..., plus guard bits for intermediate rounding
        (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn eps(&self) -> &Float {
        &self.eps
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// MPFR precision in bits.
    pub fn prec(&self) -> u32 {
        Self::bits_for(self.digits)
    }

    /// Context with twice the digits (and squared eps) for recomputation checks.
    pub fn doubled(&self) -> Self {
        let prec = Self::bits_for(self.digits * 2);
        let eps = Float::with_val(prec, self.eps.clone().square());
        Self { digits: self.digits * 2, eps, max_terms: self.max_terms }
    }

    pub fn float_zero(&self) -> Float {
        Float::new(self.prec())
    }

    pub fn float_from<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.prec(), v)
    }

    pub fn float_from_rational(&self, r: &Rational) -> Float {
        Float::with_val(self.prec(), r)
    }

    /// Parse a decimal string at working precision.
    pub fn parse_float(&self, s: &str) -> Result<Float> {
        Float::parse(s)
            .map(|v| Float::with_val(self.prec(), v))
            .map_err(|e| Error::Config(format!("bad float {s:?}: {e}")))
    }
}

/// Map non-finite values to `Error::Numeric` so NaN never escapes an operation.
pub fn finite(value: Float, what: &str) -> Result<Float> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Numeric(format!("{what} produced a non-finite value")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_matches_documented_values() {
        let ctx = PrecisionCtx::default();
        assert_eq!(ctx.digits(), 50);
        assert_eq!(ctx.max_terms(), 100_000);
        let e30 = ctx.float_from(10).pow(-30);
        assert_eq!(*ctx.eps(), e30);
    }

    #[test]
    fn invariants_enforced() {
        assert!(PrecisionCtx::new(14, 30, 1000).is_err());
        assert!(PrecisionCtx::new(50, 0, 1000).is_err());
        assert!(PrecisionCtx::new(50, 30, 99).is_err());
    }

    #[test]
    fn nan_is_mapped_to_error() {
        let ctx = PrecisionCtx::default();
        let nan = ctx.float_from(f64::NAN);
        assert!(finite(nan, "test").is_err());
        assert!(finite(ctx.float_from(1), "test").is_ok());
    }
}
