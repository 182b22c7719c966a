//! Exact rational series machinery: Pochhammer symbols, hypergeometric
//! Taylor coefficients and truncated Cauchy products.

use crate::error::{Error, Result};
use crate::params::HyperParams;
use rug::{Integer, Rational};

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, exact; `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::from(1);
    let mut factor = a.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += 1;
    }
    acc
}

/// Product of rising factorials over a parameter vector.
pub fn pochhammer_vec(values: &[Rational], n: u32) -> Rational {
    let mut acc = Rational::from(1);
    for v in values {
        acc *= pochhammer(v, n);
    }
    acc
}

/// Taylor coefficient `(a)_n / ((b)_n n!)` of the hypergeometric series.
pub fn series_coeff(params: &HyperParams, n: u32) -> Result<Rational> {
    let den_poch = pochhammer_vec(params.lower(), n);
    if den_poch == 0 {
        return Err(Error::Pole(format!(
            "lower parameter Pochhammer vanished at order {n}"
        )));
    }
    let mut c = pochhammer_vec(params.upper(), n);
    c /= den_poch;
    c /= Rational::from(Integer::factorial(n));
    Ok(c)
}

/// A truncated power series with exact rational coefficients `c_0 ... c_M`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSeries {
    coeffs: Vec<Rational>,
}

impl ExactSeries {
    /// Coefficients `c_0..c_M`; at least the constant term must be present.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Dimension("a series needs at least the constant term".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::new(); order + 1] }
    }

    /// Truncation order `M` (the series holds `M + 1` coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Exact difference, truncated to the shorter order.
    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| Rational::from(&self.coeffs[i] - &rhs.coeffs[i]))
            .collect();
        Self { coeffs }
    }

    /// Multiply every coefficient by an exact factor.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| Rational::from(c * factor)).collect() }
    }
}

/// Exact Cauchy product truncated to the shorter of the two orders.
pub fn exact_product_series(s1: &ExactSeries, s2: &ExactSeries) -> ExactSeries {
    let order = s1.order().min(s2.order());
    let mut coeffs = vec![Rational::new(); order + 1];
    for (i, a) in s1.coeffs.iter().take(order + 1).enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in s2.coeffs.iter().take(order + 1 - i).enumerate() {
            coeffs[i + j] += Rational::from(a * b);
        }
    }
    ExactSeries { coeffs }
}

/// The hypergeometric Taylor series of `params` truncated at `order`.
pub fn hyper_series(params: &HyperParams, order: usize) -> Result<ExactSeries> {
    // incremental ratio c_{n+1} = c_n * prod(a+n) / (prod(b+n) (n+1))
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::from(1);
    coeffs.push(c.clone());
    for n in 0..order as u32 {
        let mut num = Rational::from(1);
        for a in params.upper() {
            num *= Rational::from(a + n);
        }
        let mut den = Rational::from(n + 1);
        for b in params.lower() {
            let f = Rational::from(b + n);
            if f == 0 {
                return Err(Error::Pole(format!(
                    "lower parameter {b} hits zero at series order {n}"
                )));
            }
            den *= f;
        }
        c *= num;
        c /= den;
        coeffs.push(c.clone());
    }
    Ok(ExactSeries { coeffs })
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

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat("2"), 3), rat("24"));
        assert_eq!(pochhammer(&rat("-7/3"), 0), rat("1"));
        assert_eq!(pochhammer(&rat("1/2"), 2), rat("3/4"));
    }

    #[test]
    fn series_coeff_examples() {
        // a=(1), b=(1): reduces to 1/n!
        assert_eq!(series_coeff(&params("1", "1"), 4).unwrap(), rat("1/24"));
        // empty: exp series
        assert_eq!(series_coeff(&params("", ""), 3).unwrap(), rat("1/6"));
        // (2)_2 / ((3)_2 2!) = 6/24
        assert_eq!(series_coeff(&params("2", "3"), 2).unwrap(), rat("1/4"));
    }

    #[test]
    fn series_coeff_ratio_identity() {
        let p = params("1/2,3", "5/3");
        for n in 0..12u32 {
            let lhs = Rational::from(
                &series_coeff(&p, n + 1).unwrap() / &series_coeff(&p, n).unwrap(),
            );
            let mut rhs = Rational::from(1);
            for a in p.upper() {
                rhs *= Rational::from(a + n);
            }
            for b in p.lower() {
                rhs /= Rational::from(b + n);
            }
            rhs /= Rational::from(n + 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn product_examples() {
        // exp * exp = e^{2x}: coefficients 1, 2, 2, 4/3
        let e = hyper_series(&params("", ""), 3).unwrap();
        let sq = exact_product_series(&e, &e);
        assert_eq!(sq.coeffs(), &[rat("1"), rat("2"), rat("2"), rat("4/3")]);

        // identity element
        let one = ExactSeries::new(vec![rat("1"), rat("0"), rat("0"), rat("0")]).unwrap();
        assert_eq!(exact_product_series(&e, &one), e);

        // (1 + x)(1 - x) truncated at order 1 = 1 + 0 x
        let a = ExactSeries::new(vec![rat("1"), rat("1")]).unwrap();
        let b = ExactSeries::new(vec![rat("1"), rat("-1")]).unwrap();
        assert_eq!(exact_product_series(&a, &b).coeffs(), &[rat("1"), rat("0")]);
    }

    #[test]
    fn hyper_series_matches_direct_coefficients() {
        let p = params("1,5/2", "2,1/3");
        let s = hyper_series(&p, 10).unwrap();
        for n in 0..=10u32 {
            assert_eq!(*s.coeff(n as usize), series_coeff(&p, n).unwrap());
        }
    }

    #[test]
    fn terminating_series_produces_zero_tail() {
        let p = params("-2", "1");
        let s = hyper_series(&p, 6).unwrap();
        assert_ne!(*s.coeff(2), 0);
        for n in 3..=6 {
            assert_eq!(*s.coeff(n), 0);
        }
    }
}
