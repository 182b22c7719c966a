//! Extended Laguerre operators, the classical Laguerre inequality, the
//! parameter-matching membership test for real entire functions with only
//! real zeros, and a desk-scale zero finder.

mod zeros;

pub use zeros::{
    check_zeros_real_negative, find_zeros, truncated_roots, RealNegVerdict, ZeroSearch, ZeroSet,
};

use crate::error::Result;
use crate::eval::derivative_table;
use crate::params::HyperParams;
use crate::precision::{finite, PrecisionCtx};
use rug::ops::CompleteRound;
use rug::{Float, Integer, Rational};

/// The operators below are alternating bilinear forms whose terms can dwarf
/// the result; their derivative tables are evaluated with the series target
/// pushed to the precision floor so the cancellation error stays at the
/// rounding level of `ctx.digits()` rather than at `ctx.eps()`.
fn floor_ctx(ctx: &PrecisionCtx) -> PrecisionCtx {
    PrecisionCtx::new(ctx.digits(), ctx.digits() + 5, ctx.max_terms()).expect("valid context")
}

/// `f'(x)^2 - f(x) f''(x)` for the bare hypergeometric function.
pub fn laguerre_inequality(params: &HyperParams, x: &Float, ctx: &PrecisionCtx) -> Result<Float> {
    let d = derivative_table(params, x, 2, &floor_ctx(ctx))?;
    let prec = ctx.prec();
    finite(
        Float::with_val(prec, &d[1] * &d[1]) - Float::with_val(prec, &d[0] * &d[2]),
        "laguerre inequality",
    )
}

/// The extended operator
/// `L_n[f](x) = sum_{k=0}^{2n} (-1)^{k+n}/(2n)! C(2n,k) f^(k)(x) f^(2n-k)(x)`,
/// with all `2n + 1` derivative values computed once and reused. `n = 0`
/// gives `f(x)^2`; `n = 1` is the classical Laguerre inequality.
pub fn laguerre_ln(params: &HyperParams, x: &Float, n: u32, ctx: &PrecisionCtx) -> Result<Float> {
    let order = 2 * n;
    let derivs = derivative_table(params, x, order, &floor_ctx(ctx))?;
    let prec = ctx.prec();
    let fact_2n = Rational::from(Integer::factorial(order));
    let mut sum = Float::new(prec);
    for k in 0..=order {
        let mut w = Rational::from(Integer::from(order).binomial(k)) / &fact_2n;
        if (k + n) % 2 == 1 {
            w = -w;
        }
        let prod = (&derivs[k as usize] * &derivs[(order - k) as usize]).complete(prec);
        sum += prod * ctx.float_from_rational(&w);
    }
    finite(sum, "extended laguerre operator")
}

/// One upper-to-lower assignment with its nonnegative integer difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamMatch {
    pub upper_index: usize,
    pub lower_index: usize,
    pub shift: u64,
}

/// Membership verdict: `member` iff `p <= q`, all parameters positive and the
/// uppers match distinct lowers with nonnegative integer differences.
/// `unmatched_lower` lists the lower indices left over when `p < q`, flagging
/// that the matching convention only covers the uppers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpVerdict {
    pub member: bool,
    pub matching: Option<Vec<ParamMatch>>,
    pub unmatched_lower: Vec<usize>,
}

/// Decide membership by bipartite matching over exact rational differences.
pub fn lp_membership(params: &HyperParams) -> LpVerdict {
    let reject = LpVerdict { member: false, matching: None, unmatched_lower: Vec::new() };
    let p = params.p();
    let q = params.q();
    if p > q {
        return reject;
    }
    if params.upper().iter().any(|a| *a <= 0) || params.lower().iter().any(|b| *b <= 0) {
        return reject;
    }

    // adjacency: upper i can take lower j when a_i - b_j is an integer >= 0
    let edges: Vec<Vec<(usize, u64)>> = params
        .upper()
        .iter()
        .map(|a| {
            params
                .lower()
                .iter()
                .enumerate()
                .filter_map(|(j, b)| {
                    let d = Rational::from(a - b);
                    if d.is_integer() && d >= 0 {
                        d.numer().to_u64().map(|n| (j, n))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();

    // augmenting-path matching (vectors are tiny)
    let mut owner: Vec<Option<usize>> = vec![None; q];
    fn assign(
        i: usize,
        edges: &[Vec<(usize, u64)>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &(j, _) in &edges[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || assign(owner[j].unwrap(), edges, owner, seen) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut matched = 0;
    for i in 0..p {
        let mut seen = vec![false; q];
        if assign(i, &edges, &mut owner, &mut seen) {
            matched += 1;
        }
    }
    if matched < p {
        return reject;
    }

    let mut matching = vec![
        ParamMatch { upper_index: usize::MAX, lower_index: 0, shift: 0 };
        p
    ];
    let mut unmatched_lower = Vec::new();
    for (j, o) in owner.iter().enumerate() {
        match o {
            Some(i) => {
                let shift = edges[*i].iter().find(|(jj, _)| *jj == j).unwrap().1;
                matching[*i] = ParamMatch { upper_index: *i, lower_index: j, shift };
            }
            None => unmatched_lower.push(j),
        }
    }
    LpVerdict { member: true, matching: Some(matching), unmatched_lower }
}

/// Total zero count `sum n_k` implied by a membership matching (finite for
/// `p = q`).
pub fn matched_zero_count(verdict: &LpVerdict) -> Option<u64> {
    verdict.matching.as_ref().map(|m| m.iter().map(|e| e.shift).sum())
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

    #[test]
    fn laguerre_vanishes_for_exp() {
        let c = ctx();
        let v = laguerre_inequality(&params("", ""), &c.float_from(3.7), &c).unwrap();
        assert!(v.clone().abs() < c.float_from(1e-40), "got {v}");
    }

    #[test]
    fn laguerre_geometric_closed_form() {
        // f = (1-x)^{-1}: (f')^2 - f f'' = -(1-x)^{-4}, so -1 at x = 0
        let c = ctx();
        let v = laguerre_inequality(&params("1", ""), &c.float_zero(), &c).unwrap();
        assert!((v.to_f64() + 1.0).abs() < 1e-40);
    }

    #[test]
    fn laguerre_series_value() {
        // 1F1(1;2;.): derivatives at 0 are 1, 1/2, 1/3 -> 1/4 - 1/3 = -1/12
        let c = ctx();
        let v = laguerre_inequality(&params("1", "2"), &c.float_zero(), &c).unwrap();
        let want = c.float_from_rational(&"-1/12".parse().unwrap());
        assert!((v - want).abs() < c.float_from(1e-40));
    }

    #[test]
    fn ln_zero_is_square() {
        let c = ctx();
        let p = params("1", "2");
        let x = c.float_from(0.8);
        let f = crate::eval::eval_pfq(&p, &x, &c).unwrap();
        let l0 = laguerre_ln(&p, &x, 0, &c).unwrap();
        assert!((l0 - f.clone().square()).abs() < c.float_from(1e-40));
    }

    #[test]
    fn ln_vanishes_for_exp() {
        let c = ctx();
        for n in 1..=3 {
            let v = laguerre_ln(&params("", ""), &c.float_from(1.3), n, &c).unwrap();
            assert!(v.clone().abs() < c.float_from(1e-38), "n={n} got {v}");
        }
    }

    #[test]
    fn ln_one_matches_classical() {
        let c = ctx();
        let p = params("3", "1,2");
        let x = c.float_from(-2.5);
        let l1 = laguerre_ln(&p, &x, 1, &c).unwrap();
        let cl = laguerre_inequality(&p, &x, &c).unwrap();
        assert!((l1 - cl).abs() < c.float_from(1e-38));
    }

    #[test]
    fn ln_example_is_nonnegative() {
        // a=(3), b=(1,2): member (3 = 1 + 2), so L_1 >= 0; at 0 it is 5/4
        let c = ctx();
        let v = laguerre_ln(&params("3", "1,2"), &c.float_zero(), 1, &c).unwrap();
        let want = c.float_from_rational(&"5/4".parse().unwrap());
        assert!((v - want).abs() < c.float_from(1e-40));
    }

    #[test]
    fn membership_examples() {
        let v = lp_membership(&params("3", "1,2"));
        assert!(v.member);
        let m = v.matching.unwrap();
        assert_eq!(m.len(), 1);
        assert!(m[0].shift == 2 || m[0].shift == 1);
        assert_eq!(v.unmatched_lower.len(), 1);

        assert!(!lp_membership(&params("3/2", "1")).member);
        let vac = lp_membership(&params("", "1"));
        assert!(vac.member);
        assert_eq!(vac.unmatched_lower, vec![0]);

        // p = q perfect matching with shift sum 1
        let eq = lp_membership(&params("2", "1"));
        assert!(eq.member);
        assert_eq!(matched_zero_count(&eq), Some(1));

        // needs the permutation (3->2+1, 4->1+3), greedy-by-order would fail
        let perm = lp_membership(&params("3,4", "1,2"));
        assert!(perm.member);
        assert_eq!(matched_zero_count(&perm), Some(4));

        assert!(!lp_membership(&params("1,2", "3")).member);
        assert!(!lp_membership(&params("-1/2", "1/2")).member);
    }
}
