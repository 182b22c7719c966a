//! Argument parsing and the implementation of every subcommand.

use crate::config::{ScanConfig, ScanTarget};
use crate::scan::run_scan;
use crate::exit;
use clap::{Args, Parser, Subcommand, ValueEnum};
use pfq::conditions::{
    esp_chain_decr, esp_chain_incr, muntz_nonneg, theorem2_case, weak_supermajorize, MuntzVerdict,
    Theorem2Case, MUNTZ_DEFAULT_GRID,
};
use pfq::eval::{eval_pfq, eval_shifted};
use pfq::laguerre::{
    check_zeros_real_negative, find_zeros, laguerre_inequality, laguerre_ln, lp_membership,
    ZeroSearch,
};
use pfq::turanian::{
    delta_coeffs_exact, delta_coeffs_float, delta_coeffs_pairing, delta_f, verify_theorem1,
    verify_theorem3, ShiftSpec,
};
use pfq::{
    format_rational_list, parse_rational, parse_rational_list, Error, Float, HyperParams,
    PrecisionCtx, Rational, Result,
};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "pfq",
    version,
    about = "High-precision hypergeometric evaluation and inequality verification"
)]
pub struct Cli {
    /// Working decimal digits (default 50; env PFQ_DIGITS overrides).
    #[arg(long, global = true)]
    pub digits: Option<u32>,
    /// Target relative error, e.g. 1e-30.
    #[arg(long, global = true)]
    pub eps: Option<String>,
    /// Series order for coefficient commands (default 30).
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Seed override for scans.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Scan configuration file (key = value lines).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write output (scan report or command result) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Upper parameters, comma-separated rationals (may be empty).
    #[arg(long, default_value = "")]
    pub upper: String,
    /// Lower parameters, comma-separated rationals (may be empty).
    #[arg(long, default_value = "")]
    pub lower: String,
    /// Fixed upper block, excluded from parameter shifts.
    #[arg(long, default_value = "")]
    pub fixed_upper: String,
    /// Fixed lower block, excluded from parameter shifts.
    #[arg(long, default_value = "")]
    pub fixed_lower: String,
}

impl ParamArgs {
    fn build(&self) -> Result<HyperParams> {
        let a1 = parse_rational_list(&self.fixed_upper)?;
        let b1 = parse_rational_list(&self.fixed_lower)?;
        let a2 = parse_rational_list(&self.upper)?;
        let b2 = parse_rational_list(&self.lower)?;
        if a1.is_empty() && b1.is_empty() {
            HyperParams::new(a2, b2)
        } else {
            HyperParams::with_split(a1, a2, b1, b2)
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the hypergeometric series at x.
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        x: String,
    },
    /// Evaluate the gamma-weighted shifted function at (mu, x).
    FMu {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        x: String,
    },
    /// Power-sum difference nonnegativity verdict on [0,1].
    Muntz {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = MUNTZ_DEFAULT_GRID)]
        grid: usize,
    },
    /// Weak supermajorization test (prefix sums of sorted vectors).
    Majorize {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Exact symmetric-polynomial chain verdict.
    EspChain {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_parser = ["incr", "decr"])]
        direction: String,
    },
    /// Positivity-case predicate for the fixed block.
    Theorem2 {
        #[arg(long, value_parser = ["A", "B", "C", "D", "a", "b", "c", "d"])]
        case: String,
        #[arg(long, default_value = "")]
        a1: String,
        #[arg(long, default_value = "")]
        b1: String,
        #[arg(long)]
        x: String,
    },
    /// Turanian value at x; optionally its floating coefficients.
    Turanian {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        x: String,
        /// Also print floating Turanian coefficients up to this order.
        #[arg(long)]
        coeff_order: Option<usize>,
    },
    /// Exact scaled Turanian coefficients (integer alpha).
    DeltaCoeffs {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long, value_parser = ["exact", "pairing"], default_value = "exact")]
        route: String,
    },
    /// Verify the two-sided Turanian bound at x (exit 1 on violation).
    VerifyT1 {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        x: String,
    },
    /// Verify coefficient and value signs against the chain prediction
    /// (exit 1 on violation).
    VerifyT3 {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// lo:hi:count or comma-separated rationals.
        #[arg(long, default_value = "0:4:5")]
        x_grid: String,
    },
    /// Classical Laguerre inequality value (f')^2 - f f''.
    Laguerre {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        x: String,
    },
    /// Extended Laguerre operator value L_n[f](x).
    Ln {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        n: u32,
    },
    /// Integer-difference membership check with the matching.
    LpCheck {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Locate zeros of the entire function.
    Zeros {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8)]
        budget: usize,
        #[arg(long, default_value_t = 400)]
        degree_cap: usize,
    },
    /// Run a seeded parameter-space scan and write a report.
    Scan {
        /// conj1 | conj2 | conj3 | counterexample-small-shifts | theorem1 |
        /// theorem3 | corollary8
        target: String,
        #[arg(long)]
        samples: Option<usize>,
    },
}

fn parse_eps_pow10(s: &str) -> Result<u32> {
    let v: f64 = s.trim().parse().map_err(|e| Error::Config(format!("bad eps {s:?}: {e}")))?;
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::Config(format!("eps must lie in (0,1), got {s}")));
    }
    Ok((-v.log10()).round() as u32)
}

fn context(cli: &Cli) -> Result<PrecisionCtx> {
    let digits = cli
        .digits
        .or_else(|| std::env::var("PFQ_DIGITS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(50);
    // default eps two digits below the display precision, so every printed
    // digit is meaningful
    let eps_pow10 = match &cli.eps {
        Some(s) => parse_eps_pow10(s)?,
        None => digits + 2,
    };
    PrecisionCtx::new(digits, eps_pow10, 100_000)
}

/// Display a float to the context's significant digits.
fn fmt_float(v: &Float, ctx: &PrecisionCtx) -> String {
    v.to_string_radix(10, Some(ctx.digits() as usize))
}

/// Accept `p/q`, integers, or decimal strings for point arguments.
fn parse_point(s: &str, ctx: &PrecisionCtx) -> Result<Float> {
    if let Ok(r) = parse_rational(s) {
        return Ok(ctx.float_from_rational(&r));
    }
    ctx.parse_float(s)
}

fn shifts_from(mu: &str, alpha: &str, beta: &str) -> Result<ShiftSpec> {
    ShiftSpec::new(parse_rational(mu)?, parse_rational(alpha)?, parse_rational(beta)?)
}

fn x_grid_from(s: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let lo = parse_rational(parts[0])?;
        let hi = parse_rational(parts[1])?;
        let count: usize =
            parts[2].trim().parse().map_err(|e| Error::Config(format!("bad count: {e}")))?;
        if count < 2 {
            return Err(Error::Config("grid needs at least 2 points".into()));
        }
        let step = Rational::from(&hi - &lo) / Rational::from(count as u32 - 1);
        Ok((0..count).map(|i| lo.clone() + step.clone() * Rational::from(i as u32)).collect())
    } else {
        parse_rational_list(s)
    }
}

struct Output {
    format: OutputFormat,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text_lines: Vec<String>, value: Value) -> Result<()> {
        let body = match self.format {
            OutputFormat::Text => text_lines.join("\n") + "\n",
            OutputFormat::Json => serde_json::to_string_pretty(&value).unwrap() + "\n",
            OutputFormat::Csv => {
                return Err(Error::Config("csv output is only available for scan reports".into()))
            }
        };
        match &self.out {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}

/// Run the parsed command; the returned integer is the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let ctx = context(&cli)?;
    let order_default = cli.order.unwrap_or(30);
    let output = Output { format: cli.format, out: cli.out.clone() };

    match &cli.cmd {
        Command::Eval { params, x } => {
            let p = params.build()?;
            let xf = parse_point(x, &ctx)?;
            let v = eval_pfq(&p, &xf, &ctx)?;
            output.emit(vec![fmt_float(&v, &ctx)], json!({ "value": v.to_string() }))?;
            Ok(exit::OK)
        }
        Command::FMu { params, mu, x } => {
            let p = params.build()?;
            let muf = parse_point(mu, &ctx)?;
            let xf = parse_point(x, &ctx)?;
            let v = eval_shifted(&p, &muf, &xf, &ctx)?;
            output.emit(vec![fmt_float(&v, &ctx)], json!({ "value": v.to_string() }))?;
            Ok(exit::OK)
        }
        Command::Muntz { a, b, grid } => {
            let av = parse_rational_list(a)?;
            let bv = parse_rational_list(b)?;
            let verdict = muntz_nonneg(&av, &bv, *grid, &ctx)?;
            let (tag, detail) = match &verdict {
                MuntzVerdict::VerifiedNonneg => ("verified-nonneg".to_string(), Value::Null),
                MuntzVerdict::Violation { witness_t, witness_value } => (
                    "violation".to_string(),
                    json!({ "t": witness_t.to_string(), "value": witness_value.to_string() }),
                ),
                MuntzVerdict::Inconclusive { min_value } => (
                    "inconclusive".to_string(),
                    json!({ "min_value": min_value.to_string() }),
                ),
            };
            output.emit(
                vec![format!("{tag} {detail}")],
                json!({ "verdict": tag, "detail": detail }),
            )?;
            Ok(exit::OK)
        }
        Command::Majorize { a, b } => {
            let av = parse_rational_list(a)?;
            let bv = parse_rational_list(b)?;
            let v = weak_supermajorize(&av, &bv)?;
            output.emit(vec![v.to_string()], json!({ "weak_supermajorize": v }))?;
            Ok(exit::OK)
        }
        Command::EspChain { a, b, direction } => {
            let av = parse_rational_list(a)?;
            let bv = parse_rational_list(b)?;
            let verdict = if direction == "incr" {
                esp_chain_incr(&av, &bv)?
            } else {
                esp_chain_decr(&av, &bv)?
            };
            let ratios: Vec<String> = verdict.ratios.iter().map(|r| r.to_string()).collect();
            let line = if verdict.holds {
                format!("holds ratios=[{}]", ratios.join(", "))
            } else {
                format!(
                    "fails at index {} ratios=[{}]",
                    verdict.first_failing_index.unwrap(),
                    ratios.join(", ")
                )
            };
            output.emit(
                vec![line],
                json!({
                    "holds": verdict.holds,
                    "first_failing_index": verdict.first_failing_index,
                    "ratios": ratios,
                }),
            )?;
            Ok(exit::OK)
        }
        Command::Theorem2 { case, a1, b1, x } => {
            let c: Theorem2Case = case.parse()?;
            let a1v = parse_rational_list(a1)?;
            let b1v = parse_rational_list(b1)?;
            let xf = parse_point(x, &ctx)?;
            let v = theorem2_case(c, &a1v, &b1v, &xf, &ctx)?;
            output.emit(vec![v.to_string()], json!({ "case": case, "holds": v }))?;
            Ok(exit::OK)
        }
        Command::Turanian { params, mu, alpha, beta, x, coeff_order } => {
            let p = params.build()?;
            let s = shifts_from(mu, alpha, beta)?;
            let xf = parse_point(x, &ctx)?;
            let v = delta_f(&p, &s, &xf, &ctx)?;
            let mut lines = vec![fmt_float(&v, &ctx)];
            let mut body = json!({ "delta": v.to_string() });
            if let Some(m) = coeff_order {
                let fc = delta_coeffs_float(&p, &s, *m, &ctx)?;
                let coeffs: Vec<String> = fc.coeffs.iter().map(|c| c.to_string()).collect();
                for (i, c) in fc.coeffs.iter().enumerate() {
                    lines.push(format!("delta_{i} = {}", fmt_float(c, &ctx)));
                }
                body["coeffs"] = json!(coeffs);
            }
            output.emit(lines, body)?;
            Ok(exit::OK)
        }
        Command::DeltaCoeffs { params, mu, alpha, beta, route } => {
            let p = params.build()?;
            let s = shifts_from(mu, alpha, beta)?;
            let (coeffs, scaling) = if route == "pairing" {
                if s.integer_alpha() != Some(1) {
                    return Err(Error::Config("the pairing route requires alpha = 1".into()));
                }
                let series = delta_coeffs_pairing(&p, s.mu(), s.beta(), order_default)?;
                (series, None)
            } else {
                let t = delta_coeffs_exact(&p, &s, order_default)?;
                (t.coeffs, Some(t.scaling.to_string()))
            };
            let strs: Vec<String> = coeffs.coeffs().iter().map(|c| c.to_string()).collect();
            let mut lines: Vec<String> =
                strs.iter().enumerate().map(|(m, c)| format!("delta'_{m} = {c}")).collect();
            if let Some(sc) = &scaling {
                lines.push(format!("scaling divided out: {sc}"));
            }
            output.emit(lines, json!({ "coeffs": strs, "scaling": scaling }))?;
            Ok(exit::OK)
        }
        Command::VerifyT1 { params, mu, alpha, beta, x } => {
            let p = params.build()?;
            let s = shifts_from(mu, alpha, beta)?;
            let xf = parse_point(x, &ctx)?;
            let v = verify_theorem1(&p, &s, &xf, &ctx)?;
            let line = format!(
                "lower {} upper {} (-delta = {}, f(mu)^2 = {}, ratio = {}, case {})",
                v.lower_holds,
                v.upper_holds.map_or("n/a".into(), |b| b.to_string()),
                v.neg_delta,
                v.f_mu_squared,
                v.observed_ratio,
                v.case_used,
            );
            output.emit(
                vec![line],
                json!({
                    "holds": v.holds,
                    "lower_holds": v.lower_holds,
                    "upper_holds": v.upper_holds,
                    "neg_delta": v.neg_delta.to_string(),
                    "f_mu_squared": v.f_mu_squared.to_string(),
                    "observed_ratio": v.observed_ratio.to_string(),
                    "case_used": v.case_used.to_string(),
                    "muntz_subset": format_rational_list(&v.muntz_subset),
                }),
            )?;
            Ok(if v.holds { exit::OK } else { exit::VIOLATION })
        }
        Command::VerifyT3 { params, mu, alpha, beta, x_grid } => {
            let p = params.build()?;
            let s = shifts_from(mu, alpha, beta)?;
            let grid = x_grid_from(x_grid)?;
            let v = verify_theorem3(&p, &s, order_default, &grid, &ctx)?;
            let line = format!(
                "predicted {} coeffs_ok {} grid_ok {}",
                v.predicted, v.coeffs_ok, v.grid_ok
            );
            output.emit(
                vec![line],
                json!({
                    "holds": v.holds,
                    "predicted": v.predicted.to_string(),
                    "coeffs_checked": v.coeffs_checked,
                    "coeffs_ok": v.coeffs_ok,
                    "first_coeff_violation": v
                        .first_coeff_violation
                        .map(|(m, c)| json!({"order": m, "value": c.to_string()})),
                    "grid_ok": v.grid_ok,
                    "first_grid_violation": v
                        .first_grid_violation
                        .map(|(x, d)| json!({"x": x.to_string(), "value": d.to_string()})),
                }),
            )?;
            Ok(if v.holds { exit::OK } else { exit::VIOLATION })
        }
        Command::Laguerre { params, x } => {
            let p = params.build()?;
            let xf = parse_point(x, &ctx)?;
            let v = laguerre_inequality(&p, &xf, &ctx)?;
            output.emit(vec![fmt_float(&v, &ctx)], json!({ "value": v.to_string() }))?;
            Ok(exit::OK)
        }
        Command::Ln { params, x, n } => {
            let p = params.build()?;
            let xf = parse_point(x, &ctx)?;
            let v = laguerre_ln(&p, &xf, *n, &ctx)?;
            output.emit(vec![fmt_float(&v, &ctx)], json!({ "n": n, "value": v.to_string() }))?;
            Ok(exit::OK)
        }
        Command::LpCheck { params } => {
            let p = params.build()?;
            let v = lp_membership(&p);
            let matching: Vec<Value> = v
                .matching
                .iter()
                .flatten()
                .map(|m| {
                    json!({
                        "upper_index": m.upper_index,
                        "lower_index": m.lower_index,
                        "shift": m.shift,
                    })
                })
                .collect();
            let line = if v.member {
                format!("member (matching {matching:?})")
            } else {
                "not a member".to_string()
            };
            output.emit(
                vec![line],
                json!({
                    "member": v.member,
                    "matching": matching,
                    "unmatched_lower": v.unmatched_lower,
                }),
            )?;
            Ok(exit::OK)
        }
        Command::Zeros { params, budget, degree_cap } => {
            let p = params.build()?;
            let zs = find_zeros(
                &p,
                &ctx,
                &ZeroSearch { budget: *budget, degree_cap: *degree_cap, ..Default::default() },
            )?;
            let tol = ctx.float_from(1e-20);
            let rn = check_zeros_real_negative(&zs, &tol, &ctx);
            let mut lines = Vec::new();
            let mut zeros = Vec::new();
            for (z, r) in zs.zeros.iter().zip(zs.residuals.iter()) {
                lines.push(format!(
                    "{} + {} i   (residual {})",
                    fmt_float(z.real(), &ctx),
                    fmt_float(z.imag(), &ctx),
                    fmt_float(r, &ctx)
                ));
                zeros.push(json!({
                    "re": z.real().to_string(),
                    "im": z.imag().to_string(),
                    "residual": r.to_string(),
                }));
            }
            lines.push(format!(
                "degree {} all_real_negative {}",
                zs.truncation_degree, rn.all_real_negative
            ));
            output.emit(
                lines,
                json!({
                    "zeros": zeros,
                    "truncation_degree": zs.truncation_degree,
                    "rejected": zs.rejected.len(),
                    "all_real_negative": rn.all_real_negative,
                }),
            )?;
            Ok(exit::OK)
        }
        Command::Scan { target, samples } => {
            let t: ScanTarget = target.parse()?;
            let mut cfg = match &cli.config {
                Some(path) => ScanConfig::from_file(path, Some(t))?,
                None => ScanConfig::default_for(t),
            };
            if let Some(s) = samples {
                cfg.samples = *s;
            }
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            if let Some(d) = cli.digits {
                cfg.digits = d;
            }
            if let Some(e) = &cli.eps {
                cfg.eps_pow10 = parse_eps_pow10(e)?;
            }
            if let Some(o) = cli.order {
                cfg.order = o;
            }
            cfg.validate()?;

            let report = run_scan(&cfg)?;
            let csv = cli.format == OutputFormat::Csv;
            let path = report.write(&cfg, cli.out.as_deref(), csv, std::path::Path::new("reports"))?;
            println!(
                "{}: {} samples, {} ok, {} violations, {} errors -> {} ({})",
                cfg.target,
                report.summary.samples,
                report.summary.ok,
                report.summary.violations,
                report.summary.errors,
                path.display(),
                report.summary.note,
            );
            if t.is_theorem_verification() && report.summary.violations > 0 {
                return Ok(exit::VIOLATION);
            }
            Ok(exit::OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_strings_parse() {
        assert_eq!(parse_eps_pow10("1e-30").unwrap(), 30);
        assert_eq!(parse_eps_pow10("0.001").unwrap(), 3);
        assert!(parse_eps_pow10("2").is_err());
        assert!(parse_eps_pow10("nope").is_err());
    }

    #[test]
    fn grids_parse_both_forms() {
        assert_eq!(x_grid_from("0:2:3").unwrap().len(), 3);
        assert_eq!(x_grid_from("1/2,1,2").unwrap().len(), 3);
        assert!(x_grid_from("0:2:1").is_err());
    }
}
