//! Scan configuration: targets, per-slot rational ranges, grids and seeds,
//! with a flat `key = value` file format and per-target defaults.

use pfq::{parse_rational, parse_rational_list, Error, Rational, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanTarget {
    Conj1,
    Conj2,
    Conj3,
    CounterexampleSmallShifts,
    Theorem1,
    Theorem3,
    Corollary8,
}

impl ScanTarget {
    pub fn is_theorem_verification(self) -> bool {
        matches!(self, Self::Theorem1 | Self::Theorem3 | Self::Corollary8)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Conj1 => "conj1",
            Self::Conj2 => "conj2",
            Self::Conj3 => "conj3",
            Self::CounterexampleSmallShifts => "counterexample_small_shifts",
            Self::Theorem1 => "theorem1",
            Self::Theorem3 => "theorem3",
            Self::Corollary8 => "corollary8",
        }
    }
}

impl std::str::FromStr for ScanTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "conj1" => Ok(Self::Conj1),
            "conj2" => Ok(Self::Conj2),
            "conj3" => Ok(Self::Conj3),
            "counterexample_small_shifts" => Ok(Self::CounterexampleSmallShifts),
            "theorem1" => Ok(Self::Theorem1),
            "theorem3" => Ok(Self::Theorem3),
            "corollary8" => Ok(Self::Corollary8),
            other => Err(Error::Config(format!("unknown scan target {other:?}"))),
        }
    }
}

impl fmt::Display for ScanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub type Range = (Rational, Rational);

/// Everything a scan run depends on. Serialized verbatim into every report.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub target: ScanTarget,
    pub samples: usize,
    pub seed: u64,
    pub digits: u32,
    pub eps_pow10: u32,
    pub order: usize,
    pub denom_cap: u32,
    pub upper_slots: Vec<Range>,
    pub lower_slots: Vec<Range>,
    pub fixed_upper_slots: Vec<Range>,
    pub fixed_lower_slots: Vec<Range>,
    pub mu_range: Range,
    pub alpha_range: Range,
    pub beta_range: Range,
    pub x_grid: Vec<Rational>,
    /// Explicit parameter families (upper, lower); used by the small-shift
    /// counterexample target alongside seeded ones.
    pub families: Vec<(Vec<Rational>, Vec<Rational>)>,
    /// Micro-grid step for the small-shift scan.
    pub shift_step: Rational,
    /// Zero-search budget per sample.
    pub budget: usize,
    /// Largest operator index for the extended Laguerre target.
    pub n_max: u32,
}

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn grid(lo: &str, hi: &str, count: usize) -> Vec<Rational> {
    let lo = r(lo);
    let hi = r(hi);
    let step = Rational::from(&hi - &lo) / Rational::from(count as u32 - 1);
    (0..count).map(|i| lo.clone() + step.clone() * Rational::from(i as u32)).collect()
}

impl ScanConfig {
    /// Documented defaults per target.
    pub fn default_for(target: ScanTarget) -> Self {
        let base = Self {
            target,
            samples: 48,
            seed: 20260809,
            digits: 50,
            eps_pow10: 30,
            order: 30,
            denom_cap: 64,
            upper_slots: vec![(r("1/8"), r("4"))],
            lower_slots: vec![(r("1/8"), r("4"))],
            fixed_upper_slots: vec![],
            fixed_lower_slots: vec![],
            mu_range: (r("0"), r("2")),
            alpha_range: (r("0"), r("2")),
            beta_range: (r("0"), r("2")),
            x_grid: grid("0", "4", 5),
            families: vec![],
            shift_step: r("1/10"),
            budget: 6,
            n_max: 4,
        };
        match target {
            ScanTarget::Conj1 => Self {
                mu_range: (r("1"), r("3")),
                upper_slots: vec![(r("1/8"), r("4")), (r("1/8"), r("4"))],
                lower_slots: vec![(r("1/8"), r("4")), (r("1/8"), r("4"))],
                ..base
            },
            ScanTarget::Conj2 => Self {
                samples: 32,
                mu_range: (r("1"), r("3")),
                fixed_upper_slots: vec![(r("1/8"), r("4"))],
                fixed_lower_slots: vec![(r("1/8"), r("4"))],
                ..base
            },
            ScanTarget::Conj3 => Self {
                samples: 24,
                // lower entries sampled directly; uppers are lower + gap
                lower_slots: vec![(r("1/4"), r("3")), (r("1/4"), r("3"))],
                upper_slots: vec![(r("1/8"), r("3"))],
                ..base
            },
            ScanTarget::CounterexampleSmallShifts => Self {
                samples: 2, // seeded families drawn on top of the named one
                order: 12,
                mu_range: (r("0"), r("9/10")),
                alpha_range: (r("1/10"), r("9/10")),
                beta_range: (r("1/10"), r("9/10")),
                upper_slots: vec![(r("3"), r("6")), (r("3"), r("6")), (r("3"), r("6"))],
                lower_slots: vec![(r("1/8"), r("1/2")), (r("1/8"), r("1/2")), (r("1/8"), r("1/2"))],
                families: vec![(vec![r("1")], vec![r("2")])],
                x_grid: vec![
                    r("1/100"),
                    r("1/20"),
                    r("1/10"),
                    r("1/4"),
                    r("1/2"),
                    r("1"),
                    r("2"),
                    r("5"),
                ],
                ..base
            },
            ScanTarget::Theorem1 => Self {
                samples: 32,
                upper_slots: vec![(r("1/4"), r("3")), (r("1/4"), r("3"))],
                lower_slots: vec![(r("0"), r("2")), (r("0"), r("2"))],
                x_grid: grid("-5", "9/10", 8),
                ..base
            },
            ScanTarget::Theorem3 => Self {
                samples: 32,
                mu_range: (r("0"), r("2")),
                alpha_range: (r("1"), r("3")),
                beta_range: (r("0"), r("3")),
                x_grid: grid("0", "4", 5),
                ..base
            },
            ScanTarget::Corollary8 => Self {
                samples: 20,
                lower_slots: vec![(r("1/4"), r("4")), (r("1/4"), r("4"))],
                x_grid: grid("-20", "20", 81),
                ..base
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        // the small-shift target counts seeded families on top of explicit ones
        let effective = self.samples
            + if self.target == ScanTarget::CounterexampleSmallShifts {
                self.families.len()
            } else {
                0
            };
        if effective < 1 {
            return Err(Error::Config("samples must be >= 1".into()));
        }
        let ranges = self
            .upper_slots
            .iter()
            .chain(&self.lower_slots)
            .chain(&self.fixed_upper_slots)
            .chain(&self.fixed_lower_slots)
            .chain([&self.mu_range, &self.alpha_range, &self.beta_range]);
        for (lo, hi) in ranges {
            if lo > hi {
                return Err(Error::Config(format!("empty range {lo}:{hi}")));
            }
        }
        match self.target {
            ScanTarget::Conj1 | ScanTarget::Conj2 => {
                if self.mu_range.0 < 1 {
                    return Err(Error::Config(
                        "this target requires mu >= 1 (set mu_range accordingly)".into(),
                    ));
                }
            }
            ScanTarget::CounterexampleSmallShifts => {
                let one = Rational::from(1);
                if self.mu_range.1 >= one || self.alpha_range.1 >= one || self.beta_range.1 >= one {
                    return Err(Error::Config(
                        "small-shift scan requires mu, alpha, beta ranges inside [0, 1)".into(),
                    ));
                }
                if self.alpha_range.0 <= 0 {
                    return Err(Error::Config("alpha range must exclude 0".into()));
                }
            }
            ScanTarget::Conj3 => {
                if self.lower_slots.len() <= self.upper_slots.len() {
                    return Err(Error::Config(
                        "conj3 needs p < q: fewer upper slots than lower slots".into(),
                    ));
                }
                if self.budget < 1 {
                    return Err(Error::Config("budget must be >= 1".into()));
                }
            }
            _ => {}
        }
        if self.x_grid.is_empty() {
            return Err(Error::Config("x_grid must be nonempty".into()));
        }
        Ok(())
    }

    /// Flat `key = value` echo used for reports and hashing; BTreeMap keeps
    /// key order canonical.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let fmt_slots = |v: &[Range]| {
            v.iter().map(|(lo, hi)| format!("{lo}:{hi}")).collect::<Vec<_>>().join(", ")
        };
        let mut m = BTreeMap::new();
        m.insert("target".into(), self.target.name().into());
        m.insert("samples".into(), self.samples.to_string());
        m.insert("seed".into(), self.seed.to_string());
        m.insert("digits".into(), self.digits.to_string());
        m.insert("eps".into(), format!("1e-{}", self.eps_pow10));
        m.insert("order".into(), self.order.to_string());
        m.insert("denom_cap".into(), self.denom_cap.to_string());
        m.insert("upper_slots".into(), fmt_slots(&self.upper_slots));
        m.insert("lower_slots".into(), fmt_slots(&self.lower_slots));
        m.insert("fixed_upper_slots".into(), fmt_slots(&self.fixed_upper_slots));
        m.insert("fixed_lower_slots".into(), fmt_slots(&self.fixed_lower_slots));
        m.insert("mu_range".into(), format!("{}:{}", self.mu_range.0, self.mu_range.1));
        m.insert("alpha_range".into(), format!("{}:{}", self.alpha_range.0, self.alpha_range.1));
        m.insert("beta_range".into(), format!("{}:{}", self.beta_range.0, self.beta_range.1));
        m.insert(
            "x_grid".into(),
            self.x_grid.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        );
        m.insert(
            "families".into(),
            self.families
                .iter()
                .map(|(u, l)| {
                    format!(
                        "{} | {}",
                        pfq::format_rational_list(u),
                        pfq::format_rational_list(l)
                    )
                })
                .collect::<Vec<_>>()
                .join("; "),
        );
        m.insert("shift_step".into(), self.shift_step.to_string());
        m.insert("budget".into(), self.budget.to_string());
        m.insert("n_max".into(), self.n_max.to_string());
        m
    }

    /// FNV-1a over the canonical echo; stable across runs and platforms.
    pub fn hash(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        for (k, v) in self.echo() {
            for byte in k.bytes().chain([b'=']).chain(v.bytes()).chain([b'\n']) {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        format!("{h:016x}")
    }

    /// Apply one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let parse_usize = |v: &str| {
            v.trim().parse::<usize>().map_err(|e| Error::Config(format!("bad {key}: {e}")))
        };
        match key {
            "target" => self.target = value.parse()?,
            "samples" => self.samples = parse_usize(value)?,
            "seed" => {
                self.seed = value
                    .trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Config(format!("bad seed: {e}")))?
            }
            "digits" => self.digits = parse_usize(value)? as u32,
            "eps_pow10" => self.eps_pow10 = parse_usize(value)? as u32,
            "order" => self.order = parse_usize(value)?,
            "denom_cap" => self.denom_cap = parse_usize(value)? as u32,
            "upper_slots" => self.upper_slots = parse_slots(value)?,
            "lower_slots" => self.lower_slots = parse_slots(value)?,
            "fixed_upper_slots" => self.fixed_upper_slots = parse_slots(value)?,
            "fixed_lower_slots" => self.fixed_lower_slots = parse_slots(value)?,
            "mu_range" => self.mu_range = parse_range(value)?,
            "alpha_range" => self.alpha_range = parse_range(value)?,
            "beta_range" => self.beta_range = parse_range(value)?,
            "x_grid" => self.x_grid = parse_grid(value)?,
            "family" => {
                let (u, l) = value
                    .split_once('|')
                    .ok_or_else(|| Error::Config("family needs 'upper | lower'".into()))?;
                self.families.push((parse_rational_list(u)?, parse_rational_list(l)?));
            }
            "shift_step" => self.shift_step = parse_rational(value)?,
            "budget" => self.budget = parse_usize(value)?,
            "n_max" => self.n_max = parse_usize(value)? as u32,
            other => return Err(Error::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Parse a config file on top of the target's defaults. The file must
    /// declare `target` first (or match `expect`).
    pub fn from_file(path: &Path, expect: Option<ScanTarget>) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut assignments = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected 'key = value'", lineno + 1))
            })?;
            assignments.push((k.trim().to_string(), v.trim().to_string()));
        }
        let target = assignments
            .iter()
            .find(|(k, _)| k == "target")
            .map(|(_, v)| v.parse())
            .transpose()?
            .or(expect)
            .ok_or_else(|| Error::Config("config must set 'target'".into()))?;
        if let Some(e) = expect {
            if e != target {
                return Err(Error::Config(format!(
                    "config target {target} does not match requested {e}"
                )));
            }
        }
        let mut cfg = Self::default_for(target);
        cfg.families.clear(); // explicit families replace the default list
        let mut saw_family = false;
        for (k, v) in &assignments {
            if k == "family" {
                saw_family = true;
            }
            cfg.set(k, v)?;
        }
        if !saw_family {
            cfg.families = Self::default_for(target).families;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn parse_range(s: &str) -> Result<Range> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::Config(format!("range {s:?} needs 'lo:hi'")))?;
    Ok((parse_rational(lo)?, parse_rational(hi)?))
}

fn parse_slots(s: &str) -> Result<Vec<Range>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(vec![]);
    }
    t.split(',').map(parse_range).collect()
}

/// Either `lo:hi:count` or an explicit comma list of rationals.
fn parse_grid(s: &str) -> Result<Vec<Rational>> {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        for t in [
            ScanTarget::Conj1,
            ScanTarget::Conj2,
            ScanTarget::Conj3,
            ScanTarget::CounterexampleSmallShifts,
            ScanTarget::Theorem1,
            ScanTarget::Theorem3,
            ScanTarget::Corollary8,
        ] {
            let cfg = ScanConfig::default_for(t);
            cfg.validate().unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = ScanConfig::default_for(ScanTarget::Conj1);
        let b = ScanConfig::default_for(ScanTarget::Conj1);
        assert_eq!(a.hash(), b.hash());
        let mut c = ScanConfig::default_for(ScanTarget::Conj1);
        c.seed += 1;
        assert_ne!(a.hash(), c.hash());
    }

    #[test]
    fn small_shift_ranges_enforced() {
        let mut cfg = ScanConfig::default_for(ScanTarget::CounterexampleSmallShifts);
        cfg.alpha_range = (r("0"), r("2"));
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn file_roundtrip() {
        let dir = std::env::temp_dir().join("pfq-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("scan.conf");
        std::fs::write(
            &path,
            "# comment\ntarget = conj1\nsamples = 7\nseed = 99\nmu_range = 1:5/2\nx_grid = 0:2:3\n",
        )
        .unwrap();
        let cfg = ScanConfig::from_file(&path, None).unwrap();
        assert_eq!(cfg.samples, 7);
        assert_eq!(cfg.seed, 99);
        assert_eq!(cfg.x_grid, vec![r("0"), r("1"), r("2")]);
        assert!(ScanConfig::from_file(&path, Some(ScanTarget::Conj2)).is_err());
    }
}
