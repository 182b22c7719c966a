//! Structured scan reports: one JSON document per run, deterministic except
//! for the wall-clock field, with CSV flattening of the verdicts.

use crate::config::ScanConfig;
use pfq::{Error, Result};
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    pub input: Value,
    /// "ok" | "violation" | "error"
    pub verdict: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Summary {
    pub samples: usize,
    pub ok: usize,
    pub violations: usize,
    pub errors: usize,
    pub witnesses: Vec<Value>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub config: BTreeMap<String, String>,
    pub results: Vec<SampleRecord>,
    pub summary: Summary,
    pub wall_clock_secs: f64,
}

impl ScanReport {
    pub fn new(cfg: &ScanConfig, results: Vec<SampleRecord>, note: String) -> Self {
        let mut summary = Summary { samples: results.len(), note, ..Default::default() };
        for r in &results {
            match r.verdict.as_str() {
                "ok" => summary.ok += 1,
                "violation" => {
                    summary.violations += 1;
                    summary.witnesses.push(r.input.clone());
                }
                _ => summary.errors += 1,
            }
        }
        Self {
            schema: SCHEMA_VERSION,
            tool: "pfq".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            config: cfg.echo(),
            results,
            summary,
            wall_clock_secs: 0.0,
        }
    }

    /// The deterministic portion (everything except wall clock), serialized.
    pub fn verdict_bytes(&self) -> Vec<u8> {
        let body = serde_json::json!({
            "config": self.config,
            "results": self.results,
            "summary": self.summary,
        });
        serde_json::to_vec_pretty(&body).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flatten verdicts only: one row per sample.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,verdict,input,detail\n");
        for r in &self.results {
            let esc = |v: &Value| {
                let s = serde_json::to_string(v).unwrap_or_default();
                format!("\"{}\"", s.replace('"', "\"\""))
            };
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.index,
                r.verdict,
                esc(&r.input),
                esc(&r.detail)
            ));
        }
        out
    }

    /// Write to `out` when given, otherwise into the append-only results
    /// directory keyed by the config hash. Returns the path written.
    pub fn write(
        &self,
        cfg: &ScanConfig,
        out: Option<&Path>,
        csv: bool,
        results_dir: &Path,
    ) -> Result<PathBuf> {
        let body = if csv { self.to_csv() } else { self.to_json() };
        let path = match out {
            Some(p) => p.to_path_buf(),
            None => {
                std::fs::create_dir_all(results_dir)
                    .map_err(|e| Error::Config(format!("cannot create results dir: {e}")))?;
                let ext = if csv { "csv" } else { "json" };
                let stem = format!("{}-{}", cfg.target.name(), cfg.hash());
                let mut k = 0;
                loop {
                    let candidate = if k == 0 {
                        results_dir.join(format!("{stem}.{ext}"))
                    } else {
                        results_dir.join(format!("{stem}.{k}.{ext}"))
                    };
                    if !candidate.exists() {
                        break candidate;
                    }
                    k += 1;
                }
            }
        };
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)
                    .map_err(|e| Error::Config(format!("cannot create {}: {e}", parent.display())))?;
            }
        }
        let mut f = std::fs::File::create(&path)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
        f.write_all(body.as_bytes())
            .map_err(|e| Error::Config(format!("write failed: {e}")))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ScanTarget;

    #[test]
    fn verdict_bytes_exclude_wall_clock() {
        let cfg = ScanConfig::default_for(ScanTarget::Conj1);
        let rec = SampleRecord {
            index: 0,
            input: serde_json::json!({"x": "1/2"}),
            verdict: "ok".into(),
            detail: Value::Null,
        };
        let mut a = ScanReport::new(&cfg, vec![rec.clone()], String::new());
        let mut b = ScanReport::new(&cfg, vec![rec], String::new());
        a.wall_clock_secs = 1.0;
        b.wall_clock_secs = 2.0;
        assert_eq!(a.verdict_bytes(), b.verdict_bytes());
        assert_ne!(a.to_json(), b.to_json());
    }

    #[test]
    fn csv_has_one_row_per_sample() {
        let cfg = ScanConfig::default_for(ScanTarget::Conj3);
        let recs = (0..3)
            .map(|i| SampleRecord {
                index: i,
                input: serde_json::json!({"i": i}),
                verdict: "ok".into(),
                detail: Value::Null,
            })
            .collect();
        let rep = ScanReport::new(&cfg, recs, String::new());
        assert_eq!(rep.to_csv().lines().count(), 4);
    }
}
